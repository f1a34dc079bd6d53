"""Command-line front end: one subcommand per library operation.

All structured output is single-line JSON on stdout (DOT and graph6 are
plain text); diagnostics go to stderr.  Exit codes: 0 success, 2 not a
class member, 3 budget exhausted, 4 input error, 5 internal contradiction.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import extend as extend_mod
from . import families, formats, reduction, smallk
from .errors import EXIT_OK, GraphInputError, exit_code_for
from .membership import classify
from .oracle import DEFAULT_BUDGET, hamiltonian_exact, isomorphic


class _Parser(argparse.ArgumentParser):
    # argparse's default error path exits with status 2, which collides
    # with the not-a-member code; route it through the input-error path.
    def error(self, message):
        raise GraphInputError(message)


def _emit(payload) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise GraphInputError(f"cannot read {path}: {exc}")


def _read_graph(path: str):
    return formats.parse_auto(_read_text(path))


def _read_cycle(args) -> tuple[int, ...]:
    text = _read_text(args.cycle_file) if args.cycle_file else args.cycle
    if text is None:
        raise GraphInputError("provide a cycle via --cycle or --cycle-file")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphInputError(f"cycle is not valid JSON: {exc.msg}")
    if isinstance(data, dict) and "cycle" in data:
        data = data["cycle"]
    if not isinstance(data, list) or not all(isinstance(x, int) for x in data):
        raise GraphInputError("cycle JSON must be a list of vertex ids")
    return tuple(data)


def _emit_graph(g, fmt: str) -> None:
    if fmt == "graph6":
        sys.stdout.write(formats.emit_graph6(g) + "\n")
    elif fmt == "json":
        sys.stdout.write(formats.emit_edge_json(g) + "\n")
    elif fmt == "dot":
        sys.stdout.write(formats.emit_dot(g))
    else:
        raise GraphInputError(f"unknown format {fmt!r}")


def build_parser() -> _Parser:
    parser = _Parser(prog="ballham", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, graph_arg=True):
        p = sub.add_parser(name, help=help_text)
        if graph_arg:
            p.add_argument("graph", nargs="?", default="-",
                           help="graph file (graph6 or edge JSON); - for stdin")
        return p

    add("classify", "membership report for the degree-bounded class")

    p = add("hamilton", "Hamilton certificate for members of degree 2..5")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    p = add("extend", "one cycle-extension step in a locally connected member")
    p.add_argument("--cycle", help="cycle as a JSON list")
    p.add_argument("--cycle-file", help="file holding the cycle JSON")
    p.add_argument("--allow-small-k", action="store_true",
                   help="accept members of degree 3..5 as well")

    p = add("hamiltonize", "grow a Hamilton cycle from a triangle at vertex 0")
    p.add_argument("--allow-small-k", action="store_true")

    p = add("generate", "construct a named graph family", graph_arg=False)
    p.add_argument("family", help=", ".join(sorted(families.FAMILY_BUILDERS)))
    p.add_argument("params", nargs="*", help="family parameters")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", default="graph6",
                   choices=("graph6", "json", "dot"))
    p.add_argument("--layout", help="write the id-layout sidecar JSON here")

    add("reduce", "reduce a cubic bipartite graph into a degree-6 member")

    for name in ("map-forward", "map-backward"):
        p = sub.add_parser(name, help="map Hamilton cycles across a reduction")
        p.add_argument("--map", required=True, dest="map_path",
                       help="gadget map JSON file; - for stdin")
        p.add_argument("--cycle", help="cycle as a JSON list")
        p.add_argument("--cycle-file", help="file holding the cycle JSON")

    p = add("oracle", "exact Hamiltonicity decision with certificate")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    p = add("validate", "check a family's constructed properties",
            graph_arg=False)
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=10**6)

    p = sub.add_parser("iso", help="isomorphism test with witness mapping")
    p.add_argument("graph_a")
    p.add_argument("graph_b")
    return parser


def _run(args) -> None:
    cmd = args.command
    if cmd == "classify":
        _emit(classify(_read_graph(args.graph)).to_json_dict())
    elif cmd == "hamilton":
        cert = smallk.hamilton_small_k(_read_graph(args.graph),
                                       budget=args.budget)
        _emit(cert.to_json_dict())
    elif cmd == "extend":
        step = extend_mod.extend_cycle(_read_graph(args.graph),
                                       _read_cycle(args),
                                       allow_small_k=args.allow_small_k)
        _emit(step.to_json_dict())
    elif cmd == "hamiltonize":
        cycle, steps = extend_mod.hamiltonize(
            _read_graph(args.graph), allow_small_k=args.allow_small_k)
        _emit({"cycle": list(cycle),
               "steps": [s.to_json_dict() for s in steps]})
    elif cmd == "generate":
        fam = families.build_family(args.family, args.params, seed=args.seed)
        if args.layout:
            with open(args.layout, "w", encoding="utf-8") as handle:
                json.dump(fam.to_json_dict(), handle, sort_keys=True)
                handle.write("\n")
        _emit_graph(fam.graph, args.format)
    elif cmd == "reduce":
        gprime, gmap = reduction.reduce_graph(_read_graph(args.graph))
        _emit({"graph6": formats.emit_graph6(gprime),
               "map": gmap.to_json_dict()})
    elif cmd in ("map-forward", "map-backward"):
        payload = json.loads(_read_text(args.map_path))
        if isinstance(payload, dict) and "map" in payload:
            payload = payload["map"]
        gmap = reduction.GadgetMap.from_json_dict(payload)
        cycle = _read_cycle(args)
        if cmd == "map-forward":
            _emit({"cycle": list(reduction.forward_cycle(cycle, gmap))})
        else:
            _emit({"cycle": list(reduction.backward_cycle(cycle, gmap))})
    elif cmd == "oracle":
        result = hamiltonian_exact(_read_graph(args.graph), budget=args.budget)
        _emit(result.to_json_dict())
    elif cmd == "validate":
        fam = families.build_family(args.family, args.params, seed=args.seed)
        report = families.validate_built_family(fam, budget=args.budget)
        _emit(report.to_json_dict())
    elif cmd == "iso":
        ga = _read_graph(args.graph_a)
        gb = _read_graph(args.graph_b)
        ok, mapping = isomorphic(ga, gb)
        _emit({"isomorphic": ok,
               "mapping": list(mapping) if mapping is not None else None})
    else:  # pragma: no cover - argparse enforces the choices
        raise GraphInputError(f"unknown command {cmd!r}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _run(args)
        return EXIT_OK
    except Exception as exc:  # noqa: BLE001 - single translation point
        try:
            code = exit_code_for(exc)
        except Exception:
            raise exc
        print(f"error: {exc}", file=sys.stderr)
        return code


if __name__ == "__main__":
    sys.exit(main())
