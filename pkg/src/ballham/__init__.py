"""Hamiltonicity toolkit for regular graphs with bounded second neighborhoods.

Recognition of the class (k-regular, at most k vertices at distance two
from anywhere), constructive Hamilton cycles for members of degree up to
five, cycle extension for locally connected members, generators for the
structured families, a gadget reduction witnessing NP-completeness at
degree six, and an exact search oracle for desk-scale ground truth.
"""

from .errors import (
    BudgetExceededError,
    GraphInputError,
    InternalContradictionError,
    NotMemberError,
    ParseError,
    PreconditionError,
)
from .extend import ExtensionStep, extend_cycle, find_triangle, hamiltonize, triangle_attachment
from .families import (
    Family,
    QuotientCertificate,
    build_family,
    check_quotient_certificate,
    gen_bipartite_minus_matching,
    gen_counterexample,
    gen_D,
    gen_F4,
    gen_G,
    gen_H,
    gen_kk_rewire,
    gen_multipartite,
    gen_Q,
    gen_T,
    random_regular,
    validate_family,
)
from .formats import (
    emit_dot,
    emit_edge_json,
    emit_graph6,
    parse_auto,
    parse_edge_json,
    parse_graph6,
)
from .graph import (
    UNREACHABLE,
    BallView,
    Graph,
    ball,
    cut_vertices,
    diameter,
    distance,
    is_claw_free,
    is_hamiltonian_cycle,
    is_k_regular,
    is_locally_connected,
    ring,
)
from .membership import (
    CutVertexProfile,
    MembershipReport,
    balls2_all_biconnected,
    classify,
    cut_vertex_profile,
    membership_predicates,
    min_edge_triangles,
    triangle_density_implies_membership,
)
from .oracle import DEFAULT_BUDGET, OracleResult, hamiltonian_exact, isomorphic
from .reduction import GadgetMap, backward_cycle, crossed, forward_cycle, reduce_graph
from .smallk import CanonicalForm, HamCertificate, decompose, hamilton_from_form, hamilton_small_k

__version__ = "0.1.0"
