"""Hurwitz equivalence of identity factorizations in the symmetric group.

Decides equivalence through the weighted-component graph invariant,
rewrites factorizations into a canonical form with replayable move
certificates, projects braid tuples to transposition factorizations, and
brute-forces orbits on small instances.
"""

from .braid import (
    BraidTuple,
    BraidWord,
    braid_hurwitz_move,
    format_braid_tuple,
    parse_braid_tuple,
    project_tuple,
    project_word,
)
from .canonical import (
    CanonicalResult,
    canonical_form,
    canonical_shape,
    group_components,
    hurwitz_equivalent,
    pull_edge_to_front,
)
from .errors import (
    FormatError,
    HurwitzError,
    InternalError,
    MoveRangeError,
    PreconditionError,
)
from .factorization import (
    Direction,
    Factor,
    Factorization,
    HurwitzMove,
    MoveCertificate,
    apply_certificate,
    apply_move,
    evaluate_product,
    format_certificate,
    format_factorization,
    invert_certificate,
    parse_certificate,
    parse_factorization,
)
from .graph import (
    ComponentSignature,
    FactorizationGraph,
    build_graph,
    format_signature,
    signature,
    to_dot,
)
from .oracle import (
    DEFAULT_CAP,
    OrbitReport,
    enumerate_identity_factorizations,
    enumerate_orbit,
    orbit_partition,
)
from .perm import Permutation, compose, transposition_product

__all__ = [
    "BraidTuple",
    "BraidWord",
    "CanonicalResult",
    "ComponentSignature",
    "DEFAULT_CAP",
    "Direction",
    "Factor",
    "Factorization",
    "FactorizationGraph",
    "FormatError",
    "HurwitzError",
    "HurwitzMove",
    "InternalError",
    "MoveCertificate",
    "MoveRangeError",
    "OrbitReport",
    "Permutation",
    "PreconditionError",
    "apply_certificate",
    "apply_move",
    "braid_hurwitz_move",
    "build_graph",
    "canonical_form",
    "canonical_shape",
    "compose",
    "enumerate_identity_factorizations",
    "enumerate_orbit",
    "evaluate_product",
    "format_braid_tuple",
    "format_certificate",
    "format_factorization",
    "format_signature",
    "group_components",
    "hurwitz_equivalent",
    "invert_certificate",
    "orbit_partition",
    "parse_braid_tuple",
    "parse_certificate",
    "parse_factorization",
    "project_tuple",
    "project_word",
    "pull_edge_to_front",
    "signature",
    "to_dot",
    "transposition_product",
]
