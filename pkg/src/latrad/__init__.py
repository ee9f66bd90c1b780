"""Exact certificates for binomial generation of lattice ideal radicals."""

from .complete_intersection import (
    CandidateBasis,
    CiVerdict,
    ci_search,
    ci_with_basis,
    is_dominating,
    is_mixed,
)
from .cone import (
    FaceSupport,
    enumerate_face_supports,
    is_face_support,
    is_full,
    is_simplex,
    minimal_face_support,
    support_closure,
)
from .configuration import Configuration, configuration_of, degree, grading_witness
from .constructor import FullInstance, construct_char0, construct_charp, prepare_full
from .exact_linalg import IntMatrix, RatVector, hnf, integer_kernel, rational_feasible, snf
from .instances import (
    instance_ojeda,
    instance_veronese33,
    random_full_lattice,
    random_positive_lattice,
)
from .lattice import (
    Lattice,
    LatticeVector,
    contains,
    equal,
    extend_basis,
    from_generators,
    is_positive,
    p_saturation,
    rank_one_relation,
    restrict,
    saturation,
    spans,
)
from .radical_cert import (
    CoverVerdict,
    RadicalVerdict,
    check_radical_generation,
    construct_simplex_cover,
    covers_subset,
    is_cover,
    min_cover_size,
)

__all__ = [
    "CandidateBasis",
    "CiVerdict",
    "Configuration",
    "CoverVerdict",
    "FaceSupport",
    "FullInstance",
    "IntMatrix",
    "Lattice",
    "LatticeVector",
    "RadicalVerdict",
    "RatVector",
    "check_radical_generation",
    "ci_search",
    "ci_with_basis",
    "configuration_of",
    "construct_char0",
    "construct_charp",
    "construct_simplex_cover",
    "contains",
    "covers_subset",
    "degree",
    "enumerate_face_supports",
    "equal",
    "extend_basis",
    "from_generators",
    "grading_witness",
    "hnf",
    "instance_ojeda",
    "instance_veronese33",
    "integer_kernel",
    "is_cover",
    "is_dominating",
    "is_face_support",
    "is_full",
    "is_mixed",
    "is_positive",
    "is_simplex",
    "min_cover_size",
    "minimal_face_support",
    "p_saturation",
    "prepare_full",
    "random_full_lattice",
    "random_positive_lattice",
    "rank_one_relation",
    "rational_feasible",
    "restrict",
    "saturation",
    "snf",
    "spans",
    "support_closure",
]
