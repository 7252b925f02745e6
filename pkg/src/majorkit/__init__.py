"""majorkit: exact rational majorization, doubly stochastic matrices, and permutohedra.

Everything computes over ``fractions.Fraction`` -- no floats, no
tolerances.  See the README for the cycle-notation convention and the
CLI surface.
"""

from .birkhoff import (
    BirkhoffDecomposition,
    birkhoff_decompose,
    reconstruct,
    support_permutation,
)
from .core import (
    Fraction,
    Matrix,
    Vector,
    format_matrix,
    format_rational,
    format_vector,
    parse_matrix,
    parse_rational,
    parse_vector,
    read_matrix,
    read_vector,
    to_rational,
)
from .errors import (
    DimensionMismatch,
    GroupTooLarge,
    MajorkitError,
    NegativeInput,
    NotDecreasing,
    NotDoublyStochastic,
    NotMajorized,
    NotMember,
    ParseError,
    SubgroupUnsupported,
    VerificationError,
)
from .majorization import (
    MajorizationVerdict,
    Relation,
    all_sorting_permutations,
    basis_vector,
    compare,
    decreasing_rearrangement,
    hamming_distance,
    majorizes,
    uniform_vector,
)
from .permutohedron import (
    DEFAULT_GROUP_CAP,
    MembershipCertificate,
    PermutohedronSpec,
    affine_dimension,
    evaluate_certificate,
    generate_group,
    is_member,
    membership_certificate,
    on_hyperplane,
    vertices,
)
from .stochastic import (
    Permutation,
    StochasticClass,
    classify_stochastic,
    ds2_lambda,
    permutation_matrix,
    permute_columns,
    permute_rows,
)
from .transform import (
    TTransform,
    TransformChain,
    t_transform_weight,
    transfer_chain,
    transfer_step,
)

__version__ = "0.1.0"

__all__ = [
    "BirkhoffDecomposition",
    "DEFAULT_GROUP_CAP",
    "DimensionMismatch",
    "Fraction",
    "GroupTooLarge",
    "MajorizationVerdict",
    "MajorkitError",
    "Matrix",
    "MembershipCertificate",
    "NegativeInput",
    "NotDecreasing",
    "NotDoublyStochastic",
    "NotMajorized",
    "NotMember",
    "ParseError",
    "Permutation",
    "PermutohedronSpec",
    "Relation",
    "StochasticClass",
    "SubgroupUnsupported",
    "TTransform",
    "TransformChain",
    "Vector",
    "VerificationError",
    "affine_dimension",
    "all_sorting_permutations",
    "basis_vector",
    "birkhoff_decompose",
    "classify_stochastic",
    "compare",
    "decreasing_rearrangement",
    "ds2_lambda",
    "evaluate_certificate",
    "format_matrix",
    "format_rational",
    "format_vector",
    "generate_group",
    "hamming_distance",
    "is_member",
    "majorizes",
    "membership_certificate",
    "on_hyperplane",
    "parse_matrix",
    "parse_rational",
    "parse_vector",
    "permutation_matrix",
    "permute_columns",
    "permute_rows",
    "read_matrix",
    "read_vector",
    "reconstruct",
    "support_permutation",
    "t_transform_weight",
    "to_rational",
    "transfer_chain",
    "transfer_step",
    "uniform_vector",
    "vertices",
]
