"""weightspec: exact spectral, Frobenius and monodromy data of positive
weight systems, computed entirely in rational arithmetic."""

__version__ = "0.1.0"

from .weights import (
    GcdNotOne,
    NonPositiveWeight,
    TooFewWeights,
    WeightSystem,
    WeightSystemError,
    make_weight_system,
)
from .spectrum import (
    BijectionViolation,
    Spectrum,
    StepSequence,
    check_symmetry,
    index_bijection,
    spectral_polynomial,
    spectrum_direct,
    spectrum_from_steps,
    step_sequence,
)
from .gaussmanin import (
    DecompositionFailure,
    DimensionMismatch,
    ExponentVector,
    GElement,
    LaurentPoly,
    bernstein_check,
    birkhoff_matrices,
    f_action,
    reduce_monomial,
    tau_dtau,
    v_order,
)
from .frobenius import (
    FrobeniusInitialData,
    PairingMatrix,
    charpoly_A0,
    initial_data,
    metric_partner,
    pairing_matrix,
)
from .filtrations import (
    FiltrationReport,
    IndexOutOfRange,
    JordanBlock,
    JordanData,
    UnknownEigenvalueClass,
    conjugate_index,
    eigenvalue_classes,
    jordan_blocks,
    nilpotent_matrix,
    orthogonality_check,
    primitive_indices,
    saito_filtration,
    saito_identity_check,
)
from .reflexive import (
    DimensionTooLarge,
    ReflexiveRecord,
    enumerate_reflexive,
    is_reflexive,
    table_compare,
)
from .verify import verify_all

__all__ = [
    "__version__",
    "BijectionViolation",
    "DecompositionFailure",
    "DimensionMismatch",
    "DimensionTooLarge",
    "ExponentVector",
    "FiltrationReport",
    "FrobeniusInitialData",
    "GcdNotOne",
    "GElement",
    "IndexOutOfRange",
    "JordanBlock",
    "JordanData",
    "LaurentPoly",
    "NonPositiveWeight",
    "PairingMatrix",
    "ReflexiveRecord",
    "Spectrum",
    "StepSequence",
    "TooFewWeights",
    "UnknownEigenvalueClass",
    "WeightSystem",
    "WeightSystemError",
    "bernstein_check",
    "birkhoff_matrices",
    "charpoly_A0",
    "check_symmetry",
    "conjugate_index",
    "eigenvalue_classes",
    "enumerate_reflexive",
    "f_action",
    "index_bijection",
    "initial_data",
    "is_reflexive",
    "jordan_blocks",
    "make_weight_system",
    "metric_partner",
    "nilpotent_matrix",
    "orthogonality_check",
    "pairing_matrix",
    "primitive_indices",
    "reduce_monomial",
    "saito_filtration",
    "saito_identity_check",
    "spectral_polynomial",
    "spectrum_direct",
    "spectrum_from_steps",
    "step_sequence",
    "table_compare",
    "tau_dtau",
    "v_order",
    "verify_all",
]
