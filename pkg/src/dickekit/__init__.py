"""dickekit: entanglement detection around symmetric Dicke states.

Dense and symmetric-sector state construction, fidelity-based
genuine-multipartite witnesses, collective-spin entanglement criteria,
noise-robustness thresholds, and brute-force numeric oracles that verify
every closed-form bound independently.
"""

from .collective import (
    CRITERION_KINDS,
    GENUINE3_BOUND,
    GENUINE4_BOUND,
    PartitionBounds,
    analytic_eigenvalues,
    collective_noise_threshold,
    collective_threshold_numeric,
    criterion_verdict,
    lemma1_bound,
    lemma2_operators,
    lemma2_vector_norm,
    superradiance_intensity,
    theorem2_bound,
    theorem3_operators,
    theorem3_partition_bounds,
)
from .config import (
    DEFAULT_RESTARTS,
    DEFAULT_TOLERANCES,
    DENSE_QUBIT_LIMIT,
    SYMMETRIC_QUBIT_LIMIT,
    Tolerances,
)
from .errors import DickekitError, DomainError, InvariantViolationError
from .fidelity import (
    AppendixReport,
    dicke_fidelity_bound,
    fidelity_noise_threshold,
    fidelity_threshold_numeric,
    fidelity_witness_verdict,
    verify_appendix_inequality,
)
from .operators import (
    AXES,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    HermitianOperator,
    QuadraticForm,
    collective_operator,
    expectation,
    single_site,
    variance,
)
from .oracle import (
    BiseparableArgument,
    BlochProduct,
    OptimizationResult,
    max_eigenvalue,
    maximize_over_biseparable,
    maximize_over_product_states,
    maximize_over_ti_product,
    sample_random_states,
)
from .states import (
    Bipartition,
    DensityMatrix,
    PureState,
    SchmidtSpectrum,
    SymmetricState,
    assemble_bipartite,
    dicke_schmidt_squared,
    dicke_state,
    dicke_symmetric,
    maximally_mixed,
    product_state,
    psixy_noise_mix,
    psixy_state,
    psixy_symmetric,
    schmidt_spectrum,
    symmetric_to_dense,
    white_noise_mix,
)
from .verdicts import (
    DETECTED_ENTANGLED,
    DETECTED_GENUINE,
    DETECTED_NONE,
    WitnessVerdict,
    make_verdict,
)

__version__ = "0.1.0"

__all__ = [
    "AXES",
    "AppendixReport",
    "BiseparableArgument",
    "Bipartition",
    "BlochProduct",
    "CRITERION_KINDS",
    "DEFAULT_RESTARTS",
    "DEFAULT_TOLERANCES",
    "DENSE_QUBIT_LIMIT",
    "DETECTED_ENTANGLED",
    "DETECTED_GENUINE",
    "DETECTED_NONE",
    "DensityMatrix",
    "DickekitError",
    "DomainError",
    "GENUINE3_BOUND",
    "GENUINE4_BOUND",
    "HermitianOperator",
    "InvariantViolationError",
    "OptimizationResult",
    "PartitionBounds",
    "PureState",
    "QuadraticForm",
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    "SYMMETRIC_QUBIT_LIMIT",
    "SchmidtSpectrum",
    "SymmetricState",
    "Tolerances",
    "WitnessVerdict",
    "analytic_eigenvalues",
    "assemble_bipartite",
    "collective_noise_threshold",
    "collective_operator",
    "collective_threshold_numeric",
    "criterion_verdict",
    "dicke_fidelity_bound",
    "dicke_schmidt_squared",
    "dicke_state",
    "dicke_symmetric",
    "expectation",
    "fidelity_noise_threshold",
    "fidelity_threshold_numeric",
    "fidelity_witness_verdict",
    "lemma1_bound",
    "lemma2_operators",
    "lemma2_vector_norm",
    "make_verdict",
    "max_eigenvalue",
    "maximally_mixed",
    "maximize_over_biseparable",
    "maximize_over_product_states",
    "maximize_over_ti_product",
    "product_state",
    "psixy_noise_mix",
    "psixy_state",
    "psixy_symmetric",
    "sample_random_states",
    "schmidt_spectrum",
    "single_site",
    "superradiance_intensity",
    "symmetric_to_dense",
    "theorem2_bound",
    "theorem3_operators",
    "theorem3_partition_bounds",
    "variance",
    "verify_appendix_inequality",
    "white_noise_mix",
]
