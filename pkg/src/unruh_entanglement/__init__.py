"""Observer-dependent entanglement of a two-mode Bell state under acceleration.

Two routes to every quantity: closed-form series with rigorous truncation
tails (:mod:`.analytic`) and an independent dense truncated-Fock pipeline
(:mod:`.oracle`), tied together by the kinematic map from acceleration to
squeezing (:mod:`.kinematics`) and a CLI (:mod:`.cli`).
"""

from .analytic import (
    BlockSpectrum,
    CrossValidationWarning,
    MeasureBundle,
    Measured,
    SeriesConvergenceError,
    SeriesResult,
    block_spectrum,
    entropy_alice,
    entropy_joint,
    entropy_rob,
    log_negativity,
    measure_bundle,
    mutual_information,
    mutual_information_partial_sum,
    pt_block_eigenvalues,
    pt_negative_sum,
    sigma_bounds,
    sigma_series,
    standalone_eigenvalue,
)
from .jacobi import JacobiConvergenceError, jacobi_eigh
from .kinematics import (
    ModeSpec,
    NearHorizonResult,
    NearHorizonSpec,
    SqueezingParameter,
    near_horizon_accel,
    squeezing_from_mode,
    squeezing_from_omega,
)
from .oracle import (
    DensityMatrix,
    OracleBundle,
    Spectrum,
    TripartiteState,
    build_one_particle_expansion,
    build_tripartite_state,
    build_vacuum_expansion,
    default_cutoff,
    measures_numeric,
    partial_transpose_alice,
    symmetric_eigenvalues,
    trace_out_alice,
    trace_out_alice_and_region_I,
    trace_out_region_II,
    trace_out_rob,
)

__version__ = "0.1.0"

__all__ = [
    "BlockSpectrum",
    "CrossValidationWarning",
    "DensityMatrix",
    "JacobiConvergenceError",
    "MeasureBundle",
    "Measured",
    "ModeSpec",
    "NearHorizonResult",
    "NearHorizonSpec",
    "OracleBundle",
    "SeriesConvergenceError",
    "SeriesResult",
    "Spectrum",
    "SqueezingParameter",
    "TripartiteState",
    "block_spectrum",
    "build_one_particle_expansion",
    "build_tripartite_state",
    "build_vacuum_expansion",
    "default_cutoff",
    "entropy_alice",
    "entropy_joint",
    "entropy_rob",
    "jacobi_eigh",
    "log_negativity",
    "measure_bundle",
    "measures_numeric",
    "mutual_information",
    "mutual_information_partial_sum",
    "near_horizon_accel",
    "partial_transpose_alice",
    "pt_block_eigenvalues",
    "pt_negative_sum",
    "sigma_bounds",
    "sigma_series",
    "squeezing_from_mode",
    "squeezing_from_omega",
    "standalone_eigenvalue",
    "symmetric_eigenvalues",
    "trace_out_alice",
    "trace_out_alice_and_region_I",
    "trace_out_region_II",
    "trace_out_rob",
]
