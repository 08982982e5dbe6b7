"""Stationary Gaussian entanglement of a four-mode optoelectromechanical
system: two microwave circuits sharing a mechanical membrane that also
terminates an optical cavity.

Core pipeline: laboratory parameters -> semiclassical working point ->
linearized drift/diffusion matrices -> stability -> steady-state
covariance matrix -> logarithmic negativity per bipartition.  The sweep
engine evaluates that pipeline over declarative parameter grids; a FastAPI
service and a thin CLI expose it.
"""

__version__ = "0.1.0"

from .dynamics import (
    DiffusionMatrix,
    DriftMatrix,
    StabilityReport,
    diffusion_matrix,
    drift_matrix,
    stability,
)
from .gaussian import (
    BipartiteCM,
    CovarianceMatrix,
    Subsystem,
    integrate_covariance_oracle,
    log_negativity,
    reduce_bipartite,
    solve_lyapunov,
)
from .model import (
    OperatingPoint,
    SystemParams,
    bare_couplings,
    bare_detunings,
    drive_amplitudes,
    steady_state,
    thermal_occupation,
    validate_params,
)
from .sweep import (
    OperatingSettings,
    SweepAxis,
    SweepRow,
    SweepSpec,
    run_sweep,
)

__all__ = [
    "__version__",
    "BipartiteCM",
    "CovarianceMatrix",
    "DiffusionMatrix",
    "DriftMatrix",
    "OperatingPoint",
    "OperatingSettings",
    "StabilityReport",
    "Subsystem",
    "SweepAxis",
    "SweepRow",
    "SweepSpec",
    "bare_couplings",
    "bare_detunings",
    "diffusion_matrix",
    "drift_matrix",
    "drive_amplitudes",
    "integrate_covariance_oracle",
    "log_negativity",
    "reduce_bipartite",
    "run_sweep",
    "solve_lyapunov",
    "stability",
    "steady_state",
    "thermal_occupation",
    "validate_params",
]
