"""falaudit: a numerical audit of fractional adaptive-learning convergence.

The package re-derives the fractional gradient of a quadratic energy
norm, runs the fractional steepest-descent recursion (FAL) with full
complex-plane bookkeeping, evaluates the closed-form and corrected
trajectory estimates, and compares all of them under explicit
steady-state criteria.  Hot loops run through a compiled extension when
available, with a bit-identical pure-Python fallback (see
`backend_name`; set FALAUDIT_PURE_PYTHON=1 to force the fallback).
"""

from ._backend import backend_name
from .analysis import (
    ConvergenceReport,
    CriterionKind,
    MethodResult,
    SteadyStateCriterion,
    baseline_descent,
    compare_rates,
    fal_count_sweep,
    fal_steady_index,
    first_passage_index,
    indeterminate_ratio_probe,
    plateau_index,
)
from .energy import (
    CurveSample,
    EnergyNorm,
    classical_gradient,
    evaluate,
    fractional_gradient,
    sample_gradient_curve,
)
from .errors import (
    BracketError,
    DegenerateInput,
    DomainError,
    FalauditError,
    InvalidConfig,
    PoleError,
    SingularInput,
)
from .estimators import (
    RateConfig,
    estimate_eq21,
    estimate_eq21_corrected,
    implicit_residual,
    integration_constant_C,
    rate_constant_chi,
)
from .fractional import (
    ComplexScalar,
    FractionalOrder,
    as_order,
    complex_pow,
    gamma,
    gl_oracle,
    rl_derivative_power,
)
from .iteration import (
    FalParams,
    Termination,
    Trajectory,
    detect_complexification,
    fal_step,
    run_fal,
)
from .presets import CAL_DELTA_CHI025, CAL_DELTA_CHI175, CAL_TAU, PRESETS

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "backend_name",
    # errors
    "FalauditError",
    "PoleError",
    "SingularInput",
    "DomainError",
    "InvalidConfig",
    "DegenerateInput",
    "BracketError",
    # fractional calculus
    "ComplexScalar",
    "FractionalOrder",
    "as_order",
    "gamma",
    "complex_pow",
    "rl_derivative_power",
    "gl_oracle",
    # energy model
    "EnergyNorm",
    "CurveSample",
    "evaluate",
    "classical_gradient",
    "fractional_gradient",
    "sample_gradient_curve",
    # iteration
    "FalParams",
    "Trajectory",
    "Termination",
    "fal_step",
    "run_fal",
    "detect_complexification",
    # estimators
    "RateConfig",
    "rate_constant_chi",
    "integration_constant_C",
    "estimate_eq21",
    "implicit_residual",
    "estimate_eq21_corrected",
    # analysis
    "CriterionKind",
    "SteadyStateCriterion",
    "MethodResult",
    "ConvergenceReport",
    "first_passage_index",
    "plateau_index",
    "baseline_descent",
    "indeterminate_ratio_probe",
    "compare_rates",
    "fal_steady_index",
    "fal_count_sweep",
    # presets
    "PRESETS",
    "CAL_TAU",
    "CAL_DELTA_CHI025",
    "CAL_DELTA_CHI175",
]
