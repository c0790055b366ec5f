"""zetalab: desk-scale numerical checks for prime-counting identities.

The package evaluates the classical counting functions (pi, the weighted
prime-power count J, Chebyshev psi), their smooth companions (li, lie,
real-axis zeta and zeta'), step-comb representations on the logarithmic
abscissa, and numerically bracketed Laplace transforms; a claim registry
compares each identity or bound against the corresponding closed form and
emits machine-readable verdicts.
"""

from .analytic import (
    EULER_GAMMA,
    AnalyticConfig,
    ModelPair,
    R_of_s,
    harmonic_model,
    j_mean_original,
    lie,
    li_pv,
    psi_mean_original,
    stirling_model,
    zeta_prime_real,
    zeta_real,
)
from .arith import JValue, j_value, pi_count, pi_from_j, psi_value
from .comb import (
    ArithmeticKind,
    CombKind,
    StepComb,
    build_comb,
    eval_comb,
    integrate_comb,
    r_integral,
    r_integral_model,
    r_value,
    r_value_ordinate,
    zeta1_count,
)
from .laplace import (
    ApproxKernel,
    TransformBracket,
    er_closed,
    er_partial,
    kernel_residual,
    laplace_comb,
    laplace_pair,
    laplace_quadrature,
)
from .sieve import (
    PrimePower,
    SieveSegment,
    integer_kth_root,
    mobius,
    prime_powers_up_to,
    sieve_segment,
    von_mangoldt,
)
from .verify import (
    Claim,
    ClaimResult,
    ScanReport,
    bound_ids,
    emit_report,
    run_all,
    run_claim,
    scan_bound,
)

__version__ = "0.1.0"

__all__ = [
    "AnalyticConfig",
    "ApproxKernel",
    "ArithmeticKind",
    "Claim",
    "ClaimResult",
    "CombKind",
    "EULER_GAMMA",
    "JValue",
    "ModelPair",
    "PrimePower",
    "R_of_s",
    "ScanReport",
    "SieveSegment",
    "StepComb",
    "TransformBracket",
    "bound_ids",
    "build_comb",
    "emit_report",
    "er_closed",
    "er_partial",
    "eval_comb",
    "harmonic_model",
    "integer_kth_root",
    "integrate_comb",
    "j_mean_original",
    "j_value",
    "kernel_residual",
    "laplace_comb",
    "laplace_pair",
    "laplace_quadrature",
    "li_pv",
    "lie",
    "mobius",
    "pi_count",
    "pi_from_j",
    "prime_powers_up_to",
    "psi_mean_original",
    "psi_value",
    "r_integral",
    "r_integral_model",
    "r_value",
    "r_value_ordinate",
    "run_all",
    "run_claim",
    "scan_bound",
    "sieve_segment",
    "stirling_model",
    "von_mangoldt",
    "zeta1_count",
    "zeta_prime_real",
    "zeta_real",
]
