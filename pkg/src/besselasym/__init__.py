"""Certified large-argument asymptotics for Bessel, Hankel and modified
Bessel functions.

Truncated asymptotic expansions of H1, H2, J, Y, K, I and their derivatives,
each returned together with a rigorous bound on the truncation error;
terminant-based re-expansion of the remainders (exponentially improved
asymptotics); independent cross-checks through integral representations; and
an extended-precision oracle used to validate every bound.
"""

from .bounds import (BoundBreakdown, FAMILIES, SignRatioReport,
                     bound_complex_nu, bound_real_nu, olver_bound,
                     sign_ratio_check)
from .coefficients import CoeffTable, coeff_a, coeff_b, coeff_table
from .errors import (AccuracyError, DomainError, NoApplicableBoundError,
                     SectorError)
from .expansions import (EXPANSION_KINDS, CertifiedValue, ExpansionContext,
                         evaluate_certified, expansion_sector,
                         family_remainder_series, make_context, partial_sum,
                         remainder_from_oracle)
from .integral_reps import (IntegralRepConfig, coeff_a_via_integral,
                            remainder_J_via_thm1, remainder_K_via_thm1,
                            remainder_via_boyd)
from .oracle import OracleValue, reference
from .reexpansion import (ReexpandedRemainder, TruncationPair,
                          optimal_truncation, reexpand, reexpand_tail_bound,
                          sign_ratio_reexp)
from .surface import SurfaceComplex
from .terminants import (MeijerAngle, TerminantResult, chi, hyp_bound_kernel,
                         lambda_terminant, pi_terminant, solve_meijer_angle,
                         sup_lambda_bound, sup_pi_bound)

__version__ = "0.1.0"

__all__ = [
    "AccuracyError", "BoundBreakdown", "CertifiedValue", "CoeffTable",
    "DomainError", "EXPANSION_KINDS", "ExpansionContext", "FAMILIES",
    "IntegralRepConfig", "MeijerAngle", "NoApplicableBoundError",
    "OracleValue", "ReexpandedRemainder", "SectorError", "SignRatioReport",
    "SurfaceComplex", "TerminantResult", "TruncationPair", "bound_complex_nu",
    "bound_real_nu", "chi", "coeff_a", "coeff_a_via_integral", "coeff_b",
    "coeff_table", "evaluate_certified", "expansion_sector",
    "family_remainder_series", "hyp_bound_kernel", "lambda_terminant",
    "make_context", "olver_bound", "optimal_truncation", "partial_sum",
    "pi_terminant", "reexpand", "reexpand_tail_bound", "reference",
    "remainder_J_via_thm1", "remainder_K_via_thm1", "remainder_from_oracle",
    "remainder_via_boyd", "sign_ratio_check", "sign_ratio_reexp",
    "solve_meijer_angle", "sup_lambda_bound", "sup_pi_bound",
]
