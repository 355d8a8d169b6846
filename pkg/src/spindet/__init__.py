"""Barnes multiple gamma and zeta-regularized spectral determinants.

High-precision building blocks (exact Bernoulli/Stirling tables, Hurwitz
zeta s-derivatives via Euler-Maclaurin in double-double arithmetic), the
Barnes multiple gamma hierarchy, and the spectral quantities built from
them: boundary two-point determinants on round spheres, bulk/boundary
determinant ratios, type-A anomaly coefficients, determinants of the
iterated Dirac operator, F-coefficients, and a numerical
dimensional-regularization engine.  Every quantity is computable by at
least two independent routes that are required to agree.

The hot Euler-Maclaurin kernel runs from a compiled extension when
available; set SPINDET_PURE_PYTHON=1 to force the pure-Python twin
(``spindet.backend_name`` reports which one is active).
"""

from ._backend import BACKEND as backend_name
from .barnes import (BarnesPoint, BPolynomial, b_poly, ladder_check,
                     log_barnes_gamma, pascal_expand, special_value_half,
                     special_value_one, special_value_one_via_stirling)
from .context import DEFAULT_CONTEXT, EvalResult, PrecisionContext
from .dimreg import ContinuationReport, dimreg_continuation
from .errors import (ConvergenceError, ExtrapolationInstabilityError,
                     PoleError, PrecisionExhaustedError, ResourceLimitError,
                     RouteDisagreementError, SpindetError)
from .exact import (bernoulli, bernoulli_poly, harmonic, pochhammer,
                    pochhammer_exact, stirling_first)
from .hurwitz import (ZetaDerivRequest, hurwitz_zeta, hurwitz_zeta_sderiv,
                      riemann_zeta_deriv_neg_even)
from .selftest import run_selftest
from .spectral import (ModeLevel, ScanEntry, ScanResult, SpectralConfig,
                       anomaly_integrated, bar_schopka_scan,
                       boundary_eigenvalue, boundary_log_det,
                       bulk_anomaly_lagrangian, bulk_log_det_ratio,
                       degeneracy, dirac_det_log, f_coefficient, mode_level,
                       type_a_coefficient, type_a_exact_coefficient)

__version__ = "0.1.0"
