"""Evaluation of J_nu, Y_nu, their derivatives, and cylinder mixes.

Orders are real with 0 <= nu <= NU_MAX, arguments strictly positive.
Values are IEEE doubles backed by scipy.special (AMOS), which holds
relative accuracy near 1e-13 across the supported range, including
large orders where uniform asymptotic expansions take over.

Derivatives are formed from the downward recurrence
C'_nu(x) = -C_{nu+1}(x) + (nu/x) C_nu(x), the same relation the
interlacing analysis relies on, so derivative values are consistent
with the function values by construction.

Where the true Y magnitude exceeds the double range (x far below a
large order) the value saturates to +/-inf; NaN is never returned for
in-domain inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.special import jv as _jv, yv as _yv

from .errors import DomainError

#: Order cap. Counterexample searches need orders of several hundred;
#: evaluation accuracy is unverified above this.
NU_MAX = 600.0

_EPS = 2.220446049250313e-16


@dataclass(frozen=True)
class EvalResult:
    """A function value plus an advisory absolute-error bound.

    ``est_abs_error`` is a cheap upper-bound heuristic (roughly 10 ulp
    of the value, with an amplitude floor in the oscillatory region),
    not a certified enclosure.
    """

    value: float
    est_abs_error: float


def check_order(nu: float) -> float:
    """Validate an order, returning it as float. Raises DomainError."""
    nu = float(nu)
    if not math.isfinite(nu) or nu < 0.0:
        raise DomainError(f"order must be finite and >= 0, got {nu!r}", code="DOMAIN_NU")
    if nu > NU_MAX:
        raise DomainError(f"order {nu!r} exceeds NU_MAX={NU_MAX}", code="OVERFLOW_NU")
    return nu


def check_argument(x: float) -> float:
    """Validate an argument, returning it as float. Raises DomainError."""
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"argument must be finite and > 0, got {x!r}", code="DOMAIN_X")
    return x


# Bare-float fast paths; the zero finder calls these in tight loops.

# Below this the backend misevaluates subnormal orders; snapping to 0
# changes the value by O(nu), far under the accuracy contract.
_TINY_ORDER = 1e-290


def bessel_j(nu: float, x):
    if 0.0 < nu < _TINY_ORDER:
        nu = 0.0
    return _jv(nu, x)


def bessel_y(nu: float, x):
    if 0.0 < nu < _TINY_ORDER:
        nu = 0.0
    return _yv(nu, x)


def bessel_dj(nu: float, x):
    if nu < _TINY_ORDER:
        return -_jv(1.0, x)
    return -_jv(nu + 1.0, x) + (nu / x) * _jv(nu, x)


def bessel_dy(nu: float, x):
    if nu < _TINY_ORDER:
        return -_yv(1.0, x)
    v = -_yv(nu + 1.0, x) + (nu / x) * _yv(nu, x)
    # inf - inf below the turning point: Y is negative and rising there.
    if isinstance(v, float) and math.isnan(v) and x < nu:
        return math.inf
    return v


def _error_estimate(nu: float, x: float, value: float) -> float:
    if math.isinf(value):
        return math.inf
    # Oscillatory region: absolute floor at the asymptotic amplitude.
    floor = math.sqrt(2.0 / (math.pi * x)) if x > max(nu, 1.0) else 0.0
    return 10.0 * _EPS * max(abs(value), floor)


def eval_J(nu: float, x: float) -> EvalResult:
    """J_nu(x) for nu in [0, NU_MAX], x > 0."""
    nu = check_order(nu)
    x = check_argument(x)
    v = float(bessel_j(nu, x))
    return EvalResult(v, _error_estimate(nu, x, v))


def eval_Y(nu: float, x: float) -> EvalResult:
    """Y_nu(x) for nu in [0, NU_MAX], x > 0.

    Saturates to -inf when the true magnitude overflows the double
    range (small x, large nu).
    """
    nu = check_order(nu)
    x = check_argument(x)
    v = float(bessel_y(nu, x))
    return EvalResult(v, _error_estimate(nu, x, v))


def eval_dJ(nu: float, x: float) -> EvalResult:
    """J'_nu(x) = -J_{nu+1}(x) + (nu/x) J_nu(x)."""
    nu = check_order(nu)
    x = check_argument(x)
    v = float(bessel_dj(nu, x))
    return EvalResult(v, _error_estimate(nu, x, v))


def eval_dY(nu: float, x: float) -> EvalResult:
    """Y'_nu(x) = -Y_{nu+1}(x) + (nu/x) Y_nu(x)."""
    nu = check_order(nu)
    x = check_argument(x)
    v = float(bessel_dy(nu, x))
    return EvalResult(v, _error_estimate(nu, x, v))


def eval_cylinder(alpha: float, nu: float, x: float) -> EvalResult:
    """General cylinder function J_nu(x) cos(alpha) - Y_nu(x) sin(alpha)."""
    alpha = float(alpha)
    if not math.isfinite(alpha):
        raise DomainError(f"mixing angle must be finite, got {alpha!r}", code="DOMAIN_ALPHA")
    nu = check_order(nu)
    x = check_argument(x)
    ca = math.cos(alpha)
    sa = math.sin(alpha)
    # Skip zero-coefficient terms so a saturated Y can't poison a pure-J mix.
    v = 0.0
    if ca != 0.0:
        v += ca * float(bessel_j(nu, x))
    if sa != 0.0:
        v -= sa * float(bessel_y(nu, x))
    return EvalResult(v, _error_estimate(nu, x, v))
