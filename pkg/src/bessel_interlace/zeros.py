"""Enumeration of positive real zeros j_{nu,s}, y_{nu,s}, j'_{nu,s}, y'_{nu,s}.

Every zero is certified by a sign-change bracket. Brackets are found by
walking from a lower anchor (x = nu for the first zero, the previous
zero afterwards) in steps strictly below the minimum spacing of
consecutive zeros, so ranks cannot be skipped; McMahon-type guesses
only size the steps and are never trusted for correctness. Refinement
is safeguarded Newton that falls back to bisection whenever a Newton
step would leave the current bracket.

Indexing follows the classical convention: x = 0 counts as the first
zero of J'_0, so j'_{0,1} = 0 and j'_{0,s} = j_{1,s-1} for s >= 2.
Y-family zeros are all strictly positive.
"""

from __future__ import annotations

import enum
import math
import threading
from dataclasses import dataclass

import numpy as np

from . import evaluate as ev
from .errors import BracketError, ConvergenceError, DomainError

__all__ = [
    "ZeroKind",
    "ZeroId",
    "Bracket",
    "ZeroRecord",
    "initial_bracket",
    "refine",
    "zero",
    "zeros_upto",
    "oracle_scan",
    "clear_cache",
]

S_MAX_LIMIT = 10_000

#: Bracket width shrinks below this (relative) before refinement stops.
WIDTH_TOL = 1e-14

#: |f(root)| certified by every ZeroRecord, relative to max(1, root).
RESID_TOL = 1e-10

MAX_REFINE_ITERS = 200

# No two consecutive zeros of any one target family sit closer than
# this on x > 0 (zero spacing tends to pi from either side and only
# widens near the turning point), so a walk step below it cannot
# straddle two sign changes.
_MIN_GAP = 2.2

_STEP = 0.55 * _MIN_GAP


class ZeroKind(enum.Enum):
    J = "j"
    Y = "y"
    JPRIME = "jp"
    YPRIME = "yp"

    @classmethod
    def parse(cls, text: str) -> "ZeroKind":
        t = text.strip().lower()
        for kind in cls:
            if t in (kind.value, kind.name.lower()):
                return kind
        raise DomainError(f"unknown zero kind {text!r} (expected j, y, jp, yp)", code="DOMAIN_KIND")


@dataclass(frozen=True)
class ZeroId:
    """Names one zero: the s-th positive zero of the kind's function at order nu."""

    kind: ZeroKind
    nu: float
    s: int

    def validate(self) -> "ZeroId":
        ev.check_order(self.nu)
        if not isinstance(self.s, int) or self.s < 1:
            raise DomainError(f"rank must be a positive integer, got {self.s!r}", code="DOMAIN_S")
        if self.s > S_MAX_LIMIT:
            raise DomainError(f"rank {self.s} exceeds the supported cap {S_MAX_LIMIT}", code="DOMAIN_S")
        return self


@dataclass(frozen=True)
class Bracket:
    """Interval whose endpoints carry opposite function signs.

    The conventional j'_{0,1} zero uses the degenerate bracket [0, 0].
    """

    lo: float
    hi: float

    @property
    def width(self) -> float:
        return self.hi - self.lo


@dataclass(frozen=True)
class ZeroRecord:
    id: ZeroId
    value: float
    bracket: Bracket
    residual: float
    iterations: int


def _target(kind: ZeroKind, nu: float):
    if kind is ZeroKind.J:
        return lambda x: ev.bessel_j(nu, x)
    if kind is ZeroKind.Y:
        return lambda x: ev.bessel_y(nu, x)
    if kind is ZeroKind.JPRIME:
        return lambda x: ev.bessel_dj(nu, x)
    return lambda x: ev.bessel_dy(nu, x)


def _target_derivative(kind: ZeroKind, nu: float):
    # For J and Y the derivative is the recurrence composition; for the
    # primed kinds the second derivative comes from the defining ODE
    # C'' = -C'/x - (1 - nu^2/x^2) C.
    if kind is ZeroKind.J:
        return lambda x: ev.bessel_dj(nu, x)
    if kind is ZeroKind.Y:
        return lambda x: ev.bessel_dy(nu, x)
    if kind is ZeroKind.JPRIME:
        return lambda x: -ev.bessel_dj(nu, x) / x - (1.0 - (nu / x) ** 2) * ev.bessel_j(nu, x)
    return lambda x: -ev.bessel_dy(nu, x) / x - (1.0 - (nu / x) ** 2) * ev.bessel_y(nu, x)


def _mcmahon(kind: ZeroKind, nu: float, s: int) -> float:
    """Large-s asymptotic location of the s-th zero; an estimate only.

    Used solely to size the scan budget. Near the turning point (small
    s, large nu) it can overshoot the true zero by several units, which
    is exactly why brackets come from walking, never from guesses.
    """
    if kind is ZeroKind.JPRIME and nu == 0.0:
        if s == 1:
            return 0.0
        return _mcmahon(ZeroKind.J, 1.0, s - 1)
    mu = 4.0 * nu * nu
    if kind is ZeroKind.J:
        b = (s + 0.5 * nu - 0.25) * math.pi
        corr = mu - 1.0
    elif kind is ZeroKind.Y:
        b = (s + 0.5 * nu - 0.75) * math.pi
        corr = mu - 1.0
    elif kind is ZeroKind.JPRIME:
        b = (s + 0.5 * nu - 0.75) * math.pi
        corr = mu + 3.0
    else:
        b = (s + 0.5 * nu - 0.25) * math.pi
        corr = mu + 3.0
    if b <= 0.0:
        return 0.0
    return b - corr / (8.0 * b)


def _scan_start(kind: ZeroKind, nu: float, prev: float | None) -> float:
    if prev is not None:
        # Just past the previous zero; far enough that the function value
        # clears rounding noise, far short of the next zero.
        return prev + max(1e-7, 1e-9 * prev)
    if kind is ZeroKind.JPRIME and 0.0 < nu < 1.0:
        # j'_{nu,1} can sit arbitrarily close to 0 (~ sqrt(2 nu)).
        return 1e-6
    return max(nu, 1e-6)


def initial_bracket(id: ZeroId, _prev: float | None = None) -> Bracket:
    """Sign-change bracket certified to contain exactly the s-th zero.

    Walks from a lower anchor (nu, or the previous zero of the same
    family) in steps below the minimum zero spacing, so the first sign
    change it meets belongs to the requested rank. Raises BracketError
    if no sign change appears within the scan budget.
    """
    id = id.validate()
    if id.kind is ZeroKind.JPRIME and id.nu == 0.0 and id.s == 1:
        raise DomainError(
            "j'_{0,1} = 0 by convention and has no sign-change bracket",
            code="DOMAIN_S",
        )

    prev = _prev
    if prev is None and id.s > 1:
        prev = zero(ZeroId(id.kind, id.nu, id.s - 1)).value

    f = _target(id.kind, id.nu)
    x = _scan_start(id.kind, id.nu, prev)
    fx = f(x)
    if fx == 0.0 or math.isnan(fx):
        x *= 1.0 + 1e-9
        fx = f(x)

    # Fixed steps below the minimum zero spacing keep the rank certified;
    # the asymptotic location only bounds how far the scan may run.
    est = _mcmahon(id.kind, id.nu, id.s)
    budget = max(est, x) + 60.0 * (_MIN_GAP + 1.0)
    while x < budget:
        x2 = min(x + _STEP, budget)
        fx2 = f(x2)
        if math.isnan(fx2):
            raise BracketError(
                f"evaluator returned NaN at x={x2} while bracketing {id}",
                code="BRACKET_NOT_FOUND",
            )
        if fx2 == 0.0:
            # Exact zero hit: widen symmetrically into a genuine bracket.
            eps = max(1e-12, 1e-12 * x2)
            if f(x2 - eps) * f(x2 + eps) < 0.0:
                return Bracket(x2 - eps, x2 + eps)
        if fx * fx2 < 0.0:
            return Bracket(x, x2)
        x, fx = x2, fx2
    raise BracketError(f"no sign change found for {id} within the scan budget", code="BRACKET_NOT_FOUND")


def refine(bracket: Bracket, id: ZeroId) -> ZeroRecord:
    """Polish a bracketed zero with Newton safeguarded by bisection.

    Stops once the bracket width drops below WIDTH_TOL * max(1, |root|);
    raises ConvergenceError after MAX_REFINE_ITERS iterations.
    """
    id = id.validate()
    if bracket.lo == 0.0 and bracket.hi == 0.0:
        if id.kind is ZeroKind.JPRIME and id.nu == 0.0 and id.s == 1:
            return ZeroRecord(id, 0.0, bracket, 0.0, 0)
        raise DomainError("degenerate bracket is reserved for j'_{0,1}", code="DOMAIN_S")

    f = _target(id.kind, id.nu)
    df = _target_derivative(id.kind, id.nu)
    a, b = bracket.lo, bracket.hi
    fa, fb = f(a), f(b)
    if fa == 0.0:
        return ZeroRecord(id, a, Bracket(a, a), 0.0, 0)
    if fb == 0.0:
        return ZeroRecord(id, b, Bracket(b, b), 0.0, 0)
    if fa * fb > 0.0:
        raise ConvergenceError(f"bracket {bracket} has no sign change for {id}", code="NO_CONVERGENCE")

    x = 0.5 * (a + b)
    fx = f(x)
    dx_old = b - a
    iterations = 0
    while True:
        if fx == 0.0:
            a = b = x
            break
        if fa * fx < 0.0:
            b, fb = x, fx
        else:
            a, fa = x, fx
        if b - a <= WIDTH_TOL * max(1.0, abs(x)):
            break
        iterations += 1
        if iterations > MAX_REFINE_ITERS:
            raise ConvergenceError(f"no convergence for {id} after {MAX_REFINE_ITERS} iterations", code="NO_CONVERGENCE")
        d = df(x)
        # Bisect when Newton would leave the bracket or crawl (rtsafe rule);
        # either way the bracket width at least halves every other step.
        newton_ok = d != 0.0 and abs(2.0 * fx) <= abs(dx_old * d)
        if newton_ok:
            x_new = x - fx / d
            newton_ok = a < x_new < b
        if not newton_ok:
            x_new = 0.5 * (a + b)
        dx_old = abs(x_new - x)
        if x_new == x:
            break
        x, fx = x_new, f(x_new)

    x = min(max(x, a), b)
    return ZeroRecord(id, float(x), Bracket(float(a), float(b)), float(f(x)), iterations)


# --- cached sequential enumeration ----------------------------------------

_cache: dict[tuple[ZeroKind, float], list[ZeroRecord]] = {}
_cache_locks: dict[tuple[ZeroKind, float], threading.Lock] = {}
_registry_lock = threading.Lock()


def clear_cache() -> None:
    """Drop all memoized zero sequences (mainly for tests)."""
    with _registry_lock:
        _cache.clear()
        _cache_locks.clear()


def _sequence_lock(key: tuple[ZeroKind, float]) -> threading.Lock:
    with _registry_lock:
        lock = _cache_locks.get(key)
        if lock is None:
            lock = _cache_locks[key] = threading.Lock()
        return lock


def _extend_sequence(kind: ZeroKind, nu: float, s_max: int) -> list[ZeroRecord]:
    key = (kind, float(nu))
    with _sequence_lock(key):
        records = _cache.setdefault(key, [])
        while len(records) < s_max:
            s = len(records) + 1
            id = ZeroId(kind, nu, s)
            if kind is ZeroKind.JPRIME and nu == 0.0 and s == 1:
                records.append(ZeroRecord(id, 0.0, Bracket(0.0, 0.0), 0.0, 0))
                continue
            prev = records[-1].value if records else None
            rec = refine(initial_bracket(id, _prev=prev), id)
            if records and not rec.value > records[-1].value:
                raise ConvergenceError(
                    f"zeros of {kind.name} nu={nu} failed to increase at s={s}",
                    code="NO_CONVERGENCE",
                )
            if abs(rec.residual) > RESID_TOL * max(1.0, abs(rec.value)):
                raise ConvergenceError(
                    f"residual {rec.residual!r} above tolerance for {id}",
                    code="NO_CONVERGENCE",
                )
            records.append(rec)
        return records[:s_max]


def zero(id: ZeroId) -> ZeroRecord:
    """The zero named by ``id``, with its certifying bracket."""
    id = id.validate()
    return _extend_sequence(id.kind, id.nu, id.s)[id.s - 1]


def zeros_upto(kind: ZeroKind, nu: float, s_max: int) -> list[ZeroRecord]:
    """Records for ranks 1..s_max, strictly increasing in value."""
    if not isinstance(s_max, int) or s_max < 1 or s_max > S_MAX_LIMIT:
        raise DomainError(f"s_max must be in 1..{S_MAX_LIMIT}, got {s_max!r}", code="DOMAIN_S")
    ev.check_order(nu)
    return list(_extend_sequence(kind, float(nu), s_max))


def oracle_scan(kind: ZeroKind, nu: float, x_max: float, step: float) -> list[float]:
    """Brute-force zero locator: grid sign scan plus plain bisection.

    Deliberately ignorant of brackets, anchors, and McMahon guesses so
    it can cross-check zeros_upto. Grid evaluation is vectorized; each
    sign change is bisected to 1e-12 absolute.
    """
    ev.check_order(nu)
    if not 0.0 < step <= 0.01:
        raise DomainError(f"step must be in (0, 0.01], got {step!r}", code="DOMAIN_STEP")
    if not math.isfinite(x_max) or x_max <= step:
        raise DomainError(f"x_max must exceed step, got {x_max!r}", code="DOMAIN_X")

    if kind is ZeroKind.J:
        func = lambda t: ev.bessel_j(nu, t)
    elif kind is ZeroKind.Y:
        func = lambda t: ev.bessel_y(nu, t)
    elif kind is ZeroKind.JPRIME:
        func = lambda t: ev.bessel_dj(nu, t)
    else:
        func = lambda t: ev.bessel_dy(nu, t)

    xs = np.arange(step, x_max + 0.5 * step, step)
    vals = np.asarray(func(xs), dtype=float)
    ok = np.isfinite(vals)
    sign_flip = np.nonzero(ok[:-1] & ok[1:] & (vals[:-1] * vals[1:] < 0.0))[0]

    roots = []
    for i in sign_flip:
        a, b = float(xs[i]), float(xs[i + 1])
        fa = float(vals[i])
        while b - a > 1e-12:
            m = 0.5 * (a + b)
            fm = func(m)
            if fm == 0.0:
                a = b = m
                break
            if fa * fm < 0.0:
                b = m
            else:
                a, fa = m, fm
        roots.append(0.5 * (a + b))
    exact = np.nonzero(vals == 0.0)[0]
    roots.extend(float(xs[i]) for i in exact)
    return sorted(roots)
