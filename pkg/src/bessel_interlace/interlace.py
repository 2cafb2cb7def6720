"""Interlacing chains for Bessel zeros, their checks, and breaking searches.

The unified seven-node chain at order nu, increment eps, rank s is

    j'_{nu,s} < y_{nu,s} < y_{nu+eps,s} < y'_{nu,s}
             < j_{nu,s} < j_{nu+eps,s} < j'_{nu,s+1}

valid for 0 < eps <= 1. At nu = 0, eps = 1 two of the "<" degenerate
to exact equalities (J'_0 = -J_1 and Y'_0 = -Y_1 identify zero
families), which the checks exempt instead of flagging. For eps > 1
the chain breaks: some rank has y_{nu+eps,s} > j_{nu,s}.

All node values come from the shared zero-finder cache, so a value
reused across chains is bit-for-bit identical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, SearchError
from .zeros import ZeroId, ZeroKind, zero

__all__ = [
    "CHAIN_LABELS",
    "InterlaceChain",
    "ChainReport",
    "ViolationWitness",
    "build_chain",
    "check_chain",
    "check_theorem1",
    "check_proposition",
    "check_derivative_chains",
    "find_breaking",
    "counterexample_scan",
]

#: Labels of the seven chain nodes, in order. ``v`` is the base order,
#: ``v+e`` the incremented one.
CHAIN_LABELS = (
    "jp(v,s)",
    "y(v,s)",
    "y(v+e,s)",
    "yp(v,s)",
    "j(v,s)",
    "j(v+e,s)",
    "jp(v,s+1)",
)

def strict_tol(right_value: float) -> float:
    """Margin a gap must exceed to count as strictly ordered."""
    return max(1e-9, 1e-12 * abs(right_value))


#: |gap| at or below this is an exact-equality degeneracy, not a violation.
EQ_TOL = 1e-10

# Gap positions (left-node index) exempt at nu=0, eps=1: y(v+e,s)->yp(v,s)
# and j(v+e,s)->jp(v,s+1) are equalities there.
_NU0_EPS1_EXEMPT_GAPS = (2, 5)


@dataclass(frozen=True)
class InterlaceChain:
    nu: float
    eps: float
    s: int
    nodes: tuple[float, float, float, float, float, float, float]


@dataclass(frozen=True)
class ChainReport:
    chain: InterlaceChain
    ok: bool
    first_failure: int | None
    margins: tuple[float, float, float, float, float, float]


@dataclass(frozen=True)
class ViolationWitness:
    """A concrete ordering failure: claimed left < right, observed otherwise."""

    nu: float
    eps: float
    s: int
    left_label: str
    right_label: str
    left_value: float
    right_value: float


def _zval(kind: ZeroKind, nu: float, s: int) -> float:
    return zero(ZeroId(kind, nu, s)).value


def build_chain(nu: float, eps: float, s: int) -> InterlaceChain:
    """Compute the seven chain nodes through the zero finder."""
    nu = float(nu)
    eps = float(eps)
    if not math.isfinite(eps) or eps <= 0.0:
        raise DomainError(f"eps must be positive, got {eps!r}", code="DOMAIN_EPS")
    if not isinstance(s, int) or s < 1:
        raise DomainError(f"rank must be a positive integer, got {s!r}", code="DOMAIN_S")
    nodes = (
        _zval(ZeroKind.JPRIME, nu, s),
        _zval(ZeroKind.Y, nu, s),
        _zval(ZeroKind.Y, nu + eps, s),
        _zval(ZeroKind.YPRIME, nu, s),
        _zval(ZeroKind.J, nu, s),
        _zval(ZeroKind.J, nu + eps, s),
        _zval(ZeroKind.JPRIME, nu, s + 1),
    )
    return InterlaceChain(nu, eps, s, nodes)


def check_chain(chain: InterlaceChain) -> ChainReport:
    """Strict ordering of the seven nodes, with the nu=0, eps=1 exemption."""
    nodes = chain.nodes
    margins = tuple(nodes[i + 1] - nodes[i] for i in range(6))
    exempt = chain.nu == 0.0 and chain.eps == 1.0
    first_failure = None
    for i, gap in enumerate(margins):
        if gap > strict_tol(nodes[i + 1]):
            continue
        if exempt and i in _NU0_EPS1_EXEMPT_GAPS and abs(gap) <= EQ_TOL:
            continue
        first_failure = i
        break
    return ChainReport(chain, first_failure is None, first_failure, margins)


def _check_merged(
    seq: list[tuple[str, float]],
    nu: float,
    eps: float,
    allow_equal_at_nu0: bool,
) -> list[ViolationWitness]:
    """Violations of a claimed strictly increasing labeled sequence."""
    out = []
    for (llab, lval), (rlab, rval) in zip(seq, seq[1:]):
        gap = rval - lval
        if gap > strict_tol(rval):
            continue
        if allow_equal_at_nu0 and nu == 0.0 and abs(gap) <= EQ_TOL:
            continue
        # Rank reported is the one carried in the left label.
        s = int(llab[llab.rindex(",") + 1 : -1])
        out.append(ViolationWitness(nu, eps, s, llab, rlab, lval, rval))
    return out


def _interleaved(kind: ZeroKind, tag: str, nu: float, eps: float, s_max: int) -> list[tuple[str, float]]:
    # kind zeros at orders nu and nu+eps, merged as v1 < v2 < v1' < v2' < ...
    seq = []
    for s in range(1, s_max + 1):
        seq.append((f"{tag}(v,{s})", _zval(kind, nu, s)))
        seq.append((f"{tag}(v+e,{s})", _zval(kind, nu + eps, s)))
    return seq


def check_theorem1(nu: float, s_max: int) -> list[ViolationWitness]:
    """The five classical interlacing chains at orders nu and nu+1.

    Covers the two same-kind chains for J and Y, the mixed chain
    j'_{nu,s} < y_{nu,s} < y'_{nu,s} < j_{nu,s} < j'_{nu,s+1}, and the
    two derivative-zero chains. Returns every adjacent-pair violation;
    exact equalities at nu = 0 (conventional index shifts) are exempt.
    """
    nu = float(nu)
    if not isinstance(s_max, int) or not 1 <= s_max <= 100:
        raise DomainError(f"s_max must be in 1..100, got {s_max!r}", code="DOMAIN_S")
    violations = []
    # Leading bound of the mixed chain: nu <= j'_{nu,1} (equality allowed).
    jp1 = _zval(ZeroKind.JPRIME, nu, 1)
    if jp1 < nu - 1e-12 * max(1.0, nu):
        violations.append(ViolationWitness(nu, 1.0, 1, "nu", "jp(v,1)", nu, jp1))
    violations += _check_merged(_interleaved(ZeroKind.J, "j", nu, 1.0, s_max), nu, 1.0, True)
    violations += _check_merged(_interleaved(ZeroKind.Y, "y", nu, 1.0, s_max), nu, 1.0, True)
    mixed = []
    for s in range(1, s_max + 1):
        mixed.append((f"jp(v,{s})", _zval(ZeroKind.JPRIME, nu, s)))
        mixed.append((f"y(v,{s})", _zval(ZeroKind.Y, nu, s)))
        mixed.append((f"yp(v,{s})", _zval(ZeroKind.YPRIME, nu, s)))
        mixed.append((f"j(v,{s})", _zval(ZeroKind.J, nu, s)))
    mixed.append((f"jp(v,{s_max + 1})", _zval(ZeroKind.JPRIME, nu, s_max + 1)))
    violations += _check_merged(mixed, nu, 1.0, True)
    violations += _check_merged(_interleaved(ZeroKind.JPRIME, "jp", nu, 1.0, s_max), nu, 1.0, True)
    violations += _check_merged(_interleaved(ZeroKind.YPRIME, "yp", nu, 1.0, s_max), nu, 1.0, True)
    return violations


def check_proposition(nu: float, s_max: int) -> list[ViolationWitness]:
    """j_{nu+1,s} < j'_{nu,s+1} and y_{nu+1,s} < y'_{nu,s} for s <= s_max.

    At nu = 0 both are exact equalities (index-shift identities) and
    are exempt rather than reported.
    """
    nu = float(nu)
    if not isinstance(s_max, int) or s_max < 1:
        raise DomainError(f"s_max must be a positive integer, got {s_max!r}", code="DOMAIN_S")
    out = []
    for s in range(1, s_max + 1):
        lval = _zval(ZeroKind.J, nu + 1.0, s)
        rval = _zval(ZeroKind.JPRIME, nu, s + 1)
        gap = rval - lval
        if not gap > strict_tol(rval) and not (nu == 0.0 and abs(gap) <= EQ_TOL):
            out.append(ViolationWitness(nu, 1.0, s, f"j(v+e,{s})", f"jp(v,{s + 1})", lval, rval))
        lval = _zval(ZeroKind.Y, nu + 1.0, s)
        rval = _zval(ZeroKind.YPRIME, nu, s)
        gap = rval - lval
        if not gap > strict_tol(rval) and not (nu == 0.0 and abs(gap) <= EQ_TOL):
            out.append(ViolationWitness(nu, 1.0, s, f"y(v+e,{s})", f"yp(v,{s})", lval, rval))
    return out


def check_derivative_chains(nu: float, eps: float, s_max: int) -> list[ViolationWitness]:
    """Interlacing of derivative zeros across the order increment:

    j'_{nu,s} < j'_{nu+eps,s} < j'_{nu,s+1} and the same for y'.
    Requires 0 < eps <= 1; exact equalities at nu = 0, eps = 1 exempt.
    """
    nu = float(nu)
    eps = float(eps)
    if not 0.0 < eps <= 1.0:
        raise DomainError(f"eps must satisfy 0 < eps <= 1, got {eps!r}", code="DOMAIN_EPS")
    allow = eps == 1.0
    out = _check_merged(_interleaved(ZeroKind.JPRIME, "jp", nu, eps, s_max), nu, eps, allow)
    out += _check_merged(_interleaved(ZeroKind.YPRIME, "yp", nu, eps, s_max), nu, eps, allow)
    return out


def find_breaking(nu: float, eps: float, s_cap: int = 500) -> ViolationWitness:
    """Smallest rank s <= s_cap with y_{nu+eps,s} > j_{nu,s} (eps > 1).

    The chain is guaranteed to break somewhere for eps > 1; the
    asymptotic node gap tends to (eps-1)*pi/2 > 0, but the first
    violating rank grows as eps -> 1+, so a too-small cap raises
    SearchError (NOT_FOUND_WITHIN_CAP).
    """
    nu = float(nu)
    eps = float(eps)
    if not eps > 1.0:
        raise DomainError(f"breaking search requires eps > 1, got {eps!r}", code="DOMAIN_EPS")
    if not isinstance(s_cap, int) or s_cap < 1:
        raise DomainError(f"s_cap must be a positive integer, got {s_cap!r}", code="DOMAIN_S")
    for s in range(1, s_cap + 1):
        yv = _zval(ZeroKind.Y, nu + eps, s)
        jv = _zval(ZeroKind.J, nu, s)
        if yv > jv:
            return ViolationWitness(nu, eps, s, f"y(v+e,{s})", f"j(v,{s})", yv, jv)
    raise SearchError(
        f"no rank s <= {s_cap} with y_(nu+eps,s) > j_(nu,s) at nu={nu}, eps={eps}; raise s_cap",
        code="NOT_FOUND_WITHIN_CAP",
    )


def counterexample_scan(
    eps: float,
    nu_list: list[float],
    s: int,
    pair: str = "jp-vs-y",
) -> tuple[ViolationWitness, ViolationWitness]:
    """Witnesses that no uniform ordering exists for the unchained pairs.

    ``pair`` selects the comparison: "jp-vs-y" compares j'_{nu+eps,s}
    against y_{nu,s}; "yp-vs-j" compares y'_{nu+eps,s} against
    j_{nu,s}. Returns (greater_witness, less_witness), one order each,
    drawn from ``nu_list``; raises SearchError (ONLY_ONE_ORDERING) if
    the list exhibits a single ordering only.
    """
    eps = float(eps)
    if not 0.0 < eps <= 1.0:
        raise DomainError(f"eps must satisfy 0 < eps <= 1, got {eps!r}", code="DOMAIN_EPS")
    if not nu_list:
        raise DomainError("nu_list must be nonempty", code="DOMAIN_NU")
    if pair == "jp-vs-y":
        left_kind, right_kind, llab, rlab = ZeroKind.JPRIME, ZeroKind.Y, "jp(v+e,{s})", "y(v,{s})"
    elif pair == "yp-vs-j":
        left_kind, right_kind, llab, rlab = ZeroKind.YPRIME, ZeroKind.J, "yp(v+e,{s})", "j(v,{s})"
    else:
        raise DomainError(f"pair must be 'jp-vs-y' or 'yp-vs-j', got {pair!r}", code="DOMAIN_PAIR")

    greater = None
    less = None
    for nu in nu_list:
        nu = float(nu)
        lval = _zval(left_kind, nu + eps, s)
        rval = _zval(right_kind, nu, s)
        witness = ViolationWitness(nu, eps, s, llab.format(s=s), rlab.format(s=s), lval, rval)
        if lval > rval and greater is None:
            greater = witness
        elif lval < rval and less is None:
            less = witness
        if greater is not None and less is not None:
            return greater, less
    raise SearchError(
        f"only one ordering of {pair} at eps={eps}, s={s} across nu_list={list(nu_list)!r}",
        code="ONLY_ONE_ORDERING",
    )
