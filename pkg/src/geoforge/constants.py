"""Derived constants for a cusped hyperbolic surface, with certificates.

Two kinds of quantities live here: closed-form evaluations (thin-part
levels, Bers and Adams bounds, orthogonal-distance bounds, collar
widths) and search-defined integers D and K, each the least integer
beyond which a universally quantified inequality holds.

A "for all x >= D" claim cannot be certified by sampling.  Each search
therefore carries a monotone-dominance certificate: a threshold beyond
which the difference function is strictly increasing (closed-form
derivative comparison), the certified sign at the returned value, and
the certified failure one step below (or the fact that one step below
leaves the monotone regime).
"""

from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from mpmath import mp, mpf

from .errors import (
    EpsilonOutOfRange,
    NoSolutionBelowCap,
    NotApplicable,
    NotHyperbolicType,
)
from .numerics import (
    PrecisionContext,
    certified_sign,
    context,
    iv_asinh,
    to_mpf,
)

D_SEARCH_CAP = 10**64
K_SEARCH_CAP = 10**300


def to_fraction(x):
    """Exact rational value of an int, Fraction or mpf (mpf is a binary
    rational, so this is lossless)."""
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    m = mpf(x)
    sign, man, exp, _ = m._mpf_
    if man == 0 and exp != 0:
        raise ValueError(f"cannot convert special value {x} to a fraction")
    f = Fraction(int(man), 1) * Fraction(2) ** exp
    return -f if sign else f


# ---------------------------------------------------------------------------
# Closed-form bounds


def basmajian_bound(k, d1, ctx: PrecisionContext = None):
    """Length bound 2 asinh(k) + d1 + 1 for k self-intersections, where
    d1 is the orthogonal self-distance of the length-one horocycle."""
    ctx = ctx or context()
    if k < 2:
        raise ValueError(f"bound is stated for k >= 2, got {k}")
    if d1 < 0:
        raise ValueError("orthogonal distance must be nonnegative")
    with ctx.workprec():
        return 2 * mp.asinh(k) + to_mpf(d1) + 1


def thick_part_threshold(eps, intersections, ctx: PrecisionContext = None):
    """Thick-part length lower bound (eps/12) sqrt(intersections)."""
    ctx = ctx or context()
    if not 0 < eps <= Fraction(1, 2):
        raise EpsilonOutOfRange(f"requires 0 < eps <= 1/2, got {eps}")
    if intersections < 0:
        raise ValueError("intersection count must be nonnegative")
    with ctx.workprec():
        return to_mpf(eps) / 12 * mp.sqrt(intersections)


def bers_bound(g, n, ctx: PrecisionContext = None):
    """Bers constant 4(3g-3+n) log(4 pi (2g-2+n)/(3g-3+n)).

    Undefined for the thrice punctured sphere and smaller types.
    """
    ctx = ctx or context()
    complexity = 3 * g - 3 + n
    if complexity < 1:
        raise NotApplicable(f"Bers bound needs 3g-3+n >= 1, got {complexity}")
    with ctx.workprec():
        return 4 * complexity * mp.log(4 * mp.pi * (2 * g - 2 + n) / complexity)


def adams_bound(g, n) -> int:
    """Upper bound 12g + 5n - 11 on the longest embedded horocycle."""
    if n < 1 or 2 * g - 2 + n <= 0:
        raise NotHyperbolicType(f"(g, n) = ({g}, {n}) is not a cusped hyperbolic type")
    return 12 * g + 5 * n - 11


def thin_boundary_horocycle(eps0, ctx: PrecisionContext = None):
    """Length 2 / sqrt(coth(eps0) - 1) of the horocycle bounding the
    eps0-thin part of a cusp."""
    ctx = ctx or context()
    if not eps0 > 0:
        raise ValueError("eps0 must be positive")
    with ctx.workprec():
        return 2 / mp.sqrt(mp.coth(to_mpf(eps0)) - 1)


def orthogonal_distance_bound(h, g, n, ctx: PrecisionContext = None):
    """Bound 2 log(4 cosh(L(g,n)/2) / h) on the orthogonal self-distance
    of an embedded horocycle of length h."""
    ctx = ctx or context()
    if not h > 0:
        raise ValueError("horocycle length must be positive")
    L = bers_bound(g, n, ctx)
    with ctx.workprec():
        return 2 * mp.log(4 * mp.cosh(L / 2) / to_mpf(h))


def collar_width(gamma, ctx: PrecisionContext = None):
    """Half-width asinh(1/sinh(gamma/2)) of the embedded collar around a
    simple closed geodesic of length gamma."""
    ctx = ctx or context()
    if not gamma > 0:
        raise ValueError("geodesic length must be positive")
    with ctx.workprec():
        return mp.asinh(1 / mp.sinh(to_mpf(gamma) / 2))


# ---------------------------------------------------------------------------
# Certified integer searches


@dataclass(frozen=True)
class CertifiedValue:
    """A search-defined integer with its minimality certificate.

    The defining inequality holds at `value` (certified sign), is
    strictly monotone from `monotone_from` on, and fails at value - 1
    unless value - 1 already sits below the monotone threshold or the
    search floor."""

    value: int
    monotone_from: int
    floor: int
    prev_fails: bool
    prev_below_regime: bool
    precision_bits: int

    def as_dict(self):
        return {
            "value": str(self.value),
            "digits": len(str(self.value)),
            "monotone_from": str(self.monotone_from),
            "floor": str(self.floor),
            "holds_at_value": True,
            "prev_fails": self.prev_fails,
            "prev_below_regime": self.prev_below_regime,
            "precision_bits": self.precision_bits,
        }


def _sign_at(make, m, ctx, max_extra=4096):
    start = ctx.precision + max(m.bit_length(), 1) + 32
    return certified_sign(lambda iv: make(iv, m), start_bits=start,
                          max_bits=start + max_extra)


def _least_true(make, lo, cap, ctx, what):
    """Least integer m >= lo with the certified sign of make(iv, m)
    positive, assuming positivity is upward-closed on [lo, inf).

    Exponential bracketing then integer bisection; every sign decision
    is interval-certified.  Returns (m, bits_used_at_m).
    """
    lo = max(lo, 1)
    sign, bits = _sign_at(make, lo, ctx)
    if sign > 0:
        return lo, bits
    prev, cur = lo, max(2 * lo, lo + 1)
    while True:
        if cur > cap:
            raise NoSolutionBelowCap(
                f"{what}: no certified solution below cap {cap:.3e}", cap=cap
            )
        sign, bits = _sign_at(make, cur, ctx)
        if sign > 0:
            break
        prev, cur = cur, 2 * cur
    # invariant: fails at prev, holds at cur
    while cur - prev > 1:
        mid = (prev + cur) // 2
        sign, _ = _sign_at(make, mid, ctx)
        if sign > 0:
            cur = mid
        else:
            prev = mid
    sign, bits = _sign_at(make, cur, ctx)
    return cur, bits


def _least_exact_true(q, lo):
    """Least integer m >= lo with q(m) > 0, q exact-rational valued and
    upward-closed on [lo, inf)."""
    if q(lo) > 0:
        return lo
    prev, cur = lo, max(2 * lo, lo + 1)
    while q(cur) <= 0:
        prev, cur = cur, 2 * cur
    while cur - prev > 1:
        mid = (prev + cur) // 2
        if q(mid) > 0:
            cur = mid
        else:
            prev = mid
    return cur


def _finish(make, value, monotone_from, floor, ctx, bits):
    """Assemble the minimality certificate for a completed search."""
    prev_below = value - 1 < max(monotone_from, floor)
    prev_fails = False
    if not prev_below:
        sign, _ = _sign_at(make, value - 1, ctx)
        prev_fails = sign < 0
    return CertifiedValue(value, monotone_from, floor, prev_fails, prev_below, bits)


def find_D(eps0, d_eps0, ctx: PrecisionContext = None, cap=D_SEARCH_CAP) -> CertifiedValue:
    """Least certified D >= 2 with
    (eps0/12) sqrt(x) > 2 asinh(eps0 x / 2) + d_eps0 + 2 eps0 for all x >= D.

    Monotone threshold: the difference is increasing where
    1 + eps0^2 x^2 / 4 > 576 x, a rational inequality checked exactly.
    """
    ctx = ctx or context()
    if not (eps0 > 0 and d_eps0 > 0):
        raise ValueError("eps0 and d_eps0 must be positive")
    e = to_fraction(eps0)
    dd = to_fraction(d_eps0)

    def slope_q(x):
        return 1 + e * e * x * x / 4 - 576 * x

    vertex = ceil(1152 / (e * e))
    x_star = _least_exact_true(slope_q, max(2, vertex))

    def phi(iv, x):
        ee = iv.mpf(e.numerator) / e.denominator
        dd_i = iv.mpf(dd.numerator) / dd.denominator
        return ee / 12 * iv.sqrt(x) - 2 * iv_asinh(ee * x / 2) - dd_i - 2 * ee

    value, bits = _least_true(phi, max(2, x_star), cap, ctx, "find_D")
    return _finish(phi, value, x_star, 2, ctx, bits)


def find_K(eps, h_max, d1, floor_D, ctx: PrecisionContext = None,
           cap=K_SEARCH_CAP) -> CertifiedValue:
    """Least certified K >= floor_D with
    2 asinh(k) + d1 + 1 < (eps/h_max) k^(1/5) for all k >= K.

    Monotone threshold: the difference increases where
    (eps/(5 h_max)) sqrt(1 + k^2) > 2 k^(4/5); that comparison is itself
    monotone for k >= 3, so its first certified success is a threshold.
    """
    ctx = ctx or context()
    if floor_D < 2:
        raise ValueError("floor_D must be >= 2")
    if not (eps > 0 and h_max > 0 and d1 > 0):
        raise ValueError("eps, h_max, d1 must be positive")
    e = to_fraction(eps)
    h = to_fraction(h_max)
    d = to_fraction(d1)

    def slope(iv, k):
        ee = iv.mpf(e.numerator) / e.denominator
        hh = iv.mpf(h.numerator) / h.denominator
        kk = iv.mpf(k)
        return ee / (5 * hh) * iv.sqrt(1 + kk * kk) - 2 * kk ** iv.mpf("0.8")

    k_star, _ = _least_true(slope, 3, cap, ctx, "find_K slope threshold")

    def psi(iv, k):
        ee = iv.mpf(e.numerator) / e.denominator
        hh = iv.mpf(h.numerator) / h.denominator
        dd = iv.mpf(d.numerator) / d.denominator
        kk = iv.mpf(k)
        return ee / hh * kk ** (iv.mpf(1) / 5) - 2 * iv_asinh(kk) - dd - 1

    lo = max(floor_D, k_star, 2)
    value, bits = _least_true(psi, lo, cap, ctx, "find_K")
    return _finish(psi, value, k_star, floor_D, ctx, bits)


def direct_K(eps, d1, ctx: PrecisionContext = None, cap=K_SEARCH_CAP) -> CertifiedValue:
    """Least certified K >= 2 with
    2 asinh(k) + d1 + 1 < (eps/12) sqrt(k) for all k >= K.

    Monotone threshold from eps^2 (1 + k^2) > 2304 k, checked exactly.
    """
    ctx = ctx or context()
    if not (eps > 0 and d1 > 0):
        raise ValueError("eps and d1 must be positive")
    e = to_fraction(eps)
    d = to_fraction(d1)

    def slope_q(k):
        return e * e * (1 + k * k) - 2304 * k

    vertex = ceil(1152 / (e * e))
    k_star = _least_exact_true(slope_q, max(2, vertex))

    def psi(iv, k):
        ee = iv.mpf(e.numerator) / e.denominator
        dd = iv.mpf(d.numerator) / d.denominator
        kk = iv.mpf(k)
        return ee / 12 * iv.sqrt(kk) - 2 * iv_asinh(kk) - dd - 1

    value, bits = _least_true(psi, max(2, k_star), cap, ctx, "direct_K")
    return _finish(psi, value, k_star, 2, ctx, bits)
