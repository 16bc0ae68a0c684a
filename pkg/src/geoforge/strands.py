"""Closed-form calculus for geodesic arcs winding inside a cusp region.

A strand enters the cusp neighborhood bounded by a horocycle of length
h, winds around the cusp, and returns to the boundary.  Its winding
number, length window, depth threshold and multi-strand intersection
bound all have closed forms; each is validated elsewhere against a
half-plane translate-counting oracle.

Convention: the winding number is floor((2/h) sinh(len/2)), matching
the translate count with contact (a translate touching at an endpoint
counts).  An arc whose floor is zero does not complete a wind and is
not a strand.
"""

from dataclasses import dataclass

from mpmath import mp, mpf

from .errors import (
    HypothesisViolated,
    InvalidLevels,
    NotAStrand,
    TooFewStrands,
    Unsorted,
)
from .numerics import PrecisionContext, context, to_mpf

# Escalation limit for the near-integer guard in winding_number.
_GUARD_MAX_BITS = 4096


def winding_number(h, length, ctx: PrecisionContext = None) -> int:
    """floor((2/h) sinh(length/2)), evaluated with an exactness guard.

    The floor is the one rounding-sensitive step in the module.  When
    the value lands within 2^-(prec-10) of an integer, it is re-evaluated
    at doubled precision; if it stays inside the original band the input
    is treated as the exact boundary configuration (an endpoint translate
    coincides) and the winding is that integer.
    """
    ctx = ctx or context()
    if not h > 0:
        raise ValueError(f"horocycle level must be positive, got {h}")
    bits = ctx.precision
    with mp.workprec(bits):
        band = mpf(2) ** (-(bits - 10))
        v = 2 * mp.sinh(to_mpf(length) / 2) / to_mpf(h)
        if v < 0:
            raise ValueError("strand length must be nonnegative")
        near_tie = abs(v - mp.nint(v)) < band
    with mp.workprec(min(bits * 2, _GUARD_MAX_BITS)):
        v = 2 * mp.sinh(to_mpf(length) / 2) / to_mpf(h)
        if near_tie and abs(v - mp.nint(v)) < band:
            w = int(mp.nint(v))
        else:
            w = int(mp.floor(v))
    if w < 1:
        raise NotAStrand(
            f"(2/h) sinh(length/2) = {w} < 1: arc too short to wind at level {h}"
        )
    return w


@dataclass(frozen=True)
class Strand:
    """A geodesic arc in a cusp neighborhood: level, length, winding."""

    level: object
    length: object
    winding: int

    def __post_init__(self):
        if self.winding != winding_number(self.level, self.length):
            raise ValueError("winding inconsistent with level and length")

    @classmethod
    def from_length(cls, h, length, ctx: PrecisionContext = None):
        return cls(h, length, winding_number(h, length, ctx))

    def self_intersections(self) -> int:
        return self.winding - 1


def strand_self_intersections(strand: Strand) -> int:
    """Winding minus one: each extra wind contributes one crossing."""
    return strand.winding - 1


@dataclass(frozen=True)
class CuspNeighborhood:
    """Cusp region bounded by an embedded horocycle of length h; h_max is
    the supremum of embedded horocycle lengths for this cusp.  The
    boundary case h = h_max is accepted; embeddedness there is the
    caller's responsibility."""

    h: object
    h_max: object

    def __post_init__(self):
        if not (0 < self.h <= self.h_max):
            raise InvalidLevels(f"need 0 < h <= h_max, got h={self.h}, h_max={self.h_max}")


def strand_length_bounds(h, winding, ctx: PrecisionContext = None):
    """Length window (2 asinh(h(w-1)/2), 2 asinh(h w/2)) for winding w."""
    ctx = ctx or context()
    if not h > 0:
        raise ValueError(f"horocycle level must be positive, got {h}")
    if winding < 1:
        raise ValueError(f"winding must be >= 1, got {winding}")
    with ctx.workprec():
        lo = 2 * mp.asinh(to_mpf(h) * (winding - 1) / 2)
        hi = 2 * mp.asinh(to_mpf(h) * winding / 2)
        return lo, hi


def depth_threshold(h, h_deep, ctx: PrecisionContext = None):
    """Length 2 acosh(h/h_deep) of the strand tangent to the deeper
    horocycle; any longer strand must cross it."""
    ctx = ctx or context()
    with ctx.workprec():
        h, h_deep = to_mpf(h), to_mpf(h_deep)
        if not 0 < h_deep < h:
            raise InvalidLevels(f"need 0 < deeper level < h, got {h_deep} vs {h}")
        return 2 * mp.acosh(h / h_deep)


def level_comparison_gap(h, winding, ctx: PrecisionContext = None):
    """Guaranteed length gap 2 asinh((1/h - 1)/6) between equal-winding
    strands at level 1 and at a deep level h < 1/10 with winding >= 1/h."""
    ctx = ctx or context()
    with ctx.workprec():
        h = to_mpf(h)
        if not 0 < h < mpf(1) / 10:
            raise HypothesisViolated(f"requires 0 < h < 1/10, got {h}")
        if winding < 1 / h:
            raise HypothesisViolated(f"requires winding >= 1/h = {1 / h}, got {winding}")
        return 2 * mp.asinh((1 / h - 1) / 6)


def multi_strand_bound(windings) -> int:
    """Exact bound sum_i (2(n-i)+1) w_i - n on the total self-intersection
    of n same-level strands with ascending windings w_1 <= ... <= w_n."""
    windings = list(windings)
    n = len(windings)
    if n < 2:
        raise TooFewStrands(f"need at least 2 strands, got {n}")
    if any(w < 1 for w in windings):
        raise ValueError("windings must be >= 1")
    if any(windings[i] > windings[i + 1] for i in range(n - 1)):
        raise Unsorted("windings must be ascending")
    return sum((2 * (n - i) + 1) * w for i, w in enumerate(windings, start=1)) - n
