"""Brute-force half-plane oracles used to validate the strand calculus.

The cusp region at level h lifts to the region above y = 1/h with the
cusp group generated by z -> z+1.  A strand lifts to an arc of a
semicircle; translate counting in this picture is the ground truth the
closed forms are checked against.

The multi-strand oracle works in exact integer arithmetic: rational
inputs are cleared to a common denominator (the picture is scale
invariant), after which every crossing decision is one integer sign
test, so reported totals are exact.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, lcm

from mpmath import mp, mpf

from .numerics import PrecisionContext, context


def winding_translate_count(h, length, ctx: PrecisionContext = None) -> int:
    """Count integer translates n >= 1 with -r + n <= -r + 2 sqrt(r^2 - 1/h^2),
    where r = (1/h) cosh(length/2) is the lifted semicircle radius.

    Counts by explicit iteration, with contact included, which is the
    picture the winding-number floor formula summarizes.
    """
    ctx = ctx or context()
    with ctx.workprec():
        r = mp.cosh(mpf(length) / 2) / mpf(h)
        reach = 2 * mp.sqrt(r * r - 1 / mpf(h) ** 2)
        n = 0
        while n + 1 <= reach:
            n += 1
        return n


@dataclass(frozen=True)
class HalfPlaneStrand:
    """Explicit lifted strand at level h: semicircle centered at a
    rational point with rational half-span w (the arc's feet sit at
    center +- w on the horocycle line y = 1/h)."""

    level: Fraction
    center: Fraction
    half_span: Fraction

    @classmethod
    def from_winding(cls, h, winding, fractional, center):
        """Strand winding `winding` times: half-span (winding - 1 +
        fractional)/2 with 0 < fractional < 1, so the length sits
        strictly inside the closed-form window for this winding."""
        h, fractional, center = Fraction(h), Fraction(fractional), Fraction(center)
        if not 0 < fractional < 1:
            raise ValueError("fractional part must lie strictly in (0, 1)")
        return cls(h, center, Fraction(winding - 1 + fractional, 2))

    def length(self, ctx: PrecisionContext = None):
        ctx = ctx or context()
        with ctx.workprec():
            return 2 * mp.asinh(mpf(self.level.numerator) / self.level.denominator
                                * mpf(self.half_span.numerator) / self.half_span.denominator)


def strand_self_crossings(s: HalfPlaneStrand) -> int:
    """Exact count of unit translates crossing the strand transversally:
    integers 0 < n < 2w."""
    two_w = 2 * s.half_span
    n = int(two_w)
    return n - 1 if two_w == n else n


def _scaled(s: HalfPlaneStrand, t: HalfPlaneStrand):
    """Common integer model of two same-level strands: centers, half
    spans, horocycle height and the unit-translate step, all scaled by
    the lcm of the denominators."""
    height = 1 / s.level
    lam = lcm(s.center.denominator, t.center.denominator,
              s.half_span.denominator, t.half_span.denominator,
              height.denominator)
    return (int(s.center * lam), int(t.center * lam),
            int(s.half_span * lam), int(t.half_span * lam),
            int(height * lam), lam)


def strand_pair_crossings(s: HalfPlaneStrand, t: HalfPlaneStrand) -> int:
    """Exact number of transversal crossings of two strands at the same
    level, counting every integer translate of t against s.

    A translate crosses iff the two circles meet strictly above the
    horocycle line; with d the center offset this reduces to the single
    integer test (d^2 + r_s^2 - r_t^2)^2 < 4 d^2 w_s^2, since the meeting
    height over the radical line satisfies y^2 = r_s^2 - x^2 and the
    on-arc condition y > 1/h is exactly |x| < w_s.
    """
    if s.level != t.level:
        raise ValueError("strands must share a horocycle level")
    cs, ct, ws, wt, hh, lam = _scaled(s, t)
    r2s = ws * ws + hh * hh
    r2t = wt * wt + hh * hh
    base = ct - cs
    reach = isqrt(r2s) + isqrt(r2t) + 2
    n_lo = -((reach + base) // lam) - 1
    n_hi = (reach - base) // lam + 1
    count = 0
    for n in range(n_lo, n_hi + 1):
        d = base + n * lam
        if d == 0:
            continue  # concentric circles never cross transversally
        d2 = d * d
        num = d2 + r2s - r2t
        if num * num < 4 * d2 * ws * ws:
            count += 1
    return count


def strand_set_crossings(strands) -> int:
    """Exact total self-intersection number of a set of same-level
    strands: self-crossings plus all pairwise crossings."""
    total = sum(strand_self_crossings(s) for s in strands)
    for i, s in enumerate(strands):
        for t in strands[i + 1:]:
            total += strand_pair_crossings(s, t)
    return total
