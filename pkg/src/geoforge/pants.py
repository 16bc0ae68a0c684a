"""Pair-of-pants computations: orthogonal horocycle self-distances, the
back-geodesic length formula, and the small-systole example surfaces.

The example surfaces are assembled from three pants shapes: a cuspless
pants with three equal tiny boundaries carrying a back geodesic g1, a
one-cusp pants carrying the shortest cusp-winding geodesic g2, and a
two-cusp pants carrying g3.  Their defining inequalities are decided
with certified interval margins, never by bare floating comparison: at
k = 1000 the g1/g3 gap is below 1e-50 while the lengths are near 15.
"""

from dataclasses import dataclass

from mpmath import mp, mpf

from .errors import LevelTooLarge, NoCusp, PrecisionExhausted
from .moebius import hyperbolic_distance
from .numerics import (
    PrecisionContext,
    certified_margin,
    context,
    iv_acosh,
    iv_asinh,
    iv_cosh,
    iv_sinh,
    to_mpf,
)


@dataclass(frozen=True)
class PantsWithCusps:
    """Three boundary entries; 0 encodes a cusp, a positive number a
    boundary geodesic of that length."""

    boundary: tuple

    def __post_init__(self):
        if len(self.boundary) != 3:
            raise ValueError("a pair of pants has exactly three boundary entries")
        if any(x < 0 for x in self.boundary):
            raise ValueError("boundary entries must be >= 0")

    def cusps(self):
        return [i for i, x in enumerate(self.boundary) if x == 0]


def horocycle_self_distance(pants: PantsWithCusps, h, ctx: PrecisionContext = None):
    """Shortest orthogonal distance from the length-h horocycle of a cusp
    to itself: 2 log(2 (cosh(alpha/2) + cosh(beta/2)) / h).

    The one-cusp, two-cusp and three-cusp cases are the same formula
    with the degenerate entries at 0 (cosh 0 = 1), so the case split is
    continuous by construction.
    """
    ctx = ctx or context()
    cusps = pants.cusps()
    if not cusps:
        raise NoCusp("pants has no cusp to carry the horocycle")
    others = [x for i, x in enumerate(pants.boundary) if i != cusps[0]]
    with ctx.workprec():
        h = to_mpf(h)
        if h <= 0:
            raise ValueError("horocycle length must be positive")
        reach = 2 * (mp.cosh(to_mpf(others[0]) / 2) + mp.cosh(to_mpf(others[1]) / 2))
        if h >= reach:
            raise LevelTooLarge(
                f"level {h} is not embedded here: needs h < {reach}"
            )
        return 2 * mp.log(reach / h)


def orthogonal_distance_oracle(alpha, beta, h, ctx: PrecisionContext = None):
    """Numeric perpendicular-foot check of horocycle_self_distance.

    Realizes the configuration in the half-plane: the common
    perpendicular of the two boundary sides lifts to the unit
    semicircle, the side axes have feet at -exp(-+alpha/2) and
    +exp(-+beta/2), and the horocycle lifts to the horizontal line
    y = (x_beta + y_beta - x_alpha - y_alpha)/h.  The orthogeodesic
    descends vertically from the line to the unit semicircle and back,
    so its length is twice the generic point-distance from i*Y to i.
    """
    ctx = ctx or context()
    with ctx.workprec():
        a, b, h = to_mpf(alpha), to_mpf(beta), to_mpf(h)
        x_a, y_a = -mp.exp(-a / 2), -mp.exp(a / 2)
        x_b, y_b = mp.exp(-b / 2), mp.exp(b / 2)
        line_height = (x_b + y_b - x_a - y_a) / h
        return 2 * hyperbolic_distance(mp.mpc(0, line_height), mp.mpc(0, 1), ctx)


def back_geodesic_length(a, b, c, k, ctx: PrecisionContext = None):
    """Length of the geodesic winding k times around the a-boundary and
    once (backwards) around the b-boundary of a pants with boundary
    lengths (a, b, c):

    cosh(len/2) = (sinh(ka/2)/sinh(a/2)) (cosh(c/2) + cosh(a/2) cosh(b/2))
                  + cosh(ka/2) cosh(b/2).
    """
    ctx = ctx or context()
    if not (a > 0 and b > 0 and c > 0):
        raise ValueError("boundary lengths must be positive")
    if k < 1:
        raise ValueError("winding exponent must be >= 1")
    with ctx.workprec():
        a, b, c = to_mpf(a), to_mpf(b), to_mpf(c)
        ratio = mp.sinh(k * a / 2) / mp.sinh(a / 2)
        val = ratio * (mp.cosh(c / 2) + mp.cosh(a / 2) * mp.cosh(b / 2)) \
            + mp.cosh(k * a / 2) * mp.cosh(b / 2)
        return 2 * mp.acosh(val)


def bac_k_length_one_cusp(x, y, k, ctx: PrecisionContext = None):
    """Degenerate back-geodesic on a one-cusp pants with boundary lengths
    (x, y): winds k times around the cusp, once around the x-boundary.
    cosh(len/2) = k (cosh(x/2) + cosh(y/2)) + cosh(x/2)."""
    ctx = ctx or context()
    with ctx.workprec():
        x, y = to_mpf(x), to_mpf(y)
        return 2 * mp.acosh(k * (mp.cosh(x / 2) + mp.cosh(y / 2)) + mp.cosh(x / 2))


def bac_k_length_two_cusps(y, k, ctx: PrecisionContext = None):
    """Degenerate back-geodesic on a two-cusp pants with one boundary of
    length y: winds k times around one cusp, once around the other.
    cosh(len/2) = k (cosh(y/2) + 1) + 1."""
    ctx = ctx or context()
    with ctx.workprec():
        return 2 * mp.acosh(k * (mp.cosh(to_mpf(y) / 2) + 1) + 1)


def pants_group_trace(a, b, c, k, ctx: PrecisionContext = None):
    """|trace|/2 of the back-geodesic word in an explicit matrix model of
    the pants group, an independent route to back_geodesic_length.

    Generators: A = diag(m, 1/m) with m = exp(a/2) (boundary a), and B
    with tr B = 2 cosh(b/2), arranged so tr(AB) = -2 cosh(c/2) (the sign
    a discrete pants group forces).  Then tr(B^-1 A^k) = s m^k + p m^-k
    depends only on the diagonal entries p, s of B.
    """
    ctx = ctx or context()
    with ctx.workprec():
        a, b, c = to_mpf(a), to_mpf(b), to_mpf(c)
        m = mp.exp(a / 2)
        t_b = 2 * mp.cosh(b / 2)
        t_ab = -2 * mp.cosh(c / 2)
        p = (t_ab - t_b / m) / (m - 1 / m)
        s = t_b - p
        return abs(s * m**k + p * m**-k) / 2


@dataclass(frozen=True)
class ExampleSurfaceReport:
    k: int
    x: object
    y: object
    l_g1: object
    l_g2: object
    l_g3: object
    collar_2w: object
    bullet1: bool          # l(g1) < l(g3)
    bullet2: bool          # l(g1) < 2 w(y)
    bullet3: bool          # l(g3) < l(g2)
    margin1: object        # l(g3) - l(g1), certified
    margin2: object        # 2 w(y) - l(g1), certified
    asserted: bool         # bullets are claimed only for k >= 100
    x_formula: str
    precision_bits: int
    guard_bits: int

    def as_dict(self, ctx: PrecisionContext = None):
        ctx = ctx or PrecisionContext(self.precision_bits)
        s = ctx.str
        return {
            "k": self.k,
            "x": s(self.x), "y": s(self.y),
            "l_g1": s(self.l_g1), "l_g2": s(self.l_g2), "l_g3": s(self.l_g3),
            "collar_2w": s(self.collar_2w),
            "bullet1": self.bullet1, "bullet2": self.bullet2, "bullet3": self.bullet3,
            "margin1": s(self.margin1), "margin2": s(self.margin2),
            "asserted": self.asserted,
            "x_formula": self.x_formula,
            "precision_bits": self.precision_bits,
            "guard_bits": self.guard_bits,
        }


def _example_quantities(iv, k, sqrt_scale):
    """Interval evaluation of (l_g1, l_g2, l_g3, 2w) from the integer k."""
    one = iv.mpf(1)
    y = 2 * iv_asinh(1 / iv_sinh(iv.mpf(k) / 16))
    x = y / iv.sqrt(2 * k + one) if sqrt_scale else y / (2 * k + 1)
    ch_x = iv_cosh(x / 2)
    ch_y = iv_cosh(y / 2)
    ratio = iv_sinh(k * x / 2) / iv_sinh(x / 2)
    g1 = 2 * iv_acosh(ratio * (ch_x + ch_x * ch_x) + iv_cosh(k * x / 2) * ch_x)
    g2 = 2 * iv_acosh(k * (ch_x + ch_y) + ch_x)
    g3 = 2 * iv_acosh(k * (ch_y + one) + one)
    w2 = 2 * iv_asinh(1 / iv_sinh(y / 2))
    return x, y, g1, g2, g3, w2


def build_example_surface(k, ctx: PrecisionContext = None, sqrt_scale=False,
                          guard_bits=20, precision_cap=1024) -> ExampleSurfaceReport:
    """Evaluate the example surface at winding k with certified margins.

    y = 2 asinh(1/sinh(k/16)); the boundary ratio is x = y/(2k+1) by
    default.  sqrt_scale=True evaluates the x = y/sqrt(2k+1) variant
    instead (under which the g1/g3 comparison comes out the other way;
    see the package notes).  Margins are certified to guard_bits
    significant bits, escalating precision up to precision_cap.
    """
    ctx = ctx or context()
    if k < 1:
        raise ValueError("k must be >= 1")

    def margin(selector):
        def make(iv):
            _, _, g1, g2, g3, w2 = _example_quantities(iv, k, sqrt_scale)
            if selector == 1:
                return g3 - g1
            if selector == 2:
                return w2 - g1
            return g2 - g3
        return make

    try:
        s1, m1, bits1 = certified_margin(margin(1), guard_bits, ctx.precision, precision_cap)
        s2, m2, bits2 = certified_margin(margin(2), guard_bits, ctx.precision, precision_cap)
        s3, _, bits3 = certified_margin(margin(3), guard_bits, ctx.precision, precision_cap)
    except PrecisionExhausted as exc:
        raise PrecisionExhausted(
            f"example surface at k={k}: {exc} (cap {precision_cap} bits)"
        ) from exc

    bits = max(bits1, bits2, bits3, ctx.precision)
    eval_ctx = PrecisionContext(bits)
    with eval_ctx.workprec():
        y = 2 * mp.asinh(1 / mp.sinh(mpf(k) / 16))
        x = y / mp.sqrt(2 * k + mpf(1)) if sqrt_scale else y / (2 * k + 1)
        l_g1 = back_geodesic_length(x, x, x, k, eval_ctx)
        l_g2 = bac_k_length_one_cusp(x, y, k, eval_ctx)
        l_g3 = bac_k_length_two_cusps(y, k, eval_ctx)
        w2 = 2 * mp.asinh(1 / mp.sinh(y / 2))
    return ExampleSurfaceReport(
        k=k, x=x, y=y, l_g1=l_g1, l_g2=l_g2, l_g3=l_g3, collar_2w=w2,
        bullet1=s1 > 0, bullet2=s2 > 0, bullet3=s3 > 0,
        margin1=m1 if s1 > 0 else -m1,
        margin2=m2 if s2 > 0 else -m2,
        asserted=k >= 100,
        x_formula="y/sqrt(2k+1)" if sqrt_scale else "y/(2k+1)",
        precision_bits=bits, guard_bits=guard_bits,
    )
