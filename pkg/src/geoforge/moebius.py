"""Exact arithmetic for 2x2 integer matrices acting on the upper half-plane.

Group elements are integer matrices of determinant one, taken modulo
sign (PSL normalization: first nonzero entry positive).  Classification
and axis-crossing are decided by exact integer sign tests; only lengths
and distances are evaluated in floating point, at a caller-chosen
precision.
"""

from dataclasses import dataclass
from math import gcd

from mpmath import mp, mpf, mpc

from .errors import DegenerateAxes, InvalidPoint, NotHyperbolic
from .numerics import PrecisionContext, context

IDENTITY = (1, 0, 0, 1)


def _canonical_sign(t):
    for x in t:
        if x > 0:
            return t
        if x < 0:
            return tuple(-y for y in t)
    return t


@dataclass(frozen=True)
class GroupElement:
    """An element of PSL(2, Z)-like groups: integer entries, det = 1,
    canonical sign."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(f"determinant must be 1, got {self.a * self.d - self.b * self.c}")
        a, b, c, d = _canonical_sign((self.a, self.b, self.c, self.d))
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    @classmethod
    def from_tuple(cls, t):
        return cls(t[0], t[1], t[2], t[3])

    def tuple(self):
        return (self.a, self.b, self.c, self.d)

    def __mul__(self, other):
        return GroupElement(*mat_mul(self.tuple(), other.tuple()))

    def inverse(self):
        return GroupElement(self.d, -self.b, -self.c, self.a)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = IDENTITY
        base = self.tuple()
        while n:
            if n & 1:
                result = mat_mul(result, base)
            base = mat_mul(base, base)
            n >>= 1
        return GroupElement(*result)

    @property
    def trace(self):
        return self.a + self.d

    def is_identity(self):
        return self.tuple() == IDENTITY


def mat_mul(m, n):
    """Raw 4-tuple product; hot-path helper shared with the enumeration core."""
    a, b, c, d = m
    e, f, g, h = n
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def mat_inv(m):
    a, b, c, d = m
    return (d, -b, -c, a)


def classify(m: GroupElement) -> str:
    """Trace trichotomy: identity / parabolic / hyperbolic / elliptic."""
    if m.is_identity():
        return "identity"
    t = abs(m.trace)
    if t == 2:
        return "parabolic"
    if t > 2:
        return "hyperbolic"
    return "elliptic"


def translation_length(m, ctx: PrecisionContext = None):
    """Hyperbolic translation length 2*acosh(|tr|/2).

    Accepts a GroupElement or a bare integer trace.
    """
    ctx = ctx or context()
    t = abs(m.trace if isinstance(m, GroupElement) else int(m))
    if t <= 2:
        raise NotHyperbolic(f"|trace| = {t} <= 2 has no translation length")
    with ctx.workprec():
        return 2 * mp.acosh(mpf(t) / 2)


@dataclass(frozen=True)
class Axis:
    """Fixed-point quadratic A z^2 + B z + C of a hyperbolic element.

    Roots are the axis endpoints on the boundary circle R u {inf};
    A = 0 encodes a vertical-line axis with one endpoint at infinity.
    Coefficients are normalized: gcd 1, first nonzero positive.
    """

    A: int
    B: int
    C: int

    def __post_init__(self):
        g = gcd(gcd(abs(self.A), abs(self.B)), abs(self.C))
        if g == 0:
            raise ValueError("zero quadratic is not an axis")
        t = _canonical_sign((self.A // g, self.B // g, self.C // g))
        object.__setattr__(self, "A", t[0])
        object.__setattr__(self, "B", t[1])
        object.__setattr__(self, "C", t[2])
        if self.A != 0 and self.discriminant <= 0:
            raise ValueError("axis quadratic must have two distinct real roots")
        if self.A == 0 and self.B == 0:
            raise ValueError("degenerate linear axis")

    @property
    def discriminant(self):
        return self.B * self.B - 4 * self.A * self.C

    def tuple(self):
        return (self.A, self.B, self.C)

    def endpoints(self, ctx: PrecisionContext = None):
        """Numeric endpoints (mpf pair); inf is represented as mp.inf."""
        ctx = ctx or context()
        with ctx.workprec():
            if self.A == 0:
                return (mpf(-self.C) / self.B, mp.inf)
            s = mp.sqrt(mpf(self.discriminant))
            return ((-self.B - s) / (2 * self.A), (-self.B + s) / (2 * self.A))


def axis_of(m: GroupElement) -> Axis:
    """Axis of a hyperbolic element: quadratic (c, d-a, -b) normalized."""
    if classify(m) != "hyperbolic":
        raise NotHyperbolic(f"classify = {classify(m)}; axis undefined")
    return Axis(m.c, m.d - m.a, -m.b)


def axis_tuple_of(m_tuple):
    """Raw-tuple variant of axis_of for the enumeration hot path.

    No hyperbolicity check; returns an unnormalized coefficient triple.
    """
    a, b, c, d = m_tuple
    return (c, d - a, -b)


def axis_pushforward(m_tuple, axis_tuple):
    """Quadratic of the image axis under the Mobius map of m.

    If Q vanishes on the fixed points of X, the returned triple vanishes
    on the fixed points of m X m^-1 (substitute m^-1 and clear squares).
    Integer-exact; result is unnormalized.
    """
    ma, mb, mc, md = m_tuple
    A, B, C = axis_tuple
    return (
        A * md * md - B * mc * md + C * mc * mc,
        -2 * A * mb * md + B * (ma * md + mb * mc) - 2 * C * ma * mc,
        A * mb * mb - B * ma * mb + C * ma * ma,
    )


def _sign_surd(s, t, delta):
    """Exact sign of s + t*sqrt(delta) for integers s, t and delta > 0."""
    if t == 0:
        return (s > 0) - (s < 0)
    if s == 0:
        return 1 if t > 0 else -1
    if s > 0 and t > 0:
        return 1
    if s < 0 and t < 0:
        return -1
    cmp = s * s - t * t * delta
    if cmp == 0:
        return 0
    dominant_s = cmp > 0
    return (1 if s > 0 else -1) if dominant_s else (1 if t > 0 else -1)


def _signs_at_roots(x, y):
    """Signs of y's quadratic at the two roots of x (x non-vertical)."""
    A1, B1, C1 = x
    A2, B2, C2 = y
    P = A1 * B2 - A2 * B1
    Q = A1 * C2 - A2 * C1
    s = 2 * A1 * Q - P * B1
    delta = B1 * B1 - 4 * A1 * C1
    return _sign_surd(s, P, delta), _sign_surd(s, -P, delta)


def axes_cross_tuples(x, y):
    """Exact linking predicate on raw normalized coefficient triples.

    True iff the endpoint pairs are linked on the boundary circle, i.e.
    exactly one root of y lies strictly between the roots of x.  Decided
    entirely over the integers.
    """
    if x == y:
        raise DegenerateAxes("identical axes")
    x_vertical = x[0] == 0
    y_vertical = y[0] == 0
    if x_vertical and y_vertical:
        raise DegenerateAxes("two vertical axes share the endpoint at infinity")
    if x_vertical or y_vertical:
        # Linked iff the finite root of the vertical axis lies strictly
        # inside the finite root interval of the other quadratic.
        line, quad = (x, y) if x_vertical else (y, x)
        _, B1, C1 = line
        A2, B2, C2 = quad
        val = A2 * C1 * C1 - B2 * C1 * B1 + C2 * B1 * B1
        if val == 0:
            raise DegenerateAxes("vertical axis passes through a shared endpoint")
        return (val > 0) != (A2 > 0)
    s_plus, s_minus = _signs_at_roots(x, y)
    if s_plus == 0 or s_minus == 0:
        raise DegenerateAxes("axes share an endpoint")
    return s_plus != s_minus


def axes_cross(x: Axis, y: Axis) -> bool:
    return axes_cross_tuples(x.tuple(), y.tuple())


def hyperbolic_distance(p, q, ctx: PrecisionContext = None):
    """Upper half-plane distance: cosh d = 1 + |p-q|^2 / (2 Im p Im q)."""
    ctx = ctx or context()
    with ctx.workprec():
        p = mpc(p)
        q = mpc(q)
        if p.imag <= 0 or q.imag <= 0:
            raise InvalidPoint("points must have positive imaginary part")
        d2 = (p.real - q.real) ** 2 + (p.imag - q.imag) ** 2
        return mp.acosh(1 + d2 / (2 * p.imag * q.imag))
