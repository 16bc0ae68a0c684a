"""Extended-precision evaluation and certified sign decisions.

All real-valued quantities in the package go through mpmath at a
configurable mantissa size (bits).  Strict inequalities that feed
reported booleans are decided with interval arithmetic at escalating
precision, so a reported comparison is never an artifact of rounding.
"""

import os
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp, mpf, iv
from mpmath.libmp import ComplexResult

from .errors import PrecisionExhausted

ENV_PRECISION = "GEOFORGE_PRECISION_BITS"
DEFAULT_PRECISION_BITS = 128


def default_precision_bits():
    value = os.environ.get(ENV_PRECISION)
    if value:
        bits = int(value)
        if bits < 8:
            raise ValueError(f"{ENV_PRECISION} must be at least 8, got {bits}")
        return bits
    return DEFAULT_PRECISION_BITS


@dataclass(frozen=True)
class PrecisionContext:
    """Working mantissa size for real-valued evaluation, in bits."""

    precision: int = DEFAULT_PRECISION_BITS

    def __post_init__(self):
        if self.precision < 8:
            raise ValueError(f"precision must be at least 8 bits, got {self.precision}")

    @contextmanager
    def workprec(self, extra=0):
        with mp.workprec(self.precision + extra):
            yield mp

    def mpf(self, x):
        with mp.workprec(self.precision):
            return mpf(x)

    def str(self, x, digits=None):
        """Decimal expansion of x at the context's full precision."""
        if digits is None:
            digits = max(int(self.precision * 0.30103) + 1, 6)
        with mp.workprec(self.precision):
            return mp.nstr(mpf(x), digits, strip_zeros=False)


def context(precision=None):
    return PrecisionContext(precision if precision is not None else default_precision_bits())


def to_mpf(x):
    """Convert to mpf at the ambient precision; Fractions convert by one
    correctly rounded division, with no decimal round trip."""
    if isinstance(x, Fraction):
        return mpf(x.numerator) / mpf(x.denominator)
    return mpf(x)


@contextmanager
def interval_prec(bits):
    old = iv.prec
    iv.prec = bits
    try:
        yield iv
    finally:
        iv.prec = old


# Hyperbolic helpers missing from mpmath's interval context.  Each is a
# composition of monotone interval-safe primitives, so enclosure holds.

def iv_cosh(x):
    e = iv.exp(x)
    return (e + 1 / e) / 2


def iv_sinh(x):
    e = iv.exp(x)
    return (e - 1 / e) / 2


def iv_coth(x):
    e = iv.exp(2 * x)
    return (e + 1) / (e - 1)


def iv_asinh(x):
    return iv.log(x + iv.sqrt(x * x + 1))


def iv_acosh(x):
    return iv.log(x + iv.sqrt(x * x - 1))


def certified_sign(make_interval, start_bits=DEFAULT_PRECISION_BITS, max_bits=4096):
    """Sign of a real quantity, certified by interval evaluation.

    make_interval(iv) must evaluate the quantity in the interval context
    it is handed.  Precision doubles until the enclosure excludes zero.

    Returns (sign, bits_used) with sign in {-1, +1}.  Raises
    PrecisionExhausted if the enclosure still straddles zero at max_bits;
    a quantity that is exactly zero can never be certified by this route.
    """
    bits = start_bits
    while True:
        with interval_prec(bits):
            try:
                val = make_interval(iv)
            except ComplexResult:
                val = None  # enclosure too loose to stay in-domain: escalate
            if val is not None:
                if val > 0:
                    return 1, bits
                if val < 0:
                    return -1, bits
        if bits >= max_bits:
            raise PrecisionExhausted(
                f"sign undecided at {bits} bits; enclosure still straddles zero"
            )
        bits = min(bits * 2, max_bits)


def certified_margin(make_interval, guard_bits=20, start_bits=DEFAULT_PRECISION_BITS,
                     max_bits=4096):
    """Certified sign plus a margin known to guard_bits significant bits.

    Escalates until the enclosure excludes zero AND its width is below
    2^-guard_bits of its midpoint, so the returned margin itself is
    trustworthy, not just the comparison.

    Returns (sign, margin_mpf, bits_used).
    """
    bits = start_bits
    while True:
        with interval_prec(bits):
            try:
                val = make_interval(iv)
            except ComplexResult:
                val = None  # enclosure too loose to stay in-domain: escalate
            if val is not None and ((val > 0) or (val < 0)):
                mid = val.mid
                width = val.delta
                if width <= abs(mid) * mpf(2) ** (-guard_bits):
                    with mp.workprec(bits):
                        return (1 if val > 0 else -1), abs(mpf(mid)), bits
        if bits >= max_bits:
            raise PrecisionExhausted(
                f"margin not certified to {guard_bits} guard bits within {max_bits} bits"
            )
        bits = min(bits * 2, max_bits)
