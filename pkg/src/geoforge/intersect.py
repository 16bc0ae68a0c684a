"""Self-intersection numbers of closed geodesics on the thrice punctured
sphere, by exact axis-linking counting in the deck group.

Geometry: fix the axis of the (primitive hyperbolic) element W of a
class.  Self-intersection points of the closed geodesic correspond to
conjugator classes g with Axis(g W g^-1) linked with Axis(W), where g
is taken modulo the double-coset action g ~ w^p g w^q AND modulo
inversion g ~ g^-1 (an unoriented intersection point does not order its
two branches; the figure-eight class pins this normalization: it has
one self-intersection but two linked double cosets, {b} and {b^-1}).

Enumeration: depth-first search over reduced conjugator words with a
sound interval prune.  For a node u ending in letter t, every strict
descendant maps both axis endpoints into the arc P(u) = u.(circle minus
I(t^-1)) -- except descendants of the special shape u.(inverse prefix
of the periodic endpoint word), whose axes are u-images of the finitely
many rotation axes.  So a subtree can be discarded exactly when P(u)
contains neither endpoint of the base axis and none of the (filtered)
rotation-axis images links the base axis.  Pruning never discards a
linked element, so counts per radius equal the naive Cayley-ball scan.

The independent validator unfolds one period of the geodesic into the
ideal quadrilateral fundamental domain (vertices inf, -1, 0, 1): the
period decomposes into the F-arcs of the rotation conjugates' axes, and
self-intersections are exactly the pairwise meeting points that land in
F, located in exact rational arithmetic.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DegenerateAxes, InCyclicSubgroup, NotHyperbolic, NotPrimitive
from .moebius import axes_cross_tuples, axis_pushforward, mat_mul
from .numerics import PrecisionContext
from .words import (
    ALPHABET,
    INVERSE,
    CyclicWord,
    evaluate_letters,
    invert_letters,
    is_primitive_letters,
)

# Ping-pong arcs of the generators on the boundary circle, as ccw
# (start, end) pairs of projective points (p, q), q >= 0, infinity = (1, 0):
# a:(1,inf)  A:(inf,-1)  b:(0,1)  B:(-1,0).
_ARC = {
    "a": ((1, 1), (1, 0)),
    "A": ((1, 0), (-1, 1)),
    "b": ((0, 1), (1, 1)),
    "B": ((-1, 1), (0, 1)),
}
# P(u) for a node ending in t is u applied to the complement of I(t^-1);
# the complement of a ccw arc (s, e) is (e, s).
_COMP_ARC = {t: (_ARC[INVERSE[t]][1], _ARC[INVERSE[t]][0]) for t in ALPHABET}


def _norm3(A, B, C):
    g = gcd(gcd(abs(A), abs(B)), abs(C))
    if g:
        A, B, C = A // g, B // g, C // g
    for v in (A, B, C):
        if v > 0:
            return (A, B, C)
        if v < 0:
            return (-A, -B, -C)
    raise DegenerateAxes("zero axis triple")


def _axis_triple(m):
    a, b, c, d = m
    return _norm3(c, d - a, -b)


def _apply_proj(m, pt):
    """Mobius image of a projective point; keeps q >= 0."""
    a, b, c, d = m
    p, q = pt
    rp, rq = a * p + b * q, c * p + d * q
    if rq < 0 or (rq == 0 and rp < 0):
        rp, rq = -rp, -rq
    return (rp, rq)


def _root_less_than_rat(axis, selector, p, q):
    """Exact test root_selector(axis) < p/q for a finite rational p/q.

    The root is (-B + selector*sqrt(disc))/(2A) with A > 0; the test
    reads off the sign of the quadratic at p/q and the side of the
    vertex.  Roots of hyperbolic axes are irrational, so equality
    cannot occur.
    """
    A, B, C = axis
    qval = A * p * p + B * p * q + C * q * q
    if qval == 0:
        raise DegenerateAxes("rational point on an axis quadratic")
    if selector > 0:
        # p/q > root+ iff Q > 0 and right of the vertex
        return qval > 0 and 2 * A * p + B * q > 0
    # p/q > root- iff Q < 0, or Q > 0 and right of the vertex
    return qval < 0 or 2 * A * p + B * q > 0


def _root_in_arc(axis, selector, arc):
    """Is the chosen root of the axis quadratic inside the ccw arc?"""
    (p1, q1), (p2, q2) = arc
    if q1 == 0:  # arc (inf, beta): points below beta
        return _root_less_than_rat(axis, selector, p2, q2)
    if q2 == 0:  # arc (alpha, inf): points above alpha
        return not _root_less_than_rat(axis, selector, p1, q1)
    alpha_first = p1 * q2 < p2 * q1
    below_beta = _root_less_than_rat(axis, selector, p2, q2)
    above_alpha = not _root_less_than_rat(axis, selector, p1, q1)
    if alpha_first:
        return above_alpha and below_beta
    return above_alpha or below_beta


# ---------------------------------------------------------------------------
# Double-coset keys


def _concat(x, y):
    i, j = len(x), 0
    n = len(y)
    while i > 0 and j < n and x[i - 1] == INVERSE[y[j]]:
        i -= 1
        j += 1
    return x[:i] + y[j:]


# Alphabet-order comparison via translation to naturally ordered bytes.
_ORDER_TR = str.maketrans("aAbB", "0123")


def _wkey(letters):
    return (len(letters), letters.translate(_ORDER_TR))


class _Powers:
    """Cached reduced spellings of w^p."""

    def __init__(self, w):
        self.w = w
        self.wi = invert_letters(w)

    def __call__(self, p):
        if p >= 0:
            return self.w * p
        return self.wi * (-p)


def double_coset_key(g_letters, word, window=3):
    """Canonical spelling of the folded class {w^p g^{+-1} w^q}.

    Greedy length descent to a locally minimal representative, then an
    exhaustive scan of the +-window power box around it; with w
    cyclically reduced, junction cancellation at a local minimum is at
    most half a period per side, which confines every globally minimal
    element to the +-2 box (the window adds margin).  The key is the
    length-then-lex minimum over both the element and its inverse
    families, so it is independent of which spelling was found.
    """
    w = word.letters if isinstance(word, CyclicWord) else word
    powers = _Powers(w)
    best = None
    best_key = None
    for start in (g_letters, invert_letters(g_letters)):
        u = _reduce_mod_powers(start, powers)
        if u == "":
            raise InCyclicSubgroup(f"{g_letters!r} lies in the cyclic group of {w!r}")
        for p in range(-window, window + 1):
            left = _concat(powers(p), u)
            for q in range(-window, window + 1):
                m = _concat(left, powers(q))
                if m == "":
                    raise InCyclicSubgroup(
                        f"{g_letters!r} lies in the cyclic group of {w!r}"
                    )
                if best is not None and len(m) > len(best):
                    continue
                key = _wkey(m)
                if best is None or key < best_key:
                    best, best_key = m, key
    return best


def _reduce_mod_powers(g, powers):
    cur = g
    while True:
        shorter = None
        for cand in (_concat(powers(1), cur), _concat(powers(-1), cur),
                     _concat(cur, powers(1)), _concat(cur, powers(-1))):
            if len(cand) < len(cur) and (shorter is None or len(cand) < len(shorter)):
                shorter = cand
        if shorter is None:
            return cur
        cur = shorter


# ---------------------------------------------------------------------------
# The linked-class search


class _WordGeometry:
    def __init__(self, word: CyclicWord):
        w = word.letters
        self.word = word
        self.letters = w
        self.length = len(w)
        self.matrix = evaluate_letters(w)
        self.base_axis = _axis_triple(self.matrix)
        rotations = [w[m:] + w[:m] for m in range(1, len(w))]
        self.rot_axes = [_axis_triple(evaluate_letters(r)) for r in rotations]
        # Rotation m's axis endpoints live in I(w[m]) (forward word) and
        # I(inv(w[m-1])) (reversed word); only endpoints in I(inv(t)) can
        # escape P(u) for a node ending in t.
        self.escape = {
            t: [m for m in range(1, len(w))
                if w[m] == INVERSE[t] or w[m - 1] == t]
            for t in ALPHABET
        }

    def linked(self, conj_axis):
        if conj_axis == self.base_axis:
            return None  # conjugator stabilizes the axis: in <w>
        return axes_cross_tuples(self.base_axis, conj_axis)


def _linked_spellings(geo: _WordGeometry, max_depth):
    """Reduced conjugator words g, |g| <= max_depth, whose conjugate axis
    links the base axis.

    The prune may skip longer redundant spellings of a class whose
    shorter spelling was already visited (elements u w^p of a visited
    coset u<w>), but a class's minimal spelling is never pruned: per
    radius, the set of linked classes and their minimal spelling lengths
    agree exactly with the unpruned Cayley-ball scan."""
    base = geo.base_axis
    found = []
    gens = {t: evaluate_letters(t) for t in ALPHABET}
    stack = [(t, gens[t], 1) for t in reversed(ALPHABET)]
    while stack:
        letters, m, depth = stack.pop()
        tail = letters[-1]
        conj = _norm3(*axis_pushforward(m, base))
        is_linked = geo.linked(conj)
        if is_linked:
            found.append(letters)
        if depth >= max_depth:
            continue
        arc = (_apply_proj(m, _COMP_ARC[tail][0]), _apply_proj(m, _COMP_ARC[tail][1]))
        descend = (_root_in_arc(base, 1, arc) or _root_in_arc(base, -1, arc))
        if not descend:
            for rot_m in geo.escape[tail]:
                pushed = _norm3(*axis_pushforward(m, geo.rot_axes[rot_m - 1]))
                if pushed != base and axes_cross_tuples(base, pushed):
                    descend = True
                    break
        if not descend:
            continue
        for t in ALPHABET:
            if t != INVERSE[tail]:
                stack.append((letters + t, mat_mul(m, gens[t]), depth + 1))
    return found


def _linked_spellings_naive(geo: _WordGeometry, max_depth):
    """Unpruned Cayley-ball scan; test reference for the pruned search."""
    found = []
    gens = {t: evaluate_letters(t) for t in ALPHABET}
    stack = [(t, gens[t], 1) for t in reversed(ALPHABET)]
    base = geo.base_axis
    while stack:
        letters, m, depth = stack.pop()
        conj = _norm3(*axis_pushforward(m, base))
        if geo.linked(conj):
            found.append(letters)
        if depth < max_depth:
            for t in ALPHABET:
                if t != INVERSE[letters[-1]]:
                    stack.append((letters + t, mat_mul(m, gens[t]), depth + 1))
    return found


@dataclass(frozen=True)
class IntersectionConfig:
    start_radius: int = None   # default: word length + 1
    max_radius: int = None     # default: max(2*length + 8, 14)
    stable_span: int = 3       # consecutive radii that must agree
    key_window: int = 3

    def resolved(self, word_length):
        start = self.start_radius or word_length + 1
        cap = self.max_radius or max(2 * word_length + 8, 14)
        return start, max(cap, start + self.stable_span - 1)


@dataclass(frozen=True)
class IntersectionResult:
    count: int
    radius_used: int
    certified: bool
    word: str
    key_window: int

    def as_dict(self):
        return {
            "count": self.count,
            "radius_used": self.radius_used,
            "certified": self.certified,
            "word": self.word,
            "key_window": self.key_window,
        }


def self_intersection(word: CyclicWord, config: IntersectionConfig = None) -> IntersectionResult:
    """Certified self-intersection count of the closed geodesic of a
    primitive hyperbolic class.

    Folded double-coset keys of linked conjugators are collected over
    Cayley balls of growing radius; the count is certified when it is
    identical at `stable_span` consecutive radii.  Certified means
    stable under the configured growth, not proven complete; the
    fundamental-domain validator is the compensating control.
    """
    config = config or IntersectionConfig()
    m = evaluate_letters(word.letters)
    if abs(m[0] + m[3]) <= 2:
        raise NotHyperbolic(f"{word} is peripheral (trace {m[0] + m[3]})")
    if not is_primitive_letters(word.letters):
        raise NotPrimitive(f"{word} is a proper power")
    geo = _WordGeometry(word)
    start, cap = config.resolved(geo.length)
    span = config.stable_span
    depth = min(start + span - 1, cap)
    key_cache = {}
    while True:
        spellings = _linked_spellings(geo, depth)
        min_radius = {}
        for g in spellings:
            key = key_cache.get(g)
            if key is None:
                key = double_coset_key(g, word, config.key_window)
                key_cache[g] = key
            r = min_radius.get(key)
            if r is None or len(g) < r:
                min_radius[key] = len(g)
        radii = sorted(min_radius.values())

        def count_at(r):
            return sum(1 for v in radii if v <= r)

        for r in range(start, depth - span + 2):
            c = count_at(r)
            if all(count_at(r + i) == c for i in range(1, span)):
                return IntersectionResult(c, r, True, word.letters, config.key_window)
        if depth >= cap:
            return IntersectionResult(count_at(depth), depth, False,
                                      word.letters, config.key_window)
        depth = min(depth + 2, cap)


# ---------------------------------------------------------------------------
# Fundamental-domain validator


def crossing_oracle(word: CyclicWord, ctx: PrecisionContext = None) -> int:
    """Count self-intersections by unfolding one period into the ideal
    quadrilateral fundamental domain (vertices inf, -1, 0, 1).

    One period decomposes into the F-arcs of the rotation conjugates'
    axes; each self-intersection appears as exactly one pair of those
    axes meeting inside F.  Meeting points of integer-coefficient axes
    have rational coordinates (x, y^2), so membership in F, including
    the half-open boundary rule, is decided exactly: points on the
    paired images (Re z = 1 and the right side circle) belong to the
    neighboring copy.  The ctx argument is accepted for interface
    symmetry; no step of the computation rounds.
    """
    _ = ctx
    m = evaluate_letters(word.letters)
    if abs(m[0] + m[3]) <= 2:
        raise NotHyperbolic(f"{word} is peripheral (trace {m[0] + m[3]})")
    if not is_primitive_letters(word.letters):
        raise NotPrimitive(f"{word} is a proper power")
    w = word.letters
    axes = [_axis_triple(evaluate_letters(w[m:] + w[:m])) for m in range(len(w))]
    if len(set(axes)) != len(axes):
        raise AssertionError(f"repeated rotation axis for {word}; broken geometry")
    count = 0
    for i in range(len(axes)):
        for j in range(i + 1, len(axes)):
            if not axes_cross_tuples(axes[i], axes[j]):
                continue
            if _meeting_point_in_domain(axes[i], axes[j]):
                count += 1
    return count


def _meeting_point_in_domain(x, y):
    """Exact test: does the meeting point of two linked axes lie in the
    fundamental domain (boundary rule: keep Re z = -1 and the left side
    circle, exclude their paired images)?"""
    A1, B1, C1 = x
    A2, B2, C2 = y
    den = A2 * B1 - A1 * B2
    if den == 0:
        raise DegenerateAxes("linked axes with concentric half-circles")
    px = Fraction(A1 * C2 - A2 * C1, den)
    # Circle A z zbar + B Re z + C = 0 gives y^2 = -(A x^2 + B x + C)/A.
    y2 = -(px * px) - Fraction(B1, A1) * px - Fraction(C1, A1)
    if y2 <= 0:
        raise AssertionError("linked axes must meet above the real line")
    if not (-1 <= px < 1):
        return False
    left = (px + Fraction(1, 2)) ** 2 + y2   # keep boundary
    if left < Fraction(1, 4):
        return False
    right = (px - Fraction(1, 2)) ** 2 + y2  # exclude boundary
    if right <= Fraction(1, 4):
        return False
    return True
