"""Cyclic words in the rank-2 free group and their matrix realization.

Words are spelled over a, b (generators) and A, B (their inverses),
no separators.  A conjugacy class of an unoriented closed curve is
represented by the canonical form of its cyclic word: lexicographically
minimal, in the alphabet order a < A < b < B, over all rotations of the
word and of its inverse.

The fixed representation sends a to [[1,2],[0,1]] and b to [[1,0],[2,1]],
the standard generators of the level-2 congruence subgroup; the three
cusp classes are a, b and aB (trace +-2).
"""

from dataclasses import dataclass
from functools import lru_cache

from .errors import TrivialWord
from .moebius import GroupElement, mat_mul, translation_length
from .numerics import PrecisionContext, context

ALPHABET = "aAbB"
INVERSE = {"a": "A", "A": "a", "b": "B", "B": "b"}
ORDER = {"a": 0, "A": 1, "b": 2, "B": 3}
SWAP = {"a": "b", "b": "a", "A": "B", "B": "A"}

GEN_MATRIX = {
    "a": (1, 2, 0, 1),
    "A": (1, -2, 0, 1),
    "b": (1, 0, 2, 1),
    "B": (1, 0, -2, 1),
}


def invert_letters(letters):
    return "".join(INVERSE[x] for x in reversed(letters))


def free_reduce(letters):
    out = []
    for x in letters:
        if out and out[-1] == INVERSE[x]:
            out.pop()
        else:
            out.append(x)
    return "".join(out)


def cyclic_reduce(letters):
    i, j = 0, len(letters)
    while j - i >= 2 and letters[i] == INVERSE[letters[j - 1]]:
        i += 1
        j -= 1
    return letters[i:j]


def _order_key(letters):
    return tuple(ORDER[x] for x in letters)


def _min_rotation(letters):
    n = len(letters)
    doubled = letters + letters
    best = letters
    best_key = _order_key(letters)
    for i in range(1, n):
        cand = doubled[i:i + n]
        key = _order_key(cand)
        if key < best_key:
            best, best_key = cand, key
    return best


def canonical_form(letters, fold_swap=False):
    """Canonical spelling of the conjugacy class of an unoriented curve.

    Free-reduce, cyclically reduce, then minimize over rotations of the
    word and of its inverse.  With fold_swap, additionally minimize over
    the a<->b relabeling (the symmetry of the surface permuting cusps).
    """
    word = cyclic_reduce(free_reduce(letters))
    if not word:
        raise TrivialWord(f"word {letters!r} reduces to the identity")
    candidates = [_min_rotation(word), _min_rotation(invert_letters(word))]
    if fold_swap:
        swapped = "".join(SWAP[x] for x in word)
        candidates.append(_min_rotation(swapped))
        candidates.append(_min_rotation(invert_letters(swapped)))
    return min(candidates, key=_order_key)


def _validate_letters(letters):
    for x in letters:
        if x not in INVERSE:
            raise ValueError(f"invalid letter {x!r}; alphabet is a, A, b, B")


@dataclass(frozen=True)
class CyclicWord:
    """A cyclically reduced word stored in canonical form."""

    letters: str

    def __post_init__(self):
        _validate_letters(self.letters)
        canon = canonical_form(self.letters)
        object.__setattr__(self, "letters", canon)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return self.letters

    def rotations(self):
        n = len(self.letters)
        doubled = self.letters + self.letters
        return [doubled[i:i + n] for i in range(n)]

    def inverse_letters(self):
        return invert_letters(self.letters)


def canonicalize(letters) -> CyclicWord:
    return CyclicWord(letters)


def evaluate_letters(letters):
    """Raw matrix tuple of a letter string (no canonicalization)."""
    m = (1, 0, 0, 1)
    for x in letters:
        m = mat_mul(m, GEN_MATRIX[x])
    return m


def evaluate(word: CyclicWord) -> GroupElement:
    return GroupElement(*evaluate_letters(word.letters))


def is_primitive_letters(letters):
    """True iff the cyclic word is not a proper power of a shorter word."""
    n = len(letters)
    for p in range(1, n):
        if n % p == 0 and letters[:p] * (n // p) == letters:
            return False
    return True


PERIPHERAL_CLASSES = ("a", "b", "aB")


def back_winding_shape(word: CyclicWord):
    """Detect the (cusp-class, k) shape: one letter times the k-th power
    of a peripheral class.  Syntactic detection; returns None if the
    canonical form does not literally match any such product.
    """
    w = word.letters
    n = len(w)
    for x in PERIPHERAL_CLASSES:
        if (n - 1) % len(x) != 0:
            continue
        k = (n - 1) // len(x)
        if k < 1:
            continue
        for y in ALPHABET:
            if len(x) == 1 and y in (x, INVERSE[x]):
                continue  # y must not be a power of x
            try:
                cand = canonical_form(y + x * k)
            except TrivialWord:
                continue
            if cand == w:
                return (x, k)
    return None


@dataclass(frozen=True)
class WordClassification:
    kind: str            # "peripheral" | "hyperbolic"
    primitive: bool
    trace: int
    length: object       # mpf, None for peripheral classes
    bacK_shape: object   # (cusp-class, k) or None


def classify_word(word: CyclicWord, ctx: PrecisionContext = None) -> WordClassification:
    """Trace classification plus primitivity and shape detection.

    The trace is the raw SL(2) trace of the canonical spelling (well
    defined on the class: invariant under rotation and inversion), so
    its sign is meaningful and reproducible.  |trace| < 2 cannot occur
    for a nonempty reduced word in a discrete torsion-free group; it is
    reported as a hard internal error.
    """
    ctx = ctx or context()
    m = evaluate_letters(word.letters)
    trace = m[0] + m[3]
    if abs(trace) < 2:
        raise AssertionError(
            f"elliptic trace {trace} for word {word}; broken representation"
        )
    primitive = is_primitive_letters(word.letters)
    if abs(trace) == 2:
        return WordClassification("peripheral", primitive, trace, None, None)
    length = translation_length(abs(trace), ctx)
    return WordClassification(
        "hyperbolic", primitive, trace, length, back_winding_shape(word)
    )


@lru_cache(maxsize=None)
def _trace_of(letters):
    m = evaluate_letters(letters)
    return m[0] + m[3]


def _canonical_candidates(max_len):
    """All canonical cyclic words of length <= max_len, in (length, lex)
    order.

    Any canonical word containing an a or A letter-class starts with 'a'
    (some rotation of it or of its inverse does, and that rotation is
    smaller); the only classes avoiding the a-class entirely are the
    powers of b.  So it suffices to scan reduced strings starting with
    'a' plus the b-power family.
    """
    for n in range(1, max_len + 1):
        words = sorted(_a_headed_canonicals(n), key=_order_key)
        emitted = False
        for w in words:
            if not emitted and _order_key("b" * n) < _order_key(w):
                yield "b" * n
                emitted = True
            yield w
        if not emitted:
            yield "b" * n


def _a_headed_canonicals(n):
    out = []
    stack = [("a",)]
    while stack:
        prefix = stack.pop()
        if len(prefix) == n:
            word = "".join(prefix)
            if n > 1 and word[0] == INVERSE[word[-1]]:
                continue
            if canonical_form(word) == word:
                out.append(word)
            continue
        for x in ALPHABET:
            if x != INVERSE[prefix[-1]]:
                stack.append(prefix + (x,))
    return out


def enumerate_words(max_len, word_filter="all"):
    """Stream canonical cyclic words of length <= max_len, deterministic
    order (length ascending, then lexicographic in a < A < b < B).

    word_filter: "all" | "hyperbolic" | "hyperbolic-primitive".
    """
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    if word_filter not in ("all", "hyperbolic", "hyperbolic-primitive"):
        raise ValueError(f"unknown filter {word_filter!r}")
    for letters in _canonical_candidates(max_len):
        if word_filter == "all":
            yield CyclicWord(letters)
            continue
        if abs(_trace_of(letters)) <= 2:
            continue
        if word_filter == "hyperbolic-primitive" and not is_primitive_letters(letters):
            continue
        yield CyclicWord(letters)
