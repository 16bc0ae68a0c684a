import random

import pytest

from geoforge.errors import InCyclicSubgroup, NotHyperbolic, NotPrimitive
from geoforge.intersect import (
    IntersectionConfig,
    _linked_spellings,
    _linked_spellings_naive,
    _WordGeometry,
    crossing_oracle,
    double_coset_key,
    self_intersection,
)
from geoforge.words import (
    ALPHABET,
    CyclicWord,
    canonicalize,
    enumerate_words,
    free_reduce,
    invert_letters,
)


def test_figure_eight():
    r = self_intersection(CyclicWord("ab"))
    assert (r.count, r.certified) == (1, True)
    assert crossing_oracle(CyclicWord("ab")) == 1


def test_cusp_winding_family_small():
    for k in (1, 2, 3):
        w = CyclicWord("b" + "a" * k)
        r = self_intersection(w)
        assert (r.count, r.certified) == (k, True)
        assert crossing_oracle(w) == k


def test_aabb():
    w = CyclicWord("aabb")
    r = self_intersection(w)
    assert r.certified and r.count == 3  # frozen after oracle cross-validation
    assert crossing_oracle(w) == 3


def test_preconditions():
    with pytest.raises(NotHyperbolic):
        self_intersection(CyclicWord("aB"))
    with pytest.raises(NotPrimitive):
        self_intersection(CyclicWord("abab"))
    with pytest.raises(NotHyperbolic):
        crossing_oracle(CyclicWord("a"))
    with pytest.raises(NotPrimitive):
        crossing_oracle(CyclicWord("abab"))


def test_double_coset_key_examples():
    w = CyclicWord("ab")
    # stripping one leading w
    assert double_coset_key("ab" + "b", w) == double_coset_key("b", w)
    # sandwiching by w
    assert double_coset_key("b", w) == double_coset_key("ab" + "b" + "ab", w)
    assert double_coset_key("b", w) == double_coset_key("aba", w)
    with pytest.raises(InCyclicSubgroup):
        double_coset_key("ab", w)
    with pytest.raises(InCyclicSubgroup):
        double_coset_key("abab", w)


def test_double_coset_key_invariance_randomized():
    rng = random.Random(21)
    words = list(enumerate_words(6, "hyperbolic-primitive"))
    from geoforge.intersect import _concat, _Powers
    checked = 0
    while checked < 300:
        w = rng.choice(words)
        powers = _Powers(w.letters)
        g = free_reduce("".join(rng.choice(ALPHABET) for _ in range(rng.randint(1, 9))))
        if not g:
            continue
        try:
            k0 = double_coset_key(g, w)
        except InCyclicSubgroup:
            continue
        p, q = rng.randint(-6, 6), rng.randint(-6, 6)
        g2 = _concat(_concat(powers(p), g), powers(q))
        if not g2:
            continue
        assert double_coset_key(g2, w) == k0
        assert double_coset_key(invert_letters(g2), w) == k0
        checked += 1


def class_minima(word, spellings):
    out = {}
    for g in spellings:
        k = double_coset_key(g, word)
        if k not in out or len(g) < out[k]:
            out[k] = len(g)
    return out


def test_pruned_search_equals_naive_ball():
    for w in enumerate_words(4, "hyperbolic-primitive"):
        geo = _WordGeometry(w)
        for depth in (5, 7):
            fast = class_minima(w, _linked_spellings(geo, depth))
            slow = class_minima(w, _linked_spellings_naive(geo, depth))
            assert fast == slow, (w.letters, depth)


def test_counts_monotone_in_radius():
    w = CyclicWord("baaa")
    geo = _WordGeometry(w)
    counts = []
    for depth in range(2, 10):
        counts.append(len(class_minima(w, _linked_spellings(geo, depth))))
    assert counts == sorted(counts)


def test_radius_exhaustion_is_flagged_not_raised():
    # classes of a^m also carry short spellings B A^(8-m), so the ball
    # must be cut very short to leave the count unstabilized
    w = CyclicWord("b" + "a" * 8)
    r = self_intersection(w, IntersectionConfig(start_radius=1, max_radius=2))
    assert not r.certified
    assert r.count < 8  # partial count at the capped radius
    full = self_intersection(w)
    assert full.certified and full.count == 8


def test_invariance_under_spelling():
    rng = random.Random(31)
    words = [w for w in enumerate_words(6, "hyperbolic-primitive")]
    for w in rng.sample(words, 12):
        base = self_intersection(w).count
        rotated = w.letters[2 % len(w.letters):] + w.letters[:2 % len(w.letters)]
        assert self_intersection(canonicalize(rotated)).count == base
        assert self_intersection(canonicalize(w.inverse_letters())).count == base
        g = "".join(rng.choice(ALPHABET) for _ in range(3))
        conj = g + w.letters + invert_letters(g)
        assert self_intersection(canonicalize(conj)).count == base


def test_every_hyperbolic_class_on_y_self_intersects():
    # no simple closed geodesics on the thrice punctured sphere
    for w in enumerate_words(5, "hyperbolic-primitive"):
        r = self_intersection(w)
        assert r.certified and r.count >= 1


def test_result_dict():
    d = self_intersection(CyclicWord("ab")).as_dict()
    assert d["count"] == 1 and d["certified"] is True and d["word"] == "ab"
