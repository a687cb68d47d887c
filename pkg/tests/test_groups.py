import itertools
import random

import pytest
from hypothesis import given, strategies as st

from digroups.errors import MalformedInputError
from digroups.groups import (
    FiniteGroup,
    FreeGroup,
    cyclic_group,
    fp_group_inv,
    fp_group_mul,
    fp_group_reduce,
    fp_group_words,
    free_group_inv,
    free_group_mul,
    free_group_reduce,
)

Z2 = cyclic_group(2, ("e", "a"))
Z3 = cyclic_group(3)
V4 = FiniteGroup([[a ^ b for b in range(4)] for a in range(4)], 0)
PAIR = (Z2, Z2)
a, b = (1, 1), (2, 1)


def naive_reduce(raw, groups, rng):
    """Merge or drop at a randomly chosen spot until nothing applies."""
    word = list(raw)
    while True:
        moves = [("drop", i) for i, (f, x) in enumerate(word) if x == groups[f - 1].identity]
        moves += [("merge", i) for i in range(len(word) - 1) if word[i][0] == word[i + 1][0]]
        if not moves:
            return tuple(word)
        kind, i = rng.choice(moves)
        if kind == "drop":
            del word[i]
        else:
            f = word[i][0]
            word[i:i + 2] = [(f, groups[f - 1].mul(word[i][1], word[i + 1][1]))]


def test_reduce_examples():
    assert fp_group_reduce([a, b], PAIR) == (a, b)
    assert fp_group_reduce([a, a], PAIR) == ()
    assert fp_group_reduce([a, b, b, a], PAIR) == ()


def test_reduce_matches_naive_merges_exhaustively():
    rng = random.Random(0)
    letters = [(f, x) for f in (1, 2) for x in range(2)]
    for n in range(5):
        for raw in itertools.product(letters, repeat=n):
            assert fp_group_reduce(raw, PAIR) == naive_reduce(raw, PAIR, rng)


@pytest.mark.parametrize("seed", range(5))
def test_reduce_confluent_random_orders(seed):
    rng = random.Random(seed)
    groups = (Z3, V4)
    for _ in range(300):
        raw = [(f, rng.randrange(len(groups[f - 1]))) for f in (rng.choice((1, 2)) for _ in range(rng.randrange(9)))]
        expected = fp_group_reduce(raw, groups)
        assert fp_group_reduce(expected, groups) == expected
        for _ in range(3):
            assert naive_reduce(raw, groups, rng) == expected


def test_reduce_rejects_bad_letters():
    with pytest.raises(MalformedInputError):
        fp_group_reduce([(1, 5)], PAIR)
    with pytest.raises(MalformedInputError):
        fp_group_reduce([(3, 0)], PAIR)


def test_mul_examples():
    assert fp_group_mul((a, b), (), PAIR) == (a, b)
    assert fp_group_mul((a, b), (b,), PAIR) == (a,)
    assert fp_group_mul((a,), (b,), PAIR) == (a, b)


def test_inv_examples():
    assert fp_group_inv((), PAIR) == ()
    assert fp_group_inv((a, b), PAIR) == (b, a)
    assert fp_group_mul((a, b), (b, a), PAIR) == ()
    assert fp_group_inv((a,), PAIR) == (a,)


@pytest.mark.parametrize("groups", [(Z2, Z3), (Z3, V4), (V4, Z2)])
def test_free_product_group_axioms(groups):
    words = list(fp_group_words(groups, 3))
    for u in words:
        assert fp_group_mul(u, (), groups) == u == fp_group_mul((), u, groups)
        inv = fp_group_inv(u, groups)
        assert fp_group_mul(u, inv, groups) == () == fp_group_mul(inv, u, groups)
    for u, v in itertools.product(words, repeat=2):
        uv = fp_group_mul(u, v, groups)
        assert len(uv) <= len(u) + len(v)
    small = [w for w in words if len(w) <= 2]
    for u, v, w in itertools.product(small, repeat=3):
        assert fp_group_mul(fp_group_mul(u, v, groups), w, groups) == fp_group_mul(u, fp_group_mul(v, w, groups), groups)


def test_finite_group_validation():
    with pytest.raises(MalformedInputError):
        FiniteGroup([[0, 1], [1, 1]], 0)
    with pytest.raises(MalformedInputError):
        FiniteGroup([[0, 1], [1]], 0)
    assert Z3.inv(1) == 2


X, Xi, Y, Yi = ("x", 1), ("x", -1), ("y", 1), ("y", -1)


def stack_free_reduce(raw):
    s = "".join(sym if e == 1 else sym.upper() for sym, e in raw)
    changed = True
    while changed:
        changed = False
        for i in range(len(s) - 1):
            if s[i] != s[i + 1] and s[i].lower() == s[i + 1].lower():
                s = s[:i] + s[i + 2:]
                changed = True
                break
    return tuple((c.lower(), 1 if c.islower() else -1) for c in s)


def test_free_group_examples():
    assert free_group_reduce([X, Xi]) == ()
    assert free_group_reduce([X, Y, Yi]) == (X,)
    assert free_group_mul((X, Y), (Yi, X)) == (X, X)
    assert free_group_mul((X, Y), (Yi, X)) == stack_free_reduce([X, Y, Yi, X])


letters = st.sampled_from([X, Xi, Y, Yi])


@given(st.lists(letters, max_size=12))
def test_free_reduce_agrees_with_string_cancellation(raw):
    assert free_group_reduce(raw) == stack_free_reduce(raw)


@given(st.lists(letters, max_size=6), st.lists(letters, max_size=6))
def test_free_group_inverse_and_length(u, v):
    u, v = free_group_reduce(u), free_group_reduce(v)
    assert free_group_mul(u, free_group_inv(u)) == ()
    assert len(free_group_mul(u, v)) <= len(u) + len(v)


def test_free_group_words_are_reduced():
    F = FreeGroup("xy")
    words = F.words(3)
    assert len(words) == 1 + 4 + 12 + 36
    assert all(F.contains(w) for w in words)
