import pytest

from digroups import samples
from digroups.digroup import PointedSet, trivial_digroup
from digroups.errors import BoundExceededError, MalformedInputError
from digroups.oracle import Presentation, build_classes, decide_equal, rewrite_moves, universe_size
from digroups.pointed import parse_pointed as pw


@pytest.fixture(scope="module")
def P():
    return Presentation(samples.T2(), samples.Z2(("f", "b")))


def contractions(P, text):
    return {v for _, v in P.contractions(pw(text))}


def test_alphabet(P):
    assert P.alphabet == ["e", (1, "t"), (2, "b")]


def test_contraction_examples(P):
    assert contractions(P, "[2.b 2.b @ 1]") == {pw("[e @ 1]")}
    assert pw("[1.t @ 1]") in contractions(P, "[1.t e @ 1]")
    assert pw("[1.t e @ 1]") in contractions(P, "[1.t 2.b 2.b @ 1]")
    assert pw("[e @ 1]") in rewrite_moves(pw("[2.b 2.b @ 1]"), P, 4)


def test_pointer_placement(P):
    # t ⊢ e = e in T2; pointer moves onto the contracted letter
    assert contractions(P, "[1.t e @ 2]") == {pw("[e @ 1]")}
    # pair strictly left of the pointer may use either table
    got = contractions(P, "[1.t e 2.b @ 3]")
    assert {pw("[1.t 2.b @ 2]"), pw("[e 2.b @ 2]")} <= got


def test_expansions_invert_contractions(P):
    for w in [pw("[1.t 2.b @ 2]"), pw("[e @ 1]"), pw("[2.b 1.t 2.b @ 1]")]:
        for _, v in P.expansions(w):
            assert w in {u for _, u in P.contractions(v)}
    for _, v in P.contractions(pw("[2.b 1.t e @ 1]")):
        assert any(u == pw("[2.b 1.t e @ 1]") for _, u in P.expansions(v))


def test_rewrite_moves_respects_length_bound(P):
    w = pw("[1.t 2.b 1.t 2.b 1.t 2.b @ 1]")
    assert all(len(v) < len(w) for v in rewrite_moves(w, P, 4, slack=2))
    assert any(len(v) > 1 for v in rewrite_moves(pw("[1.t @ 1]"), P, 4))
    with pytest.raises(MalformedInputError):
        rewrite_moves(pw("[x @ 1]"), P, 4)


def test_class_table_t2_z2(P):
    table = build_classes(P, 4)
    assert universe_size(3, 4) == 3 + 2 * 9 + 3 * 27 + 4 * 81 == 426
    assert table.stats["words"] == 426
    # frozen regression value, computed by this oracle
    assert table.stats["classes"] == 6
    assert sum(len(c) for c in table.classes()) == 426


def test_class_count_z2_z2_matches_reduced_word_count():
    # alternating words in a, b of length <= 4: 1 + 2 * 4
    table = build_classes(Presentation(samples.Z2(), samples.Z2(("f", "b"))), 4)
    assert table.stats["classes"] == 9


def test_single_trivial_factor():
    P1 = Presentation(samples.T2(), trivial_digroup(PointedSet(("f",))))
    assert decide_equal(pw("[1.t 1.t @ 1]"), pw("[1.t @ 1]"), P1, 2)


def test_decide_equal_examples(P):
    assert decide_equal(pw("[1.t 2.b 2.b @ 1]"), pw("[1.t @ 1]"), P, 4)
    assert not decide_equal(pw("[2.b @ 1]"), pw("[e @ 1]"), P, 4)
    assert decide_equal(pw("[e @ 1]"), pw("[e e @ 2]"), P, 4)
    w = pw("[2.b 1.t 2.b @ 2]")
    assert decide_equal(w, w, P, 4)
    with pytest.raises(MalformedInputError):
        decide_equal(pw("[e e e @ 1]"), w, P, 2)


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_deterministic_under_union_order(P, seed):
    assert build_classes(P, 3, order_seed=seed).class_of == build_classes(P, 3).class_of


def test_bound_exceeded(P):
    with pytest.raises(BoundExceededError) as info:
        build_classes(P, 50)
    assert info.value.stats["max_len"] == 50
