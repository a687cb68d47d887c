import itertools

import pytest

from digroups import samples
from digroups.digroup import (
    FreeDigroup,
    FreeTriple,
    GroupAction,
    PointedSet,
    check_axioms,
    check_laws,
    decompose,
    from_parts,
    group_part,
    halo,
    homomorphisms,
    trivial_digroup,
)
from digroups.errors import InvalidDigroupError, MalformedInputError
from digroups.groups import cyclic_group

Z2G = cyclic_group(2, ("e", "a"))
E2 = PointedSet(("1", "u"))


def names(D, elements):
    return {D.format_element(a) for a in elements}


@pytest.mark.parametrize("make", list(samples.ALL.values()), ids=list(samples.ALL))
def test_samples_pass_axioms(make):
    assert check_axioms(make()).ok


def test_perturbed_z2_fails_with_named_triple():
    D = samples.Z2().with_entry("vdash", 1, 1, 1)
    report = check_axioms(D)
    assert not report.ok
    axiom, triple = next((k, v) for k, v in report.violations.items() if len(v) == 3)
    # confirm the named instance really fails
    a, b, c = triple
    lhs_rhs = {
        "C1-vdash": (D.vdash(D.vdash(a, b), c), D.vdash(a, D.vdash(b, c))),
        "C1-dashv": (D.dashv(D.dashv(a, b), c), D.dashv(a, D.dashv(b, c))),
        "C2": (D.dashv(a, D.vdash(b, c)), D.dashv(a, D.dashv(b, c))),
        "C3": (D.vdash(D.dashv(a, b), c), D.vdash(D.vdash(a, b), c)),
        "C4": (D.vdash(a, D.dashv(b, c)), D.dashv(D.vdash(a, b), c)),
    }[axiom]
    assert lhs_rhs[0] != lhs_rhs[1]


def test_report_lines():
    D = samples.Z2().with_entry("dashv", 0, 1, 0)
    lines = check_axioms(D).lines(D.format_element)
    assert lines and all(": fails at (" in l for l in lines)
    assert check_axioms(samples.T2()).lines() == ["pass"]


def test_group_part_and_halo_examples():
    T, Z, W = samples.T2(), samples.Z2(), samples.W4()
    assert names(T, group_part(T)) == {"e"}
    assert names(T, halo(T)) == {"e", "t"}
    assert names(Z, group_part(Z)) == {"e", "a"}
    assert names(Z, halo(Z)) == {"e"}
    assert names(W, group_part(W)) == {"(1,e)", "(1,a)"}
    assert names(W, halo(W)) == {"(1,e)", "(u,e)"}


@pytest.mark.parametrize("make", list(samples.ALL.values()), ids=list(samples.ALL))
def test_group_part_is_a_group_with_equal_operations(make):
    D = make()
    J = group_part(D)
    for a, b in itertools.product(J, repeat=2):
        assert D.vdash(a, b) == D.dashv(a, b) in J
    for a, b, c in itertools.product(J, repeat=3):
        assert D.vdash(D.vdash(a, b), c) == D.vdash(a, D.vdash(b, c))
    for a in J:
        assert D.inverse(a) in J
    for a in D.elements():
        assert D.sharp(D.sharp(a)) == D.sharp(a)
        assert D.in_group_part(a) == (a in J)


def test_from_parts_degenerate_cases():
    D = from_parts(PointedSet(("1",)), Z2G, GroupAction.trivial(Z2G, PointedSet(("1",))))
    assert check_axioms(D).ok and len(halo(D)) == 1 and len(group_part(D)) == 2
    assert D.vdash_table == D.dashv_table  # a group
    one = cyclic_group(1, ("e",))
    D = from_parts(E2, one, GroupAction.trivial(one, E2))
    T = trivial_digroup(E2)
    assert (D.vdash_table, D.dashv_table) == (T.vdash_table, T.dashv_table)


def test_from_parts_rejects_bad_actions():
    with pytest.raises(MalformedInputError):
        from_parts(E2, Z2G, GroupAction([[0, 1], [1, 0]]))  # moves the basepoint
    E3 = PointedSet(("1", "u", "v"))
    with pytest.raises(MalformedInputError):
        from_parts(E3, Z2G, GroupAction([[0, 1, 2], [0, 1, 1]]))


@pytest.mark.parametrize("make", list(samples.ALL.values()), ids=list(samples.ALL))
def test_decompose_verifies_isomorphism(make):
    D = make()
    dec = decompose(D)
    assert len(dec.halo) * len(dec.group) == len(D)
    assert sorted(dec.iso) == list(range(len(D)))
    M = dec.model
    for a, b in itertools.product(D.elements(), repeat=2):
        assert dec.iso[D.vdash(a, b)] == M.vdash(dec.iso[a], dec.iso[b])
        assert dec.iso[D.dashv(a, b)] == M.dashv(dec.iso[a], dec.iso[b])


def test_decompose_examples():
    dec = decompose(samples.Z2())
    assert len(dec.halo) == 1 and len(dec.group) == 2
    dec = decompose(samples.T2())
    assert dec.halo.names == ("e", "t") and len(dec.group) == 1


def test_decompose_round_trip_recovers_action():
    E = PointedSet(("1", "u", "v"))
    act = GroupAction([[0, 1, 2], [0, 2, 1]])
    D = from_parts(E, Z2G, act)
    dec = decompose(D)
    # J elements are (1,h), halo elements (v,e); the recovered action must match
    j_h = [D.format_element(a) for a in dec.group_elements]
    e_v = [D.format_element(a) for a in dec.halo_elements]
    assert j_h == ["(1,e)", "(1,a)"] and e_v == ["(1,e)", "(u,e)", "(v,e)"]
    assert dec.action.table == act.table


def test_decompose_rejects_invalid():
    with pytest.raises(InvalidDigroupError):
        decompose(samples.Z2().with_entry("vdash", 1, 1, 1))


def test_trivial_digroup():
    D = trivial_digroup(PointedSet(("e",)))
    assert len(D) == 1 and check_axioms(D).ok
    D = trivial_digroup(PointedSet(("e", "t", "s")))
    assert check_axioms(D).ok
    assert halo(D) == [0, 1, 2] and group_part(D) == [0]


def test_homomorphisms_from_t2():
    assert len(homomorphisms(samples.T2(), samples.Z2())) == 1
    assert len(homomorphisms(samples.T2(), samples.T2())) == 2


# -- free digroup ----------------------------------------------------------

F = FreeDigroup("xy")
x, X_, y = ("x", 1), ("x", -1), ("y", 1)


def test_free_digroup_examples():
    gx = F.generator("x")
    assert F.sharp(gx) == (x,)
    assert F.dashv(gx, (X_,)) == FreeTriple((), "x", (X_,))
    # two-step evaluation of the same product
    assert F.dashv(F.dashv(gx, (X_,)), ()) == F.dashv(gx, F.dashv((X_,), ()))
    assert F.vdash(gx, F.generator("y")) == FreeTriple((x,), "y", ())
    assert F.inverse(FreeTriple((y,), "x", ())) == (X_, ("y", -1))


def test_free_digroup_laws_bounded():
    F1 = FreeDigroup("x")
    report = check_laws(F1, F1.bounded_elements(2))
    assert report.ok, report.violations
    elements = F1.bounded_elements(2)
    assert all(F1.sharp(F1.sharp(a)) == F1.sharp(a) for a in elements)


def test_free_digroup_laws_two_generators():
    assert check_laws(F, F.bounded_elements(1)).ok


def test_free_digroup_names_round_trip():
    for a in F.bounded_elements(2):
        assert F.parse_element(F.format_element(a)) == a
    with pytest.raises(MalformedInputError):
        F.parse_element("<z>")
