"""Small digroups used as fixtures by the tests and the ``selftest`` command."""

from .digroup import GroupAction, PointedSet, from_parts, group_as_digroup, trivial_digroup
from .groups import cyclic_group


def T2():
    return _named(trivial_digroup(PointedSet(("e", "t"))), "T2")


def T3():
    return _named(trivial_digroup(PointedSet(("e", "s", "t"))), "T3")


def Z2(names=("e", "a")):
    return group_as_digroup(cyclic_group(2, names), "Z2")


def Z3(names=("e", "a", "a2")):
    return group_as_digroup(cyclic_group(3, names), "Z3")


def W4():
    """E = {1, u} with Z2 = {e, a} acting trivially."""
    J = cyclic_group(2, ("e", "a"))
    E = PointedSet(("1", "u"))
    return _named(from_parts(E, J, GroupAction.trivial(J, E)), "W4")


def W6():
    """E = {1, u, v} with Z2 = {e, a}; a swaps u and v."""
    J = cyclic_group(2, ("e", "a"))
    E = PointedSet(("1", "u", "v"))
    return _named(from_parts(E, J, GroupAction([[0, 1, 2], [0, 2, 1]])), "W6")


def _named(D, name):
    D.name = name
    return D


ALL = {"T2": T2, "T3": T3, "Z2": Z2, "Z3": Z3, "W4": W4, "W6": W6}
