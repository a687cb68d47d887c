"""Digroups: table-defined finite digroups, axiom checking, the group part
and halo, Kinyon's E x J model, trivial digroups and the free digroup.

Operations are written ``vdash(a, b)`` for a ⊢ b and ``dashv(a, b)`` for
a ⊣ b.
"""

from __future__ import annotations

import itertools
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import InvalidDigroupError, MalformedInputError
from .groups import (
    FiniteGroup,
    FreeGroup,
    format_free_word,
    free_group_inv,
    free_group_mul,
    free_group_reduce,
    parse_free_word,
)

AXIOMS = ("C1-vdash", "C1-dashv", "C2", "C3", "C4", "bar-unit", "inverse")


class Digroup(ABC):
    """Common surface of every digroup realization.

    Subclasses supply the two operations, the bar-unit and inverses;
    ``sharp`` and ``in_group_part`` follow from those.
    """

    @property
    @abstractmethod
    def bar_unit(self): ...

    @abstractmethod
    def vdash(self, a, b): ...

    @abstractmethod
    def dashv(self, a, b): ...

    @abstractmethod
    def inverse(self, a): ...

    def sharp(self, a):
        return self.vdash(a, self.bar_unit)

    def in_group_part(self, a):
        return self.sharp(a) == a

    def elements(self):
        """The carrier as a sequence, or ``None`` when it is infinite."""
        return None

    def format_element(self, a) -> str:
        return str(a)

    def parse_element(self, text: str):
        raise MalformedInputError(f"{type(self).__name__} cannot parse element names")

    def group_view(self):
        """The group part as an object with ``mul``/``inv``/``identity``/``contains``."""
        return GroupPartView(self)


class GroupPartView:
    """The group part J of a digroup, whose elements are carrier elements."""

    def __init__(self, digroup):
        self.digroup = digroup
        self.identity = digroup.bar_unit

    def mul(self, a, b):
        return self.digroup.vdash(a, b)

    def inv(self, a):
        return self.digroup.inverse(a)

    def contains(self, a):
        try:
            return self.digroup.in_group_part(a)
        except (IndexError, TypeError, KeyError):
            return False


@dataclass
class AxiomReport:
    """Outcome of an axiom check: the first failing instance per axiom."""

    violations: dict = field(default_factory=dict)
    checked: int = 0

    @property
    def ok(self):
        return not self.violations

    def __bool__(self):
        return self.ok

    def record(self, axiom, instance):
        self.violations.setdefault(axiom, instance)

    def lines(self, fmt=str):
        if self.ok:
            return ["pass"]
        out = []
        for axiom in AXIOMS:
            if axiom in self.violations:
                inst = ", ".join(fmt(a) for a in self.violations[axiom])
                out.append(f"{axiom}: fails at ({inst})")
        return out


def check_laws(D: Digroup, elements, inverses=True) -> AxiomReport:
    """Check C1-C4, the bar-unit laws and (optionally) the inverse laws of
    ``D`` on every triple drawn from ``elements``.

    The inverse law uses ``D.inverse``; for raw tables use
    :func:`check_axioms`, which searches for inverses instead.
    """
    report = AxiomReport()
    elements = list(elements)
    vd, dv = D.vdash, D.dashv
    one = D.bar_unit
    for a in elements:
        if vd(one, a) != a or dv(a, one) != a:
            report.record("bar-unit", (a,))
        if inverses:
            b = D.inverse(a)
            if vd(a, b) != one or dv(b, a) != one:
                report.record("inverse", (a,))
    for a, b in itertools.product(elements, repeat=2):
        ab_v, ab_d = vd(a, b), dv(a, b)
        for c in elements:
            report.checked += 1
            bc_v, bc_d = vd(b, c), dv(b, c)
            if vd(ab_v, c) != vd(a, bc_v):
                report.record("C1-vdash", (a, b, c))
            if dv(ab_d, c) != dv(a, bc_d):
                report.record("C1-dashv", (a, b, c))
            if dv(a, bc_v) != dv(a, bc_d):
                report.record("C2", (a, b, c))
            if vd(ab_d, c) != vd(ab_v, c):
                report.record("C3", (a, b, c))
            if vd(a, bc_d) != dv(ab_v, c):
                report.record("C4", (a, b, c))
    return report


class FiniteDigroup(Digroup):
    """A digroup on ``0..n-1`` given by its two operation tables.

    Construction only checks the tables' shape; use :func:`check_axioms`
    for the algebraic laws.
    """

    def __init__(self, vdash_table, dashv_table, bar_unit, names=None, name=None):
        n = len(vdash_table)
        self.vdash_table = _square(vdash_table, n, "vdash")
        self.dashv_table = _square(dashv_table, n, "dashv")
        if not 0 <= bar_unit < n:
            raise MalformedInputError(f"bar-unit {bar_unit} outside 0..{n - 1}")
        self._unit = bar_unit
        self.names = tuple(names) if names is not None else tuple(str(i) for i in range(n))
        if len(self.names) != n or len(set(self.names)) != n:
            raise MalformedInputError("element names must be distinct and match the table size")
        self.name = name
        self._index = {s: i for i, s in enumerate(self.names)}
        self._inverses = None

    def __len__(self):
        return len(self.vdash_table)

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<FiniteDigroup{label} order={len(self)}>"

    def __eq__(self, other):
        return isinstance(other, FiniteDigroup) and (
            self.vdash_table, self.dashv_table, self._unit) == (other.vdash_table, other.dashv_table, other._unit)

    def __hash__(self):
        return hash((self.vdash_table, self.dashv_table, self._unit))

    @property
    def bar_unit(self):
        return self._unit

    def vdash(self, a, b):
        return self.vdash_table[a][b]

    def dashv(self, a, b):
        return self.dashv_table[a][b]

    def elements(self):
        return range(len(self))

    def inverse(self, a):
        if self._inverses is None:
            self._inverses = tuple(self._find_inverse(x) for x in self.elements())
        return self._inverses[a]

    def _find_inverse(self, a):
        one = self._unit
        found = [b for b in self.elements() if self.vdash_table[a][b] == one == self.dashv_table[b][a]]
        if len(found) != 1:
            what = "no inverse" if not found else "several inverses"
            raise InvalidDigroupError(f"{self.names[a]} has {what}")
        return found[0]

    def format_element(self, a):
        return self.names[a]

    def parse_element(self, text):
        try:
            return self._index[text]
        except KeyError:
            raise MalformedInputError(f"unknown element {text!r}") from None

    def with_entry(self, table, a, b, value):
        """A copy with one entry of the ``"vdash"`` or ``"dashv"`` table replaced."""
        tables = {"vdash": [list(r) for r in self.vdash_table], "dashv": [list(r) for r in self.dashv_table]}
        tables[table][a][b] = value
        return FiniteDigroup(tables["vdash"], tables["dashv"], self._unit, self.names, self.name)


def _square(table, n, label):
    rows = []
    for r, row in enumerate(table):
        row = tuple(int(v) for v in row)
        if len(row) != n:
            raise MalformedInputError(f"{label} row {r} has {len(row)} entries, expected {n}")
        if any(v < 0 or v >= n for v in row):
            raise MalformedInputError(f"{label} row {r} has an entry outside the carrier")
        rows.append(row)
    if len(rows) != n:
        raise MalformedInputError(f"{label} table has {len(rows)} rows, expected {n}")
    return tuple(rows)


def check_axioms(D: FiniteDigroup) -> AxiomReport:
    """Exhaustively check C1-C4, the bar-unit laws and inverse existence."""
    report = check_laws(D, D.elements(), inverses=False)
    one = D.bar_unit
    for a in D.elements():
        if not any(D.vdash(a, b) == one == D.dashv(b, a) for b in D.elements()):
            report.record("inverse", (a,))
    return report


def require_digroup(D: FiniteDigroup):
    report = check_axioms(D)
    if not report.ok:
        raise InvalidDigroupError("; ".join(report.lines(D.format_element)))


def group_part(D: Digroup) -> list:
    """The group part J = {a ⊢ 1}, as a sorted list of carrier elements."""
    J = sorted({D.sharp(a) for a in _carrier(D)})
    for a, b in itertools.product(J, repeat=2):
        if D.vdash(a, b) != D.dashv(a, b) or D.vdash(a, b) not in J:
            raise InvalidDigroupError("group part is not closed or its two operations differ")
    return J


def halo(D: Digroup) -> list:
    """All two-sided bar-units of ``D``."""
    carrier = list(_carrier(D))
    return [e for e in carrier if all(D.vdash(e, a) == a and D.dashv(a, e) == a for a in carrier)]


def _carrier(D):
    carrier = D.elements()
    if carrier is None:
        raise MalformedInputError("this operation needs a finite carrier")
    return carrier


@dataclass(frozen=True)
class PointedSet:
    names: tuple
    basepoint: int = 0

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if not 0 <= self.basepoint < len(self.names):
            raise MalformedInputError("basepoint must be a member of the set")

    def __len__(self):
        return len(self.names)


class GroupAction:
    """A left action of a finite group J on a pointed set E, as a table
    ``act[h][v]``."""

    def __init__(self, table):
        self.table = tuple(tuple(int(v) for v in row) for row in table)

    def __call__(self, h, v):
        return self.table[h][v]

    def __eq__(self, other):
        return isinstance(other, GroupAction) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    @classmethod
    def trivial(cls, J: FiniteGroup, E: PointedSet):
        return cls([list(range(len(E))) for _ in J.elements])

    def validate(self, J: FiniteGroup, E: PointedSet):
        n = len(E)
        if len(self.table) != len(J) or any(len(row) != n for row in self.table):
            raise MalformedInputError("action table must have one row per group element and one column per point")
        for h in J.elements:
            if sorted(self.table[h]) != list(range(n)):
                raise MalformedInputError(f"action of {J.name(h)} is not a bijection")
            if self.table[h][E.basepoint] != E.basepoint:
                raise MalformedInputError(f"action of {J.name(h)} moves the basepoint")
        for v in range(n):
            if self.table[J.identity][v] != v:
                raise MalformedInputError("identity does not act trivially")
            for h, k in itertools.product(J.elements, repeat=2):
                if self.table[h][self.table[k][v]] != self.table[J.mul(h, k)][v]:
                    raise MalformedInputError("action is not compatible with the group product")


def from_parts(E: PointedSet, J: FiniteGroup, action: GroupAction) -> FiniteDigroup:
    """Kinyon's digroup on E x J.

    (u,h) ⊢ (v,k) = (h.v, hk) and (u,h) ⊣ (v,k) = (u, hk).  The pair (u,h)
    has index ``u * |J| + h``.
    """
    action.validate(J, E)
    pairs = [(u, h) for u in range(len(E)) for h in J.elements]
    idx = {p: i for i, p in enumerate(pairs)}
    vd = [[idx[(action(h, v), J.mul(h, k))] for (v, k) in pairs] for (u, h) in pairs]
    dv = [[idx[(u, J.mul(h, k))] for (v, k) in pairs] for (u, h) in pairs]
    names = [f"({E.names[u]},{J.name(h)})" for u, h in pairs]
    return FiniteDigroup(vd, dv, idx[(E.basepoint, J.identity)], names)


def trivial_digroup(S: PointedSet) -> FiniteDigroup:
    """a ⊢ b = b and a ⊣ b = a, with the basepoint as bar-unit."""
    n = len(S)
    return FiniteDigroup(
        [list(range(n)) for _ in range(n)],
        [[a] * n for a in range(n)],
        S.basepoint,
        S.names,
    )


def group_as_digroup(G: FiniteGroup, name=None) -> FiniteDigroup:
    return FiniteDigroup(G.mult, G.mult, G.identity, G.names, name)


@dataclass
class Decomposition:
    """Result of :func:`decompose`.

    ``group_elements`` and ``halo_elements`` list the carrier elements
    making up J and E (J index i is carrier element ``group_elements[i]``);
    ``iso[a]`` is the index in ``model`` (= from_parts(E, J, action)) of
    carrier element ``a``.
    """

    halo: PointedSet
    group: FiniteGroup
    action: GroupAction
    iso: tuple
    group_elements: tuple
    halo_elements: tuple
    model: FiniteDigroup


def decompose(D: FiniteDigroup) -> Decomposition:
    """Split ``D`` as E x J and verify the isomorphism on all pairs."""
    require_digroup(D)
    J_el = group_part(D)
    E_el = halo(D)
    one = D.bar_unit
    j_idx = {a: i for i, a in enumerate(J_el)}
    e_idx = {a: i for i, a in enumerate(E_el)}
    J = FiniteGroup(
        [[j_idx[D.vdash(a, b)] for b in J_el] for a in J_el],
        j_idx[one],
        [D.format_element(a) for a in J_el],
    )
    E = PointedSet([D.format_element(a) for a in E_el], e_idx[one])
    act = GroupAction([[e_idx[D.dashv(D.vdash(h, v), D.inverse(h))] for v in E_el] for h in J_el])
    model = from_parts(E, J, act)

    m = len(J)
    iso = []
    for a in D.elements():
        s = D.sharp(a)
        u = D.dashv(a, D.inverse(s))
        if u not in e_idx:
            raise InvalidDigroupError(f"halo component of {D.format_element(a)} is not a bar-unit")
        iso.append(e_idx[u] * m + j_idx[s])
    iso = tuple(iso)
    if sorted(iso) != list(range(len(D))):
        raise InvalidDigroupError("E x J map is not a bijection")
    for a, b in itertools.product(D.elements(), repeat=2):
        if iso[D.vdash(a, b)] != model.vdash(iso[a], iso[b]) or iso[D.dashv(a, b)] != model.dashv(iso[a], iso[b]):
            raise InvalidDigroupError("E x J map is not a homomorphism")
    return Decomposition(E, J, act, iso, tuple(J_el), tuple(E_el), model)


def is_homomorphism(f, A: Digroup, B: Digroup, elements=None) -> bool:
    """Whether the mapping ``f`` (indexable by A's elements) preserves both
    operations and the bar-unit."""
    elements = list(A.elements() if elements is None else elements)
    if f[A.bar_unit] != B.bar_unit:
        return False
    return all(
        f[A.vdash(a, b)] == B.vdash(f[a], f[b]) and f[A.dashv(a, b)] == B.dashv(f[a], f[b])
        for a, b in itertools.product(elements, repeat=2)
    )


def homomorphisms(A: FiniteDigroup, B: FiniteDigroup) -> list:
    """Every digroup homomorphism A -> B, each as a tuple ``f[a]``, by brute force."""
    return [f for f in itertools.product(B.elements(), repeat=len(A)) if is_homomorphism(f, A, B)]


# -- the free digroup --------------------------------------------------------


class FreeTriple(NamedTuple):
    """Non-group element (p, x, q) of the free digroup: the pointed word
    [p x q] with the pointer on the generator x."""

    p: tuple
    x: object
    q: tuple


class FreeDigroup(Digroup):
    """The free digroup on a finite alphabet.

    Group-part elements are reduced free-group words; the remaining elements
    are :class:`FreeTriple` values with separately reduced ``p`` and ``q``.
    """

    def __init__(self, symbols):
        self.group = FreeGroup(symbols)
        self.symbols = self.group.symbols

    def __repr__(self):
        return f"FreeDigroup({self.symbols!r})"

    @property
    def bar_unit(self):
        return ()

    def generator(self, x):
        if x not in self.symbols:
            raise MalformedInputError(f"{x!r} is not a generator")
        return FreeTriple((), x, ())

    def sharp(self, a):
        if isinstance(a, FreeTriple):
            return free_group_reduce(a.p + ((a.x, 1),) + a.q)
        return a

    def in_group_part(self, a):
        return not isinstance(a, FreeTriple)

    def vdash(self, a, b):
        left = self.sharp(a)
        if isinstance(b, FreeTriple):
            return FreeTriple(free_group_mul(left, b.p), b.x, b.q)
        return free_group_mul(left, b)

    def dashv(self, a, b):
        right = self.sharp(b)
        if isinstance(a, FreeTriple):
            return FreeTriple(a.p, a.x, free_group_mul(a.q, right))
        return free_group_mul(a, right)

    def inverse(self, a):
        return free_group_inv(self.sharp(a))

    def group_view(self):
        return self.group

    def bounded_elements(self, max_len):
        """Group words and triples whose group-word components have length <= max_len."""
        words = self.group.words(max_len)
        out = list(words)
        out += [FreeTriple(p, x, q) for x in self.symbols for p in words for q in words]
        return out

    def format_element(self, a):
        if isinstance(a, FreeTriple):
            p = format_free_word(a.p) if a.p else ""
            q = format_free_word(a.q) if a.q else ""
            return f"{p}<{a.x}>{q}"
        return format_free_word(a)

    def parse_element(self, text):
        if "<" in text:
            p, _, rest = text.partition("<")
            x, sep, q = rest.partition(">")
            if not sep or x not in self.symbols:
                raise MalformedInputError(f"bad free digroup element {text!r}")
            t = FreeTriple(parse_free_word(p) if p else (), x, parse_free_word(q) if q else ())
            if not (self.group.contains(t.p) and self.group.contains(t.q)):
                raise MalformedInputError(f"{text!r} uses symbols outside {self.symbols}")
            return t
        w = parse_free_word(text)
        if not self.group.contains(w):
            raise MalformedInputError(f"{text!r} uses symbols outside {self.symbols}")
        return w
