"""Group-level arithmetic: finite table groups, free groups, and the free
product of two groups as reduced alternating words.

A free-product letter is a pair ``(factor, element)`` with ``factor`` in
``{1, 2}``; a reduced word is a tuple of such letters.  The identities of
both factors are never stored as letters, so the empty tuple is the single
shared identity.

A free-group word is a tuple of ``(symbol, exponent)`` pairs with exponent
``+1`` or ``-1``.
"""

from __future__ import annotations

import itertools
from typing import Hashable, Iterable, Iterator, Sequence

from .errors import MalformedInputError

Letter = tuple  # (factor, element)
FreeWord = tuple  # tuple of (symbol, +-1)


class FiniteGroup:
    """A group on ``0..n-1`` given by its multiplication table.

    The table is checked eagerly: closure, associativity, a two-sided
    identity and two-sided inverses.  ``names`` is optional and only used
    for printing.
    """

    def __init__(self, mult, identity=None, names=None):
        n = len(mult)
        if n == 0:
            raise MalformedInputError("a group needs at least one element")
        rows = []
        for r, row in enumerate(mult):
            row = tuple(int(v) for v in row)
            if len(row) != n:
                raise MalformedInputError(f"row {r} has {len(row)} entries, expected {n}")
            if any(v < 0 or v >= n for v in row):
                raise MalformedInputError(f"row {r} has an entry outside 0..{n - 1}")
            rows.append(row)
        self.mult = tuple(rows)
        self.names = tuple(names) if names is not None else tuple(str(i) for i in range(n))
        if len(self.names) != n:
            raise MalformedInputError("names must match the table size")

        if identity is None:
            candidates = [e for e in range(n) if all(self.mult[e][a] == a == self.mult[a][e] for a in range(n))]
            if not candidates:
                raise MalformedInputError("table has no two-sided identity")
            identity = candidates[0]
        self.identity = identity
        for a in range(n):
            if self.mult[identity][a] != a or self.mult[a][identity] != a:
                raise MalformedInputError(f"{self.names[identity]} is not a two-sided identity")
        for a, b, c in itertools.product(range(n), repeat=3):
            if self.mult[self.mult[a][b]][c] != self.mult[a][self.mult[b][c]]:
                raise MalformedInputError(
                    f"table is not associative at ({self.names[a]}, {self.names[b]}, {self.names[c]})"
                )
        inv = []
        for a in range(n):
            found = [b for b in range(n) if self.mult[a][b] == identity == self.mult[b][a]]
            if len(found) != 1:
                raise MalformedInputError(f"{self.names[a]} has no two-sided inverse")
            inv.append(found[0])
        self.inverses = tuple(inv)

    def __len__(self):
        return len(self.mult)

    def __repr__(self):
        return f"FiniteGroup(order={len(self)})"

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and (self.mult, self.identity) == (other.mult, other.identity)

    def __hash__(self):
        return hash((self.mult, self.identity))

    @property
    def elements(self):
        return range(len(self.mult))

    def mul(self, a, b):
        return self.mult[a][b]

    def inv(self, a):
        return self.inverses[a]

    def contains(self, a):
        return isinstance(a, int) and 0 <= a < len(self.mult)

    def name(self, a):
        return self.names[a]


def cyclic_group(n, names=None):
    return FiniteGroup([[(i + j) % n for j in range(n)] for i in range(n)], 0, names)


# -- free product of two groups -------------------------------------------


def _check_letter(letter, groups):
    try:
        factor, element = letter
    except (TypeError, ValueError):
        raise MalformedInputError(f"not a (factor, element) letter: {letter!r}") from None
    if factor not in (1, 2):
        raise MalformedInputError(f"factor must be 1 or 2, got {factor!r}")
    if not groups[factor - 1].contains(element):
        raise MalformedInputError(f"{element!r} is not an element of factor {factor}")


def fp_group_reduce(raw: Iterable[Letter], groups: Sequence) -> tuple:
    """Reduce a raw letter sequence to its normal form in ``G1 * G2``.

    ``groups`` is a pair of objects exposing ``mul``, ``identity`` and
    ``contains``.  Identity letters are dropped and adjacent same-factor
    letters are merged with a stack fold, so merges cascade.
    """
    stack = []
    for letter in raw:
        _check_letter(letter, groups)
        factor, element = letter
        group = groups[factor - 1]
        if stack and stack[-1][0] == factor:
            element = group.mul(stack.pop()[1], element)
        if element != group.identity:
            stack.append((factor, element))
    return tuple(stack)


def fp_group_mul(u, v, groups) -> tuple:
    return fp_group_reduce(tuple(u) + tuple(v), groups)


def fp_group_inv(u, groups) -> tuple:
    return tuple((f, groups[f - 1].inv(a)) for f, a in reversed(tuple(u)))


def fp_group_is_reduced(u, groups) -> bool:
    for i, (f, a) in enumerate(u):
        if f not in (1, 2) or not groups[f - 1].contains(a) or a == groups[f - 1].identity:
            return False
        if i and u[i - 1][0] == f:
            return False
    return True


def fp_group_words(groups, max_len) -> Iterator[tuple]:
    """All reduced words of length ``<= max_len`` over two finite groups."""
    nonid = [[a for a in g.elements if a != g.identity] for g in groups]
    yield ()
    frontier = [()]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for f in (1, 2):
                if w and w[-1][0] == f:
                    continue
                for a in nonid[f - 1]:
                    nxt.append(w + ((f, a),))
        yield from nxt
        frontier = nxt


# -- free groups -------------------------------------------------------------


def free_group_reduce(raw: Iterable[tuple]) -> FreeWord:
    stack = []
    for letter in raw:
        try:
            sym, exp = letter
        except (TypeError, ValueError):
            raise MalformedInputError(f"not a (symbol, exponent) letter: {letter!r}") from None
        if exp not in (1, -1):
            raise MalformedInputError(f"exponent must be +1 or -1, got {exp!r}")
        if stack and stack[-1] == (sym, -exp):
            stack.pop()
        else:
            stack.append((sym, exp))
    return tuple(stack)


def free_group_mul(u, v) -> FreeWord:
    return free_group_reduce(tuple(u) + tuple(v))


def free_group_inv(u) -> FreeWord:
    return tuple((s, -e) for s, e in reversed(tuple(u)))


def format_free_word(u) -> str:
    if not u:
        return "1"
    return "*".join(s if e == 1 else f"{s}^-1" for s, e in u)


def parse_free_word(text: str) -> FreeWord:
    text = text.strip()
    if text == "1":
        return ()
    letters = []
    for part in text.split("*"):
        if part.endswith("^-1"):
            letters.append((part[:-3], -1))
        else:
            letters.append((part, 1))
        if not letters[-1][0]:
            raise MalformedInputError(f"empty generator in {text!r}")
    return free_group_reduce(letters)


class FreeGroup:
    """The free group on a finite symbol set, with reduced tuples as elements."""

    identity = ()

    def __init__(self, symbols: Iterable[Hashable]):
        self.symbols = tuple(symbols)
        if not self.symbols or len(set(self.symbols)) != len(self.symbols):
            raise MalformedInputError("free group needs a nonempty set of distinct symbols")

    def __repr__(self):
        return f"FreeGroup({self.symbols!r})"

    def mul(self, a, b):
        return free_group_mul(a, b)

    def inv(self, a):
        return free_group_inv(a)

    def contains(self, a):
        if not isinstance(a, tuple):
            return False
        if any(not isinstance(l, tuple) or len(l) != 2 or l[0] not in self.symbols or l[1] not in (1, -1) for l in a):
            return False
        return free_group_reduce(a) == a

    def words(self, max_len) -> list:
        """Reduced words of length ``<= max_len``, shortest first."""
        out = [()]
        frontier = [()]
        letters = [(s, e) for s in self.symbols for e in (1, -1)]
        for _ in range(max_len):
            nxt = [w + (l,) for w in frontier for l in letters if not (w and w[-1] == (l[0], -l[1]))]
            out.extend(nxt)
            frontier = nxt
        return out
