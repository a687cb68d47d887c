"""Brute-force word problem for the disemigroup presentation of a free
product of two finite digroups.

The presentation has one letter per non-unit element of each factor plus a
single shared identity letter ``e``, and one relation per table entry of
either factor.  Classes are computed by union-find over every pointed word
up to a length bound plus some slack, joining each word with the words it
contracts to.  Nothing here looks at the normal-form construction.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass, field

from .errors import BoundExceededError, MalformedInputError
from .pointed import PointedWord, all_pointed_words

IDENTITY = "e"
DEFAULT_SLACK = 2
DEFAULT_WORD_CAP = 2_000_000

BRANCHES = ("pointer-vdash", "pointer-dashv", "left-vdash", "left-dashv", "right-vdash", "right-dashv")


class Presentation:
    """Generators A1 ∪ A2° (unit letters merged into ``e``) and the table
    relations of both factors."""

    def __init__(self, A1, A2):
        self.factors = (A1, A2)
        self.alphabet = [IDENTITY] + [
            (i, A.format_element(a)) for i, A in ((1, A1), (2, A2)) for a in A.elements() if a != A.bar_unit
        ]
        self._element = {}
        for sym in self.alphabet[1:]:
            i, name = sym
            self._element[sym] = (i, self.factors[i - 1].parse_element(name))
        # shared identity may be read in either factor
        self._tags = {sym: [el] for sym, el in self._element.items()}
        self._tags[IDENTITY] = [(1, A1.bar_unit), (2, A2.bar_unit)]
        self._preimages = self._build_preimages()
        self._cache = {}

    def letter(self, i, a):
        A = self.factors[i - 1]
        return IDENTITY if a == A.bar_unit else (i, A.format_element(a))

    def check_word(self, w: PointedWord):
        for sym in w.letters:
            if sym not in self._tags:
                raise MalformedInputError(f"letter {sym!r} is not in the presentation alphabet")

    def contractions(self, w: PointedWord):
        """Yield ``(branch, word)`` for every single contraction of an adjacent
        same-factor pair of ``w``."""
        m = w.pointer
        L = w.letters
        for k in range(1, len(L)):  # pair at positions k, k+1
            if k + 1 == m:
                where, tables, new_m = "pointer", ("vdash",), k
            elif k == m:
                where, tables, new_m = "pointer", ("dashv",), m
            elif k + 1 < m:
                where, tables, new_m = "left", ("vdash", "dashv"), m - 1
            else:
                where, tables, new_m = "right", ("vdash", "dashv"), m
            seen = set()
            for (i, a), (j, b) in itertools.product(self._tags[L[k - 1]], self._tags[L[k]]):
                if i != j:
                    continue
                A = self.factors[i - 1]
                for t in tables:
                    d = A.vdash(a, b) if t == "vdash" else A.dashv(a, b)
                    out = PointedWord(L[: k - 1] + (self.letter(i, d),) + L[k + 1:], new_m)
                    if (t, out) not in seen:
                        seen.add((t, out))
                        yield f"{where}-{t}", out

    def _build_preimages(self):
        pre = {}
        for i, A in enumerate(self.factors, start=1):
            for a, b in itertools.product(A.elements(), repeat=2):
                for t in ("vdash", "dashv"):
                    d = A.vdash(a, b) if t == "vdash" else A.dashv(a, b)
                    pre.setdefault((t, self.letter(i, d)), set()).add((self.letter(i, a), self.letter(i, b)))
        return {k: sorted(v, key=repr) for k, v in pre.items()}

    def expansions(self, w: PointedWord):
        """Yield ``(branch, word)`` for every word one letter longer that
        contracts to ``w`` in one step."""
        m = w.pointer
        L = w.letters
        for k in range(1, len(L) + 1):
            d = L[k - 1]
            options = []
            if k == m:
                options += [("pointer-vdash", "vdash", m + 1), ("pointer-dashv", "dashv", m)]
            elif k < m:
                options += [("left-vdash", "vdash", m + 1), ("left-dashv", "dashv", m + 1)]
            else:
                options += [("right-vdash", "vdash", m), ("right-dashv", "dashv", m)]
            for branch, t, new_m in options:
                for c, c2 in self._preimages.get((t, d), ()):
                    yield branch, PointedWord(L[: k - 1] + (c, c2) + L[k:], new_m)


def rewrite_moves(w: PointedWord, P: Presentation, L: int, slack: int = DEFAULT_SLACK) -> set:
    """All one-step neighbours of ``w``: contractions, and expansions whose
    result has length at most ``L + slack``."""
    P.check_word(w)
    out = {v for _, v in P.contractions(w)}
    if len(w) < L + slack:
        out |= {v for _, v in P.expansions(w)}
    return out


class UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x):
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        return True


@dataclass
class ClassTable:
    """Class ids for every pointed word of length <= ``max_len``.

    Ids are numbered by first appearance in the enumeration order of
    :func:`all_pointed_words`, so the table does not depend on the order in
    which unions were performed.
    """

    max_len: int
    slack: int
    words: list
    class_of: dict
    stats: dict = field(default_factory=dict)

    def classes(self):
        groups = {}
        for w in self.words:
            groups.setdefault(self.class_of[w], []).append(w)
        return [groups[c] for c in sorted(groups)]

    def decide_equal(self, u, v):
        for w in (u, v):
            if len(w) > self.max_len:
                raise MalformedInputError(f"word {w} is longer than the bound {self.max_len}")
        return self.class_of[u] == self.class_of[v]


def universe_size(k, n):
    return sum(k**i * i for i in range(1, n + 1))


def build_classes(P: Presentation, L: int, slack: int = DEFAULT_SLACK,
                  word_cap: int = DEFAULT_WORD_CAP, order_seed=None) -> ClassTable:
    """Congruence classes of all pointed words of length <= L.

    Words up to length ``L + slack`` take part in the closure.  Passing
    ``order_seed`` shuffles the union order; the result must not change.
    """
    if L < 1:
        raise MalformedInputError("length bound must be at least 1")
    key = (L, slack)
    if order_seed is None and key in P._cache:
        return P._cache[key]
    top = L + slack
    size = universe_size(len(P.alphabet), top)
    if size > word_cap:
        raise BoundExceededError(
            f"closure over words of length <= {top} needs {size} words (cap {word_cap})",
            {"alphabet": len(P.alphabet), "max_len": L, "slack": slack, "universe": size, "cap": word_cap},
        )
    universe = list(all_pointed_words(P.alphabet, top))
    index = {w: n for n, w in enumerate(universe)}
    uf = UnionFind(len(universe))
    moves = Counter()
    edges = []
    for w in universe:
        for branch, v in P.contractions(w):
            moves[branch] += 1
            edges.append((index[w], index[v]))
    if order_seed is not None:
        random.Random(order_seed).shuffle(edges)
    for a, b in edges:
        uf.union(a, b)

    words = [w for w in universe if len(w) <= L]
    ids = {}
    class_of = {}
    for w in words:
        root = uf.find(index[w])
        class_of[w] = ids.setdefault(root, len(ids))
    sizes = Counter(class_of.values())
    stats = {
        "words": len(words),
        "universe": len(universe),
        "classes": len(ids),
        "max_class_size": max(sizes.values()),
    }
    stats.update({f"moves_{b}": moves[b] for b in BRANCHES})
    table = ClassTable(L, slack, words, class_of, stats)
    if order_seed is None:
        P._cache[key] = table
    return table


def decide_equal(u: PointedWord, v: PointedWord, P: Presentation, L: int, slack: int = DEFAULT_SLACK) -> bool:
    P.check_word(u)
    P.check_word(v)
    return build_classes(P, L, slack).decide_equal(u, v)
