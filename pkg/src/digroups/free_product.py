"""Normal forms for the free product of two digroups.

Every element is one of

* ``GroupPart(u)``: a reduced word ``u`` in J1 * J2, printed ``[u @ 1]``;
* ``Pointed(p, x, q)``: the pointed word ``[p x q @ |p|+1]`` where ``x`` is
  a letter outside the group part of its factor, ``p`` and ``q`` are words
  of group-part letters, and ``p x q`` alternates factors throughout.

Letters are ``(factor, element)`` pairs with elements taken from the factor
digroups.  The two bar-units are identified: neither ever occurs as a
letter, and ``GroupPart(())`` is the bar-unit of the product.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digroup import Digroup, is_homomorphism
from .errors import DigroupError, MalformedInputError
from .groups import fp_group_inv, fp_group_is_reduced, fp_group_mul, fp_group_reduce
from .pointed import PointedWord, eval_pointed, format_letter, parse_pointed

IDENTITY = "e"


class NormalForm:
    __slots__ = ()


@dataclass(frozen=True)
class GroupPart(NormalForm):
    u: tuple = ()

    @property
    def letters(self):
        return self.u

    def __len__(self):
        return max(len(self.u), 1)


@dataclass(frozen=True)
class Pointed(NormalForm):
    p: tuple
    x: tuple
    q: tuple

    @property
    def letters(self):
        return self.p + (self.x,) + self.q

    def __len__(self):
        return len(self.p) + 1 + len(self.q)


class HomomorphismError(DigroupError):
    """A map handed to :func:`universal_map` is not a digroup homomorphism."""


class FactorPair(Digroup):
    """Two factor digroups and the free product built from them.

    The group parts are materialised once: ``groups[i]`` offers the group
    operations of J_(i+1) on carrier elements, and for finite factors
    ``group_elements[i]`` / ``other_elements[i]`` list J_(i+1) minus its
    identity and A_(i+1) minus J_(i+1).
    """

    def __init__(self, A1: Digroup, A2: Digroup):
        self.factors = (A1, A2)
        self.groups = (A1.group_view(), A2.group_view())
        self.group_elements = [None, None]
        self.other_elements = [None, None]
        for i, A in enumerate(self.factors):
            carrier = A.elements()
            if carrier is None:
                continue
            self.group_elements[i] = [a for a in carrier if A.in_group_part(a) and a != A.bar_unit]
            self.other_elements[i] = [a for a in carrier if not A.in_group_part(a)]
        self.finite = all(A.elements() is not None for A in self.factors)

    def __repr__(self):
        return f"FactorPair({self.factors[0]!r}, {self.factors[1]!r})"

    # Digroup surface
    @property
    def bar_unit(self):
        return GroupPart(())

    def vdash(self, a, b):
        return fp_vdash(a, b, self)

    def dashv(self, a, b):
        return fp_dashv(a, b, self)

    def inverse(self, a):
        return fp_inverse(a, self)

    def sharp(self, a):
        return GroupPart(hat(a, self))

    def in_group_part(self, a):
        return fp_is_group_part(a)

    def format_element(self, a):
        return print_pointed_nf(a, self)

    def parse_element(self, text):
        return fp_eval_word(text, self)

    def group_view(self):
        raise MalformedInputError("free products are not nested here")

    # helpers
    def factor(self, i):
        return self.factors[i - 1]

    def is_group_letter(self, letter):
        i, a = letter
        return self.factors[i - 1].in_group_part(a)

    def letter_name(self, letter):
        i, a = letter
        return (i, self.factors[i - 1].format_element(a))

    def resolve_letter(self, sym):
        """Map a name-level letter (``"e"`` or ``(factor, name)``) to ``(factor, element)``,
        or to ``None`` for the shared identity."""
        if sym == IDENTITY:
            return None
        if not (isinstance(sym, tuple) and len(sym) == 2 and sym[0] in (1, 2)):
            raise MalformedInputError(f"letter {format_letter(sym)!r} is not factor-qualified")
        i, name = sym
        A = self.factors[i - 1]
        a = A.parse_element(name) if isinstance(name, str) else name
        return (i, a)

    def is_normal_form(self, a) -> bool:
        if isinstance(a, GroupPart):
            return fp_group_is_reduced(a.u, self.groups)
        if not isinstance(a, Pointed):
            return False
        i, x = a.x
        if i not in (1, 2) or self.factors[i - 1].in_group_part(x):
            return False
        if not (fp_group_is_reduced(a.p, self.groups) and fp_group_is_reduced(a.q, self.groups)):
            return False
        return (not a.p or a.p[-1][0] != i) and (not a.q or a.q[0][0] != i)

    def normal_forms(self, max_len):
        """Every normal form whose pointed word has length <= max_len (finite factors only)."""
        if not self.finite:
            raise MalformedInputError("normal-form enumeration needs finite factors")
        words = _alternating_words(self.group_elements, max_len)
        out = [GroupPart(u) for u in words]
        for i in (1, 2):
            for x in self.other_elements[i - 1]:
                for p in words:
                    if p and p[-1][0] == i:
                        continue
                    for q in words:
                        if len(p) + len(q) + 1 > max_len or (q and q[0][0] == i):
                            continue
                        out.append(Pointed(p, (i, x), q))
        out.sort(key=lambda a: (len(a), isinstance(a, Pointed)))
        return out


def _alternating_words(nonid, max_len):
    out = [()]
    frontier = [()]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for i in (1, 2):
                if w and w[-1][0] == i:
                    continue
                nxt.extend(w + ((i, a),) for a in nonid[i - 1])
        out.extend(nxt)
        frontier = nxt
    return out


def tau_hat(letters, ctx: FactorPair) -> tuple:
    """Replace each letter by its sharp and reduce in J1 * J2."""
    return fp_group_reduce(((i, ctx.factors[i - 1].sharp(a)) for i, a in letters), ctx.groups)


def hat(a: NormalForm, ctx: FactorPair) -> tuple:
    if isinstance(a, GroupPart):
        return a.u
    if isinstance(a, Pointed):
        i, x = a.x
        return fp_group_reduce(a.p + ((i, ctx.factors[i - 1].sharp(x)),) + a.q, ctx.groups)
    raise MalformedInputError(f"not a normal form: {a!r}")


def fp_vdash(a: NormalForm, b: NormalForm, ctx: FactorPair) -> NormalForm:
    left = hat(a, ctx)
    if isinstance(b, GroupPart):
        return GroupPart(fp_group_mul(left, b.u, ctx.groups))
    if not isinstance(b, Pointed):
        raise MalformedInputError(f"not a normal form: {b!r}")
    r = fp_group_mul(left, b.p, ctx.groups)
    i, x = b.x
    if not r:
        return Pointed((), b.x, b.q)
    if r[-1][0] == i:
        # merge c ⊢ x inside factor i; the result stays outside J_i
        return Pointed(r[:-1], (i, ctx.factors[i - 1].vdash(r[-1][1], x)), b.q)
    return Pointed(r, b.x, b.q)


def fp_dashv(a: NormalForm, b: NormalForm, ctx: FactorPair) -> NormalForm:
    right = hat(b, ctx)
    if isinstance(a, GroupPart):
        return GroupPart(fp_group_mul(a.u, right, ctx.groups))
    if not isinstance(a, Pointed):
        raise MalformedInputError(f"not a normal form: {a!r}")
    r = fp_group_mul(a.q, right, ctx.groups)
    i, x = a.x
    if not r:
        # pointer stays at |p|+1
        return Pointed(a.p, a.x, ())
    if r[0][0] == i:
        return Pointed(a.p, (i, ctx.factors[i - 1].dashv(x, r[0][1])), r[1:])
    return Pointed(a.p, a.x, r)


def fp_inverse(a: NormalForm, ctx: FactorPair) -> NormalForm:
    return GroupPart(fp_group_inv(hat(a, ctx), ctx.groups))


def fp_bar_unit() -> NormalForm:
    return GroupPart(())


def fp_is_group_part(a: NormalForm) -> bool:
    return isinstance(a, GroupPart)


def fp_is_halo(a: NormalForm, ctx: FactorPair) -> bool:
    return not hat(a, ctx)


def embed(i: int, a, ctx: FactorPair) -> NormalForm:
    A = ctx.factors[i - 1]
    if a == A.bar_unit:
        return GroupPart(())
    if A.in_group_part(a):
        return GroupPart(((i, a),))
    return Pointed((), (i, a), ())


def underlying_word(a: NormalForm) -> PointedWord:
    """The pointed word a normal form stands for, with element-level letters."""
    if isinstance(a, GroupPart):
        return PointedWord(a.u or (IDENTITY,), 1)
    return PointedWord(a.letters, len(a.p) + 1)


def print_pointed_nf(a: NormalForm, ctx: FactorPair) -> str:
    w = underlying_word(a)
    letters = [IDENTITY if s == IDENTITY else ctx.letter_name(s) for s in w.letters]
    return "[" + " ".join(format_letter(s) for s in letters) + f" @ {w.pointer}]"


def fp_eval_word(w, ctx: FactorPair) -> NormalForm:
    """Evaluate a pointed word over factor-qualified letters to its normal form.

    ``w`` may be a :class:`PointedWord` or its text form.  Letters are either
    the shared identity ``"e"`` or ``(factor, name-or-element)``.
    """
    if isinstance(w, str):
        w = parse_pointed(w)

    def interp(sym):
        letter = ctx.resolve_letter(sym)
        return GroupPart(()) if letter is None else embed(letter[0], letter[1], ctx)

    return eval_pointed(w, interp, ctx)


def universal_map(f1, f2, G: Digroup, ctx: FactorPair):
    """The homomorphism phi from the free product to ``G`` with
    ``phi(embed(i, a)) = f_i(a)``.

    ``f1`` and ``f2`` are indexable by factor elements.  For finite factors
    they are checked to be digroup homomorphisms first.
    """
    fs = (f1, f2)
    for i, (A, f) in enumerate(zip(ctx.factors, fs), start=1):
        if A.elements() is not None and not is_homomorphism(f, A, G):
            raise HomomorphismError(f"f{i} is not a digroup homomorphism into the target")

    def interp(sym):
        if sym == IDENTITY:
            return G.bar_unit
        i, a = sym
        return fs[i - 1][a]

    def phi(a):
        return eval_pointed(underlying_word(a), interp, G)

    return phi


def universal_phi(a: NormalForm, f1, f2, G: Digroup, ctx: FactorPair):
    return universal_map(f1, f2, G, ctx)(a)
