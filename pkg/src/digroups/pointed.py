"""Pointed words [u]_m, the elements of the free disemigroup on an alphabet.

Letters are arbitrary hashable symbols.  The text syntax is
``[x y z @ 2]``; a letter written ``1.t`` or ``2.b`` is read as the
factor-qualified pair ``(1, "t")`` / ``(2, "b")``, anything else as a bare
string.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Callable, Mapping, Union

from .errors import MissingInterpretationError, PointedWordSyntaxError


@dataclass(frozen=True)
class PointedWord:
    letters: tuple
    pointer: int = 1

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if not self.letters:
            raise ValueError("pointed words are nonempty")
        if not 1 <= self.pointer <= len(self.letters):
            raise ValueError(f"pointer {self.pointer} out of range 1..{len(self.letters)}")

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return print_pointed(self)

    @property
    def pointed_letter(self):
        return self.letters[self.pointer - 1]


def pw_vdash(a: PointedWord, b: PointedWord) -> PointedWord:
    return PointedWord(a.letters + b.letters, len(a) + b.pointer)


def pw_dashv(a: PointedWord, b: PointedWord) -> PointedWord:
    return PointedWord(a.letters + b.letters, a.pointer)


def all_pointed_words(alphabet, max_len):
    """Every pointed word of length <= max_len, by length, then letters, then pointer."""
    alphabet = list(alphabet)
    for n in range(1, max_len + 1):
        for letters in itertools.product(alphabet, repeat=n):
            for m in range(1, n + 1):
                yield PointedWord(letters, m)


def eval_pointed(w: PointedWord, interp: Union[Mapping, Callable], D):
    """Fold ``w`` into the digroup ``D``: letters up to the pointer are
    combined with ⊢, the rest with ⊣, strictly left to right."""
    lookup = interp if callable(interp) else interp.__getitem__

    def value(sym):
        try:
            return lookup(sym)
        except KeyError:
            raise MissingInterpretationError(f"no interpretation for {format_letter(sym)!r}") from None

    acc = value(w.letters[0])
    for i, sym in enumerate(w.letters[1:], start=2):
        if i <= w.pointer:
            acc = D.vdash(acc, value(sym))
        else:
            acc = D.dashv(acc, value(sym))
    return acc


def format_letter(sym) -> str:
    if isinstance(sym, tuple):
        return f"{sym[0]}.{sym[1]}"
    return str(sym)


def print_pointed(w: PointedWord) -> str:
    return "[" + " ".join(format_letter(s) for s in w.letters) + f" @ {w.pointer}]"


_TOKEN = re.compile(r"\S+")
_QUALIFIED = re.compile(r"([12])\.(.+)")


def parse_letter(token: str):
    m = _QUALIFIED.fullmatch(token)
    if m:
        return (int(m.group(1)), m.group(2))
    return token


def parse_pointed(text: str) -> PointedWord:
    stripped = text.strip()
    offset = len(text) - len(text.lstrip())
    if not stripped.startswith("["):
        raise PointedWordSyntaxError("expected '['", offset)
    if not stripped.endswith("]"):
        raise PointedWordSyntaxError("expected ']'", offset + len(stripped) - 1)
    body = stripped[1:-1]
    tokens = [(m.group(), offset + 1 + m.start()) for m in _TOKEN.finditer(body)]
    ats = [i for i, (tok, _) in enumerate(tokens) if tok == "@"]
    if len(ats) != 1:
        raise PointedWordSyntaxError("expected exactly one '@'", offset)
    at = ats[0]
    if at == 0:
        raise PointedWordSyntaxError("expected at least one letter before '@'", tokens[0][1])
    if at != len(tokens) - 2:
        pos = tokens[at][1] if at == len(tokens) - 1 else tokens[at + 2][1]
        raise PointedWordSyntaxError("expected a single integer after '@'", pos)
    num, pos = tokens[at + 1]
    if not num.isdigit():
        raise PointedWordSyntaxError(f"pointer {num!r} is not a positive integer", pos)
    letters = []
    for tok, tpos in tokens[:at]:
        if any(c in tok for c in "[]@"):
            raise PointedWordSyntaxError(f"bad letter {tok!r}", tpos)
        letters.append(parse_letter(tok))
    pointer = int(num)
    if not 1 <= pointer <= len(letters):
        raise PointedWordSyntaxError(f"pointer out of range: {pointer} not in 1..{len(letters)}", pos)
    return PointedWord(tuple(letters), pointer)
