"""Plain-text digroup files.

::

    # the trivial digroup on two points
    name T2
    elements e t
    unit e
    vdash:
    e t
    e t
    dashv:
    e e
    t t

Rows are left operands and columns right operands, both in ``elements``
order.  ``#`` starts a comment.  A decomposition is written the same way
with an extra ``action:`` block (one row per group element, one column per
halo element).
"""

from __future__ import annotations

from pathlib import Path

from .digroup import Decomposition, FiniteDigroup
from .errors import MalformedInputError


class DigroupFileError(MalformedInputError):
    def __init__(self, message, line=None, column=None, source=None):
        self.line, self.column, self.source = line, column, source
        where = ":".join(str(x) for x in (source, line, column) if x is not None)
        super().__init__(f"{where}: {message}" if where else message)


def _tokens(raw):
    """Split a line into (token, 1-based column) pairs, dropping comments."""
    text = raw.split("#", 1)[0]
    out = []
    col = 0
    for tok in text.split():
        col = text.index(tok, col)
        out.append((tok, col + 1))
        col += len(tok)
    return out


def parse_digroup(text: str, source=None) -> FiniteDigroup:
    name = None
    elements = None
    unit = None
    tables = {}
    current = None
    last_line = 0

    def fail(msg, line, col=1):
        raise DigroupFileError(msg, line, col, source)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = _tokens(raw)
        if not toks:
            continue
        last_line = lineno
        head, col = toks[0]
        if head in ("vdash:", "dashv:"):
            if elements is None:
                fail("table before 'elements'", lineno, col)
            if len(toks) > 1:
                fail("unexpected text after table header", lineno, toks[1][1])
            current = head[:-1]
            if current in tables:
                fail(f"duplicate {current} table", lineno, col)
            tables[current] = []
            continue
        if head == "name":
            name = " ".join(t for t, _ in toks[1:]) or None
            current = None
        elif head == "elements":
            if len(toks) < 2:
                fail("'elements' needs at least one name", lineno, col)
            elements = [t for t, _ in toks[1:]]
            if len(set(elements)) != len(elements):
                fail("element names must be distinct", lineno, col)
            for t, c in toks[1:]:
                if any(ch in t for ch in "[]@"):
                    fail(f"bad element name {t!r}", lineno, c)
            current = None
        elif head == "unit":
            if len(toks) != 2:
                fail("'unit' takes exactly one name", lineno, col)
            unit = (toks[1][0], lineno)
            current = None
        elif current is not None:
            rows = tables[current]
            if len(rows) == len(elements):
                fail(f"too many rows in {current} table", lineno, col)
            if len(toks) != len(elements):
                fail(f"{current} row has {len(toks)} entries, expected {len(elements)}", lineno,
                     toks[min(len(toks), len(elements)) - 1][1])
            row = []
            for t, c in toks:
                if t not in elements:
                    fail(f"unknown element {t!r}", lineno, c)
                row.append(elements.index(t))
            rows.append(row)
        else:
            fail(f"unexpected {head!r}", lineno, col)

    end = last_line + 1
    if elements is None:
        fail("missing 'elements' line", end)
    if unit is None:
        fail("missing 'unit' line", end)
    if unit[0] not in elements:
        fail(f"unit {unit[0]!r} is not listed in elements", unit[1])
    for t in ("vdash", "dashv"):
        if t not in tables:
            fail(f"missing {t} table", end)
        if len(tables[t]) != len(elements):
            fail(f"{t} table has {len(tables[t])} rows, expected {len(elements)}", end)
    return FiniteDigroup(tables["vdash"], tables["dashv"], elements.index(unit[0]), elements, name)


def load_digroup(path) -> FiniteDigroup:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DigroupFileError(f"cannot read file: {exc.strerror}", source=str(path)) from None
    return parse_digroup(text, source=str(path))


def format_digroup(D: FiniteDigroup) -> str:
    names = D.names
    lines = []
    if D.name:
        lines.append(f"name {D.name}")
    lines.append("elements " + " ".join(names))
    lines.append(f"unit {names[D.bar_unit]}")
    for label, table in (("vdash", D.vdash_table), ("dashv", D.dashv_table)):
        lines.append(f"{label}:")
        lines.extend(" ".join(names[v] for v in row) for row in table)
    return "\n".join(lines) + "\n"


def format_decomposition(D: FiniteDigroup, dec: Decomposition) -> str:
    E, J = dec.halo, dec.group
    lines = [
        "group_part " + " ".join(J.names),
        "halo " + " ".join(E.names),
        f"basepoint {E.names[E.basepoint]}",
        "action:",
    ]
    lines.extend(" ".join(E.names[dec.action(h, v)] for v in range(len(E))) for h in J.elements)
    lines.append("iso:")
    lines.extend(f"{D.names[a]} -> {dec.model.names[dec.iso[a]]}" for a in D.elements())
    lines.append(format_digroup(dec.model).rstrip("\n"))
    return "\n".join(lines) + "\n"
