"""The GSGP text format for Gamma-semigroup tables.

::

    gsgp 1
    m 2 g 1
    elements 0 a
    gammas g0
    table g0
    0 0
    0 0

``#`` starts a comment. ``elements`` and ``gammas`` are optional on input
(defaults ``e0..`` and ``g0..``) and always written on output. Each
``table`` block lists rows by left operand; entry ``b`` of row ``a`` is
``a gamma b``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import GammaSemigroup, validate

VERSION = 1


class GsgpSyntaxError(ValueError):
    def __init__(self, line: int, col: int, msg: str):
        self.line, self.col, self.msg = line, col, msg
        super().__init__(f"line {line}, column {col}: {msg}")


@dataclass(frozen=True)
class GsgpDocument:
    m: int
    g: int
    element_names: tuple
    gamma_names: tuple
    tables: tuple  # g x m x m element indices
    comments: tuple = field(default=())
    version: int = VERSION


def _tokens(raw: str) -> list:
    """(column, token) pairs of a comment-stripped line, columns 1-based."""
    out, i = [], 0
    n = len(raw)
    while i < n:
        if raw[i].isspace():
            i += 1
            continue
        j = i
        while j < n and not raw[j].isspace():
            j += 1
        out.append((i + 1, raw[i:j]))
        i = j
    return out


def _int(lineno: int, col: int, tok: str, what: str) -> int:
    try:
        v = int(tok)
    except ValueError:
        raise GsgpSyntaxError(lineno, col, f"expected integer {what}, got {tok!r}") from None
    if v < 1:
        raise GsgpSyntaxError(lineno, col, f"{what} must be at least 1")
    return v


def parse(text: str) -> GsgpDocument:
    lines = []
    comments = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body, hash_, note = raw.partition("#")
        toks = _tokens(body)
        if toks:
            lines.append((lineno, toks))
        elif hash_:
            comments.append(note.strip())
    pos = 0
    last_line = len(text.splitlines())

    def expect_line(what: str):
        if pos >= len(lines):
            raise GsgpSyntaxError(last_line + 1, 1, f"unexpected end of document, expected {what}")
        return lines[pos]

    lineno, toks = expect_line("header")
    if [t for _, t in toks] != ["gsgp", str(VERSION)]:
        raise GsgpSyntaxError(lineno, toks[0][0], f"expected header 'gsgp {VERSION}'")
    pos += 1

    lineno, toks = expect_line("'m <int> g <int>'")
    if len(toks) != 4 or toks[0][1] != "m" or toks[2][1] != "g":
        raise GsgpSyntaxError(lineno, toks[0][0], "expected 'm <int> g <int>'")
    m = _int(lineno, toks[1][0], toks[1][1], "m")
    g = _int(lineno, toks[3][0], toks[3][1], "g")
    pos += 1

    names = {"elements": tuple(f"e{i}" for i in range(m)), "gammas": tuple(f"g{i}" for i in range(g))}
    sizes = {"elements": m, "gammas": g}
    for key in ("elements", "gammas"):
        if pos < len(lines) and lines[pos][1][0][1] == key:
            lineno, toks = lines[pos]
            vals = tuple(t for _, t in toks[1:])
            if len(vals) != sizes[key]:
                raise GsgpSyntaxError(lineno, toks[0][0], f"arity: {key} lists {len(vals)} names, expected {sizes[key]}")
            if len(set(vals)) != len(vals):
                raise GsgpSyntaxError(lineno, toks[0][0], f"duplicate name in {key}")
            names[key] = vals
            pos += 1
    index = {tok: i for i, tok in enumerate(names["elements"])}

    tables = []
    for c, gname in enumerate(names["gammas"]):
        lineno, toks = expect_line(f"'table {gname}'")
        if toks[0][1] != "table":
            if tables and len(toks) == m:
                raise GsgpSyntaxError(lineno, 1, f"arity: table {names['gammas'][c - 1]} has more than {m} rows")
            raise GsgpSyntaxError(lineno, toks[0][0], f"expected 'table {gname}'")
        if len(toks) != 2 or toks[1][1] != gname:
            raise GsgpSyntaxError(lineno, toks[0][0], f"expected 'table {gname}'")
        pos += 1
        rows = []
        for a in range(m):
            lineno, toks = expect_line(f"row {a} of table {gname}")
            if toks[0][1] == "table":
                raise GsgpSyntaxError(lineno, 1, f"arity: table {gname} has {a} rows, expected {m}")
            if len(toks) != m:
                raise GsgpSyntaxError(lineno, toks[0][0], f"arity: row has {len(toks)} entries, expected {m}")
            row = []
            for col, tok in toks:
                if tok not in index:
                    raise GsgpSyntaxError(lineno, col, f"unknown element {tok!r}")
                row.append(index[tok])
            rows.append(tuple(row))
            pos += 1
        tables.append(tuple(rows))
    if pos < len(lines):
        lineno, toks = lines[pos]
        if len(toks) == m and toks[0][1] != "table":
            raise GsgpSyntaxError(lineno, 1, f"arity: table {names['gammas'][-1]} has more than {m} rows")
        raise GsgpSyntaxError(lineno, toks[0][0], "unexpected content after the last table")
    return GsgpDocument(m, g, names["elements"], names["gammas"], tuple(tables), tuple(comments))


RESERVED = {"gsgp", "m", "g", "elements", "gammas", "table"}


def _check_names(names, what):
    for n in names:
        if not n or "#" in n or any(ch.isspace() for ch in n) or n in RESERVED:
            raise ValueError(f"{what} name {n!r} cannot be written as a GSGP token")


def serialize(doc: GsgpDocument) -> str:
    _check_names(doc.element_names, "element")
    _check_names(doc.gamma_names, "gamma")
    out = [f"gsgp {doc.version}"]
    out += [f"# {c}" if c else "#" for c in doc.comments]
    out.append(f"m {doc.m} g {doc.g}")
    out.append("elements " + " ".join(doc.element_names))
    out.append("gammas " + " ".join(doc.gamma_names))
    for gname, layer in zip(doc.gamma_names, doc.tables):
        out.append(f"table {gname}")
        for row in layer:
            out.append(" ".join(doc.element_names[v] for v in row))
    return "\n".join(out) + "\n"


def from_structure(M: GammaSemigroup, comments=()) -> GsgpDocument:
    return GsgpDocument(M.m, M.g, tuple(M.element_names), tuple(M.gamma_names), M.table, tuple(comments))


def to_structure(doc: GsgpDocument) -> GammaSemigroup:
    return validate(doc.m, doc.g, doc.tables, doc.element_names, doc.gamma_names)


def dumps(M: GammaSemigroup, comments=()) -> str:
    return serialize(from_structure(M, comments))


def loads(text: str) -> GammaSemigroup:
    return to_structure(parse(text))
