"""Text formats: ``.sr`` semirings, ``.band`` bands and ``.rees`` Rees data.

``.sr``::

    # optional comments
    order 2
    add
    0 1
    1 1
    mul
    0 0
    0 1

``.band`` is ``order N``, ``o K``, ``mul`` and N rows. ``.rees`` names the
two bands and the ring by path (relative to the ``.rees`` file), then gives
``P`` as ``|L|`` rows of ``|I|`` ring elements::

    bandI left2.band
    bandL point.band
    ring z2.sr
    P
    0 0
"""
from __future__ import annotations

from pathlib import Path

from .core import FiniteSemiring, TableError, validate
from .structures import Band, ReesSpec, ReesSpecError

__all__ = [
    "ParseError",
    "parse_semiring",
    "serialize_semiring",
    "canonical_text",
    "read_semiring",
    "parse_band",
    "serialize_band",
    "parse_rees",
    "read_rees",
    "serialize_rees",
]


class ParseError(ValueError):
    """Syntax error in an input file (distinct from an axiom violation)."""


def _lines(text):
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((lineno, line))
    return out


def _expect(lines, pos, keyword):
    if pos >= len(lines):
        raise ParseError(f"unexpected end of input, expected {keyword!r}")
    lineno, line = lines[pos]
    words = line.split()
    if words[0] != keyword:
        raise ParseError(f"line {lineno}: expected {keyword!r}, got {line!r}")
    return lineno, words[1:]


def _int(word, lineno):
    try:
        return int(word)
    except ValueError:
        raise ParseError(f"line {lineno}: not an integer: {word!r}") from None


def _rows(lines, pos, n, width, name):
    rows = []
    for k in range(n):
        if pos + k >= len(lines):
            raise ParseError(f"{name}: expected {n} rows, got {k}")
        lineno, line = lines[pos + k]
        words = line.split()
        if not words[0].lstrip("-").isdigit():
            raise ParseError(f"line {lineno}: {name}: expected {n} rows, got {k}")
        row = [_int(w, lineno) for w in words]
        if len(row) != width:
            raise ParseError(f"line {lineno}: {name} row has {len(row)} entries, expected {width}")
        rows.append(row)
    return rows, pos + n


def _order_line(lines, pos):
    lineno, args = _expect(lines, pos, "order")
    if len(args) != 1:
        raise ParseError(f"line {lineno}: 'order' takes one integer")
    n = _int(args[0], lineno)
    if n < 1:
        raise ParseError(f"line {lineno}: order must be positive")
    return n


def _end(lines, pos):
    if pos < len(lines):
        lineno, line = lines[pos]
        raise ParseError(f"line {lineno}: unexpected content {line!r}")


def parse_semiring(text: str) -> FiniteSemiring:
    """Parse and validate; raises ParseError on syntax, AxiomError on axioms."""
    lines = _lines(text)
    n = _order_line(lines, 0)
    _expect(lines, 1, "add")
    add, pos = _rows(lines, 2, n, n, "add")
    _expect(lines, pos, "mul")
    mul, pos = _rows(lines, pos + 1, n, n, "mul")
    _end(lines, pos)
    try:
        return validate(add, mul)
    except TableError as exc:
        raise ParseError(str(exc)) from None


def _table_text(table):
    return "".join(" ".join(map(str, row)) + "\n" for row in table)


def serialize_semiring(S: FiniteSemiring, comment: str | None = None) -> str:
    head = f"# {comment}\n" if comment else ""
    return f"{head}order {S.order}\nadd\n{_table_text(S.add)}mul\n{_table_text(S.mul)}"


def canonical_text(text: str) -> str:
    """A file's content as :func:`serialize_semiring` would write it, keeping a leading comment."""
    first = text.lstrip().splitlines()[0] if text.strip() else ""
    comment = first[1:].strip() if first.startswith("#") else None
    return serialize_semiring(parse_semiring(text), comment=comment)


def read_semiring(path) -> FiniteSemiring:
    return parse_semiring(Path(path).read_text())


def parse_band(text: str) -> Band:
    lines = _lines(text)
    n = _order_line(lines, 0)
    lineno, args = _expect(lines, 1, "o")
    if len(args) != 1:
        raise ParseError(f"line {lineno}: 'o' takes one integer")
    o = _int(args[0], lineno)
    _expect(lines, 2, "mul")
    rows, pos = _rows(lines, 3, n, n, "mul")
    _end(lines, pos)
    if any(not 0 <= x < n for r in rows for x in r):
        raise ParseError("band entry out of range")
    return Band(rows, o)


def serialize_band(band: Band) -> str:
    return f"order {band.order}\no {band.o}\nmul\n{_table_text(band.table)}"


def parse_rees(text: str, base_dir=".") -> ReesSpec:
    base = Path(base_dir)
    lines = _lines(text)
    refs = {}
    pos = 0
    for key in ("bandI", "bandL", "ring"):
        lineno, args = _expect(lines, pos, key)
        if len(args) != 1:
            raise ParseError(f"line {lineno}: {key!r} takes one path")
        refs[key] = base / args[0]
        pos += 1
    try:
        band_i = parse_band(refs["bandI"].read_text())
        band_l = parse_band(refs["bandL"].read_text())
        ring = read_semiring(refs["ring"])
    except OSError as exc:
        raise ParseError(f"cannot read referenced file: {exc}") from None
    _expect(lines, pos, "P")
    P, pos = _rows(lines, pos + 1, band_l.order, band_i.order, "P")
    _end(lines, pos)
    try:
        return ReesSpec(band_i, band_l, ring, P)
    except ReesSpecError as exc:
        raise ParseError(str(exc)) from None


def read_rees(path) -> ReesSpec:
    path = Path(path)
    return parse_rees(path.read_text(), path.parent)


def serialize_rees(spec: ReesSpec, band_i_ref: str, band_l_ref: str, ring_ref: str) -> str:
    return f"bandI {band_i_ref}\nbandL {band_l_ref}\nring {ring_ref}\nP\n{_table_text(spec.P)}"
