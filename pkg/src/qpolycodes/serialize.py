"""Text formats: coefficient vectors and the matrix interchange document.

Vectors and polynomials are comma-separated field codes, low degree
first ("1,1,0,1" is 1 + x + x^3); a code is the canonical integer of a
GF(q) element (its packed coefficient vector over GF(p)).  Matrices
travel as a small line-oriented document carrying (p, m) so the field
can be rebuilt canonically; round trips are bit-exact.
"""

from __future__ import annotations

from .fields import Field, FieldTower
from .linalg import GFqMatrix
from .poly import UnivariatePoly

MATRIX_HEADER = "gfq-matrix v1"


def parse_vector(text: str, field: Field) -> tuple[int, ...]:
    """Parse comma-separated field codes."""
    parts = [p.strip() for p in text.split(",")]
    out = []
    for p in parts:
        if not p:
            raise ValueError(f"empty coordinate in vector {text!r}")
        try:
            v = int(p)
        except ValueError:
            raise ValueError(f"coordinate {p!r} is not an integer") from None
        if not 0 <= v < field.size:
            raise ValueError(f"coordinate {v} is not a code of a field of size {field.size}")
        out.append(v)
    return tuple(out)


def format_vector(v) -> str:
    return ",".join(str(x) for x in v)


def parse_poly(text: str, field: Field) -> UnivariatePoly:
    return UnivariatePoly(field, parse_vector(text, field))


def _field_pm(field: Field) -> tuple[int, int]:
    p = field.char
    m = 0
    size = field.size
    while size > 1:
        if size % p:
            raise ValueError("field size is not a prime power")  # unreachable
        size //= p
        m += 1
    return p, max(m, 1)


def dump_matrix(mat: GFqMatrix) -> str:
    p, m = _field_pm(mat.field)
    lines = [
        MATRIX_HEADER,
        f"p: {p}",
        f"m: {m}",
        "level: q",
        f"rows: {mat.rows}",
        f"cols: {mat.cols}",
    ]
    lines += [f"row: {format_vector(r)}" for r in mat.entries]
    return "\n".join(lines) + "\n"


def export_matrix(mat: GFqMatrix, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(dump_matrix(mat))


def load_matrix(text: str, tower: FieldTower | None = None) -> GFqMatrix:
    """Parse a matrix document; errors carry the 1-based line number.

    With a tower, the document's (p, m) must match it ("tower
    mismatch"); without one, the canonical tower for (p, m) is built.
    """
    lines = text.splitlines()

    def fail(lineno: int, msg: str):
        raise ValueError(f"line {lineno}: {msg}")

    def take(lineno: int, key: str) -> str:
        if lineno > len(lines):
            fail(lineno, f"missing '{key}:' line (truncated file)")
        line = lines[lineno - 1]
        if not line.startswith(key + ":"):
            fail(lineno, f"expected '{key}: ...', got {line!r}")
        return line[len(key) + 1 :].strip()

    def take_int(lineno: int, key: str) -> int:
        value = take(lineno, key)
        try:
            return int(value)
        except ValueError:
            fail(lineno, f"{key} is not an integer: {value!r}")

    if not lines or lines[0].strip() != MATRIX_HEADER:
        fail(1, f"expected header {MATRIX_HEADER!r}")
    p = take_int(2, "p")
    m = take_int(3, "m")
    level = take(4, "level")
    if level != "q":
        fail(4, f"unsupported level {level!r}")
    rows = take_int(5, "rows")
    cols = take_int(6, "cols")
    if tower is not None:
        if (tower.p, tower.m) != (p, m):
            raise ValueError(
                f"tower mismatch: document is over GF({p}^{m}), tower has GF({tower.p}^{tower.m})"
            )
        field = tower.base
    else:
        field = FieldTower(p, m, 1).base
    entries = []
    for i in range(rows):
        lineno = 7 + i
        value = take(lineno, "row")
        try:
            row = parse_vector(value, field)
        except ValueError as e:
            fail(lineno, str(e))
        if len(row) != cols:
            fail(lineno, f"expected {cols} entries, got {len(row)}")
        entries.append(row)
    if len(lines) > 6 + rows and any(l.strip() for l in lines[6 + rows :]):
        fail(7 + rows, "trailing content after final row")
    return GFqMatrix(field, entries)


def import_matrix(path, tower: FieldTower | None = None) -> GFqMatrix:
    with open(path, "r", encoding="ascii") as fh:
        return load_matrix(fh.read(), tower)
