"""Dense exact linear algebra over GF(q).

Matrices are immutable row-major tuples of field codes.  Elimination
is plain Gaussian elimination with the leftmost-nonzero pivot and
first-row tiebreak; arithmetic is exact, so the only concern is
determinism, never conditioning.
"""

from __future__ import annotations

from typing import Iterable, Sequence


class GFqMatrix:
    __slots__ = ("field", "rows", "cols", "entries", "_rref")

    def __init__(self, field, entries: Iterable[Iterable[int]]):
        rows = tuple(tuple(r) for r in entries)
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(rows[0])
        for r in rows:
            if len(r) != width:
                raise ValueError("ragged rows")
            for v in r:
                if not 0 <= v < field.size:
                    raise ValueError(f"entry {v} is not a code of {field!r}")
        self.field = field
        self.rows = len(rows)
        self.cols = width
        self.entries = rows
        self._rref = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def identity(cls, field, n: int) -> "GFqMatrix":
        return cls(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field, rows: int, cols: int) -> "GFqMatrix":
        return cls(field, [[0] * cols for _ in range(rows)])

    @classmethod
    def circulant(cls, field, first_column: Sequence[int]) -> "GFqMatrix":
        """n x n matrix with entry (i, j) = v[(i - j) mod n]."""
        v = tuple(first_column)
        if not v:
            raise ValueError("circulant needs a nonempty vector")
        n = len(v)
        return cls(field, [[v[(i - j) % n] for j in range(n)] for i in range(n)])

    # -- basics ---------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GFqMatrix)
            and other.field == self.field
            and other.entries == self.entries
        )

    def __hash__(self) -> int:
        return hash((self.field, self.entries))

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def transpose(self) -> "GFqMatrix":
        return GFqMatrix(self.field, zip(*self.entries))

    def mat_vec(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.cols:
            raise ValueError(f"vector length {len(v)} != {self.cols} columns")
        F = self.field
        out = []
        for r in self.entries:
            acc = 0
            for a, b in zip(r, v):
                if a and b:
                    acc = F.add(acc, F.mul(a, b))
            out.append(acc)
        return tuple(out)

    def mat_mul(self, other: "GFqMatrix") -> "GFqMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        cols = other.transpose().entries
        F = self.field
        out = []
        for r in self.entries:
            row = []
            for c in cols:
                acc = 0
                for a, b in zip(r, c):
                    if a and b:
                        acc = F.add(acc, F.mul(a, b))
                row.append(acc)
            out.append(row)
        return GFqMatrix(F, out)

    # -- elimination ----------------------------------------------------------

    def rref(self) -> tuple["GFqMatrix", tuple[int, ...]]:
        """Reduced row echelon form and its pivot columns (cached)."""
        if self._rref is None:
            F = self.field
            rows = [list(r) for r in self.entries]
            pivots = []
            r = 0
            for c in range(self.cols):
                if r >= len(rows):
                    break
                pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
                if pivot is None:
                    continue
                rows[r], rows[pivot] = rows[pivot], rows[r]
                inv = F.inv(rows[r][c])
                if inv != 1:
                    rows[r] = [F.mul(inv, x) for x in rows[r]]
                for i in range(len(rows)):
                    if i != r and rows[i][c]:
                        f = rows[i][c]
                        rows[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(rows[i], rows[r])]
                pivots.append(c)
                r += 1
            self._rref = (GFqMatrix(F, rows), tuple(pivots))
        return self._rref

    def rank(self) -> int:
        return len(self.rref()[1])

    def row_space_rows(self) -> tuple[tuple[int, ...], ...]:
        """Nonzero RREF rows: the canonical form of the row space."""
        reduced, pivots = self.rref()
        return reduced.entries[: len(pivots)]

    def row_space_equal(self, other: "GFqMatrix") -> bool:
        if self.cols != other.cols:
            raise ValueError("column counts differ")
        return self.row_space_rows() == other.row_space_rows()

    def nullspace(self) -> tuple[tuple[int, ...], ...]:
        """Canonical (RREF) basis of {v : M v = 0}; empty tuple if trivial."""
        F = self.field
        reduced, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in set(pivots)]
        basis = []
        for f in free:
            v = [0] * self.cols
            v[f] = 1
            for i, p in enumerate(pivots):
                v[p] = F.neg(reduced.entries[i][f])
            basis.append(v)
        if not basis:
            return ()
        return GFqMatrix(F, basis).row_space_rows()

    def inverse(self) -> "GFqMatrix":
        if self.rows != self.cols:
            raise ValueError("only square matrices can be inverted")
        n = self.rows
        aug = GFqMatrix(
            self.field,
            [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(self.entries)],
        )
        reduced, pivots = aug.rref()
        if tuple(pivots) != tuple(range(n)):
            raise ValueError("matrix is singular")
        return GFqMatrix(self.field, [r[n:] for r in reduced.entries])

    def __repr__(self) -> str:
        return f"GFqMatrix({self.field!r}, {self.rows}x{self.cols})"

    def __str__(self) -> str:
        return "\n".join(",".join(str(v) for v in r) for r in self.entries)


def span_vectors(field, vectors: Sequence[Sequence[int]], width: int, cap: int | None = None):
    """Iterate the GF(q)-span of the given vectors, each combination once.

    Coefficient vectors run in counting order over field codes (low
    index fastest); each step adds one precomputed scalar multiple to
    the running combination.  Code increments are not field increments
    (GF(4) code 2 is x, not 1+1), hence the delta table.  Yields tuples.
    """
    vecs = [tuple(v) for v in vectors]
    for v in vecs:
        if len(v) != width:
            raise ValueError("span vector of wrong width")
    q = field.size
    total = q ** len(vecs)
    if cap is not None and total > cap:
        raise ValueError(f"span of {total} vectors exceeds cap {cap}")
    F = field
    # delta[d] = (code after d) - (code d) in the field; scaled[j][e] = e * vecs[j]
    delta = [F.sub((d + 1) % q, d) for d in range(q)]
    scaled = [[tuple(F.mul(e, x) for x in v) for e in range(q)] for v in vecs]
    acc = (0,) * width
    digits = [0] * len(vecs)
    yield acc
    for _ in range(total - 1):
        j = 0
        while True:
            d = digits[j]
            step = scaled[j][delta[d]]
            acc = tuple(F.add(a, b) for a, b in zip(acc, step))
            digits[j] = (d + 1) % q
            if digits[j]:
                break
            j += 1
        yield acc
