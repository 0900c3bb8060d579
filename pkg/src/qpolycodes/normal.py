"""Normal elements of GF(q^n) over GF(q) and the coordinate maps they induce.

An element a is normal when its Frobenius conjugates a, a^q, ...,
a^(q^(n-1)) are linearly independent over GF(q); the test is a rank
computation on the n x n matrix of conjugate coordinates in the power
basis.  A NormalBasis precomputes that matrix and its inverse so that
coords() inside enumeration loops is a single matrix-vector product
(or, for whole-field sweeps, one lookup in a lazily built table).

Frobenius acts on normal coordinates as the cyclic right shift:
coords(x^q) = rshift(coords(x)).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .fields import FieldElement, FieldTower
from .linalg import GFqMatrix


def _ext_value(tower: FieldTower, x) -> int:
    if isinstance(x, FieldElement):
        if x.field is not tower.ext and x.field != tower.ext:
            raise ValueError("element does not live in this tower's GF(q^n)")
        return x.value
    if not 0 <= x < tower.r:
        raise ValueError(f"{x} is not a GF(q^n) code (r = {tower.r})")
    return x


def conjugates(tower: FieldTower, a) -> tuple[int, ...]:
    """(a^(q^0), ..., a^(q^(n-1))) as integer codes."""
    v = _ext_value(tower, a)
    out = [v]
    for _ in range(tower.n - 1):
        v = tower.ext.frobenius(v, 1)
        out.append(v)
    return tuple(out)


def conjugate_matrix(tower: FieldTower, a) -> GFqMatrix:
    """n x n matrix whose column i holds a^(q^i) in the power basis."""
    cols = [tower.ext.decode(c) for c in conjugates(tower, a)]
    n = tower.n
    return GFqMatrix(tower.base, [[cols[j][i] for j in range(n)] for i in range(n)])


def is_normal(tower: FieldTower, a) -> bool:
    """True iff the Frobenius conjugates of a span GF(q^n) over GF(q)."""
    if _ext_value(tower, a) == 0:
        return False
    return conjugate_matrix(tower, a).rank() == tower.n


def normal_elements(tower: FieldTower) -> Iterator[int]:
    """Codes of all normal elements, in canonical enumeration order."""
    for v in range(1, tower.r):
        if is_normal(tower, v):
            yield v


@dataclass(frozen=True, eq=False)
class NormalBasis:
    tower: FieldTower
    alpha: int
    conjugate_values: tuple[int, ...]
    basis_matrix: GFqMatrix
    inverse_matrix: GFqMatrix
    _packed: dict = field(default_factory=dict, repr=False)

    @classmethod
    def from_element(cls, tower: FieldTower, a) -> "NormalBasis":
        v = _ext_value(tower, a)
        mat = conjugate_matrix(tower, v)
        if mat.rank() != tower.n:
            raise ValueError("element is not normal")
        return cls(tower, v, conjugates(tower, v), mat, mat.inverse())

    @property
    def alpha_element(self) -> FieldElement:
        return FieldElement(self.tower.ext, self.alpha)

    def coords(self, x) -> tuple[int, ...]:
        """The unique vector (c_0, ..., c_{n-1}) with x = sum c_i alpha^(q^i)."""
        v = _ext_value(self.tower, x)
        return self.inverse_matrix.mat_vec(self.tower.ext.decode(v))

    def from_coords(self, v: Sequence[int]) -> FieldElement:
        """Inverse of coords."""
        v = tuple(v)
        if len(v) != self.tower.n:
            raise ValueError(f"expected {self.tower.n} coordinates, got {len(v)}")
        digits = self.basis_matrix.mat_vec(v)
        return FieldElement(self.tower.ext, self.tower.ext.encode(digits))

    # -- packed fast path (whole-field sweeps) --------------------------------

    def coords_table(self) -> list[int]:
        """coords of every field element, packed base q, built once on demand.

        Exploits linearity: clearing the lowest nonzero power-basis digit
        of y reduces coords(y) to a previously tabled value plus the
        coords of a single-digit element.
        """
        cached = self._packed.get("table")
        if cached is not None:
            return cached
        tower = self.tower
        q, n, r = tower.q, tower.n, tower.r
        unit = [[0] * q for _ in range(n)]
        for j in range(n):
            for d in range(1, q):
                unit[j][d] = _pack(self.inverse_matrix.mat_vec(_digit_vec(n, j, d)), q)
        table = [0] * r
        F = tower.base
        if q == 2:
            for y in range(1, r):
                low = y & -y
                table[y] = table[y ^ low] ^ unit[low.bit_length() - 1][1]
        else:
            for y in range(1, r):
                rest, j = y, 0
                while rest % q == 0:
                    rest //= q
                    j += 1
                d = rest % q
                base_val = y - d * q**j
                table[y] = _pack_add(F, table[base_val], unit[j][d], n)
        self._packed["table"] = table
        return table


def _digit_vec(n: int, j: int, d: int) -> list[int]:
    v = [0] * n
    v[j] = d
    return v


def _pack(vec: Sequence[int], q: int) -> int:
    value = 0
    for c in reversed(tuple(vec)):
        value = value * q + c
    return value


def _pack_add(F, a: int, b: int, n: int) -> int:
    q = F.size
    out = 0
    mult = 1
    for _ in range(n):
        out += F.add(a % q, b % q) * mult
        a //= q
        b //= q
        mult *= q
    return out


def find_normal(tower: FieldTower) -> NormalBasis:
    """Normal basis on the first normal element in enumeration order."""
    for v in normal_elements(tower):
        return NormalBasis.from_element(tower, v)
    raise ValueError("no normal element found")  # impossible by the normal basis theorem
