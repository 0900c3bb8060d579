"""Linearized polynomials sum(l_i * x^(q^i)), i < n, with coefficients in GF(q).

Evaluation is GF(q)-linear on GF(q^n).  evaluate_in_coords is the same
map written in normal coordinates, where it becomes the cyclic
convolution c_i = sum_j l_j * y[(i-j) mod n]; agreement of the two is
checked exhaustively in the test suite and is the mechanism that makes
the image of such a map a cyclic code.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .fields import TABLE_LIMIT, FieldElement, FieldTower
from .linalg import GFqMatrix
from .normal import NormalBasis, _ext_value


@dataclass(frozen=True)
class QPolynomial:
    tower: FieldTower
    coeffs: tuple[int, ...]  # length exactly n, GF(q) codes

    @classmethod
    def from_coeffs(cls, tower: FieldTower, coeffs: Sequence[int]) -> "QPolynomial":
        coeffs = tuple(coeffs)
        if len(coeffs) > tower.n:
            raise ValueError(f"at most {tower.n} coefficients allowed, got {len(coeffs)}")
        for c in coeffs:
            if not 0 <= c < tower.q:
                raise ValueError(f"coefficient {c} is not a GF(q) code (q = {tower.q})")
        return cls(tower, coeffs + (0,) * (tower.n - len(coeffs)))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self) -> str:
        return "qpoly:" + ",".join(str(c) for c in self.coeffs)


def evaluate(ell: QPolynomial, y) -> FieldElement:
    """sum l_i * y^(q^i) in GF(q^n)."""
    tower = ell.tower
    return FieldElement(tower.ext, evaluate_value(ell, _ext_value(tower, y)))


def evaluate_value(ell: QPolynomial, y: int) -> int:
    """Integer-code evaluation; the hot path for whole-field sweeps."""
    ext = ell.tower.ext
    if y == 0:
        return 0
    if ext._exp is None and ext.size <= TABLE_LIMIT:
        ext._build_tables()
    if ext._exp is not None:
        # fused scalar * Frobenius power through the exp/log tables
        rm1 = ext.size - 1
        exp, log = ext._exp, ext._log
        ly = log[y]
        q = ext.subfield.size
        acc = 0
        add = ext.add
        for i, c in enumerate(ell.coeffs):
            if c:
                acc = add(acc, exp[(ly * (q**i) + log[c]) % rm1])
        return acc
    acc = 0
    for i, c in enumerate(ell.coeffs):
        if c:
            acc = ext.add(acc, ext.mul(c, ext.frobenius(y, i)))
    return acc


def evaluate_in_coords(ell: QPolynomial, y_coords: Sequence[int]) -> tuple[int, ...]:
    """The same map on normal coordinates: c_i = sum_j l_j * y[(i-j) mod n]."""
    tower = ell.tower
    n = tower.n
    y = tuple(y_coords)
    if len(y) != n:
        raise ValueError(f"expected {n} coordinates, got {len(y)}")
    F = tower.base
    out = []
    for i in range(n):
        acc = 0
        for j, c in enumerate(ell.coeffs):
            if c:
                yy = y[(i - j) % n]
                if yy:
                    acc = F.add(acc, F.mul(c, yy))
        out.append(acc)
    return tuple(out)


def image_basis(ell: QPolynomial, basis: NormalBasis) -> tuple[tuple[int, ...], ...]:
    """Canonical GF(q)-basis of Im(ell) in normal coordinates.

    Columns of the map's coordinate matrix are the images of the basis
    conjugates, computed by honest field evaluation; the column space
    is extracted as RREF rows of the transpose.
    """
    tower = ell.tower
    images = [basis.coords(evaluate_value(ell, b)) for b in basis.conjugate_values]
    return GFqMatrix(tower.base, images).row_space_rows()


def kernel_basis(ell: QPolynomial, basis: NormalBasis) -> tuple[tuple[int, ...], ...]:
    """Canonical basis of {y-coords : ell(y) = 0}."""
    tower = ell.tower
    n = tower.n
    images = [basis.coords(evaluate_value(ell, b)) for b in basis.conjugate_values]
    mat = GFqMatrix(tower.base, [[images[j][i] for j in range(n)] for i in range(n)])
    return mat.nullspace()
