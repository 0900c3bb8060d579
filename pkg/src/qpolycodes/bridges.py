"""Executable conversions between four representations of a cyclic code.

The representations: a generator polynomial g, its parity check h, a
check element lambda in GF(q^n)^* (codewords are the kernel of
c -> sum c_i lambda^(q^i)), and a linearized polynomial ell (codewords
are the normal coordinates of the image of y -> sum ell_i y^(q^i)).

Writing both scalar maps in normal coordinates turns them into cyclic
convolutions, so every code here is the column span (image) or kernel
of a circulant matrix and the conversions reduce to index bookkeeping:

  * image code of ell   = ideal generated by ell(x) = sum ell_i x^i,
  * kernel code of lambda with coords (l_0..l_{n-1}) = annihilator of
    the ideal generated by sum l_i x^i.

ell_from_generator therefore transcribes g's coefficients directly
(ell_i = g_i), which makes the image code equal <g> for every choice
of normal basis.  The reversed transcription (ell_{n-i} = g_i) is
deliberately NOT used: it yields the reciprocal code <g*> (its
circulant has the shifts of g as rows, but the image is generated by
the columns).  verify_equivalence checks all of this empirically, one
assertion per claim, and never assumes a rank identity it can test.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .cyclic import (
    DEFAULT_CAP,
    CapExceededError,
    CyclicCode,
    code_from_generator,
    g1_matrix,
    is_cyclic_set,
    standard_generator_matrix,
    xn_minus_1,
)
from .fields import DEFAULT_DLOG_BOUND, FieldElement, FieldTower
from .linalg import GFqMatrix, span_vectors
from .normal import NormalBasis, _ext_value
from .poly import UnivariatePoly
from .qpoly import QPolynomial, evaluate_value


@dataclass(frozen=True)
class CheckElement:
    tower: FieldTower
    value: int  # nonzero code in GF(q^n)

    def __post_init__(self):
        if self.value == 0:
            raise ValueError("check element must be nonzero")
        if not 0 < self.value < self.tower.r:
            raise ValueError("check element out of range for GF(q^n)")

    @classmethod
    def from_element(cls, tower: FieldTower, x) -> "CheckElement":
        return cls(tower, _ext_value(tower, x))

    @property
    def element(self) -> FieldElement:
        return FieldElement(self.tower.ext, self.value)

    def normal_coords(self, basis: NormalBasis) -> tuple[int, ...]:
        return basis.coords(self.value)


@dataclass(frozen=True)
class ImageCodeSpec:
    ell: QPolynomial
    basis: NormalBasis

    def __post_init__(self):
        if self.ell.tower != self.basis.tower:
            raise ValueError("linearized polynomial and basis use different towers")


# -- the image-code side ------------------------------------------------------


def image_code_generator_matrix(ell: QPolynomial) -> GFqMatrix:
    """The n x n circulant G with entry (i, j) = ell[(i - j) mod n].

    Codewords are the products G y over all y in GF(q)^n (the column
    span); the code's dimension is rank(G).
    """
    return GFqMatrix.circulant(ell.tower.base, ell.coeffs)


def matrix_code_basis(ell: QPolynomial) -> tuple[tuple[int, ...], ...]:
    """Canonical basis of {G y : y}: RREF rows of the circulant's transpose."""
    return image_code_generator_matrix(ell).transpose().row_space_rows()


def image_code_by_definition(
    spec: ImageCodeSpec, cap: int = DEFAULT_CAP
) -> frozenset[tuple[int, ...]]:
    """Enumerate every y in GF(q^n) and collect coords(ell(y)).

    This is the definitional oracle: honest field evaluation of ell at
    all q^n points, mapped through the basis, independent of any
    circulant shortcut.
    """
    tower = spec.basis.tower
    if tower.r > cap:
        raise CapExceededError(f"field has {tower.r} elements, cap is {cap}")
    table = spec.basis.coords_table()
    packed = {table[evaluate_value(spec.ell, y)] for y in range(tower.r)}
    q, n = tower.q, tower.n
    out = set()
    for p in packed:
        digits = []
        for _ in range(n):
            p, d = divmod(p, q)
            digits.append(d)
        out.add(tuple(digits))
    return frozenset(out)


def ell_from_generator(g: UnivariatePoly, n: int, tower: FieldTower) -> QPolynomial:
    """Linearized-polynomial coefficients whose image code is <g>.

    Direct transcription of g reduced mod x^n - 1 (so the full-degree
    divisor x^n - 1 maps to the zero map / zero code).  The image code
    then equals <g> for every normal basis.
    """
    if g.field != tower.base:
        raise ValueError("generator polynomial is not over this tower's GF(q)")
    code_from_generator(g, n)  # validates monic divisor of x^n - 1
    F = tower.base
    coeffs = [0] * n
    for i, c in enumerate(g.coeffs):
        if c:
            coeffs[i % n] = F.add(coeffs[i % n], c)
    return QPolynomial.from_coeffs(tower, coeffs)


# -- the check-element side ---------------------------------------------------


def lambda_from_parity_check(h: UnivariatePoly, basis: NormalBasis) -> CheckElement:
    """lambda = sum h_i alpha^(q^i) for the parity-check polynomial h."""
    tower = basis.tower
    n = tower.n
    if h.is_zero():
        raise ValueError("parity-check polynomial must be nonzero")
    if h.degree >= n:
        raise ValueError(
            "parity-check degree must be at most n - 1 (the full-space code is unsupported)"
        )
    if not h.divides(xn_minus_1(tower.base, n)):
        raise ValueError("parity-check polynomial must divide x^n - 1")
    ext = tower.ext
    acc = 0
    for i, c in enumerate(h.coeffs):
        if c:
            acc = ext.add(acc, ext.mul(tower.embed(c), basis.conjugate_values[i]))
    return CheckElement(tower, acc)


def lambda_constraint_matrix(lam: CheckElement) -> GFqMatrix:
    """n x n GF(q) matrix of c -> sum c_i lambda^(q^i) in the power basis."""
    tower = lam.tower
    n = tower.n
    conj = [tower.ext.decode(v) for v in _conjugates(tower, lam.value)]
    return GFqMatrix(tower.base, [[conj[j][i] for j in range(n)] for i in range(n)])


def _conjugates(tower: FieldTower, v: int) -> list[int]:
    out = [v]
    for _ in range(tower.n - 1):
        v = tower.ext.frobenius(v, 1)
        out.append(v)
    return out


def code_from_lambda(lam: CheckElement) -> tuple[tuple[int, ...], ...]:
    """Canonical basis of C_lambda = {c : sum c_i lambda^(q^i) = 0}."""
    return lambda_constraint_matrix(lam).nullspace()


def lambda_code_set(lam: CheckElement, cap: int = DEFAULT_CAP) -> frozenset[tuple[int, ...]]:
    basis = code_from_lambda(lam)
    tower = lam.tower
    return frozenset(span_vectors(tower.base, basis, tower.n, cap))


def b_lambda_matrix(lam: CheckElement, basis: NormalBasis) -> GFqMatrix:
    """Circulant of lambda's normal coordinates; dim C_lambda = n - rank."""
    return GFqMatrix.circulant(lam.tower.base, lam.normal_coords(basis))


def coset_dimension_bound(
    lam: CheckElement,
    gamma: FieldElement | int | None = None,
    bound: int = DEFAULT_DLOG_BOUND,
) -> int:
    """Lower bound n - |coset| on dim C_lambda from the discrete log of lambda."""
    from .cyclic import q_cyclotomic_coset

    tower = lam.tower
    if gamma is None:
        gamma = tower.primitive_element()
    s = tower.discrete_log(gamma, lam.value, bound)
    coset = q_cyclotomic_coset(s, tower.r - 1, tower.q)
    return tower.n - len(coset)


# -- the full equivalence check -----------------------------------------------


@dataclass(frozen=True)
class Assertion:
    id: str
    status: str  # "pass" | "fail" | "skip"
    detail: str = ""

    def line(self) -> str:
        return f"{self.status.upper()} {self.id}" + (f" {self.detail}" if self.detail else "")


@dataclass(frozen=True)
class EquivalenceReport:
    q: int
    n: int
    g: str
    k: int
    assertions: tuple[Assertion, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(a.status != "fail" for a in self.assertions)

    def lines(self) -> list[str]:
        tag = f"g={self.g} [q={self.q}, n={self.n}, k={self.k}]"
        return [f"{a.line()} ({tag})" for a in self.assertions]

    def to_doc(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "g": self.g,
            "k": self.k,
            "passed": self.passed,
            "assertions": [
                {"id": a.id, "status": a.status, "detail": a.detail} for a in self.assertions
            ],
        }


def verify_equivalence(
    g: UnivariatePoly,
    n: int,
    basis: NormalBasis,
    cap: int = DEFAULT_CAP,
) -> EquivalenceReport:
    """Build all four representations of <g> and check them against each other.

    Assertions (each pass/fail/skip):
      set:matrix=standard      column span of the ell-circulant vs <g> (echelon)
      set:definition=standard  definitional image enumeration vs <g> (sets)
      set:definition=matrix    the two image routes against each other (sets)
      set:lambda=standard      kernel of the check element vs <g> (echelon)
      rank:G                   rank of the ell-circulant = n - deg g
      rank:G1                  rank of the n x n shifted-generator matrix = n - deg g
      dim:lambda               dim C_lambda = n - rank(B_lambda) = deg h
      cyclic:definition        definitional codeword set is shift-closed
    """
    tower = basis.tower
    if g.field != tower.base:
        raise ValueError("generator polynomial is not over this tower's GF(q)")
    code = code_from_generator(g, n)
    q, k = tower.q, code.k
    checks: list[Assertion] = []

    std_rows = (
        standard_generator_matrix(code).row_space_rows() if k > 0 else ()
    )

    ell = ell_from_generator(g, n, tower)
    circ = image_code_generator_matrix(ell)
    matrix_rows = circ.transpose().row_space_rows()
    checks.append(
        _assert(
            "set:matrix=standard",
            matrix_rows == std_rows,
            f"k={k}",
        )
    )

    rank_g = circ.rank()
    checks.append(_assert("rank:G", rank_g == n - g.degree, f"rank={rank_g}, deg g={g.degree}"))
    rank_g1 = g1_matrix(code).rank()
    checks.append(_assert("rank:G1", rank_g1 == n - g.degree, f"rank={rank_g1}"))

    def_set: frozenset | None = None
    if tower.r <= cap and q**k <= cap:
        def_set = image_code_by_definition(ImageCodeSpec(ell, basis), cap)
        code_set = frozenset(span_vectors(tower.base, std_rows, n, cap))
        checks.append(
            _assert("set:definition=standard", def_set == code_set, f"|C|={len(code_set)}")
        )
        matrix_set = frozenset(span_vectors(tower.base, matrix_rows, n, cap))
        checks.append(_assert("set:definition=matrix", def_set == matrix_set))
        checks.append(_assert("cyclic:definition", is_cyclic_set(def_set)))
    else:
        reason = f"enumeration exceeds cap {cap}"
        checks.append(Assertion("set:definition=standard", "skip", reason))
        checks.append(Assertion("set:definition=matrix", "skip", reason))
        checks.append(Assertion("cyclic:definition", "skip", reason))

    if code.h.degree <= n - 1:
        lam = lambda_from_parity_check(code.h, basis)
        lam_rows = code_from_lambda(lam)
        checks.append(
            _assert("set:lambda=standard", lam_rows == std_rows, f"dim={len(lam_rows)}")
        )
        rank_b = b_lambda_matrix(lam, basis).rank()
        checks.append(
            _assert(
                "dim:lambda",
                len(lam_rows) == n - rank_b == code.h.degree,
                f"dim={len(lam_rows)}, n-rank(B)={n - rank_b}, deg h={code.h.degree}",
            )
        )
    else:
        reason = "parity-check degree n unsupported (full-space code)"
        checks.append(Assertion("set:lambda=standard", "skip", reason))
        checks.append(Assertion("dim:lambda", "skip", reason))

    return EquivalenceReport(q, n, str(g), k, tuple(checks))


def _assert(check_id: str, ok: bool, detail: str = "") -> Assertion:
    return Assertion(check_id, "pass" if ok else "fail", detail)
