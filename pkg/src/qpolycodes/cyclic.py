"""Classical cyclic-code algebra over GF(q).

A length-n cyclic code is an ideal of GF(q)[x]/(x^n - 1), pinned down
by its monic generator polynomial g | x^n - 1 and parity check
h = (x^n - 1)/g.  Repeated factors (p | n) are fully supported.
Enumeration-based operations take an explicit cap and raise
CapExceededError instead of ever returning an estimate.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .fields import Field, FieldTower
from .linalg import GFqMatrix, span_vectors
from .poly import UnivariatePoly, factor_monic

DEFAULT_CAP = 1 << 20


class CapExceededError(RuntimeError):
    """An enumeration would exceed the configured cap."""


def xn_minus_1(field: Field, n: int) -> UnivariatePoly:
    coeffs = [field.neg(1)] + [0] * (n - 1) + [1]
    return UnivariatePoly(field, coeffs)


def factor_xn_minus_1(tower: FieldTower) -> list[tuple[UnivariatePoly, int]]:
    """Complete factorization of x^n - 1 over GF(q), with multiplicities."""
    return factor_monic(xn_minus_1(tower.base, tower.n))


def divisors_of_xn_minus_1(tower: FieldTower) -> list[UnivariatePoly]:
    """Every monic divisor of x^n - 1, sorted by (degree, packed coefficients)."""
    factors = factor_xn_minus_1(tower)
    divisors = [UnivariatePoly.one(tower.base)]
    for f, mult in factors:
        divisors = [d * _pow_poly(f, e) for d in divisors for e in range(mult + 1)]
    return sorted(divisors, key=lambda d: (d.degree, d.to_int()))


def _pow_poly(f: UnivariatePoly, e: int) -> UnivariatePoly:
    out = UnivariatePoly.one(f.field)
    for _ in range(e):
        out = out * f
    return out


@dataclass(frozen=True)
class CyclicCode:
    n: int
    g: UnivariatePoly  # monic generator, divides x^n - 1
    h: UnivariatePoly  # parity check, g*h = x^n - 1

    @property
    def field(self) -> Field:
        return self.g.field

    @property
    def k(self) -> int:
        return self.n - self.g.degree

    @cached_property
    def generator_matrix(self) -> GFqMatrix:
        return standard_generator_matrix(self)


def code_from_generator(g: UnivariatePoly, n: int) -> CyclicCode:
    """Cyclic code <g>; g must be monic and divide x^n - 1."""
    if not g.is_monic():
        raise ValueError("generator polynomial must be monic")
    if g.degree > n:
        raise ValueError(f"deg g = {g.degree} exceeds the length {n}")
    modulus = xn_minus_1(g.field, n)
    h, rem = divmod(modulus, g)
    if not rem.is_zero():
        raise ValueError("generator polynomial does not divide x^n - 1")
    return CyclicCode(n, g, h)


def code_from_parity_check(h: UnivariatePoly, n: int) -> CyclicCode:
    """Cyclic code with parity-check polynomial h."""
    if not h.is_monic():
        raise ValueError("parity-check polynomial must be monic")
    modulus = xn_minus_1(h.field, n)
    g, rem = divmod(modulus, h)
    if not rem.is_zero():
        raise ValueError("parity-check polynomial does not divide x^n - 1")
    return CyclicCode(n, g, h)


def _shifted_row(code: CyclicCode, i: int) -> tuple[int, ...]:
    # coefficients of x^i * g(x) mod x^n - 1, wraparound added in the field
    F = code.field
    n = code.n
    row = [0] * n
    for j, c in enumerate(code.g.coeffs):
        if c:
            row[(i + j) % n] = F.add(row[(i + j) % n], c)
    return tuple(row)


def g1_matrix(code: CyclicCode) -> GFqMatrix:
    """n x n matrix whose row i is x^i * g mod x^n - 1; rank must be n - deg g."""
    return GFqMatrix(code.field, [_shifted_row(code, i) for i in range(code.n)])


def standard_generator_matrix(code: CyclicCode) -> GFqMatrix:
    """Classical k x n generator matrix with rows x^i * g, 0 <= i < k."""
    if code.k == 0:
        raise ValueError("the zero code has no generator rows")
    return GFqMatrix(code.field, [_shifted_row(code, i) for i in range(code.k)])


def encode(code: CyclicCode, message: Sequence[int]) -> tuple[int, ...]:
    """Nonsystematic encoding: coefficients of m(x) * g(x) mod x^n - 1."""
    message = tuple(message)
    if len(message) != code.k:
        raise ValueError(f"message length {len(message)} != dimension {code.k}")
    F = code.field
    out = [0] * code.n
    for i, m in enumerate(message):
        if m == 0:
            continue
        for j, c in enumerate(code.g.coeffs):
            if c:
                pos = (i + j) % code.n
                out[pos] = F.add(out[pos], F.mul(m, c))
    return tuple(out)


def _check_cap(code: CyclicCode, cap: int) -> None:
    if code.field.size**code.k > cap:
        raise CapExceededError(
            f"code has {code.field.size}^{code.k} codewords, cap is {cap}"
        )


def enumerate_codewords(code: CyclicCode, cap: int = DEFAULT_CAP) -> Iterator[tuple[int, ...]]:
    """All q^k codewords exactly once, in message counting order."""
    _check_cap(code, cap)
    if code.k == 0:
        yield (0,) * code.n
        return
    rows = [_shifted_row(code, i) for i in range(code.k)]
    yield from span_vectors(code.field, rows, code.n)


def codeword_set(code: CyclicCode, cap: int = DEFAULT_CAP) -> frozenset[tuple[int, ...]]:
    return frozenset(enumerate_codewords(code, cap))


def minimum_distance(code: CyclicCode, cap: int = DEFAULT_CAP) -> int:
    """Minimum Hamming weight over the nonzero codewords, by full enumeration."""
    if code.k == 0:
        raise ValueError("the zero code has no nonzero codewords")
    _check_cap(code, cap)
    best = code.n
    for w in enumerate_codewords(code, cap):
        weight = sum(1 for c in w if c)
        if 0 < weight < best:
            best = weight
    return best


def weight_distribution(code: CyclicCode, cap: int = DEFAULT_CAP) -> dict[int, int]:
    counts: dict[int, int] = {}
    for w in enumerate_codewords(code, cap):
        weight = sum(1 for c in w if c)
        counts[weight] = counts.get(weight, 0) + 1
    return dict(sorted(counts.items()))


@dataclass(frozen=True)
class CodeReport:
    n: int
    k: int
    d: int | None = None
    weights: dict[int, int] | None = None


def report(code: CyclicCode, cap: int = DEFAULT_CAP, with_weights: bool = False) -> CodeReport:
    """[n, k, d] summary; d (and weights) only when enumeration fits the cap."""
    d = None
    weights = None
    try:
        if code.k > 0:
            d = minimum_distance(code, cap)
        if with_weights:
            weights = weight_distribution(code, cap)
    except CapExceededError:
        pass
    return CodeReport(code.n, code.k, d, weights)


def generator_from_vectors(field: Field, vectors, n: int) -> UnivariatePoly:
    """Generator polynomial of the smallest cyclic code containing the vectors.

    gcd of x^n - 1 with the vectors read as polynomials; an empty
    collection gives x^n - 1 (the zero code).
    """
    from .poly import gcd

    g = xn_minus_1(field, n)
    for v in vectors:
        v = tuple(v)
        if len(v) != n:
            raise ValueError(f"vector length {len(v)} != n = {n}")
        g = gcd(g, UnivariatePoly(field, v))
    return g


def q_cyclotomic_coset(s: int, modulus: int, q: int) -> tuple[int, ...]:
    """The orbit {s * q^j mod modulus}, sorted ascending."""
    if modulus < 1:
        raise ValueError("modulus must be positive")
    out = set()
    v = s % modulus
    while v not in out:
        out.add(v)
        v = (v * q) % modulus
    return tuple(sorted(out))


def is_cyclic_set(words) -> bool:
    """True iff the set is closed under the one-step cyclic right shift."""
    words = set(tuple(w) for w in words)
    lengths = {len(w) for w in words}
    if len(lengths) > 1:
        raise ValueError("words have different lengths")
    return all((w[-1],) + w[:-1] in words for w in words)
