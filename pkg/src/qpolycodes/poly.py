"""Univariate polynomials over a finite field, as normalized coefficient tuples.

Coefficients are the owning field's integer codes, low degree first,
with no trailing zeros (the zero polynomial is the empty tuple).  The
canonical order on monic polynomials of one degree is the integer
order of their packed coefficient vectors (low-degree coefficient
least significant), which is what "lexicographically smallest monic
irreducible" means throughout.

Irreducibility is decided by trial division, which at desk-scale
degrees is instant and doubles as its own certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


def _normalize(coeffs) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class UnivariatePoly:
    field: object  # a fields.Field; duck-typed to avoid an import cycle
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _normalize(self.coeffs))

    @classmethod
    def zero(cls, field) -> "UnivariatePoly":
        return cls(field, ())

    @classmethod
    def one(cls, field) -> "UnivariatePoly":
        return cls(field, (1,))

    @classmethod
    def x(cls, field) -> "UnivariatePoly":
        return cls(field, (0, 1))

    @classmethod
    def from_coeffs(cls, field, coeffs) -> "UnivariatePoly":
        coeffs = tuple(coeffs)
        for c in coeffs:
            if not 0 <= c < field.size:
                raise ValueError(f"coefficient {c} is not a code of {field!r}")
        return cls(field, coeffs)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _check(self, other: "UnivariatePoly") -> None:
        if self.field is not other.field and self.field != other.field:
            raise ValueError("polynomials over different fields")

    def __add__(self, other: "UnivariatePoly") -> "UnivariatePoly":
        self._check(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return UnivariatePoly(F, [F.add(self[i], other[i]) for i in range(n)])

    def __neg__(self) -> "UnivariatePoly":
        F = self.field
        return UnivariatePoly(F, [F.neg(c) for c in self.coeffs])

    def __sub__(self, other: "UnivariatePoly") -> "UnivariatePoly":
        self._check(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return UnivariatePoly(F, [F.sub(self[i], other[i]) for i in range(n)])

    def __mul__(self, other: "UnivariatePoly") -> "UnivariatePoly":
        self._check(other)
        F = self.field
        if self.is_zero() or other.is_zero():
            return UnivariatePoly.zero(F)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = F.add(out[i + j], F.mul(a, b))
        return UnivariatePoly(F, out)

    def scale(self, c: int) -> "UnivariatePoly":
        F = self.field
        return UnivariatePoly(F, [F.mul(c, a) for a in self.coeffs])

    def shift(self, k: int) -> "UnivariatePoly":
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return UnivariatePoly(self.field, (0,) * k + self.coeffs)

    def __divmod__(self, other: "UnivariatePoly"):
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        d = other.degree
        lead_inv = F.inv(other.coeffs[-1])
        quot = [0] * max(len(rem) - d, 0)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            factor = F.mul(c, lead_inv)
            quot[i - d] = factor
            for j, b in enumerate(other.coeffs):
                rem[i - d + j] = F.sub(rem[i - d + j], F.mul(factor, b))
        return UnivariatePoly(F, quot), UnivariatePoly(F, rem)

    def __floordiv__(self, other: "UnivariatePoly") -> "UnivariatePoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "UnivariatePoly") -> "UnivariatePoly":
        return divmod(self, other)[1]

    def divides(self, other: "UnivariatePoly") -> bool:
        return (other % self).is_zero()

    def monic(self) -> "UnivariatePoly":
        if self.is_zero() or self.is_monic():
            return self
        return self.scale(self.field.inv(self.coeffs[-1]))

    def evaluate(self, a: int) -> int:
        """Horner evaluation at a field code."""
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, a), c)
        return acc

    def to_int(self) -> int:
        """Packed coefficient integer; the canonical ordering key."""
        value = 0
        for c in reversed(self.coeffs):
            value = value * self.field.size + c
        return value

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coeffs) if self.coeffs else "0"


def gcd(a: UnivariatePoly, b: UnivariatePoly) -> UnivariatePoly:
    """Monic greatest common divisor."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def monic_polys(field, degree: int) -> Iterator[UnivariatePoly]:
    """All monic polynomials of exact degree, in canonical integer order."""
    if degree == 0:
        yield UnivariatePoly.one(field)
        return
    q = field.size
    for idx in range(q**degree):
        digits = []
        v = idx
        for _ in range(degree):
            v, d = divmod(v, q)
            digits.append(d)
        yield UnivariatePoly(field, (*digits, 1))


def is_irreducible(f: UnivariatePoly) -> bool:
    """Trial division by every monic polynomial of degree up to deg(f)/2."""
    if f.degree < 1:
        return False
    if f.degree == 1:
        return True
    if f.coeffs[0] == 0:  # divisible by x
        return False
    for d in range(1, f.degree // 2 + 1):
        for g in monic_polys(f.field, d):
            if (f % g).is_zero():
                return False
    return True


def first_irreducible(field, degree: int) -> UnivariatePoly:
    """Lexicographically smallest monic irreducible of the given degree."""
    for f in monic_polys(field, degree):
        if is_irreducible(f):
            return f
    raise ValueError(f"no irreducible of degree {degree} found")  # unreachable


def factor_monic(f: UnivariatePoly) -> list[tuple[UnivariatePoly, int]]:
    """Factor a monic polynomial into (irreducible, multiplicity) pairs.

    Trial division in (degree, canonical order): any composite trial
    divisor has lost its own factors already, so only irreducibles hit.
    Pairs come out sorted by (degree, packed coefficients).
    """
    if not f.is_monic():
        raise ValueError("factor_monic expects a monic polynomial")
    out: list[tuple[UnivariatePoly, int]] = []
    rem = f
    d = 1
    while rem.degree > 0:
        if 2 * d > rem.degree:
            out.append((rem, 1))
            break
        for g in monic_polys(f.field, d):
            if rem.degree < d:
                break
            mult = 0
            while True:
                q, r = divmod(rem, g)
                if not r.is_zero():
                    break
                rem = q
                mult += 1
            if mult:
                out.append((g, mult))
        d += 1
    return out
