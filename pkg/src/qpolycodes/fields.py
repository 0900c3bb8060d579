"""Arithmetic for the field tower GF(p) <= GF(q) = GF(p^m) <= GF(q^n).

Every field element is canonically encoded as a nonnegative integer:
an element of GF(p) is its residue, and an element of an extension
field of degree d over a subfield of size b is

    value = c_0 + c_1*b + ... + c_{d-1}*b^(d-1),

where (c_0, ..., c_{d-1}) are its coefficients over the subfield,
low degree first.  Enumerating integers 0, 1, 2, ... therefore walks
the coefficient vectors with the low-index coefficient varying
fastest, which is the deterministic element order used everywhere
(element 1 is the multiplicative identity, element 0 the zero).

GF(q^n) is built as a degree-n extension of GF(q), not as a flat
degree-(m*n) extension of GF(p), so the map x -> x^q is a single
Frobenius step.  Multiplication uses exp/log tables (built lazily for
fields of at most TABLE_LIMIT elements) with a carry-less bit
multiplication fast path when the subfield is GF(2); everything is
exact integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from . import poly

# Fields of at most this many elements get exp/log multiplication tables.
TABLE_LIMIT = 1 << 20

# Baby-step/giant-step refuses groups larger than this unless overridden.
DEFAULT_DLOG_BOUND = 1 << 24


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def pack_vector(digits, base: int) -> int:
    """Pack a low-index-first digit vector into its canonical integer."""
    value = 0
    for d in reversed(tuple(digits)):
        value = value * base + d
    return value


def unpack_vector(value: int, base: int, length: int) -> tuple[int, ...]:
    """Inverse of pack_vector."""
    return tuple(_unpack(value, base, length))


def _unpack(value: int, base: int, length: int) -> list[int]:
    digits = []
    for _ in range(length):
        value, d = divmod(value, base)
        digits.append(d)
    return digits


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class FieldError(ValueError):
    """Invalid field construction or operation."""


@dataclass(frozen=True)
class FieldElement:
    """An element of a specific field, wrapping its canonical integer code."""

    field: "Field"
    value: int

    def _check(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if self.field is not other.field and self.field != other.field:
            raise FieldError("elements belong to different fields or tower levels")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field, self.field.add(self.value, other.value))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field, self.field.sub(self.value, other.value))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, self.field.neg(self.value))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field, self.field.mul(self.value, other.value))

    def __pow__(self, e: int) -> "FieldElement":
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def frobenius(self, j: int = 1) -> "FieldElement":
        return FieldElement(self.field, self.field.frobenius(self.value, j))

    def __bool__(self) -> bool:
        return self.value != 0

    @property
    def coeffs(self) -> tuple[int, ...]:
        """Coefficient vector over the immediate subfield, low index first."""
        return self.field.decode(self.value)

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coeffs)

    def __repr__(self) -> str:
        return f"FieldElement({self.field!r}, {self.value})"


class Field:
    """Shared behavior for prime and extension fields (integer-coded elements)."""

    size: int
    char: int

    def element(self, value: int) -> FieldElement:
        if not 0 <= value < self.size:
            raise FieldError(f"value {value} out of range for field of size {self.size}")
        return FieldElement(self, value)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def elements(self) -> Iterator[FieldElement]:
        """All elements in canonical order, starting at 0."""
        for v in range(self.size):
            yield FieldElement(self, v)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def pow(self, a: int, e: int) -> int:
        """Square-and-multiply; e must be nonnegative."""
        if e < 0:
            raise FieldError("negative exponent; use inv() and a nonnegative power")
        if a == 0:
            return 0 if e else 1
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise FieldError("zero has no multiplicative order")
        order = self.size - 1
        for f in _prime_factors(self.size - 1):
            while order % f == 0 and self.pow(a, order // f) == 1:
                order //= f
        return order

    def primitive_element_value(self) -> int:
        """First element, in canonical order, generating the whole unit group."""
        target = self.size - 1
        for a in range(1, self.size):
            if self.multiplicative_order(a) == target:
                return a
        raise FieldError("no primitive element found (not a field?)")

    # subclasses: add, neg, mul, inv, decode, encode


class PrimeField(Field):
    """GF(p), elements are residues 0..p-1."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.size = p
        self.char = p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldError("zero has no inverse")
        return pow(a, -1, self.p)

    def decode(self, a: int) -> tuple[int, ...]:
        return (a,)

    def encode(self, digits) -> int:
        (d,) = tuple(digits)
        return d

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))

    def __repr__(self) -> str:
        return f"GF({self.p})"


class ExtensionField(Field):
    """Degree-d extension of a subfield, reduced by a monic irreducible modulus.

    The modulus is given as a low-first tuple of subfield codes and is
    verified irreducible at construction.
    """

    def __init__(self, subfield: Field, modulus: tuple[int, ...], *, _trusted: bool = False):
        modulus = tuple(modulus)
        if len(modulus) < 2 or modulus[-1] != 1:
            raise FieldError("modulus must be monic of degree >= 1")
        self.subfield = subfield
        self.modulus = modulus
        self.degree = len(modulus) - 1
        self.size = subfield.size ** self.degree
        self.char = subfield.char
        if not _trusted and not poly.is_irreducible(poly.UnivariatePoly(subfield, modulus)):
            raise FieldError("modulus is not irreducible over the subfield")
        self._bitfield = subfield.size == 2  # carry-less fast path
        self._mod_int = pack_vector(modulus, 2) if self._bitfield else None
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._generator: int | None = None

    # -- coefficient vectors ------------------------------------------------

    def decode(self, a: int) -> tuple[int, ...]:
        return tuple(_unpack(a, self.subfield.size, self.degree))

    def encode(self, digits) -> int:
        digits = tuple(digits)
        if len(digits) != self.degree:
            raise FieldError(f"expected {self.degree} coefficients, got {len(digits)}")
        return pack_vector(digits, self.subfield.size)

    # -- ring operations ----------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.char == 2:
            return a ^ b  # subfield sizes are powers of two: digits never interact
        F, base = self.subfield, self.subfield.size
        da, db = _unpack(a, base, self.degree), _unpack(b, base, self.degree)
        return pack_vector([F.add(x, y) for x, y in zip(da, db)], base)

    def neg(self, a: int) -> int:
        if self.char == 2:
            return a
        F, base = self.subfield, self.subfield.size
        return pack_vector([F.neg(x) for x in _unpack(a, base, self.degree)], base)

    def _mul_raw(self, a: int, b: int) -> int:
        if self._bitfield:
            acc = 0
            while b:
                if b & 1:
                    acc ^= a
                a <<= 1
                b >>= 1
            d = self.degree
            m = self._mod_int
            top = acc.bit_length()
            while top > d:
                acc ^= m << (top - 1 - d)
                top = acc.bit_length()
            return acc
        F, base, d = self.subfield, self.subfield.size, self.degree
        da, db = _unpack(a, base, d), _unpack(b, base, d)
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(da):
            if x == 0:
                continue
            for j, y in enumerate(db):
                if y:
                    prod[i + j] = F.add(prod[i + j], F.mul(x, y))
        # reduce by the monic modulus: x^d = -(m_0 + ... + m_{d-1} x^{d-1})
        for i in range(2 * d - 2, d - 1, -1):
            c = prod[i]
            if c == 0:
                continue
            prod[i] = 0
            for j in range(d):
                mj = self.modulus[j]
                if mj:
                    prod[i - d + j] = F.sub(prod[i - d + j], F.mul(c, mj))
        return pack_vector(prod[:d], base)

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is None and self.size <= TABLE_LIMIT:
            self._build_tables()
        if self._exp is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.size - 1)]
        return self._mul_raw(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldError("zero has no inverse")
        if self._exp is None and self.size <= TABLE_LIMIT:
            self._build_tables()
        if self._exp is not None:
            return self._exp[(self.size - 1 - self._log[a]) % (self.size - 1)]
        return self.pow(a, self.size - 2)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            raise FieldError("negative exponent; use inv() and a nonnegative power")
        if a == 0:
            return 0 if e else 1
        if self._exp is None and self.size <= TABLE_LIMIT:
            self._build_tables()
        if self._exp is not None:
            return self._exp[(self._log[a] * e) % (self.size - 1)]
        result, base = 1, a
        while e:
            if e & 1:
                result = self._mul_raw(result, base)
            base = self._mul_raw(base, base)
            e >>= 1
        return result

    def frobenius(self, a: int, j: int = 1) -> int:
        """a raised to the (subfield size)^j power; period = extension degree."""
        j %= self.degree
        if j == 0 or a == 0:
            return a
        if self._exp is None and self.size <= TABLE_LIMIT:
            self._build_tables()
        if self._exp is not None:
            return self._exp[(self._log[a] * (self.subfield.size ** j)) % (self.size - 1)]
        return self.pow(a, self.subfield.size ** j)

    # -- discrete structure ---------------------------------------------------

    def _build_tables(self) -> None:
        # order test must run table-free: pow() would recurse into the build
        target = self.size - 1
        gen = None
        for a in range(1, self.size):
            order = target
            for f in _prime_factors(target):
                while order % f == 0 and self._pow_raw(a, order // f) == 1:
                    order //= f
            if order == target:
                gen = a
                break
        assert gen is not None
        exp = [1] * target
        log = [0] * self.size
        v = 1
        for i in range(target):
            exp[i] = v
            log[v] = i
            v = self._mul_raw(v, gen)
        self._generator = gen
        self._exp = exp
        self._log = log

    def _pow_raw(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self._mul_raw(result, base)
            base = self._mul_raw(base, base)
            e >>= 1
        return result

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise FieldError("zero has no multiplicative order")
        order = self.size - 1
        for f in _prime_factors(self.size - 1):
            while order % f == 0 and self.pow(a, order // f) == 1:
                order //= f
        return order

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExtensionField)
            and other.modulus == self.modulus
            and other.subfield == self.subfield
        )

    def __hash__(self) -> int:
        return hash(("ExtensionField", self.subfield, self.modulus))

    def __repr__(self) -> str:
        return f"GF({self.subfield.size}^{self.degree})"


LEVELS = ("p", "q", "qn")


class FieldTower:
    """The chain GF(p) <= GF(q) = GF(p^m) <= GF(q^n) with canonical moduli.

    Both defining polynomials are the lexicographically smallest monic
    irreducibles of their degree, comparing coefficient vectors
    low-degree-first as integers, so a tower is a pure function of
    (p, m, n) and matrices derived from it are reproducible.
    """

    def __init__(self, p: int, m: int, n: int):
        if not is_prime(p):
            raise FieldError(f"p = {p} is not prime")
        if m < 1 or n < 1:
            raise FieldError("extension degrees must be >= 1")
        self.p = p
        self.m = m
        self.n = n
        self.prime = PrimeField(p)
        self.base_poly = poly.first_irreducible(self.prime, m).coeffs
        self.base = ExtensionField(self.prime, self.base_poly, _trusted=True)
        self.ext_poly = poly.first_irreducible(self.base, n).coeffs
        self.ext = ExtensionField(self.base, self.ext_poly, _trusted=True)

    @classmethod
    def build(cls, p: int, m: int, n: int) -> "FieldTower":
        return cls(p, m, n)

    @property
    def q(self) -> int:
        return self.base.size

    @property
    def r(self) -> int:
        return self.ext.size

    def field(self, level: str) -> Field:
        if level == "p":
            return self.prime
        if level == "q":
            return self.base
        if level == "qn":
            return self.ext
        raise FieldError(f"unknown level {level!r}; expected one of {LEVELS}")

    def elements(self, level: str = "qn") -> Iterator[FieldElement]:
        """Every element of the requested level exactly once, starting at 0."""
        return self.field(level).elements()

    def embed(self, c: int) -> int:
        """GF(q) -> GF(q^n); the canonical integer code is unchanged."""
        if not 0 <= c < self.q:
            raise FieldError(f"{c} is not a GF(q) code (q = {self.q})")
        return c

    def frobenius(self, a: FieldElement | int, j: int = 1) -> FieldElement | int:
        """a^(q^j) in GF(q^n)."""
        if isinstance(a, FieldElement):
            if a.field is not self.ext and a.field != self.ext:
                raise FieldError("frobenius expects an element of GF(q^n)")
            return FieldElement(self.ext, self.ext.frobenius(a.value, j))
        return self.ext.frobenius(a, j)

    def primitive_element(self) -> FieldElement:
        """First generator of GF(q^n)^* in canonical enumeration order."""
        if self.r - 1 > DEFAULT_DLOG_BOUND:
            raise FieldError("field too large for primitive-element scan")
        return FieldElement(self.ext, self.ext.primitive_element_value())

    def discrete_log(
        self,
        gamma: FieldElement | int,
        lam: FieldElement | int,
        bound: int = DEFAULT_DLOG_BOUND,
    ) -> int:
        """The unique s in [0, r-2] with gamma^s = lam (baby-step/giant-step)."""
        g = gamma.value if isinstance(gamma, FieldElement) else gamma
        x = lam.value if isinstance(lam, FieldElement) else lam
        order = self.r - 1
        if order > bound:
            raise FieldError(f"group order {order} exceeds discrete-log bound {bound}")
        if x == 0:
            raise FieldError("discrete log of zero is undefined")
        if self.ext.multiplicative_order(g) != order:
            raise FieldError("base is not a primitive element")
        m = math.isqrt(order - 1) + 1
        baby = {}
        v = 1
        for j in range(m):
            baby.setdefault(v, j)
            v = self.ext.mul(v, g)
        giant = self.ext.inv(v)  # gamma^(-m)
        y = x
        for i in range(m + 1):
            if y in baby:
                return (i * m + baby[y]) % order
            y = self.ext.mul(y, giant)
        raise FieldError("discrete log not found (non-primitive base?)")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldTower)
            and (other.p, other.m, other.n) == (self.p, self.m, self.n)
        )

    def __hash__(self) -> int:
        return hash(("FieldTower", self.p, self.m, self.n))

    def __repr__(self) -> str:
        return f"FieldTower(p={self.p}, m={self.m}, n={self.n})"


def build_tower(p: int, m: int, n: int) -> FieldTower:
    """Construct the canonical tower for (p, m, n)."""
    return FieldTower(p, m, n)
