"""Arithmetic in F_{q^2} for odd q = p^e.

Elements are handled as canonical integers ``enc(a) = sum(c_i * p**i)`` where
``c_i`` are the polynomial-basis coefficients of ``a``.  Bulk operations work on
numpy integer arrays of encodings; :class:`FieldElement` wraps a single value
for scalar code that wants operator syntax.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

import numpy as np

MAX_FIELD_SIZE = 2**20
_ADD_TABLE_LIMIT = 1024


class FieldError(ValueError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def _polymulmod(a, b, mod, p):
    """Multiply coefficient lists ``a*b`` modulo monic ``mod`` over F_p."""
    deg = len(mod) - 1
    prod = [0] * (2 * deg - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for top in range(len(prod) - 1, deg - 1, -1):
        c = prod[top]
        if c:
            for i in range(deg + 1):
                prod[top - deg + i] = (prod[top - deg + i] - c * mod[i]) % p
    return prod[:deg]


def _polypowmod(base, exp, mod, p):
    deg = len(mod) - 1
    result = [1] + [0] * (deg - 1)
    while exp:
        if exp & 1:
            result = _polymulmod(result, base, mod, p)
        base = _polymulmod(base, base, mod, p)
        exp >>= 1
    return result


def is_primitive(modulus, p: int) -> bool:
    """True if the monic ``modulus`` (constant term first) is primitive over F_p.

    A root of order ``p**deg - 1`` forces the quotient ring to be a field, so no
    separate irreducibility test is needed.
    """
    deg = len(modulus) - 1
    if deg < 1 or modulus[-1] != 1 or modulus[0] % p == 0:
        return False
    order = p**deg - 1
    one = [1] + [0] * (deg - 1)
    t = [0, 1] + [0] * (deg - 2) if deg > 1 else [(-modulus[0]) % p]
    if _polypowmod(t, order, modulus, p) != one:
        return False
    return all(_polypowmod(t, order // r, modulus, p) != one for r in _prime_factors(order))


def smallest_primitive_modulus(p: int, deg: int) -> tuple[int, ...]:
    """Lexicographically smallest monic primitive polynomial of degree ``deg``.

    Tuples are compared from the constant term upward.
    """
    for low in product(range(p), repeat=deg):
        modulus = tuple(low) + (1,)
        if is_primitive(modulus, p):
            return modulus
    raise FieldError(f"no primitive polynomial of degree {deg} over F_{p}")


class Field:
    """The field F_{p^(2e)} with designated subfield F_q, q = p^e."""

    def __init__(self, p: int, e: int):
        if not isinstance(p, (int, np.integer)) or not _is_prime(int(p)):
            raise FieldError(f"p must be prime, got {p!r}")
        if p == 2:
            raise FieldError("characteristic 2 is not supported")
        if e < 1:
            raise FieldError(f"e must be positive, got {e!r}")
        if p ** (2 * e) > MAX_FIELD_SIZE:
            raise FieldError(f"field size {p}^{2 * e} exceeds guard {MAX_FIELD_SIZE}")
        self.p = int(p)
        self.e = int(e)
        self.deg = 2 * self.e
        self.q = self.p**self.e
        self.size = self.p**self.deg
        self.modulus = smallest_primitive_modulus(self.p, self.deg)
        self._build_tables()

    def _build_tables(self):
        p, deg, size = self.p, self.deg, self.size
        powers = p ** np.arange(deg, dtype=np.int64)
        self._pw = powers
        codes = np.arange(size, dtype=np.int64)
        self._digits = (codes[:, None] // powers[None, :]) % p

        # exp[i] = enc(t**i) for the primitive root t
        exp = np.zeros(size - 1, dtype=np.int64)
        log = np.full(size, -1, dtype=np.int64)
        coeffs = [1] + [0] * (deg - 1)
        mod_low = self.modulus[:-1]
        for i in range(size - 1):
            value = sum(c * p**j for j, c in enumerate(coeffs))
            exp[i] = value
            log[value] = i
            top = coeffs[-1]
            coeffs = [0] + coeffs[:-1]
            if top:
                coeffs = [(c - top * m) % p for c, m in zip(coeffs, mod_low)]
        if (log[1:] < 0).any():
            raise FieldError("modulus is not primitive")
        self._exp = exp
        self._log = log
        self._neg = ((-self._digits) % p) @ powers
        if size <= _ADD_TABLE_LIMIT:
            self._add = ((self._digits[:, None, :] + self._digits[None, :, :]) % p) @ powers
        else:
            self._add = None
        if size <= 4096:
            # square-and-multiply on polynomials, independent of the log tables
            self._frob = np.array([self._pow_slow(a, self.q) for a in range(size)], dtype=np.int64)
        else:
            self._frob = self.pow(np.arange(size), self.q)
        self._frob.flags.writeable = False

    def _pow_slow(self, a: int, k: int) -> int:
        result, base = 1, int(a)
        while k:
            if k & 1:
                result = self._mul_digits(result, base)
            base = self._mul_digits(base, base)
            k >>= 1
        return result

    def _mul_digits(self, a: int, b: int) -> int:
        da = [int(c) for c in self._digits[a]]
        db = [int(c) for c in self._digits[b]]
        return int(sum(c * self.p**i for i, c in enumerate(_polymulmod(da, db, self.modulus, self.p))))

    def __repr__(self):
        return f"Field(p={self.p}, e={self.e}, size={self.size}, modulus={self.modulus})"

    def __eq__(self, other):
        return isinstance(other, Field) and (self.p, self.e) == (other.p, other.e)

    def __hash__(self):
        return hash((self.p, self.e))

    # -- element helpers -------------------------------------------------
    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def generator(self) -> int:
        """Encoding of the primitive root t (the class of x mod the modulus)."""
        return int(self._exp[1])

    def element(self, value) -> "FieldElement":
        return FieldElement(self, value)

    def from_coeffs(self, coeffs) -> int:
        coeffs = list(coeffs)
        if len(coeffs) != self.deg or any(not 0 <= c < self.p for c in coeffs):
            raise FieldError(f"expected {self.deg} coefficients in [0, {self.p})")
        return int(sum(c * self.p**i for i, c in enumerate(coeffs)))

    def coeffs(self, a) -> np.ndarray:
        return self._digits[np.asarray(a, dtype=np.int64)]

    def enumerate(self) -> list["FieldElement"]:
        return [FieldElement(self, a) for a in range(self.size)]

    def elements(self) -> np.ndarray:
        return np.arange(self.size, dtype=np.int64)

    def subfield(self) -> np.ndarray:
        """Encodings of the fixed points of the q-power map, ascending."""
        return np.flatnonzero(self._frob == np.arange(self.size))

    def check(self, a) -> np.ndarray:
        arr = np.asarray(a, dtype=np.int64)
        if arr.size and (arr.min() < 0 or arr.max() >= self.size):
            raise FieldError(f"values outside [0, {self.size})")
        return arr

    # -- vectorized arithmetic on encodings -------------------------------
    def add(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self._add is not None:
            return self._add[a, b]
        return ((self._digits[a] + self._digits[b]) % self.p) @ self._pw

    def neg(self, a):
        return self._neg[np.asarray(a, dtype=np.int64)]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        idx = (self._log[a] + self._log[b]) % (self.size - 1)
        return np.where((a == 0) | (b == 0), 0, self._exp[idx])

    def inv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if (a == 0).any():
            raise ZeroDivisionError("inverse of zero in finite field")
        return self._exp[(-self._log[a]) % (self.size - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, k: int):
        a = np.asarray(a, dtype=np.int64)
        k = int(k)
        if k == 0:
            return np.ones_like(a)
        if k < 0:
            a, k = self.inv(a), -k
        idx = (self._log[a] * k) % (self.size - 1)
        return np.where(a == 0, 0, self._exp[idx])

    def conj(self, a):
        """Hermitian conjugation a -> a**q."""
        return self._frob[np.asarray(a, dtype=np.int64)]

    def sum(self, a, axis=None):
        """Field sum of an array of encodings along ``axis``."""
        d = self._digits[np.asarray(a, dtype=np.int64)]
        if axis is None:
            return int((d.reshape(-1, self.deg).sum(axis=0) % self.p) @ self._pw)
        if axis < 0:
            axis += d.ndim - 1
        return (d.sum(axis=axis) % self.p) @ self._pw

    def dot(self, u, v):
        return self.sum(self.mul(u, v), axis=-1)

    def matmul(self, A, B):
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        if A.shape[0] == 0 or B.shape[1] == 0:
            return np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
        return self.sum(self.mul(A[:, :, None], B[None, :, :]), axis=1)

    def order(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative order")
        from math import gcd

        return (self.size - 1) // gcd(int(self._log[a]), self.size - 1)


@lru_cache(maxsize=None)
def field_new(p: int, e: int = 1) -> Field:
    """Return the (cached) field F_{p^(2e)}."""
    return Field(p, e)


class FieldElement:
    """A single element bound to its field; supports ``+ - * / **``."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        value = int(value)
        if not 0 <= value < field.size:
            raise FieldError(f"encoding {value} outside [0, {field.size})")
        self.field = field
        self.value = value

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(int(c) for c in self.field._digits[self.value])

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError("operands belong to different fields")
            return other.value
        if isinstance(other, (int, np.integer)):
            # plain integers act as multiples of 1
            return int(other) % self.field.p
        return NotImplemented

    def _wrap(self, v) -> "FieldElement":
        return FieldElement(self.field, int(v))

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.div(self.value, o))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, k: int):
        return self._wrap(self.field.pow(self.value, k))

    def inv(self) -> "FieldElement":
        return self._wrap(self.field.inv(self.value))

    def conj(self) -> "FieldElement":
        return self._wrap(self.field.conj(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, np.integer)):
            return self.value == int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.e, self.value))

    def __int__(self):
        return self.value

    __index__ = __int__

    def __repr__(self):
        return f"FieldElement({self.value} in GF({self.field.size}))"
