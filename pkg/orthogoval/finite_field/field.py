"""Exact arithmetic in GF(p^n) in a fixed polynomial basis.

Elements are identified with their integer code, the base-p expansion of the
coefficient vector with the constant coefficient as the least significant
digit. This is also the integer representation used by ``galois``, which
builds and validates the fields; hot paths use the addition, multiplication,
negation and inversion tables derived from it.
"""

import functools
from dataclasses import dataclass

import galois
import numpy as np

from orthogoval.exception import FieldError, UnsupportedOrderError

__all__ = [
    "SUPPORTED_CHARACTERISTICS",
    "MAX_FIELD_ORDER",
    "TABLE_MAX_ORDER",
    "DEFAULT_MODULI",
    "FieldSpec",
    "FieldElement",
    "ff_make",
    "ff_from_order",
    "ff_arith",
    "subfield_embedding",
]

SUPPORTED_CHARACTERISTICS = (2, 3, 5, 7)
MAX_FIELD_ORDER = 2**16
TABLE_MAX_ORDER = 256

# constant term first
DEFAULT_MODULI = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 0, 1, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (3, 2): (1, 0, 1),
}


def _unwrap(x):
    return int(x) if np.ndim(x) == 0 else x


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^n) given by a monic irreducible modulus over GF(p).

    Use :func:`ff_make` to build a validated instance. Arithmetic methods
    accept integer codes or integer arrays of codes and return the same shape.
    """

    p: int
    n: int
    modulus: tuple

    @property
    def q(self):
        return self.p**self.n

    @property
    def order(self):
        return self.q

    @property
    def characteristic(self):
        return self.p

    def __repr__(self):
        return f"FieldSpec(p={self.p}, n={self.n}, modulus={list(self.modulus)})"

    def __getstate__(self):
        return {"p": self.p, "n": self.n, "modulus": self.modulus}

    def __setstate__(self, state):
        for key, value in state.items():
            object.__setattr__(self, key, value)

    @property
    def galois_field(self):
        """The ``galois.FieldArray`` subclass for this field."""
        return _galois_field(self.p, self.n, self.modulus)

    @property
    def generator(self):
        """Code of the designated primitive element."""
        return int(self.galois_field.primitive_element)

    @property
    def elements(self):
        return np.arange(self.q)

    def _tables(self):
        if self.q > TABLE_MAX_ORDER:
            raise UnsupportedOrderError(
                f"arithmetic tables are only built for q <= {TABLE_MAX_ORDER}, "
                f"got q = {self.q}"
            )
        return _field_tables(self.p, self.n, self.modulus)

    @property
    def add_table(self):
        return self._tables()[0]

    @property
    def mul_table(self):
        return self._tables()[1]

    @property
    def neg_table(self):
        return self._tables()[2]

    @property
    def inv_table(self):
        """Inverse of every code; entry 0 is -1."""
        return self._tables()[3]

    def to_coeffs(self, code):
        """Coefficient vector of `code`, constant term first."""
        code = int(code)
        coeffs = []
        for _ in range(self.n):
            code, digit = divmod(code, self.p)
            coeffs.append(digit)
        return tuple(coeffs)

    def from_coeffs(self, coeffs):
        if len(coeffs) != self.n or any(not 0 <= c < self.p for c in coeffs):
            raise FieldError(f"{coeffs} is not a coefficient vector of GF({self.q})")
        return sum(int(c) * self.p**i for i, c in enumerate(coeffs))

    def check(self, code):
        if np.any(np.asarray(code) < 0) or np.any(np.asarray(code) >= self.q):
            raise FieldError(f"{code} is not an element code of GF({self.q})")
        return code

    def add(self, a, b):
        return _unwrap(self.add_table[a, b])

    def sub(self, a, b):
        return _unwrap(self.add_table[a, self.neg_table[b]])

    def neg(self, a):
        return _unwrap(self.neg_table[a])

    def mul(self, a, b):
        return _unwrap(self.mul_table[a, b])

    def inv(self, a):
        if np.any(np.asarray(a) == 0):
            raise FieldError("inversion of zero")
        return _unwrap(self.inv_table[a])

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, k):
        """``a**k`` for an integer exponent; negative exponents invert first."""
        k = int(k)
        if k < 0:
            a, k = self.inv(a), -k
        result = np.ones_like(np.asarray(a)) if np.ndim(a) else 1
        base = a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return _unwrap(result)

    def frobenius(self, a, e=1):
        """``a**(p**e)``."""
        return self.pow(a, self.p ** (e % self.n))

    def dot(self, u, v):
        """Sum of coordinatewise products along the last axis."""
        u, v = np.asarray(u), np.asarray(v)
        prods = self.mul_table[u, v]
        total = prods[..., 0]
        for i in range(1, prods.shape[-1]):
            total = self.add_table[total, prods[..., i]]
        return _unwrap(total)

    def multiplicative_order(self, a):
        if a == 0:
            raise FieldError("zero has no multiplicative order")
        order, x = 1, a
        while x != 1:
            x = self.mul(x, a)
            order += 1
        return order

    def element(self, code):
        return FieldElement(self, self.check(int(code)))

    def to_dict(self):
        return {"p": self.p, "n": self.n, "modulus": list(self.modulus)}

    @classmethod
    def from_dict(cls, d):
        return ff_make(d["p"], d["n"], d.get("modulus"))


@functools.lru_cache(maxsize=None)
def _galois_field(p, n, modulus):
    if n == 1:
        return galois.GF(p)
    poly = galois.Poly(list(modulus), field=galois.GF(p), order="asc")
    return galois.GF(p**n, irreducible_poly=poly)


@functools.lru_cache(maxsize=None)
def _field_tables(p, n, modulus):
    GF = _galois_field(p, n, modulus)
    el = GF.elements
    add = np.asarray((el[:, None] + el[None, :]).view(np.ndarray), dtype=np.int32)
    mul = np.asarray((el[:, None] * el[None, :]).view(np.ndarray), dtype=np.int32)
    neg = np.asarray((-el).view(np.ndarray), dtype=np.int32)
    inv = np.full(p**n, -1, dtype=np.int32)
    inv[1:] = np.asarray((el[1:] ** -1).view(np.ndarray), dtype=np.int32)
    for table in (add, mul, neg, inv):
        table.setflags(write=False)
    return add, mul, neg, inv


def ff_make(p, n, modulus=None):
    """Return a validated :class:`FieldSpec` for GF(p^n).

    Parameters
    ----------
    p : int
        A prime in ``SUPPORTED_CHARACTERISTICS``.
    n : int
        Extension degree, at least 1.
    modulus : sequence of int, optional
        Monic degree-n modulus over GF(p), constant term first. When omitted
        the default table is used, falling back to the lexicographically least
        primitive polynomial.

    Raises
    ------
    FieldError
        If p is not prime or the modulus is not monic, of the wrong degree or
        reducible.
    UnsupportedOrderError
        If the characteristic or order is outside the supported range.
    """
    p, n = int(p), int(n)
    if not galois.is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if p not in SUPPORTED_CHARACTERISTICS:
        raise UnsupportedOrderError(
            f"characteristic {p} not in {SUPPORTED_CHARACTERISTICS}"
        )
    if n < 1:
        raise FieldError(f"degree must be positive, got {n}")
    if p**n > MAX_FIELD_ORDER:
        raise UnsupportedOrderError(f"GF({p}^{n}) exceeds the supported order")

    if modulus is None:
        modulus = DEFAULT_MODULI.get((p, n))
        if modulus is None:
            poly = galois.primitive_poly(p, n, method="min")
            modulus = tuple(int(c) for c in poly.coefficients(order="asc"))
    modulus = tuple(int(c) for c in modulus)
    if len(modulus) != n + 1 or modulus[-1] != 1:
        raise FieldError(f"modulus {list(modulus)} is not monic of degree {n}")
    if any(not 0 <= c < p for c in modulus):
        raise FieldError(f"modulus {list(modulus)} has coefficients outside GF({p})")
    poly = galois.Poly(list(modulus), field=galois.GF(p), order="asc")
    if n > 1 and not poly.is_irreducible():
        raise FieldError(f"modulus {list(modulus)} is reducible over GF({p})")
    return FieldSpec(p, n, modulus)


def ff_from_order(q):
    """The field of order `q` with its default modulus."""
    q = int(q)
    if q < 2 or not galois.is_prime_power(q):
        raise FieldError(f"{q} is not a prime power")
    primes, exponents = galois.factors(q)
    return ff_make(int(primes[0]), int(exponents[0]))


@dataclass(frozen=True)
class FieldElement:
    """An element of the field described by `spec`, stored as its code."""

    spec: FieldSpec
    code: int

    @property
    def coefficients(self):
        return self.spec.to_coeffs(self.code)

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise FieldError("operands belong to different fields")
            return other.code
        return self.spec.check(int(other))

    def __int__(self):
        return self.code

    def __add__(self, other):
        return FieldElement(self.spec, self.spec.add(self.code, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.spec, self.spec.sub(self.code, self._other(other)))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.code))

    def __mul__(self, other):
        return FieldElement(self.spec, self.spec.mul(self.code, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.spec, self.spec.div(self.code, self._other(other)))

    def __pow__(self, k):
        return FieldElement(self.spec, self.spec.pow(self.code, k))

    def inverse(self):
        return FieldElement(self.spec, self.spec.inv(self.code))

    def frobenius(self, e=1):
        return FieldElement(self.spec, self.spec.frobenius(self.code, e))

    def __repr__(self):
        return f"FieldElement({self.code}, q={self.spec.q})"


def ff_arith(spec, op, *operands, e=1):
    """Evaluate one field operation and return a :class:`FieldElement`.

    ``op`` is one of ``"add"``, ``"mul"``, ``"inv"``, ``"pow"`` (second operand
    is an integer exponent) or ``"frobenius"`` (``x**(p**e)``).
    """
    codes = [o.code if isinstance(o, FieldElement) else int(o) for o in operands]
    if op == "add":
        result = functools.reduce(spec.add, codes, 0)
    elif op == "mul":
        result = functools.reduce(spec.mul, codes, 1)
    elif op == "inv":
        (a,) = codes
        result = spec.inv(spec.check(a))
    elif op == "pow":
        a, k = codes
        result = spec.pow(spec.check(a), k)
    elif op == "frobenius":
        (a,) = codes
        result = spec.frobenius(spec.check(a), e)
    else:
        raise FieldError(f"unknown field operation {op!r}")
    return FieldElement(spec, int(result))


def subfield_embedding(big, small):
    """Codes in `big` of the elements of `small`, indexed by `small` code.

    The generator root of `small.modulus` is sent to its least-code root in
    `big`, which fixes a field homomorphism.
    """
    if big.p != small.p or big.n % small.n:
        raise FieldError(f"GF({small.q}) is not a subfield of GF({big.q})")
    if small.n == 1:
        return np.arange(small.q)
    GF = big.galois_field
    poly = galois.Poly(list(small.modulus), field=GF, order="asc")
    roots = sorted(int(r) for r in poly.roots())
    root = GF(roots[0])
    powers = [GF(1)]
    for _ in range(1, small.n):
        powers.append(powers[-1] * root)
    table = np.zeros(small.q, dtype=np.int64)
    for code in range(small.q):
        value = GF(0)
        for c, power in zip(small.to_coeffs(code), powers):
            value = value + GF(c) * power
        table[code] = int(value)
    return table
