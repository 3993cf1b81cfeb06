"""GF(q^3) as a cubic extension of GF(q).

An element is stored as the code ``c0 + c1*q + c2*q**2`` of its coordinates
``(c0, c1, c2)`` in the basis ``1, y, y**2``, each coordinate being a GF(q)
code. Base-field elements are therefore their own codes, and the Frobenius map
``x -> x**q`` only acts on the basis.
"""

import functools
from dataclasses import dataclass

import numpy as np

from orthogoval.exception import FieldError
from orthogoval.finite_field.field import FieldSpec
from orthogoval.finite_field.polynomials import (
    find_irreducible_cubic_depressed,
    first_irreducible_cubic,
)

__all__ = ["ExtFieldSpec", "cubic_extension"]


@dataclass(frozen=True)
class ExtFieldSpec:
    """GF(q^3) = GF(q)[y] / (g) for a monic irreducible cubic ``g``.

    Parameters
    ----------
    base : FieldSpec
        The field GF(q).
    modulus : tuple of int
        ``(g0, g1, g2, 1)``, the base-field codes of the coefficients of ``g``,
        constant term first.

    Methods accept element codes as Python integers or integer arrays.

    ``galois.Poly`` arithmetic modulo ``g`` is not used: it handles one
    polynomial at a time, while every method here multiplies whole arrays of
    codes through the base-field tables. ``galois.GF(q**3)`` does not fit
    either, since it codes elements over the prime field rather than over
    GF(q) with this cubic.
    """

    base: FieldSpec
    modulus: tuple

    @property
    def q(self):
        return self.base.q

    @property
    def order(self):
        return self.base.q**3

    @property
    def elements(self):
        return np.arange(self.order)

    def __repr__(self):
        return f"ExtFieldSpec(q={self.q}, modulus={list(self.modulus)})"

    def embed(self, a):
        """The embedding GF(q) -> GF(q^3); base codes are extension codes."""
        self.base.check(a)
        return a

    def in_base(self, x):
        return np.asarray(x) < self.q

    def digits(self, x):
        x = np.asarray(x, dtype=np.int64)
        q = self.q
        return np.stack([x % q, (x // q) % q, x // (q * q)], axis=-1)

    def from_digits(self, d):
        d = np.asarray(d, dtype=np.int64)
        q = self.q
        return _unwrap(d[..., 0] + q * d[..., 1] + q * q * d[..., 2])

    @functools.cached_property
    def _reduction(self):
        neg = self.base.neg_table
        mul, add = self.base.mul_table, self.base.add_table
        y3 = np.array([neg[c] for c in self.modulus[:3]])
        y4 = np.array([0, y3[0], y3[1]])
        y4 = add[y4, mul[y3[2], y3]]
        return y3, y4

    def _mul_digits(self, a, b):
        M, A = self.base.mul_table, self.base.add_table
        a0, a1, a2 = a[..., 0], a[..., 1], a[..., 2]
        b0, b1, b2 = b[..., 0], b[..., 1], b[..., 2]
        d0 = M[a0, b0]
        d1 = A[M[a0, b1], M[a1, b0]]
        d2 = A[A[M[a0, b2], M[a1, b1]], M[a2, b0]]
        d3 = A[M[a1, b2], M[a2, b1]]
        d4 = M[a2, b2]
        y3, y4 = self._reduction
        return np.stack(
            [A[A[d, M[d3, y3[i]]], M[d4, y4[i]]] for i, d in enumerate((d0, d1, d2))],
            axis=-1,
        )

    def add(self, a, b):
        A = self.base.add_table
        return self.from_digits(A[self.digits(a), self.digits(b)])

    def neg(self, a):
        return self.from_digits(self.base.neg_table[self.digits(a)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        da, db = np.broadcast_arrays(self.digits(a), self.digits(b))
        return self.from_digits(self._mul_digits(da, db))

    def pow(self, a, k):
        k = int(k)
        if k < 0:
            a, k = self.inv(a), -k
        result = np.ones_like(np.asarray(a, dtype=np.int64))
        base = np.asarray(a, dtype=np.int64)
        while k:
            if k & 1:
                result = np.asarray(self.mul(result, base))
            base = np.asarray(self.mul(base, base))
            k >>= 1
        return _unwrap(result)

    @functools.cached_property
    def _frobenius_basis(self):
        y = self.q  # the code of y
        f1 = self.pow(y, self.q)
        return self.digits(f1), self.digits(self.mul(f1, f1))

    def frobenius(self, x, e=1):
        """``x**(q**e)``, computed coordinatewise."""
        M, A = self.base.mul_table, self.base.add_table
        f1, f2 = self._frobenius_basis
        d = self.digits(x)
        for _ in range(e % 3):
            fixed = np.zeros_like(d)
            fixed[..., 0] = d[..., 0]
            d = A[A[fixed, M[d[..., 1:2], f1]], M[d[..., 2:3], f2]]
        return self.from_digits(d)

    def norm(self, x):
        """``x * x**q * x**(q**2)``, an element of GF(q)."""
        return self.mul(self.mul(x, self.frobenius(x, 1)), self.frobenius(x, 2))

    def inv(self, x):
        if np.any(np.asarray(x) == 0):
            raise FieldError("inversion of zero")
        conj = self.mul(self.frobenius(x, 1), self.frobenius(x, 2))
        n = self.mul(x, conj)
        return self.mul(self.base.inv_table[n], conj)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def det3(self, m):
        """Determinant of 3x3 matrices stored in the last two axes."""
        m = np.asarray(m)
        mul, sub, add = self.mul, self.sub, self.add

        def minor(r, s):
            return sub(
                mul(m[..., 1, r], m[..., 2, s]), mul(m[..., 1, s], m[..., 2, r])
            )

        first = sub(mul(m[..., 0, 0], minor(1, 2)), mul(m[..., 0, 1], minor(0, 2)))
        return add(first, mul(m[..., 0, 2], minor(0, 1)))

    def inverse3(self, m):
        """Inverse of a 3x3 matrix, by the adjugate."""
        m = np.asarray(m)
        det = self.det3(m)
        if det == 0:
            raise FieldError("singular 3x3 matrix")
        inv_det = self.inv(det)
        out = np.zeros((3, 3), dtype=np.int64)
        for i in range(3):
            for j in range(3):
                rows = [r for r in range(3) if r != j]
                cols = [c for c in range(3) if c != i]
                a, b = m[rows[0], cols[0]], m[rows[0], cols[1]]
                c, d = m[rows[1], cols[0]], m[rows[1], cols[1]]
                cof = self.sub(self.mul(a, d), self.mul(b, c))
                if (i + j) % 2:
                    cof = self.neg(cof)
                out[i, j] = self.mul(cof, inv_det)
        return out

    def matvec(self, m, v):
        """``m @ v`` for a 3x3 matrix and vectors stacked in the last axis."""
        m, v = np.asarray(m), np.asarray(v)
        terms = [self.mul(m[:, j], v[..., j : j + 1]) for j in range(3)]
        return np.asarray(self.add(self.add(terms[0], terms[1]), terms[2]))

    def to_dict(self):
        return {"base": self.base.to_dict(), "modulus": list(self.modulus)}


def _unwrap(x):
    return int(x) if np.ndim(x) == 0 else x


def cubic_extension(spec):
    """Return GF(q^3) over `spec` as an :class:`ExtFieldSpec`.

    In characteristic 2 the modulus is the depressed cubic found by
    :func:`find_irreducible_cubic_depressed`; otherwise it is the first
    irreducible monic cubic in lexicographic order of its coefficients.
    """
    if spec.q**3 > 2**18:
        raise FieldError(f"cubic extension of GF({spec.q}) is too large")
    if spec.p == 2:
        b, c = find_irreducible_cubic_depressed(spec)
        modulus = (c, b, 0, 1)
    else:
        a0, a1, a2 = first_irreducible_cubic(spec)
        modulus = (a0, a1, a2, 1)
    return ExtFieldSpec(spec, modulus)
