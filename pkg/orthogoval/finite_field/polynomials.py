"""Cubic searches and exhaustive root counts over small fields."""

import itertools

import numpy as np

from orthogoval.exception import FieldError

__all__ = [
    "find_irreducible_cubic_depressed",
    "irreducible_depressed_cubics",
    "first_irreducible_cubic",
    "evaluate_monomials",
    "count_roots",
    "is_permutation_polynomial",
    "linearized_kernel_size",
]


def _cube_values(spec):
    xs = spec.elements
    return spec.mul(spec.mul(xs, xs), xs)


def irreducible_depressed_cubics(spec):
    """All ``(b, c)`` with ``x^3 + bx + c`` irreducible over `spec`.

    Pairs are listed in lexicographic order of their codes. A cubic is
    irreducible exactly when it has no root, so every field element is tried.
    """
    if spec.p != 2:
        raise FieldError("depressed cubic search is defined for characteristic 2")
    xs = spec.elements
    cubes = _cube_values(spec)
    cs = np.arange(1, spec.q)
    found = []
    for b in range(spec.q):
        partial = spec.add(cubes, spec.mul(b, xs))
        values = spec.add_table[partial[None, :], cs[:, None]]
        rootless = ~np.any(values == 0, axis=1)
        found.extend((b, int(c)) for c in cs[rootless])
    return found


def find_irreducible_cubic_depressed(spec):
    """First ``(b, c)`` in lexicographic order with ``x^3 + bx + c`` irreducible.

    Parameters
    ----------
    spec : FieldSpec
        A field of characteristic 2; such a cubic always exists.
    """
    if spec.p != 2:
        raise FieldError("depressed cubic search is defined for characteristic 2")
    xs = spec.elements
    cubes = _cube_values(spec)
    for b, c in itertools.product(range(spec.q), range(1, spec.q)):
        if not np.any(spec.add(spec.add(cubes, spec.mul(b, xs)), c) == 0):
            return b, c
    raise FieldError(f"no irreducible depressed cubic over GF({spec.q})")


def first_irreducible_cubic(spec):
    """Coefficients ``(a0, a1, a2)`` of the first irreducible monic cubic.

    Cubics ``x^3 + a2 x^2 + a1 x + a0`` are tried in lexicographic order of
    ``(a2, a1, a0)``.
    """
    xs = spec.elements
    cubes = _cube_values(spec)
    squares = spec.mul(xs, xs)
    for a2, a1, a0 in itertools.product(range(spec.q), range(spec.q), range(1, spec.q)):
        values = spec.add(
            spec.add(cubes, spec.mul(a2, squares)), spec.add(spec.mul(a1, xs), a0)
        )
        if not np.any(values == 0):
            return a0, a1, a2
    raise FieldError(f"no irreducible cubic over GF({spec.q})")


def evaluate_monomials(spec, exponents, coefficients=None, xs=None):
    """Values of ``sum(c_i * x**e_i)`` at every element (or at `xs`)."""
    xs = spec.elements if xs is None else np.asarray(xs)
    if coefficients is None:
        coefficients = [1] * len(exponents)
    total = np.zeros_like(xs)
    for c, e in zip(coefficients, exponents):
        total = spec.add(total, spec.mul(c, spec.pow(xs, e)))
    return total


def count_roots(spec, exponents, coefficients=None):
    """Number of field elements at which the polynomial vanishes."""
    return int(np.count_nonzero(evaluate_monomials(spec, exponents, coefficients) == 0))


def is_permutation_polynomial(spec, exponents, coefficients=None):
    values = evaluate_monomials(spec, exponents, coefficients)
    return len(np.unique(values)) == spec.q


def linearized_kernel_size(spec, a, b, k):
    """Number of x with ``a * x**(2**k) + b * x == 0``."""
    return count_roots(spec, [2**k, 1], [a, b])
