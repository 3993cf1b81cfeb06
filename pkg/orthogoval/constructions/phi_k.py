"""Triples of mutually orthogoval AG(2,2^n) from the additive maps

``phi_k(x, y) = (x^(2^k) + y, y^(2^k) + x + y)``.
"""

import logging
from math import gcd

import numpy as np

import orthogoval as og
from orthogoval.exception import OrthogovalError, VerificationError
from orthogoval.finite_field import ff_make

__all__ = ["phi_k_map", "phi_k_triple", "swap_coordinates"]

logger = logging.getLogger(__name__)

MAX_PHI_N = 7


def _check_n(n):
    if not 1 <= n <= MAX_PHI_N:
        raise OrthogovalError(f"phi_k maps are built for 1 <= n <= {MAX_PHI_N}")


def phi_k_map(n, k):
    """The permutation ``x*q + y -> index of phi_k(x, y)`` of AG(2,2^n).

    Raises
    ------
    OrthogovalError
        Unless ``gcd(3k, n) = 1``.
    """
    _check_n(n)
    if gcd(3 * k, n) != 1:
        raise OrthogovalError(f"phi_k needs gcd(3k, n) = 1, got k={k}, n={n}")
    spec = ff_make(2, n)
    q = spec.q
    xs, ys = np.divmod(np.arange(q * q), q)
    A = spec.add_table
    u = A[spec.frobenius(xs, k), ys]
    v = A[A[spec.frobenius(ys, k), xs], ys]
    perm = u * q + v
    if len(np.unique(perm)) != q * q:
        raise VerificationError(f"phi_{k} is not a bijection of AG(2,{q})")
    return perm


def swap_coordinates(q):
    """The permutation induced by ``(x, y) -> (y, x)``."""
    xs, ys = np.divmod(np.arange(q * q), q)
    return ys * q + xs


def phi_k_triple(n, k, verify=True):
    """AG(2,2^n), its image under ``phi_k`` and its image under ``phi_k^2``.

    Parameters
    ----------
    n, k : int
        ``gcd(6k, n)`` must be 1.
    verify : bool (default = True)
        Check that the three planes are mutually orthogoval.

    Returns
    -------
    list of PlaneIncidence
    """
    _check_n(n)
    if gcd(6 * k, n) != 1:
        raise OrthogovalError(
            f"phi_k triples need gcd(6k, n) = 1, got k={k}, n={n}"
        )
    perm = phi_k_map(n, k)
    spec = ff_make(2, n)
    base = og.build_ag(spec, max_order=2**MAX_PHI_N)
    second = base.relabel(perm, provenance=f"phi_k(n={n}, k={k})")
    third = second.relabel(perm, provenance=f"phi_k^2(n={n}, k={k})")
    planes = [base, second, third]
    if verify:
        report = og.is_mutually_orthogoval(planes)
        if not report:
            raise VerificationError(
                f"phi_k planes are not orthogoval: {report.to_dict()}"
            )
        og.check_packing_bound(planes)
    return planes
