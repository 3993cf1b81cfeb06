"""Packing-number bounds on the size of orthogoval sets."""

import math

import galois

from orthogoval.exception import OrthogovalError, VerificationError
from orthogoval.geometry import AFFINE, PROJECTIVE

__all__ = [
    "UNBOUNDED",
    "johnson_packing_bound",
    "orthogoval_set_bound",
    "check_packing_bound",
]

UNBOUNDED = math.inf


def johnson_packing_bound(v, k):
    """Johnson bound on the packing number D(v, k, 3).

    ``floor(v/k * floor((v-1)/(k-1) * floor((v-2)/(k-2))))``

    Examples
    --------
    >>> johnson_packing_bound(13, 4)
    65
    """
    v, k = int(v), int(k)
    if k < 3:
        raise OrthogovalError(f"block size must be at least 3, got {k}")
    if v <= k:
        raise OrthogovalError(f"need more points than the block size, got v={v}")
    inner = (v - 2) // (k - 2)
    middle = (v - 1) * inner // (k - 1)
    return v * middle // k


def orthogoval_set_bound(q, kind):
    """Upper bound on the number of mutually orthogoval planes of order `q`.

    ``max(5, q + 2)`` for projective planes and ``max(7, q + 2)`` for affine
    planes of order ``q > 2``; affine planes of order 2 are unbounded.
    """
    q = int(q)
    if not galois.is_prime_power(q):
        raise OrthogovalError(f"{q} is not a prime power")
    if kind == PROJECTIVE:
        return max(5, q + 2)
    if kind == AFFINE:
        return UNBOUNDED if q == 2 else max(7, q + 2)
    raise OrthogovalError(f"unknown plane kind {kind!r}")


def check_packing_bound(planes):
    """Check that the lines of `planes` fit in a strength-3 packing.

    Returns the Johnson bound that was compared against, or None for affine
    planes of order 2.
    """
    planes = list(planes)
    first = planes[0]
    if first.num_points <= first.line_size or first.line_size < 3:
        return None
    bound = johnson_packing_bound(first.num_points, first.line_size)
    total = sum(p.num_lines for p in planes)
    if total > bound:
        raise VerificationError(
            f"{len(planes)} planes carry {total} blocks, more than the packing "
            f"bound {bound}"
        )
    return bound
