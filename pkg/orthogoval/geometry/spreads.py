"""Spreads of F_2^{2n} and the translation planes they define.

A vector of F_2^{2n} is stored as an integer whose binary digits are its
coordinates, most significant bit first when printed. Addition is XOR.
"""

import functools
import logging
from dataclasses import dataclass

import numpy as np

from orthogoval.exception import IncidenceError, UnsupportedOrderError
from orthogoval.finite_field import ff_make, subfield_embedding
from orthogoval.geometry.conics import conic_points
from orthogoval.geometry.plane import AFFINE, PlaneIncidence

__all__ = [
    "SpreadF2",
    "line_spread",
    "plane_from_spread",
    "spread_coordinates",
    "pencil_spread",
    "format_bits",
]

logger = logging.getLogger(__name__)

MAX_SPREAD_N = 8


def format_bits(v, width):
    return format(int(v), f"0{width}b")


@dataclass(frozen=True)
class SpreadF2:
    """``2**n + 1`` subgroups of F_2^{2n} of size ``2**n`` meeting only in 0."""

    n: int
    members: tuple

    def __post_init__(self):
        members = tuple(tuple(sorted(int(v) for v in m)) for m in self.members)
        object.__setattr__(self, "members", members)

    @property
    def q(self):
        return 2**self.n

    @property
    def dimension(self):
        return 2 * self.n

    @functools.cached_property
    def member_of(self):
        """Index of the member containing each nonzero vector; -1 at 0."""
        owner = np.full(2 ** (2 * self.n), -1, dtype=np.int64)
        for i, member in enumerate(self.members):
            owner[list(member[1:])] = i
        return owner

    def validate(self):
        """Raise :class:`IncidenceError` unless the spread axioms hold."""
        q = self.q
        if len(self.members) != q + 1:
            raise IncidenceError(f"a spread of F_2^{2 * self.n} has {q + 1} members")
        seen = np.zeros(q * q, dtype=np.int64)
        for member in self.members:
            arr = np.array(member)
            if len(arr) != q or arr[0] != 0 or arr.max() >= q * q:
                raise IncidenceError(f"member of size {len(arr)} is not a subgroup")
            closure = np.bitwise_xor.outer(arr, arr)
            if not np.isin(closure, arr).all():
                raise IncidenceError("member is not closed under addition")
            seen[arr] += 1
        if seen[0] != q + 1 or np.any(seen[1:] != 1):
            raise IncidenceError("members do not partition the nonzero vectors")
        return True

    def image(self, matrix):
        """The spread ``{M(S) : S in self}`` for an invertible binary matrix."""
        table = matrix.apply_all()
        return SpreadF2(self.n, tuple(table[list(m)] for m in self.members))

    def format_member(self, i):
        return [format_bits(v, 2 * self.n) for v in self.members[i]]


def _big_field(n):
    if not 1 <= n <= MAX_SPREAD_N:
        raise UnsupportedOrderError(f"spreads are built for 1 <= n <= {MAX_SPREAD_N}")
    return ff_make(2, 2 * n)


@functools.lru_cache(maxsize=None)
def line_spread(n):
    """The line spread ``C_i = w^i <w^(q+1)>`` with 0 adjoined, ``0 <= i <= q``.

    ``w`` is the generator of the default GF(2^{2n}); vectors are element codes.
    """
    big = _big_field(n)
    q = 2**n
    GF = big.galois_field
    w = GF(big.generator)
    subgroup = (w ** (q + 1)) ** np.arange(q - 1)
    members = []
    for i in range(q + 1):
        coset = (w**i * subgroup).view(np.ndarray)
        members.append([0, *coset.tolist()])
    return SpreadF2(n, tuple(members))


@functools.lru_cache(maxsize=None)
def spread_coordinates(n):
    """Standard AG(2, 2^n) point index of every vector of the line spread.

    A vector ``v = x + y*w`` in GF(2^{2n}), with ``x, y`` in the embedded
    subfield GF(2^n), is sent to ``x*q + y``.
    """
    big = _big_field(n)
    small = ff_make(2, n)
    q = small.q
    GF = big.galois_field
    embed = GF(subfield_embedding(big, small))
    w = GF(big.generator)
    xs, ys = np.divmod(np.arange(q * q), q)
    vectors = (embed[xs] + embed[ys] * w).view(np.ndarray)
    psi = np.empty(q * q, dtype=np.int64)
    psi[vectors] = np.arange(q * q)
    psi.setflags(write=False)
    return psi


def plane_from_spread(spread, provenance="spread", field=None, isomorphism=None):
    """The translation plane whose lines are the cosets of the members.

    Lines are grouped by member; cosets of one member are ordered by their
    smallest vector.
    """
    spread.validate()
    q = spread.q
    vectors = np.arange(q * q)
    lines = []
    for member in spread.members:
        reps = np.bitwise_xor.outer(vectors, np.array(member)).min(axis=1)
        cosets = vectors[np.lexsort((vectors, reps))].reshape(q, q)
        lines.extend(map(tuple, cosets.tolist()))
    return PlaneIncidence(
        AFFINE, q, tuple(lines), field, provenance, isomorphism=isomorphism
    )


def pencil_spread(forms, spec):
    """Affine traces of a pencil of translation conics, as a spread.

    The point ``(x:y:1)`` becomes the vector ``x*q + y``; each member loses
    its point on the line ``z = 0``.
    """
    q = spec.q
    members = [[p for p in conic_points(form, spec) if p < q * q] for form in forms]
    spread = SpreadF2(spec.n, tuple(members))
    spread.validate()
    return spread
