"""Binary matrices acting on F_2^{2n} and the randomized search for matrices
that carry the line spread to an orthogoval spread.

A vector is an integer whose most significant of ``dim`` bits is the first
coordinate; matrices act on column vectors.
"""

import functools
import itertools
import logging
from dataclasses import dataclass

import galois
import numpy as np
from joblib import Parallel, delayed

import orthogoval as og
from orthogoval.exception import (
    IncidenceError,
    OrthogovalError,
    SearchExhaustedError,
)
from orthogoval.geometry import line_spread

__all__ = [
    "BinaryMatrix",
    "M4",
    "M6",
    "is_spread_compatible",
    "square_is_suitable",
    "partial_rejected",
    "candidate_matrix_search",
]

logger = logging.getLogger(__name__)

GF2 = galois.GF(2)


@dataclass(frozen=True)
class BinaryMatrix:
    """A ``dim x dim`` matrix over F_2, stored as a tuple of 0/1 row tuples."""

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(b) for b in row) for row in self.rows)
        if not rows or any(len(r) != len(rows) for r in rows):
            raise IncidenceError("a binary matrix must be square and non-empty")
        if any(b not in (0, 1) for r in rows for b in r):
            raise IncidenceError("binary matrix entries must be 0 or 1")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_bits(cls, rows):
        """Build from bit strings such as ``"0110"`` or from 0/1 sequences."""
        return cls(tuple(tuple(int(c) for c in row) for row in rows))

    @classmethod
    def from_array(cls, array):
        return cls(tuple(map(tuple, (np.asarray(array) % 2).tolist())))

    @classmethod
    def identity(cls, dim):
        return cls.from_array(np.eye(dim, dtype=np.uint8))

    @property
    def dim(self):
        return len(self.rows)

    @functools.cached_property
    def array(self):
        arr = np.array(self.rows, dtype=np.uint8)
        arr.setflags(write=False)
        return arr

    @property
    def key(self):
        """Canonical byte encoding of the rows."""
        return np.packbits(self.array, axis=None).tobytes()

    def rank(self):
        return int(np.linalg.matrix_rank(GF2(self.array)))

    @property
    def is_invertible(self):
        return self.rank() == self.dim

    def inverse(self):
        if not self.is_invertible:
            raise IncidenceError("singular binary matrix")
        inv = np.linalg.inv(GF2(self.array))
        return BinaryMatrix.from_array(inv.view(np.ndarray))

    def __matmul__(self, other):
        if other.dim != self.dim:
            raise IncidenceError("binary matrices of different sizes")
        return BinaryMatrix.from_array(
            self.array.astype(np.int64) @ other.array.astype(np.int64)
        )

    def power(self, k):
        """``M**k``; negative exponents use the inverse."""
        base = self if k >= 0 else self.inverse()
        result = BinaryMatrix.identity(self.dim)
        for _ in range(abs(int(k))):
            result = result @ base
        return result

    def apply(self, v):
        return int(self.apply_all(np.array([v]))[0])

    def apply_all(self, vectors=None):
        """Images of `vectors` (default: every vector, in code order)."""
        d = self.dim
        if vectors is None:
            vectors = np.arange(2**d)
        shifts = np.arange(d - 1, -1, -1)
        bits = (np.asarray(vectors)[..., None] >> shifts) & 1
        images = (bits @ self.array.T.astype(np.int64)) % 2
        return images @ (1 << shifts)

    def format(self):
        return "\n".join("".join(str(b) for b in row) for row in self.rows)

    def __str__(self):
        return self.format()


M4 = BinaryMatrix.from_bits(["0110", "0001", "1100", "0011"])
M6 = BinaryMatrix.from_bits(
    ["010101", "001011", "110000", "001111", "111001", "001110"]
)


def _member_array(spread):
    return np.array(spread.members, dtype=np.int64)


def _compatible_images(images, member_of):
    """True if no image member has two nonzero vectors in one spread member."""
    owners = np.sort(member_of[images[:, 1:]], axis=1)
    return not bool(np.any(owners[:, 1:] == owners[:, :-1]))


def is_spread_compatible(matrix, spread):
    """True iff ``|M(S_i) & S_j| <= 2`` for all members ``S_i``, ``S_j``.

    Raises
    ------
    IncidenceError
        If the matrix does not act on the space of the spread.
    """
    if matrix.dim != spread.dimension:
        raise IncidenceError(
            f"a {matrix.dim}x{matrix.dim} matrix does not act on "
            f"F_2^{spread.dimension}"
        )
    images = matrix.apply_all()[_member_array(spread)]
    return _compatible_images(images, spread.member_of)


def square_is_suitable(matrix, spread):
    """Whether ``M`` and ``M**2`` are both spread-compatible."""
    return is_spread_compatible(matrix, spread) and is_spread_compatible(
        matrix @ matrix, spread
    )


def _partial_products(partial, vectors):
    d = partial.shape[1]
    shifts = np.arange(d - 1, -1, -1)
    bits = (vectors[..., None] >> shifts) & 1
    out = (bits @ partial.T.astype(np.int64)) % 2
    return out @ (1 << np.arange(d - 2, -1, -1))


def partial_rejected(partial, spread):
    """Pruning test for the first ``dim - 1`` rows of a candidate.

    The partial products of the nonzero vectors of each member are compared
    with the members truncated to their first ``dim - 1`` coordinates; four
    products of one member inside one truncated member reject the partial
    matrix. A rejected partial matrix has no spread-compatible completion.
    """
    members = _member_array(spread)
    products = _partial_products(np.asarray(partial), members[:, 1:])
    size = 2 ** (spread.dimension - 1)
    truncated = np.zeros((len(members), size), dtype=bool)
    truncated[np.arange(len(members))[:, None], members >> 1] = True
    hits = truncated[:, products].sum(axis=2)
    return bool(hits.max() >= 4)


def _rowspace(rows):
    span = {0}
    for r in rows:
        span |= {s ^ r for s in span}
    return span


def _completions(partial, spread):
    """Invertible spread-compatible completions of a partial matrix."""
    d = spread.dimension
    shifts = 1 << np.arange(d - 1, -1, -1)
    row_codes = [int(r @ shifts) for r in partial]
    span = _rowspace(row_codes)
    if len(span) != 2 ** (d - 1):
        return []
    members = _member_array(spread)
    vectors = np.arange(2**d)
    head = _partial_products(partial, vectors) << 1
    bits = (vectors[:, None] >> np.arange(d - 1, -1, -1)) & 1
    found = []
    for last in range(2**d):
        if last in span:
            continue
        table = head | ((bits @ bits[last]) % 2)
        if _compatible_images(table[members], spread.member_of):
            found.append(BinaryMatrix.from_array(np.vstack([partial, bits[last]])))
    return found


def _search_batch(spread, seed, batch, attempts):
    seq = np.random.SeedSequence([seed, batch])
    rng = np.random.Generator(np.random.PCG64(seq))
    d = spread.dimension
    found = []
    for _ in range(attempts):
        partial = rng.integers(0, 2, size=(d - 1, d), dtype=np.uint8)
        if partial_rejected(partial, spread):
            continue
        found.extend(_completions(partial, spread))
    return found


def candidate_matrix_search(
    n,
    count,
    seed=0,
    spread=None,
    batch_size=64,
    max_batches=1000,
    get_chunks="chunks",
):
    """Distinct invertible matrices carrying `spread` to a compatible spread.

    Random partial matrices are drawn in batches; batch ``b`` uses the PCG64
    generator seeded with ``SeedSequence([seed, b])``. Batches run in parallel
    and their results are merged in batch order, so the output depends only on
    `seed`.

    Parameters
    ----------
    n : int
        Half the dimension, ``1 <= n <= 8``.
    count : int
        Number of matrices wanted.
    seed : int (default = 0)
    spread : SpreadF2, optional
        Base spread, the line spread of F_2^{2n} by default.
    batch_size : int (default = 64)
        Partial matrices drawn per batch.
    max_batches : int (default = 1000)
        Cap on the number of batches.
    get_chunks : str, function (default = "chunks")
        A function that takes in a list of batch numbers and returns an
        iterable of batch chunks. The default chunking uses the total number
        of CPU cores available.

    Returns
    -------
    list of BinaryMatrix

    Raises
    ------
    SearchExhaustedError
        When `max_batches` is reached first; ``partial`` holds what was found.
    """
    if not 1 <= n <= 8:
        raise OrthogovalError(f"matrix search supports 1 <= n <= 8, got {n}")
    spread = line_spread(n) if spread is None else spread
    if spread.n != n:
        raise IncidenceError("base spread has the wrong dimension")
    total_cores = og.cpu_count()
    result, seen = [], set()
    for start in range(0, max_batches, total_cores):
        batches = list(range(start, min(start + total_cores, max_batches)))
        if get_chunks == "chunks":
            num_in_chunk = max(len(batches) // total_cores, 1)
            batch_chunks = og.chunks(batches, num_in_chunk)
        else:
            batch_chunks = get_chunks(batches)
        outputs = Parallel(n_jobs=total_cores)(
            delayed(_run_batches)(spread, seed, chunk, batch_size)
            for chunk in batch_chunks
        )
        merged = sorted(itertools.chain.from_iterable(outputs), key=lambda t: t[0])
        for _, matrices in merged:
            for m in matrices:
                if m.key not in seen:
                    seen.add(m.key)
                    result.append(m)
                if len(result) == count:
                    return result
        logger.info(
            "%d of %d matrices after %d batches", len(result), count, batches[-1] + 1
        )
    raise SearchExhaustedError(
        f"found {len(result)} of {count} matrices in {max_batches} batches",
        partial=result,
    )


def _run_batches(spread, seed, batches, attempts):
    return [(b, _search_batch(spread, seed, b, attempts)) for b in batches]
