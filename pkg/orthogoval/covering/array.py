"""Strength-3 covering arrays expanded from covering perfect hash families."""

import itertools
import logging
from dataclasses import dataclass

import numpy as np
from joblib import Parallel, delayed

import orthogoval as og
from orthogoval.exception import IncidenceError, OrthogovalError

__all__ = [
    "CoveringArray",
    "CoverageReport",
    "ca_from_cphf",
    "ca_from_extended_scphf",
    "verify_ca",
    "coverage_census",
]

logger = logging.getLogger(__name__)

_PAIR_BLOCK = 512


@dataclass(frozen=True)
class CoveringArray:
    """An ``N x k`` array over the symbols ``0 .. v-1`` of strength 3."""

    rows: np.ndarray
    v: int
    index: int = 1
    provenance: str = ""

    def __post_init__(self):
        rows = np.asarray(self.rows, dtype=np.int64)
        if rows.ndim != 2:
            raise IncidenceError("a covering array is a two-dimensional array")
        if rows.size and (rows.min() < 0 or rows.max() >= self.v):
            raise IncidenceError(f"symbols must lie in 0 .. {self.v - 1}")
        rows.setflags(write=False)
        object.__setattr__(self, "rows", rows)

    @property
    def N(self):
        return self.rows.shape[0]

    @property
    def k(self):
        return self.rows.shape[1]

    @property
    def t(self):
        return 3

    @property
    def params(self):
        return (self.N, self.t, self.k, self.v, self.index)

    def __str__(self):
        return f"CA_{self.index}({self.N};3,{self.k},{self.v})"

    def __eq__(self, other):
        if not isinstance(other, CoveringArray):
            return NotImplemented
        return self.v == other.v and np.array_equal(self.rows, other.rows)

    __hash__ = None


@dataclass(frozen=True)
class CoverageReport:
    """Verdict of :func:`verify_ca`.

    ``witness`` is ``(columns, symbols, count)`` for the lexicographically
    first column triple and tuple covered fewer than ``index`` times.
    """

    passed: bool
    index: int
    min_count: int
    witness: tuple = None

    def __bool__(self):
        return self.passed

    def to_dict(self):
        witness = None
        if self.witness is not None:
            cols, symbols, count = self.witness
            witness = {"columns": list(cols), "tuple": list(symbols), "count": count}
        return {
            "passed": self.passed,
            "index": self.index,
            "min_count": self.min_count,
            "witness": witness,
        }


def _all_h(q):
    """Every vector of GF(q)^3 in lexicographic order of codes."""
    return np.array(list(itertools.product(range(q), repeat=3)), dtype=np.int64)


def _expand(cphf, h):
    """Rows ``h . C[i, z]`` for every CPHF row ``i`` (outer) and ``h`` (inner)."""
    spec = cphf.field
    blocks = [spec.dot(h[:, None, :], row[None, :, :]) for row in cphf.entries]
    return np.concatenate(blocks)


def _check_index(cphf, index, rows):
    """The first `rows` CPHF rows, checked to have index at least `index`."""
    if index < 1:
        raise OrthogovalError("a covering array needs index at least 1")
    if rows > cphf.n:
        raise OrthogovalError(
            f"index {index} needs {rows} CPHF rows, only {cphf.n} available"
        )
    used = cphf if rows == cphf.n else cphf.take_rows(rows)
    verified = og.verify_cphf(used)
    if verified < index:
        raise OrthogovalError(
            f"{rows} CPHF rows have index {verified}, less than {index}"
        )
    return used


def ca_from_cphf(cphf, index):
    """Expand every row of a CPHF into ``CA_index(N; 3, k, q)``.

    For a plain CPHF every nonzero ``h`` in GF(q)^3 gives one row per CPHF
    row, and ``index`` all-zero rows are appended: ``N = n(q^3 - 1) + index``.
    For a Sherwood CPHF the vectors ``h = (0, 0, c)`` are skipped and
    ``index`` copies of each constant row are appended instead:
    ``N = n(q^3 - q) + index*q``. Use :meth:`CphfArray.take_rows` first to
    build from fewer rows.

    Parameters
    ----------
    cphf : CphfArray
        Not extended.
    index : int
        At least 1 and at most the index of `cphf`.

    Returns
    -------
    CoveringArray
    """
    if cphf.extended:
        raise IncidenceError("use ca_from_extended_scphf for an extended CPHF")
    used = _check_index(cphf, index, cphf.n)
    q = cphf.q
    h = _all_h(q)
    if cphf.sherwood:
        h = h[(h[:, 0] != 0) | (h[:, 1] != 0)]
        tail = np.repeat(np.arange(q), index)[:, None]
    else:
        h = h[1:]
        tail = np.zeros((index, 1), dtype=np.int64)
    tail = np.broadcast_to(tail, (len(tail), used.k))
    rows = np.concatenate([_expand(used, h), tail])
    ca = CoveringArray(rows, q, index, provenance=f"ca({used.provenance})")
    logger.info("built %s", ca)
    return ca


def ca_from_extended_scphf(cphf, index):
    """Expand the first ``index + 1`` rows of an extended Sherwood CPHF.

    Every ``h`` in GF(q)^3 gives one row per CPHF row. The row of ``h = (0, 0,
    c)`` is the same for every CPHF row; its last occurrence is deleted for
    each ``c``, so ``N = (index + 1) q^3 - q``.

    Returns
    -------
    CoveringArray
    """
    if not cphf.extended:
        raise IncidenceError("ca_from_extended_scphf needs an extended CPHF")
    used = _check_index(cphf, index, index + 1)
    q = cphf.q
    rows = _expand(used, _all_h(q))
    pattern = np.zeros((q, used.k), dtype=np.int64)
    pattern[:, :-2] = np.arange(q)[:, None]
    keep = np.ones(len(rows), dtype=bool)
    for c in range(q):
        hits = np.flatnonzero(np.all(rows == pattern[c], axis=1))
        if len(hits) < 2:
            raise IncidenceError(
                f"the repeated constant row for symbol {c} is missing; "
                "the extension is malformed"
            )
        keep[hits[-1]] = False
    ca = CoveringArray(rows[keep], q, index, provenance=f"ca({used.provenance})")
    logger.info("built %s", ca)
    return ca


def coverage_census(ca, columns):
    """Number of rows showing each symbol triple on three columns, shape
    ``(v, v, v)``."""
    a, b, c = columns
    v = ca.v
    codes = (ca.rows[:, a] * v + ca.rows[:, b]) * v + ca.rows[:, c]
    return np.bincount(codes, minlength=v**3).reshape(v, v, v)


def _census_chunk(rows, v, index, firsts):
    """Least count and first deficient triple for triples starting in `firsts`."""
    k = rows.shape[1]
    best, witness = None, None
    for a in firsts:
        rest = np.array(list(itertools.combinations(range(a + 1, k), 2)))
        for start in range(0, len(rest), _PAIR_BLOCK):
            block = rest[start : start + _PAIR_BLOCK]
            first = rows[:, a, None] * v + rows[:, block[:, 0]]
            codes = first * v + rows[:, block[:, 1]]
            codes = codes + np.arange(len(block)) * v**3
            counts = np.bincount(codes.ravel(), minlength=len(block) * v**3)
            counts = counts.reshape(len(block), v**3)
            low = int(counts.min())
            best = low if best is None else min(best, low)
            if witness is None and low < index:
                pair, code = np.argwhere(counts < index)[0]
                symbols = np.unravel_index(code, (v, v, v))
                witness = (
                    (int(a), int(block[pair, 0]), int(block[pair, 1])),
                    tuple(int(s) for s in symbols),
                    int(counts[pair, code]),
                )
    return best, witness


def verify_ca(ca, t=3, index=None, get_chunks="chunks"):
    """Exhaustive coverage census of every column triple and symbol triple.

    The first columns of the triples are divided into chunks and each chunk
    is counted in parallel; the first failing triple in lexicographic order
    is reported.

    Parameters
    ----------
    ca : CoveringArray
    t : int (default = 3)
        Only strength 3 is supported.
    index : int, optional
        Required coverage, ``ca.index`` by default.
    get_chunks : str, function (default = "chunks")
        A function that takes in a list of all the column ids as input and
        returns an iterable `column_chunks`. The default chunking is done by
        slicing the columns into `n` chunks, where `n` is the total number of
        CPU cores available.

    Returns
    -------
    CoverageReport
    """
    if t != 3:
        raise OrthogovalError(f"only strength 3 is supported, got t={t}")
    index = ca.index if index is None else index
    if ca.k < 3:
        raise IncidenceError("a strength-3 array needs at least three columns")
    total_cores = og.cpu_count()
    firsts = list(range(ca.k - 2))
    if get_chunks == "chunks":
        column_chunks = og.create_iterables(ca.rows, "column", total_cores, firsts)
    else:
        column_chunks = get_chunks(firsts)
    results = Parallel(n_jobs=total_cores)(
        delayed(_census_chunk)(ca.rows, ca.v, index, chunk) for chunk in column_chunks
    )
    min_count = min(r[0] for r in results if r[0] is not None)
    witnesses = [r[1] for r in results if r[1] is not None]
    witness = min(witnesses) if witnesses else None
    report = CoverageReport(witness is None, index, min_count, witness)
    logger.debug("coverage of %s at index %d: %s", ca, index, report.passed)
    return report
