"""Covering perfect hash families of strength 3 from orthogoval planes."""

import itertools
import logging
from dataclasses import dataclass, replace

import numpy as np
from joblib import Parallel, delayed

import orthogoval as og
from orthogoval.exception import (
    IncidenceError,
    SearchExhaustedError,
    VerificationError,
)
from orthogoval.geometry import pg_points, point_index

__all__ = [
    "CphfArray",
    "cphf_from_planes",
    "verify_cphf",
    "extend_scphf",
]

logger = logging.getLogger(__name__)

_PAIR_BLOCK = 4096


@dataclass(frozen=True)
class CphfArray:
    """An ``n x k`` array of nonzero vectors of GF(q)^3.

    Parameters
    ----------
    entries : numpy.ndarray
        Shape ``(n, k, 3)``, field element codes.
    field : FieldSpec
    sherwood : bool
        Every entry has last coordinate 1.
    extended : bool
        The last two columns hold vectors with last coordinate 0.
    index : int, optional
        Verified index; None until :func:`verify_cphf` has been run.
    provenance : str
    """

    entries: np.ndarray
    field: object
    sherwood: bool = False
    extended: bool = False
    index: int = None
    provenance: str = ""

    def __post_init__(self):
        entries = np.asarray(self.entries, dtype=np.int64)
        if entries.ndim != 3 or entries.shape[2] != 3:
            raise IncidenceError("CPHF entries must have shape (n, k, 3)")
        if np.any(np.all(entries == 0, axis=2)):
            raise IncidenceError("a CPHF entry is the zero vector")
        if np.any(entries < 0) or np.any(entries >= self.field.q):
            raise IncidenceError(f"CPHF entries must be codes of GF({self.field.q})")
        last = entries[:, :, 2]
        affine = last[:, :-2] if self.extended else last
        if self.sherwood and np.any(affine != 1):
            raise IncidenceError("a Sherwood CPHF has last coordinate 1 everywhere")
        if self.extended and np.any(last[:, -2:] != 0):
            raise IncidenceError("extension columns must have last coordinate 0")
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    @property
    def n(self):
        return self.entries.shape[0]

    @property
    def k(self):
        return self.entries.shape[1]

    @property
    def q(self):
        return self.field.q

    @property
    def t(self):
        return 3

    def take_rows(self, r):
        """The CPHF formed by the first `r` rows; the index is re-verified."""
        if not 1 <= r <= self.n:
            raise IncidenceError(f"cannot take {r} of {self.n} rows")
        return replace(self, entries=self.entries[:r], index=None)

    def with_index(self, index):
        return replace(self, index=int(index))

    def __eq__(self, other):
        if not isinstance(other, CphfArray):
            return NotImplemented
        return (
            self.field == other.field
            and self.sherwood == other.sherwood
            and self.extended == other.extended
            and np.array_equal(self.entries, other.entries)
        )

    __hash__ = None


def _det3(spec, a, b, c):
    """Determinants of stacked 3x3 matrices with rows `a`, `b` and `c`."""
    M, sub, add = spec.mul_table, spec.sub, spec.add_table

    def minor(i, j):
        return sub(M[b[..., i], c[..., j]], M[b[..., j], c[..., i]])

    d = sub(M[a[..., 0], minor(1, 2)], M[a[..., 1], minor(0, 2)])
    return add[d, M[a[..., 2], minor(0, 1)]]


def _min_independent(entries, spec, columns):
    """Smallest number of independent rows over the triples starting in `columns`."""
    k = entries.shape[1]
    best = entries.shape[0]
    for a in columns:
        rest = np.array(list(itertools.combinations(range(a + 1, k), 2)))
        for start in range(0, len(rest), _PAIR_BLOCK):
            block = rest[start : start + _PAIR_BLOCK]
            dets = _det3(
                spec,
                entries[:, a, None, :],
                entries[:, block[:, 0], :],
                entries[:, block[:, 1], :],
            )
            best = min(best, int(np.count_nonzero(dets, axis=0).min()))
    return best


def verify_cphf(cphf, get_chunks="chunks"):
    """The exact index of `cphf`: the least number of rows whose three entries
    are linearly independent, over all column triples.

    The first columns of the triples are divided into chunks and every chunk
    is examined in parallel.

    Parameters
    ----------
    cphf : CphfArray
    get_chunks : str, function (default = "chunks")
        A function that takes in a list of all the column ids as input and
        returns an iterable `column_chunks`. The default chunking is done by
        slicing the columns into `n` chunks, where `n` is the total number of
        CPU cores available.

    Returns
    -------
    int
    """
    entries = cphf.entries
    if cphf.k < 3:
        return cphf.n
    total_cores = og.cpu_count()
    firsts = list(range(cphf.k - 2))
    if get_chunks == "chunks":
        column_chunks = og.create_iterables(entries, "column", total_cores, firsts)
    else:
        column_chunks = get_chunks(firsts)
    results = Parallel(n_jobs=total_cores)(
        delayed(_min_independent)(entries, cphf.field, chunk)
        for chunk in column_chunks
    )
    index = min(results, default=cphf.n)
    logger.debug("CPHF %dx%d over GF(%d) has index %d", cphf.n, cphf.k, cphf.q, index)
    return index


def _plane_coordinates(plane):
    if plane.field is None:
        raise IncidenceError(
            f"plane {plane.provenance!r} has no recorded coordinatisation"
        )
    return plane.coordinates


def cphf_from_planes(planes, permutations=None, verify=True, get_chunks="chunks"):
    """Row ``i``, column ``z`` holds the coordinates of point ``z`` of plane
    ``i`` in the standard plane.

    Parameters
    ----------
    planes : list of PlaneIncidence
        Mutually orthogoval planes with recorded isomorphisms, all projective
        or all affine.
    permutations : list, optional
        Point maps onto the standard plane overriding the recorded ones.
    verify : bool (default = True)
        Compute the index and require at least ``len(planes) - 1``.
    get_chunks : str, function (default = "chunks")
        Passed to :func:`verify_cphf`.

    Returns
    -------
    CphfArray
        A Sherwood CPHF when the planes are affine.
    """
    planes = list(planes)
    if not planes:
        raise IncidenceError("at least one plane is needed")
    first = planes[0]
    if any(
        p.kind != first.kind or p.q != first.q or p.num_points != first.num_points
        for p in planes
    ):
        raise IncidenceError("planes must share kind, order and point set")
    if permutations is not None:
        if len(permutations) != len(planes):
            raise IncidenceError("one permutation per plane is needed")
        planes = [replace(p, isomorphism=perm) for p, perm in zip(planes, permutations)]
    rows = [_plane_coordinates(p) for p in planes]
    field = first.field
    if any(p.field != field for p in planes):
        raise IncidenceError("planes are coordinatised over different fields")
    cphf = CphfArray(
        np.stack(rows),
        field,
        sherwood=not first.is_projective,
        provenance="+".join(p.provenance for p in planes),
    )
    if verify:
        index = verify_cphf(cphf, get_chunks=get_chunks)
        if index < len(planes) - 1:
            raise VerificationError(
                f"CPHF from {len(planes)} planes has index {index} < {len(planes) - 1}"
            )
        cphf = cphf.with_index(index)
    return cphf


def _completion_entries(plane, q):
    """Standard points of ``(1:0:0)`` and ``(0:1:0)`` under the completion."""
    ends = (q * q + q, q * q)
    if plane.completion is not None:
        return tuple(plane.completion[e] for e in ends)
    if plane.infinite_points is not None and plane.isomorphism is None:
        return ends
    return None


def _class_directions(plane, spec):
    """Standard point at infinity of every parallel class of an affine plane."""
    coords = plane.coordinates
    directions = {}
    for members in plane.parallel_classes():
        a, b = plane.lines[members[0]][:2]
        delta = spec.sub(coords[b], coords[a])
        directions[point_index(spec, delta)] = members
    return directions


def _pair_bits(plane, members):
    m = plane.num_points
    bits = 0
    for line_id in members:
        for a, b in itertools.combinations(plane.lines[line_id], 2):
            bits |= 1 << (a * m + b)
    return bits


def _class_systems(options):
    """Yield every choice of one class per row, pairwise pair-disjoint across
    rows, in the order of `options`."""
    chosen = []

    def search(row, used):
        if row == len(options):
            yield tuple(chosen)
            return
        for direction, bits in options[row]:
            if bits & used:
                continue
            chosen.append(direction)
            yield from search(row + 1, used | bits)
            chosen.pop()

    yield from search(0, 0)


def _pair_of_systems(options):
    """First pair of class systems, in enumeration order, that differ in
    every row; None when there is none."""
    systems = list(_class_systems(options))
    logger.debug("%d class systems for %d rows", len(systems), len(options))
    for first in systems:
        for second in systems:
            if all(a != b for a, b in zip(first, second)):
                return list(zip(first, second))
    return None


def _search_extension(planes, spec):
    q = spec.q
    order = [q * q + q, q * q, *range(q * q + 1, q * q + q)]
    options = []
    for plane in planes:
        directions = _class_directions(plane, spec)
        options.append([(d, _pair_bits(plane, directions[d])) for d in order])
    return _pair_of_systems(options)


def extend_scphf(cphf, planes, get_chunks="chunks"):
    """Append the columns of ``(1:0:0)`` and ``(0:1:0)`` to a Sherwood CPHF.

    The projective completions recorded on the planes are used first. When
    they are missing or do not give index ``n - 1``, one parallel class per
    row is chosen for each new column, so that classes chosen for the same
    column in different rows never share a pair of points and the two
    classes of a row differ. Every pair of such choices is examined.

    Parameters
    ----------
    cphf : CphfArray
        A Sherwood CPHF whose row ``i`` was built from ``planes[i]``.
    planes : list of PlaneIncidence
    get_chunks : str, function (default = "chunks")
        Passed to :func:`verify_cphf`.

    Returns
    -------
    CphfArray
        Flagged extended, with its verified index.

    Raises
    ------
    SearchExhaustedError
        When no choice of classes works.
    """
    if not cphf.sherwood or cphf.extended:
        raise IncidenceError("only a Sherwood CPHF can be extended")
    planes = list(planes)[: cphf.n]
    if len(planes) != cphf.n:
        raise IncidenceError("one plane per CPHF row is needed")
    spec = cphf.field
    points = pg_points(spec)
    target = cphf.n - 1

    def build(ends, how):
        extra = np.array([[points[e1], points[e2]] for e1, e2 in ends])
        candidate = CphfArray(
            np.concatenate([cphf.entries, extra], axis=1),
            spec,
            sherwood=True,
            extended=True,
            provenance=f"{cphf.provenance}+ext({how})",
        )
        return candidate, verify_cphf(candidate, get_chunks=get_chunks)

    ends = [_completion_entries(p, spec.q) for p in planes]
    if all(e is not None and min(e) >= spec.q**2 for e in ends):
        candidate, index = build(ends, "completion")
        if index >= target:
            return candidate.with_index(index)
        logger.info("completion entries give index %d, searching classes", index)
    ends = _search_extension(planes, spec)
    if ends is None:
        raise SearchExhaustedError(
            f"no pair-disjoint parallel classes extend this {cphf.n}-row CPHF"
        )
    candidate, index = build(ends, "classes")
    if index < target:
        raise VerificationError(f"extended CPHF has index {index} < {target}")
    return candidate.with_index(index)
