"""Exhaustive orthogovality checks between planes on a common point set."""

import itertools
import logging
from dataclasses import dataclass

import numpy as np
from joblib import Parallel, delayed

import orthogoval as og
from orthogoval.exception import IncidenceError

__all__ = [
    "OrthogovalReport",
    "MutualOrthogovalReport",
    "is_orthogoval_pair",
    "is_mutually_orthogoval",
    "orthogoval_except_line",
]

logger = logging.getLogger(__name__)

_BLOCK = 256


@dataclass(frozen=True)
class OrthogovalReport:
    """Verdict of a pairwise check.

    ``witness`` is ``(line1, line2, shared_points)`` for the lexicographically
    first pair of lines sharing three or more points, else None.
    """

    orthogoval: bool
    max_intersection: int
    witness: tuple = None

    def __bool__(self):
        return self.orthogoval

    def to_dict(self):
        witness = None
        if self.witness is not None:
            i, j, points = self.witness
            witness = {"lines": [i, j], "points": list(points)}
        return {
            "orthogoval": self.orthogoval,
            "max_intersection": self.max_intersection,
            "witness": witness,
        }


@dataclass(frozen=True)
class MutualOrthogovalReport:
    orthogoval: bool
    failing_pair: tuple = None
    report: OrthogovalReport = None

    def __bool__(self):
        return self.orthogoval

    def to_dict(self):
        d = {"orthogoval": self.orthogoval, "failing_pair": self.failing_pair}
        if self.report is not None:
            d.update(
                {k: v for k, v in self.report.to_dict().items() if k != "orthogoval"}
            )
        return d


def _check_compatible(P1, P2):
    if P1.kind != P2.kind or P1.q != P2.q or P1.num_points != P2.num_points:
        raise IncidenceError(
            f"cannot compare a {P1.kind} plane of order {P1.q} with a "
            f"{P2.kind} plane of order {P2.q}"
        )


def _max_intersections(line_ids, lines1, point_lines2, num_lines2, exclude=None):
    """Largest intersection and first pair meeting in 3+ points, for a line block."""
    best, witness = 0, None
    line_ids = np.asarray(line_ids, dtype=np.int64)
    for start in range(0, len(line_ids), _BLOCK):
        block = line_ids[start : start + _BLOCK]
        hits = point_lines2[lines1[block]].reshape(len(block), -1)
        offsets = np.arange(len(block))[:, None] * num_lines2
        counts = np.bincount(
            (hits + offsets).ravel(), minlength=len(block) * num_lines2
        ).reshape(len(block), num_lines2)
        if exclude is not None:
            rows = np.flatnonzero(block == exclude[0])
            counts[rows, exclude[1]] = 0
        best = max(best, int(counts.max()))
        bad = np.argwhere(counts >= 3)
        if len(bad):
            candidates = sorted((int(block[r]), int(c)) for r, c in bad)
            if witness is None or candidates[0] < witness:
                witness = candidates[0]
    return best, witness


def _pair_report(P1, P2, line_chunks, n_jobs, exclude=None):
    lines1, pl2 = P1.line_array, P2.point_lines
    results = Parallel(n_jobs=n_jobs)(
        delayed(_max_intersections)(chunk, lines1, pl2, P2.num_lines, exclude)
        for chunk in line_chunks
    )
    best = max((r[0] for r in results), default=0)
    witnesses = [r[1] for r in results if r[1] is not None]
    if not witnesses:
        return OrthogovalReport(True, best)
    i, j = min(witnesses)
    shared = tuple(sorted(set(P1.lines[i]) & set(P2.lines[j])))
    return OrthogovalReport(False, best, (i, j, shared))


def is_orthogoval_pair(P1, P2, get_chunks="chunks"):
    """Exhaustive check that every line of `P1` meets every line of `P2` in at
    most two points.

    The lines of `P1` are divided into chunks and, for each chunk, the
    intersection sizes with all lines of `P2` are counted in parallel from the
    point-to-line incidences of `P2`.

    Parameters
    ----------
    P1, P2 : PlaneIncidence
        Planes of the same kind and order on the same point set.
    get_chunks : str, function (default = "chunks")
        A function that takes in a list of all the line ids of `P1` as input
        and returns an iterable `line_chunks`. The default chunking is done by
        slicing the line ids into `n` chunks, where `n` is the total number of
        CPU cores available.

    Returns
    -------
    OrthogovalReport
        Truthy when the planes are orthogoval.
    """
    _check_compatible(P1, P2)
    total_cores = og.cpu_count()
    if get_chunks == "chunks":
        line_chunks = og.create_iterables(P1, "line", total_cores)
    else:
        line_chunks = get_chunks(list(range(P1.num_lines)))
    return _pair_report(P1, P2, line_chunks, total_cores)


def is_mutually_orthogoval(planes, get_chunks="chunks"):
    """Check every unordered pair of `planes` with :func:`is_orthogoval_pair`.

    Returns
    -------
    MutualOrthogovalReport
        Truthy when all pairs pass; otherwise carries the first failing pair
        of positions and its report.
    """
    planes = list(planes)
    if not planes:
        raise IncidenceError("at least one plane is needed")
    for a, b in itertools.combinations(range(len(planes)), 2):
        report = is_orthogoval_pair(planes[a], planes[b], get_chunks=get_chunks)
        logger.debug("planes %d and %d: %s", a, b, report)
        if not report:
            return MutualOrthogovalReport(False, (a, b), report)
    return MutualOrthogovalReport(True)


def orthogoval_except_line(P1, P2, line_idx, get_chunks="chunks"):
    """Orthogovality of two planes ignoring one line they have in common.

    Parameters
    ----------
    P1, P2 : PlaneIncidence
    line_idx : int
        A line id of `P1`; its point set must also be a line of `P2`.

    Returns
    -------
    OrthogovalReport
        The report over all line pairs except the common line with itself.
    """
    _check_compatible(P1, P2)
    if not 0 <= line_idx < P1.num_lines:
        raise IncidenceError(f"line {line_idx} is not a line of the first plane")
    try:
        other = P2.lines.index(P1.lines[line_idx])
    except ValueError:
        raise IncidenceError(
            f"line {line_idx} of the first plane is not a line of the second"
        ) from None
    total_cores = og.cpu_count()
    if get_chunks == "chunks":
        line_chunks = og.create_iterables(P1, "line", total_cores)
    else:
        line_chunks = get_chunks(list(range(P1.num_lines)))
    return _pair_report(P1, P2, line_chunks, total_cores, (line_idx, other))
