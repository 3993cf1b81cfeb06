"""Block designs formed by the lines of orthogoval planes."""

import itertools
import logging
from dataclasses import dataclass
from math import comb

import numpy as np

from orthogoval.exception import IncidenceError
from orthogoval.utils import exact_cover

__all__ = [
    "UnionDesignReport",
    "DerivedDesign",
    "union_design_check",
    "triple_rank",
    "derived_design",
    "kirkman_classes",
    "parallel_class_candidates",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class UnionDesignReport:
    """3-subset coverage of the multiset union of all lines."""

    points: int
    blocks: int
    max_multiplicity: int
    uncovered: int

    @property
    def steiner(self):
        return self.max_multiplicity == 1 and self.uncovered == 0

    @property
    def is_packing(self):
        return self.max_multiplicity <= 1

    def to_dict(self):
        return {
            "points": self.points,
            "blocks": self.blocks,
            "max_multiplicity": self.max_multiplicity,
            "uncovered": self.uncovered,
            "steiner": self.steiner,
        }


def triple_rank(a, b, c):
    """Colexicographic rank of ``a < b < c`` among the 3-subsets of 0..m-1."""
    return comb(c, 3) + comb(b, 2) + a


def union_design_check(planes):
    """Census of every point triple against the lines of all `planes`.

    Multiplicities are stored in a flat array indexed by :func:`triple_rank`.
    """
    planes = list(planes)
    if not planes:
        raise IncidenceError("at least one plane is needed")
    m = planes[0].num_points
    if any(p.num_points != m for p in planes):
        raise IncidenceError("planes must share a point set")
    blocks = np.concatenate([p.line_array for p in planes])
    k = blocks.shape[1]
    counts = np.zeros(comb(m, 3), dtype=np.int64)
    if k >= 3:
        idx = np.array(list(itertools.combinations(range(k), 3)))
        a, b, c = (blocks[:, idx[:, i]].ravel() for i in range(3))
        ranks = c * (c - 1) * (c - 2) // 6 + b * (b - 1) // 2 + a
        counts = np.bincount(ranks, minlength=comb(m, 3))
    return UnionDesignReport(
        points=m,
        blocks=len(blocks),
        max_multiplicity=int(counts.max()) if len(counts) else 0,
        uncovered=int(np.count_nonzero(counts == 0)),
    )


def parallel_class_candidates(blocks, points):
    """All sets of `blocks` (by index) partitioning `points`."""
    subsets = {i: block for i, block in enumerate(blocks)}
    return [tuple(sorted(cover)) for cover in exact_cover(points, subsets)]


def kirkman_classes(blocks, points=None):
    """A resolution of `blocks` into parallel classes, or None.

    Parallel classes are enumerated first, then an exact cover of the blocks
    by classes is sought. The first resolution in deterministic order is
    returned as a list of lists of block indices.
    """
    blocks = [tuple(sorted(b)) for b in blocks]
    if points is None:
        points = sorted({p for b in blocks for p in b})
    classes = parallel_class_candidates(blocks, points)
    logger.debug("%d parallel classes among %d blocks", len(classes), len(blocks))
    subsets = {cls: cls for cls in classes}
    for cover in exact_cover(range(len(blocks)), subsets, limit=1):
        return [list(cls) for cls in sorted(cover)]
    return None


@dataclass(frozen=True)
class DerivedDesign:
    point: int
    blocks: tuple
    parallel_classes: list = None

    @property
    def resolvable(self):
        return self.parallel_classes is not None

    @property
    def points(self):
        return sorted({p for b in self.blocks for p in b})

    def pair_coverage(self):
        """Number of blocks through each pair of points, as a dict."""
        cover = {}
        for block in self.blocks:
            for pair in itertools.combinations(block, 2):
                cover[pair] = cover.get(pair, 0) + 1
        return cover


def derived_design(blocks, point):
    """Blocks through `point` with `point` removed, and their resolvability.

    Parameters
    ----------
    blocks : iterable of sets
    point : int

    Returns
    -------
    DerivedDesign
    """
    derived = tuple(
        tuple(sorted(p for p in block if p != point))
        for block in blocks
        if point in block
    )
    if not derived:
        raise IncidenceError(f"point {point} lies on no block")
    classes = kirkman_classes(derived)
    return DerivedDesign(point, derived, classes)
