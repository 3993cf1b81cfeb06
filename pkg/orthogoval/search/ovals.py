"""Projective planes whose lines are ovals of PG(2,q), for small q.

Two ovals are adjacent in the oval graph when they share at most one point;
the lines of a plane form a clique of size ``q^2 + q + 1`` in that graph.
Cliques of that size are found as exact covers of the point pairs by ovals.
"""

import itertools
import logging
from dataclasses import dataclass

import orthogoval as og
from orthogoval.exception import IncidenceError, UnsupportedOrderError
from orthogoval.finite_field import ff_from_order
from orthogoval.geometry import (
    PROJECTIVE,
    PlaneIncidence,
    QuadraticForm,
    build_pg,
    conic_points,
    is_nonsingular,
)
from orthogoval.utils import exact_cover

__all__ = [
    "OvalSearchReport",
    "enumerate_ovals",
    "conic_ovals",
    "all_oval_planes",
    "oval_planes_search",
]

logger = logging.getLogger(__name__)

OVAL_SEARCH_ORDERS = (2, 3, 4, 5)


def enumerate_ovals(plane):
    """Every ``(q+1)``-arc of a projective plane, as sorted tuples.

    Arcs are grown in increasing point order; a point is blocked once it lies
    on a line through two chosen points.
    """
    if not plane.is_projective:
        raise IncidenceError("ovals are enumerated in projective planes")
    m, size = plane.num_points, plane.q + 1
    line_bits = [sum(1 << p for p in line) for line in plane.lines]
    joining = {}
    for lid, line in enumerate(plane.lines):
        for a, b in itertools.combinations(line, 2):
            joining[a, b] = line_bits[lid]

    ovals = []

    def grow(arc, blocked, start):
        if len(arc) == size:
            ovals.append(tuple(arc))
            return
        for p in range(start, m - (size - len(arc)) + 1):
            if blocked >> p & 1:
                continue
            extra = 0
            for a in arc:
                extra |= joining[a, p]
            grow(arc + [p], blocked | extra | (1 << p), p + 1)

    grow([], 0, 0)
    logger.debug("%d ovals in a plane of order %d", len(ovals), plane.q)
    return ovals


def conic_ovals(spec):
    """The point sets of the nonsingular conics of PG(2,q), q odd.

    Forms are taken with their first nonzero coefficient equal to 1.
    """
    seen = set()
    for coeffs in itertools.product(range(spec.q), repeat=6):
        nonzero = [c for c in coeffs if c]
        if not nonzero or nonzero[0] != 1:
            continue
        form = QuadraticForm(*coeffs)
        if is_nonsingular(form, spec):
            seen.add(conic_points(form, spec))
    return sorted(seen)


def all_oval_planes(plane, ovals=None, limit=None):
    """Yield the planes on the points of `plane` whose lines are its ovals.

    Parameters
    ----------
    plane : PlaneIncidence
        A projective plane.
    ovals : list of tuple, optional
        The ovals to use, :func:`enumerate_ovals` by default.
    limit : int, optional
        Stop after this many planes.
    """
    if ovals is None:
        ovals = enumerate_ovals(plane)
    pairs = list(itertools.combinations(range(plane.num_points), 2))
    subsets = {i: list(itertools.combinations(o, 2)) for i, o in enumerate(ovals)}
    for k, cover in enumerate(exact_cover(pairs, subsets, limit=limit)):
        yield PlaneIncidence(
            PROJECTIVE,
            plane.q,
            tuple(ovals[i] for i in sorted(cover)),
            provenance=f"oval-plane[{k}]",
        )


@dataclass(frozen=True)
class OvalSearchReport:
    """Summary of an oval-plane search in PG(2,q).

    ``max_set_size`` counts PG(2,q) itself, which is orthogoval to every
    oval-plane. It and ``orthogoval_pairs`` are None in enumerate mode.
    """

    q: int
    ovals: int
    planes: int
    orthogoval_pairs: int = None
    max_set_size: int = None
    clique: tuple = None

    def to_dict(self):
        return {
            "q": self.q,
            "ovals": self.ovals,
            "planes": self.planes,
            "orthogoval_pairs": self.orthogoval_pairs,
            "max_set_size": self.max_set_size,
        }


def oval_planes_search(spec, mode="pair-test", limit=None, get_chunks="chunks"):
    """Enumerate the oval-planes of PG(2,q) and, in ``"pair-test"`` mode,
    find the largest mutually orthogoval set among them.

    Parameters
    ----------
    spec : FieldSpec or int
        The field, or its order.
    mode : {"enumerate", "pair-test"}
    limit : int, optional
        Cap on the number of oval-planes enumerated.
    get_chunks : str, function (default = "chunks")
        Passed to :func:`build_compat_graph`.

    Returns
    -------
    OvalSearchReport
    """
    if isinstance(spec, int):
        spec = ff_from_order(spec)
    if spec.q not in OVAL_SEARCH_ORDERS:
        raise UnsupportedOrderError(
            f"oval searches run for q in {OVAL_SEARCH_ORDERS}, got {spec.q}"
        )
    if mode not in ("enumerate", "pair-test"):
        raise IncidenceError(f"unknown oval search mode {mode!r}")
    plane = build_pg(spec)
    if spec.q == 5:
        logger.info("q=5 oval search is long-running")
        ovals = conic_ovals(spec)
    else:
        ovals = enumerate_ovals(plane)
    planes = list(all_oval_planes(plane, ovals, limit=limit))
    logger.info("%d ovals, %d oval-planes for q=%d", len(ovals), len(planes), spec.q)
    if mode == "enumerate":
        return OvalSearchReport(spec.q, len(ovals), len(planes))
    if not planes:
        return OvalSearchReport(spec.q, len(ovals), 0, 0, 1, ())
    graph = og.build_compat_graph(planes, get_chunks=get_chunks)
    clique = og.max_clique(graph)
    return OvalSearchReport(
        spec.q,
        len(ovals),
        len(planes),
        graph.graph.number_of_edges(),
        len(clique) + 1,
        tuple(clique),
    )

