"""Steiner triple systems on small point sets and a large set of STS(9)."""

import functools
import itertools
import logging

import orthogoval as og
from orthogoval.exception import SearchExhaustedError, VerificationError
from orthogoval.finite_field import ff_make
from orthogoval.geometry import AFFINE, PlaneIncidence, build_ag
from orthogoval.utils import exact_cover

__all__ = ["steiner_triple_systems", "large_set_sts9"]

logger = logging.getLogger(__name__)


def steiner_triple_systems(v, limit=None):
    """Yield every STS(v) on points ``0 .. v-1`` as a sorted tuple of triples.

    Systems are exact covers of the point pairs by triples, in the
    deterministic order of :func:`orthogoval.utils.exact_cover`.
    """
    triples = list(itertools.combinations(range(v), 3))
    subsets = {t: list(itertools.combinations(t, 2)) for t in triples}
    pairs = list(itertools.combinations(range(v), 2))
    for cover in exact_cover(pairs, subsets, limit=limit):
        yield tuple(sorted(cover))


@functools.lru_cache(maxsize=1)
def _large_set_sts9():
    systems = list(steiner_triple_systems(9))
    logger.debug("%d labelled STS(9)", len(systems))
    triples = list(itertools.combinations(range(9), 3))
    subsets = dict(enumerate(systems))
    for cover in exact_cover(triples, subsets, limit=1):
        return tuple(systems[i] for i in sorted(cover))
    raise SearchExhaustedError("no large set of STS(9) found")


def large_set_sts9(verify=True):
    """Seven AG(2,3) structures on nine points whose lines partition all
    84 triples.

    Each plane records an isomorphism onto the standard AG(2,3), found by
    collineation search.

    Returns
    -------
    list of PlaneIncidence
    """
    spec = ff_make(3, 1)
    standard = build_ag(spec)
    planes = []
    for i, system in enumerate(_large_set_sts9()):
        plane = PlaneIncidence(AFFINE, 3, system, provenance=f"sts9-large[{i}]")
        psi = og.find_plane_isomorphism(plane, standard)
        if psi is None:
            raise VerificationError(f"STS(9) number {i} is not an affine plane")
        planes.append(
            PlaneIncidence(AFFINE, 3, system, spec, plane.provenance, isomorphism=psi)
        )
    if verify:
        report = og.is_mutually_orthogoval(planes)
        if not report:
            raise VerificationError(
                f"large set planes are not orthogoval: {report.to_dict()}"
            )
        if not og.union_design_check(planes).steiner:
            raise VerificationError("large set does not cover every triple once")
        og.check_packing_bound(planes)
    return planes
