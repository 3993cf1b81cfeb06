"""Four mutually orthogoval projective planes of order 3 developed from planar
difference sets modulo 13, coordinatised through a Singer cycle."""

import logging

import numpy as np

import orthogoval as og
from orthogoval.exception import VerificationError
from orthogoval.finite_field import ff_make
from orthogoval.geometry import PROJECTIVE, PlaneIncidence, build_pg, point_index

__all__ = [
    "DS13_BASE_BLOCKS",
    "DS13_MULTIPLIERS",
    "develop",
    "is_planar_difference_set",
    "singer_points",
    "ds_quadruple",
]

logger = logging.getLogger(__name__)

DS13_BASE_BLOCKS = ((0, 1, 3, 9), (0, 1, 5, 11), (0, 1, 4, 6), (0, 1, 8, 10))
# block i is a translate of DS13_MULTIPLIERS[i] * (0, 1, 3, 9)
DS13_MULTIPLIERS = (1, -1, 7, 2)


def develop(base, v):
    """All translates ``base + x`` modulo `v`, for ``x = 0 .. v-1``."""
    base = np.asarray(base)
    return tuple(tuple(sorted(((base + x) % v).tolist())) for x in range(v))


def is_planar_difference_set(base, v):
    """True if every nonzero residue modulo `v` is one difference of `base`."""
    base = np.asarray(base)
    diffs = (base[:, None] - base[None, :]) % v
    counts = np.bincount(diffs[~np.eye(len(base), dtype=bool)], minlength=v)
    return bool(counts[0] == 0 and np.all(counts[1:] == 1))


def singer_points(spec):
    """Point index in PG(2,q) of ``a^j`` for ``j = 0 .. q^2+q``, ``a`` primitive
    in GF(q^3)."""
    GF = ff_make(spec.p, 3 * spec.n).galois_field
    m = spec.q**2 + spec.q + 1
    powers = GF.primitive_element ** np.arange(m)
    # vector() lists coefficients highest degree first
    coords = powers.vector().view(np.ndarray)[:, ::-1]
    return np.asarray(point_index(spec, coords))


def _singer_isomorphism(spec, base, multiplier, v):
    """Map ``j -> a^(t^-1 (m^-1 j - c))`` sending ``dev(m*D)`` onto lines, when
    ``D = t*L + c`` for the Singer line set ``L``."""
    points = singer_points(spec)
    standard = build_pg(spec)
    line0 = set(standard.lines[0])
    singer_line = [j for j in range(v) if points[j] in line0]
    base_set = set(base)
    m_inv = pow(multiplier, -1, v)
    for t in range(1, v):
        for c in range(v):
            if {(t * s + c) % v for s in singer_line} == base_set:
                t_inv = pow(t, -1, v)
                exps = (t_inv * ((m_inv * np.arange(v)) - c)) % v
                return tuple(points[exps].tolist())
    return None


def ds_quadruple(verify=True):
    """The developments of the four base blocks modulo 13.

    Each plane records an isomorphism onto the standard PG(2,3); the
    Singer-cycle coordinatisation is tried first and a collineation search is
    the fallback.

    Returns
    -------
    list of PlaneIncidence
    """
    spec = ff_make(3, 1)
    v = 13
    base = DS13_BASE_BLOCKS[0]
    standard = build_pg(spec)
    planes = []
    for block, multiplier in zip(DS13_BASE_BLOCKS, DS13_MULTIPLIERS):
        if not is_planar_difference_set(block, v):
            raise VerificationError(f"{block} is not a planar difference set")
        plane = PlaneIncidence(
            PROJECTIVE, 3, develop(block, v), provenance=f"ds13{block}"
        )
        psi = _singer_isomorphism(spec, base, multiplier % v, v)
        if psi is None or not og.is_isomorphism(plane, standard, psi):
            logger.info("Singer coordinates failed for %s, searching", block)
            psi = og.find_plane_isomorphism(plane, standard)
            if psi is None:
                raise VerificationError(f"no coordinatisation for {block}")
        planes.append(
            PlaneIncidence(
                PROJECTIVE, 3, plane.lines, spec, plane.provenance, isomorphism=psi
            )
        )
    if verify:
        report = og.is_mutually_orthogoval(planes)
        if not report:
            raise VerificationError(
                f"ds13 planes are not orthogoval: {report.to_dict()}"
            )
        og.check_packing_bound(planes)
    return planes
