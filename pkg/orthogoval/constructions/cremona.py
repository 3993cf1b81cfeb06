"""Pairs of Desarguesian orthogoval projective planes from a conjugated
Cremona transformation.

The quadratic involution ``(x:y:z) -> (yz:xz:xy)`` is conjugated by a
collineation of PG(2,q^3) that sends the fundamental triangle to a triangle of
conjugate points ``(w:w^q:w^{q^2})``, ``(w^q:w^{q^2}:w)`` and
``(w^{q^2}:w:w^q)``. The conjugated map preserves PG(2,q) and sends its lines
to ovals.
"""

import logging
from dataclasses import dataclass

import numpy as np

import orthogoval as og
from orthogoval.exception import UndefinedPointError, VerificationError
from orthogoval.finite_field import cubic_extension
from orthogoval.geometry import ProjPoint, build_pg, pg_points, point_index

__all__ = [
    "CremonaContext",
    "cremona_point",
    "omega_determinant",
    "omega_polynomial",
    "find_omega",
    "build_cremona_context",
    "cremona_pair",
]

logger = logging.getLogger(__name__)


def cremona_point(spec, point):
    """Image ``(yz:xz:xy)`` of a point of PG(2,q), normalized.

    Raises
    ------
    UndefinedPointError
        At the fundamental points ``(1:0:0)``, ``(0:1:0)`` and ``(0:0:1)``.
    """
    x, y, z = point.coords if isinstance(point, ProjPoint) else point
    image = (spec.mul(y, z), spec.mul(x, z), spec.mul(x, y))
    if not any(image):
        raise UndefinedPointError(
            f"the Cremona map is undefined at {ProjPoint(x, y, z)!r}"
        )
    return ProjPoint(*image).normalized(spec)


def _conjugates(ext, w):
    return w, ext.frobenius(w, 1), ext.frobenius(w, 2)


def _conjugate_matrix(ext, w):
    a, b, c = _conjugates(ext, w)
    # columns are the three conjugate points
    return np.array([[a, b, c], [b, c, a], [c, a, b]], dtype=np.int64)


def omega_determinant(ext, w):
    """Determinant of the three conjugate points of `w`."""
    return ext.det3(_conjugate_matrix(ext, w))


def omega_polynomial(ext, w):
    """``w^{3q^2} - 3 w^{q^2+q+1} + w^{3q} + w^3`` in GF(q^3).

    This is the negative of :func:`omega_determinant`.
    """
    q = ext.q
    three = ext.add(ext.add(1, 1), 1)
    terms = [
        ext.pow(w, 3 * q * q),
        ext.neg(ext.mul(three, ext.pow(w, q * q + q + 1))),
        ext.pow(w, 3 * q),
        ext.pow(w, 3),
    ]
    total = 0
    for term in terms:
        total = ext.add(total, term)
    return total


def find_omega(ext):
    """First element code outside GF(q) whose conjugate points are not collinear."""
    for w in range(ext.q, ext.order):
        if omega_determinant(ext, w) != 0:
            logger.debug("omega = %d in GF(%d)", w, ext.order)
            return w
    raise VerificationError(f"no admissible omega in GF({ext.order})")


@dataclass(frozen=True)
class CremonaContext:
    """Data of the conjugated Cremona map on PG(2,q).

    ``permutation[i]`` is the index of the image of point ``i``.
    """

    ext: object
    omega: int
    sigma: np.ndarray
    sigma_inv: np.ndarray
    permutation: tuple

    @property
    def spec(self):
        return self.ext.base


def _normalize_ext(ext, coords):
    x, y, z = coords[..., 0], coords[..., 1], coords[..., 2]
    pivot = np.where(z != 0, z, np.where(y != 0, y, x))
    return np.asarray(ext.mul(coords, ext.inv(pivot)[..., None]))


def build_cremona_context(ext):
    """Solve for the frame collineation and tabulate the conjugated map.

    Parameters
    ----------
    ext : ExtFieldSpec
        GF(q^3) over GF(q).

    Returns
    -------
    CremonaContext

    Raises
    ------
    VerificationError
        If the tabulated map leaves PG(2,q) or is not an involution.
    """
    spec = ext.base
    w = find_omega(ext)
    frame = _conjugate_matrix(ext, w)
    scale = ext.matvec(ext.inverse3(frame), np.ones(3, dtype=np.int64))
    sigma = np.asarray(ext.mul(frame, scale[None, :]))
    sigma_inv = ext.inverse3(sigma)

    pts = pg_points(spec).astype(np.int64)
    u = ext.matvec(sigma_inv, pts)
    x, y, z = u[:, 0], u[:, 1], u[:, 2]
    cr = np.stack([ext.mul(y, z), ext.mul(x, z), ext.mul(x, y)], axis=1)
    if np.any(np.all(cr == 0, axis=1)):
        raise VerificationError("a rational point maps to a fundamental point")
    images = _normalize_ext(ext, ext.matvec(sigma, cr))
    if np.any(images >= ext.q):
        raise VerificationError("the conjugated Cremona map leaves PG(2,q)")
    perm = np.asarray(point_index(spec, images))
    if sorted(perm.tolist()) != list(range(len(pts))):
        raise VerificationError("the conjugated Cremona map is not a bijection")
    if np.any(perm[perm] != np.arange(len(pts))):
        raise VerificationError("the conjugated Cremona map is not an involution")
    return CremonaContext(ext, w, sigma, sigma_inv, tuple(perm.tolist()))


def cremona_pair(spec, max_order=64, verify=True):
    """Two orthogoval copies of PG(2,q): the standard plane and its image
    under the conjugated Cremona map.

    Parameters
    ----------
    spec : FieldSpec
    max_order : int (default = 64)
    verify : bool (default = True)
        Check orthogovality and the packing bound before returning.

    Returns
    -------
    (PlaneIncidence, PlaneIncidence, tuple)
        The two planes and the point permutation carrying the first onto the
        second.
    """
    first = build_pg(spec, max_order=max_order)
    ctx = build_cremona_context(cubic_extension(spec))
    second = first.relabel(ctx.permutation, provenance=f"cremona(q={spec.q})")
    if verify:
        report = og.is_orthogoval_pair(first, second)
        if not report:
            raise VerificationError(f"Cremona planes are not orthogoval: {report}")
        og.check_packing_bound([first, second])
    return first, second, ctx.permutation
