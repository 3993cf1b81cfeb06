"""Families of translation planes ``M^i(C)`` generated by the powers of one
binary matrix acting on a spread ``C`` of F_2^{2n}."""

import itertools
import logging
from collections import Counter

import orthogoval as og
from orthogoval.exception import IncidenceError, VerificationError
from orthogoval.finite_field import ff_make
from orthogoval.geometry import line_spread, plane_from_spread, spread_coordinates

__all__ = ["matrix_power_planes", "kirkman_system"]

logger = logging.getLogger(__name__)


def _base_spread(matrix, spread):
    if spread is None:
        if matrix.dim % 2:
            raise IncidenceError(f"a {matrix.dim}x{matrix.dim} matrix has no spread")
        spread = line_spread(matrix.dim // 2)
    if matrix.dim != spread.dimension:
        raise IncidenceError(
            f"a {matrix.dim}x{matrix.dim} matrix does not act on "
            f"F_2^{spread.dimension}"
        )
    if not matrix.is_invertible:
        raise IncidenceError("the generating matrix must be invertible")
    return spread


def matrix_power_planes(matrix, s, spread=None, get_chunks="chunks"):
    """The planes ``plane_from_spread(M^i(C))`` for ``0 <= i < s``.

    When `spread` is the line spread (the default) every plane records its
    isomorphism onto the standard AG(2,2^n): the vector ``v`` goes to the
    coordinates of ``M^{-i} v``.

    Parameters
    ----------
    matrix : BinaryMatrix
        An invertible ``2n x 2n`` matrix.
    s : int
        Number of planes.
    spread : SpreadF2, optional
        Base spread, the line spread of F_2^{2n} by default.
    get_chunks : str, function (default = "chunks")
        Passed to :func:`orthogoval.is_mutually_orthogoval`.

    Returns
    -------
    (list of PlaneIncidence, MutualOrthogovalReport)
        The planes and the verdict on their mutual orthogovality. The planes
        are returned whatever the verdict.
    """
    if s < 1:
        raise IncidenceError("at least one plane is needed")
    standard = spread is None or spread == line_spread(spread.n)
    spread = _base_spread(matrix, spread)
    n = spread.n
    field = ff_make(2, n) if standard else None
    coords = spread_coordinates(n) if standard else None
    inverse = matrix.inverse()
    power = back = og.BinaryMatrix.identity(matrix.dim)
    planes = []
    for i in range(s):
        psi = coords[back.apply_all()] if standard else None
        planes.append(
            plane_from_spread(
                spread.image(power),
                provenance=f"matrix-power[{i}]",
                field=field,
                isomorphism=psi,
            )
        )
        power, back = matrix @ power, back @ inverse
    report = og.is_mutually_orthogoval(planes, get_chunks=get_chunks)
    logger.info("%d matrix-power planes, orthogoval: %s", s, bool(report))
    return planes, report


def kirkman_system(matrix, spread=None, s=7):
    """Resolvable triple system from the subgroups of the spreads ``M^i(C)``.

    For a spread of F_2^4 each member minus 0 is a triple of nonzero vectors,
    and each spread gives a parallel class of five triples on the fifteen
    nonzero vectors.

    Returns
    -------
    (list of tuple, list of list)
        The triples, with the vectors renumbered ``v -> v - 1``, and the
        parallel classes as lists of triple indices, one class per spread.

    Raises
    ------
    VerificationError
        If the triples do not form a Steiner triple system.
    """
    spread = _base_spread(matrix, spread)
    if spread.n != 2:
        raise IncidenceError("triple systems come from spreads of F_2^4")
    blocks, classes = [], []
    power = og.BinaryMatrix.identity(matrix.dim)
    for _ in range(s):
        image = spread.image(power)
        start = len(blocks)
        blocks.extend(tuple(v - 1 for v in member[1:]) for member in image.members)
        classes.append(list(range(start, len(blocks))))
        power = matrix @ power
    pairs = Counter(p for b in blocks for p in itertools.combinations(sorted(b), 2))
    if len(pairs) != 105 or max(pairs.values()) != 1:
        raise VerificationError("the spread subgroups do not form an STS(15)")
    return blocks, classes
