"""Orthogoval pairs of AG(2,2^n) from a trivially intersecting pencil of conics."""

import logging
from dataclasses import dataclass, replace

import numpy as np

import orthogoval as og
from orthogoval.exception import UnsupportedOrderError, VerificationError
from orthogoval.finite_field import ff_make, find_irreducible_cubic_depressed
from orthogoval.geometry import (
    QuadraticForm,
    ag_from_pg,
    build_pg,
    pencil,
    pencil_forms,
    pg_points,
    point_index,
)

__all__ = ["PencilContext", "pencil_context", "pencil_pair"]

logger = logging.getLogger(__name__)

MAX_PENCIL_N = 6


@dataclass(frozen=True)
class PencilContext:
    """The map ``f = (phi : chi : psi)`` with ``psi = z^2``, tabulated on PG(2,q).

    ``permutation[i]`` is the index of ``f`` at point ``i`` and ``inverse`` its
    inverse.
    """

    spec: object
    phi: QuadraticForm
    chi: QuadraticForm
    psi: QuadraticForm
    permutation: tuple
    inverse: tuple

    def completions(self):
        """The standard PG(2,q) and its image under ``f``."""
        pg = build_pg(self.spec)
        return pg, pg.relabel(self.permutation, provenance="pencil-completion")


def pencil_context(spec, b=None, c=None):
    """Tabulate ``f`` for the pencil spanned by ``x^2 + yz`` and
    ``y^2 + b yz + c xz``.

    When `b` and `c` are omitted the first irreducible ``x^3 + bx + c`` is used.
    """
    if b is None or c is None:
        b, c = find_irreducible_cubic_depressed(spec)
    phi, chi = pencil_forms(spec, b, c)
    pencil(phi, chi, spec)
    psi = QuadraticForm(c=1)
    pts = pg_points(spec)
    values = np.stack(
        [phi.evaluate(spec, pts), chi.evaluate(spec, pts), psi.evaluate(spec, pts)],
        axis=1,
    )
    perm = np.asarray(point_index(spec, values))
    if sorted(perm.tolist()) != list(range(len(pts))):
        raise VerificationError("the pencil map is not a bijection")
    inverse = np.argsort(perm)
    logger.debug("pencil map over GF(%d) with b=%d, c=%d", spec.q, b, c)
    return PencilContext(
        spec, phi, chi, psi, tuple(perm.tolist()), tuple(inverse.tolist())
    )


def pencil_pair(n, verify=True):
    """AG(2,2^n) and its image under the pencil map.

    Parameters
    ----------
    n : int
        ``1 <= n <= 6``.
    verify : bool (default = True)
        Check that the affine planes are orthogoval and that their projective
        completions are orthogoval except for the line ``z = 0``.

    Returns
    -------
    (PlaneIncidence, PlaneIncidence, PencilContext)
        The second plane records ``f^{-1}`` as its isomorphism and as its
        projective completion.
    """
    if not 1 <= n <= MAX_PENCIL_N:
        raise UnsupportedOrderError(
            f"pencil pairs are built for 1 <= n <= {MAX_PENCIL_N}"
        )
    spec = ff_make(2, n)
    ctx = pencil_context(spec)
    pg, image = ctx.completions()
    first = og.build_ag(spec)
    second = replace(ag_from_pg(image), provenance=f"pencil(n={n})")
    if verify:
        report = og.is_orthogoval_pair(first, second)
        if not report:
            raise VerificationError(f"pencil planes are not orthogoval: {report}")
        if not og.orthogoval_except_line(pg, image, 0):
            raise VerificationError("pencil completions meet outside the line z = 0")
        og.check_packing_bound([first, second])
    return first, second, ctx
