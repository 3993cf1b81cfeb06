"""Ternary quadratic forms, their zero sets and pencils of conics."""

from dataclasses import dataclass

import numpy as np

from orthogoval.exception import FieldError, IncidenceError
from orthogoval.geometry.plane import build_pg, is_oval, pg_points, point_index

__all__ = [
    "QuadraticForm",
    "conic_points",
    "is_nonsingular",
    "is_translation_oval",
    "is_translation_oval_direct",
    "pencil",
    "pencil_forms",
]


@dataclass(frozen=True)
class QuadraticForm:
    """``a x^2 + b y^2 + c z^2 + f yz + g xz + h xy`` over GF(q)."""

    a: int = 0
    b: int = 0
    c: int = 0
    f: int = 0
    g: int = 0
    h: int = 0

    def __post_init__(self):
        if not any(self.coefficients):
            raise FieldError("the zero form defines no conic")

    @property
    def coefficients(self):
        return (self.a, self.b, self.c, self.f, self.g, self.h)

    def evaluate(self, spec, coords):
        """Values at homogeneous triples stacked in the last axis."""
        coords = np.asarray(coords)
        M, A = spec.mul_table, spec.add_table
        x, y, z = coords[..., 0], coords[..., 1], coords[..., 2]
        terms = [
            M[self.a, M[x, x]],
            M[self.b, M[y, y]],
            M[self.c, M[z, z]],
            M[self.f, M[y, z]],
            M[self.g, M[x, z]],
            M[self.h, M[x, y]],
        ]
        total = terms[0]
        for term in terms[1:]:
            total = A[total, term]
        return total

    def partials(self, spec, coords):
        """Formal partial derivatives in x, y and z, shape ``(3, ...)``.

        ``2a`` is computed in the field, so squares drop out in characteristic 2.
        """
        coords = np.asarray(coords)
        M, A = spec.mul_table, spec.add_table
        x, y, z = coords[..., 0], coords[..., 1], coords[..., 2]
        a2, b2, c2 = (spec.add(v, v) for v in (self.a, self.b, self.c))
        dx = A[A[M[a2, x], M[self.g, z]], M[self.h, y]]
        dy = A[A[M[b2, y], M[self.f, z]], M[self.h, x]]
        dz = A[A[M[c2, z], M[self.f, y]], M[self.g, x]]
        return np.stack([dx, dy, dz])

    def combine(self, spec, alpha, other, beta):
        """The form ``alpha * self + beta * other``."""
        return QuadraticForm(
            *(
                spec.add(spec.mul(alpha, s), spec.mul(beta, o))
                for s, o in zip(self.coefficients, other.coefficients)
            )
        )

    def __str__(self):
        names = ("x^2", "y^2", "z^2", "yz", "xz", "xy")
        terms = [
            name if c == 1 else f"{c}{name}"
            for c, name in zip(self.coefficients, names)
            if c
        ]
        return " + ".join(terms)


def conic_points(form, spec):
    """Sorted indices of the points of PG(2,q) on which `form` vanishes."""
    values = form.evaluate(spec, pg_points(spec))
    return tuple(int(i) for i in np.flatnonzero(values == 0))


def is_nonsingular(form, spec):
    """True if no point of the conic zeroes all three partial derivatives.

    In characteristic 2 a form without cross terms is the square of a linear
    form (a double line) and is reported singular.
    """
    if spec.p == 2 and form.f == form.g == form.h == 0:
        return False
    pts = pg_points(spec)
    on_conic = form.evaluate(spec, pts) == 0
    critical = np.all(form.partials(spec, pts) == 0, axis=0)
    return not bool(np.any(on_conic & critical))


def _require_char2(spec):
    if spec.p != 2:
        raise FieldError("translation ovals are defined in characteristic 2")


def is_translation_oval(form, spec):
    """Conic criterion: an oval with ``h = c = 0``."""
    _require_char2(spec)
    if form.h != 0 or form.c != 0:
        return False
    return is_oval(build_pg(spec), conic_points(form, spec))


def is_translation_oval_direct(form, spec):
    """An oval closed under addition of its affine representatives."""
    _require_char2(spec)
    points = conic_points(form, spec)
    if not is_oval(build_pg(spec), points):
        return False
    q = spec.q
    affine = np.array([p for p in points if p < q * q])
    if len(affine) == 0:
        return False
    # (x, y, 1) has index x*q + y, and addition in characteristic 2 is XOR
    sums = np.bitwise_xor.outer(affine, affine)
    return bool(np.isin(sums, points).all())


def pencil_forms(spec, b, c):
    """The forms ``x^2 + yz`` and ``y^2 + b yz + c xz``."""
    return QuadraticForm(a=1, f=1), QuadraticForm(b=1, f=b, g=c)


def pencil(phi, chi, spec, check=True):
    """All members ``alpha*phi + beta*chi`` for ``(alpha:beta)`` in PG(1,q).

    Members are listed as ``(alpha:1)`` by the code of alpha, then ``(1:0)``.
    With `check`, every member must be nonsingular and two members may only
    share the point ``(0:0:1)``.
    """
    members = [phi.combine(spec, alpha, chi, 1) for alpha in range(spec.q)]
    members.append(phi)
    if check:
        origin = point_index(spec, (0, 0, 1))
        seen = {}
        for i, form in enumerate(members):
            if not is_nonsingular(form, spec):
                raise IncidenceError(f"pencil member {form} is singular")
            for p in conic_points(form, spec):
                if p != origin and p in seen:
                    raise IncidenceError(
                        f"pencil members {seen[p]} and {i} share point {p}"
                    )
                seen[p] = i
    return members
