"""Incidence structures of PG(2,q) and AG(2,q).

Points of PG(2,q) are numbered canonically: the affine point ``(x:y:1)`` has
index ``x*q + y``, ``(x:1:0)`` has index ``q**2 + x`` and ``(1:0:0)`` has
index ``q**2 + q``. A line ``ax + by + cz = 0`` is numbered like the point
``(a:b:c)``, so line 0 is the line ``z = 0``.
"""

import functools
import logging
from dataclasses import dataclass, field as dataclass_field, replace

import numpy as np

from orthogoval.exception import IncidenceError, UnsupportedOrderError

__all__ = [
    "PROJECTIVE",
    "AFFINE",
    "ProjPoint",
    "LineDual",
    "PlaneIncidence",
    "pg_points",
    "point_index",
    "normalize_points",
    "dual_line",
    "build_pg",
    "ag_from_pg",
    "build_ag",
    "is_arc",
    "is_oval",
]

logger = logging.getLogger(__name__)

PROJECTIVE = "projective"
AFFINE = "affine"

_LINE_CHUNK = 256


@functools.lru_cache(maxsize=None)
def pg_points(spec):
    """Canonical coordinate triples of all points of PG(2,q), shape (m, 3)."""
    q = spec.q
    xs, ys = np.divmod(np.arange(q * q), q)
    affine = np.stack([xs, ys, np.ones(q * q, dtype=np.int64)], axis=1)
    ones, zeros = np.ones(q, dtype=np.int64), np.zeros(q, dtype=np.int64)
    infinite = np.stack([np.arange(q), ones, zeros], axis=1)
    points = np.concatenate([affine, infinite, [[1, 0, 0]]]).astype(np.int32)
    points.setflags(write=False)
    return points


def normalize_points(spec, coords):
    """Scale homogeneous triples (last axis) to their canonical representative."""
    coords = np.asarray(coords)
    x, y, z = coords[..., 0], coords[..., 1], coords[..., 2]
    if np.any((x == 0) & (y == 0) & (z == 0)):
        raise IncidenceError("the zero vector is not a projective point")
    pivot = np.where(z != 0, z, np.where(y != 0, y, x))
    scale = spec.inv_table[pivot]
    return spec.mul_table[coords, scale[..., None]]


def point_index(spec, coords):
    """Canonical point index of homogeneous triples (last axis)."""
    norm = normalize_points(spec, coords)
    x, y, z = norm[..., 0], norm[..., 1], norm[..., 2]
    q = spec.q
    index = np.where(z == 1, x * q + y, np.where(y == 1, q * q + x, q * q + q))
    return int(index) if np.ndim(index) == 0 else index


@dataclass(frozen=True)
class ProjPoint:
    """A point ``(x:y:z)`` of PG(2,q), coordinates as field codes."""

    x: int
    y: int
    z: int

    def normalized(self, spec):
        return ProjPoint(*(int(c) for c in normalize_points(spec, self.coords)))

    def index(self, spec):
        return point_index(spec, self.coords)

    @property
    def coords(self):
        return (self.x, self.y, self.z)

    @property
    def is_affine(self):
        return self.z != 0

    @classmethod
    def from_index(cls, spec, index):
        return cls(*(int(c) for c in pg_points(spec)[index]))

    def __repr__(self):
        return f"({self.x}:{self.y}:{self.z})"


@dataclass(frozen=True)
class LineDual:
    """The line ``ax + by + cz = 0`` with its sorted incident point indices."""

    dual: tuple
    points: tuple

    def __contains__(self, index):
        return index in self.points


def dual_line(spec, dual):
    """Resolve a dual triple into a :class:`LineDual` of PG(2,q)."""
    dual = tuple(int(c) for c in normalize_points(spec, dual))
    pts = pg_points(spec)
    values = spec.dot(pts, np.asarray(dual))
    return LineDual(dual, tuple(int(i) for i in np.flatnonzero(values == 0)))


@dataclass(frozen=True)
class PlaneIncidence:
    """A projective or affine plane of order `q` on points ``0 .. m-1``.

    Parameters
    ----------
    kind : {"projective", "affine"}
    q : int
        Order of the plane.
    lines : tuple of tuple of int
        Sorted point indices of every line.
    field : FieldSpec, optional
        Coordinatising field, when the plane is known to be Desarguesian with
        a recorded isomorphism.
    provenance : str
        Construction name and parameters.
    isomorphism : tuple of int, optional
        Point map onto the standard plane ``build_pg(field)`` (or its affine
        part). ``None`` together with a field means the identity.
    completion : tuple of int, optional
        For affine planes, an isomorphism of the projective completion onto
        PG(2,q) extending `isomorphism`.
    infinite_points : tuple of int, optional
        For affine planes obtained from a projective one, the point deleted
        from each line.
    """

    kind: str
    q: int
    lines: tuple
    field: object = None
    provenance: str = ""
    isomorphism: tuple = None
    completion: tuple = None
    infinite_points: tuple = None
    _cache: dict = dataclass_field(
        default_factory=dict, init=False, repr=False, compare=False
    )

    def __post_init__(self):
        if self.kind not in (PROJECTIVE, AFFINE):
            raise IncidenceError(f"unknown plane kind {self.kind!r}")
        lines = tuple(tuple(sorted(int(p) for p in line)) for line in self.lines)
        object.__setattr__(self, "lines", lines)
        for name in ("isomorphism", "completion", "infinite_points"):
            value = getattr(self, name)
            if value is not None:
                object.__setattr__(self, name, tuple(int(v) for v in value))

    def __getstate__(self):
        state = dict(self.__dict__)
        state["_cache"] = {}
        return state

    def __setstate__(self, state):
        for key, value in state.items():
            object.__setattr__(self, key, value)

    def __repr__(self):
        return (
            f"PlaneIncidence({self.kind}, q={self.q}, lines={self.num_lines}, "
            f"provenance={self.provenance!r})"
        )

    @property
    def is_projective(self):
        return self.kind == PROJECTIVE

    @property
    def num_points(self):
        q = self.q
        return q * q + q + 1 if self.is_projective else q * q

    @property
    def num_lines(self):
        return len(self.lines)

    @property
    def line_size(self):
        return self.q + 1 if self.is_projective else self.q

    @property
    def line_array(self):
        """Lines as an ``(num_lines, line_size)`` integer array."""
        if "line_array" not in self._cache:
            arr = np.array(self.lines, dtype=np.int64).reshape(-1, self.line_size)
            arr.setflags(write=False)
            self._cache["line_array"] = arr
        return self._cache["line_array"]

    @property
    def point_lines(self):
        """Ids of the lines through each point, shape ``(num_points, q + 1)``."""
        if "point_lines" not in self._cache:
            arr = self.line_array
            flat = arr.ravel()
            line_ids = np.repeat(np.arange(arr.shape[0]), arr.shape[1])
            order = np.argsort(flat, kind="stable")
            counts = np.bincount(flat, minlength=self.num_points)
            if np.any(counts != self.q + 1):
                raise IncidenceError("points do not all lie on q + 1 lines")
            pl = line_ids[order].reshape(self.num_points, self.q + 1)
            pl.setflags(write=False)
            self._cache["point_lines"] = pl
        return self._cache["point_lines"]

    @property
    def coordinates(self):
        """Coordinate triple in the standard plane of every point, or None."""
        if self.field is None:
            return None
        pts = pg_points(self.field)
        if self.isomorphism is None:
            return pts[: self.num_points]
        return pts[np.asarray(self.isomorphism)]

    def line_through(self, a, b):
        """Id of the line through two distinct points."""
        common = np.intersect1d(self.point_lines[a], self.point_lines[b])
        if a == b or len(common) != 1:
            raise IncidenceError(f"points {a} and {b} do not span a unique line")
        return int(common[0])

    def parallel_classes(self):
        """Partition of the line ids of an affine plane into parallel classes.

        Classes are ordered by their smallest line id.
        """
        if self.is_projective:
            raise IncidenceError("projective planes have no parallel classes")
        if self.infinite_points is not None:
            groups = {}
            for line_id, point in enumerate(self.infinite_points):
                groups.setdefault(point, []).append(line_id)
            return sorted(groups.values())
        assigned = np.full(self.num_lines, -1)
        classes = []
        for line_id in range(self.num_lines):
            if assigned[line_id] >= 0:
                continue
            disjoint = np.ones(self.num_lines, dtype=bool)
            disjoint[self.point_lines[list(self.lines[line_id])].ravel()] = False
            disjoint[line_id] = True
            members = np.flatnonzero(disjoint)
            assigned[members] = len(classes)
            classes.append([int(i) for i in members])
        return classes

    def relabel(self, permutation, provenance=None):
        """The image plane under the point map ``i -> permutation[i]``.

        Line ``j`` of the result is the image of line ``j``. The recorded
        isomorphisms are composed with the inverse map.
        """
        perm = np.asarray(permutation)
        if sorted(perm.tolist()) != list(range(len(perm))):
            raise IncidenceError("relabelling map is not a permutation")
        inverse = np.argsort(perm)
        lines = tuple(tuple(sorted(perm[list(line)].tolist())) for line in self.lines)
        isomorphism = completion = None
        if self.field is not None:
            base = (
                np.arange(self.num_points)
                if self.isomorphism is None
                else np.asarray(self.isomorphism)
            )
            isomorphism = base[inverse]
        if self.completion is not None:
            full = np.arange(len(self.completion))
            full[: len(perm)] = perm
            completion = np.asarray(self.completion)[np.argsort(full)]
        return replace(
            self,
            lines=lines,
            provenance=self.provenance if provenance is None else provenance,
            isomorphism=isomorphism,
            completion=completion,
        )

    def line_sets(self):
        return frozenset(frozenset(line) for line in self.lines)

    def check_invariants(self, samples=100_000, seed=0):
        """Raise :class:`IncidenceError` unless the plane axioms hold.

        Every point pair is checked for ``q <= 9``; larger planes are checked
        on `samples` random pairs.
        """
        q, m = self.q, self.num_points
        expected_lines = m if self.is_projective else q * q + q
        if self.num_lines != expected_lines:
            raise IncidenceError(
                f"{self.kind} plane of order {q} needs {expected_lines} lines, "
                f"got {self.num_lines}"
            )
        if any(
            len(line) != self.line_size or len(set(line)) != len(line)
            for line in self.lines
        ):
            raise IncidenceError(f"lines must have {self.line_size} distinct points")
        arr = self.line_array
        if arr.min() < 0 or arr.max() >= m:
            raise IncidenceError("line refers to a point outside the plane")
        pl = self.point_lines
        if q <= 9:
            i, j = np.triu_indices(self.line_size, 1)
            codes = np.sort(arr[:, i] * m + arr[:, j], axis=None)
            if len(codes) != m * (m - 1) // 2 or np.any(codes[1:] == codes[:-1]):
                raise IncidenceError("some point pair is not on exactly one line")
        else:
            rng = np.random.default_rng(seed)
            for start in range(0, samples, 2000):
                size = min(2000, samples - start)
                a = rng.integers(0, m, size)
                b = (a + rng.integers(1, m, size)) % m
                shared = (pl[a][:, :, None] == pl[b][:, None, :]).sum(axis=(1, 2))
                if np.any(shared != 1):
                    raise IncidenceError("some point pair is not on exactly one line")
        if not self.is_projective:
            classes = self.parallel_classes()
            if len(classes) != q + 1 or any(len(c) != q for c in classes):
                raise IncidenceError("lines do not form q + 1 parallel classes")
        if self.field is not None and self.isomorphism is not None:
            if sorted(self.isomorphism) != list(range(m)):
                raise IncidenceError("recorded isomorphism is not a bijection")
        return True


def _incidence(spec, duals, chunk=_LINE_CHUNK):
    q = spec.q
    pts = pg_points(spec)
    M, A = spec.mul_table, spec.add_table
    out = []
    for start in range(0, len(duals), chunk):
        d = duals[start : start + chunk]
        values = A[
            A[M[d[:, 0:1], pts[None, :, 0]], M[d[:, 1:2], pts[None, :, 1]]],
            M[d[:, 2:3], pts[None, :, 2]],
        ]
        _, cols = np.nonzero(values == 0)
        out.append(cols.reshape(len(d), q + 1))
    return np.concatenate(out)


def build_pg(spec, max_order=64):
    """The Desarguesian projective plane PG(2,q) over `spec`.

    Parameters
    ----------
    spec : FieldSpec
    max_order : int (default = 64)
        Largest order accepted.

    Returns
    -------
    PlaneIncidence
        Points in canonical order, line ``j`` dual to point ``j``.
    """
    if spec.q > max_order:
        raise UnsupportedOrderError(
            f"PG(2,{spec.q}) exceeds the supported order {max_order}"
        )
    return _build_pg(spec)


@functools.lru_cache(maxsize=None)
def _build_pg(spec):
    logger.debug("building PG(2,%d)", spec.q)
    lines = _incidence(spec, pg_points(spec))
    return PlaneIncidence(
        PROJECTIVE, spec.q, tuple(map(tuple, lines.tolist())), spec, f"pg(q={spec.q})"
    )


def ag_from_pg(plane):
    """Delete the line through points ``q**2 .. q**2 + q`` from a projective plane.

    The deleted point of every remaining line is kept in ``infinite_points``.
    """
    if not plane.is_projective:
        raise IncidenceError("ag_from_pg needs a projective plane")
    q = plane.q
    infinite = set(range(q * q, q * q + q + 1))
    lines, deleted = [], []
    found = False
    for line in plane.lines:
        if set(line) == infinite:
            found = True
            continue
        affine = tuple(p for p in line if p < q * q)
        if len(affine) != q:
            raise IncidenceError("line meets the line at infinity more than once")
        lines.append(affine)
        deleted.append(next(p for p in line if p >= q * q))
    if not found:
        raise IncidenceError("plane has no line on points q^2 .. q^2 + q")
    isomorphism = completion = None
    if plane.isomorphism is not None:
        full = np.asarray(plane.isomorphism)
        if np.any(full[: q * q] >= q * q):
            raise IncidenceError(
                "recorded isomorphism does not fix the line at infinity"
            )
        isomorphism, completion = full[: q * q], full
    return PlaneIncidence(
        AFFINE,
        q,
        tuple(lines),
        plane.field,
        f"ag({plane.provenance})" if plane.provenance else "ag",
        isomorphism,
        completion,
        tuple(deleted),
    )


def build_ag(spec, max_order=64):
    """AG(2,q) as ``ag_from_pg(build_pg(spec))``."""
    if spec.q > max_order:
        raise UnsupportedOrderError(
            f"AG(2,{spec.q}) exceeds the supported order {max_order}"
        )
    return _build_ag(spec)


@functools.lru_cache(maxsize=None)
def _build_ag(spec):
    plane = ag_from_pg(_build_pg(spec))
    return replace(plane, provenance=f"ag(q={spec.q})")


def is_arc(plane, points):
    """True if no three of `points` are collinear in `plane`."""
    mask = np.zeros(plane.num_points, dtype=bool)
    mask[np.asarray(list(points), dtype=np.int64)] = True
    return bool(mask[plane.line_array].sum(axis=1).max() <= 2)


def is_oval(plane, points):
    """True for an arc of ``q + 1`` points."""
    points = set(points)
    return len(points) == plane.q + 1 and is_arc(plane, points)
