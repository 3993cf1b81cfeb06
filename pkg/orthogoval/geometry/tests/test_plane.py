import pickle

import numpy as np
import pytest

import orthogoval as og

FIELDS = {2: (2, 1), 3: (3, 1), 4: (2, 2), 5: (5, 1), 7: (7, 1), 8: (2, 3), 9: (3, 2)}


def _spec(q):
    return og.ff_make(*FIELDS[q])


def _intersection_counts(plane):
    inc = np.zeros((plane.num_lines, plane.num_points), dtype=np.int64)
    np.put_along_axis(inc, plane.line_array, 1, axis=1)
    return inc @ inc.T


def test_fano_plane():
    pg = og.build_pg(_spec(2))
    assert pg.num_points == 7
    assert pg.num_lines == 7
    assert all(len(line) == 3 for line in pg.lines)


def test_pg4_lines_meet_once():
    pg = og.build_pg(_spec(4))
    assert (pg.num_points, pg.num_lines, pg.line_size) == (21, 21, 5)
    counts = _intersection_counts(pg)
    off = counts[~np.eye(21, dtype=bool)]
    assert np.all(off == 1)


def test_pg3_point_degree():
    pg = og.build_pg(_spec(3))
    assert pg.point_lines.shape == (13, 4)


def test_canonical_order():
    spec = _spec(3)
    pts = og.pg_points(spec)
    assert tuple(pts[0]) == (0, 0, 1)
    assert tuple(pts[5]) == (1, 2, 1)
    assert tuple(pts[9]) == (0, 1, 0)
    assert tuple(pts[12]) == (1, 0, 0)
    pg = og.build_pg(spec)
    # line 0 is z = 0
    assert pg.lines[0] == (9, 10, 11, 12)


def test_point_index_normalizes():
    spec = _spec(5)
    assert og.point_index(spec, (2, 4, 2)) == 7
    assert og.point_index(spec, (3, 3, 0)) == 26
    assert og.ProjPoint(0, 0, 4).normalized(spec) == og.ProjPoint(0, 0, 1)
    with pytest.raises(og.IncidenceError):
        og.point_index(spec, (0, 0, 0))


def test_dual_line():
    spec = _spec(2)
    line = og.dual_line(spec, (0, 0, 1))
    assert line.points == (4, 5, 6)
    assert 4 in line


@pytest.mark.parametrize("q", sorted(FIELDS))
def test_invariants(q):
    pg = og.build_pg(_spec(q))
    assert pg.check_invariants()
    ag = og.ag_from_pg(pg)
    assert ag.check_invariants()


def test_sampled_invariants():
    pg = og.build_pg(og.ff_make(2, 4))
    assert pg.check_invariants(samples=4000)


def test_unsupported_order():
    with pytest.raises(og.UnsupportedOrderError):
        og.build_pg(og.ff_make(2, 7))


def test_ag4_parameters():
    ag = og.build_ag(_spec(4))
    assert (ag.num_points, ag.num_lines, ag.line_size) == (16, 20, 4)
    classes = ag.parallel_classes()
    assert len(classes) == 5
    assert all(len(c) == 4 for c in classes)


def test_ag3_parameters():
    ag = og.build_ag(_spec(3))
    assert (ag.num_points, ag.num_lines) == (9, 12)


@pytest.mark.parametrize("q", [3, 4, 5])
def test_parallel_iff_same_infinite_point(q):
    ag = og.build_ag(_spec(q))
    counts = _intersection_counts(ag)
    inf = np.asarray(ag.infinite_points)
    same = inf[:, None] == inf[None, :]
    assert np.array_equal(same, (counts == 0) | np.eye(ag.num_lines, dtype=bool))
    bare = og.PlaneIncidence(og.AFFINE, q, ag.lines)
    assert bare.parallel_classes() == ag.parallel_classes()


def test_relabel_keeps_coordinates():
    ag = og.build_ag(_spec(4))
    rng = np.random.default_rng(3)
    perm = rng.permutation(ag.num_points)
    image = ag.relabel(perm)
    assert image.check_invariants()
    assert np.array_equal(image.coordinates[perm], ag.coordinates)
    back = image.relabel(np.argsort(perm))
    assert back.line_sets() == ag.line_sets()


def test_relabel_rejects_non_permutation():
    ag = og.build_ag(_spec(3))
    with pytest.raises(og.IncidenceError):
        ag.relabel([0] * 9)


def test_broken_planes():
    pg = og.build_pg(_spec(3))
    with pytest.raises(og.IncidenceError):
        og.PlaneIncidence(og.PROJECTIVE, 3, pg.lines[:-1]).check_invariants()
    lines = list(pg.lines)
    lines[1] = lines[2]
    with pytest.raises(og.IncidenceError):
        og.PlaneIncidence(og.PROJECTIVE, 3, lines).check_invariants()
    with pytest.raises(og.IncidenceError):
        og.ag_from_pg(og.build_ag(_spec(3)))


def test_pickle_round_trip():
    pg = og.build_pg(_spec(4))
    pg.point_lines
    again = pickle.loads(pickle.dumps(pg))
    assert again == pg
    assert np.array_equal(again.point_lines, pg.point_lines)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8])
def test_lines_are_not_ovals(q):
    pg = og.build_pg(_spec(q))
    assert not any(og.is_oval(pg, line) for line in pg.lines[:5])


@pytest.mark.parametrize("q", [2, 3, 4])
def test_nonsingular_conics_are_ovals(q):
    spec = _spec(q)
    pg = og.build_pg(spec)
    for coefficients in np.ndindex(*(q,) * 6):
        if not any(coefficients):
            continue
        form = og.QuadraticForm(*(int(c) for c in coefficients))
        if og.is_nonsingular(form, spec):
            assert og.is_oval(pg, og.conic_points(form, spec))


@pytest.mark.parametrize("q", [5, 7, 8])
def test_sampled_nonsingular_conics_are_ovals(q):
    spec = _spec(q)
    pg = og.build_pg(spec)
    rng = np.random.default_rng(q)
    checked = 0
    while checked < 50:
        coefficients = rng.integers(0, q, 6)
        if not coefficients.any():
            continue
        form = og.QuadraticForm(*(int(c) for c in coefficients))
        if og.is_nonsingular(form, spec):
            assert og.is_oval(pg, og.conic_points(form, spec))
            checked += 1
