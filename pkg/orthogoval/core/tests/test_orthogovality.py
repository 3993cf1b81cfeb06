import itertools

import numpy as np
import pytest

import orthogoval as og


def _all_fano_planes():
    fano = og.build_pg(og.ff_make(2, 1))
    seen = {}
    for perm in itertools.permutations(range(7)):
        plane = og.PlaneIncidence(og.PROJECTIVE, 2, fano.relabel(perm).lines)
        seen.setdefault(plane.line_sets(), plane)
    return list(seen.values())


def test_self_pair_fails():
    pg = og.build_pg(og.ff_make(3, 1))
    report = og.is_orthogoval_pair(pg, pg)
    assert not report
    assert report.max_intersection == 4
    i, j, points = report.witness
    assert (i, j) == (0, 0)
    assert points == pg.lines[0]


def test_mismatched_planes():
    with pytest.raises(og.IncidenceError):
        og.is_orthogoval_pair(
            og.build_pg(og.ff_make(3, 1)), og.build_ag(og.ff_make(3, 1))
        )
    with pytest.raises(og.IncidenceError):
        og.is_orthogoval_pair(
            og.build_pg(og.ff_make(2, 1)), og.build_pg(og.ff_make(3, 1))
        )


def test_fano_orthogoval_iff_disjoint():
    planes = _all_fano_planes()
    assert len(planes) == 30
    first = planes[0]
    disjoint = 0
    for other in planes:
        report = og.is_orthogoval_pair(first, other)
        assert bool(report) == first.line_sets().isdisjoint(other.line_sets())
        disjoint += bool(report)
    assert disjoint == 8


def test_pair_is_symmetric():
    pg = og.build_pg(og.ff_make(2, 2))
    rng = np.random.default_rng(11)
    for _ in range(5):
        other = pg.relabel(rng.permutation(pg.num_points))
        forward = og.is_orthogoval_pair(pg, other)
        backward = og.is_orthogoval_pair(other, pg)
        assert bool(forward) == bool(backward)
        assert forward.max_intersection == backward.max_intersection


def test_trivial_affine_order_two():
    ag = og.build_ag(og.ff_make(2, 1))
    assert og.is_mutually_orthogoval([ag, ag, ag])


def test_duplicate_plane_fails_mutual_check():
    ag = og.build_ag(og.ff_make(3, 1))
    report = og.is_mutually_orthogoval([ag, ag])
    assert not report
    assert report.failing_pair == (0, 1)
    assert og.is_mutually_orthogoval([ag])


def test_except_line_on_identical_planes():
    pg = og.build_pg(og.ff_make(2, 2))
    report = og.orthogoval_except_line(pg, pg, 0)
    assert not report
    assert report.witness[:2] == (1, 1)


def test_except_line_requires_common_line():
    planes = _all_fano_planes()
    first = planes[0]
    other = next(p for p in planes if first.line_sets().isdisjoint(p.line_sets()))
    with pytest.raises(og.IncidenceError):
        og.orthogoval_except_line(first, other, 0)


def test_except_line_ignores_only_that_pair():
    planes = _all_fano_planes()
    first = planes[0]
    for other in planes:
        common = first.line_sets() & other.line_sets()
        if len(common) == 1:
            (line,) = common
            idx = first.lines.index(tuple(sorted(line)))
            assert not og.is_orthogoval_pair(first, other)
            assert og.orthogoval_except_line(first, other, idx)
            break
    else:
        pytest.fail("no Fano pair sharing exactly one line")


def test_report_dict():
    pg = og.build_pg(og.ff_make(2, 1))
    d = og.is_orthogoval_pair(pg, pg).to_dict()
    assert d["orthogoval"] is False
    assert d["max_intersection"] == 3
    assert d["witness"]["lines"] == [0, 0]
