import numpy as np
import pytest

import orthogoval as og


@pytest.mark.parametrize("block", og.DS13_BASE_BLOCKS)
def test_base_blocks_are_planar(block):
    assert og.is_planar_difference_set(block, 13)
    blocks = og.develop(block, 13)
    assert len(set(blocks)) == 13
    assert all(len(b) == 4 for b in blocks)


def test_not_a_difference_set():
    assert not og.is_planar_difference_set((0, 1, 2, 3), 13)


def test_singer_points_are_a_permutation():
    points = og.singer_points(og.ff_make(3, 1))
    assert sorted(points.tolist()) == list(range(13))


def test_ds_quadruple():
    planes = og.ds_quadruple()
    assert len(planes) == 4
    assert og.is_mutually_orthogoval(planes)
    standard = og.build_pg(og.ff_make(3, 1))
    for plane in planes:
        assert og.is_isomorphism(plane, standard, plane.isomorphism)
    report = og.union_design_check(planes)
    assert report.blocks == 52
    assert report.max_multiplicity == 1


def test_ds_quadruple_contains_block():
    planes = og.ds_quadruple()
    assert (0, 1, 3, 9) in planes[0].lines
    assert (0, 1, 5, 11) in planes[1].lines
    assert np.all(np.asarray(planes[0].coordinates) < 3)
