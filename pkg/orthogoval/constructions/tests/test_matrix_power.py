import pytest

import orthogoval as og


def test_m4_family_is_a_quadruple_system():
    planes, report = og.matrix_power_planes(og.M4, 7)
    assert len(planes) == 7
    assert report
    union = og.union_design_check(planes)
    assert union.blocks == 140
    assert union.steiner
    blocks = [line for plane in planes for line in plane.lines]
    derived = og.derived_design(blocks, 0)
    assert len(derived.blocks) == 35
    assert derived.resolvable
    assert len(derived.parallel_classes) == 7


def test_m6_family():
    planes, report = og.matrix_power_planes(og.M6, 7)
    assert report
    assert all(p.q == 8 and not p.is_projective for p in planes)
    assert planes[3].provenance == "matrix-power[3]"


def test_identity_gives_line_spread_plane():
    identity = og.BinaryMatrix.identity(4)
    planes, report = og.matrix_power_planes(identity, 1)
    assert report
    assert planes[0].lines == og.plane_from_spread(og.line_spread(2)).lines


def test_identity_powers_are_not_orthogoval():
    planes, report = og.matrix_power_planes(og.BinaryMatrix.identity(4), 2)
    assert not report
    assert report.failing_pair == (0, 1)


def test_kirkman_system():
    blocks, classes = og.kirkman_system(og.M4)
    assert len(blocks) == 35
    assert len(classes) == 7
    for cls in classes:
        points = sorted(p for i in cls for p in blocks[i])
        assert points == list(range(15))


def test_matrix_power_errors():
    with pytest.raises(og.IncidenceError):
        og.matrix_power_planes(og.BinaryMatrix.from_bits(["11", "11"]), 2)
    with pytest.raises(og.IncidenceError):
        og.matrix_power_planes(og.M4, 0)
    with pytest.raises(og.IncidenceError):
        og.kirkman_system(og.M6)
