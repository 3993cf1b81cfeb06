import numpy as np
import pytest

import orthogoval as og


@pytest.fixture(scope="module")
def cremona_q2_cphf():
    first, second, _ = og.cremona_pair(og.ff_make(2, 1))
    return og.cphf_from_planes([first, second])


def test_ca_from_cremona_q2(cremona_q2_cphf):
    ca = og.ca_from_cphf(cremona_q2_cphf, 1)
    assert (ca.N, ca.k, ca.v) == (15, 7, 2)
    assert str(ca) == "CA_1(15;3,7,2)"
    report = og.verify_ca(ca)
    assert report
    assert report.min_count >= 1


def test_missing_zero_row_is_detected(cremona_q2_cphf):
    ca = og.ca_from_cphf(cremona_q2_cphf, 1)
    broken = og.CoveringArray(ca.rows[:-1], 2, 1)
    report = og.verify_ca(broken)
    assert not report
    assert report.min_count == 0
    columns, symbols, count = report.witness
    assert symbols == (0, 0, 0)
    assert count == 0
    assert report.to_dict()["witness"]["columns"] == list(columns)


@pytest.fixture(scope="module")
def ds13_cphf():
    return og.cphf_from_planes(og.ds_quadruple())


@pytest.mark.parametrize("index, rows", [(1, 53), (2, 80), (3, 107)])
def test_ds13_arrays_from_leading_rows(ds13_cphf, index, rows):
    ca = og.ca_from_cphf(ds13_cphf.take_rows(index + 1), index)
    assert (ca.N, ca.k, ca.v, ca.index) == (rows, 13, 3, index)
    assert og.verify_ca(ca)


@pytest.mark.parametrize("index", [1, 2, 3])
def test_ds13_arrays_expand_every_row(ds13_cphf, index):
    ca = og.ca_from_cphf(ds13_cphf, index)
    assert ca.N == ds13_cphf.n * (3**3 - 1) + index
    assert ca.N == 104 + index
    assert og.verify_ca(ca)


@pytest.mark.parametrize("n, rows, columns", [(1, 14, 6), (2, 124, 18)])
def test_extended_pencil_arrays(n, rows, columns):
    first, second, _ = og.pencil_pair(n)
    cphf = og.extend_scphf(og.cphf_from_planes([first, second]), [first, second])
    ca = og.ca_from_extended_scphf(cphf, 1)
    assert (ca.N, ca.k) == (rows, columns)
    assert og.verify_ca(ca)


def test_sherwood_array_from_m4():
    planes, _ = og.matrix_power_planes(og.M4, 7)
    cphf = og.cphf_from_planes(planes)
    ca = og.ca_from_cphf(cphf, 6)
    assert (ca.N, ca.k, ca.v) == (64 * 6 + 60, 16, 4)
    assert og.verify_ca(ca)


def test_coverage_census_sums_to_rows(cremona_q2_cphf):
    ca = og.ca_from_cphf(cremona_q2_cphf, 1)
    census = og.coverage_census(ca, (0, 1, 2))
    assert census.shape == (2, 2, 2)
    assert census.sum() == ca.N
    assert census.min() >= 1


def test_index_checks(cremona_q2_cphf):
    with pytest.raises(og.OrthogovalError):
        og.ca_from_cphf(cremona_q2_cphf, 0)
    with pytest.raises(og.OrthogovalError):
        og.ca_from_cphf(cremona_q2_cphf, 2)
    with pytest.raises(og.IncidenceError):
        og.ca_from_extended_scphf(cremona_q2_cphf, 1)


def test_verify_ca_arguments():
    ca = og.CoveringArray(np.zeros((2, 3), dtype=int), 2)
    with pytest.raises(og.OrthogovalError):
        og.verify_ca(ca, t=2)
    with pytest.raises(og.IncidenceError):
        og.verify_ca(og.CoveringArray(np.zeros((2, 2), dtype=int), 2))
    with pytest.raises(og.IncidenceError):
        og.CoveringArray(np.full((2, 3), 5), 2)
    assert not og.verify_ca(ca)
