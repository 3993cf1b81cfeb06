import numpy as np
import pytest

import orthogoval as og


def test_binary_matrix_basics():
    m = og.BinaryMatrix.from_bits(["10", "11"])
    assert m.dim == 2
    assert m.is_invertible
    assert m.inverse() @ m == og.BinaryMatrix.identity(2)
    assert m.apply(0b01) == 0b01
    assert m.apply(0b10) == 0b11
    assert str(m) == "10\n11"


def test_singular_matrix():
    m = og.BinaryMatrix.from_bits(["11", "11"])
    assert m.rank() == 1
    with pytest.raises(og.IncidenceError):
        m.inverse()
    with pytest.raises(og.IncidenceError):
        og.BinaryMatrix.from_bits(["12", "01"])


def test_power_and_inverse():
    assert og.M4.power(3) == og.M4 @ og.M4 @ og.M4
    assert og.M4.power(-2) @ og.M4.power(2) == og.BinaryMatrix.identity(4)


def test_identity_is_not_compatible():
    assert not og.is_spread_compatible(og.BinaryMatrix.identity(4), og.line_spread(2))
    assert og.is_spread_compatible(og.BinaryMatrix.identity(2), og.line_spread(1))


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5, 6])
def test_powers_of_m4_and_m6_are_compatible(k):
    assert og.is_spread_compatible(og.M4.power(k), og.line_spread(2))
    assert og.is_spread_compatible(og.M6.power(k), og.line_spread(3))


def test_square_is_suitable():
    assert og.square_is_suitable(og.M4, og.line_spread(2))
    assert not og.square_is_suitable(og.BinaryMatrix.identity(6), og.line_spread(3))


def test_compatibility_dimension_mismatch():
    with pytest.raises(og.IncidenceError):
        og.is_spread_compatible(og.M4, og.line_spread(3))


def test_identity_partial_is_rejected():
    spread = og.line_spread(3)
    assert og.partial_rejected(np.eye(6, dtype=np.uint8)[:5], spread)
    assert not og.partial_rejected(og.M6.array[:5], spread)


def test_rejected_partials_have_no_compatible_completion():
    spread = og.line_spread(3)
    rng = np.random.default_rng(7)
    for _ in range(40):
        partial = rng.integers(0, 2, size=(5, 6), dtype=np.uint8)
        if not og.partial_rejected(partial, spread):
            continue
        for last in range(64):
            row = [(last >> s) & 1 for s in range(5, -1, -1)]
            matrix = og.BinaryMatrix.from_array(np.vstack([partial, row]))
            assert not og.is_spread_compatible(matrix, spread)


def test_candidate_search_n2():
    spread = og.line_spread(2)
    found = og.candidate_matrix_search(2, 5, seed=0)
    assert len(found) == 5
    assert len({m.key for m in found}) == 5
    for m in found:
        assert m.is_invertible
        assert og.is_spread_compatible(m, spread)


def test_candidate_search_is_deterministic():
    first = og.candidate_matrix_search(2, 4, seed=3)
    second = og.candidate_matrix_search(2, 4, seed=3)
    assert [m.key for m in first] == [m.key for m in second]


def test_candidate_search_exhausted():
    with pytest.raises(og.SearchExhaustedError) as info:
        og.candidate_matrix_search(2, 10**6, batch_size=1, max_batches=2)
    assert isinstance(info.value.partial, list)


def test_candidate_search_bad_n():
    with pytest.raises(og.OrthogovalError):
        og.candidate_matrix_search(0, 1)
