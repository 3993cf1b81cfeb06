import pytest

import orthogoval as og


def test_scan_small_limit():
    assert og.multiplier_scan(100) == [3]
    assert og.multiplier_scan(2) == []


def test_criterion_for_three():
    # m = 13; 3 generates {1, 3, 9}, which contains -4 = 9 and not 2
    assert og.multiplier_criterion(3, 3)
    assert not og.multiplier_criterion(2, 2)


def test_bad_limit():
    with pytest.raises(og.OrthogovalError):
        og.multiplier_scan(1)
