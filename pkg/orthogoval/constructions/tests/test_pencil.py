import pytest

import orthogoval as og


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_pencil_pair(n):
    first, second, ctx = og.pencil_pair(n)
    q = 2**n
    assert first.num_points == second.num_points == q * q
    assert og.is_orthogoval_pair(first, second)
    assert second.completion is not None


@pytest.mark.parametrize("n", [2, 3])
def test_pencil_map_fixes_points_at_infinity(n):
    _, _, ctx = og.pencil_pair(n)
    q = 2**n
    assert ctx.permutation[q * q + q] == q * q + q
    assert ctx.permutation[q * q] == q * q


def test_pencil_completions_share_line_at_infinity():
    _, _, ctx = og.pencil_pair(2)
    pg, image = ctx.completions()
    assert pg.lines[0] in image.lines
    assert og.orthogoval_except_line(pg, image, 0)
    assert not og.is_orthogoval_pair(pg, image)


def test_pencil_inverse():
    _, _, ctx = og.pencil_pair(3)
    assert all(ctx.inverse[ctx.permutation[i]] == i for i in range(73))


def test_pencil_order_out_of_range():
    with pytest.raises(og.UnsupportedOrderError):
        og.pencil_pair(7)
