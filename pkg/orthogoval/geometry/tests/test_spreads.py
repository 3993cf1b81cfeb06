import numpy as np
import pytest

import orthogoval as og


def test_line_spread_n2():
    spread = og.line_spread(2)
    table = [
        ["0000", "0001", "0110", "0111"],
        ["0000", "0010", "1100", "1110"],
        ["0000", "0100", "1011", "1111"],
        ["0000", "0101", "1000", "1101"],
        ["0000", "0011", "1001", "1010"],
    ]
    assert [spread.format_member(i) for i in range(5)] == table


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_line_spread_is_a_spread(n):
    spread = og.line_spread(n)
    assert spread.validate()
    assert len(spread.members) == 2**n + 1


def test_union_covers_space():
    spread = og.line_spread(3)
    union = set()
    for member in spread.members:
        union.update(member)
    assert len(union) == 64
    assert np.all(spread.member_of[1:] >= 0)


def test_invalid_spread():
    with pytest.raises(og.IncidenceError):
        og.SpreadF2(1, ((0, 1), (0, 1), (0, 3))).validate()
    with pytest.raises(og.IncidenceError):
        og.SpreadF2(2, ((0, 1, 2, 4), (0, 5, 10, 15))).validate()


def test_plane_from_line_spread_n2():
    plane = og.plane_from_spread(og.line_spread(2))
    assert plane.num_lines == 20
    first_class = [plane.lines[i] for i in range(4)]
    assert first_class == [
        (0b0000, 0b0001, 0b0110, 0b0111),
        (0b0010, 0b0011, 0b0100, 0b0101),
        (0b1000, 0b1001, 0b1110, 0b1111),
        (0b1010, 0b1011, 0b1100, 0b1101),
    ]
    assert plane.check_invariants()


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_spread_plane_is_desarguesian(n):
    plane = og.plane_from_spread(og.line_spread(n))
    psi = og.spread_coordinates(n)
    standard = og.build_ag(og.ff_make(2, n))
    assert plane.relabel(psi).line_sets() == standard.line_sets()
