import itertools

import orthogoval as og


def test_thirty_labelled_fano_planes():
    systems = list(og.steiner_triple_systems(7))
    assert len(systems) == 30
    for system in systems:
        pairs = {p for t in system for p in itertools.combinations(t, 2)}
        assert len(system) == 7
        assert len(pairs) == 21


def test_limit():
    assert len(list(og.steiner_triple_systems(9, limit=3))) == 3


def test_large_set_sts9():
    planes = og.large_set_sts9()
    assert len(planes) == 7
    triples = [t for plane in planes for t in plane.lines]
    assert len(triples) == 84
    assert set(triples) == set(itertools.combinations(range(9), 3))
    assert og.union_design_check(planes).steiner
