import numpy as np
import pytest

import orthogoval as og


@pytest.mark.parametrize("build", [og.build_pg, og.build_ag])
@pytest.mark.parametrize("p, n", [(2, 1), (3, 1), (2, 2)])
def test_relabelled_plane_is_found(build, p, n):
    plane = build(og.ff_make(p, n))
    rng = np.random.default_rng(p * 10 + n)
    perm = rng.permutation(plane.num_points)
    other = plane.relabel(perm)
    found = og.find_plane_isomorphism(plane, other)
    assert found is not None
    assert og.is_isomorphism(plane, other, found)


def test_identity_is_isomorphism():
    pg = og.build_pg(og.ff_make(3, 1))
    assert og.is_isomorphism(pg, pg, range(pg.num_points))
    swap = list(range(pg.num_points))
    swap[0], swap[1] = 1, 0
    assert not og.is_isomorphism(pg, pg, swap)


def test_kinds_must_match():
    spec = og.ff_make(3, 1)
    with pytest.raises(og.IncidenceError):
        og.find_plane_isomorphism(og.build_pg(spec), og.build_ag(spec))


def test_node_limit():
    pg = og.build_pg(og.ff_make(2, 2))
    other = pg.relabel(np.random.default_rng(5).permutation(pg.num_points))
    assert og.find_plane_isomorphism(pg, other, limit=1) is None
