import numpy as np
import pytest
from hypothesis import given, strategies as st

import orthogoval as og


@pytest.mark.parametrize("n, k", [(5, 1), (5, 2)])
def test_phi_k_triple(n, k):
    planes = og.phi_k_triple(n, k)
    assert len(planes) == 3
    assert og.is_mutually_orthogoval(planes)


def test_phi_k_triple_gcd():
    with pytest.raises(og.OrthogovalError):
        og.phi_k_triple(4, 1)
    with pytest.raises(og.OrthogovalError):
        og.phi_k_map(3, 1)


def test_phi_k_fixes_origin_and_is_injective():
    perm = og.phi_k_map(5, 1)
    assert perm[0] == 0
    assert len(np.unique(perm)) == 1024


def test_phi_2k_from_phi_k():
    rho = og.swap_coordinates(32)
    phi1, phi2 = og.phi_k_map(5, 1), og.phi_k_map(5, 2)
    assert np.array_equal(phi2, rho[phi1[phi1[rho]]])


def test_swap_is_involution():
    rho = og.swap_coordinates(8)
    assert np.array_equal(rho[rho], np.arange(64))


@given(st.integers(0, 1023), st.integers(0, 1023))
def test_phi_k_is_additive(a, b):
    # codes of (x, y) are x*q + y; addition is XOR of both coordinates
    perm = og.phi_k_map(5, 1)
    q = 32
    xa, ya = divmod(a, q)
    xb, yb = divmod(b, q)
    (ua, va), (ub, vb) = divmod(int(perm[a]), q), divmod(int(perm[b]), q)
    assert divmod(int(perm[(xa ^ xb) * q + (ya ^ yb)]), q) == (ua ^ ub, va ^ vb)
