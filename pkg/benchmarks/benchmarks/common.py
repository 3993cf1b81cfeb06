from functools import lru_cache

import orthogoval as og

__all__ = [
    "cremona_orders",
    "pencil_exponents",
    "get_cached_cremona_pair",
    "get_cached_pencil_planes",
    "get_cached_extended_ca",
    "Benchmark",
]

cremona_orders = [3, 4, 5, 7, 8, 9]
pencil_exponents = [2, 3, 4]


@lru_cache(typed=True)
def get_cached_cremona_pair(q):
    first, second, _ = og.cremona_pair(og.ff_from_order(q), verify=False)
    return first, second


@lru_cache(typed=True)
def get_cached_pencil_planes(n):
    first, second, _ = og.pencil_pair(n, verify=False)
    return first, second


@lru_cache(typed=True)
def get_cached_extended_ca(n):
    planes = list(get_cached_pencil_planes(n))
    cphf = og.extend_scphf(og.cphf_from_planes(planes), planes)
    return og.ca_from_extended_scphf(cphf, 1)


class Benchmark:
    pass
