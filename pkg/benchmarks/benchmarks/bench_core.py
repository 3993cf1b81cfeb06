from .common import (
    cremona_orders,
    get_cached_cremona_pair,
    Benchmark,
)
import orthogoval as og


class Orthogovality(Benchmark):
    params = [(cremona_orders)]
    param_names = ["q"]

    def time_is_orthogoval_pair(self, q):
        first, second = get_cached_cremona_pair(q)
        _ = og.is_orthogoval_pair(first, second)

    def time_union_design_check(self, q):
        _ = og.union_design_check(get_cached_cremona_pair(q))
