from .common import Benchmark
import orthogoval as og


class Matrices(Benchmark):
    params = [[2, 3]]
    param_names = ["n"]

    def time_candidate_matrix_search(self, n):
        _ = og.candidate_matrix_search(n, 5, seed=0)


class Clique(Benchmark):
    def setup(self):
        self.graph = og.build_compat_graph([og.M6.power(k) for k in range(1, 7)])

    def time_max_clique(self):
        _ = og.max_clique(self.graph)


class Ovals(Benchmark):
    params = [[2, 3]]
    param_names = ["q"]

    def time_oval_planes_search(self, q):
        _ = og.oval_planes_search(q)
