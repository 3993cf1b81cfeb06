from .common import (
    pencil_exponents,
    get_cached_pencil_planes,
    get_cached_extended_ca,
    Benchmark,
)
import orthogoval as og


class Cphf(Benchmark):
    params = [(pencil_exponents)]
    param_names = ["n"]

    def time_cphf_from_planes(self, n):
        _ = og.cphf_from_planes(get_cached_pencil_planes(n))

    def time_extend_scphf(self, n):
        planes = get_cached_pencil_planes(n)
        cphf = og.cphf_from_planes(planes, verify=False)
        _ = og.extend_scphf(cphf, planes)


class Array(Benchmark):
    params = [(pencil_exponents)]
    param_names = ["n"]

    def time_verify_ca(self, n):
        _ = og.verify_ca(get_cached_extended_ca(n))
