# smoke tests for all functions supporting `get_chunks` kwarg

import importlib
import inspect
import random

import orthogoval as og


def get_all_functions(package_name="orthogoval"):
    """Returns a dictionary where the keys are the function names in a given
    Python package, and the values are their positional and keyword arguments."""
    package = importlib.import_module(package_name)
    functions = {}

    for name, obj in inspect.getmembers(package, inspect.isfunction):
        if not name.startswith("_"):
            args, kwargs = inspect.getfullargspec(obj)[:2]
            functions[name] = {"args": args, "kwargs": kwargs}

    return functions


def get_functions_with_get_chunks():
    """Returns a list of functions with the `get_chunks` kwarg."""
    all_funcs = get_all_functions()
    return [f for f in all_funcs if "get_chunks" in all_funcs[f]["args"]]


def random_chunking(items):
    _items = list(items).copy()
    random.seed(42)
    random.shuffle(_items)
    num_chunks = og.cpu_count()
    num_in_chunk = max(len(_items) // num_chunks, 1)
    return og.chunks(_items, num_in_chunk)


def _calls():
    first, second, _ = og.cremona_pair(og.ff_make(3, 1))
    pencil_first, pencil_second, ctx = og.pencil_pair(2)
    pg, image = ctx.completions()
    cphf = og.cphf_from_planes([pencil_first, pencil_second])
    extended = og.extend_scphf(cphf, [pencil_first, pencil_second])
    ca = og.ca_from_extended_scphf(extended, 1)
    broken = og.CoveringArray(ca.rows[1:], ca.v, 1)
    return {
        "is_orthogoval_pair": ((first, second), lambda r: r),
        "is_mutually_orthogoval": (([first, second, first],), lambda r: r),
        "orthogoval_except_line": ((pg, image, 0), lambda r: r),
        "matrix_power_planes": ((og.M4, 4), lambda r: ([p.lines for p in r[0]], r[1])),
        "candidate_matrix_search": ((2, 6), lambda r: [m.key for m in r]),
        "build_compat_graph": (
            ([og.M4.power(k) for k in (1, 2, 3)] + [og.M4],),
            lambda r: sorted(tuple(sorted(e)) for e in r.graph.edges),
        ),
        "oval_planes_search": ((2,), lambda r: r),
        "multiplier_scan": ((2000,), lambda r: r),
        "verify_cphf": ((extended,), lambda r: r),
        "cphf_from_planes": (([first, second],), lambda r: r),
        "extend_scphf": ((cphf, [pencil_first, pencil_second]), lambda r: r),
        "verify_ca": ((broken,), lambda r: r),
        "pipeline_reproduce": (("q2-proj-λ1",), lambda r: r),
    }


def test_get_chunks():
    get_chunks_funcs = get_functions_with_get_chunks()
    calls = _calls()
    assert sorted(get_chunks_funcs) == sorted(calls)
    for func in get_chunks_funcs:
        args, key = calls[func]
        c1 = getattr(og, func)(*args)
        c2 = getattr(og, func)(*args, get_chunks=random_chunking)
        assert key(c1) == key(c2), func
