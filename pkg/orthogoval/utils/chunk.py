import itertools
import os

from orthogoval.exception import OrthogovalError

__all__ = ["chunks", "cpu_count", "create_iterables"]


def chunks(iterable, n):
    """Divides an iterable into chunks of size n"""
    it = iter(iterable)
    while True:
        x = tuple(itertools.islice(it, n))
        if not x:
            return
        yield x


def cpu_count():
    """Returns the number of worker processes to use.

    Two under pytest, ``ORTHOGOVAL_N_JOBS`` when it is set, otherwise the
    number of logical CPUs.
    """
    if "PYTEST_CURRENT_TEST" in os.environ:
        return 2
    n_jobs = os.environ.get("ORTHOGOVAL_N_JOBS")
    if n_jobs:
        return max(int(n_jobs), 1)
    return os.cpu_count() or 1


def create_iterables(obj, iterator, n_cores, list_of_iterator=None):
    """Creates an iterable of function inputs for parallel computation
    based on the provided iterator type.

    Parameters
    -----------
    obj : PlaneIncidence, array-like or sequence
        The object whose work items are chunked.
    iterator : str
        Type of iterator. Valid values are 'line' (line indices of a plane),
        'column' (column indices of an array, used as the first column of the
        column triples) and 'vertex_pair' (unordered pairs of positions in a
        sequence).
    n_cores : int
        Number of chunks to aim for.

    Returns:
    --------
    iterable : Iterable
        An iterable of function inputs.
    """

    if iterator in ["line", "column", "vertex_pair"]:
        if list_of_iterator is None:
            if iterator == "line":
                list_of_iterator = list(range(obj.num_lines))
            elif iterator == "column":
                list_of_iterator = list(range(len(obj[0]) if len(obj) else 0))
            elif iterator == "vertex_pair":
                list_of_iterator = list(itertools.combinations(range(len(obj)), 2))
        num_in_chunk = max(len(list_of_iterator) // n_cores, 1)
        return chunks(list_of_iterator, num_in_chunk)
    else:
        raise OrthogovalError(f"invalid iterator type {iterator!r}")
