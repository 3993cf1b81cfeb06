"""Scan for prime powers admitting the multiplier criterion on planar
difference sets modulo ``q^2 + q + 1``."""

import itertools
import logging

import galois
from joblib import Parallel, delayed

import orthogoval as og
from orthogoval.exception import OrthogovalError

__all__ = ["multiplier_criterion", "multiplier_scan"]

logger = logging.getLogger(__name__)


def _prime_powers(limit):
    powers = []
    for p in galois.primes(limit):
        q = p
        while q <= limit:
            powers.append((q, p))
            q *= p
    return sorted(powers)


def multiplier_criterion(q, p):
    """Whether some power of `p` is ``-4`` modulo ``m = q^2 + q + 1`` while 2
    is not a power of `p` modulo ``m``."""
    m = q * q + q + 1
    generated, x = set(), 1
    while x not in generated:
        generated.add(x)
        x = x * p % m
    return (-4) % m in generated and 2 not in generated


def _scan(chunk):
    return [q for q, p in chunk if multiplier_criterion(q, p)]


def multiplier_scan(limit, get_chunks="chunks"):
    """All prime powers ``q <= limit`` satisfying :func:`multiplier_criterion`.

    Parameters
    ----------
    limit : int
    get_chunks : str, function (default = "chunks")
        A function that takes in the list of ``(q, p)`` pairs as input and
        returns an iterable of chunks. The default chunking is done by slicing
        the list into `n` chunks, where `n` is the total number of CPU cores
        available.

    Returns
    -------
    list of int
        Increasing.
    """
    if limit < 2:
        raise OrthogovalError(f"multiplier scans need limit >= 2, got {limit}")
    candidates = _prime_powers(limit)
    total_cores = og.cpu_count()
    if get_chunks == "chunks":
        num_in_chunk = max(len(candidates) // total_cores, 1)
        chunks = og.chunks(candidates, num_in_chunk)
    else:
        chunks = get_chunks(candidates)
    results = Parallel(n_jobs=total_cores)(delayed(_scan)(chunk) for chunk in chunks)
    found = sorted(itertools.chain.from_iterable(results))
    logger.info("%d prime powers up to %d, %d pass", len(candidates), limit, len(found))
    return found
