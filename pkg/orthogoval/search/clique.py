"""Exact maximum clique by branch and bound on bitsets.

Candidates are ordered by a greedy colouring; the colour of a candidate bounds
the size of any clique it can still complete.
"""

import logging

from orthogoval.exception import VerificationError

__all__ = ["max_clique"]

logger = logging.getLogger(__name__)


class _TargetReached(Exception):
    pass


def _lowest(bits):
    return (bits & -bits).bit_length() - 1


def _colour_sort(candidates, adj):
    order, bounds = [], []
    uncoloured, colour = candidates, 0
    while uncoloured:
        colour += 1
        available = uncoloured
        while available:
            v = _lowest(available)
            available &= ~(1 << v) & ~adj[v]
            uncoloured &= ~(1 << v)
            order.append(v)
            bounds.append(colour)
    return order, bounds


def max_clique(graph, target=None):
    """A maximum clique of `graph`, as a sorted list of vertices.

    Parameters
    ----------
    graph : CompatibilityGraph or networkx.Graph
    target : int, optional
        Return the first clique found with at least this many vertices.

    Returns
    -------
    list
        Vertices of the clique. Empty for an empty graph.

    Raises
    ------
    VerificationError
        If the returned set is not a clique.
    """
    if hasattr(graph, "graph"):
        graph = graph.graph
    # highest degree first; ties by node order
    nodes = sorted(graph.nodes, key=lambda v: -graph.degree(v))
    position = {v: i for i, v in enumerate(nodes)}
    adj = [0] * len(nodes)
    for u, v in graph.edges:
        if u != v:
            adj[position[u]] |= 1 << position[v]
            adj[position[v]] |= 1 << position[u]

    best = []

    def expand(clique, candidates):
        nonlocal best
        order, bounds = _colour_sort(candidates, adj)
        for v, bound in zip(reversed(order), reversed(bounds)):
            if len(clique) + bound <= len(best):
                return
            grown = clique + [v]
            remaining = candidates & adj[v]
            if remaining:
                expand(grown, remaining)
            elif len(grown) > len(best):
                best = grown
                logger.debug("clique of size %d", len(best))
                if target is not None and len(best) >= target:
                    raise _TargetReached
            candidates &= ~(1 << v)

    try:
        expand([], (1 << len(nodes)) - 1)
    except _TargetReached:
        pass
    clique = sorted(nodes[i] for i in best)
    if not all(graph.has_edge(u, v) for u in clique for v in clique if u != v):
        raise VerificationError(f"{clique} is not a clique")
    return clique
