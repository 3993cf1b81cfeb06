"""Graphs whose cliques are sets of mutually orthogoval planes."""

import itertools
import logging
from dataclasses import dataclass

import networkx as nx
from joblib import Parallel, delayed

import orthogoval as og
from orthogoval.exception import IncidenceError
from orthogoval.geometry import PlaneIncidence, line_spread, plane_from_spread

__all__ = ["CompatibilityGraph", "build_compat_graph"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CompatibilityGraph:
    """An undirected graph on plane ids with the planes it was built from.

    ``graph`` is a :class:`networkx.Graph` on ``0 .. len(planes)-1``; an edge
    joins two planes that passed `predicate` when the graph was built. Node
    attribute ``"item"`` holds the matrix or plane a vertex came from.
    """

    graph: nx.Graph
    planes: tuple
    predicate: str = "is_orthogoval_pair"

    def __len__(self):
        return self.graph.number_of_nodes()

    def adjacency_bits(self):
        """Neighbourhood of every vertex as an integer bitset."""
        bits = [0] * len(self)
        for u, v in self.graph.edges:
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        return bits

    def is_clique(self, vertices):
        vertices = list(vertices)
        return all(
            self.graph.has_edge(u, v)
            for i, u in enumerate(vertices)
            for v in vertices[i + 1 :]
        )


def _one_chunk(ids):
    return [ids]


def _edges(planes, pairs):
    return [
        (u, v)
        for u, v in pairs
        if og.is_orthogoval_pair(planes[u], planes[v], get_chunks=_one_chunk)
    ]


def build_compat_graph(items, base=None, get_chunks="chunks"):
    """Join two items when their planes are orthogoval.

    Items are either all :class:`PlaneIncidence` or all binary matrices. A
    matrix ``M`` stands for ``plane_from_spread(M(C))``, where ``C`` is `base`
    or the line spread; the plane of ``C`` itself is then vertex 0 and the
    matrices follow in order.

    The parallel computation is implemented by dividing the vertex pairs into
    chunks and testing each chunk of pairs in parallel.

    Parameters
    ----------
    items : list of BinaryMatrix or list of PlaneIncidence
    base : SpreadF2, optional
        Only used with matrices.
    get_chunks : str, function (default = "chunks")
        A function that takes in a list of all the vertex pairs as input and
        returns an iterable `pair_chunks`. The default chunking is done by
        slicing the pairs into `n` chunks, where `n` is the total number of CPU
        cores available.

    Returns
    -------
    CompatibilityGraph
    """
    items = list(items)
    if items and all(isinstance(i, PlaneIncidence) for i in items):
        planes, labels = items, items
    elif all(isinstance(i, og.BinaryMatrix) for i in items):
        if base is None:
            if items and items[0].dim % 2:
                raise IncidenceError("matrices of odd size act on no spread")
            base = line_spread(items[0].dim // 2 if items else 1)
        identity = og.BinaryMatrix.identity(base.dimension)
        labels = [identity, *items]
        planes = [
            plane_from_spread(base.image(m), provenance=f"matrix[{i}]")
            for i, m in enumerate(labels)
        ]
    else:
        raise IncidenceError("items must be all planes or all binary matrices")

    G = nx.Graph()
    G.add_nodes_from((i, {"item": label}) for i, label in enumerate(labels))
    total_cores = og.cpu_count()
    if get_chunks == "chunks":
        pair_chunks = og.create_iterables(planes, "vertex_pair", total_cores)
    else:
        pair_chunks = get_chunks(list(itertools.combinations(range(len(planes)), 2)))
    results = Parallel(n_jobs=total_cores)(
        delayed(_edges)(planes, chunk) for chunk in pair_chunks
    )
    for edges in results:
        G.add_edges_from(edges)
    logger.info(
        "compatibility graph: %d vertices, %d edges",
        G.number_of_nodes(),
        G.number_of_edges(),
    )
    return CompatibilityGraph(G, tuple(planes))
