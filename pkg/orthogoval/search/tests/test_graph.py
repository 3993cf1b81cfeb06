import networkx as nx
import pytest

import orthogoval as og


def test_m4_powers_form_a_complete_graph():
    items = [og.M4.power(k) for k in range(1, 7)]
    graph = og.build_compat_graph(items)
    assert len(graph) == 7
    assert graph.graph.number_of_edges() == 21
    assert graph.is_clique(range(7))
    assert graph.graph.nodes[0]["item"] == og.BinaryMatrix.identity(4)


def test_no_matrices_gives_identity_vertex():
    graph = og.build_compat_graph([])
    assert len(graph) == 1
    assert graph.graph.number_of_edges() == 0


def test_duplicate_planes_are_not_adjacent():
    pg = og.build_pg(og.ff_make(3, 1))
    graph = og.build_compat_graph([pg, pg])
    assert graph.graph.number_of_edges() == 0
    assert graph.adjacency_bits() == [0, 0]


def test_ds13_planes():
    graph = og.build_compat_graph(og.ds_quadruple())
    assert nx.is_isomorphic(graph.graph, nx.complete_graph(4))


def test_mixed_items():
    with pytest.raises(og.IncidenceError):
        og.build_compat_graph([og.M4, og.build_pg(og.ff_make(2, 1))])
