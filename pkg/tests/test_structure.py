import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jointsel.errors import InputError
from jointsel.structure import (
    Digraph,
    StructuralMatrix,
    bipartite_of,
    dedicated_inputs,
    digraph_of,
    hstack,
    is_strongly_connected,
    strongly_connected_components,
    structural_from_edge_list,
    vstack,
)

from oracles import all_pairs_strongly_connected

EXAMPLE1_EDGES = {(1, 2), (2, 1), (2, 3), (3, 2)}


@st.composite
def digraphs(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    node = st.integers(1, n)
    edges = draw(st.sets(st.tuples(node, node), max_size=3 * n))
    return n, edges


def test_from_edge_list_example1():
    a = structural_from_edge_list(3, EXAMPLE1_EDGES)
    assert a.stars == {(2, 1), (1, 2), (3, 2), (2, 3)}
    assert a.to_dense() == [[0, 1, 0], [1, 0, 1], [0, 1, 0]]


def test_from_edge_list_trivial():
    assert structural_from_edge_list(1, []).stars == frozenset()
    assert structural_from_edge_list(2, [(1, 1)]).stars == {(1, 1)}


def test_from_edge_list_rejects_out_of_range():
    with pytest.raises(InputError, match="3->1"):
        structural_from_edge_list(2, [(3, 1)])


def test_duplicates_collapse_unless_strict():
    a = structural_from_edge_list(2, [(1, 2), (1, 2), (2, 1)])
    assert a.nnz == 2
    with pytest.raises(InputError, match="duplicate"):
        structural_from_edge_list(2, [(1, 2), (1, 2)], strict=True)


def test_digraph_of(example1, a2):
    assert digraph_of(example1).edges == EXAMPLE1_EDGES
    assert digraph_of(StructuralMatrix.zeros(4)).edges == frozenset()
    g2 = digraph_of(a2)
    assert len(g2.edges) == 17
    assert {(7, 1), (10, 6), (3, 10)} <= g2.edges


def test_digraph_of_rejects_rectangular():
    with pytest.raises(InputError):
        digraph_of(StructuralMatrix.zeros(2, 3))


def test_bipartite_of(example1):
    b = bipartite_of(example1)
    assert b.edges == ((1, 2, 1), (2, 1, 1), (2, 3, 1), (3, 2, 1))
    eye = StructuralMatrix(3, 3, frozenset({(1, 1), (2, 2), (3, 3)}))
    assert {(u, v) for u, v, _ in bipartite_of(eye).edges} == {(1, 1), (2, 2), (3, 3)}


def test_bipartite_of_composed_with_dedicated_input(example1):
    composed = hstack(example1, dedicated_inputs(3, [1]))
    b = bipartite_of(composed)
    assert (b.n_left, b.n_right) == (4, 3)
    assert {(u, v) for u, v, _ in b.edges} == {(1, 2), (2, 1), (2, 3), (3, 2), (4, 1)}


def test_vstack_shapes(example1):
    c = dedicated_inputs(3, [3]).transpose()
    stacked = vstack(example1, c)
    assert (stacked.n_rows, stacked.n_cols) == (4, 3)
    assert (4, 3) in stacked.stars


def test_stars_out_of_bounds_rejected():
    with pytest.raises(InputError):
        StructuralMatrix(2, 2, frozenset({(3, 1)}))


def test_strong_connectivity_examples(a1, a2):
    assert is_strongly_connected(digraph_of(a1))
    assert is_strongly_connected(digraph_of(a2))
    assert not is_strongly_connected(Digraph(2, frozenset({(1, 2)})))
    assert is_strongly_connected(Digraph(1, frozenset()))
    assert is_strongly_connected(Digraph(1, frozenset({(1, 1)})))


def test_scc_partition_covers_nodes():
    g = Digraph(5, frozenset({(1, 2), (2, 1), (3, 4), (4, 5), (5, 3), (2, 3)}))
    comps = strongly_connected_components(g)
    assert sorted(map(tuple, comps)) == [(1, 2), (3, 4, 5)]


def test_scc_deep_path_no_recursion_limit():
    n = 5000
    edges = {(i, i + 1) for i in range(1, n)} | {(n, 1)}
    assert is_strongly_connected(Digraph(n, frozenset(edges)))


@given(digraphs())
def test_round_trip(graph):
    n, edges = graph
    assert digraph_of(structural_from_edge_list(n, edges)).edges == edges


@given(digraphs())
def test_edge_count_conservation(graph):
    n, edges = graph
    a = structural_from_edge_list(n, edges)
    assert len(bipartite_of(a).edges) == a.nnz == len(edges)


@settings(max_examples=300)
@given(digraphs(max_n=50))
def test_scc_agrees_with_all_pairs_bfs(graph):
    n, edges = graph
    assert is_strongly_connected(Digraph(n, frozenset(edges))) == all_pairs_strongly_connected(n, edges)


def test_scc_agrees_with_bfs_on_dense_random():
    # Hypothesis rarely draws strongly connected graphs; cover that side too.
    rng = random.Random(5)
    hits = 0
    for _ in range(300):
        n = rng.randint(2, 30)
        p = rng.uniform(0.05, 0.3)
        edges = {(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if rng.random() < p}
        expected = all_pairs_strongly_connected(n, edges)
        hits += expected
        assert is_strongly_connected(Digraph(n, frozenset(edges))) == expected
    assert hits > 50
