import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rtdg.errors import SizeLimitError
from rtdg.graph import Graph, build_distance_graph, cycle_graph, is_isomorphism
from rtdg.isomorphism import IsomorphismBudgetExceeded, are_isomorphic, refine_colors
from rtdg.spaces import SpaceSpec


def from_nx(g):
    g = nx.convert_node_labels_to_integers(g)
    return Graph.from_edges(g.number_of_nodes(), g.edges())


def to_nx(G):
    g = nx.Graph()
    g.add_nodes_from(range(G.vertex_count))
    g.add_edges_from(G.edges())
    return g


def shuffled(G, seed):
    perm = list(range(G.vertex_count))
    random.Random(seed).shuffle(perm)
    return Graph.from_edges(G.vertex_count, [(perm[u], perm[v]) for u, v in G.edges()])


def test_self_isomorphism():
    G = build_distance_graph(SpaceSpec.zq(2, 3), "1,3")
    m = are_isomorphic(G, G)
    assert m is not None and is_isomorphism(G, G, m)


def test_invariant_mismatch():
    two_k2 = build_distance_graph(SpaceSpec.zq(2, 2), "1")
    assert are_isomorphic(two_k2, cycle_graph(4)) is None


def test_distance_graph_is_four_cycle():
    G = build_distance_graph(SpaceSpec.zq(2, 2), "2")
    m = are_isomorphic(G, cycle_graph(4))
    assert m is not None and is_isomorphism(G, cycle_graph(4), m)


def test_strongly_regular_pair_is_separated():
    # Shrikhande graph vs 4x4 rook's graph: both srg(16, 6, 2, 2), refinement alone can't tell them apart
    rook = from_nx(nx.cartesian_product(nx.complete_graph(4), nx.complete_graph(4)))
    shrikhande = Graph.from_edges(16, [
        (4 * i + j, 4 * ((i + di) % 4) + (j + dj) % 4)
        for i in range(4) for j in range(4)
        for di, dj in ((0, 1), (1, 0), (1, 1))
    ])
    assert len(set(refine_colors(rook))) == 1 and len(set(refine_colors(shrikhande))) == 1
    assert are_isomorphic(rook, shrikhande) is None
    assert not nx.is_isomorphic(to_nx(rook), to_nx(shrikhande))
    m = are_isomorphic(shrikhande, shuffled(shrikhande, 3))
    assert m is not None


def test_petersen_relabelled():
    P = from_nx(nx.petersen_graph())
    Q = shuffled(P, 11)
    m = are_isomorphic(P, Q)
    assert m is not None and is_isomorphism(P, Q, m)


def test_size_limit_and_budget():
    G = build_distance_graph(SpaceSpec.zq(2, 4), "4")
    with pytest.raises(SizeLimitError):
        are_isomorphic(G, G, max_vertices=10)
    rook = from_nx(nx.cartesian_product(nx.complete_graph(4), nx.complete_graph(4)))
    with pytest.raises(IsomorphismBudgetExceeded):
        are_isomorphic(rook, shuffled(rook, 5), node_budget=1)


graphs = st.integers(1, 10).flatmap(lambda n: st.tuples(
    st.just(n), st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] < e[1]))))


@settings(max_examples=200, deadline=None)
@given(graphs, st.integers(0, 10**6))
def test_relabelled_graphs_are_found(g, seed):
    G = Graph.from_edges(*g)
    H = shuffled(G, seed)
    m = are_isomorphic(G, H)
    assert m is not None and is_isomorphism(G, H, m)
    back = are_isomorphic(H, G)
    assert back is not None and is_isomorphism(H, G, back)


@settings(max_examples=300, deadline=None)
@given(graphs, graphs)
def test_agrees_with_networkx(g, h):
    G, H = Graph.from_edges(*g), Graph.from_edges(*h)
    ours = are_isomorphic(G, H)
    assert (ours is not None) == nx.is_isomorphic(to_nx(G), to_nx(H))
    assert (are_isomorphic(H, G) is not None) == (ours is not None)


@settings(max_examples=30, deadline=None)
@given(st.integers(6, 14), st.integers(2, 4), st.integers(0, 10**6))
def test_regular_graphs_against_networkx(n, d, seed):
    if n * d % 2:
        n += 1
    a = from_nx(nx.random_regular_graph(d, n, seed=seed))
    b = from_nx(nx.random_regular_graph(d, n, seed=seed + 1))
    assert (are_isomorphic(a, b) is not None) == nx.is_isomorphic(to_nx(a), to_nx(b))
