import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rtdg.coloring import chromatic_number_exact, dsatur, greedy_clique
from rtdg.errors import SizeLimitError
from rtdg.graph import Graph, build_distance_graph, complete_graph, cycle_graph, empty_graph
from rtdg.spaces import SpaceSpec


def brute_chromatic(G):
    """Smallest k admitting a proper k-coloring, by trying all assignments."""
    n = G.vertex_count
    if n == 0:
        return 0
    edges = G.edges()
    for k in range(1, n + 1):
        for colors in itertools.product(range(k), repeat=n):
            if all(colors[u] != colors[v] for u, v in edges):
                return k


def from_nx(g):
    g = nx.convert_node_labels_to_integers(g)
    return Graph.from_edges(g.number_of_nodes(), g.edges())


@pytest.mark.parametrize("G, chi", [
    (complete_graph(4), 4),
    (build_distance_graph(SpaceSpec.zq(2, 2), "1"), 2),
    (build_distance_graph(SpaceSpec.sn(3), "2,3"), 6),
    (empty_graph(3), 1),
    (empty_graph(0), 0),
    (cycle_graph(5), 3),
    (cycle_graph(6), 2),
    (from_nx(nx.petersen_graph()), 3),
    (from_nx(nx.mycielski_graph(4)), 4),  # Groetzsch graph: triangle-free, chi 4
    (from_nx(nx.mycielski_graph(5)), 5),
])
def test_chromatic_examples(G, chi):
    res = chromatic_number_exact(G)
    assert res.exact and res.value == chi
    assert res.coloring.is_proper(G) and res.coloring.color_count == chi


def test_bounds_bracket_result():
    G = from_nx(nx.mycielski_graph(4))
    masks = list(G.masks)
    clique = greedy_clique(masks)
    assert all(masks[a] >> b & 1 for a, b in itertools.combinations(clique, 2))
    colors = dsatur(masks)
    assert len(clique) <= 4 <= max(colors) + 1


def test_budget_exhaustion_is_inconclusive():
    # Mycielski M6 needs real search to prove chi = 6 (clique number 2)
    G = from_nx(nx.mycielski_graph(6))
    res = chromatic_number_exact(G, node_budget=50)
    assert not res.exact and res.value is None
    assert res.lower <= 6 <= res.upper
    assert res.coloring.is_proper(G)


def test_component_limit():
    with pytest.raises(SizeLimitError):
        chromatic_number_exact(complete_graph(10), max_component=5)


def test_dsatur_is_deterministic():
    G = build_distance_graph(SpaceSpec.zq(2, 4), "1,3")
    assert dsatur(list(G.masks)) == dsatur(list(G.masks))


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 7).flatmap(lambda n: st.tuples(
    st.just(n), st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] < e[1])))))
def test_matches_brute_force(args):
    n, edges = args
    G = Graph.from_edges(n, edges)
    res = chromatic_number_exact(G)
    assert res.exact and res.value == brute_chromatic(G)
    assert res.coloring.is_proper(G)


@settings(max_examples=40, deadline=None)
@given(st.integers(8, 30), st.floats(0.1, 0.9), st.integers(0, 10**6))
def test_random_graphs_bounded_by_clique_and_greedy(n, p, seed):
    g = nx.gnp_random_graph(n, p, seed=seed)
    G = from_nx(g)
    res = chromatic_number_exact(G)
    assert res.exact
    clique = max((len(c) for c in nx.find_cliques(g)), default=0)
    greedy = max(nx.greedy_color(g, strategy="DSATUR").values(), default=-1) + 1
    assert clique <= res.value <= greedy
    assert res.coloring.is_proper(G)
