"""Exact chromatic numbers for small graphs.

Each connected component is solved on its own:

1. a greedy clique gives a lower bound,
2. DSATUR gives an upper bound and a witness coloring,
3. only if the two disagree, a DSATUR-ordered branch and bound closes the gap.

A run that exhausts its node budget reports both bounds and ``exact=False``;
it never passes a bound off as the chromatic number.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import DEFAULT_COLORING_NODE_BUDGET, DEFAULT_MAX_COLORING_COMPONENT
from .errors import SizeLimitError
from .graph import Graph, connected_components


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]

    @property
    def color_count(self) -> int:
        return len(set(self.colors))

    def is_proper(self, G: Graph) -> bool:
        if len(self.colors) != G.vertex_count:
            return False
        return all(self.colors[u] != self.colors[v] for u, v in G.edges())


@dataclass(frozen=True)
class ChromaticResult:
    lower: int
    upper: int
    coloring: Coloring
    exact: bool
    nodes: int = 0

    @property
    def value(self) -> int | None:
        return self.upper if self.exact else None


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def greedy_clique(masks: list[int]) -> list[int]:
    """Largest clique found by greedy growth from every start vertex."""
    m = len(masks)
    best: list[int] = []
    for start in sorted(range(m), key=lambda v: (-_popcount(masks[v]), v)):
        if _popcount(masks[start]) + 1 <= len(best):
            break
        clique = [start]
        cand = masks[start]
        while cand:
            v = max(_bits(cand), key=lambda u: (_popcount(masks[u] & cand), -u))
            clique.append(v)
            cand &= masks[v]
        if len(clique) > len(best):
            best = clique
    return best


def dsatur(masks: list[int]) -> list[int]:
    """DSATUR coloring; ties go to larger degree, then to the lower vertex id."""
    m = len(masks)
    colors = [-1] * m
    neighbor_colors = [0] * m  # bitset of colors present around each vertex
    degree = [_popcount(x) for x in masks]
    for _ in range(m):
        v = max(
            (u for u in range(m) if colors[u] < 0),
            key=lambda u: (_popcount(neighbor_colors[u]), degree[u], -u),
        )
        used = neighbor_colors[v]
        c = 0
        while used >> c & 1:
            c += 1
        colors[v] = c
        for u in _bits(masks[v]):
            neighbor_colors[u] |= 1 << c
    return colors


class _Budget(Exception):
    pass


def _branch_and_bound(masks, lower, upper, best_colors, node_budget):
    m = len(masks)
    colors = [-1] * m
    classes: list[int] = []  # bitset of vertices per color
    state = {"best": upper, "colors": list(best_colors), "nodes": 0}

    def choose():
        best_v, best_key = -1, None
        for v in range(m):
            if colors[v] >= 0:
                continue
            sat = sum(1 for cls in classes if cls & masks[v])
            key = (sat, _popcount(masks[v]), -v)
            if best_key is None or key > best_key:
                best_v, best_key = v, key
        return best_v

    def rec(colored, k):
        state["nodes"] += 1
        if state["nodes"] > node_budget:
            raise _Budget
        if colored == m:
            state["best"] = k
            state["colors"] = list(colors)
            return
        v = choose()
        for c in range(k):
            if not classes[c] & masks[v]:
                colors[v] = c
                classes[c] |= 1 << v
                rec(colored + 1, k)
                classes[c] &= ~(1 << v)
                colors[v] = -1
                if state["best"] <= lower:
                    return
        if k + 1 < state["best"]:
            colors[v] = k
            classes.append(1 << v)
            rec(colored + 1, k + 1)
            classes.pop()
            colors[v] = -1

    try:
        rec(0, 0)
        done = True
    except _Budget:
        done = False
    return state["best"], state["colors"], done, state["nodes"]


def _solve_component(masks, node_budget):
    clique = greedy_clique(masks)
    colors = dsatur(masks)
    lower, upper = len(clique), max(colors) + 1
    if lower == upper:
        return lower, upper, colors, True, 0
    best, colors, done, nodes = _branch_and_bound(masks, lower, upper, colors, node_budget)
    return (best if done else lower), best, colors, done, nodes


def chromatic_number_exact(
    G: Graph,
    node_budget: int = DEFAULT_COLORING_NODE_BUDGET,
    max_component: int = DEFAULT_MAX_COLORING_COMPONENT,
) -> ChromaticResult:
    """chi(G) with a proper coloring witness, or bounds if the budget runs out.

    Raises SizeLimitError if some component has more than ``max_component``
    vertices.
    """
    parts = connected_components(G)
    groups = parts.members()
    for members in groups:
        if len(members) > max_component:
            raise SizeLimitError("graph component", len(members), max_component)
    colors = [0] * G.vertex_count
    lower = upper = 0
    exact = True
    nodes = 0
    for members in groups:
        index = {v: i for i, v in enumerate(members)}
        masks = [sum(1 << index[u] for u in G.neighbors[v]) for v in members]
        lo, hi, local, done, used = _solve_component(masks, node_budget)
        nodes += used
        exact = exact and done
        lower, upper = max(lower, lo), max(upper, hi)
        for v, c in zip(members, local):
            colors[v] = c
    coloring = Coloring(tuple(colors))
    assert coloring.is_proper(G), "solver produced an improper coloring"
    return ChromaticResult(lower, upper, coloring, exact and lower == upper, nodes)
