"""Graph isomorphism by color refinement plus individualization.

Both graphs are refined together so that equal colors mean the same thing
on both sides.  A vertex color is replaced by the pair (color, multiset of
neighbor colors) until nothing splits.  If the color histograms ever differ
the branch is dead.  Otherwise the first smallest non-singleton class is
split by individualizing its lowest vertex in G against each vertex of the
same class in H in turn.

At every node the class-respecting bijection (class members paired in
increasing order) is tried first and kept if it checks out edge by edge.
The distance graphs here are built from joins and disjoint unions, so such
a bijection usually works after a handful of individualizations, long
before the partition becomes discrete.
"""

from __future__ import annotations

from collections import Counter

from .config import DEFAULT_ISO_NODE_BUDGET, DEFAULT_MAX_ISO_VERTICES
from .errors import RTDGError, SizeLimitError
from .graph import Graph, is_isomorphism


class IsomorphismBudgetExceeded(RTDGError):
    pass


def _refine(G: Graph, H: Graph, cg: list[int], ch: list[int]):
    ncolors = len(set(cg))
    while True:
        sg = [(cg[v], tuple(sorted(Counter(cg[u] for u in G.neighbors[v]).items()))) for v in range(G.vertex_count)]
        sh = [(ch[v], tuple(sorted(Counter(ch[u] for u in H.neighbors[v]).items()))) for v in range(H.vertex_count)]
        if Counter(sg) != Counter(sh):
            return None
        index = {s: i for i, s in enumerate(sorted(set(sg)))}
        cg = [index[s] for s in sg]
        ch = [index[s] for s in sh]
        if len(index) == ncolors:
            return cg, ch
        ncolors = len(index)


def _cellwise_mapping(cg, ch):
    cells_h: dict[int, list[int]] = {}
    for v, c in enumerate(ch):
        cells_h.setdefault(c, []).append(v)
    cursor = {c: 0 for c in cells_h}
    mapping = []
    for c in cg:
        mapping.append(cells_h[c][cursor[c]])
        cursor[c] += 1
    return mapping


def refine_colors(G: Graph) -> list[int]:
    """Stable coloring of G alone (degree refinement iterated to a fixpoint)."""
    cg, _ = _refine(G, G, [0] * G.vertex_count, [0] * G.vertex_count)
    return cg


def are_isomorphic(
    G: Graph,
    H: Graph,
    node_budget: int = DEFAULT_ISO_NODE_BUDGET,
    max_vertices: int = DEFAULT_MAX_ISO_VERTICES,
) -> list[int] | None:
    """An isomorphism G -> H as a list (mapping[v] = image of v), or None.

    None is a definitive answer: the search is exhaustive.  The returned
    mapping has already been checked edge by edge.
    """
    total = G.vertex_count + H.vertex_count
    if total > max_vertices:
        raise SizeLimitError("isomorphism instance", total, max_vertices)
    if G.vertex_count != H.vertex_count or G.edge_count != H.edge_count:
        return None
    if sorted(map(len, G.neighbors)) != sorted(map(len, H.neighbors)):
        return None
    n = G.vertex_count
    nodes = 0

    def search(cg, ch):
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise IsomorphismBudgetExceeded(f"isomorphism search exceeded {node_budget} nodes")
        refined = _refine(G, H, cg, ch)
        if refined is None:
            return None
        cg, ch = refined
        mapping = _cellwise_mapping(cg, ch)
        if is_isomorphism(G, H, mapping):
            return mapping
        sizes = Counter(cg)
        splittable = [(size, c) for c, size in sizes.items() if size > 1]
        if not splittable:
            return None
        _, cell = min(splittable)
        v = min(i for i in range(n) if cg[i] == cell)
        fresh = len(sizes)
        cg2 = list(cg)
        cg2[v] = fresh
        for u in (i for i in range(n) if ch[i] == cell):
            ch2 = list(ch)
            ch2[u] = fresh
            found = search(cg2, ch2)
            if found is not None:
                return found
        return None

    mapping = search([0] * n, [0] * n)
    if mapping is not None and not is_isomorphism(G, H, mapping):
        raise AssertionError("isomorphism witness failed re-verification")
    return mapping
