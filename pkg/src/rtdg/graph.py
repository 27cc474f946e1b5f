"""Concrete simple graphs and brute-force distance graphs G(S, D)."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .config import DEFAULT_MAX_POINTS
from .errors import RTDGError
from .spaces import (
    DistanceSet,
    Point,
    SpaceSpec,
    as_distance_set,
    distance_matrix,
    enumerate_space,
)


class Graph:
    """Immutable undirected simple graph on vertices 0..vertex_count-1.

    ``labels`` holds the point behind each vertex for distance graphs and is
    None for synthetic graphs (e.g. evaluated expressions).
    """

    __slots__ = ("vertex_count", "neighbors", "labels", "space", "distances", "_masks", "_edge_count")

    def __init__(self, vertex_count: int, neighbors: Sequence[Iterable[int]], labels=None, space=None, distances=None):
        if len(neighbors) != vertex_count:
            raise ValueError("need one neighbor set per vertex")
        nbrs = tuple(frozenset(nb) for nb in neighbors)
        for v, nb in enumerate(nbrs):
            if v in nb:
                raise ValueError(f"self-loop at vertex {v}")
            for u in nb:
                if not 0 <= u < vertex_count or v not in nbrs[u]:
                    raise ValueError(f"adjacency is not symmetric at {v}-{u}")
        if labels is not None and len(labels) != vertex_count:
            raise ValueError("need one label per vertex")
        self.vertex_count = vertex_count
        self.neighbors = nbrs
        self.labels = tuple(labels) if labels is not None else None
        self.space = space
        self.distances = distances
        self._masks = None
        self._edge_count = sum(len(nb) for nb in nbrs) // 2

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]], **kw) -> Graph:
        nbrs = [set() for _ in range(vertex_count)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(vertex_count, nbrs, **kw)

    @classmethod
    def from_adjacency_matrix(cls, adj: np.ndarray, **kw) -> Graph:
        adj = np.asarray(adj, dtype=bool)
        return cls(adj.shape[0], [np.flatnonzero(row).tolist() for row in adj], **kw)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    @property
    def masks(self) -> tuple[int, ...]:
        """Neighborhoods as int bitsets, built on first use."""
        if self._masks is None:
            self._masks = tuple(sum(1 << u for u in nb) for nb in self.neighbors)
        return self._masks

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbors[u]

    def edges(self) -> list[tuple[int, int]]:
        """Edges (u, v) with u < v, sorted lexicographically."""
        return [(u, v) for u in range(self.vertex_count) for v in sorted(self.neighbors[u]) if u < v]

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def subgraph(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph, vertices renumbered in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        nbrs = [[index[u] for u in self.neighbors[v] if u in index] for v in vertices]
        labels = [self.labels[v] for v in vertices] if self.labels is not None else None
        return Graph(len(vertices), nbrs, labels=labels, space=self.space, distances=self.distances)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.vertex_count == other.vertex_count and self.neighbors == other.neighbors

    def __hash__(self):
        return hash((self.vertex_count, self.neighbors))

    def __repr__(self):
        return f"Graph(vertex_count={self.vertex_count}, edge_count={self.edge_count})"

    # -- serialization --------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "space": str(self.space) if self.space is not None else None,
            "distances": list(self.distances.values) if self.distances is not None else None,
            "vertex_count": self.vertex_count,
            "labels": [list(p.coords) for p in self.labels] if self.labels is not None else None,
            "edges": [list(e) for e in self.edges()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> Graph:
        space = SpaceSpec.parse(data["space"]) if data.get("space") else None
        distances = DistanceSet(tuple(data["distances"])) if data.get("distances") is not None else None
        labels = None
        if data.get("labels") is not None:
            if space is None:
                raise RTDGError("graph JSON has labels but no space")
            labels = [Point(tuple(c), space) for c in data["labels"]]
        return cls.from_edges(
            data["vertex_count"], [tuple(e) for e in data["edges"]], labels=labels, space=space, distances=distances
        )

    @classmethod
    def from_json(cls, text: str) -> Graph:
        return cls.from_dict(json.loads(text))

    def to_dot(self, name="G") -> str:
        lines = [f"graph {name} {{"]
        for v in range(self.vertex_count):
            label = str(self.labels[v]) if self.labels is not None else str(v)
            lines.append(f'  {v} [label="{label}"];')
        for u, v in self.edges():
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_distance_graph(space: SpaceSpec, D, max_points: int = DEFAULT_MAX_POINTS) -> Graph:
    """G(space, D): vertices in canonical order, x ~ y iff rho(x, y) is in D."""
    D = as_distance_set(D).validate(space)
    points = enumerate_space(space, max_points)
    dist = distance_matrix(space, max_points)
    adj = np.isin(dist, np.array(D.values, dtype=dist.dtype)) if D.values else np.zeros(dist.shape, dtype=bool)
    return Graph.from_adjacency_matrix(adj, labels=points, space=space, distances=D)


def degree_sequence(G: Graph) -> list[int]:
    return [len(nb) for nb in G.neighbors]


def is_regular(G: Graph) -> int | None:
    """The common degree if G is regular, else None (0 for the null graph)."""
    degrees = set(degree_sequence(G))
    if len(degrees) > 1:
        return None
    return degrees.pop() if degrees else 0


@dataclass(frozen=True)
class ComponentPartition:
    component_id: tuple[int, ...]
    component_count: int
    component_sizes: tuple[int, ...]

    def members(self) -> list[list[int]]:
        out = [[] for _ in range(self.component_count)]
        for v, c in enumerate(self.component_id):
            out[c].append(v)
        return out


def connected_components(G: Graph) -> ComponentPartition:
    """Breadth-first labelling; component ids follow the smallest member."""
    comp = [-1] * G.vertex_count
    sizes = []
    for start in range(G.vertex_count):
        if comp[start] >= 0:
            continue
        cid = len(sizes)
        comp[start] = cid
        queue = deque([start])
        size = 0
        while queue:
            v = queue.popleft()
            size += 1
            for u in G.neighbors[v]:
                if comp[u] < 0:
                    comp[u] = cid
                    queue.append(u)
        sizes.append(size)
    return ComponentPartition(tuple(comp), len(sizes), tuple(sizes))


def verify_embedding(G: Graph, H: Graph, mapping: Sequence[int]) -> bool:
    """True iff ``mapping`` sends every edge of G to an edge of H.

    ``mapping[v]`` is the image of vertex v; it must be injective.
    """
    if len(mapping) != G.vertex_count:
        raise ValueError("mapping must cover every vertex of G")
    if len(set(mapping)) != len(mapping):
        raise ValueError("mapping is not injective")
    if any(not 0 <= w < H.vertex_count for w in mapping):
        raise ValueError("mapping leaves the vertex range of H")
    return all(H.has_edge(mapping[u], mapping[v]) for u, v in G.edges())


def is_isomorphism(G: Graph, H: Graph, mapping: Sequence[int]) -> bool:
    """Edge-by-edge check that ``mapping`` is an isomorphism G -> H."""
    if G.vertex_count != H.vertex_count or G.edge_count != H.edge_count:
        return False
    if sorted(mapping) != list(range(H.vertex_count)):
        return False
    # a bijection carrying edges into edges with equal edge counts carries
    # non-edges into non-edges as well
    return all(H.has_edge(mapping[u], mapping[v]) for u, v in G.edges())


def complete_graph(n: int) -> Graph:
    return Graph(n, [[u for u in range(n) if u != v] for v in range(n)])


def empty_graph(n: int) -> Graph:
    return Graph(n, [()] * n)


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
