"""Symbolic graph expressions for the closed-form distance-graph structures.

Three node kinds:

``CompleteMultipartite(r, m)``
    K_r(m), r parts of m vertices each, edges between distinct parts.
``Copies(c, child)``
    c disjoint copies of the child (written ``c*E``).
``JoinPower(child, m)``
    [E]^m, m copies of the child with every edge between distinct copies.

Text form::

    Expr := INT "*" Expr | "[" Expr "]^" INT | "K_" INT "(" INT ")"

>>> str(expr_theorem_zq(3, 4, (1, 3)))
'3*[3*K_3(1)]^3'
>>> expr_parse("2*[K_2(1)]^2")
Copies(c=2, child=JoinPower(child=CompleteMultipartite(r=2, m=1), m=2))
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .config import DEFAULT_MAX_POINTS
from .errors import ExprParseError, SizeLimitError
from .graph import Graph
from .spaces import SpaceSpec, as_distance_set


@dataclass(frozen=True)
class CompleteMultipartite:
    r: int
    m: int

    def __post_init__(self):
        if self.r < 1 or self.m < 1:
            raise ValueError(f"K_r(m) needs r, m >= 1, got K_{self.r}({self.m})")

    def __str__(self):
        return expr_to_string(self)


@dataclass(frozen=True)
class Copies:
    c: int
    child: "GraphExpr"

    def __post_init__(self):
        if self.c < 1:
            raise ValueError(f"copy count must be >= 1, got {self.c}")

    def __str__(self):
        return expr_to_string(self)


@dataclass(frozen=True)
class JoinPower:
    child: "GraphExpr"
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"join power must be >= 1, got {self.m}")

    def __str__(self):
        return expr_to_string(self)


GraphExpr = Union[CompleteMultipartite, Copies, JoinPower]


def normalize(E: GraphExpr) -> GraphExpr:
    """Drop unit Copies and unit JoinPower nodes, bottom up."""
    if isinstance(E, CompleteMultipartite):
        return E
    child = normalize(E.child)
    if isinstance(E, Copies):
        return child if E.c == 1 else Copies(E.c, child)
    return child if E.m == 1 else JoinPower(child, E.m)


# -- theorem formulas ---------------------------------------------------------


def _nest(atom: GraphExpr, levels: Sequence[tuple[int, int]], outer: int) -> GraphExpr:
    """outer * [g_k * [ ... [g_2 * atom]^{p_2} ... ]^{p_k}]; levels = [(g_i, p_i)]."""
    E = atom
    for gap, power in levels:
        E = JoinPower(Copies(gap, E), power)
    return normalize(Copies(outer, E))


def expr_theorem_product(sizes: Sequence[int], D) -> GraphExpr:
    """G(X_1 x ... x X_n, D) for |X_i| = sizes[i-1].

    Empty products (gap factors between consecutive distances, and the part
    size when d_1 = 1) count as 1.
    """
    sizes = tuple(sizes)
    space = SpaceSpec.product(sizes)
    D = as_distance_set(D).validate(space)
    if not D.values:
        return CompleteMultipartite(1, space.cardinality())

    def span(lo, hi):  # q_lo * ... * q_hi, 1-based, empty when lo > hi
        return math.prod(sizes[lo - 1 : hi])

    d = D.values
    atom = CompleteMultipartite(sizes[d[0] - 1], span(1, d[0] - 1))
    levels = [(span(a + 1, b - 1), sizes[b - 1]) for a, b in zip(d, d[1:])]
    return _nest(atom, levels, span(d[-1] + 1, len(sizes)))


def expr_theorem_zq(q: int, n: int, D) -> GraphExpr:
    """G(Z_q^n, D) = q^{n-d_k} [q^{d_k-d_{k-1}-1} [ ... [q^{d_2-d_1-1} K_q(q^{d_1-1})]^q ... ]^q]^q."""
    space = SpaceSpec.zq(q, n)
    D = as_distance_set(D).validate(space)
    if not D.values:
        return CompleteMultipartite(1, q**n)
    d = D.values
    atom = CompleteMultipartite(q, q ** (d[0] - 1))
    levels = [(q ** (b - a - 1), q) for a, b in zip(d, d[1:])]
    return _nest(atom, levels, q ** (n - d[-1]))


def expr_theorem_sn(n: int, D) -> GraphExpr:
    """G(S_n, D) = n!/d_k! [(d_k-1)!/d_{k-1}! [ ... [(d_2-1)!/d_1! K_{d_1}((d_1-1)!)]^{d_2} ... ]^{d_k}."""
    space = SpaceSpec.sn(n)
    D = as_distance_set(D).validate(space)
    f = math.factorial
    if not D.values:
        return CompleteMultipartite(1, f(n))
    d = D.values
    atom = CompleteMultipartite(d[0], f(d[0] - 1))
    levels = [(f(b - 1) // f(a), b) for a, b in zip(d, d[1:])]
    return _nest(atom, levels, f(n) // f(d[-1]))


def expr_theorem(space: SpaceSpec, D) -> GraphExpr:
    if space.kind == "zq":
        return expr_theorem_zq(space.q, space.n, D)
    if space.kind == "sn":
        return expr_theorem_sn(space.n, D)
    return expr_theorem_product(space.sizes, D)


# -- structural analyzers -----------------------------------------------------


def expr_vertex_count(E: GraphExpr) -> int:
    if isinstance(E, CompleteMultipartite):
        return E.r * E.m
    if isinstance(E, Copies):
        return E.c * expr_vertex_count(E.child)
    return E.m * expr_vertex_count(E.child)


def expr_degree(E: GraphExpr) -> int:
    """Common vertex degree (every expression built here is regular)."""
    if isinstance(E, CompleteMultipartite):
        return (E.r - 1) * E.m
    if isinstance(E, Copies):
        return expr_degree(E.child)
    return expr_degree(E.child) + (E.m - 1) * expr_vertex_count(E.child)


def expr_component_count(E: GraphExpr) -> int:
    if isinstance(E, CompleteMultipartite):
        return 1 if E.r >= 2 else E.m
    if isinstance(E, Copies):
        return E.c * expr_component_count(E.child)
    return 1 if E.m >= 2 else expr_component_count(E.child)


def expr_component(E: GraphExpr) -> GraphExpr:
    """Expression for one component, when all components are alike."""
    E = normalize(E)
    if isinstance(E, Copies):
        return expr_component(E.child)
    if isinstance(E, CompleteMultipartite) and E.r == 1:
        return CompleteMultipartite(1, 1)
    return E


def expr_chromatic(E: GraphExpr) -> int:
    if isinstance(E, CompleteMultipartite):
        return E.r
    if isinstance(E, Copies):
        return expr_chromatic(E.child)
    return E.m * expr_chromatic(E.child)


# -- evaluation ---------------------------------------------------------------


def _adjacency(E: GraphExpr) -> np.ndarray:
    if isinstance(E, CompleteMultipartite):
        parts = np.ones((E.r, E.r), dtype=bool) ^ np.eye(E.r, dtype=bool)
        return np.kron(parts, np.ones((E.m, E.m), dtype=bool))
    A = _adjacency(E.child)
    if isinstance(E, Copies):
        return np.kron(np.eye(E.c, dtype=bool), A)
    a = A.shape[0]
    across = np.ones((E.m, E.m), dtype=bool) ^ np.eye(E.m, dtype=bool)
    return np.kron(np.eye(E.m, dtype=bool), A) | np.kron(across, np.ones((a, a), dtype=bool))


def expr_evaluate(E: GraphExpr, max_points: int = DEFAULT_MAX_POINTS) -> Graph:
    """Concrete graph for E with block numbering.

    Children occupy consecutive vertex ranges in order, and so do the parts
    of a multipartite atom: K_2(2) has parts {0, 1} and {2, 3}.
    """
    size = expr_vertex_count(E)
    if size > max_points:
        raise SizeLimitError(f"expression {expr_to_string(E)}", size, max_points)
    return Graph.from_adjacency_matrix(_adjacency(E))


# -- text form ----------------------------------------------------------------


def expr_to_string(E: GraphExpr) -> str:
    if isinstance(E, CompleteMultipartite):
        return f"K_{E.r}({E.m})"
    if isinstance(E, Copies):
        return f"{E.c}*{expr_to_string(E.child)}"
    return f"[{expr_to_string(E.child)}]^{E.m}"


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, token):
        self.skip()
        if not self.text.startswith(token, self.pos):
            raise ExprParseError(f"expected {token!r}", self.pos)
        self.pos += len(token)

    def integer(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ExprParseError("expected an integer", start)
        value = int(self.text[start : self.pos])
        if value < 1:
            raise ExprParseError("multiplicities must be >= 1", start)
        return value

    def expr(self):
        ch = self.peek()
        if ch == "K":
            self.expect("K")
            self.expect("_")
            r = self.integer()
            self.expect("(")
            m = self.integer()
            self.expect(")")
            return CompleteMultipartite(r, m)
        if ch == "[":
            self.expect("[")
            inner = self.expr()
            self.expect("]")
            self.expect("^")
            return JoinPower(inner, self.integer())
        if ch.isdigit():
            c = self.integer()
            self.expect("*")
            return Copies(c, self.expr())
        raise ExprParseError("expected 'K_', '[' or an integer", self.pos)


def expr_parse(text: str) -> GraphExpr:
    """Parse the text form; the result is normalized."""
    p = _Parser(text)
    E = p.expr()
    p.skip()
    if p.pos != len(text):
        raise ExprParseError("trailing input", p.pos)
    return normalize(E)


__all__ = [
    "CompleteMultipartite",
    "Copies",
    "JoinPower",
    "GraphExpr",
    "normalize",
    "expr_theorem",
    "expr_theorem_zq",
    "expr_theorem_sn",
    "expr_theorem_product",
    "expr_vertex_count",
    "expr_degree",
    "expr_component_count",
    "expr_component",
    "expr_chromatic",
    "expr_evaluate",
    "expr_to_string",
    "expr_parse",
]
