"""Weighted Turán numbers for the min- and product-edge weightings of K_n.

Both weightings are induced by a vertex weighting ``W``: an edge ``uv`` gets
``min(W(u), W(v))`` or ``W(u) * W(v)``.  The extremal K_l-free graphs are
complete (l-1)-partite in both cases; for the min weighting the optimal
partition is the round-robin split of the vertices in weight order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .graphs import Graph, GraphError
from .partition import IndexPartition, partition_maximize_products
from .rationals import as_rational


@dataclass(frozen=True)
class VertexWeighting:
    """Non-negative exact weights ``W(v_0..v_{n-1})`` in input order.

    ``order[p]`` is the input index of the vertex at position ``p`` of the
    non-increasing order; ties keep input order.
    """

    weights: tuple[Fraction, ...]

    def __post_init__(self):
        ws = tuple(as_rational(w) for w in self.weights)
        if any(w < 0 for w in ws):
            raise ValueError("vertex weights must be non-negative")
        object.__setattr__(self, "weights", ws)

    @classmethod
    def of(cls, *weights) -> "VertexWeighting":
        if len(weights) == 1 and not isinstance(weights[0], (int, str, Fraction)):
            weights = tuple(weights[0])
        return cls(tuple(weights))

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def order(self) -> tuple[int, ...]:
        return tuple(sorted(range(self.n), key=lambda i: (-self.weights[i], i)))

    @property
    def sorted_weights(self) -> tuple[Fraction, ...]:
        return tuple(self.weights[i] for i in self.order)

    def __getitem__(self, v: int) -> Fraction:
        return self.weights[v]

    def total(self, vertices=None) -> Fraction:
        if vertices is None:
            vertices = range(self.n)
        return sum((self.weights[v] for v in vertices), Fraction(0))


class EdgeWeightKind(enum.Enum):
    MIN = "min"
    PRODUCT = "product"


@dataclass(frozen=True)
class WeightedEdgeFunction:
    kind: EdgeWeightKind
    base: VertexWeighting

    def __call__(self, u: int, v: int) -> Fraction:
        a, b = self.base[u], self.base[v]
        if self.kind is EdgeWeightKind.MIN:
            return min(a, b)
        return a * b


def min_weight(W: VertexWeighting) -> WeightedEdgeFunction:
    return WeightedEdgeFunction(EdgeWeightKind.MIN, W)


def product_weight(W: VertexWeighting) -> WeightedEdgeFunction:
    return WeightedEdgeFunction(EdgeWeightKind.PRODUCT, W)


def weight_of(g: Graph, w: WeightedEdgeFunction) -> Fraction:
    if g.n != w.base.n:
        raise ValueError(f"graph has {g.n} vertices but the weighting has {w.base.n}")
    return sum((w(u, v) for u, v in g.edges), Fraction(0))


class BGraph(NamedTuple):
    graph: Graph
    parts: tuple[tuple[int, ...], ...]


def build_B(clique: int, W: VertexWeighting) -> BGraph:
    """Round-robin complete (clique-1)-partite graph.

    The vertex at 1-based position ``i`` of the non-increasing weight order
    goes to part ``i mod (clique - 1)``.  Vertex ids in the result are input
    indices; ``parts[0]`` holds the heaviest vertex.
    """
    if clique < 3:
        raise GraphError(f"forbidden clique order must be at least 3, got {clique}")
    r = clique - 1
    parts: list[list[int]] = [[] for _ in range(r)]
    for pos, v in enumerate(W.order):
        parts[pos % r].append(v)
    part_of = {v: j for j, p in enumerate(parts) for v in p}
    edges = frozenset(
        (u, v) for u in range(W.n) for v in range(u + 1, W.n) if part_of[u] != part_of[v]
    )
    return BGraph(Graph(W.n, edges), tuple(tuple(sorted(p)) for p in parts if p))


def ex_min(W: VertexWeighting, clique: int) -> Fraction:
    """Largest min-weight of a K_clique-free graph on the weighted vertices."""
    return weight_of(build_B(clique, W).graph, min_weight(W))


def ex_prod(W: VertexWeighting, clique: int) -> tuple[Fraction, IndexPartition]:
    """Largest product-weight of a K_clique-free graph, with the optimal vertex partition."""
    if clique < 3:
        raise GraphError(f"forbidden clique order must be at least 3, got {clique}")
    return partition_maximize_products(W.weights, clique - 1)


def complete_multipartite_on(partition: IndexPartition, n: int) -> Graph:
    part_of = {}
    for j, block in enumerate(partition.blocks):
        for v in block:
            part_of[v] = j
    return Graph(
        n,
        frozenset((u, v) for u in range(n) for v in range(u + 1, n) if part_of[u] != part_of[v]),
    )


def duplicate_vertex(g: Graph, x: int, y: int) -> Graph:
    """Replace ``y`` by a copy of ``x``: ``y`` keeps its id but takes ``N(x)``.

    Only defined for distinct non-adjacent ``x`` and ``y``; then a K_l-free
    graph stays K_l-free.
    """
    if x == y:
        raise GraphError("cannot duplicate a vertex onto itself")
    if g.has_edge(x, y):
        raise GraphError(f"vertices {x} and {y} are adjacent")
    kept = {e for e in g.edges if y not in e}
    kept.update((min(u, y), max(u, y)) for u in g.neighbors(x))
    return Graph(g.n, frozenset(kept))
