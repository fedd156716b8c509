"""Small simple graphs, trees and the tree families used for crossing formulas.

Vertices are dense integers ``0..n-1``.  Edges are stored as sorted pairs in a
frozenset, and adjacency is kept as integer bitmasks so clique searches stay
cheap.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from math import comb
from typing import Iterable


class GraphError(ValueError):
    """Raised for malformed graphs, trees and descriptors."""


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        normed = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {e} has an endpoint outside 0..{self.n - 1}")
            normed.add(_norm_edge(u, v))
        object.__setattr__(self, "edges", frozenset(normed))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> "Graph":
        edges = list(edges)
        normed = {_norm_edge(*e) for e in edges}
        if len(normed) != len(edges):
            raise GraphError("duplicate edges")
        return cls(n, frozenset(normed))

    @cached_property
    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbourhood of each vertex as a bitmask."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def degrees(self) -> list[int]:
        return [self.degree(v) for v in range(self.n)]

    def neighbors(self, v: int) -> list[int]:
        mask = self.adjacency[v]
        return [u for u in range(self.n) if mask >> u & 1]

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def relabel(self, perm) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph(self.n, frozenset(_norm_edge(perm[u], perm[v]) for u, v in self.edges))

    def is_subgraph_of(self, other: "Graph") -> bool:
        return self.n == other.n and self.edges <= other.edges


class Tree(Graph):
    """A connected acyclic :class:`Graph`."""

    def __post_init__(self):
        super().__post_init__()
        if self.n == 0:
            raise GraphError("a tree needs at least one vertex")
        if len(self.edges) != self.n - 1:
            raise GraphError(f"a tree on {self.n} vertices has {self.n - 1} edges, got {len(self.edges)}")
        if len(bfs_distances(self, 0)) != self.n:
            raise GraphError("edge set is not connected")

    @classmethod
    def from_graph(cls, g: Graph) -> "Tree":
        return cls(g.n, g.edges)


def bfs_distances(g: Graph, source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        mask = adj[u]
        while mask:
            low = mask & -mask
            w = low.bit_length() - 1
            mask ^= low
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------


def build_complete_multipartite(*sizes: int) -> Graph:
    """Complete multipartite graph with parts of the given sizes.

    Vertices are numbered part by part, so part ``i`` occupies a contiguous
    block of ids.
    """
    if len(sizes) == 1 and not isinstance(sizes[0], int):
        sizes = tuple(sizes[0])
    if not sizes:
        raise GraphError("need at least one part")
    if any(k < 1 for k in sizes):
        raise GraphError(f"part sizes must be positive, got {list(sizes)}")
    part_of = [i for i, k in enumerate(sizes) for _ in range(k)]
    n = len(part_of)
    edges = frozenset(
        (u, v) for u in range(n) for v in range(u + 1, n) if part_of[u] != part_of[v]
    )
    return Graph(n, edges)


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))


def path_graph(n: int) -> Tree:
    return Tree(n, frozenset((i, i + 1) for i in range(n - 1)))


def contains_clique(g: Graph, size: int) -> bool:
    """True iff ``g`` has ``size`` mutually adjacent vertices."""
    if size < 1:
        raise ValueError("clique order must be at least 1")
    if size == 1:
        return g.n >= 1
    adj = g.adjacency
    return _clique_in(adj, (1 << g.n) - 1, size)


def _clique_in(adj, candidates: int, size: int) -> bool:
    # every vertex of the clique but the first lies in the first one's later neighbours
    if size == 0:
        return True
    if candidates.bit_count() < size:
        return False
    if size == 1:
        return True
    while candidates:
        low = candidates & -candidates
        v = low.bit_length() - 1
        candidates ^= low
        rest = candidates & adj[v]
        if rest.bit_count() >= size - 1 and _clique_in(adj, rest, size - 1):
            return True
        if candidates.bit_count() < size:
            return False
    return False


def thrackle_bound(g: Graph) -> int:
    """Number of unordered pairs of non-adjacent edges, ``C(m,2) - sum C(d(v),2)``."""
    return comb(g.m, 2) - sum(comb(d, 2) for d in g.degrees())


def turan_edge_count(n: int, parts: int) -> int:
    """Edge count of the balanced complete ``parts``-partite graph on ``n`` vertices."""
    if n < 0 or parts < 1:
        raise ValueError("need n >= 0 and at least one part")
    q, r = divmod(n, parts)
    sizes = [q + 1] * r + [q] * (parts - r)
    return (n * n - sum(s * s for s in sizes)) // 2


# ---------------------------------------------------------------------------
# tree families
# ---------------------------------------------------------------------------


def spider_levels(legs) -> tuple[int, ...]:
    """``a_i`` = number of legs of length at least ``i``."""
    legs = list(legs)
    if any(x < 1 for x in legs):
        raise GraphError("leg lengths must be positive")
    depth = max(legs, default=0)
    return tuple(sum(1 for x in legs if x >= i) for i in range(1, depth + 1))


@dataclass(frozen=True)
class SpiderDescriptor:
    legs: tuple[int, ...]

    def __post_init__(self):
        legs = tuple(sorted((int(x) for x in self.legs), reverse=True))
        if len(legs) < 3:
            raise GraphError(f"a spider needs at least 3 legs, got {len(legs)}")
        if legs[-1] < 1:
            raise GraphError("leg lengths must be positive")
        object.__setattr__(self, "legs", legs)

    @property
    def k(self) -> int:
        return len(self.legs)

    @property
    def n(self) -> int:
        return 1 + sum(self.legs)

    @property
    def levels(self) -> tuple[int, ...]:
        return spider_levels(self.legs)

    def leg_vertices(self) -> list[list[int]]:
        """Vertex ids of each leg, listed outward from the centre (vertex 0)."""
        out, nxt = [], 1
        for length in self.legs:
            out.append(list(range(nxt, nxt + length)))
            nxt += length
        return out

    def tree(self) -> Tree:
        edges = []
        for leg in self.leg_vertices():
            prev = 0
            for v in leg:
                edges.append((prev, v))
                prev = v
        return Tree(self.n, frozenset(edges))

    def feet(self) -> list[tuple[int, int]]:
        """The outermost edge of every leg."""
        feet = []
        for leg in self.leg_vertices():
            inner = leg[-2] if len(leg) >= 2 else 0
            feet.append(_norm_edge(inner, leg[-1]))
        return feet


@dataclass(frozen=True)
class Diam4Descriptor:
    """Type ``(c_1..c_k)``: the root's i-th child has ``c_i`` children.

    Zero entries stand for leaves hanging directly off the root.
    """

    children: tuple[int, ...]

    def __post_init__(self):
        cs = tuple(sorted((int(c) for c in self.children), reverse=True))
        if any(c < 0 for c in cs):
            raise GraphError("child counts must be non-negative")
        if sum(1 for c in cs if c >= 1) < 2:
            raise GraphError("a diameter-4 tree needs at least two children with children of their own")
        object.__setattr__(self, "children", cs)

    @property
    def k(self) -> int:
        return len(self.children)

    @property
    def n(self) -> int:
        return 1 + self.k + sum(self.children)

    @property
    def grandchildren(self) -> int:
        return sum(self.children)

    def grandchild_ids(self, i: int) -> list[int]:
        """Ids of the children of child ``i`` (1-based; child ``i`` is vertex ``i``)."""
        start = 1 + self.k + sum(self.children[: i - 1])
        return list(range(start, start + self.children[i - 1]))

    def tree(self) -> Tree:
        edges = [(0, i) for i in range(1, self.k + 1)]
        for i in range(1, self.k + 1):
            edges.extend((i, g) for g in self.grandchild_ids(i))
        return Tree(self.n, frozenset(edges))


@dataclass(frozen=True)
class Caterpillar:
    pass


@dataclass(frozen=True)
class Spider:
    descriptor: SpiderDescriptor


@dataclass(frozen=True)
class Diam4:
    descriptor: Diam4Descriptor
    root: int


@dataclass(frozen=True)
class Other:
    pass


def is_caterpillar(t: Tree) -> bool:
    """Removing all leaves leaves a path (possibly empty or a single vertex)."""
    if t.n <= 2:
        return True
    degs = t.degrees()
    spine = [v for v in range(t.n) if degs[v] > 1]
    spine_set = set(spine)
    for v in spine:
        if sum(1 for u in t.neighbors(v) if u in spine_set) > 2:
            return False
    return True


def _spider_of(t: Tree) -> SpiderDescriptor | None:
    degs = t.degrees()
    centres = [v for v in range(t.n) if degs[v] >= 3]
    if len(centres) != 1:
        return None
    c = centres[0]
    legs = []
    for first in t.neighbors(c):
        prev, cur, length = c, first, 1
        while degs[cur] == 2:
            prev, cur = cur, next(u for u in t.neighbors(cur) if u != prev)
            length += 1
        legs.append(length)
    return SpiderDescriptor(tuple(legs))


def _diam4_of(t: Tree) -> tuple[Diam4Descriptor, int] | None:
    if t.n < 5:
        return None
    ecc = [max(bfs_distances(t, v).values()) for v in range(t.n)]
    if max(ecc) != 4:
        return None
    root = ecc.index(2)
    children = t.neighbors(root)
    counts = [t.degree(u) - 1 for u in children]
    if sum(counts) < 3:
        return None
    return Diam4Descriptor(tuple(counts)), root


def classify_tree(t: Graph) -> tuple:
    """All family labels that apply to ``t``.

    Returns a tuple drawn from :class:`Caterpillar`, :class:`Spider` and
    :class:`Diam4`, or ``(Other(),)`` when none applies.  ``Diam4`` is only
    reported when the root has at least three grandchildren; with fewer the
    tree is a caterpillar.
    """
    if not isinstance(t, Tree):
        t = Tree.from_graph(t)
    labels = []
    if is_caterpillar(t):
        labels.append(Caterpillar())
    spider = _spider_of(t)
    if spider is not None:
        labels.append(Spider(spider))
    d4 = _diam4_of(t)
    if d4 is not None:
        labels.append(Diam4(*d4))
    return tuple(labels) or (Other(),)
