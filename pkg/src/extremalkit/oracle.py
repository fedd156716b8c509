"""Brute-force ground truth for the extremal quantities.

Everything here searches subgraphs directly, edge by edge, and shares no code
with the closed forms it is used to check.  Sizes are capped; exceeding a cap
is an error rather than a silent approximation.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .graphs import Graph
from .weighted import VertexWeighting, WeightedEdgeFunction, min_weight

MAX_VERTICES = 8
MAX_VERTICES_T = 7
MAX_HOST_EDGES = 24


class CapExceeded(ValueError):
    pass


class Infeasible(Exception):
    """No K_l-free graph with the requested number of edges exists."""


def _closes_clique(adj: list[int], u: int, v: int, clique: int) -> bool:
    """Would adding ``uv`` create a K_clique?  Checks cliques through both endpoints."""
    common = adj[u] & adj[v]
    need = clique - 2
    if need <= 0:
        return True
    members = [x for x in range(len(adj)) if common >> x & 1]
    if len(members) < need:
        return False
    for combo in combinations(members, need):
        if all(adj[a] >> b & 1 for a, b in combinations(combo, 2)):
            return True
    return False


def _edge_graph(n: int, chosen) -> Graph:
    return Graph(n, frozenset(chosen))


def max_weight_clique_free(n: int, w: WeightedEdgeFunction, clique: int) -> tuple[Fraction, Graph]:
    """max w(G) over K_clique-free G on n vertices, with a maximising graph."""
    if n > MAX_VERTICES:
        raise CapExceeded(f"oracle is capped at n <= {MAX_VERTICES}, got {n}")
    if w.base.n != n:
        raise ValueError("weighting size does not match n")
    if clique < 2:
        raise ValueError("clique order must be at least 2")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    weights = {e: w(*e) for e in pairs}
    pairs.sort(key=lambda e: (-weights[e], e))
    wts = [weights[e] for e in pairs]

    adj = [0] * n
    chosen: list[tuple[int, int]] = []
    best = [Fraction(-1), []]

    def dfs(p: int, cur: Fraction) -> None:
        # bound: every later edge that could still be added without a clique
        addable = [q for q in range(p, len(pairs)) if not _closes_clique(adj, *pairs[q], clique)]
        if cur + sum((wts[q] for q in addable), Fraction(0)) <= best[0]:
            return
        if not addable:
            best[0], best[1] = cur, chosen[:]
            return
        q = addable[0]
        u, v = pairs[q]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        chosen.append((u, v))
        dfs(q + 1, cur + wts[q])
        chosen.pop()
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        # leaving q out for good
        dfs(q + 1, cur)

    dfs(0, Fraction(0))
    return best[0], _edge_graph(n, best[1])


def max_weight_clique_free_with_t_edges(n: int, W: VertexWeighting, clique: int, t: int) -> Fraction:
    """max min-weight over K_clique-free graphs with exactly ``t`` edges.

    Raises :class:`Infeasible` if no such graph exists.
    """
    if n > MAX_VERTICES_T:
        raise CapExceeded(f"t-constrained oracle is capped at n <= {MAX_VERTICES_T}, got {n}")
    total_pairs = n * (n - 1) // 2
    if not 0 <= t <= total_pairs:
        raise ValueError(f"t must lie in 0..{total_pairs}")
    w = min_weight(W)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    pairs.sort(key=lambda e: (-w(*e), e))
    wts = [w(*e) for e in pairs]
    adj = [0] * n
    best: list = [None]

    def dfs(p: int, count: int, cur: Fraction) -> None:
        if count == t:
            if best[0] is None or cur > best[0]:
                best[0] = cur
            return
        need = t - count
        addable = [q for q in range(p, len(pairs)) if not _closes_clique(adj, *pairs[q], clique)]
        if len(addable) < need:
            return
        if best[0] is not None and cur + sum(wts[q] for q in addable[:need]) <= best[0]:
            return
        q = addable[0]
        u, v = pairs[q]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        dfs(q + 1, count + 1, cur + wts[q])
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        dfs(q + 1, count, cur)

    dfs(0, 0, Fraction(0))
    if best[0] is None:
        raise Infeasible(f"no K_{clique}-free graph on {n} vertices has {t} edges")
    return best[0]


def max_edges_clique_free_subgraph(host: Graph, clique: int) -> tuple[int, Graph]:
    """Largest K_clique-free spanning subgraph of ``host``, found exhaustively."""
    if host.m > MAX_HOST_EDGES:
        raise CapExceeded(f"host oracle is capped at {MAX_HOST_EDGES} edges, got {host.m}")
    pairs = sorted(host.edges)
    adj = [0] * host.n
    chosen: list[tuple[int, int]] = []
    best = [-1, []]

    def dfs(p: int) -> None:
        addable = [q for q in range(p, len(pairs)) if not _closes_clique(adj, *pairs[q], clique)]
        if len(chosen) + len(addable) <= best[0]:
            return
        if not addable:
            best[0], best[1] = len(chosen), chosen[:]
            return
        q = addable[0]
        u, v = pairs[q]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        chosen.append((u, v))
        dfs(q + 1)
        chosen.pop()
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        dfs(q + 1)

    dfs(0)
    return best[0], _edge_graph(host.n, best[1])
