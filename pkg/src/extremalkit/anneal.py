"""Simulated annealing for drawings with many crossings.

Vertices live on the integer grid ``[-grid, grid]^2``.  A move relocates one
vertex to a random grid point; moves producing an illegal drawing are
rejected outright.  Crossing status and crossing points are maintained
incrementally, so a move costs ``O(deg * m)``.
"""

from __future__ import annotations

import math
import os
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .drawings import formula_value
from .geometry import Drawing, crossing_count, crossing_point_key, segments_properly_cross, strictly_inside
from .graphs import Graph, GraphError, Tree, classify_tree, thrackle_bound

MAX_VERTICES = 32


class PlacementError(RuntimeError):
    """No legal starting placement was found; enlarge the grid."""


@dataclass(frozen=True)
class AnnealParams:
    grid: int = 12
    iterations: int = 20000
    t_start: float = 1.5
    t_end: float = 0.05
    restarts: int = 6
    seed: int = 0
    # stop as soon as a drawing with this many crossings is found
    target: int | None = None

    def __post_init__(self):
        if self.grid < 1 or self.iterations < 1 or self.restarts < 1:
            raise ValueError("grid, iterations and restarts must be positive")
        if not 0 < self.t_end <= self.t_start:
            raise ValueError("need 0 < t_end <= t_start")


class _State:
    def __init__(self, g: Graph, pos: list[tuple[int, int]]):
        self.n = g.n
        self.edges = g.edge_list
        self.pos = pos
        m = len(self.edges)
        self.incident = [[] for _ in range(g.n)]
        for idx, (a, b) in enumerate(self.edges):
            self.incident[a].append(idx)
            self.incident[b].append(idx)
        self.partners = [
            [j for j in range(m) if j != i and not set(self.edges[i]) & set(self.edges[j])] for i in range(m)
        ]
        self.keys: dict[tuple[int, int], tuple] = {}
        self.points: Counter = Counter()
        for i in range(m):
            for j in self.partners[i]:
                if i < j:
                    k = self._key(i, j)
                    if k is not None:
                        self.keys[i, j] = k
                        self.points[k] += 1

    def _key(self, i, j):
        a, b = self.edges[i]
        c, d = self.edges[j]
        P = self.pos
        if segments_properly_cross(P[a], P[b], P[c], P[d]):
            return crossing_point_key(P[a], P[b], P[c], P[d])
        return None

    @property
    def crossings(self) -> int:
        return len(self.keys)

    def legal(self) -> bool:
        P = self.pos
        if len(set(P)) != self.n:
            return False
        for a, b in self.edges:
            for w in range(self.n):
                if w != a and w != b and strictly_inside(P[w], P[a], P[b]):
                    return False
        return all(c == 1 for c in self.points.values())

    def try_move(self, u: int, p: tuple[int, int]):
        """Move ``u`` to ``p`` if the result is legal; return an undo token or None."""
        P = self.pos
        if p in P:
            return None
        for a, b in self.edges:
            if a != u and b != u and strictly_inside(p, P[a], P[b]):
                return None
        for i in self.incident[u]:
            a, b = self.edges[i]
            other = P[b] if a == u else P[a]
            for w in range(self.n):
                if w != a and w != b and strictly_inside(P[w], p, other):
                    return None
        old = P[u]
        P[u] = p
        affected = {(i, j) if i < j else (j, i) for i in self.incident[u] for j in self.partners[i]}
        removed, added = [], []
        for pair in affected:
            if pair in self.keys:
                k = self.keys.pop(pair)
                self.points[k] -= 1
                removed.append((pair, k))
        ok = True
        for pair in affected:
            k = self._key(*pair)
            if k is not None:
                self.keys[pair] = k
                self.points[k] += 1
                added.append((pair, k))
                if self.points[k] > 1:
                    ok = False
        token = (u, old, removed, added)
        if not ok:
            self.undo(token)
            return None
        return token

    def undo(self, token) -> None:
        u, old, removed, added = token
        for pair, k in added:
            del self.keys[pair]
            self.points[k] -= 1
        for pair, k in removed:
            self.keys[pair] = k
            self.points[k] += 1
        self.pos[u] = old


def _random_legal_placement(g: Graph, rng: random.Random, grid: int, tries: int = 2000) -> _State:
    if g.n > (2 * grid + 1) ** 2:
        raise PlacementError(f"{g.n} vertices do not fit on a {2 * grid + 1}-grid")
    for _ in range(tries):
        cells = rng.sample(range((2 * grid + 1) ** 2), g.n)
        pos = [(c % (2 * grid + 1) - grid, c // (2 * grid + 1) - grid) for c in cells]
        state = _State(g, pos)
        if state.legal():
            return state
    raise PlacementError(f"no legal placement of {g.n} vertices on a {2 * grid + 1}-grid")


def _run_once(g: Graph, params: AnnealParams, restart: int) -> tuple[int, list[tuple[int, int]]]:
    rng = random.Random(params.seed * 1_000_003 + restart)
    state = _random_legal_placement(g, rng, params.grid)
    best, best_pos = state.crossings, list(state.pos)
    cap = thrackle_bound(g)
    goal = cap if params.target is None else min(cap, params.target)
    if best >= goal or g.n < 2:
        return best, best_pos
    ratio = (params.t_end / params.t_start) ** (1 / max(1, params.iterations - 1))
    temp = params.t_start
    side = 2 * params.grid + 1
    for _ in range(params.iterations):
        u = rng.randrange(g.n)
        c = rng.randrange(side * side)
        p = (c % side - params.grid, c // side - params.grid)
        before = state.crossings
        token = state.try_move(u, p)
        if token is not None:
            delta = state.crossings - before
            if delta < 0 and rng.random() >= math.exp(delta / temp):
                state.undo(token)
            elif state.crossings > best:
                best, best_pos = state.crossings, list(state.pos)
                if best >= goal:
                    break
        temp *= ratio
    return best, best_pos


def _worker_count() -> int:
    try:
        return max(1, int(os.environ.get("EXTREMALKIT_THREADS", "1")))
    except ValueError:
        return 1


def anneal_max_crossings(tree: Graph, params: AnnealParams | None = None) -> tuple[Drawing, int]:
    """Search for a legal grid drawing with many crossings.

    Returns the best drawing over all restarts and its crossing count,
    re-verified by the exact geometry checks.  Restarts use independent
    generators seeded from ``params.seed``; with a ``target`` the search stops
    at the first restart reaching it.  For spiders and diameter-4 trees the
    result is checked against the closed form, which it can never exceed.
    """
    params = params or AnnealParams()
    if tree.n > MAX_VERTICES:
        raise ValueError(f"annealer is limited to {MAX_VERTICES} vertices")
    results = []
    workers = min(_worker_count(), params.restarts)
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_run_once, [tree] * params.restarts, [params] * params.restarts, range(params.restarts)))
    else:
        for r in range(params.restarts):
            results.append(_run_once(tree, params, r))
            if params.target is not None and results[-1][0] >= params.target:
                break
    if params.target is not None:
        hit = [res for res in results if res[0] >= params.target]
        count, pos = hit[0] if hit else max(results, key=lambda res: res[0])
    else:
        count, pos = max(results, key=lambda res: res[0])
    drawing = Drawing(tree, tuple(pos))
    verified = crossing_count(drawing)
    assert verified == count, f"incremental count {count} disagrees with exact recount {verified}"
    try:
        t = tree if isinstance(tree, Tree) else Tree.from_graph(tree)
    except GraphError:
        return drawing, count
    bound = formula_value(t, classify_tree(t))
    if bound is not None:
        assert count <= bound, f"annealed drawing has {count} crossings, above the closed form {bound}"
    return drawing, count
