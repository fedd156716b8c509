"""Partition a list of non-negative rationals into at most ``m`` blocks so as to
maximise the sum of pairwise products of block sums.

Since ``sum_{P != P'} S_P S_P' = (S^2 - sum_P S_P^2) / 2`` with ``S`` the grand
total, this is the same as minimising the sum of squared block sums, i.e.
multiway number partitioning with a quadratic objective.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .rationals import as_rational


@dataclass(frozen=True)
class IndexPartition:
    """Disjoint blocks of indices covering ``0..size-1``, at most ``m`` of them.

    The canonical form drops empty blocks, sorts each block and orders the
    blocks by their smallest element.
    """

    blocks: tuple[tuple[int, ...], ...]
    m: int

    def __post_init__(self):
        blocks = [tuple(sorted(b)) for b in self.blocks if len(b)]
        blocks.sort()
        seen = [i for b in blocks for i in b]
        if len(seen) != len(set(seen)):
            raise ValueError("blocks overlap")
        if sorted(seen) != list(range(len(seen))):
            raise ValueError("blocks must cover 0..size-1")
        if len(blocks) > self.m:
            raise ValueError(f"{len(blocks)} blocks exceed the limit {self.m}")
        object.__setattr__(self, "blocks", tuple(blocks))

    @classmethod
    def from_assignment(cls, assignment: Sequence[int], m: int) -> "IndexPartition":
        groups: dict[int, list[int]] = {}
        for idx, b in enumerate(assignment):
            groups.setdefault(b, []).append(idx)
        return cls(tuple(tuple(g) for g in groups.values()), m)

    @property
    def size(self) -> int:
        return sum(len(b) for b in self.blocks)

    def block_sums(self, values) -> list:
        return [sum((values[i] for i in b), Fraction(0)) for b in self.blocks]

    def assignment(self) -> list[int]:
        out = [0] * self.size
        for j, b in enumerate(self.blocks):
            for i in b:
                out[i] = j
        return out

    def as_lists(self) -> list[list[int]]:
        return [list(b) for b in self.blocks]


def cross_product_sum(sums) -> Fraction:
    """Sum over unordered pairs of distinct blocks of the product of their sums."""
    sums = [as_rational(s) for s in sums]
    total = sum(sums, Fraction(0))
    return (total * total - sum(s * s for s in sums)) / 2


def partition_value(values, partition: IndexPartition) -> Fraction:
    return cross_product_sum(partition.block_sums([as_rational(v) for v in values]))


def _scaled(values) -> tuple[list[int], int]:
    fracs = [as_rational(v) for v in values]
    if any(v < 0 for v in fracs):
        raise ValueError("values must be non-negative")
    scale = lcm(*(f.denominator for f in fracs)) if fracs else 1
    return [int(f * scale) for f in fracs], scale


def _waterfill_exceeds(sums: list[int], remaining: int, cutoff: int) -> bool:
    """Whether the continuous lower bound on the final sum of squares is >= cutoff.

    The relaxation pours ``remaining`` into the lowest blocks until they reach a
    common level; blocks above that level keep their current sum.
    """
    s = sorted(sums)
    m = len(s)
    pool = remaining
    j = 0
    # grow the set of flooded blocks while the level stays above the next sum
    while j < m:
        pool += s[j]
        j += 1
        if j == m or pool <= s[j] * j:
            break
    above = sum(x * x for x in s[j:])
    # bound = above + pool^2 / j
    return above * j + pool * pool >= cutoff * j


def partition_maximize_products(values, m: int) -> tuple[Fraction, IndexPartition]:
    """Exact optimum of the pairwise block-product sum over partitions into <= m blocks.

    Branch and bound over the values in non-increasing order.  Each value is
    tried in a fresh block first, then in the open blocks from the highest
    index down; the first block is fixed for the largest value and at most one
    empty block is ever tried.  Among optimal partitions the one returned is
    the first met in that order.
    """
    if m < 1:
        raise ValueError("need at least one block")
    ints, scale = _scaled(values)
    n = len(ints)
    if n == 0:
        return Fraction(0), IndexPartition((), m)
    order = sorted(range(n), key=lambda i: (-ints[i], i))
    vals = [ints[i] for i in order]
    suffix = [0] * (n + 1)
    for p in range(n - 1, -1, -1):
        suffix[p] = suffix[p + 1] + vals[p]
    # trailing zeros never change the objective; they are placed greedily at the end
    last_nonzero = max((p for p in range(n) if vals[p] > 0), default=-1)

    heur_value, _ = partition_heuristic(ints, m)
    total = suffix[0]
    heur_sq = total * total - 2 * int(heur_value)
    cutoff = heur_sq + 1
    best_assign: list[int] | None = None

    sums = [0] * m
    assign = [0] * n

    def place_zeros(used: int) -> None:
        for p in range(last_nonzero + 1, n):
            if used < m:
                assign[p] = used
                used += 1
            else:
                assign[p] = used - 1

    def dfs(p: int, used: int, sq: int) -> None:
        nonlocal cutoff, best_assign
        if p > last_nonzero:
            if sq < cutoff:
                cutoff = sq
                place_zeros(used)
                best_assign = assign[:]
            return
        if _waterfill_exceeds(sums, suffix[p], cutoff):
            return
        v = vals[p]
        choices = ([used] if used < m else []) + list(range(used - 1, -1, -1))
        for b in choices:
            s = sums[b]
            new_sq = sq + 2 * s * v + v * v
            if new_sq >= cutoff:
                continue
            sums[b] = s + v
            assign[p] = b
            dfs(p + 1, used + (b == used), new_sq)
            sums[b] = s

    dfs(0, 0, 0)
    assert best_assign is not None, "heuristic cutoff excluded every partition"
    by_index = [0] * n
    for p, i in enumerate(order):
        by_index[i] = best_assign[p]
    partition = IndexPartition.from_assignment(by_index, m)
    value = Fraction(total * total - cutoff, 2 * scale * scale)
    return value, partition


def _lpt(ints: list[int], m: int) -> list[int]:
    order = sorted(range(len(ints)), key=lambda i: (-ints[i], i))
    heap = [(0, b) for b in range(m)]
    assign = [0] * len(ints)
    for i in order:
        s, b = heapq.heappop(heap)
        assign[i] = b
        heapq.heappush(heap, (s + ints[i], b))
    return assign


def _differencing(ints: list[int], m: int) -> list[int]:
    """Multiway Karmarkar-Karp: repeatedly merge the two tuples of largest spread."""
    heap = []
    for counter, i in enumerate(sorted(range(len(ints)), key=lambda i: (-ints[i], i))):
        sums = [ints[i]] + [0] * (m - 1)
        members = [[i]] + [[] for _ in range(m - 1)]
        heap.append((-ints[i], counter, sums, members))
    heapq.heapify(heap)
    counter = len(heap)
    while len(heap) > 1:
        _, _, sa, ma = heapq.heappop(heap)
        _, _, sb, mb = heapq.heappop(heap)
        # largest of one with smallest of the other; both lists are kept descending
        merged = sorted(
            ((sa[j] + sb[m - 1 - j], ma[j] + mb[m - 1 - j]) for j in range(m)),
            key=lambda t: -t[0],
        )
        sums = [s for s, _ in merged]
        members = [g for _, g in merged]
        heapq.heappush(heap, (-(sums[0] - sums[-1]), counter, sums, members))
        counter += 1
    assign = [0] * len(ints)
    if heap:
        for b, group in enumerate(heap[0][3]):
            for i in group:
                assign[i] = b
    return assign


def partition_heuristic(values, m: int) -> tuple[Fraction, IndexPartition]:
    """Fast feasible partition: the better of LPT and multiway differencing.

    LPT puts each value, largest first, into the currently lightest block.
    The returned value never exceeds the exact optimum.
    """
    if m < 1:
        raise ValueError("need at least one block")
    ints, scale = _scaled(values)
    if not ints:
        return Fraction(0), IndexPartition((), m)
    best = None
    for assign in (_lpt(ints, m), _differencing(ints, m)):
        part = IndexPartition.from_assignment(assign, m)
        sums = [sum(ints[i] for i in b) for b in part.blocks]
        val = cross_product_sum(sums)
        if best is None or val > best[0]:
            best = (val, part)
    return best[0] / (scale * scale), best[1]
