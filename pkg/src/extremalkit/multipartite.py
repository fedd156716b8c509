"""Turán numbers ex(K_{k1..kr}, K_l) with a complete multipartite host."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, GraphError
from .partition import IndexPartition, partition_maximize_products


@dataclass(frozen=True)
class HostSpec:
    part_sizes: tuple[int, ...]
    clique: int

    def __post_init__(self):
        sizes = tuple(int(k) for k in self.part_sizes)
        if not sizes:
            raise GraphError("host needs at least one part")
        if any(k < 1 for k in sizes):
            raise GraphError(f"part sizes must be positive, got {list(sizes)}")
        if self.clique < 3:
            raise GraphError(f"forbidden clique order must be at least 3, got {self.clique}")
        object.__setattr__(self, "part_sizes", sizes)

    @property
    def r(self) -> int:
        return len(self.part_sizes)


def ex_multipartite(spec: HostSpec) -> tuple[int, IndexPartition]:
    """Maximum edges of a K_l-free subgraph of the host, and the part merging that attains it.

    Merging the host's parts into at most ``l - 1`` groups and keeping every
    edge between different groups is optimal, so the answer is the product-
    weight partition optimum with the part sizes as weights.  When ``l - 1 >= r``
    every part stays on its own and the whole host survives.
    """
    value, partition = partition_maximize_products(spec.part_sizes, spec.clique - 1)
    assert value.denominator == 1
    return int(value), partition


def merged_witness_graph(spec: HostSpec, partition: IndexPartition) -> Graph:
    """Complete multipartite subgraph of the host obtained by merging parts per ``partition``."""
    if len(partition.blocks) > spec.clique - 1:
        raise GraphError(
            f"{len(partition.blocks)} groups would contain K_{spec.clique}; at most {spec.clique - 1} allowed"
        )
    if partition.size != spec.r:
        raise GraphError(f"partition covers {partition.size} parts, host has {spec.r}")
    group_of_part = partition.assignment()
    group = [group_of_part[i] for i, k in enumerate(spec.part_sizes) for _ in range(k)]
    n = len(group)
    return Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n) if group[u] != group[v]))
