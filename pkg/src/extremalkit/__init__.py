"""Weighted Turán numbers, multipartite extremal numbers and maximum
rectilinear crossing numbers of trees, computed exactly."""

from .anneal import AnnealParams, anneal_max_crossings
from .drawings import d_value, draw_diam4, maxcr_diam4, maxcr_spider, spider_identity_sides
from .geometry import Drawing, crossing_count, is_legal, missed_nontrivial_crossings
from .graphs import (
    Diam4Descriptor,
    Graph,
    SpiderDescriptor,
    Tree,
    build_complete_multipartite,
    classify_tree,
    contains_clique,
    thrackle_bound,
    turan_edge_count,
)
from .multipartite import HostSpec, ex_multipartite
from .partition import IndexPartition, partition_heuristic, partition_maximize_products
from .weighted import VertexWeighting, build_B, ex_min, ex_prod

__all__ = [
    "AnnealParams",
    "Diam4Descriptor",
    "Drawing",
    "Graph",
    "HostSpec",
    "IndexPartition",
    "SpiderDescriptor",
    "Tree",
    "VertexWeighting",
    "anneal_max_crossings",
    "build_B",
    "build_complete_multipartite",
    "classify_tree",
    "contains_clique",
    "crossing_count",
    "d_value",
    "draw_diam4",
    "ex_min",
    "ex_multipartite",
    "ex_prod",
    "is_legal",
    "maxcr_diam4",
    "maxcr_spider",
    "missed_nontrivial_crossings",
    "partition_heuristic",
    "partition_maximize_products",
    "spider_identity_sides",
    "thrackle_bound",
    "turan_edge_count",
]
