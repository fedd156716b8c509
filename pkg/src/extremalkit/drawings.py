"""Maximum rectilinear crossing numbers of spiders and diameter-4 trees.

Both closed forms start from the thrackle bound (every pair of non-adjacent
edges crosses) and subtract the pairs that no legal drawing can make cross.
For diameter-4 trees a two-line drawing attaining the value is built
explicitly.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .geometry import Drawing, is_legal, point
from .graphs import (
    Caterpillar,
    Diam4,
    Diam4Descriptor,
    Spider,
    SpiderDescriptor,
    Tree,
    complete_graph,
    path_graph,
    thrackle_bound,
)
from .weighted import VertexWeighting, ex_min, min_weight, weight_of

log = logging.getLogger(__name__)


class ConstructionFailed(RuntimeError):
    pass


class IdentityMismatch(AssertionError):
    """Two independent computations of the same quantity disagree."""


def _half_pairs(a: int) -> int:
    """Edges missing from the densest triangle-free graph on ``a`` vertices."""
    return comb(a // 2, 2) + comb((a + 1) // 2, 2)


def spider_identity_sides(desc: SpiderDescriptor) -> tuple[int, int]:
    """Both sides of the leg/level identity for spiders.

    The leg side weights the non-root edges of the ``i``-th longest leg by
    ``floor((i-1)/2)``; the level side sums ``C(floor(a/2),2) + C(ceil(a/2),2)``
    over the level sizes ``a`` beyond the first.
    """
    legs = desc.legs
    leg_side = sum((legs[i - 1] - 1) * ((i - 1) // 2) for i in range(3, desc.k + 1))
    level_side = sum(_half_pairs(a) for a in desc.levels[1:])
    return leg_side, level_side


def maxcr_spider(desc) -> int:
    """Maximum rectilinear crossing number of a spider.

    Accepts a :class:`SpiderDescriptor` or a plain list of leg lengths; with
    fewer than three legs the tree is a path and the thrackle bound applies.
    """
    if not isinstance(desc, SpiderDescriptor):
        legs = [int(x) for x in desc]
        if len(legs) < 3:
            log.info("fewer than three legs: a path, using the thrackle bound")
            return thrackle_bound(path_graph(1 + sum(legs)))
        desc = SpiderDescriptor(tuple(legs))
    return thrackle_bound(desc.tree()) - sum(_half_pairs(a) for a in desc.levels[1:])


def d_explicit(children) -> int:
    """``sum_i i*c_{2i+1} + sum_i i*c_{2i+2}`` over the sorted type, with ``c_j = 0`` past ``k``."""
    c = sorted(children, reverse=True)
    k = len(c)

    def cc(j):
        return c[j - 1] if j <= k else 0

    return sum(i * cc(2 * i + 1) for i in range(1, (k + 1) // 2)) + sum(
        i * cc(2 * i + 2) for i in range(1, k // 2 + 1)
    )


def d_via_turan(children) -> int:
    """min-weight of K_k minus the min-weight Turán optimum for K_3, weights = child counts."""
    W = VertexWeighting(tuple(children))
    value = weight_of(complete_graph(W.n), min_weight(W)) - ex_min(W, 3)
    assert value.denominator == 1
    return int(value)


def d_value(desc: Diam4Descriptor) -> int:
    """Unavoidable missed crossings of a diameter-4 tree of the given type.

    Computed both by the explicit double sum and through the weighted Turán
    number; a disagreement raises :class:`IdentityMismatch`.
    """
    explicit = d_explicit(desc.children)
    via_turan = d_via_turan(desc.children)
    if explicit != via_turan:
        raise IdentityMismatch(f"d{desc.children}: explicit sum {explicit} != weighted Turán form {via_turan}")
    return explicit


def maxcr_diam4(desc: Diam4Descriptor) -> int:
    """Maximum rectilinear crossing number of a diameter-4 tree of type ``desc``."""
    tb = thrackle_bound(desc.tree())
    if desc.grandchildren < 3:
        log.info("type %s has fewer than three grandchildren: caterpillar, thrackle bound", desc.children)
        return tb
    return tb - d_value(desc)


@dataclass(frozen=True)
class Diam4DrawingPlan:
    """Coordinates for the two-line drawing: root at (0, 1), children on y = 0,
    grandchildren of child ``i`` clustered on y = 1 just right of ``anchors[i-1]``."""

    child_x: tuple[int, ...]
    anchors: tuple[int, ...]
    epsilon: Fraction


def _anchor_candidates(k: int):
    # magnitudes strictly decrease with i; later candidates bend the sequence to dodge coincidences
    t = 0
    while True:
        yield tuple((k + 1 - i + t * (k + 1 - i) ** 2) * (1 if i % 2 else -1) for i in range(1, k + 1))
        t += 1


def diam4_plan(desc: Diam4Descriptor, epsilon: Fraction | None = None, max_candidates: int = 50) -> Diam4DrawingPlan:
    """Child abscissas ordered ``x_1 < x_3 < ... < x_4 < x_2`` and cluster anchors
    ordered ``x'_2 < x'_4 < ... < 0 < ... < x'_3 < x'_1``.

    Anchors are the first candidate for which the drawing with one grandchild
    per cluster sitting exactly on its anchor is legal, so clones placed close
    enough to their anchors cannot create new degeneracies.
    """
    k = desc.k
    odd = list(range(1, k + 1, 2))
    even = list(range(2, k + 1, 2))
    x = [0] * k
    for slot, i in enumerate(odd + even[::-1]):
        x[i - 1] = 2 * slot - (k - 1)
    skeleton = Diam4Descriptor(tuple(min(c, 1) for c in desc.children))
    for _, anchors in zip(range(max_candidates), _anchor_candidates(k)):
        plan = Diam4DrawingPlan(tuple(x), anchors, Fraction(0))
        if is_legal(realize_plan(skeleton, plan)).ok:
            break
    else:
        raise ConstructionFailed(f"no non-degenerate anchor layout for type {desc.children}")
    if epsilon is None:
        epsilon = Fraction(1, 4 * (desc.n + 1) * max(abs(a) for a in anchors))
    return Diam4DrawingPlan(tuple(x), anchors, Fraction(epsilon))


def realize_plan(desc: Diam4Descriptor, plan: Diam4DrawingPlan) -> Drawing:
    tree = desc.tree()
    pos = [None] * tree.n
    pos[0] = point(0, 1)
    for i in range(1, desc.k + 1):
        pos[i] = point(plan.child_x[i - 1], 0)
        kids = desc.grandchild_ids(i)
        for j, g in enumerate(kids, start=1):
            pos[g] = point(plan.anchors[i - 1] + plan.epsilon * j / (len(kids) + 1), 1)
    return Drawing(tree, tuple(pos))


def draw_diam4(desc: Diam4Descriptor, max_retries: int = 10) -> Drawing:
    """Legal drawing of the diameter-4 tree missing exactly ``d_value(desc)`` crossings.

    Grandchild clusters are squeezed by halving the clone spacing until the
    drawing is legal.
    """
    plan = diam4_plan(desc)
    for _ in range(max_retries + 1):
        drawing = realize_plan(desc, plan)
        if is_legal(drawing).ok:
            return drawing
        plan = Diam4DrawingPlan(plan.child_x, plan.anchors, plan.epsilon / 2)
    raise ConstructionFailed(f"no legal drawing for type {desc.children} after {max_retries} retries")


def formula_value(tree: Tree, labels) -> int | None:
    """Closed-form maximum for the first label that has one, else ``None``."""
    for lab in labels:
        if isinstance(lab, Caterpillar):
            return thrackle_bound(tree)
        if isinstance(lab, Spider):
            return maxcr_spider(lab.descriptor)
        if isinstance(lab, Diam4):
            return maxcr_diam4(lab.descriptor)
    return None
