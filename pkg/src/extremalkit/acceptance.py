"""Desk-scale acceptance checks, runnable from pytest or ``extremalkit selftest``.

Each check returns a :class:`CheckResult`; all comparisons are exact.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .anneal import AnnealParams, anneal_max_crossings
from .drawings import (
    d_explicit,
    d_via_turan,
    draw_diam4,
    maxcr_diam4,
    maxcr_spider,
    spider_identity_sides,
)
from .geometry import Drawing, crossing_count, is_legal, missed_nontrivial_crossings, segments_properly_cross
from .graphs import Diam4Descriptor, Graph, SpiderDescriptor, Tree, build_complete_multipartite, thrackle_bound, turan_edge_count
from .multipartite import HostSpec, ex_multipartite
from .oracle import max_edges_clique_free_subgraph, max_weight_clique_free
from .weighted import VertexWeighting, ex_min, ex_prod, min_weight, product_weight


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number:2d}. {self.name}: {self.detail} ({self.seconds:.1f}s)"


# ---------------------------------------------------------------------------
# corpora
# ---------------------------------------------------------------------------


def random_weightings(n: int, count: int, seed: int, hi: int = 9) -> list[VertexWeighting]:
    rng = random.Random(seed)
    return [VertexWeighting(tuple(rng.randint(0, hi) for _ in range(n))) for _ in range(count)]


def part_size_vectors(max_r: int = 4, max_k: int = 3, max_total: int = 8):
    for r in range(1, max_r + 1):
        for sizes in itertools.product(range(1, max_k + 1), repeat=r):
            if sum(sizes) <= max_total:
                yield sizes


def integer_partitions(total: int, largest: int | None = None):
    largest = total if largest is None else largest
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), 0, -1):
        for rest in integer_partitions(total - first, first):
            yield (first,) + rest


def spiders_up_to(n: int) -> list[SpiderDescriptor]:
    return [
        SpiderDescriptor(legs)
        for edges in range(3, n)
        for legs in integer_partitions(edges)
        if len(legs) >= 3
    ]


def diam4_up_to(n: int) -> list[Diam4Descriptor]:
    """Every diameter-4 type with at least three grandchildren on at most ``n`` vertices."""
    out = set()
    for k in range(2, n):
        for c in itertools.combinations_with_replacement(range(n), k):
            if 1 + k + sum(c) <= n and sum(c) >= 3 and sum(1 for x in c if x) >= 2:
                out.add(Diam4Descriptor(c))
    return sorted(out, key=lambda d: (d.n, d.children))


def random_diam4(count: int, seed: int, max_k: int = 6, max_c: int = 4) -> list[Diam4Descriptor]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        k = rng.randint(2, max_k)
        c = [rng.randint(0, max_c) for _ in range(k)]
        if sum(1 for x in c if x) >= 2:
            out.append(Diam4Descriptor(tuple(c)))
    return out


def _rand_coord(rng: random.Random, grid: int):
    return Fraction(rng.randint(-grid * 6, grid * 6), rng.choice((1, 2, 3, 6)))


def random_legal_drawing(tree: Tree, rng: random.Random, grid: int = 10) -> Drawing:
    while True:
        pos = [(_rand_coord(rng, grid), _rand_coord(rng, grid)) for _ in range(tree.n)]
        d = Drawing(tree, tuple(pos))
        if is_legal(d).ok:
            return d


def crossing_feet_drawing(desc: SpiderDescriptor, rng: random.Random, grid: int = 10) -> Drawing:
    """Random legal drawing of a spider whose feet pairwise cross."""
    tree = desc.tree()
    feet = desc.feet()
    while True:
        pos = [None] * tree.n
        while True:
            for a, b in feet:
                pos[a] = (_rand_coord(rng, grid), _rand_coord(rng, grid))
                pos[b] = (_rand_coord(rng, grid), _rand_coord(rng, grid))
            if all(
                segments_properly_cross(pos[e[0]], pos[e[1]], pos[f[0]], pos[f[1]])
                for e, f in itertools.combinations(feet, 2)
            ):
                break
        for v in range(tree.n):
            if pos[v] is None:
                pos[v] = (_rand_coord(rng, grid), _rand_coord(rng, grid))
        d = Drawing(tree, tuple(pos))
        if is_legal(d).ok:
            return d


def missed_foot_witness(desc: SpiderDescriptor, d: Drawing):
    """A missed nontrivial pair ``(e, foot)`` with ``e`` on another leg, or None."""
    leg_of = {}
    for li, leg in enumerate(desc.leg_vertices()):
        prev = 0
        for v in leg:
            leg_of[(min(prev, v), max(prev, v))] = li
            prev = v
    feet = set(desc.feet())
    for e, f in missed_nontrivial_crossings(d):
        for foot, other in ((e, f), (f, e)):
            if foot in feet and leg_of[foot] != leg_of[other]:
                return other, foot
    return None


# ---------------------------------------------------------------------------
# criteria
# ---------------------------------------------------------------------------


def _timed(number: int, name: str, fn: Callable[[], tuple[bool, str]]) -> CheckResult:
    start = time.perf_counter()
    passed, detail = fn()
    return CheckResult(number, name, passed, detail, time.perf_counter() - start)


def check_min_oracle(per_cell: int = 200) -> CheckResult:
    def run():
        bad, total = [], 0
        for n in range(2, 7):
            for clique in (3, 4, 5):
                for W in random_weightings(n, per_cell, seed=1000 * n + clique):
                    total += 1
                    if ex_min(W, clique) != max_weight_clique_free(n, min_weight(W), clique)[0]:
                        bad.append((W.weights, clique))
        return not bad, f"{total - len(bad)}/{total} agree" + (f"; first mismatch {bad[0]}" if bad else "")

    return _timed(1, "min-weight oracle equivalence", run)


def check_prod_oracle(per_cell: int = 200) -> CheckResult:
    def run():
        bad, total = [], 0
        for n in range(2, 7):
            for clique in (3, 4, 5):
                for W in random_weightings(n, per_cell, seed=2000 * n + clique):
                    total += 1
                    if ex_prod(W, clique)[0] != max_weight_clique_free(n, product_weight(W), clique)[0]:
                        bad.append((W.weights, clique))
        return not bad, f"{total - len(bad)}/{total} agree" + (f"; first mismatch {bad[0]}" if bad else "")

    return _timed(2, "product-weight oracle equivalence", run)


def check_multipartite_oracle() -> CheckResult:
    def run():
        bad, total = [], 0
        for sizes in part_size_vectors():
            host = build_complete_multipartite(*sizes)
            for clique in (3, 4):
                total += 1
                value, _ = ex_multipartite(HostSpec(sizes, clique))
                if value != max_edges_clique_free_subgraph(host, clique)[0]:
                    bad.append((sizes, clique))
        octa = ex_multipartite(HostSpec((2, 2, 2), 3))[0]
        ok = not bad and octa == 8
        return ok, f"{total - len(bad)}/{total} host specs agree; ex(K_2,2,2, K_3) = {octa}"

    return _timed(3, "multipartite oracle equivalence", run)


def check_turan_reduction() -> CheckResult:
    def run():
        bad = []
        for n in range(1, 9):
            W = VertexWeighting((1,) * n)
            for clique in range(3, n + 2):
                t = turan_edge_count(n, clique - 1)
                if not (ex_min(W, clique) == ex_prod(W, clique)[0] == t):
                    bad.append(("unit", n, clique))
        rec = 0
        for parts in range(1, 65):
            for n in range(max(1, parts), 65):
                rec += 1
                if turan_edge_count(n, parts) != turan_edge_count(n - 1, parts) + n - 1 - (n - 1) // parts:
                    bad.append(("recurrence", n, parts))
        return not bad, f"unit weights n<=8 and {rec} recurrence instances checked" + (f"; {bad[:3]}" if bad else "")

    return _timed(4, "Turán reduction and recurrence", run)


def check_diam4_construction(count: int = 100) -> CheckResult:
    def run():
        bad = []
        for desc in random_diam4(count, seed=5):
            d = draw_diam4(desc)
            if not is_legal(d).ok or crossing_count(d) != maxcr_diam4(desc):
                bad.append(desc.children)
        fig = Diam4Descriptor((3, 2, 2, 1))
        d = draw_diam4(fig)
        cr, missed = crossing_count(d), missed_nontrivial_crossings(d)
        ok = not bad and cr == 44 == maxcr_diam4(fig) and len(missed) == 3
        return ok, f"{count - len(bad)}/{count} legal and optimal; (3,2,2,1): {cr} crossings, {len(missed)} missed"

    return _timed(5, "diameter-4 constructive realization", run)


def check_d_identity(count: int = 1000) -> CheckResult:
    def run():
        rng = random.Random(6)
        bad = []
        for _ in range(count):
            k = rng.randint(1, 10)
            c = [rng.randint(0, 10) for _ in range(k)]
            if d_explicit(c) != d_via_turan(c):
                bad.append(c)
        return not bad, f"{count - len(bad)}/{count} agree" + (f"; first {bad[0]}" if bad else "")

    return _timed(6, "d-identity", run)


def check_spider_identity(count: int = 1000) -> CheckResult:
    def run():
        rng = random.Random(7)
        bad = []
        for _ in range(count):
            legs = tuple(rng.randint(1, 6) for _ in range(rng.randint(3, 8)))
            lhs, rhs = spider_identity_sides(SpiderDescriptor(legs))
            if lhs != rhs:
                bad.append(legs)
        return not bad, f"{count - len(bad)}/{count} agree" + (f"; first {bad[0]}" if bad else "")

    return _timed(7, "spider leg/level identity", run)


def check_anneal_attainment(n: int = 9, params: AnnealParams | None = None) -> CheckResult:
    params = params or AnnealParams()

    def run():
        missed = []
        cases = [(d, maxcr_spider(d)) for d in spiders_up_to(n)] + [(d, maxcr_diam4(d)) for d in diam4_up_to(n)]
        for desc, value in cases:
            # anneal itself asserts the count never exceeds the closed form
            _, count = anneal_max_crossings(desc.tree(), params)
            if count != value:
                missed.append((desc, count, value))
        detail = f"{len(cases) - len(missed)}/{len(cases)} trees reach the formula"
        if missed:
            detail += f"; e.g. {missed[0][0]} reached {missed[0][1]} of {missed[0][2]}"
        return not missed, detail

    return _timed(8, "annealing attains the formulas", run)


def check_crossing_feet(count: int = 500) -> CheckResult:
    def run():
        rng = random.Random(9)
        counterexamples = 0
        for _ in range(count):
            desc = SpiderDescriptor(tuple(rng.randint(2, 4) for _ in range(3)))
            d = crossing_feet_drawing(desc, rng)
            if missed_foot_witness(desc, d) is None:
                counterexamples += 1
        return counterexamples == 0, f"{count} drawings, {counterexamples} counterexamples"

    return _timed(9, "three crossing feet", run)


def geometry_corpus(seed: int = 10) -> list[Drawing]:
    rng = random.Random(seed)
    out = [draw_diam4(Diam4Descriptor(c)) for c in ((3, 2, 2, 1), (1, 1, 1), (2, 2, 1, 1, 1))]
    out += [anneal_max_crossings(SpiderDescriptor(l).tree(), AnnealParams(target=maxcr_spider(l)))[0] for l in ((2, 2, 2), (3, 2, 2))]
    for legs in ((2, 2, 2), (3, 1, 1, 1), (2, 2, 2, 2)):
        out.append(random_legal_drawing(SpiderDescriptor(legs).tree(), rng))
    # illegal ones: collinear overlap, vertex on an edge, three concurrent edges
    out.append(Drawing(Tree(3, frozenset({(0, 1), (0, 2)})), ((0, 0), (2, 0), (1, 0))))
    out.append(Drawing(Graph(3, frozenset({(0, 1)})), ((0, 0), (2, 2), (1, 1))))
    out.append(Drawing(Graph(6, frozenset({(0, 1), (2, 3), (4, 5)})), ((0, 0), (2, 2), (0, 2), (2, 0), (0, 1), (2, 1))))
    return out


def _signature(d: Drawing):
    report = is_legal(d)
    rules = sorted((v.rule, v.vertices, v.edges) for v in report.violations)
    return report.ok, rules, d.crossing_pairs


def check_geometry_exactness(transforms: int = 100) -> CheckResult:
    def run():
        rng = random.Random(11)
        corpus = geometry_corpus()
        bad = []
        legal = 0
        for idx, d in enumerate(corpus):
            sig = _signature(d)
            if sig[0]:
                legal += 1
                if crossing_count(d) + len(missed_nontrivial_crossings(d)) != thrackle_bound(d.graph):
                    bad.append((idx, "thrackle identity"))
            for _ in range(transforms):
                scale = Fraction(rng.randint(1, 50), rng.randint(1, 50))
                dx = Fraction(rng.randint(-100, 100), rng.randint(1, 30))
                dy = Fraction(rng.randint(-100, 100), rng.randint(1, 30))
                if _signature(d.transformed(scale, dx, dy)) != sig:
                    bad.append((idx, str(scale)))
                    break
        return not bad, f"{len(corpus)} drawings ({legal} legal) x {transforms} transforms invariant" + (
            f"; broken: {bad[:3]}" if bad else ""
        )

    return _timed(10, "geometry exactness", run)


CHECKS: list[Callable[[], CheckResult]] = [
    check_min_oracle,
    check_prod_oracle,
    check_multipartite_oracle,
    check_turan_reduction,
    check_diam4_construction,
    check_d_identity,
    check_spider_identity,
    check_anneal_attainment,
    check_crossing_feet,
    check_geometry_exactness,
]


def run_all(echo: Callable[[str], None] | None = print) -> list[CheckResult]:
    results = []
    for check in CHECKS:
        res = check()
        if echo:
            echo(res.line())
        results.append(res)
    return results
