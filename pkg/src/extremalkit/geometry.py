"""Exact predicates and crossing counts for straight-line drawings.

Coordinates are ints or Fractions, never floats.  Every predicate used here is
invariant under positive scaling, so a drawing is checked on a copy scaled by
the common denominator of its coordinates and all arithmetic is on integers.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import gcd, lcm
from typing import NamedTuple

from .graphs import Graph
from .rationals import exact


class Point(NamedTuple):
    x: int | Fraction
    y: int | Fraction


def point(x, y) -> Point:
    return Point(exact(x), exact(y))


class IllegalDrawingError(ValueError):
    def __init__(self, report: "LegalityReport"):
        self.report = report
        super().__init__("drawing is not legal: " + "; ".join(str(v) for v in report.violations[:5]))


def orientation(p, q, r) -> int:
    """Sign of the cross product ``(q - p) x (r - p)``: +1 ccw, -1 cw, 0 collinear."""
    d = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (d > 0) - (d < 0)


def segments_properly_cross(a1, a2, b1, b2) -> bool:
    """Open segments ``a1a2`` and ``b1b2`` meet in exactly one interior point."""
    o1 = orientation(a1, a2, b1)
    o2 = orientation(a1, a2, b2)
    if o1 == 0 or o2 == 0 or o1 == o2:
        return False
    o3 = orientation(b1, b2, a1)
    o4 = orientation(b1, b2, a2)
    return o3 != 0 and o4 != 0 and o3 != o4


def strictly_inside(p, a, b) -> bool:
    """``p`` lies in the open segment ``ab`` (``a != b``)."""
    if orientation(a, b, p) != 0:
        return False
    return (p[0] - a[0]) * (b[0] - a[0]) + (p[1] - a[1]) * (b[1] - a[1]) > 0 and (
        (p[0] - b[0]) * (a[0] - b[0]) + (p[1] - b[1]) * (a[1] - b[1]) > 0
    )


def _collinear_overlap(a1, a2, b1, b2) -> bool:
    if orientation(a1, a2, b1) != 0 or orientation(a1, a2, b2) != 0:
        return False
    # project on the direction of a; overlap of the open parameter intervals
    dx, dy = a2[0] - a1[0], a2[1] - a1[1]

    def t(p):
        return (p[0] - a1[0]) * dx + (p[1] - a1[1]) * dy

    lo_b, hi_b = sorted((t(b1), t(b2)))
    return max(0, lo_b) < min(dx * dx + dy * dy, hi_b)


def crossing_point_key(a1, a2, b1, b2) -> tuple[int, int, int]:
    """Intersection of two properly crossing integer segments as reduced ``(xn, yn, d)``."""
    dax, day = a2[0] - a1[0], a2[1] - a1[1]
    dbx, dby = b2[0] - b1[0], b2[1] - b1[1]
    den = dax * dby - day * dbx
    tn = (b1[0] - a1[0]) * dby - (b1[1] - a1[1]) * dbx
    xn = a1[0] * den + tn * dax
    yn = a1[1] * den + tn * day
    if den < 0:
        xn, yn, den = -xn, -yn, -den
    g = gcd(gcd(xn, yn), den)
    return xn // g, yn // g, den // g


@dataclass(frozen=True)
class Violation:
    rule: str
    vertices: tuple[int, ...] = ()
    edges: tuple[tuple[int, int], ...] = ()
    point: tuple | None = None

    def __str__(self):
        parts = [self.rule]
        if self.vertices:
            parts.append(f"vertices {list(self.vertices)}")
        if self.edges:
            parts.append(f"edges {[list(e) for e in self.edges]}")
        return " ".join(parts)


@dataclass
class LegalityReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class Drawing:
    graph: Graph
    positions: tuple[Point, ...]

    def __post_init__(self):
        pos = tuple(point(*p) for p in self.positions)
        if len(pos) != self.graph.n:
            raise ValueError(f"{len(pos)} positions for {self.graph.n} vertices")
        object.__setattr__(self, "positions", pos)

    @cached_property
    def scale(self) -> int:
        """Common denominator of all coordinates."""
        return lcm(1, *(Fraction(c).denominator for p in self.positions for c in p))

    @cached_property
    def int_positions(self) -> tuple[tuple[int, int], ...]:
        s = self.scale
        return tuple((int(p.x * s), int(p.y * s)) for p in self.positions)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return self.graph.edge_list

    def segment(self, e):
        P = self.int_positions
        return P[e[0]], P[e[1]]

    def transformed(self, scale, dx=0, dy=0) -> "Drawing":
        """Image under ``p -> scale * p + (dx, dy)``."""
        scale, dx, dy = Fraction(scale), Fraction(dx), Fraction(dy)
        return Drawing(self.graph, tuple(point(scale * p.x + dx, scale * p.y + dy) for p in self.positions))

    @cached_property
    def crossing_pairs(self) -> frozenset:
        out = set()
        edges = self.edges
        P = self.int_positions
        for e, f in combinations(edges, 2):
            if e[0] in f or e[1] in f:
                continue
            if segments_properly_cross(P[e[0]], P[e[1]], P[f[0]], P[f[1]]):
                out.add((e, f))
        return frozenset(out)


def is_legal(d: Drawing) -> LegalityReport:
    """Check distinct positions, no vertex inside a non-incident edge, no three concurrent edges."""
    report = LegalityReport()
    P = d.int_positions
    where = defaultdict(list)
    for v, p in enumerate(P):
        where[p].append(v)
    for p, vs in where.items():
        if len(vs) > 1:
            report.violations.append(Violation("coincident-vertices", tuple(vs)))
    edges = d.edges
    for e in edges:
        a, b = P[e[0]], P[e[1]]
        if a == b:
            continue
        for w in range(d.graph.n):
            if w not in e and strictly_inside(P[w], a, b):
                report.violations.append(Violation("vertex-on-edge", (w,), (e,)))
    for e, f in combinations(edges, 2):
        if _collinear_overlap(P[e[0]], P[e[1]], P[f[0]], P[f[1]]):
            report.violations.append(Violation("collinear-overlap", edges=(e, f)))
    through = defaultdict(set)
    for e, f in d.crossing_pairs:
        key = crossing_point_key(P[e[0]], P[e[1]], P[f[0]], P[f[1]])
        through[key].update((e, f))
    for key, es in through.items():
        if len(es) >= 3:
            report.violations.append(
                Violation(
                    "concurrent-edges",
                    edges=tuple(sorted(es)),
                    point=(Fraction(key[0], key[2] * d.scale), Fraction(key[1], key[2] * d.scale)),
                )
            )
    return report


def _require_legal(d: Drawing) -> None:
    report = is_legal(d)
    if not report.ok:
        raise IllegalDrawingError(report)


def crossing_count(d: Drawing) -> int:
    """Number of properly crossing edge pairs; refuses illegal drawings."""
    _require_legal(d)
    return len(d.crossing_pairs)


def missed_nontrivial_crossings(d: Drawing) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Non-adjacent edge pairs that do not cross, in edge-list order."""
    _require_legal(d)
    crossing = d.crossing_pairs
    return [
        (e, f)
        for e, f in combinations(d.edges, 2)
        if e[0] not in f and e[1] not in f and (e, f) not in crossing
    ]
