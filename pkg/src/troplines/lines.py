"""Tropical lines in the plane: vertex/ray geometry and stable intersections.

A tropical line is the hypersurface of max(a+x, b+y, c): a vertex at
(c-a, c-b) with three closed rays in the primitive directions (-1,0)
(west), (0,-1) (south) and (1,1) (northeast). Lines are stored by their
vertex, which determines them; the coefficient view is normalized to
c = 0, a = -vertex.x, b = -vertex.y.

Membership bookkeeping is by argmax sets over the three terms, indexed
1 (x-term), 2 (y-term), 3 (constant): |argmax| = 3 exactly at the vertex,
2 on the open rays, 1 off the line. A point sits on the south ray iff its
argmax is {1,3}, on the west ray iff {2,3}, on the northeast ray iff
{1,2}.

Two distinct lines meet in a single point unless their vertices are
coaxial (same y, same x, or difference parallel to (1,1)), in which case
they overlap along a ray and the stable intersection is the one vertex
that lies on the other line. The closed-form rule is derived from the
perturbation definition and guarded by perturbed_intersection_oracle in
the tests.
"""

from __future__ import annotations

import enum
from typing import FrozenSet, List, NamedTuple, Optional, Set, Tuple

from .errors import EqualPoints, IdenticalLines, NotTransversal
from .rationals import Rational, exact_div


class Point2(NamedTuple):
    x: Rational
    y: Rational

    def __add__(self, other):
        return Point2(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return Point2(self.x - other.x, self.y - other.y)

    def scale(self, factor: Rational) -> "Point2":
        return Point2(self.x * factor, self.y * factor)


def cross(p: Point2, q: Point2) -> Rational:
    return p.x * q.y - p.y * q.x


# Axis directions of a tropical line, named by compass heading.
W = "W"
S = "S"
NE = "NE"

RAY_DIRECTIONS = {
    W: Point2(-1, 0),
    S: Point2(0, -1),
    NE: Point2(1, 1),
}

# Two-element argmax set carried by each open ray: on the south ray the
# x-term and constant tie, on the west ray the y-term and constant, on
# the northeast ray the two linear terms.
ARGMAX_OF_RAY = {
    S: frozenset({1, 3}),
    W: frozenset({2, 3}),
    NE: frozenset({1, 2}),
}


class TropicalLine(NamedTuple):
    vertex: Point2

    @property
    def coefficients(self) -> Tuple[Rational, Rational, Rational]:
        """Normalized (a, b, c) with c = 0."""
        return (-self.vertex.x, -self.vertex.y, 0)


def line_from_vertex(v: Point2) -> TropicalLine:
    return TropicalLine(Point2(*v))


def line_from_coefficients(a: Rational, b: Rational, c: Rational) -> TropicalLine:
    """Line of max(a+x, b+y, c); vertex is (c-a, c-b)."""
    return TropicalLine(Point2(c - a, c - b))


def eval_argmax(L: TropicalLine, q: Point2) -> Tuple[Rational, FrozenSet[int]]:
    """Value and argmax set of the normalized polynomial at q.

    Terms are (q.x - v.x, q.y - v.y, 0) for vertex v.
    """
    t1 = q.x - L.vertex.x
    t2 = q.y - L.vertex.y
    value = t1 if t1 >= t2 else t2
    if value < 0:
        value = 0
    members = []
    if t1 == value:
        members.append(1)
    if t2 == value:
        members.append(2)
    if value == 0:
        members.append(3)
    return value, frozenset(members)


def contains(L: TropicalLine, q: Point2) -> bool:
    """q lies on L iff the maximum is attained at least twice."""
    _, members = eval_argmax(L, q)
    return len(members) >= 2


def coaxial_points(p: Point2, q: Point2) -> Optional[str]:
    """The shared axis direction of two points, if any.

    W for equal y, S for equal x, NE for difference parallel to (1,1).
    Distinct points can share at most one axis.
    """
    if p == q:
        raise EqualPoints(f"coaxial_points needs distinct points, got {p}")
    if p.y == q.y:
        return W
    if p.x == q.x:
        return S
    if p.x - q.x == p.y - q.y:
        return NE
    return None


class IntersectionKind(enum.Enum):
    FIRST = "FirstKind"
    SECOND = "SecondKind"


class StableIntersectionResult(NamedTuple):
    point: Point2
    kind: IntersectionKind


def _ray_crossing(v: Point2, d: Point2, w: Point2, e: Point2) -> Optional[Point2]:
    """Intersection point of two closed rays, or None.

    Parallel rays return None even when collinear; overlap segments are
    handled by the callers (their endpoints are line vertices, which are
    always candidates in their own right).
    """
    denom = cross(d, e)
    if denom == 0:
        return None
    delta = w - v
    t = exact_div(cross(delta, e), denom)
    s = exact_div(cross(delta, d), denom)
    if t < 0 or s < 0:
        return None
    return v + d.scale(t)


def ray_crossings(L1: TropicalLine, L2: TropicalLine) -> Set[Point2]:
    """All transversal crossing points between rays of the two lines.

    For non-coaxial vertices this is exactly one point. Coaxial pairs
    yield the endpoints of ray overlaps that happen to be transversal
    crossings too (possibly none).
    """
    points: Set[Point2] = set()
    for d in RAY_DIRECTIONS.values():
        for e in RAY_DIRECTIONS.values():
            hit = _ray_crossing(L1.vertex, d, L2.vertex, e)
            if hit is not None:
                points.add(hit)
    return points


def pairwise_stable_intersection(L1: TropicalLine, L2: TropicalLine) -> StableIntersectionResult:
    """The unique stable intersection of two distinct tropical lines.

    Non-coaxial vertices: the single transversal crossing, first kind.
    Coaxial vertices: the lines overlap along a ray and the stable point
    is the vertex that lies on the other line (exactly one does), second
    kind.
    """
    v1, v2 = L1.vertex, L2.vertex
    if v1 == v2:
        raise IdenticalLines(f"both lines have vertex {v1}")
    axis = coaxial_points(v1, v2)
    if axis is None:
        crossings = ray_crossings(L1, L2)
        if len(crossings) != 1:
            raise AssertionError(
                f"non-coaxial lines {v1}, {v2} produced crossings {sorted(crossings)}"
            )
        point = crossings.pop()
        if point == v1 or point == v2:
            raise AssertionError(
                f"transversal crossing of {v1}, {v2} landed on a vertex: {point}"
            )
        return StableIntersectionResult(point, IntersectionKind.FIRST)
    on_other = [v for v, other in ((v1, L2), (v2, L1)) if contains(other, v)]
    if len(on_other) != 1:
        raise AssertionError(
            f"coaxial pair {v1}, {v2}: expected exactly one vertex on the other line, got {on_other}"
        )
    return StableIntersectionResult(on_other[0], IntersectionKind.SECOND)


def perturbed_intersection_oracle(
    L1: TropicalLine, L2: TropicalLine, eps: Rational, direction: Point2
) -> Point2:
    """Transversal intersection of L1 with L2 shifted by eps * direction.

    This is the test-side oracle for the stable intersection: the stable
    point is the limit of these as eps tends to 0 over valid directions.
    """
    if L1.vertex == L2.vertex:
        raise IdenticalLines(f"both lines have vertex {L1.vertex}")
    if eps <= 0:
        raise ValueError("eps must be positive")
    shifted_vertex = L2.vertex + direction.scale(eps)
    if shifted_vertex == L1.vertex or coaxial_points(L1.vertex, shifted_vertex) is not None:
        raise NotTransversal(
            f"shift {direction} by {eps} leaves vertices {L1.vertex}, {shifted_vertex} degenerate"
        )
    crossings = ray_crossings(L1, TropicalLine(shifted_vertex))
    if len(crossings) != 1:
        raise AssertionError(
            f"perturbed pair {L1.vertex}, {shifted_vertex} produced crossings {sorted(crossings)}"
        )
    return crossings.pop()


def lines_through_point(lines: List[TropicalLine], q: Point2) -> List[int]:
    """Indices of the lines containing q."""
    return [i for i, line in enumerate(lines) if contains(line, q)]
