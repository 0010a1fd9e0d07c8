"""Point-side API: configurations, duality, stable lines, the bound check.

Everything here reduces to the line-side machinery through the duality
map phi(p) = the line with vertex -p, which preserves incidence. A
stable line through a point set corresponds to a stable intersection of
the dual arrangement, so the records returned by stable_lines_through
are computed there and translated back.

A stable line is vertex-witnessed when one of its incident points sits
at the line's vertex; otherwise it is the unique line through its
incident points. A single intersection point can arise from several
pairs of dual lines, with different kinds per pair, but the two notions
coincide on distinct points: the point equals some dual line's vertex
exactly when some pair meets there non-transversally. The implementation
asserts that equivalence on every run.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Sequence, Set, Tuple

from .arrangement import Arrangement, build_arrangement
from .errors import EqualPoints, TooFewPoints
from .lines import (
    IntersectionKind,
    Point2,
    TropicalLine,
    contains,
    eval_argmax,
    line_from_vertex,
    pairwise_stable_intersection,
)
from .rationals import Rational
from .subdivision import dual_subdivision, is_near_pencil


@dataclass(frozen=True)
class PointConfig:
    points: Tuple[Point2, ...]

    def __post_init__(self) -> None:
        if len(self.points) < 1:
            raise TooFewPoints("a point configuration needs at least one point")
        seen: Dict[Point2, int] = {}
        for index, p in enumerate(self.points):
            if p in seen:
                raise EqualPoints(
                    f"point {index} repeats point {seen[p]}: {tuple(p)}",
                    index=index,
                    earlier=seen[p],
                )
            seen[p] = index

    @property
    def v(self) -> int:
        return len(self.points)


def point_config(points: Sequence[Sequence[Rational]]) -> PointConfig:
    return PointConfig(tuple(Point2(p[0], p[1]) for p in points))


class StableLineKind(enum.Enum):
    UNIQUELY_DETERMINED = "UniquelyDetermined"
    VERTEX_WITNESSED = "VertexWitnessed"


@dataclass(frozen=True)
class StableLineRecord:
    line: TropicalLine
    incident: FrozenSet[int]
    kind: StableLineKind


@dataclass(frozen=True)
class DbeVerdict:
    v: int
    b: int
    bound_holds: bool
    equality: bool
    near_pencil: bool
    consistent: bool


def dualize_points(cfg: PointConfig) -> Arrangement:
    """The arrangement of lines dual to the points: vertex of line i is -p_i."""
    return build_arrangement(
        [line_from_vertex(Point2(-p.x, -p.y)) for p in cfg.points]
    )


def incidence_preserved(p: Point2, q: Point2) -> bool:
    """Whether p lies on the line dual to q; symmetric in p and q."""
    forward = contains(line_from_vertex(Point2(-q.x, -q.y)), p)
    backward = contains(line_from_vertex(Point2(-p.x, -p.y)), q)
    assert forward == backward, f"duality broke incidence symmetry at {p}, {q}"
    return forward


def stable_lines_through(cfg: PointConfig) -> List[StableLineRecord]:
    """All stable lines determined by the configuration, one per distinct
    stable intersection of the dual arrangement, sorted by line vertex."""
    if cfg.v < 2:
        raise TooFewPoints(f"need at least 2 points, got {cfg.v}")
    arr = dualize_points(cfg)
    kinds_seen: Dict[Point2, Set[IntersectionKind]] = {}
    for i in range(arr.n):
        for j in range(i + 1, arr.n):
            result = pairwise_stable_intersection(arr.lines[i], arr.lines[j])
            kinds_seen.setdefault(result.point, set()).add(result.kind)
    dual_vertices = {line.vertex for line in arr.lines}
    records = []
    for q, kinds in kinds_seen.items():
        witnessed = q in dual_vertices
        assert witnessed == (IntersectionKind.SECOND in kinds), (
            f"kind bookkeeping mismatch at {q}: vertex coincidence {witnessed}, "
            f"pair kinds {kinds}"
        )
        incident = frozenset(
            i
            for i, line in enumerate(arr.lines)
            if len(eval_argmax(line, q)[1]) >= 2
        )
        assert len(incident) >= 2, f"stable point {q} incident to {incident}"
        record = StableLineRecord(
            line=line_from_vertex(Point2(-q.x, -q.y)),
            incident=incident,
            kind=(
                StableLineKind.VERTEX_WITNESSED
                if witnessed
                else StableLineKind.UNIQUELY_DETERMINED
            ),
        )
        for i in record.incident:
            assert contains(record.line, cfg.points[i]), (
                f"record line {record.line.vertex} misses incident point {i}"
            )
        records.append(record)
    records.sort(key=lambda r: (r.line.vertex.x, r.line.vertex.y))
    return records


def ordinary_stable_lines(cfg: PointConfig) -> List[StableLineRecord]:
    """Stable lines incident to exactly two of the points."""
    return [r for r in stable_lines_through(cfg) if len(r.incident) == 2]


def stable_line_two_points(p1: Point2, p2: Point2) -> TropicalLine:
    """The stable line through two points, by the tropical Cramer rule.

    The 2x3 system has rows (p.x, p.y, 0); the three signed minors (each
    a 2x2 tropical permanent) give the line's coefficients, and the
    vertex is read off as usual.
    """
    from .semiring import TropMatrix2x3, cramer_stable_solution

    if p1 == p2:
        raise EqualPoints(f"both points are {tuple(p1)}")
    o1, o2, o3 = cramer_stable_solution(
        TropMatrix2x3((p1.x, p1.y, 0), (p2.x, p2.y, 0))
    )
    line = line_from_vertex(Point2(o3 - o1, o3 - o2))
    assert contains(line, p1) and contains(line, p2), (
        f"Cramer line {line.vertex} misses an input point {tuple(p1)}, {tuple(p2)}"
    )
    return line


def dbe_check(cfg: PointConfig) -> DbeVerdict:
    """The incidence-bound verdict for a configuration of at least 4 points.

    b is the number of distinct stable lines; the bound is b >= v - 3,
    and when it is attained the dual subdivision must be a near-pencil.
    """
    if cfg.v < 4:
        raise TooFewPoints(f"the bound is stated for v >= 4, got {cfg.v}")
    b = len(stable_lines_through(cfg))
    near = is_near_pencil(dual_subdivision(dualize_points(cfg)))
    equality = b == cfg.v - 3
    return DbeVerdict(
        v=cfg.v,
        b=b,
        bound_holds=b >= cfg.v - 3,
        equality=equality,
        near_pencil=near,
        consistent=(not equality) or near,
    )
