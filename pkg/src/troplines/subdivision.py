"""The dual Newton subdivision of n * Delta_2 and its structural analysis.

The subdivision has two independent constructions, kept deliberately
separate so each can audit the other:

  * the Minkowski route (arrangement.dual_cell): one positioned cell per
    arrangement vertex, and
  * the lift route (product_coefficients): the coefficient table of the
    tropical product of the n line polynomials, whose regular subdivision
    the Minkowski cells must reproduce. check_regularity verifies that
    cell by cell with exact arithmetic.

On top of the validated subdivision sit the lattice predicates the
de Bruijn-Erdos argument needs: boundary edges, near-pencils, corner
triangles, and the determined semiuniform faces of a triangle (the three
edge-adjacency slots plus the three corner-anchored parallelogram
patterns, transcribed from the paper-figure templates; each pattern edge
may be elongated).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Set, Tuple

from .arrangement import (
    Arrangement,
    CellClass,
    CellPolygon,
    LatticePoint,
    SEMIUNIFORM,
    arrangement_vertices,
    contains_point,
    dual_cell,
    polygon_edges,
    interiors_disjoint,
)
from .errors import NotATriangle, TilingFailure
from .rationals import Rational

LiftTable = Dict[LatticePoint, Rational]


def simplex_lattice_points(n: int) -> List[LatticePoint]:
    """All lattice points of n * Delta_2: i, j >= 0, i + j <= n."""
    return [(i, j) for i in range(n + 1) for j in range(n + 1 - i)]


def product_coefficients(arr: Arrangement) -> LiftTable:
    """Coefficient table h(i, j) of the tropical product of the lines.

    h(i, j) maximizes, over ordered partitions of the lines into an
    x-set I of size i, a y-set J of size j and a constant set for the
    rest, the sum of the chosen coefficients. Dynamic programming over
    the lines, O(n^3).
    """
    dp: Dict[LatticePoint, Rational] = {(0, 0): 0}
    for line in arr.lines:
        a, b, c = line.coefficients
        new_dp: Dict[LatticePoint, Rational] = {}
        for (i, j), value in dp.items():
            for di, dj, coeff in ((1, 0, a), (0, 1, b), (0, 0, c)):
                key = (i + di, j + dj)
                candidate = value + coeff
                best = new_dp.get(key)
                if best is None or candidate > best:
                    new_dp[key] = candidate
        dp = new_dp
    return dp


@dataclass
class DualSubdivision:
    n: int
    cells: List[CellPolygon]
    lift: LiftTable


def dual_subdivision(arr: Arrangement, vertex_data=None) -> DualSubdivision:
    """Assemble and validate the subdivision dual to the arrangement.

    Validation is the tiling contract: every cell inside n * Delta_2,
    areas summing to n^2 / 2 exactly, and pairwise disjoint interiors.
    A failure here is a TilingFailure, which means a bug in the pipeline,
    not bad input: the theory guarantees the tiling.

    Callers that already hold the arrangement's vertex data may pass it
    to skip the vertex scan.
    """
    n = arr.n
    if vertex_data is None:
        vertex_data = arrangement_vertices(arr)
    cells = [dual_cell(arr, vd) for vd in vertex_data]
    for cell in cells:
        for (i, j) in cell.vertices:
            if i < 0 or j < 0 or i + j > n:
                raise TilingFailure(
                    f"cell at {cell.dual_point} leaves {n}*Delta_2 at ({i},{j})"
                )
    total = sum(cell.doubled_area() for cell in cells)
    if total != n * n:
        raise TilingFailure(
            f"cell areas sum to {total}/2, expected {n * n}/2 for n={n}"
        )
    for idx, p in enumerate(cells):
        for q in cells[idx + 1 :]:
            if not interiors_disjoint(p.vertices, q.vertices):
                raise TilingFailure(
                    f"cells at {p.dual_point} and {q.dual_point} overlap"
                )
    return DualSubdivision(n=n, cells=cells, lift=product_coefficients(arr))


def check_regularity_detailed(sub: DualSubdivision) -> Tuple[bool, Optional[str]]:
    """Verify the Minkowski cells against the lift, exactly.

    For each cell, the affine function through its lifted vertices must
    exist (coplanar lifts), agree with h on the cell's lattice points,
    and dominate h on all of n * Delta_2. Everything is cross-multiplied
    by the (positive) fit determinant so integer inputs stay integer.
    """
    domain = simplex_lattice_points(sub.n)
    for cell in sub.cells:
        v0, v1, v2 = cell.vertices[0], cell.vertices[1], cell.vertices[2]
        det = (v1[0] - v0[0]) * (v2[1] - v0[1]) - (v2[0] - v0[0]) * (v1[1] - v0[1])
        if det <= 0:
            return False, f"cell at {cell.dual_point} is not counterclockwise"
        h0 = sub.lift[v0]
        h1 = sub.lift[v1]
        h2 = sub.lift[v2]
        beta = (h1 - h0) * (v2[1] - v0[1]) - (h2 - h0) * (v1[1] - v0[1])
        gamma = (v1[0] - v0[0]) * (h2 - h0) - (v2[0] - v0[0]) * (h1 - h0)
        alpha = det * h0 - beta * v0[0] - gamma * v0[1]
        for point in domain:
            lifted = det * sub.lift[point]
            affine = alpha + beta * point[0] + gamma * point[1]
            if contains_point(cell.vertices, point):
                if affine != lifted:
                    return False, (
                        f"cell at {cell.dual_point}: lift and affine fit disagree "
                        f"at lattice point {point}"
                    )
            elif affine < lifted:
                return False, (
                    f"cell at {cell.dual_point}: affine fit fails to dominate "
                    f"the lift at {point}"
                )
    return True, None


def check_regularity(sub: DualSubdivision) -> bool:
    ok, _ = check_regularity_detailed(sub)
    return ok


def boundary_edge_count(cell: CellPolygon, n: int) -> int:
    """Edges of the cell lying on the boundary of n * Delta_2."""
    count = 0
    for a, b in polygon_edges(cell.vertices):
        if a[0] == 0 and b[0] == 0:
            count += 1
        elif a[1] == 0 and b[1] == 0:
            count += 1
        elif a[0] + a[1] == n and b[0] + b[1] == n:
            count += 1
    return count


def is_corner_triangle(cell: CellPolygon, n: int) -> bool:
    """Triangles with two (or, when n = 1, three) boundary edges."""
    return cell.cell_class is CellClass.TRIANGLE and boundary_edge_count(cell, n) >= 2


def is_near_pencil(sub: DualSubdivision) -> bool:
    """Every triangular face touches the boundary with at least one edge."""
    return all(
        boundary_edge_count(cell, sub.n) >= 1
        for cell in sub.cells
        if cell.cell_class is CellClass.TRIANGLE
    )


# ---------------------------------------------------------------------------
# determined faces
# ---------------------------------------------------------------------------

def _primitive(vec: Tuple[int, int]) -> Tuple[int, int]:
    g = math.gcd(abs(vec[0]), abs(vec[1]))
    p = (vec[0] // g, vec[1] // g)
    # normalize sign so each direction class has one representative
    if p[1] < 0 or (p[1] == 0 and p[0] < 0):
        p = (-p[0], -p[1])
    return p


# direction classes, sign-normalized by _primitive
_H = (1, 0)
_V = (0, 1)
_D = (-1, 1)


def _edge_classes(cell: CellPolygon) -> Set[Tuple[int, int]]:
    return {
        _primitive((b[0] - a[0], b[1] - a[1]))
        for a, b in polygon_edges(cell.vertices)
    }


def shares_edge(p: CellPolygon, q: CellPolygon) -> bool:
    """True iff the two cells meet along a segment of positive length."""
    for a, b in polygon_edges(p.vertices):
        dx, dy = b[0] - a[0], b[1] - a[1]
        length2 = dx * dx + dy * dy
        for c, d in polygon_edges(q.vertices):
            if (c[0] - a[0]) * dy != (c[1] - a[1]) * dx:
                continue
            if (d[0] - a[0]) * dy != (d[1] - a[1]) * dx:
                continue
            tc = (c[0] - a[0]) * dx + (c[1] - a[1]) * dy
            td = (d[0] - a[0]) * dx + (d[1] - a[1]) * dy
            lo, hi = min(tc, td), max(tc, td)
            if min(hi, length2) > max(lo, 0):
                return True
    return False


def triangle_base(T: CellPolygon) -> LatticePoint:
    """The right-angle corner of a triangle cell conv{p, p+(1,0), p+(0,1)}."""
    if T.cell_class is not CellClass.TRIANGLE:
        raise NotATriangle(f"cell at {T.dual_point} is {T.cell_class.value}")
    return (min(v[0] for v in T.vertices), min(v[1] for v in T.vertices))


def _matches_corner_pattern(S: CellPolygon, base: LatticePoint) -> bool:
    """Does parallelogram S sit in one of the three corner slots of the
    triangle with right-angle corner `base`?

    The slots, with p = base, s and t arbitrary positive lattice lengths:

      at p          spanned by (-1,0) and (0,-1): the axis rectangle whose
                    maximal corner is p;
      at p + (0,1)  spanned by (0,1) and (-1,1): anchored at its corner of
                    maximal x and, among those, minimal y;
      at p + (1,0)  spanned by (1,0) and (1,-1): anchored at its corner of
                    minimal x.
    """
    classes = _edge_classes(S)
    verts = S.vertices
    if classes == {_H, _V}:
        anchor = (max(v[0] for v in verts), max(v[1] for v in verts))
        return anchor == base
    if classes == {_V, _D}:
        max_x = max(v[0] for v in verts)
        anchor = min((v for v in verts if v[0] == max_x), key=lambda v: v[1])
        return anchor == (base[0], base[1] + 1)
    if classes == {_H, _D}:
        anchor = min(verts, key=lambda v: v[0])
        return anchor == (base[0] + 1, base[1])
    return False


def determined_faces(sub: DualSubdivision, T: CellPolygon) -> List[CellPolygon]:
    """Semiuniform faces determined by the triangle T.

    Either edge-adjacent to T (any semiuniform shape) or a parallelogram
    in one of the three corner slots; corner-slot faces are parallelograms
    by definition, so hexagons can only enter through adjacency.
    """
    base = triangle_base(T)
    found = []
    for S in sub.cells:
        if S.vertices == T.vertices or S.cell_class not in SEMIUNIFORM:
            continue
        if shares_edge(T, S):
            found.append(S)
        elif S.cell_class is CellClass.PARALLELOGRAM and _matches_corner_pattern(S, base):
            found.append(S)
    found.sort(key=lambda cell: cell.vertices)
    if len(found) > 6:
        raise AssertionError(
            f"triangle at {T.dual_point} determined {len(found)} faces, maximum is 6"
        )
    return found


def determined_union_count(sub: DualSubdivision) -> int:
    """Size of the union of determined faces over non-corner triangles."""
    union: Set[Tuple[LatticePoint, ...]] = set()
    for T in sub.cells:
        if T.cell_class is CellClass.TRIANGLE and not is_corner_triangle(T, sub.n):
            for S in determined_faces(sub, T):
                union.add(S.vertices)
    return len(union)
