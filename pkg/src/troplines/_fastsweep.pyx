# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer kernel for configuration sweeps.

This is an independent reimplementation of analysis.analyze_config for
integer point configurations, written against the same mathematical
contract rather than the Python code: closed-form ray crossings instead
of the generic rational crossing routine, C arrays instead of objects,
and the same suite names in the same order. troplines.kernel routes
eligible configurations here and equivalence with the pure path is
enforced by the test suite.

Everything is 64-bit integer arithmetic. Callers must keep coordinates
within +/- 2**20 (the wrapper checks), which bounds every intermediate
comfortably below overflow.
"""

from libc.stdlib cimport qsort

ctypedef long long i64

cdef enum:
    MAXN = 16
    MAXV = 8          # a subdivision cell has at most 6 corners
    MAXCELLS = 152    # n + n(n-1)/2 at n = 16, plus slack
    MAXCAND = 2240    # vertices + 10 candidate points per pair, plus slack
    MAXSUM = 24       # Minkowski accumulator: 6 hull corners x 3 summands

cdef i64 NEG = <i64>-1 << 50

# ray directions in the fixed order W, S, NE
cdef i64 DIRX[3]
cdef i64 DIRY[3]
DIRX[0] = -1; DIRY[0] = 0
DIRX[1] = 0;  DIRY[1] = -1
DIRX[2] = 1;  DIRY[2] = 1

cdef int CLS_TRI = 0, CLS_PAR = 1, CLS_HEX = 2, CLS_NU4 = 3, CLS_NU5 = 4, CLS_NU6 = 5

CLASS_NAMES = ("Triangle", "Parallelogram", "Hexagon",
               "NonUniform4", "NonUniform5", "NonUniform6")


cdef struct Cell:
    int m
    i64 vx[MAXV]
    i64 vy[MAXV]
    int cls
    i64 dx
    i64 dy
    i64 area2
    int bdry


cdef int _cmp_i64(const void *a, const void *b) noexcept nogil:
    cdef i64 x = (<const i64 *> a)[0]
    cdef i64 y = (<const i64 *> b)[0]
    if x < y:
        return -1
    if x > y:
        return 1
    return 0


cdef inline i64 _cross3(i64 ox, i64 oy, i64 ax, i64 ay, i64 bx, i64 by) noexcept nogil:
    return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)


cdef inline i64 _gcd(i64 a, i64 b) noexcept nogil:
    cdef i64 t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef int _hull(i64 *px, i64 *py, int m, i64 *ox, i64 *oy) noexcept nogil:
    """Convex hull, counterclockwise, lex-min vertex first, collinear
    points dropped; 1 or 2 points for degenerate inputs. Returns count."""
    cdef i64 sx[MAXSUM]
    cdef i64 sy[MAXSUM]
    cdef i64 kx, ky
    cdef int i, j, cnt = 0, lo, hi, k
    # insertion sort by (x, y) with dedup
    for i in range(m):
        kx = px[i]; ky = py[i]
        j = cnt
        while j > 0 and (sx[j - 1] > kx or (sx[j - 1] == kx and sy[j - 1] > ky)):
            j -= 1
        if j < cnt and sx[j] == kx and sy[j] == ky:
            continue
        k = cnt
        while k > j:
            sx[k] = sx[k - 1]; sy[k] = sy[k - 1]
            k -= 1
        sx[j] = kx; sy[j] = ky
        cnt += 1
    if cnt <= 2:
        for i in range(cnt):
            ox[i] = sx[i]; oy[i] = sy[i]
        return cnt
    cdef i64 hx[2 * MAXSUM]
    cdef i64 hy[2 * MAXSUM]
    lo = 0
    for i in range(cnt):
        while lo >= 2 and _cross3(hx[lo - 2], hy[lo - 2], hx[lo - 1], hy[lo - 1], sx[i], sy[i]) <= 0:
            lo -= 1
        hx[lo] = sx[i]; hy[lo] = sy[i]
        lo += 1
    hi = lo
    for i in range(cnt - 1, -1, -1):
        while hi - lo >= 2 and _cross3(hx[hi - 2], hy[hi - 2], hx[hi - 1], hy[hi - 1], sx[i], sy[i]) <= 0:
            hi -= 1
        hx[hi] = sx[i]; hy[hi] = sy[i]
        hi += 1
    # hull = lower[:-1] + upper[:-1]; lower occupies [0, lo), upper [lo, hi)
    k = 0
    for i in range(lo - 1):
        ox[k] = hx[i]; oy[k] = hy[i]
        k += 1
    for i in range(lo, hi - 1):
        ox[k] = hx[i]; oy[k] = hy[i]
        k += 1
    return k


cdef inline int _argmask(i64 vx, i64 vy, i64 qx, i64 qy) noexcept nogil:
    """Argmax bitmask at q for the line with vertex v: bit0 = x term,
    bit1 = y term, bit2 = constant term."""
    cdef i64 t1 = qx - vx
    cdef i64 t2 = qy - vy
    cdef i64 m = t1
    if t2 > m:
        m = t2
    if 0 > m:
        m = 0
    return (t1 == m) | ((t2 == m) << 1) | ((0 == m) << 2)


cdef inline bint _cell_contains(Cell *c, i64 x, i64 y) noexcept nogil:
    cdef int i, j
    for i in range(c.m):
        j = i + 1
        if j == c.m:
            j = 0
        if _cross3(c.vx[i], c.vy[i], c.vx[j], c.vy[j], x, y) < 0:
            return False
    return True


cdef bint _interiors_disjoint(Cell *p, Cell *q) noexcept nogil:
    """Separating-axis test flush with an edge of either polygon."""
    cdef int i, j, k, v
    cdef Cell *a
    cdef Cell *b
    cdef bint all_out
    for k in range(2):
        a = p if k == 0 else q
        b = q if k == 0 else p
        for i in range(a.m):
            j = i + 1
            if j == a.m:
                j = 0
            all_out = True
            for v in range(b.m):
                if _cross3(a.vx[i], a.vy[i], a.vx[j], a.vy[j], b.vx[v], b.vy[v]) > 0:
                    all_out = False
                    break
            if all_out:
                return True
    return False


cdef bint _shares_edge(Cell *p, Cell *q) noexcept nogil:
    """Positive-length collinear overlap between any edges."""
    cdef int i, j, i2, j2
    cdef i64 ax, ay, dx, dy, len2, tc, td, lo, hi
    for i in range(p.m):
        i2 = i + 1
        if i2 == p.m:
            i2 = 0
        ax = p.vx[i]; ay = p.vy[i]
        dx = p.vx[i2] - ax; dy = p.vy[i2] - ay
        len2 = dx * dx + dy * dy
        for j in range(q.m):
            j2 = j + 1
            if j2 == q.m:
                j2 = 0
            if (q.vx[j] - ax) * dy != (q.vy[j] - ay) * dx:
                continue
            if (q.vx[j2] - ax) * dy != (q.vy[j2] - ay) * dx:
                continue
            tc = (q.vx[j] - ax) * dx + (q.vy[j] - ay) * dy
            td = (q.vx[j2] - ax) * dx + (q.vy[j2] - ay) * dy
            lo = tc if tc < td else td
            hi = tc if tc > td else td
            if hi > len2:
                hi = len2
            if lo < 0:
                lo = 0
            if hi > lo:
                return True
    return False


cdef int _edge_class_mask(Cell *c) noexcept nogil:
    """Bitmask of edge direction classes: 1 horizontal, 2 vertical,
    4 antidiagonal, 8 anything else."""
    cdef int i, j, mask = 0
    cdef i64 dx, dy, g
    for i in range(c.m):
        j = i + 1
        if j == c.m:
            j = 0
        dx = c.vx[j] - c.vx[i]
        dy = c.vy[j] - c.vy[i]
        g = _gcd(dx, dy)
        dx = dx // g
        dy = dy // g
        if dy < 0 or (dy == 0 and dx < 0):
            dx = -dx
            dy = -dy
        if dx == 1 and dy == 0:
            mask |= 1
        elif dx == 0 and dy == 1:
            mask |= 2
        elif dx == -1 and dy == 1:
            mask |= 4
        else:
            mask |= 8
    return mask


cdef bint _corner_pattern(Cell *s, i64 bx, i64 by) noexcept nogil:
    """Parallelogram in one of the three corner slots of the triangle
    with right-angle corner (bx, by)."""
    cdef int mask = _edge_class_mask(s)
    cdef int i
    cdef i64 mx, my, ay
    if mask == 3:  # horizontal + vertical: maximal corner at the base
        mx = s.vx[0]; my = s.vy[0]
        for i in range(1, s.m):
            if s.vx[i] > mx:
                mx = s.vx[i]
            if s.vy[i] > my:
                my = s.vy[i]
        return mx == bx and my == by
    if mask == 6:  # vertical + antidiagonal: max-x then min-y corner
        mx = s.vx[0]
        for i in range(1, s.m):
            if s.vx[i] > mx:
                mx = s.vx[i]
        ay = NEG
        for i in range(s.m):
            if s.vx[i] == mx and (ay == NEG or s.vy[i] < ay):
                ay = s.vy[i]
        return mx == bx and ay == by + 1
    if mask == 5:  # horizontal + antidiagonal: unique min-x corner
        mx = s.vx[0]; my = s.vy[0]
        for i in range(1, s.m):
            if s.vx[i] < mx:
                mx = s.vx[i]
                my = s.vy[i]
        return mx == bx + 1 and my == by
    return False


def analyze_ints(points):
    """The per-configuration analysis record for integer points.

    Same shape as analysis.analyze_config: counts, flags, excess and the
    violations list with the shared suite vocabulary.
    """
    cdef int n = len(points)
    if n < 1:
        raise ValueError("need at least one point")
    if n > MAXN:
        raise ValueError(f"kernel supports at most {MAXN} points, got {n}")

    cdef i64 px[MAXN]
    cdef i64 py[MAXN]
    cdef i64 vx[MAXN]
    cdef i64 vy[MAXN]
    cdef int i, j, r1, r2
    cdef i64 limit = <i64>1 << 20
    for i in range(n):
        px[i] = points[i][0]
        py[i] = points[i][1]
        if px[i] > limit or px[i] < -limit or py[i] > limit or py[i] < -limit:
            raise ValueError("kernel coordinate bound exceeded")
        vx[i] = -px[i]
        vy[i] = -py[i]
    for i in range(n):
        for j in range(i + 1, n):
            if vx[i] == vx[j] and vy[i] == vy[j]:
                raise ValueError(f"duplicate point at index {j}")

    violations = []

    # --- pairwise stable intersections and candidate points ------------
    cdef i64 candkey[MAXCAND]
    cdef int ncand = 0
    cdef i64 stabkey[MAXCAND]
    cdef int nstab = 0
    cdef i64 OFF = <i64>1 << 23
    cdef i64 SHIFT = <i64>1 << 25

    cdef i64 ax, ay, bx, by, dx, dy, denom, tn, sn, t, s, cx, cy
    cdef i64 wx, wy
    cdef int hits

    for i in range(n):
        candkey[ncand] = (vx[i] + OFF) * SHIFT + (vy[i] + OFF)
        ncand += 1
    for i in range(n):
        for j in range(i + 1, n):
            ax = vx[i]; ay = vy[i]
            bx = vx[j]; by = vy[j]
            dx = bx - ax; dy = by - ay
            # transversal crossings between the 3 x 3 ray pairs
            hits = 0
            wx = 0; wy = 0
            for r1 in range(3):
                for r2 in range(3):
                    denom = DIRX[r1] * DIRY[r2] - DIRY[r1] * DIRX[r2]
                    if denom == 0:
                        continue
                    tn = dx * DIRY[r2] - dy * DIRX[r2]
                    sn = dx * DIRY[r1] - dy * DIRX[r1]
                    if denom < 0:
                        tn = -tn
                        sn = -sn
                    if tn < 0 or sn < 0:
                        continue
                    cx = ax + DIRX[r1] * tn
                    cy = ay + DIRY[r1] * tn
                    candkey[ncand] = (cx + OFF) * SHIFT + (cy + OFF)
                    ncand += 1
                    hits += 1
                    wx = cx; wy = cy
            if dy == 0 or dx == 0 or dx == dy:
                # coaxial vertices: the stable point is the vertex that
                # lies on the other line
                if dy == 0:
                    if ax < bx:
                        wx = ax; wy = ay
                    else:
                        wx = bx; wy = by
                elif dx == 0:
                    if ay < by:
                        wx = ax; wy = ay
                    else:
                        wx = bx; wy = by
                else:
                    if ax > bx:
                        wx = ax; wy = ay
                    else:
                        wx = bx; wy = by
                stabkey[nstab] = (wx + OFF) * SHIFT + (wy + OFF)
                nstab += 1
                candkey[ncand] = stabkey[nstab - 1]
                ncand += 1
            else:
                if hits != 1:
                    raise AssertionError(
                        f"non-coaxial pair {i},{j} produced {hits} crossings"
                    )
                stabkey[nstab] = (wx + OFF) * SHIFT + (wy + OFF)
                nstab += 1

    qsort(candkey, ncand, sizeof(i64), _cmp_i64)
    qsort(stabkey, nstab, sizeof(i64), _cmp_i64)
    cdef int ncand_u = 0
    for i in range(ncand):
        if i == 0 or candkey[i] != candkey[i - 1]:
            candkey[ncand_u] = candkey[i]
            ncand_u += 1
    cdef int nstab_u = 0
    for i in range(nstab):
        if i == 0 or stabkey[i] != stabkey[i - 1]:
            stabkey[nstab_u] = stabkey[i]
            nstab_u += 1

    cdef int b_pairwise = nstab_u
    cdef int h_pairwise = 0
    for i in range(nstab_u):
        cx = stabkey[i] // SHIFT - OFF
        cy = stabkey[i] % SHIFT - OFF
        for j in range(n):
            if vx[j] == cx and vy[j] == cy:
                h_pairwise += 1
                break
    cdef int k_pairwise = b_pairwise - h_pairwise

    # --- arrangement vertices and their dual cells ----------------------
    cdef Cell cells[MAXCELLS]
    cdef int ncells = 0
    cdef int masks[MAXN]
    cdef int mask, c_full, nz, sa, sb, sc, cls
    cdef i64 accx[MAXSUM]
    cdef i64 accy[MAXSUM]
    cdef i64 sumx[MAXSUM]
    cdef i64 sumy[MAXSUM]
    cdef int acc_m, sum_m, e
    cdef i64 ex[3]
    cdef i64 ey[3]
    cdef int ne
    cdef Cell *cell

    for i in range(ncand_u):
        cx = candkey[i] // SHIFT - OFF
        cy = candkey[i] % SHIFT - OFF
        c_full = 0; sa = 0; sb = 0; sc = 0
        for j in range(n):
            mask = _argmask(vx[j], vy[j], cx, cy)
            masks[j] = mask
            if mask == 7:
                c_full += 1
            elif mask == 5:
                sa += 1
            elif mask == 6:
                sb += 1
            elif mask == 3:
                sc += 1
        nz = (sa > 0) + (sb > 0) + (sc > 0)
        if not (c_full == 1 or nz >= 2):
            continue
        if c_full == 1:
            if nz == 0:
                cls = CLS_TRI
            elif nz == 1:
                cls = CLS_NU4
            elif nz == 2:
                cls = CLS_NU5
            else:
                cls = CLS_NU6
        else:
            cls = CLS_PAR if nz == 2 else CLS_HEX
        # Minkowski sum of per-line argmax exponent hulls
        acc_m = 1
        accx[0] = 0; accy[0] = 0
        for j in range(n):
            mask = masks[j]
            ne = 0
            if mask & 1:
                ex[ne] = 1; ey[ne] = 0; ne += 1
            if mask & 2:
                ex[ne] = 0; ey[ne] = 1; ne += 1
            if mask & 4:
                ex[ne] = 0; ey[ne] = 0; ne += 1
            sum_m = 0
            for r1 in range(acc_m):
                for r2 in range(ne):
                    sumx[sum_m] = accx[r1] + ex[r2]
                    sumy[sum_m] = accy[r1] + ey[r2]
                    sum_m += 1
            acc_m = _hull(sumx, sumy, sum_m, accx, accy)
        if ncells >= MAXCELLS:
            raise AssertionError("cell capacity exceeded")
        cell = &cells[ncells]
        ncells += 1
        cell.m = acc_m
        for j in range(acc_m):
            cell.vx[j] = accx[j]
            cell.vy[j] = accy[j]
        cell.cls = cls
        cell.dx = cx
        cell.dy = cy
        cell.area2 = 0
        for j in range(acc_m):
            e = j + 1
            if e == acc_m:
                e = 0
            cell.area2 += accx[j] * accy[e] - accy[j] * accx[e]
        cell.bdry = 0
        for j in range(acc_m):
            e = j + 1
            if e == acc_m:
                e = 0
            if accx[j] == 0 and accx[e] == 0:
                cell.bdry += 1
            elif accy[j] == 0 and accy[e] == 0:
                cell.bdry += 1
            elif accx[j] + accy[j] == n and accx[e] + accy[e] == n:
                cell.bdry += 1

    # --- counts and identity suites -------------------------------------
    cdef int t_count = ncells
    cdef int triangles = 0, k_faces = 0, h_faces = 0
    for i in range(ncells):
        if cells[i].cls == CLS_TRI:
            triangles += 1
        elif cells[i].cls == CLS_PAR or cells[i].cls == CLS_HEX:
            k_faces += 1
        else:
            h_faces += 1
    cdef int b_faces = t_count - triangles

    counts_repr = (
        f"Counts(n={n}, t={t_count}, triangles={triangles}, "
        f"b={b_faces}, k={k_faces}, h={h_faces})"
    )
    if t_count != triangles + b_faces:
        violations.append(["count_identities", f"t != triangles + b: {counts_repr}"])
    if b_faces != k_faces + h_faces:
        violations.append(["count_identities", f"b != k + h: {counts_repr}"])
    if h_faces != n - triangles:
        violations.append(["count_identities", f"h != n - triangles: {counts_repr}"])
    if not (n <= t_count <= n * (n - 1) // 2 + n):
        violations.append(
            ["count_identities", f"t out of range [n, n(n-1)/2 + n]: {counts_repr}"]
        )
    if (b_faces, k_faces, h_faces) != (b_pairwise, k_pairwise, h_pairwise):
        violations.append(
            [
                "cross_oracle",
                f"faces give b={b_faces} k={k_faces} h={h_faces}, pairwise "
                f"intersections give b={b_pairwise} k={k_pairwise} h={h_pairwise}",
            ]
        )
    if t_count == n and triangles > 3:
        violations.append(
            ["max_triangles", f"t=n={t_count} but {triangles} triangles"]
        )

    # --- tiling ----------------------------------------------------------
    cdef bint tiling_ok = True
    cdef i64 area_total = 0
    for i in range(ncells):
        cell = &cells[i]
        for j in range(cell.m):
            if cell.vx[j] < 0 or cell.vy[j] < 0 or cell.vx[j] + cell.vy[j] > n:
                violations.append(
                    [
                        "tiling",
                        f"cell at ({cell.dx}, {cell.dy}) leaves {n}*Delta_2 "
                        f"at ({cell.vx[j]},{cell.vy[j]})",
                    ]
                )
                tiling_ok = False
                break
        if not tiling_ok:
            break
        area_total += cell.area2
    if tiling_ok and area_total != <i64>n * n:
        violations.append(
            ["tiling", f"cell areas sum to {area_total}/2, expected {n * n}/2 for n={n}"]
        )
        tiling_ok = False
    if tiling_ok:
        for i in range(ncells):
            if not tiling_ok:
                break
            for j in range(i + 1, ncells):
                if not _interiors_disjoint(&cells[i], &cells[j]):
                    violations.append(
                        [
                            "tiling",
                            f"cells at ({cells[i].dx}, {cells[i].dy}) and "
                            f"({cells[j].dx}, {cells[j].dy}) overlap",
                        ]
                    )
                    tiling_ok = False
                    break

    near_pencil = None
    cdef bint near
    cdef i64 lift[(MAXN + 1) * (MAXN + 1)]
    cdef i64 lift2[(MAXN + 1) * (MAXN + 1)]
    cdef int ii, jj, width = n + 1
    cdef i64 best, cand2, D, h0, h1, h2, beta, gamma, alpha, want, got
    cdef int ti
    cdef bint ok_flag
    cdef int m_noncorner = 0
    cdef int union_count = 0
    cdef int det_count
    cdef i64 basex, basey

    if tiling_ok:
        # cell edge directions
        for i in range(ncells):
            cell = &cells[i]
            if _edge_class_mask(cell) & 8:
                for j in range(cell.m):
                    e = j + 1
                    if e == cell.m:
                        e = 0
                    dx = cell.vx[e] - cell.vx[j]
                    dy = cell.vy[e] - cell.vy[j]
                    if not (dx == 0 or dy == 0 or dx == -dy):
                        violations.append(
                            [
                                "cell_edges",
                                f"cell at ({cell.dx}, {cell.dy}) has edge ({dx},{dy})",
                            ]
                        )

        # lift by dynamic programming, then the regularity scan
        for ii in range(width * width):
            lift[ii] = NEG
        lift[0] = 0
        for j in range(n):
            for ii in range(width * width):
                lift2[ii] = NEG
            for ii in range(width):
                for jj in range(width - ii):
                    best = lift[ii * width + jj]
                    if ii > 0 and lift[(ii - 1) * width + jj] != NEG:
                        cand2 = lift[(ii - 1) * width + jj] + px[j]
                        if cand2 > best:
                            best = cand2
                    if jj > 0 and lift[ii * width + jj - 1] != NEG:
                        cand2 = lift[ii * width + jj - 1] + py[j]
                        if cand2 > best:
                            best = cand2
                    lift2[ii * width + jj] = best
            for ii in range(width * width):
                lift[ii] = lift2[ii]

        ok_flag = True
        for i in range(ncells):
            if not ok_flag:
                break
            cell = &cells[i]
            D = _cross3(cell.vx[0], cell.vy[0], cell.vx[1], cell.vy[1],
                        cell.vx[2], cell.vy[2])
            if D <= 0:
                violations.append(
                    ["regularity", f"cell at ({cell.dx}, {cell.dy}) is not counterclockwise"]
                )
                ok_flag = False
                break
            h0 = lift[cell.vx[0] * width + cell.vy[0]]
            h1 = lift[cell.vx[1] * width + cell.vy[1]]
            h2 = lift[cell.vx[2] * width + cell.vy[2]]
            beta = (h1 - h0) * (cell.vy[2] - cell.vy[0]) - (h2 - h0) * (cell.vy[1] - cell.vy[0])
            gamma = (cell.vx[1] - cell.vx[0]) * (h2 - h0) - (cell.vx[2] - cell.vx[0]) * (h1 - h0)
            alpha = D * h0 - beta * cell.vx[0] - gamma * cell.vy[0]
            for ii in range(width):
                if not ok_flag:
                    break
                for jj in range(width - ii):
                    want = D * lift[ii * width + jj]
                    got = alpha + beta * ii + gamma * jj
                    if _cell_contains(cell, ii, jj):
                        if got != want:
                            violations.append(
                                [
                                    "regularity",
                                    f"cell at ({cell.dx}, {cell.dy}): lift and affine "
                                    f"fit disagree at lattice point ({ii}, {jj})",
                                ]
                            )
                            ok_flag = False
                            break
                    elif got < want:
                        violations.append(
                            [
                                "regularity",
                                f"cell at ({cell.dx}, {cell.dy}): affine fit fails "
                                f"to dominate the lift at ({ii}, {jj})",
                            ]
                        )
                        ok_flag = False
                        break

        # near-pencil and the determined-face suites
        near = True
        for i in range(ncells):
            if cells[i].cls == CLS_TRI and cells[i].bdry < 1:
                near = False
                break
        near_pencil = bool(near)

        determined = [None] * ncells
        union_flags = [False] * ncells
        adj_tri_count = [0] * ncells
        for ti in range(ncells):
            if cells[ti].cls != CLS_TRI:
                continue
            basex = cells[ti].vx[0]
            basey = cells[ti].vy[0]
            for j in range(1, cells[ti].m):
                if cells[ti].vx[j] < basex:
                    basex = cells[ti].vx[j]
                if cells[ti].vy[j] < basey:
                    basey = cells[ti].vy[j]
            det_count = 0
            det_list = []
            for j in range(ncells):
                if j == ti:
                    continue
                cls = cells[j].cls
                if cls != CLS_PAR and cls != CLS_HEX:
                    continue
                if _shares_edge(&cells[ti], &cells[j]):
                    det_count += 1
                    det_list.append(j)
                    if cls == CLS_PAR:
                        adj_tri_count[j] += 1
                elif cls == CLS_PAR and _corner_pattern(&cells[j], basex, basey):
                    det_count += 1
                    det_list.append(j)
            if det_count > 6:
                raise AssertionError(
                    f"triangle at ({cells[ti].dx}, {cells[ti].dy}) determined "
                    f"{det_count} faces, maximum is 6"
                )
            determined[ti] = det_list
            if cells[ti].bdry < 2:
                m_noncorner += 1
                for j in det_list:
                    if not union_flags[j]:
                        union_flags[j] = True
                        union_count += 1
            if cells[ti].bdry == 0 and det_count < 3:
                violations.append(
                    [
                        "determined_minimum",
                        f"triangle at ({cells[ti].dx}, {cells[ti].dy}) determines "
                        f"{det_count} faces, needs 3",
                    ]
                )
            elif cells[ti].bdry == 1 and det_count < 1:
                violations.append(
                    [
                        "determined_minimum",
                        f"triangle at ({cells[ti].dx}, {cells[ti].dy}) determines "
                        f"{det_count} faces, needs 1",
                    ]
                )
        if not (k_faces >= union_count >= m_noncorner):
            violations.append(
                ["determined_union", f"k={k_faces}, union={union_count}, m={m_noncorner}"]
            )
        for j in range(ncells):
            if adj_tri_count[j] < 2:
                continue
            for i in range(cells[j].m):
                e = i + 1
                if e == cells[j].m:
                    e = 0
                dx = cells[j].vx[e] - cells[j].vx[i]
                dy = cells[j].vy[e] - cells[j].vy[i]
                if dx < -1 or dx > 1 or dy < -1 or dy > 1:
                    violations.append(
                        [
                            "unit_parallelogram",
                            f"parallelogram adjacent to {adj_tri_count[j]} "
                            f"triangles has a non-unit edge",
                        ]
                    )
                    break

    # --- the bound --------------------------------------------------------
    cdef int excess = b_pairwise - (n - 3)
    bound_holds = b_pairwise >= n - 3
    equality = b_pairwise == n - 3
    consistent = (not equality) or bool(near_pencil)
    if n >= 4:
        if not bound_holds:
            violations.append(["bound", f"b={b_pairwise} < v-3={n - 3}"])
        if equality and near_pencil is False:
            violations.append(
                ["near_pencil", f"b=v-3={b_pairwise} but subdivision is not a near-pencil"]
            )

    return {
        "v": n,
        "t": t_count,
        "triangles": triangles,
        "b": b_faces,
        "k": k_faces,
        "h": h_faces,
        "near_pencil": near_pencil,
        "bound_holds": bound_holds,
        "equality": equality,
        "consistent": consistent,
        "excess": excess,
        "violations": violations,
    }


def has_ordinary_line(points):
    """True iff some stable line of the configuration passes through
    exactly two of the points. Fast predicate for witness searches."""
    cdef int n = len(points)
    if n < 2:
        raise ValueError("need at least two points")
    if n > MAXN:
        raise ValueError(f"kernel supports at most {MAXN} points, got {n}")
    cdef i64 vx[MAXN]
    cdef i64 vy[MAXN]
    cdef i64 limit = <i64>1 << 20
    cdef int i, j, r1, r2, hits
    for i in range(n):
        vx[i] = -points[i][0]
        vy[i] = -points[i][1]
        if vx[i] > limit or vx[i] < -limit or vy[i] > limit or vy[i] < -limit:
            raise ValueError("kernel coordinate bound exceeded")
    cdef i64 stabkey[MAXCAND]
    cdef int nstab = 0
    cdef i64 OFF = <i64>1 << 23
    cdef i64 SHIFT = <i64>1 << 25
    cdef i64 ax, ay, bx, by, dx, dy, denom, tn, sn, cx, cy, wx, wy
    for i in range(n):
        for j in range(i + 1, n):
            ax = vx[i]; ay = vy[i]
            bx = vx[j]; by = vy[j]
            dx = bx - ax; dy = by - ay
            if dy == 0:
                if ax < bx:
                    wx = ax; wy = ay
                else:
                    wx = bx; wy = by
            elif dx == 0:
                if ay < by:
                    wx = ax; wy = ay
                else:
                    wx = bx; wy = by
            elif dx == dy:
                if ax > bx:
                    wx = ax; wy = ay
                else:
                    wx = bx; wy = by
            else:
                hits = 0
                wx = 0; wy = 0
                for r1 in range(3):
                    for r2 in range(3):
                        denom = DIRX[r1] * DIRY[r2] - DIRY[r1] * DIRX[r2]
                        if denom == 0:
                            continue
                        tn = dx * DIRY[r2] - dy * DIRX[r2]
                        sn = dx * DIRY[r1] - dy * DIRX[r1]
                        if denom < 0:
                            tn = -tn
                            sn = -sn
                        if tn < 0 or sn < 0:
                            continue
                        wx = ax + DIRX[r1] * tn
                        wy = ay + DIRY[r1] * tn
                        hits += 1
                if hits != 1:
                    raise AssertionError(
                        f"non-coaxial pair {i},{j} produced {hits} crossings"
                    )
            stabkey[nstab] = (wx + OFF) * SHIFT + (wy + OFF)
            nstab += 1
    qsort(stabkey, nstab, sizeof(i64), _cmp_i64)
    cdef int incident, mask
    for i in range(nstab):
        if i > 0 and stabkey[i] == stabkey[i - 1]:
            continue
        cx = stabkey[i] // SHIFT - OFF
        cy = stabkey[i] % SHIFT - OFF
        incident = 0
        for j in range(n):
            mask = _argmask(vx[j], vy[j], cx, cy)
            if mask != 1 and mask != 2 and mask != 4:
                incident += 1
        if incident == 2:
            return True
    return False
