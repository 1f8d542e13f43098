"""Independent brute-force oracles and random generators used by the tests.

Everything here is deliberately naive: enumeration over bounding boxes,
pairwise segment tests, and rational lower envelopes via Fraction.  None of
it shares logic with the closed forms or the production hull code, so the
tests compare genuinely independent computations.
"""

from fractions import Fraction
from functools import cmp_to_key

from ideal2d.ideals import MonomialIdeal
from ideal2d.lattice import LatticePoint, LatticePolygon


# --- segments and polygons ---------------------------------------------------


def on_segment(p, a, b) -> bool:
    """Point p lies on the closed segment from a to b."""
    if (b - a).cross(p - a) != 0:
        return False
    return (
        min(a.u, b.u) <= p.u <= max(a.u, b.u)
        and min(a.v, b.v) <= p.v <= max(a.v, b.v)
    )


def brute_segment_count(a, b) -> int:
    a, b = LatticePoint(*a), LatticePoint(*b)
    count = 0
    for u in range(min(a.u, b.u), max(a.u, b.u) + 1):
        for v in range(min(a.v, b.v), max(a.v, b.v) + 1):
            count += on_segment(LatticePoint(u, v), a, b)
    return count


def _edges_of(vertices):
    n = len(vertices)
    return [(vertices[i], vertices[(i + 1) % n]) for i in range(n)]


def _bbox(vertices):
    return (
        min(p.u for p in vertices),
        max(p.u for p in vertices),
        min(p.v for p in vertices),
        max(p.v for p in vertices),
    )


def on_polygon_boundary(p, vertices) -> bool:
    return any(on_segment(p, a, b) for a, b in _edges_of(vertices))


def point_strictly_inside(p, vertices) -> bool:
    """Exact ray-crossing parity test, boundary excluded."""
    if on_polygon_boundary(p, vertices):
        return False
    crossings = 0
    for a, b in _edges_of(vertices):
        if (a.v > p.v) != (b.v > p.v):
            # sign of (edge x at height p.v) - p.u equals sign of t/dy
            dy = b.v - a.v
            t = (p.v - a.v) * (b.u - a.u) - (p.u - a.u) * dy
            if t != 0 and (t > 0) == (dy > 0):
                crossings += 1
    return crossings % 2 == 1


def brute_boundary_count(polygon: LatticePolygon) -> int:
    lo_u, hi_u, lo_v, hi_v = _bbox(polygon.vertices)
    count = 0
    for u in range(lo_u, hi_u + 1):
        for v in range(lo_v, hi_v + 1):
            count += on_polygon_boundary(LatticePoint(u, v), polygon.vertices)
    return count


def brute_interior_count(polygon: LatticePolygon) -> int:
    lo_u, hi_u, lo_v, hi_v = _bbox(polygon.vertices)
    count = 0
    for u in range(lo_u, hi_u + 1):
        for v in range(lo_v, hi_v + 1):
            count += point_strictly_inside(LatticePoint(u, v), polygon.vertices)
    return count


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def segments_intersect(a, b, c, d) -> bool:
    """Closed segments ab and cd share at least one point."""
    s1 = _sign((b - a).cross(c - a))
    s2 = _sign((b - a).cross(d - a))
    s3 = _sign((d - c).cross(a - c))
    s4 = _sign((d - c).cross(b - c))
    if s1 * s2 < 0 and s3 * s4 < 0:
        return True
    if s1 == 0 and on_segment(c, a, b):
        return True
    if s2 == 0 and on_segment(d, a, b):
        return True
    if s3 == 0 and on_segment(a, c, d):
        return True
    if s4 == 0 and on_segment(b, c, d):
        return True
    return False


def is_simple_polygon(vertices) -> bool:
    n = len(vertices)
    if n < 3 or len(set(vertices)) != n:
        return False
    edges = _edges_of(vertices)
    for prev, (b, c) in zip(edges, edges[1:] + edges[:1]):
        a = prev[0]
        # adjacent edges may only meet at the shared vertex; a collinear
        # backtrack retraces the previous edge
        d1, d2 = b - a, c - b
        if d1.cross(d2) == 0 and d1.u * d2.u + d1.v * d2.v <= 0:
            return False
    for i in range(n):
        a, b = edges[i]
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue
            if segments_intersect(a, b, *edges[j]):
                return False
    return True


def convex_hull(points):
    """Full convex hull, counterclockwise, via the monotone chain."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def build(seq):
        chain = []
        for p in seq:
            while len(chain) >= 2 and (chain[-1] - chain[-2]).cross(p - chain[-1]) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = build(pts)
    upper = build(list(reversed(pts)))
    return lower[:-1] + upper[:-1]


def brute_minkowski(p1: LatticePolygon, p2: LatticePolygon) -> LatticePolygon:
    sums = [a + b for a in p1.vertices for b in p2.vertices]
    return LatticePolygon(convex_hull(sums))


# --- Newton region membership via rational lower envelopes -------------------


def envelope_min_v(gens, x: int) -> Fraction:
    """Least v with (x', v) in conv(gens) for some x' <= x, as a Fraction.

    Takes the minimum over all generator pair segments; gens must be the
    minimal antichain (sorted, v decreasing), so each segment is decreasing
    and its minimum over the allowed range sits at the right end.
    """
    a = max(g.u for g in gens)
    x = min(x, a)
    best = None
    for i, g in enumerate(gens):
        for h in gens[i:]:
            lo, hi = (g, h) if g.u <= h.u else (h, g)
            if lo.u > x:
                continue
            if x >= hi.u:
                value = Fraction(min(lo.v, hi.v))
            else:
                value = Fraction(lo.v) + Fraction(
                    (x - lo.u) * (hi.v - lo.v), hi.u - lo.u
                )
            if best is None or value < best:
                best = value
    assert best is not None
    return best


def in_newton(gens, p) -> bool:
    """Membership of p in the Newton region, via the rational envelope."""
    p = LatticePoint(*p)
    if p.u < 0 or p.v < 0:
        return False
    if p.u > max(g.u for g in gens):
        return p.v >= min(g.v for g in gens)
    return Fraction(p.v) >= envelope_min_v(gens, p.u)


def minimal_points(points):
    """O(k^2) divisibility filter to the minimal antichain."""
    pts = sorted(set(points))
    return [
        p
        for p in pts
        if not any(q != p and q.u <= p.u and q.v <= p.v for q in pts)
    ]


def brute_closure_generators(raw) -> list[LatticePoint]:
    ideal = MonomialIdeal(raw)
    gens = ideal.generators
    a = gens[-1].u
    corners = []
    for u in range(a + 1):
        v = 0
        while not in_newton(gens, (u, v)):
            v += 1
        corners.append(LatticePoint(u, v))
    return minimal_points(corners)


def in_staircase(gens, u: int, v: int) -> bool:
    return any(g.u <= u and g.v <= v for g in gens)


def brute_quotient_length(big: MonomialIdeal, small: MonomialIdeal) -> int:
    """ℓ(big/small) by direct divisibility enumeration; needs small ⊆ big.

    Neither ideal has to be (x, y)-primary.  The difference is finite iff
    both ideals share their largest monomial factor; the scan box is bounded
    by the extreme generator exponents of the smaller ideal.
    """
    lim_u = max(g.u for g in small.generators)
    lim_v = max(g.v for g in small.generators)
    count = 0
    for u in range(lim_u + 1):
        for v in range(lim_v + 1):
            in_small = in_staircase(small.generators, u, v)
            in_big = in_staircase(big.generators, u, v)
            assert in_big or not in_small  # containment check
            count += in_big and not in_small
    return count


def brute_complement_count(raw) -> int:
    """Lattice points of the positive quadrant outside the Newton region."""
    ideal = MonomialIdeal(raw)
    gens = ideal.generators
    a = gens[-1].u
    b = gens[0].v
    count = 0
    for u in range(a):
        for v in range(b):
            count += not in_newton(gens, (u, v))
    return count


# --- random generators --------------------------------------------------------


def random_complete_ideal(rng, max_intercept=20) -> MonomialIdeal:
    a = rng.randint(1, max_intercept)
    b = rng.randint(1, max_intercept)
    points = [(a, 0), (0, b)]
    for _ in range(rng.randint(0, 4)):
        points.append((rng.randint(1, a), rng.randint(1, b)))
    return MonomialIdeal(points).integral_closure()


def random_m_primary_ideal(rng, max_intercept=12) -> MonomialIdeal:
    """Random (x, y)-primary ideal, complete or not."""
    a = rng.randint(1, max_intercept)
    b = rng.randint(1, max_intercept)
    points = [(a, 0), (0, b)]
    for _ in range(rng.randint(0, 4)):
        points.append((rng.randint(1, a), rng.randint(1, b)))
    return MonomialIdeal(points)


def random_convex_polygon(rng, span=10) -> LatticePolygon:
    while True:
        pts = {
            LatticePoint(rng.randint(0, span), rng.randint(0, span))
            for _ in range(rng.randint(3, 9))
        }
        hull = convex_hull(list(pts))
        if len(hull) >= 3:
            return LatticePolygon(hull)


def _angular_order(points):
    k = len(points)
    sx = sum(p.u for p in points)
    sy = sum(p.v for p in points)

    def rel(p):
        return p.u * k - sx, p.v * k - sy

    def half(d):
        dx, dy = d
        return 0 if dy > 0 or (dy == 0 and dx > 0) else 1

    def compare(p, q):
        dp, dq = rel(p), rel(q)
        hp, hq = half(dp), half(dq)
        if hp != hq:
            return -1 if hp < hq else 1
        cross = dp[0] * dq[1] - dp[1] * dq[0]
        if cross != 0:
            return -1 if cross > 0 else 1
        rp = dp[0] * dp[0] + dp[1] * dp[1]
        rq = dq[0] * dq[0] + dq[1] * dq[1]
        return (rp > rq) - (rp < rq)

    return sorted(points, key=cmp_to_key(compare))


def random_simple_polygon(rng, span=8) -> LatticePolygon:
    """Random simple (often non-convex) lattice polygon.

    Distinct points sorted by angle around their centroid give a candidate
    tour; candidates failing the exact simplicity check are resampled.
    """
    while True:
        wanted = rng.randint(3, 10)
        points = set()
        while len(points) < wanted:
            points.add(LatticePoint(rng.randint(-span, span), rng.randint(-span, span)))
        points = list(points)
        k = len(points)
        sx = sum(p.u for p in points)
        sy = sum(p.v for p in points)
        if any(p.u * k - sx == 0 and p.v * k - sy == 0 for p in points):
            continue
        ordered = _angular_order(points)
        if not is_simple_polygon(ordered):
            continue
        polygon = LatticePolygon(ordered)
        if len(polygon.vertices) < 3:
            continue
        return polygon
