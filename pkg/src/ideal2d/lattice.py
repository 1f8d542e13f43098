"""Exact lattice geometry in the plane.

Integer points, lattice polygons, boundary/interior point counts via Pick's
theorem, Minkowski sums and mixed areas.  Areas are kept doubled (twice the
Euclidean area) so every quantity in this module is an exact integer; Python
integers are arbitrary precision, so there is no overflow to worry about.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Iterator, NamedTuple

from .errors import ConsistencyError, DomainError


class LatticePoint(NamedTuple):
    """Integer point (u, v); also read as the exponent vector of x^u * y^v."""

    u: int
    v: int

    def __add__(self, other: "LatticePoint") -> "LatticePoint":
        return LatticePoint(self.u + other.u, self.v + other.v)

    def __sub__(self, other: "LatticePoint") -> "LatticePoint":
        return LatticePoint(self.u - other.u, self.v - other.v)

    def __neg__(self) -> "LatticePoint":
        return LatticePoint(-self.u, -self.v)

    def __mul__(self, k: int) -> "LatticePoint":
        return LatticePoint(self.u * k, self.v * k)

    __rmul__ = __mul__

    def cross(self, other: "LatticePoint") -> int:
        return self.u * other.v - self.v * other.u

    def divides(self, other: "LatticePoint") -> bool:
        """Componentwise <=, i.e. x^u * y^v divides the other monomial."""
        return self.u <= other.u and self.v <= other.v


def as_lattice_point(value) -> LatticePoint:
    """Coerce a 2-sequence to a LatticePoint, rejecting non-integer parts."""
    if isinstance(value, LatticePoint):
        return value
    u, v = value
    if not isinstance(u, int) or not isinstance(v, int):
        raise DomainError(f"lattice point components must be integers: {value!r}")
    return LatticePoint(u, v)


def segment_lattice_count(a, b) -> int:
    """Number of lattice points on the closed segment from a to b."""
    a = as_lattice_point(a)
    b = as_lattice_point(b)
    return gcd(abs(b.u - a.u), abs(b.v - a.v)) + 1


def _signed_doubled_area(points: list[LatticePoint]) -> int:
    n = len(points)
    return sum(points[i].cross(points[(i + 1) % n]) for i in range(n))


def _dedup_cycle(points: list[LatticePoint]) -> list[LatticePoint]:
    out: list[LatticePoint] = []
    for p in points:
        if not out or p != out[-1]:
            out.append(p)
    while len(out) > 1 and out[0] == out[-1]:
        out.pop()
    return out


def _prune_collinear(points: list[LatticePoint]) -> list[LatticePoint]:
    # Repeated passes: one pass may expose new straight corners at the seams.
    changed = True
    while changed and len(points) > 2:
        changed = False
        kept: list[LatticePoint] = []
        n = len(points)
        for i in range(n):
            prev, cur, nxt = points[i - 1], points[i], points[(i + 1) % n]
            if (cur - prev).cross(nxt - cur) == 0:
                changed = True
            else:
                kept.append(cur)
        points = _dedup_cycle(kept)
    return points


class LatticePolygon:
    """Polygon with lattice vertices, counterclockwise and implicitly closed.

    Construction normalizes the chain: consecutive duplicates are dropped,
    vertices interior to a straight edge are pruned, and clockwise input is
    reversed.  A fully collinear vertex set collapses to its extreme points
    (a degenerate polygon); the area and counting operations reject those.
    """

    __slots__ = ("vertices", "convex")

    def __init__(self, vertices: Iterable) -> None:
        points = [as_lattice_point(p) for p in vertices]
        if not points:
            raise DomainError("a polygon needs at least one vertex")
        points = _dedup_cycle(points)
        if len(points) >= 3 and all(
            (p - points[0]).cross(q - points[0]) == 0 for p in points for q in points
        ):
            lo, hi = min(points), max(points)
            points = [lo] if lo == hi else [lo, hi]
        if len(points) >= 3:
            points = _prune_collinear(points)
            if _signed_doubled_area(points) < 0:
                points.reverse()
        self.vertices: tuple[LatticePoint, ...] = tuple(points)
        self.convex: bool = len(points) >= 3 and all(
            (points[i] - points[i - 1]).cross(points[(i + 1) % len(points)] - points[i]) > 0
            for i in range(len(points))
        )

    def _canonical(self) -> tuple[LatticePoint, ...]:
        k = self.vertices.index(min(self.vertices))
        return self.vertices[k:] + self.vertices[:k]

    def __eq__(self, other) -> bool:
        if not isinstance(other, LatticePolygon):
            return NotImplemented
        return self._canonical() == other._canonical()

    def __hash__(self) -> int:
        return hash(self._canonical())

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[LatticePoint]:
        return iter(self.vertices)

    def __repr__(self) -> str:
        inner = ", ".join(f"({p.u}, {p.v})" for p in self.vertices)
        return f"LatticePolygon([{inner}])"

    def translated(self, offset) -> "LatticePolygon":
        t = as_lattice_point(offset)
        return LatticePolygon([p + t for p in self.vertices])

    def _edges(self) -> list[tuple[LatticePoint, LatticePoint]]:
        n = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    def doubled_area(self) -> int:
        """Twice the enclosed area (exact, via the shoelace formula)."""
        if len(self.vertices) < 3:
            raise DomainError("area needs a polygon with at least 3 vertices")
        area2 = _signed_doubled_area(list(self.vertices))
        if area2 == 0:
            raise DomainError("degenerate polygon: zero area")
        return area2

    def boundary_lattice_count(self) -> int:
        """Number of lattice points on the boundary (vertices included)."""
        if len(self.vertices) < 3:
            raise DomainError("boundary count needs a polygon with at least 3 vertices")
        return sum(segment_lattice_count(a, b) - 1 for a, b in self._edges())

    def interior_lattice_count(self) -> int:
        """Number of lattice points strictly inside, by Pick's theorem.

        The polygon must be simple; a parity mismatch between the doubled
        area and the boundary count means it was not.
        """
        area2 = self.doubled_area()
        boundary = self.boundary_lattice_count()
        if (area2 - boundary) % 2:
            raise ConsistencyError(
                f"Pick parity violated (doubled area {area2}, boundary {boundary}); "
                "the polygon is not simple"
            )
        interior = (area2 - boundary + 2) // 2
        if interior < 0:
            raise ConsistencyError("negative interior count; the polygon is not simple")
        return interior


def _angle_half(e: LatticePoint) -> int:
    # 0 for directions in (0, pi], 1 for (pi, 2*pi]; matches counterclockwise
    # edge order of a convex polygon started at its bottommost vertex.
    return 0 if e.v > 0 or (e.v == 0 and e.u > 0) else 1


def _edge_cycle(polygon: LatticePolygon) -> tuple[LatticePoint, list[LatticePoint]]:
    verts = polygon.vertices
    k = min(range(len(verts)), key=lambda i: (verts[i].v, verts[i].u))
    ordered = verts[k:] + verts[:k]
    edges = [ordered[i + 1] - ordered[i] for i in range(len(ordered) - 1)]
    edges.append(ordered[0] - ordered[-1])
    return ordered[0], edges


def minkowski_sum(p1: LatticePolygon, p2: LatticePolygon) -> LatticePolygon:
    """Minkowski sum of two convex lattice polygons by the rotating edge merge.

    A single-point polygon is accepted on either side and acts as a pure
    translation.  Degenerate segments and non-convex polygons are rejected.
    """
    if len(p1.vertices) == 1:
        return p2.translated(p1.vertices[0])
    if len(p2.vertices) == 1:
        return p1.translated(p2.vertices[0])
    for p in (p1, p2):
        if len(p.vertices) < 3:
            raise DomainError("Minkowski sum does not support degenerate segments")
        if not p.convex:
            raise DomainError("Minkowski sum requires convex polygons")
    start1, edges1 = _edge_cycle(p1)
    start2, edges2 = _edge_cycle(p2)
    merged: list[LatticePoint] = []
    i = j = 0
    while i < len(edges1) and j < len(edges2):
        a, b = edges1[i], edges2[j]
        ha, hb = _angle_half(a), _angle_half(b)
        if ha != hb:
            if ha < hb:
                merged.append(a)
                i += 1
            else:
                merged.append(b)
                j += 1
            continue
        turn = a.cross(b)
        if turn > 0:
            merged.append(a)
            i += 1
        elif turn < 0:
            merged.append(b)
            j += 1
        else:
            merged.append(a + b)
            i += 1
            j += 1
    merged.extend(edges1[i:])
    merged.extend(edges2[j:])
    start = start1 + start2
    assert sum(merged, LatticePoint(0, 0)) == LatticePoint(0, 0)
    verts = [start]
    for e in merged[:-1]:
        verts.append(verts[-1] + e)
    return LatticePolygon(verts)


def mixed_area(p1: LatticePolygon, p2: LatticePolygon) -> int:
    """Doubled mixed area 2*MV(P1, P2) = V(P1 + P2) - V(P1) - V(P2), doubled."""
    total = minkowski_sum(p1, p2).doubled_area()
    return total - p1.doubled_area() - p2.doubled_area()
