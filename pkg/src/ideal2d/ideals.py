"""Monomial ideals of k[x, y]: minimal generators, Newton boundary, closure.

An ideal is held as its unique minimal generating antichain of exponent
vectors.  The Newton boundary is the chain of compact faces of the Newton
polyhedron; an ideal is integrally closed (complete) exactly when it contains
every lattice point of the polyhedron.
"""

from __future__ import annotations

import warnings
from typing import Iterable

from .errors import DomainError, IncompleteIdealWarning
from .lattice import LatticePoint, LatticePolygon, as_lattice_point, segment_lattice_count


def monomial_str(point) -> str:
    """Render an exponent vector as a monomial in x and y ('1' for (0, 0))."""
    p = as_lattice_point(point)
    parts = []
    if p.u:
        parts.append("x" if p.u == 1 else f"x^{p.u}")
    if p.v:
        parts.append("y" if p.v == 1 else f"y^{p.v}")
    return "*".join(parts) if parts else "1"


def _ceil_div(num: int, den: int) -> int:
    return -(-num // den)


class MonomialIdeal:
    """A nonzero monomial ideal, normalized to its minimal generators.

    Generators form an antichain under componentwise <= and are stored
    sorted by increasing x-exponent (hence decreasing y-exponent).  Values
    are immutable; every operation returns a new ideal.
    """

    __slots__ = ("generators",)

    def __init__(self, generators: Iterable) -> None:
        points = sorted({as_lattice_point(p) for p in generators})
        if not points:
            raise DomainError("a monomial ideal needs at least one generator")
        for p in points:
            if p.u < 0 or p.v < 0:
                raise DomainError(f"negative exponent in generator ({p.u}, {p.v})")
        minimal: list[LatticePoint] = []
        best_v = None
        for p in points:  # sorted by (u, v); keep first strictly smaller v per column
            if best_v is None or p.v < best_v:
                minimal.append(p)
                best_v = p.v
        self.generators: tuple[LatticePoint, ...] = tuple(minimal)

    @classmethod
    def unit(cls) -> "MonomialIdeal":
        return cls([(0, 0)])

    @classmethod
    def maximal(cls) -> "MonomialIdeal":
        """The maximal ideal (x, y)."""
        return cls([(1, 0), (0, 1)])

    @classmethod
    def from_json(cls, data) -> "MonomialIdeal":
        return cls(data)

    def to_json(self) -> list[list[int]]:
        return [[p.u, p.v] for p in self.generators]

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.generators == other.generators

    def __hash__(self) -> int:
        return hash(self.generators)

    def __repr__(self) -> str:
        inner = ", ".join(f"({p.u}, {p.v})" for p in self.generators)
        return f"MonomialIdeal([{inner}])"

    def __str__(self) -> str:
        # x-powers first reads most naturally: "x^3, x*y, y^3"
        return ", ".join(monomial_str(p) for p in reversed(self.generators))

    def __mul__(self, other) -> "MonomialIdeal":
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return MonomialIdeal(
            [g + h for g in self.generators for h in other.generators]
        )

    def __pow__(self, exponent: int) -> "MonomialIdeal":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("ideal powers need a nonnegative integer exponent")
        result = MonomialIdeal.unit()
        for _ in range(exponent):
            result = result * self
        return result

    def is_unit(self) -> bool:
        return self.generators == (LatticePoint(0, 0),)

    def is_m_primary(self) -> bool:
        """True when the ideal is proper and contains a power of each variable."""
        if self.is_unit():
            return False
        return self.generators[0].u == 0 and self.generators[-1].v == 0

    def newton_boundary(self) -> "NewtonBoundary":
        """Compact faces of the Newton polyhedron, from the y-axis to the x-axis."""
        if not self.is_m_primary():
            raise DomainError(
                "Newton boundary needs an (x, y)-primary ideal "
                "(a pure power of each variable)"
            )
        chain: list[LatticePoint] = []
        for p in self.generators:
            while len(chain) >= 2 and (chain[-1] - chain[-2]).cross(p - chain[-1]) <= 0:
                chain.pop()
            chain.append(p)
        return NewtonBoundary(chain)

    def integral_closure(self) -> "MonomialIdeal":
        """Smallest complete ideal containing this one.

        Collects, column by column, the least y-exponent satisfying every
        boundary half-plane of the Newton polyhedron; normalization then
        reduces those staircase corners to the minimal generators.
        """
        boundary = self.newton_boundary()
        constraints = _edge_constraints(boundary.vertices)
        corners = []
        for u in range(boundary.x_intercept + 1):
            v = 0
            for coef_u, coef_v, rhs in constraints:
                short = rhs - coef_u * u
                if short > 0:
                    v = max(v, _ceil_div(short, coef_v))
            corners.append(LatticePoint(u, v))
        return MonomialIdeal(corners)

    def is_complete(self) -> bool:
        """True when the ideal equals its integral closure."""
        return self.integral_closure() == self

    def strip_monomial_factor(self) -> tuple[LatticePoint, "MonomialIdeal"]:
        """Split off the largest common monomial factor.

        Returns (f, J) with self = f * J; in two variables J is always
        either the unit ideal or (x, y)-primary.
        """
        factor = LatticePoint(
            min(p.u for p in self.generators), min(p.v for p in self.generators)
        )
        stripped = MonomialIdeal([p - factor for p in self.generators])
        if not (stripped.is_unit() or stripped.is_m_primary()):
            raise DomainError(
                f"stripped ideal {stripped!r} is not (x, y)-primary"
            )  # unreachable in two variables; kept as a guard
        return factor, stripped


def _edge_constraints(vertices: tuple[LatticePoint, ...]) -> list[tuple[int, int, int]]:
    """Half-plane (coef_u, coef_v, rhs) per boundary edge: coef_u*u + coef_v*v >= rhs."""
    out = []
    for a, b in zip(vertices, vertices[1:]):
        coef_u = a.v - b.v
        coef_v = b.u - a.u
        out.append((coef_u, coef_v, coef_u * a.u + coef_v * a.v))
    return out


class NewtonBoundary:
    """Vertex chain of the compact faces of a Newton polyhedron.

    Runs from (0, b) on the y-axis down to (a, 0) on the x-axis; consecutive
    edges have strictly decreasing slope magnitude.
    """

    __slots__ = ("vertices",)

    def __init__(self, vertices: Iterable) -> None:
        verts = tuple(as_lattice_point(p) for p in vertices)
        if len(verts) < 2:
            raise DomainError("a Newton boundary needs at least two vertices")
        if verts[0].u != 0 or verts[-1].v != 0:
            raise DomainError("a Newton boundary must join the two coordinate axes")
        for a, b in zip(verts, verts[1:]):
            if not (a.u < b.u and a.v > b.v):
                raise DomainError("Newton boundary vertices must step down and right")
        for i in range(1, len(verts) - 1):
            if (verts[i] - verts[i - 1]).cross(verts[i + 1] - verts[i]) <= 0:
                raise DomainError("Newton boundary must be strictly convex at each vertex")
        self.vertices: tuple[LatticePoint, ...] = verts

    @property
    def x_intercept(self) -> int:
        """Least pure x-power exponent in the closure (a)."""
        return self.vertices[-1].u

    @property
    def y_intercept(self) -> int:
        """Least pure y-power exponent in the closure (b)."""
        return self.vertices[0].v

    @property
    def lattice_point_count(self) -> int:
        """Number of lattice points on the boundary chain (l)."""
        return 1 + sum(
            segment_lattice_count(a, b) - 1 for a, b in zip(self.vertices, self.vertices[1:])
        )

    def polygon_below(self) -> LatticePolygon:
        """Region between the boundary and the coordinate axes (may be non-convex)."""
        return LatticePolygon([LatticePoint(0, 0), *reversed(self.vertices)])

    def polygon_above(self) -> LatticePolygon:
        """Convex region between the boundary and the corner (a, b)."""
        corner = LatticePoint(self.x_intercept, self.y_intercept)
        return LatticePolygon([*self.vertices, corner])

    def __eq__(self, other) -> bool:
        if not isinstance(other, NewtonBoundary):
            return NotImplemented
        return self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        inner = ", ".join(f"({p.u}, {p.v})" for p in self.vertices)
        return f"NewtonBoundary([{inner}])"


def ensure_complete(ideal: MonomialIdeal, policy: str = "strict") -> MonomialIdeal:
    """Validate completeness of an (x, y)-primary ideal per the given policy.

    'strict' raises DomainError on an incomplete ideal; 'autoclose' replaces
    it by its integral closure and records an IncompleteIdealWarning.
    """
    if policy not in ("strict", "autoclose"):
        raise ValueError(f"unknown policy {policy!r}; use 'strict' or 'autoclose'")
    closed = ideal.integral_closure()
    if closed == ideal:
        return ideal
    if policy == "strict":
        raise DomainError(
            "ideal is not integrally closed; close it first or use the autoclose policy"
        )
    warnings.warn("input not complete; closed", IncompleteIdealWarning, stacklevel=2)
    return closed
