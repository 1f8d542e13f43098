"""Unique factorization of complete monomial ideals into block ideals.

In two variables every complete (x, y)-primary monomial ideal is, uniquely, a
product of powers of *block ideals*: integral closures of (x^p, y^q) with p
and q coprime.  The factors can be read off the Newton boundary edge by edge,
and multiplying ideals merges their edge sets by slope.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, NamedTuple, Sequence, Union

from .errors import DomainError
from .ideals import MonomialIdeal, NewtonBoundary, ensure_complete, monomial_str
from .lattice import LatticePoint


class Edge(NamedTuple):
    """One Newton boundary edge: horizontal run and vertical drop (both > 0)."""

    run: int
    drop: int

    @property
    def slope(self) -> Fraction:
        return Fraction(self.drop, self.run)


class Block(NamedTuple):
    """Block ideal data: the integral closure of (x^p, y^q) with gcd(p, q) = 1."""

    p: int
    q: int

    @property
    def slope(self) -> Fraction:
        return Fraction(self.q, self.p)

    def ideal(self) -> MonomialIdeal:
        return MonomialIdeal([(self.p, 0), (0, self.q)]).integral_closure()

    def __str__(self) -> str:
        return (
            f"({monomial_str(LatticePoint(self.p, 0))}, "
            f"{monomial_str(LatticePoint(0, self.q))})"
        )


def _as_edge(value) -> Edge:
    e = Edge(*value)
    if not isinstance(e.run, int) or not isinstance(e.drop, int):
        raise DomainError(f"edge components must be integers: {value!r}")
    if e.run < 1 or e.drop < 1:
        raise DomainError(f"edge run and drop must be positive: {value!r}")
    return e


def boundary_edges(boundary: NewtonBoundary) -> list[Edge]:
    """Run/drop pairs of the boundary edges, steepest (leftmost) first."""
    return [
        Edge(b.u - a.u, a.v - b.v)
        for a, b in zip(boundary.vertices, boundary.vertices[1:])
    ]


class BlockFactorization:
    """Factorization into distinct block ideals with multiplicities.

    Factors are ordered by strictly decreasing slope q/p, which makes the
    representation canonical.
    """

    __slots__ = ("factors",)

    def __init__(self, factors: Iterable[tuple]) -> None:
        checked: list[tuple[Block, int]] = []
        for block, multiplicity in factors:
            block = Block(*block)
            if not all(isinstance(x, int) for x in (block.p, block.q, multiplicity)):
                raise DomainError("block factors must be integer triples")
            if block.p < 1 or block.q < 1:
                raise DomainError(f"block exponents must be positive: {block}")
            if gcd(block.p, block.q) != 1:
                raise DomainError(f"block exponents must be coprime: {block}")
            if multiplicity < 1:
                raise DomainError(f"block multiplicity must be >= 1, got {multiplicity}")
            checked.append((block, multiplicity))
        if not checked:
            raise DomainError("a factorization needs at least one factor")
        for (b1, _), (b2, _) in zip(checked, checked[1:]):
            if b1.q * b2.p <= b2.q * b1.p:  # exact slope compare: q1/p1 <= q2/p2
                raise DomainError("block slopes must be strictly decreasing")
        self.factors: tuple[tuple[Block, int], ...] = tuple(checked)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BlockFactorization):
            return NotImplemented
        return self.factors == other.factors

    def __hash__(self) -> int:
        return hash(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def __repr__(self) -> str:
        inner = ", ".join(f"(({b.p}, {b.q}), {n})" for b, n in self.factors)
        return f"BlockFactorization([{inner}])"

    def __str__(self) -> str:
        return " · ".join(f"{block}^{n}" for block, n in self.factors)

    def merge(self, other: "BlockFactorization") -> "BlockFactorization":
        """Factorization of the product: same blocks, multiplicities added."""
        combined: dict[Block, int] = {}
        for block, n in list(self.factors) + list(other.factors):
            combined[block] = combined.get(block, 0) + n
        ordered = sorted(combined.items(), key=lambda item: item[0].slope, reverse=True)
        return BlockFactorization(ordered)

    def to_json(self) -> list[dict[str, int]]:
        return [{"p": b.p, "q": b.q, "n": n} for b, n in self.factors]


def zariski_factor(ideal: MonomialIdeal, policy: str = "strict") -> BlockFactorization:
    """Factor a complete (x, y)-primary monomial ideal into block ideal powers.

    A boundary edge with run c and drop d contributes the block
    (c/g, d/g) with multiplicity g = gcd(c, d); the block's boundary segment
    has the same slope d/c as the edge.  Distinct edges give distinct slopes,
    so the factor list needs no merging here.
    """
    ideal = ensure_complete(ideal, policy)
    factors = []
    for edge in boundary_edges(ideal.newton_boundary()):
        g = gcd(edge.run, edge.drop)
        factors.append((Block(edge.run // g, edge.drop // g), g))
    return BlockFactorization(factors)


def compose(factorization: Union[BlockFactorization, Sequence]) -> MonomialIdeal:
    """Multiply a factorization back into a single complete ideal.

    Accepts a BlockFactorization, or a sequence of (run, drop) pairs read as
    integral closures of complete intersections (repeats and equal slopes
    allowed).  Powers are expanded by iterated products.
    """
    if isinstance(factorization, BlockFactorization):
        parts = [(b.p, b.q, n) for b, n in factorization]
    else:
        parts = [(e.run, e.drop, 1) for e in map(_as_edge, factorization)]
        if not parts:
            raise DomainError("a factorization needs at least one factor")
    result = MonomialIdeal.unit()
    for p, q, multiplicity in parts:
        factor = MonomialIdeal([(p, 0), (0, q)]).integral_closure()
        for _ in range(multiplicity):
            result = result * factor
    assert result.is_complete()  # products of complete ideals stay complete
    return result


def boundary_count(edges: Sequence) -> int:
    """Lattice points on the boundary assembled from the given edges."""
    checked = [_as_edge(e) for e in edges]
    if not checked:
        raise DomainError("boundary count needs at least one edge")
    return sum(gcd(e.run, e.drop) for e in checked) + 1


def product_boundary_count(counts: Sequence[int]) -> int:
    """Boundary lattice count of a product from the factors' counts.

    Each factor's boundary contributes its lattice points, and consecutive
    boundaries share one endpoint, so the product count is the sum minus
    (r - 1) for r factors.
    """
    counts = list(counts)
    if not counts:
        raise DomainError("product boundary count needs at least one factor count")
    for c in counts:
        if not isinstance(c, int) or c < 2:
            raise DomainError(f"factor boundary counts must be integers >= 2, got {c!r}")
    return sum(counts) - len(counts) + 1
