"""Closed forms for colengths of complete monomial ideals in k[x, y].

The central object is the Bhattacharya polynomial: for complete
(x, y)-primary monomial ideals I and J the colength ℓ(R/I^m J^n) is given
exactly, for *all* m, n >= 0, by

    s_I·m² + s_J·n² + (s_IJ - s_I - s_J)·mn
        + ½(a_I + b_I - l_I + 1)·m + ½(a_J + b_J - l_J + 1)·n

where s is the area between the Newton boundary and the axes, a and b are the
axis intercepts and l the boundary lattice count.  Everything is computed in
doubled integers; each quantity with two independent derivations (boundary
geometry versus block factorization) is cross-checked exactly, and a mismatch
raises ConsistencyError instead of returning a guess.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import NamedTuple

from .errors import ConsistencyError
from .factorization import boundary_edges, zariski_factor
from .ideals import MonomialIdeal, ensure_complete


class HalfInteger:
    """Exact multiple of 1/2, stored as twice its value."""

    __slots__ = ("doubled",)

    def __init__(self, doubled: int) -> None:
        if not isinstance(doubled, int):
            raise TypeError(f"doubled value must be an integer, got {doubled!r}")
        self.doubled = doubled

    @classmethod
    def from_int(cls, value: int) -> "HalfInteger":
        return cls(2 * value)

    @property
    def as_fraction(self) -> Fraction:
        return Fraction(self.doubled, 2)

    def is_integer(self) -> bool:
        return self.doubled % 2 == 0

    def exact_int(self) -> int:
        if self.doubled % 2:
            raise ConsistencyError(f"half-integer {self} is not a whole number")
        return self.doubled // 2

    def __add__(self, other: "HalfInteger") -> "HalfInteger":
        return HalfInteger(self.doubled + other.doubled)

    def __sub__(self, other: "HalfInteger") -> "HalfInteger":
        return HalfInteger(self.doubled - other.doubled)

    def __mul__(self, k: int) -> "HalfInteger":
        if not isinstance(k, int):
            return NotImplemented
        return HalfInteger(self.doubled * k)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, HalfInteger):
            return NotImplemented
        return self.doubled == other.doubled

    def __hash__(self) -> int:
        return hash(("HalfInteger", self.doubled))

    def __repr__(self) -> str:
        return f"HalfInteger({self.doubled})"

    def __str__(self) -> str:
        if self.doubled % 2 == 0:
            return str(self.doubled // 2)
        return f"{self.doubled}/2"


@dataclass(frozen=True)
class BhattacharyaPolynomial:
    """Quadratic polynomial in (m, n) with half-integer coefficients.

    Has zero constant term; for valid ideal data it evaluates to a
    nonnegative integer at every pair of nonnegative integers.
    """

    m2: HalfInteger
    n2: HalfInteger
    mn: HalfInteger
    m: HalfInteger
    n: HalfInteger

    def evaluate(self, m: int, n: int) -> int:
        if m < 0 or n < 0:
            raise ValueError("evaluation needs m >= 0 and n >= 0")
        doubled = (
            self.m2.doubled * m * m
            + self.n2.doubled * n * n
            + self.mn.doubled * m * n
            + self.m.doubled * m
            + self.n.doubled * n
        )
        if doubled % 2:
            raise ConsistencyError(
                f"polynomial value at ({m}, {n}) is not an integer (doubled {doubled})"
            )
        return doubled // 2

    def render(self) -> str:
        terms = []
        for coeff, name in (
            (self.m2, "m^2"),
            (self.n2, "n^2"),
            (self.mn, "mn"),
            (self.m, "m"),
            (self.n, "n"),
        ):
            if coeff.doubled == 0:
                continue
            text = str(coeff)
            terms.append(name if text == "1" else f"{text}{name}")
        return " + ".join(terms) if terms else "0"

    def __str__(self) -> str:
        return self.render()

    def to_json(self) -> dict:
        return {
            "doubled": True,
            "m2": self.m2.doubled,
            "n2": self.n2.doubled,
            "mn": self.mn.doubled,
            "m": self.m.doubled,
            "n": self.n.doubled,
            "text": self.render(),
        }


class MixedMultiplicities(NamedTuple):
    """Mixed multiplicities (e_{2,0}, e_{1,1}, e_{0,2}) of a pair of ideals."""

    e20: int
    e11: int
    e02: int


def _s_doubled(ideal: MonomialIdeal) -> int:
    """Twice the area between the Newton boundary and the axes.

    Computed two independent ways: as the bounding rectangle minus the convex
    region above the boundary, and by the per-edge sum
    Σ c_i d_i + 2 Σ_{i<j} c_i d_j over edges sorted by decreasing slope.
    """
    boundary = ideal.newton_boundary()
    rectangle = 2 * boundary.x_intercept * boundary.y_intercept
    geometric = rectangle - boundary.polygon_above().doubled_area()
    from_edges = 0
    run_before = 0
    for edge in boundary_edges(boundary):
        from_edges += edge.run * edge.drop + 2 * run_before * edge.drop
        run_before += edge.run
    if geometric != from_edges:
        raise ConsistencyError(
            f"area under Newton boundary: geometric {geometric} != edge sum {from_edges}"
        )
    return geometric


def _linear_term_doubled(ideal: MonomialIdeal) -> int:
    boundary = ideal.newton_boundary()
    return (
        boundary.x_intercept + boundary.y_intercept - boundary.lattice_point_count + 1
    )


def _colength_doubled_from_boundary(ideal: MonomialIdeal) -> int:
    return _s_doubled(ideal) + _linear_term_doubled(ideal)


def _colength_doubled_from_blocks(ideal: MonomialIdeal) -> int:
    doubled = 0
    weighted_run = 0  # Σ p_i n_i over factors seen so far
    for block, n in zariski_factor(ideal):
        doubled += block.p * block.q * n * n + 2 * weighted_run * block.q * n
        doubled += (block.p + block.q - 1) * n
        weighted_run += block.p * n
    return doubled


def _complete_product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    product = a * b
    if product.integral_closure() != product:
        raise ConsistencyError("product of complete ideals came out incomplete")
    return product


def s_value(ideal: MonomialIdeal, policy: str = "strict") -> HalfInteger:
    """Area between the Newton boundary and the coordinate axes."""
    ideal = ensure_complete(ideal, policy)
    return HalfInteger(_s_doubled(ideal))


def colength(ideal: MonomialIdeal, policy: str = "strict") -> int:
    """Number of monomials outside the ideal, ℓ(R/I).

    Evaluated along two independent routes: boundary data
    (s + ½(a + b - l + 1)) and the block factorization
    (Σ ½ p_i q_i n_i² + Σ_{i<j} p_i q_j n_i n_j + Σ ½ (p_i + q_i - 1) n_i).
    """
    ideal = ensure_complete(ideal, policy)
    via_boundary = _colength_doubled_from_boundary(ideal)
    via_blocks = _colength_doubled_from_blocks(ideal)
    if via_boundary != via_blocks:
        raise ConsistencyError(
            f"colength mismatch: boundary route {via_boundary} != block route {via_blocks} (doubled)"
        )
    return HalfInteger(via_boundary).exact_int()


def bhattacharya_polynomial(
    ideal_i: MonomialIdeal, ideal_j: MonomialIdeal, policy: str = "strict"
) -> BhattacharyaPolynomial:
    """Closed form of ℓ(R/I^m J^n), exact for all m, n >= 0."""
    ideal_i = ensure_complete(ideal_i, policy)
    ideal_j = ensure_complete(ideal_j, policy)
    s_i = _s_doubled(ideal_i)
    s_j = _s_doubled(ideal_j)
    s_ij = _s_doubled(_complete_product(ideal_i, ideal_j))
    return BhattacharyaPolynomial(
        m2=HalfInteger(s_i),
        n2=HalfInteger(s_j),
        mn=HalfInteger(s_ij - s_i - s_j),
        m=HalfInteger(_linear_term_doubled(ideal_i)),
        n=HalfInteger(_linear_term_doubled(ideal_j)),
    )


def mixed_multiplicities(
    ideal_i: MonomialIdeal, ideal_j: MonomialIdeal, policy: str = "strict"
) -> MixedMultiplicities:
    """Mixed multiplicities of the pair: (2 s_I, s_IJ - s_I - s_J, 2 s_J).

    The middle value is cross-checked against ℓ(R/IJ) - ℓ(R/I) - ℓ(R/J).
    """
    ideal_i = ensure_complete(ideal_i, policy)
    ideal_j = ensure_complete(ideal_j, policy)
    poly = bhattacharya_polynomial(ideal_i, ideal_j)
    e20 = poly.m2.doubled
    e02 = poly.n2.doubled
    e11 = poly.mn.exact_int()
    via_colengths = (
        colength(_complete_product(ideal_i, ideal_j))
        - colength(ideal_i)
        - colength(ideal_j)
    )
    if e11 != via_colengths:
        raise ConsistencyError(
            f"mixed multiplicity e11: area route {e11} != colength route {via_colengths}"
        )
    return MixedMultiplicities(e20, e11, e02)


def verma_polynomial(
    ideal_i: MonomialIdeal, ideal_j: MonomialIdeal, policy: str = "strict"
) -> BhattacharyaPolynomial:
    """The same polynomial assembled from multiplicities and plain colengths:

        e(I)·C(m,2) + e(J)·C(n,2) + (ℓ(R/IJ) - ℓ(R/I) - ℓ(R/J))·mn
            + ℓ(R/I)·m + ℓ(R/J)·n

    expanded into the monomial basis.  Must agree with
    bhattacharya_polynomial coefficient by coefficient.
    """
    ideal_i = ensure_complete(ideal_i, policy)
    ideal_j = ensure_complete(ideal_j, policy)
    e_i = _s_doubled(ideal_i)  # e(I) = 2 s_I
    e_j = _s_doubled(ideal_j)
    len_i = colength(ideal_i)
    len_j = colength(ideal_j)
    len_ij = colength(_complete_product(ideal_i, ideal_j))
    return BhattacharyaPolynomial(
        m2=HalfInteger(e_i),
        n2=HalfInteger(e_j),
        mn=HalfInteger.from_int(len_ij - len_i - len_j),
        m=HalfInteger(2 * len_i - e_i),
        n=HalfInteger(2 * len_j - e_j),
    )


def _steep_run_shallow_drop(edges) -> int:
    """Σ run over edges of slope >= 1 plus Σ drop over the shallower edges."""
    return sum(e.run if e.drop >= e.run else e.drop for e in edges)


def with_maximal_ideal(ideal: MonomialIdeal, policy: str = "strict") -> BhattacharyaPolynomial:
    """ℓ(R/I^m 𝔪^n) for the maximal ideal 𝔪 = (x, y), straight from the edges.

    Specializing J = 𝔪 gives n²/2 and n/2 terms and the cross coefficient
    Σ c_i over steep edges plus Σ d_j over shallow ones (slope 1 counts as
    steep).
    """
    ideal = ensure_complete(ideal, policy)
    edges = boundary_edges(ideal.newton_boundary())
    linear_m = sum(e.run + e.drop - gcd(e.run, e.drop) for e in edges)
    return BhattacharyaPolynomial(
        m2=HalfInteger(_s_doubled(ideal)),
        n2=HalfInteger(1),
        mn=HalfInteger.from_int(_steep_run_shallow_drop(edges)),
        m=HalfInteger(linear_m),
        n=HalfInteger(1),
    )


def hilbert_function(ideal: MonomialIdeal, m: int, policy: str = "strict") -> int:
    """ℓ(I^m / I^{m+1}), the Hilbert function of the associated graded ring."""
    if not isinstance(m, int) or m < 0:
        raise ValueError("hilbert_function needs an integer m >= 0")
    ideal = ensure_complete(ideal, policy)
    edges = boundary_edges(ideal.newton_boundary())
    doubled = _s_doubled(ideal) * (2 * m + 1) + sum(
        e.run + e.drop - gcd(e.run, e.drop) for e in edges
    )
    return HalfInteger(doubled).exact_int()


def fiber_function(ideal: MonomialIdeal, m: int, policy: str = "strict") -> int:
    """ℓ(I^m / 𝔪 I^m), the Hilbert function of the fiber ring (linear in m)."""
    if not isinstance(m, int) or m < 0:
        raise ValueError("fiber_function needs an integer m >= 0")
    ideal = ensure_complete(ideal, policy)
    edges = boundary_edges(ideal.newton_boundary())
    return _steep_run_shallow_drop(edges) * m + 1


def min_generators(ideal: MonomialIdeal, policy: str = "strict") -> int:
    """Number of minimal generators, cross-checked against the antichain size."""
    ideal = ensure_complete(ideal, policy)
    edges = boundary_edges(ideal.newton_boundary())
    count = _steep_run_shallow_drop(edges) + 1
    if count != len(ideal.generators):
        raise ConsistencyError(
            f"minimal generator count: edge formula {count} != antichain size "
            f"{len(ideal.generators)}"
        )
    return count


def general_j_step(
    ideal_i: MonomialIdeal,
    ideal_j: MonomialIdeal,
    m: int,
    n: int,
    policy: str = "strict",
) -> int:
    """ℓ(I^m J^n / I^{m+1} J^n) for a complete J that need not be primary.

    J splits as a monomial times an (x, y)-primary complete ideal J', and
    multiplying by a monomial does not change quotient lengths, so the value
    is ℓ(R/I^{m+1} J'^n) - ℓ(R/I^m J'^n).  A principal J (unit J') reduces to
    the Hilbert function of I, independent of n.
    """
    if not isinstance(m, int) or not isinstance(n, int) or m < 0 or n < 0:
        raise ValueError("general_j_step needs integers m >= 0 and n >= 0")
    ideal_i = ensure_complete(ideal_i, policy)
    _, primary_part = ideal_j.strip_monomial_factor()
    if primary_part.is_unit():
        return hilbert_function(ideal_i, m)
    primary_part = ensure_complete(primary_part, policy)
    poly = bhattacharya_polynomial(ideal_i, primary_part)
    return poly.evaluate(m + 1, n) - poly.evaluate(m, n)
