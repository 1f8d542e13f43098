"""Brute-force lattice-point verification, independent of the closed forms.

Colengths are obtained here by enumerating lattice points outside the Newton
region and testing each one against the boundary half-planes.  The only code
shared with the closed-form side is the ideal container itself and its
generator sumset product; the hull and membership logic is deliberately
reimplemented so that the two sides can check each other.
"""

from __future__ import annotations

from typing import Sequence

from .errors import ConsistencyError, DomainError
from .ideals import MonomialIdeal
from .lattice import LatticePoint, as_lattice_point


def _check_primary(ideal: MonomialIdeal) -> None:
    gens = ideal.generators
    if len(gens) == 1 and gens[0] == (0, 0):
        raise DomainError("brute counting needs an (x, y)-primary ideal, not the unit ideal")
    if gens[0].u != 0 or gens[-1].v != 0:
        raise DomainError("brute counting needs an (x, y)-primary ideal")


def _lower_hull(points: Sequence[LatticePoint]) -> list[LatticePoint]:
    # points come sorted by increasing u (generator order)
    chain: list[LatticePoint] = []
    for p in points:
        while len(chain) >= 2:
            a, b = chain[-2], chain[-1]
            if (b.u - a.u) * (p.v - b.v) - (b.v - a.v) * (p.u - b.u) <= 0:
                chain.pop()
            else:
                break
        chain.append(p)
    return chain


def _half_planes(ideal: MonomialIdeal) -> list[tuple[int, int, int]]:
    planes = []
    hull = _lower_hull(ideal.generators)
    for a, b in zip(hull, hull[1:]):
        coef_u = a.v - b.v
        coef_v = b.u - a.u
        planes.append((coef_u, coef_v, coef_u * a.u + coef_v * a.v))
    return planes


def in_newton_region(ideal: MonomialIdeal, point) -> bool:
    """Half-plane membership test for the Newton region of the ideal."""
    p = as_lattice_point(point)
    if p.u < 0 or p.v < 0:
        return False
    return all(cu * p.u + cv * p.v >= rhs for cu, cv, rhs in _half_planes(ideal))


def brute_colength(ideal: MonomialIdeal) -> int:
    """Count the monomials outside the Newton region by direct enumeration.

    Equals ℓ(R/I) for a complete ideal; for an incomplete one it counts the
    complement of the Newton region, i.e. the colength of the closure.
    """
    _check_primary(ideal)
    planes = _half_planes(ideal)
    a = ideal.generators[-1].u
    b = ideal.generators[0].v
    count = 0
    for u in range(a):
        # Scan each column upward.  All half-plane coefficients are
        # nonnegative, so once a point passes every test the rest of the
        # column does too and the scan can stop.
        for v in range(b):
            inside = True
            for coef_u, coef_v, rhs in planes:
                if coef_u * u + coef_v * v < rhs:
                    inside = False
                    break
            if inside:
                count += v
                break
        else:
            count += b
    return count


class ColengthTable:
    """Grid of colengths ℓ(R/I^m J^n) for 0 <= m <= max_m, 0 <= n <= max_n."""

    __slots__ = ("values",)

    def __init__(self, values) -> None:
        rows = tuple(tuple(row) for row in values)
        if not rows or not rows[0]:
            raise DomainError("a colength table needs at least one cell")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise DomainError("colength table rows must have equal length")
        if rows[0][0] != 0:
            raise ConsistencyError("colength table must start with 0 at (0, 0)")
        for i, row in enumerate(rows):
            for j, value in enumerate(row):
                if value < 0:
                    raise ConsistencyError(f"negative colength {value} at ({i}, {j})")
                if j and value < row[j - 1]:
                    raise ConsistencyError(f"colength table not monotone along row {i}")
                if i and value < rows[i - 1][j]:
                    raise ConsistencyError(f"colength table not monotone along column {j}")
        self.values: tuple[tuple[int, ...], ...] = rows

    @property
    def max_m(self) -> int:
        return len(self.values) - 1

    @property
    def max_n(self) -> int:
        return len(self.values[0]) - 1

    def __getitem__(self, m: int) -> tuple[int, ...]:
        return self.values[m]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ColengthTable):
            return NotImplemented
        return self.values == other.values

    def __hash__(self) -> int:
        return hash(self.values)

    def __repr__(self) -> str:
        return f"ColengthTable({[list(row) for row in self.values]})"

    def to_json(self) -> dict:
        return {
            "max_m": self.max_m,
            "max_n": self.max_n,
            "values": [list(row) for row in self.values],
        }

    def render_text(self) -> str:
        width = max(
            len(str(v)) for row in self.values for v in row
        )
        width = max(width, len(str(self.max_n)))
        header = "m\\n " + " ".join(f"{n:>{width}}" for n in range(self.max_n + 1))
        lines = [header]
        for m, row in enumerate(self.values):
            lines.append(f"{m:<4}" + " ".join(f"{v:>{width}}" for v in row))
        return "\n".join(lines)


def brute_table(
    ideal_i: MonomialIdeal, ideal_j: MonomialIdeal, max_m: int, max_n: int
) -> ColengthTable:
    """Tabulate brute colengths of I^m J^n built by iterated generator sumsets."""
    if max_m < 0 or max_n < 0:
        raise ValueError("table bounds must be nonnegative")
    _check_primary(ideal_i)
    _check_primary(ideal_j)
    rows = []
    power_i = MonomialIdeal.unit()
    for m in range(max_m + 1):
        row = []
        cell = power_i
        for n in range(max_n + 1):
            row.append(0 if m == 0 and n == 0 else brute_colength(cell))
            if n < max_n:
                cell = cell * ideal_j
        rows.append(row)
        if m < max_m:
            power_i = power_i * ideal_i
    return ColengthTable(rows)


def brute_monomial_count_between(big: MonomialIdeal, small: MonomialIdeal) -> int:
    """ℓ(big/small) for nested ideals, as a difference of brute colengths.

    Containment is checked by testing every generator of the smaller ideal
    against the Newton region of the larger one.
    """
    _check_primary(big)
    _check_primary(small)
    planes = _half_planes(big)
    for g in small.generators:
        if any(cu * g.u + cv * g.v < rhs for cu, cv, rhs in planes):
            raise DomainError(
                f"generator ({g.u}, {g.v}) of the smaller ideal lies outside the larger one"
            )
    return brute_colength(small) - brute_colength(big)
