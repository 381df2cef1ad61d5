"""Line arrangements: defining polynomials, intersection lattices, and the
combinatorial rigidity test.

An arrangement is a set of d >= 3 distinct rational lines in the
projective plane.  Its intersection lattice (the multiset of intersection
points with multiplicities) determines the global Tjurina number
combinatorially, and for small minimal relation degree the Tjurina number
alone pins that degree, making freeness a lattice invariant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import InputError
from .fields import QQ
from .invariants import dpw_bounds
from .poly import HomogPoly

LineCoeffs = tuple[Fraction, Fraction, Fraction]


@dataclass(frozen=True)
class LineSet:
    """d >= 3 distinct projective lines a*x + b*y + c*z = 0 over Q."""

    lines: tuple[LineCoeffs, ...]

    def __post_init__(self):
        if len(self.lines) < 3:
            raise InputError("an arrangement needs at least 3 lines")
        for coeffs in self.lines:
            if all(v == 0 for v in coeffs):
                raise InputError("zero coefficient triple is not a line")
        for i in range(len(self.lines)):
            for j in range(i + 1, len(self.lines)):
                if _cross(self.lines[i], self.lines[j]) == (0, 0, 0):
                    raise InputError(
                        f"lines {i} and {j} are proportional (duplicate line)"
                    )

    @property
    def degree(self) -> int:
        return len(self.lines)

    @classmethod
    def from_text(cls, text: str) -> "LineSet":
        """One line per row: three whitespace-separated rationals; '#' comments."""
        rows = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            stripped = raw.split("#", 1)[0].strip()
            if not stripped:
                continue
            parts = stripped.split()
            if len(parts) != 3:
                raise InputError(f"row {lineno}: expected 3 rationals, got {len(parts)}")
            try:
                rows.append(tuple(Fraction(p) for p in parts))
            except (ValueError, ZeroDivisionError) as exc:
                raise InputError(f"row {lineno}: {exc}") from exc
        return cls(tuple(rows))


def _cross(u, v) -> tuple:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _canonical_point(p) -> tuple[Fraction, Fraction, Fraction]:
    for v in p:
        if v != 0:
            return tuple(Fraction(c) / v for c in p)
    raise ValueError("zero vector is not a projective point")


@dataclass(frozen=True)
class LatticeSummary:
    """Multiset of intersection multiplicities, with coordinates when known."""

    degree: int
    points: tuple[tuple[tuple[Fraction, Fraction, Fraction] | None, int], ...]

    def __post_init__(self):
        d = self.degree
        pair_budget = d * (d - 1) // 2
        used = 0
        for coords, mult in self.points:
            if mult < 2:
                raise InputError(f"intersection multiplicity {mult} < 2")
            used += mult * (mult - 1) // 2
        if used != pair_budget:
            raise InputError(
                f"multiplicities account for {used} line pairs but "
                f"{self.degree} lines meet in {pair_budget}"
            )

    def multiplicity_counts(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for _, mult in self.points:
            counts[mult] = counts.get(mult, 0) + 1
        return dict(sorted(counts.items()))

    @classmethod
    def from_counts(cls, degree: int, counts: dict[int, int]) -> "LatticeSummary":
        points = []
        for mult in sorted(counts):
            points.extend([(None, mult)] * counts[mult])
        return cls(degree, tuple(points))

    @classmethod
    def from_text(cls, text: str) -> "LatticeSummary":
        """'degree d' header, then rows 'multiplicity count'; '#' comments."""
        degree = None
        counts: dict[int, int] = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            stripped = raw.split("#", 1)[0].strip()
            if not stripped:
                continue
            parts = stripped.split()
            if parts[0].lower() == "degree":
                if len(parts) != 2 or not parts[1].isdigit():
                    raise InputError(f"row {lineno}: malformed degree header")
                degree = int(parts[1])
                continue
            if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
                raise InputError(f"row {lineno}: expected 'multiplicity count'")
            mult, count = int(parts[0]), int(parts[1])
            if count < 1:
                raise InputError(f"row {lineno}: count must be positive")
            counts[mult] = counts.get(mult, 0) + count
        if degree is None:
            raise InputError("lattice file is missing the 'degree d' header")
        return cls.from_counts(degree, counts)


def arrangement_poly(lines: LineSet) -> HomogPoly:
    """Product of the defining linear forms, a degree-d polynomial over Q."""
    product = HomogPoly(QQ, 0, {(0, 0, 0): Fraction(1)})
    for a, b, c in lines.lines:
        form = HomogPoly(QQ, 1, {(1, 0, 0): a, (0, 1, 0): b, (0, 0, 1): c})
        product = product * form
    return product


def intersection_lattice(lines: LineSet) -> LatticeSummary:
    """All pairwise intersection points with their line multiplicities."""
    seen: dict[tuple, int] = {}
    order: list[tuple] = []
    for i in range(lines.degree):
        for j in range(i + 1, lines.degree):
            point = _canonical_point(_cross(lines.lines[i], lines.lines[j]))
            if point not in seen:
                seen[point] = 0
                order.append(point)
    points = []
    for point in order:
        mult = sum(
            1
            for coeffs in lines.lines
            if coeffs[0] * point[0] + coeffs[1] * point[1] + coeffs[2] * point[2] == 0
        )
        points.append((point, mult))
    summary = LatticeSummary(lines.degree, tuple(points))
    return summary


def lattice_tjurina(lattice: LatticeSummary) -> int:
    """Sum of (multiplicity - 1)^2 over the intersection points."""
    return sum((mult - 1) ** 2 for _, mult in lattice.points)


@dataclass(frozen=True)
class TeraoResult:
    """Outcome of the combinatorial rigidity test."""

    status: str  # "Rigid" | "NotCovered" | "NoSolution"
    r: int | None

    def __str__(self):
        return self.status if self.r is None else f"{self.status}({self.r})"


def terao_rigidity(d: int, tau: int) -> TeraoResult:
    """Decide whether tau pins the minimal relation degree of a free
    arrangement uniquely.

    Searches for the unique r with 0 <= r < d/2 and
    tau = (d-1)(d-r-1) + r^2.  When such an r exists and r <= sqrt(d-3),
    consecutive intervals are disjoint, so any arrangement with the same
    lattice is forced to share r and hence freeness: Rigid(r).  A solution
    beyond the bound is NotCovered(r); no solution is NoSolution.
    """
    if d < 3:
        raise InputError("need degree >= 3")
    if tau < 0:
        raise InputError("Tjurina number cannot be negative")
    found = None
    for r in range((d + 1) // 2):
        if 2 * r >= d:
            break
        if tau == (d - 1) * (d - r - 1) + r * r:
            found = r
            break
    if found is None:
        return TeraoResult("NoSolution", None)
    if found * found <= d - 3:
        return TeraoResult("Rigid", found)
    return TeraoResult("NotCovered", found)


def interval_table(d: int) -> list[tuple[int, int, int]]:
    """(r, tau_min, tau_max) rows for r = 1 .. floor(d/2)."""
    if d < 3:
        raise InputError("need degree >= 3")
    return [(r, *dpw_bounds(d, r)) for r in range(1, d // 2 + 1)]


def rigidity_intervals_disjoint(d: int) -> bool:
    """Check tau(s)_max < tau(s-1)_min for every s <= sqrt(d-3)."""
    limit = isqrt(d - 3) if d >= 3 else 0
    for s in range(1, limit + 1):
        s_max = (d - 1) * (d - s - 1) + s * s
        prev_min = (d - 1) * (d - s)
        if not s_max < prev_min:
            return False
    return True
