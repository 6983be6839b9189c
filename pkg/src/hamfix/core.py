"""Exact fixed point data of a Hamiltonian circle action and its validation.

A compact Hamiltonian circle manifold of dimension 2n with the minimal
number n+1 of isolated fixed points is recorded purely combinatorially:
each fixed point P_i carries a moment value phi(P_i) and the multiset of
n nonzero integer weights of the circle representation on its tangent
space.  All arithmetic is exact: moment values are ``fractions.Fraction``
(the canonical-form rational scalar used throughout the package) and
weights are arbitrary-precision ints.  No floats appear anywhere.

A structurally well-formed datum (right counts everywhere) may still be
geometrically impossible; ``validate`` reports every violated rule
instead of raising, so a single pass can name all problems in a file.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterable, Sequence, Union

from .errors import IndexOutOfRange, StructureError

#: Exact rational scalar.  Fraction keeps denominators positive and
#: fractions reduced, which is exactly the canonical form required here.
Rat = Fraction

RatLike = Union[int, Fraction, str]


def rat(value: RatLike) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to an exact rational.

    >>> rat("3/2")
    Fraction(3, 2)
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a rational value")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


@dataclass(frozen=True)
class FixedPoint:
    """One isolated fixed point: position, moment value, weight multiset.

    Weights are stored sorted ascending so equal multisets compare equal.
    """

    index: int
    moment_value: Fraction
    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "moment_value", rat(self.moment_value))
        for w in self.weights:
            if isinstance(w, bool) or not isinstance(w, int):
                raise StructureError(f"weight {w!r} at point {self.index} is not an integer")
        object.__setattr__(self, "weights", tuple(sorted(self.weights)))

    @property
    def negative_count(self) -> int:
        return sum(1 for w in self.weights if w < 0)


@dataclass(frozen=True)
class FixedPointData:
    """n plus the ordered list of n+1 fixed points.

    Construction enforces only structure: n >= 1, exactly n+1 points with
    indices 0..n, and n weights per point.  Everything value-level
    (monotone moments, integral gaps, nonzero weights, Morse counts) is
    the job of ``validate``.
    """

    n: int
    points: tuple[FixedPoint, ...]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise StructureError(f"n must be a positive integer, got {self.n!r}")
        pts = tuple(self.points)
        if len(pts) != self.n + 1:
            raise StructureError(f"expected {self.n + 1} points, got {len(pts)}")
        for i, p in enumerate(pts):
            if p.index != i:
                raise StructureError(f"point at position {i} has index {p.index}")
            if len(p.weights) != self.n:
                raise StructureError(
                    f"point {i} has {len(p.weights)} weights, expected {self.n}"
                )
        object.__setattr__(self, "points", pts)

    @classmethod
    def from_weights(
        cls,
        moment_values: Sequence[RatLike],
        weights: Sequence[Iterable[int]],
    ) -> "FixedPointData":
        """Build data from parallel lists of moment values and weight lists."""
        if len(moment_values) != len(weights):
            raise StructureError("moment values and weight lists differ in length")
        n = len(moment_values) - 1
        pts = tuple(
            FixedPoint(i, rat(phi), tuple(ws))
            for i, (phi, ws) in enumerate(zip(moment_values, weights))
        )
        return cls(n, pts)

    @property
    def moment_values(self) -> tuple[Fraction, ...]:
        return tuple(p.moment_value for p in self.points)

    def translated(self, c: RatLike) -> "FixedPointData":
        """The same datum with every moment value shifted by ``c``."""
        shift = rat(c)
        pts = tuple(
            FixedPoint(p.index, p.moment_value + shift, p.weights) for p in self.points
        )
        return FixedPointData(self.n, pts)

    def normalized(self) -> "FixedPointData":
        """Translate so the smallest moment value is 0."""
        return self.translated(-self.points[0].moment_value)


def _check_index(data: FixedPointData, i: int) -> FixedPoint:
    if not 0 <= i <= data.n:
        raise IndexOutOfRange(f"point index {i} outside 0..{data.n}")
    return data.points[i]


def gamma(data: FixedPointData, i: int) -> int:
    """Sum of the weights at P_i."""
    return sum(_check_index(data, i).weights)


def lambda_all(data: FixedPointData, i: int) -> int:
    """Product of all weights at P_i."""
    return prod(_check_index(data, i).weights)


def lambda_minus(data: FixedPointData, i: int) -> int:
    """Product of the negative weights at P_i (1 if there are none)."""
    return prod(w for w in _check_index(data, i).weights if w < 0)


def lambda_plus(data: FixedPointData, i: int) -> int:
    """Product of the positive weights at P_i (1 if there are none)."""
    return prod(w for w in _check_index(data, i).weights if w > 0)


@dataclass(frozen=True)
class Violation:
    rule: str
    point: int | None
    message: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def is_valid(self) -> bool:
        return not self.violations

    def messages(self) -> list[str]:
        return [v.message for v in self.violations]


def validate(data: FixedPointData, *, require_integral_differences: bool = True) -> ValidationReport:
    """Check every consistency rule a genuine circle action must satisfy.

    Rules, each reported independently:

    * moment values strictly increasing along the point order;
    * all pairwise moment differences are integers (the symplectic class
      is normalized to be primitive integral; disable with
      ``require_integral_differences=False`` for exploratory input);
    * no weight is zero;
    * P_i has exactly i negative weights (Morse index 2i);
    * P_i has at most i negative weights (the Morse index bound from the
      fixed points below; isolated-point case).

    Violations are collected, never raised; an empty report means valid.
    """
    found: list[Violation] = []
    phis = data.moment_values

    for i in range(1, data.n + 1):
        if phis[i] <= phis[i - 1]:
            found.append(
                Violation(
                    "monotone-moments",
                    i,
                    "moment values not strictly increasing: "
                    f"phi(P_{i - 1}) = {phis[i - 1]} vs phi(P_{i}) = {phis[i]}",
                )
            )

    if require_integral_differences:
        # Consecutive integrality implies it for all pairs.
        for i in range(1, data.n + 1):
            diff = phis[i] - phis[i - 1]
            if diff.denominator != 1:
                found.append(
                    Violation(
                        "integral-differences",
                        i,
                        f"moment difference phi(P_{i}) - phi(P_{i - 1}) = {diff} is not an integer",
                    )
                )

    for p in data.points:
        if any(w == 0 for w in p.weights):
            found.append(
                Violation("nonzero-weights", p.index, f"zero weight at point {p.index}")
            )

    for p in data.points:
        k = p.negative_count
        if k != p.index:
            found.append(
                Violation(
                    "negative-count",
                    p.index,
                    f"negative-weight count at P_{p.index} is {k}, expected {p.index}",
                )
            )
        if k > p.index:
            found.append(
                Violation(
                    "index-bound",
                    p.index,
                    f"Morse index bound violated at P_{p.index}: "
                    f"{k} negative weights but only {p.index} points below",
                )
            )

    return ValidationReport(tuple(found))
