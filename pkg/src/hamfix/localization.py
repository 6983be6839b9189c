"""Fixed point localization sums and the vanishing battery.

For an equivariant class whose restriction to P is a_P * t^d, the
localization sum is  sum_P a_P / Lambda_P  with Lambda_P the product of
all weights at P.  Classes of degree 2d < 2n integrate to zero, so the
sums over monomials in the two canonical degree-2 classes (the
equivariant first Chern class, restricting to Gamma_P * t, and the
equivariant symplectic class, restricting to -phi(P) * t) must all
vanish below the top degree.  The full battery of those vanishing
identities is a cheap, strong consistency filter for candidate data;
the top power of the symplectic class recovers the symplectic volume,
which must be positive.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .core import FixedPointData, gamma, lambda_all, rat
from .errors import MissingRestriction


@dataclass(frozen=True, eq=True)
class EquivariantRestriction:
    """Restrictions a_P of one homogeneous class of degree 2*degree."""

    degree: int
    coefficients: Mapping[int, Fraction]

    def coefficient(self, i: int) -> Fraction:
        try:
            return self.coefficients[i]
        except KeyError:
            raise MissingRestriction(f"no restriction coefficient for point {i}") from None


def omega_power_restriction(data: FixedPointData, b: int) -> EquivariantRestriction:
    """Restrictions of the b-th power of the equivariant symplectic class.

    The class restricts to -phi(P) * t at each fixed point, so the b-th
    power restricts to (-phi(P))^b * t^b.
    """
    coeffs = {p.index: rat((-p.moment_value) ** b) for p in data.points}
    return EquivariantRestriction(b, coeffs)


def c1_omega_monomial(data: FixedPointData, a: int, b: int) -> EquivariantRestriction:
    """Restrictions of (equivariant c_1)^a * (equivariant symplectic)^b."""
    coeffs = {
        p.index: rat(gamma(data, p.index)) ** a * (-p.moment_value) ** b
        for p in data.points
    }
    return EquivariantRestriction(a + b, coeffs)


def abbv_sum(data: FixedPointData, cls: EquivariantRestriction) -> Fraction:
    """Exact localization sum  sum_P a_P / Lambda_P."""
    total = Fraction(0)
    for p in data.points:
        total += Fraction(cls.coefficient(p.index)) / lambda_all(data, p.index)
    return total


@dataclass(frozen=True)
class BatteryFailure:
    a: int
    b: int
    value: Fraction


@dataclass(frozen=True)
class BatteryReport:
    n: int
    failures: tuple[BatteryFailure, ...]
    volume: Fraction

    @property
    def passed(self) -> bool:
        return not self.failures and self.volume > 0


def vanishing_battery(data: FixedPointData) -> BatteryReport:
    """Evaluate every monomial localization identity below the top degree.

    For every pair (a, b) with a + b < n the sum
    sum_P Gamma_P^a * (-phi_P)^b / Lambda_P must vanish; failures are
    listed in lexicographic (a, b) order.  The report also carries the
    top value V = sum_P (-phi_P)^n / Lambda_P, the symplectic volume,
    which must be positive for the battery to pass.
    """
    n = data.n
    failures = []
    for a in range(n):
        for b in range(n - a):
            value = abbv_sum(data, c1_omega_monomial(data, a, b))
            if value != 0:
                failures.append(BatteryFailure(a, b, value))
    volume = abbv_sum(data, omega_power_restriction(data, n))
    return BatteryReport(n, tuple(failures), volume)
