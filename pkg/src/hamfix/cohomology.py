"""Cohomology-ring and Chern-class invariants read off the fixed point data.

With b_2 = 1, the first Chern class is C*[omega] where C is the common
value of (Gamma_i - Gamma_j)/(phi_j - phi_i) over all point pairs; the
equivariant refinement forces Gamma_i = C*(-phi_i) + d for a single
integer offset d ("condition D").  Each cohomology group H^{2i} is
freely generated by a class alpha_i expressible through the weights
alone:

    alpha_i = [Lambda_i^- / (Lambda_1^-)^i]
              * [(Gamma_1 - Gamma_0)^i / prod_{j<i} (Gamma_i - Gamma_j)]
              * (alpha_1)^i,

so the ring is captured by the rationals r_i with alpha_i = r_i * x^i,
x = alpha_1 = [omega].  r == (1,...,1) is the projective-space ring;
r == (1,..,1,1/2,..,1/2) with the step at (n+1)/2 is the ring of the
odd-dimensional quadric Z[x,y]/(x^{(n+1)/2} - 2y, y^2).

The Chern classes c_i(M) = gamma_i * x^i follow from the restrictions
sigma_i(weights at P_k) * t^i of the equivariant Chern classes via two
independent interpolation formulas (one weighted by products of
negative weights, one by positive); both are computed and must agree.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb, prod

from .core import FixedPointData, gamma, lambda_all, lambda_minus, lambda_plus
from .errors import (
    ConditionDViolated,
    CrossCheckFailed,
    DegenerateGamma,
    NonConstantC1,
    NonPositiveC1,
    SpecMismatch,
)


class RingKind(enum.Enum):
    PROJECTIVE_SPACE = "ProjectiveSpace"
    QUADRIC = "Quadric"
    OTHER = "Other"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class RingSpec:
    """A target cohomology ring: projective space, odd quadric, or a bare
    r-sequence for anything else."""

    kind: RingKind
    n: int
    r: tuple[Fraction, ...] | None = None

    def __post_init__(self):
        if self.n < 1:
            raise SpecMismatch(f"n must be >= 1, got {self.n}")
        if self.kind is RingKind.QUADRIC and (self.n < 3 or self.n % 2 == 0):
            raise SpecMismatch(f"quadric ring requires odd n >= 3, got n = {self.n}")
        if self.kind is RingKind.OTHER:
            if self.r is None or len(self.r) != self.n + 1:
                raise SpecMismatch("Other ring needs an explicit r-sequence of length n+1")
            object.__setattr__(self, "r", tuple(Fraction(v) for v in self.r))
        elif self.r is not None:
            raise SpecMismatch(f"{self.kind} ring takes no explicit r-sequence")

    def r_sequence(self) -> tuple[Fraction, ...]:
        """The generator ratios r_0..r_n this ring prescribes."""
        if self.kind is RingKind.PROJECTIVE_SPACE:
            return tuple(Fraction(1) for _ in range(self.n + 1))
        if self.kind is RingKind.QUADRIC:
            half = (self.n + 1) // 2
            return tuple(
                Fraction(1) if i < half else Fraction(1, 2) for i in range(self.n + 1)
            )
        assert self.r is not None
        return self.r


@dataclass(frozen=True)
class RingCoefficients:
    """The measured ratios r_i with alpha_i = r_i * x^i (r_0 = r_1 = 1)."""

    r: tuple[Fraction, ...]

    @property
    def n(self) -> int:
        return len(self.r) - 1


@dataclass(frozen=True)
class ChernData:
    """Per-point symmetric functions of the weights and the global
    coefficients gamma_i with c_i(M) = gamma_i * x^i.

    ``sigma[i][k]`` is the k-th elementary symmetric polynomial of the
    weights at P_i, i.e. the coefficient of the k-th equivariant Chern
    class restricted to P_i; sigma[i][0] = 1 and sigma[i][n] is the
    product of all weights there.  ``gamma`` lists gamma_1..gamma_n; for
    data with a consistent moment scale gamma_1 equals the c1 constant C.
    """

    sigma: tuple[tuple[int, ...], ...]
    gamma: tuple[Fraction, ...]

    @property
    def n(self) -> int:
        return len(self.gamma)

    def sigma_at(self, i: int, k: int) -> int:
        return self.sigma[i][k]


def _gammas(data: FixedPointData) -> list[int]:
    return [gamma(data, i) for i in range(data.n + 1)]


def c1_coefficient(data: FixedPointData) -> Fraction:
    """The constant C with c_1(M) = C * [omega].

    C is (Gamma_i - Gamma_j) / (phi_j - phi_i) for ANY pair i != j; all
    pairs must agree and the common value must be positive, otherwise
    the datum cannot come from a Hamiltonian action with b_2 = 1.
    """
    gs = _gammas(data)
    phis = data.moment_values
    c = None
    for i in range(data.n + 1):
        for j in range(i + 1, data.n + 1):
            if phis[j] == phis[i]:
                raise NonConstantC1(f"equal moment values at P_{i} and P_{j}")
            q = Fraction(gs[i] - gs[j]) / (phis[j] - phis[i])
            if c is None:
                c = q
            elif q != c:
                raise NonConstantC1(
                    f"pair (0,1) gives {c} but pair ({i},{j}) gives {q}"
                )
    assert c is not None
    if c <= 0:
        raise NonPositiveC1(f"common c1 coefficient {c} is not positive")
    return c


def condition_d_offset(data: FixedPointData) -> Fraction:
    """The constant d with Gamma_i = C * (-phi_i) + d for all i."""
    c = c1_coefficient(data)
    gs = _gammas(data)
    phis = data.moment_values
    d = gs[0] + c * phis[0]
    for i in range(1, data.n + 1):
        if gs[i] + c * phis[i] != d:
            raise ConditionDViolated(
                f"Gamma_{i} + C*phi_{i} = {gs[i] + c * phis[i]} differs from {d}"
            )
    return d


def _require_distinct_gammas(gs: list[int]):
    seen: dict[int, int] = {}
    for i, g in enumerate(gs):
        if g in seen:
            raise DegenerateGamma(f"Gamma_{seen[g]} = Gamma_{i} = {g}")
        seen[g] = i


def ring_coefficients(data: FixedPointData) -> RingCoefficients:
    """Measure r_i = alpha_i / x^i from the weights.

    r_0 = r_1 = 1 identically;  for i >= 2

        r_i = Lambda_i^- * (Gamma_1 - Gamma_0)^i
              / [(Lambda_1^-)^i * prod_{j<i} (Gamma_i - Gamma_j)].
    """
    gs = _gammas(data)
    _require_distinct_gammas(gs)
    r = [Fraction(1), Fraction(1)]  # r_0 = r_1 = 1 by normalization
    for i in range(2, data.n + 1):
        num = Fraction(lambda_minus(data, i)) * Fraction(gs[1] - gs[0]) ** i
        den = Fraction(lambda_minus(data, 1)) ** i * prod(
            Fraction(gs[i] - gs[j]) for j in range(i)
        )
        r.append(num / den)
    return RingCoefficients(tuple(r))


def _sigma_table(data: FixedPointData) -> tuple[tuple[int, ...], ...]:
    # Coefficients of prod_k (1 + w_k * t) give the elementary symmetric
    # polynomials of the weights.
    table = []
    for p in data.points:
        coeffs = [1] + [0] * data.n
        deg = 0
        for w in p.weights:
            deg += 1
            for k in range(deg, 0, -1):
                coeffs[k] += w * coeffs[k - 1]
        table.append(tuple(coeffs))
    return tuple(table)


def chern_coefficients(data: FixedPointData) -> ChernData:
    """Compute gamma_1..gamma_n with c_i(M) = gamma_i * x^i.

    Each c_i(M) equals a weight-determined scalar times alpha_i, computed
    two ways and cross-checked:

    * via positive weights:
        [Lambda_i^+ / prod_{j>i} (Gamma_i - Gamma_j)]
        * sum_{k<=i} sigma_i(P_k) * prod_{j>i} (Gamma_k - Gamma_j) / Lambda_k
    * via negative weights:
        [prod_{j<i} (Gamma_i - Gamma_j) / Lambda_i^-]
        * sum_{k<=i} sigma_i(P_k) / prod_{j<=i, j!=k} (Gamma_k - Gamma_j)

    (Lambda_k is the product of all weights at P_k.)  The scalar is then
    converted to the x-basis through gamma_i = scalar * r_i.
    """
    n = data.n
    gs = _gammas(data)
    _require_distinct_gammas(gs)
    sigma = _sigma_table(data)
    r = ring_coefficients(data).r

    gammas: list[Fraction] = []
    for i in range(1, n + 1):
        upper = [Fraction(gs[i] - gs[j]) for j in range(i + 1, n + 1)]
        plus = Fraction(lambda_plus(data, i)) / prod(upper, start=Fraction(1))
        acc = Fraction(0)
        for k in range(i + 1):
            acc += (
                Fraction(sigma[k][i])
                * prod((Fraction(gs[k] - gs[j]) for j in range(i + 1, n + 1)), start=Fraction(1))
                / lambda_all(data, k)
            )
        scalar_plus = plus * acc

        lower = prod((Fraction(gs[i] - gs[j]) for j in range(i)), start=Fraction(1))
        acc = Fraction(0)
        for k in range(i + 1):
            den = prod(
                (Fraction(gs[k] - gs[j]) for j in range(i + 1) if j != k),
                start=Fraction(1),
            )
            acc += Fraction(sigma[k][i]) / den
        scalar_minus = lower / lambda_minus(data, i) * acc

        if scalar_plus != scalar_minus:
            raise CrossCheckFailed(
                f"c_{i} expressions disagree: {scalar_plus} vs {scalar_minus}"
            )
        gammas.append(scalar_plus * r[i])

    return ChernData(sigma, tuple(gammas))


def classify_ring(rc: RingCoefficients) -> RingSpec:
    """Recognize the r-sequence as projective space, odd quadric, or other."""
    n = rc.n
    if all(v == 1 for v in rc.r):
        return RingSpec(RingKind.PROJECTIVE_SPACE, n)
    if n >= 3 and n % 2 == 1:
        half = (n + 1) // 2
        quadric = all(
            v == (1 if i < half else Fraction(1, 2)) for i, v in enumerate(rc.r)
        )
        if quadric:
            return RingSpec(RingKind.QUADRIC, n)
    return RingSpec(RingKind.OTHER, n, rc.r)


def reference_chern(kind: RingKind, n: int) -> tuple[int, ...]:
    """Total Chern class coefficients (degrees 1..n) of the model spaces.

    Projective space: (1+x)^{n+1}, so binomial(n+1, i).  The quadric
    hypersurface of dimension n: the series (1+x)^{n+2} / (1+2x).
    """
    if kind is RingKind.PROJECTIVE_SPACE:
        return tuple(comb(n + 1, i) for i in range(1, n + 1))
    if kind is RingKind.QUADRIC:
        coeffs = []
        for k in range(1, n + 1):
            c = sum(comb(n + 2, j) * (-2) ** (k - j) for j in range(k + 1))
            coeffs.append(c)
        return tuple(coeffs)
    raise SpecMismatch("no reference Chern series for an Other ring")
