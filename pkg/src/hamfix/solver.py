"""Deduce weight systems from a prescribed cohomology ring.

Given a target ring and the moment values, the product of the negative
weights at each point is pinned down exactly:

    Lambda_i^-  =  r_i * prod_{j<i} (phi_j - phi_i),

with r the ring's generator ratios (all 1 for projective space; 1/2
from degree (n+1)/2 up for the odd quadric).  The search runs on the
paired-sphere ansatz: every negative weight at P_i belongs to an
invariant gradient sphere down to exactly one lower point P_j, the
weight divides the moment gap phi_i - phi_j, and the matching positive
weight at P_j is forced.  For the projective-space and quadric rings
this ansatz is a theorem; for other rings it can genuinely fail (a
6-dimensional example with ring Z[x,y]/(x^2-5y, y^2) has no sphere
joining P_0 and P_2 at all), so results for those rings are a filter,
never a uniqueness claim.

Every assembled candidate must survive validation, a constant c1
coefficient, a constant condition-D offset, the full vanishing battery,
and the mirrored positive-weight product targets.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterable, Sequence

from .cohomology import (
    RingKind,
    RingSpec,
    c1_coefficient,
    chern_coefficients,
    classify_ring,
    condition_d_offset,
    reference_chern,
    ring_coefficients,
)
from .core import FixedPointData, rat, validate
from .errors import (
    HamfixError,
    InconsistentGamma,
    NoPositiveScale,
    SearchBudgetExceeded,
    SpecMismatch,
)
from .localization import vanishing_battery
from .models import expected_weights_cpn, expected_weights_quadric

#: Environment variable consulted for the default search budget.
BUDGET_ENV_VAR = "HAMFIX_BUDGET"
DEFAULT_BUDGET = 200_000


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise SpecMismatch(f"{BUDGET_ENV_VAR} must be an integer, got {raw!r}") from None
    if value < 0:
        raise SpecMismatch(f"{BUDGET_ENV_VAR} must be nonnegative, got {value}")
    return value


@dataclass(frozen=True)
class SolveOptions:
    """Knobs for the weight-system search.

    ``max_abs_weight`` caps candidate weight magnitudes (default: the
    largest pairwise moment gap, which divisibility already implies).
    ``budget`` caps the number of assembled candidate systems; hitting it
    raises SearchBudgetExceeded rather than silently truncating.
    ``jobs`` sets the number of worker threads; results are identical
    for any job count.
    """

    max_abs_weight: int | None = None
    budget: int | None = None
    jobs: int = 1

    def effective_budget(self) -> int:
        if self.budget is None:
            return default_budget()
        if self.budget < 0:
            raise SpecMismatch(f"budget must be nonnegative, got {self.budget}")
        return self.budget


def _checked_phis(spec: RingSpec, phis: Sequence[int]) -> list[int]:
    vals = list(phis)
    if len(vals) != spec.n + 1:
        raise SpecMismatch(
            f"ring has n = {spec.n} but {len(vals)} moment values were given"
        )
    for v in vals:
        if isinstance(v, bool) or not isinstance(v, int):
            raise SpecMismatch(f"moment values must be integers, got {v!r}")
    for a, b in zip(vals, vals[1:]):
        if b <= a:
            raise SpecMismatch(f"moment values must be strictly increasing: {a} then {b}")
    return vals


def lambda_minus_targets(spec: RingSpec, phis: Sequence[int]) -> list[Fraction]:
    """Required product of the negative weights at each point:
    r_i * prod_{j<i} (phi_j - phi_i)."""
    vals = _checked_phis(spec, phis)
    r = spec.r_sequence()
    return [
        r[i] * prod((Fraction(vals[j] - vals[i]) for j in range(i)), start=Fraction(1))
        for i in range(spec.n + 1)
    ]


def positive_targets(spec: RingSpec, phis: Sequence[int]) -> list[Fraction]:
    """Required product of the positive weights at each point.

    Mirror of ``lambda_minus_targets`` under phi -> -phi, which reverses
    the point order:  r_{n-i} * prod_{j>i} (phi_j - phi_i).
    """
    vals = _checked_phis(spec, phis)
    r = spec.r_sequence()
    n = spec.n
    return [
        r[n - i]
        * prod((Fraction(vals[j] - vals[i]) for j in range(i + 1, n + 1)), start=Fraction(1))
        for i in range(n + 1)
    ]


def _divisors(m: int) -> list[int]:
    assert m > 0
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d != m // d:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def _negative_assignments(
    gaps: Sequence[int], target: Fraction, max_abs: int, budget: int
) -> list[tuple[int, ...]]:
    """All tuples (w_0..w_{k-1}) of negative integers with w_j dividing
    gaps[j] (both negative) and product equal to ``target``."""
    if target.denominator != 1:
        return []
    t = target.numerator
    k = len(gaps)
    if t == 0 or (t < 0) != (k % 2 == 1):
        return []
    t_abs = abs(t)
    choices = [[d for d in _divisors(-g) if d <= max_abs] for g in gaps]

    results: list[tuple[int, ...]] = []
    stack: list[int] = []

    def extend(j: int, remaining: int):
        if j == k:
            if remaining == 1:
                results.append(tuple(-d for d in stack))
                if len(results) > budget:
                    raise SearchBudgetExceeded(
                        f"more than {budget} weight assignments at one point"
                    )
            return
        for d in choices[j]:
            if remaining % d == 0:
                stack.append(d)
                extend(j + 1, remaining // d)
                stack.pop()

    extend(0, t_abs)
    return results


def _assemble(
    phis: Sequence[int], combo: Sequence[tuple[int, ...]], n: int
) -> FixedPointData:
    # combo[i-1] maps each lower point j to the negative weight of the
    # sphere from P_i down to P_j; the sphere's positive pole forces the
    # mirrored weight at P_j.
    weights: list[list[int]] = [[] for _ in range(n + 1)]
    for i in range(1, n + 1):
        assignment = combo[i - 1]
        weights[i].extend(assignment)
        for j, w in enumerate(assignment):
            weights[j].append(-w)
    return FixedPointData.from_weights([rat(v) for v in phis], weights)


def _passes_all_checks(data: FixedPointData) -> bool:
    if not validate(data).is_valid:
        return False
    try:
        c1_coefficient(data)
        condition_d_offset(data)
    except HamfixError:
        return False
    return vanishing_battery(data).passed


def enumerate_weight_systems(
    spec: RingSpec, phis: Sequence[int], opts: SolveOptions | None = None
) -> list[FixedPointData]:
    """All fixed point data consistent with the paired-sphere ansatz.

    For each point P_i the i negative weights are assigned bijectively
    to the points below, each dividing its moment gap and multiplying to
    the ring's product target; positive weights are the forced mirrors.
    Candidates are then filtered through validation, c1 and condition-D
    constancy, the vanishing battery, and the positive product targets.
    The result is deduplicated and sorted by flattened weight lists.
    """
    opts = opts or SolveOptions()
    vals = _checked_phis(spec, phis)
    n = spec.n
    targets = lambda_minus_targets(spec, vals)
    pos_targets = positive_targets(spec, vals)
    budget = opts.effective_budget()
    max_abs = opts.max_abs_weight
    if max_abs is None:
        max_abs = vals[-1] - vals[0]

    per_point: list[list[tuple[int, ...]]] = []
    for i in range(1, n + 1):
        gaps = [vals[j] - vals[i] for j in range(i)]
        per_point.append(_negative_assignments(gaps, targets[i], max_abs, budget))

    total = prod(len(a) for a in per_point)
    if total > budget:
        raise SearchBudgetExceeded(
            f"{total} candidate systems exceed the budget of {budget}"
        )
    if total == 0:
        return []

    def survives(combo) -> FixedPointData | None:
        for j in range(n + 1):
            positive_product = prod(-combo[i - 1][j] for i in range(j + 1, n + 1))
            if positive_product != pos_targets[j]:
                return None
        data = _assemble(vals, combo, n)
        return data if _passes_all_checks(data) else None

    combos = list(itertools.product(*per_point))
    if opts.jobs > 1:
        with ThreadPoolExecutor(max_workers=opts.jobs) as pool:
            survivors = [d for d in pool.map(survives, combos) if d is not None]
    else:
        survivors = [d for d in map(survives, combos) if d is not None]

    unique: dict[tuple, FixedPointData] = {}
    for data in survivors:
        key = tuple(p.weights for p in data.points)
        unique.setdefault(key, data)
    return [unique[k] for k in sorted(unique)]


@dataclass(frozen=True)
class ImplicationLine:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class EquivalenceReport:
    spec: RingSpec
    lines: tuple[ImplicationLine, ...]
    system_count: int

    @property
    def passed(self) -> bool:
        return all(line.passed for line in self.lines)


def verify_equivalence(
    spec: RingSpec, phis: Sequence[int], opts: SolveOptions | None = None
) -> EquivalenceReport:
    """Check the four ring/Chern/weight equivalences on one instance.

    (2)=>(4): the search returns exactly one weight system and it equals
    the standard one built from the moment values; (4)=>(2): that
    system's measured ring classifies back to the requested ring;
    (4)=>(3): its Chern coefficients match the reference series;
    (4)=>(1): its c1 coefficient is n+1 (projective space) or n
    (quadric).
    """
    if spec.kind is RingKind.OTHER:
        raise SpecMismatch("equivalence verification is defined for the model rings only")
    vals = _checked_phis(spec, phis)
    n = spec.n

    expected: FixedPointData | None
    try:
        if spec.kind is RingKind.PROJECTIVE_SPACE:
            expected = expected_weights_cpn(vals)
        else:
            expected = expected_weights_quadric(vals)
        expected_note = ""
    except HamfixError as exc:
        expected = None
        expected_note = f"standard weight system not constructible: {exc}"

    systems = enumerate_weight_systems(spec, vals, opts)
    lines = []

    if expected is not None and len(systems) == 1 and systems[0] == expected:
        lines.append(
            ImplicationLine(
                "(2)=>(4)", True, "unique weight system matches the standard model"
            )
        )
    else:
        detail = expected_note or f"{len(systems)} consistent weight systems found"
        if expected is not None and len(systems) == 1:
            detail = "unique weight system differs from the standard model"
        lines.append(ImplicationLine("(2)=>(4)", False, detail))

    if expected is None:
        for name in ("(4)=>(2)", "(4)=>(3)", "(4)=>(1)"):
            lines.append(ImplicationLine(name, False, expected_note))
        return EquivalenceReport(spec, tuple(lines), len(systems))

    measured = classify_ring(ring_coefficients(expected))
    lines.append(
        ImplicationLine(
            "(4)=>(2)",
            measured.kind is spec.kind and measured.n == n,
            f"measured ring classifies as {measured.kind}",
        )
    )

    gamma = chern_coefficients(expected).gamma
    reference = reference_chern(spec.kind, n)
    lines.append(
        ImplicationLine(
            "(4)=>(3)",
            tuple(gamma) == tuple(Fraction(v) for v in reference),
            f"Chern coefficients {', '.join(str(g) for g in gamma)}",
        )
    )

    c_expected = n + 1 if spec.kind is RingKind.PROJECTIVE_SPACE else n
    c_label = "n+1" if spec.kind is RingKind.PROJECTIVE_SPACE else "n"
    try:
        c = c1_coefficient(expected)
        lines.append(
            ImplicationLine(
                "(4)=>(1)", c == c_expected, f"C = {c} = {c_label}"
                if c == c_expected
                else f"C = {c}, expected {c_expected}",
            )
        )
    except HamfixError as exc:
        lines.append(ImplicationLine("(4)=>(1)", False, str(exc)))

    return EquivalenceReport(spec, tuple(lines), len(systems))


def infer_moment_values(weight_multisets: Sequence[Iterable[int]]) -> list[Fraction]:
    """Recover moment values (with phi(P_0) = 0) from bare weight multisets.

    The multisets are ordered by decreasing weight sum Gamma; the affine
    relation Gamma_i = -C*phi_i + d then determines phi up to the scale
    C.  Matching the measured product of negative weights at P_2 against
    r_2 * (phi_0 - phi_2)(phi_1 - phi_2), with r_2 read off the same
    weights, collapses algebraically to C = (Gamma_0 - Gamma_1) / |w|
    where w is the single negative weight at P_1.
    """
    multisets = [tuple(sorted(ws)) for ws in weight_multisets]
    n = len(multisets) - 1
    if n < 1:
        raise InconsistentGamma("need at least two weight multisets")
    for ws in multisets:
        if len(ws) != n:
            raise InconsistentGamma(
                f"every multiset must have {n} weights, got {len(ws)}"
            )
        if any(w == 0 for w in ws):
            raise InconsistentGamma("zero weight in input")

    ordered = sorted(multisets, key=lambda ws: (-sum(ws), ws))
    gammas = [sum(ws) for ws in ordered]
    for i in range(n):
        if gammas[i] == gammas[i + 1]:
            raise InconsistentGamma(
                f"two multisets share the weight sum {gammas[i]}; "
                "no strictly monotone moment assignment exists"
            )
    for i, ws in enumerate(ordered):
        k = sum(1 for w in ws if w < 0)
        if k != i:
            raise InconsistentGamma(
                f"multiset ranked {i} by weight sum has {k} negative weights, expected {i}"
            )

    lam1 = next(w for w in ordered[1] if w < 0)
    c = Fraction(gammas[0] - gammas[1], -lam1)
    if c <= 0:
        raise NoPositiveScale(f"inferred scale C = {c} is not positive")
    return [Fraction(gammas[0] - g) / c for g in gammas]


@dataclass(frozen=True)
class SphereEdge:
    """A gradient-sphere edge between P_lower and P_upper carrying |w|;
    -w is a weight at the upper point and, if paired, +w at the lower."""

    lower: int
    upper: int
    weight: int
    paired: bool


@dataclass(frozen=True)
class AmbiguousWeight:
    """A weight left unmatched with no unique divisibility-feasible pole."""

    point: int
    weight: int
    candidates: tuple[int, ...]


@dataclass(frozen=True)
class GradientSphereGraph:
    n: int
    edges: tuple[SphereEdge, ...]
    ambiguous: tuple[AmbiguousWeight, ...]
    missing_pairs: tuple[tuple[int, int], ...]

    def edges_between(self, lower: int, upper: int) -> list[SphereEdge]:
        return [e for e in self.edges if e.lower == lower and e.upper == upper]


def _divides(gap: Fraction, w: int) -> bool:
    return (Fraction(gap) / w).denominator == 1


def gradient_graph(data: FixedPointData) -> GradientSphereGraph:
    """Pair weights into gradient-sphere edges by a deterministic greedy.

    A paired edge needs -w at the upper point, +w at the lower, and w
    dividing the moment gap; candidates are consumed largest weight
    first, then smallest point distance.  Leftover weights become
    unpaired edges when a single feasible pole remains, and are flagged
    ambiguous otherwise.  ``missing_pairs`` lists point pairs with no
    edge at all.
    """
    n = data.n
    phis = data.moment_values
    neg_avail: dict[tuple[int, int], int] = {}
    pos_avail: dict[tuple[int, int], int] = {}
    for p in data.points:
        for w in p.weights:
            table = neg_avail if w < 0 else pos_avail
            key = (p.index, abs(w))
            table[key] = table.get(key, 0) + 1

    edges: list[SphereEdge] = []
    for w in sorted({w for _, w in list(neg_avail) + list(pos_avail)}, reverse=True):
        candidates = [
            (i - j, j, i)
            for (i, wi) in neg_avail
            if wi == w
            for (j, wj) in pos_avail
            if wj == w and j < i and _divides(phis[i] - phis[j], w)
        ]
        for _, j, i in sorted(candidates):
            while neg_avail.get((i, w), 0) > 0 and pos_avail.get((j, w), 0) > 0:
                neg_avail[(i, w)] -= 1
                pos_avail[(j, w)] -= 1
                edges.append(SphereEdge(j, i, w, True))

    ambiguous: list[AmbiguousWeight] = []
    for (i, w), count in sorted(neg_avail.items()):
        feasible = tuple(j for j in range(i) if _divides(phis[i] - phis[j], w))
        for _ in range(count):
            if len(feasible) == 1:
                edges.append(SphereEdge(feasible[0], i, w, False))
            else:
                ambiguous.append(AmbiguousWeight(i, -w, feasible))
    for (j, w), count in sorted(pos_avail.items()):
        feasible = tuple(i for i in range(j + 1, n + 1) if _divides(phis[i] - phis[j], w))
        for _ in range(count):
            if len(feasible) == 1:
                edges.append(SphereEdge(j, feasible[0], w, False))
            else:
                ambiguous.append(AmbiguousWeight(j, w, feasible))

    edges.sort(key=lambda e: (e.lower, e.upper, e.weight, not e.paired))
    covered = {(e.lower, e.upper) for e in edges}
    missing = tuple(
        (j, i)
        for j in range(n + 1)
        for i in range(j + 1, n + 1)
        if (j, i) not in covered
    )
    return GradientSphereGraph(n, tuple(edges), tuple(ambiguous), missing)
