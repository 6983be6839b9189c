import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hamfix import (
    FixedPointData,
    InconsistentGamma,
    RingKind,
    RingSpec,
    SearchBudgetExceeded,
    SolveOptions,
    SpecMismatch,
    c1_coefficient,
    condition_d_offset,
    cpn_model,
    enumerate_weight_systems,
    gradient_graph,
    infer_moment_values,
    lambda_minus_targets,
    positive_targets,
    quadric_model,
    validate,
    vanishing_battery,
    verify_equivalence,
)
from hamfix.errors import HamfixError

CASE1_WEIGHTS = [(1, 2, 3), (-1, 1, 4), (-1, -4, 1), (-1, -2, -3)]
CASE2_WEIGHTS = [(1, 2, 3), (-1, 1, 5), (-1, -5, 1), (-1, -2, -3)]


# --- independent exhaustive oracle ------------------------------------------
# Enumerate EVERY assignment of a negative divisor of each moment gap,
# with no product-based pruning, then keep the assignments that hit the
# ring's product targets and survive the full check battery.  This is the
# dumb reference the solver's pruned search must reproduce.


def _all_divisor_systems(spec, phis):
    n = spec.n
    targets = lambda_minus_targets(spec, phis)
    pos = positive_targets(spec, phis)
    per_point = []
    for i in range(1, n + 1):
        gap_divisors = []
        for j in range(i):
            gap = phis[i] - phis[j]
            gap_divisors.append([-d for d in range(1, gap + 1) if gap % d == 0])
        per_point.append(list(itertools.product(*gap_divisors)))

    found = []
    for combo in itertools.product(*per_point):
        ok = True
        for i in range(1, n + 1):
            prod = 1
            for w in combo[i - 1]:
                prod *= w
            if prod != targets[i]:
                ok = False
        for j in range(n + 1):
            prod = 1
            for i in range(j + 1, n + 1):
                prod *= -combo[i - 1][j]
            if prod != pos[j]:
                ok = False
        if not ok:
            continue
        weights = [[] for _ in range(n + 1)]
        for i in range(1, n + 1):
            weights[i].extend(combo[i - 1])
            for j, w in enumerate(combo[i - 1]):
                weights[j].append(-w)
        data = FixedPointData.from_weights(phis, weights)
        if not validate(data).is_valid:
            continue
        try:
            c1_coefficient(data)
            condition_d_offset(data)
        except HamfixError:
            continue
        if vanishing_battery(data).passed:
            found.append(data)
    unique = {tuple(p.weights for p in d.points): d for d in found}
    return [unique[k] for k in sorted(unique)]


# --- targets -----------------------------------------------------------------


def test_lambda_minus_targets_cpn():
    spec = RingSpec(RingKind.PROJECTIVE_SPACE, 2)
    assert lambda_minus_targets(spec, [0, 1, 2]) == [1, -1, 2]


def test_lambda_minus_targets_quadric():
    spec = RingSpec(RingKind.QUADRIC, 3)
    targets = lambda_minus_targets(spec, [-2, -1, 1, 2])
    assert targets[0] == 1  # empty product
    assert targets[2] == 3  # half of (-3)(-2)
    assert targets == [1, -1, 3, -6]


def test_positive_targets_examples():
    spec = RingSpec(RingKind.PROJECTIVE_SPACE, 2)
    assert positive_targets(spec, [0, 1, 2]) == [2, 1, 1]
    qspec = RingSpec(RingKind.QUADRIC, 3)
    assert positive_targets(qspec, [-2, -1, 1, 2])[1] == 3
    assert positive_targets(qspec, [-2, -1, 1, 2])[3] == 1


def test_targets_spec_mismatch():
    spec = RingSpec(RingKind.PROJECTIVE_SPACE, 2)
    with pytest.raises(SpecMismatch):
        lambda_minus_targets(spec, [0, 1])
    with pytest.raises(SpecMismatch):
        lambda_minus_targets(spec, [0, 2, 1])


def test_other_ring_targets_reproduce_exceptional_products():
    r = (Fraction(1), Fraction(1), Fraction(1, 5), Fraction(1, 5))
    spec = RingSpec(RingKind.OTHER, 3, r)
    phis = [0, 1, 5, 6]
    data = FixedPointData.from_weights(phis, CASE1_WEIGHTS)
    minus = lambda_minus_targets(spec, phis)
    plus = positive_targets(spec, phis)
    for i in range(4):
        lm = 1
        lp = 1
        for w in data.points[i].weights:
            if w < 0:
                lm *= w
            else:
                lp *= w
        assert lm == minus[i]
        assert lp == plus[i]


# --- enumeration -------------------------------------------------------------


def test_enumerate_cp1():
    spec = RingSpec(RingKind.PROJECTIVE_SPACE, 1)
    systems = enumerate_weight_systems(spec, [0, 1])
    assert len(systems) == 1
    assert [p.weights for p in systems[0].points] == [(1,), (-1,)]


def test_enumerate_cp2_unique():
    spec = RingSpec(RingKind.PROJECTIVE_SPACE, 2)
    systems = enumerate_weight_systems(spec, [0, 1, 2])
    assert systems == [cpn_model((0, 1, 2))]
    assert systems == _all_divisor_systems(spec, [0, 1, 2])


def test_enumerate_quadric3_unique():
    spec = RingSpec(RingKind.QUADRIC, 3)
    systems = enumerate_weight_systems(spec, [-2, -1, 1, 2])
    assert systems == [quadric_model((2, 1))]
    assert systems == _all_divisor_systems(spec, [-2, -1, 1, 2])


def test_enumerate_matches_oracle_on_spread_moments():
    spec = RingSpec(RingKind.PROJECTIVE_SPACE, 2)
    for phis in ([0, 1, 3], [0, 2, 4], [1, 3, 4]):
        assert enumerate_weight_systems(spec, phis) == _all_divisor_systems(spec, phis)
    qspec = RingSpec(RingKind.QUADRIC, 3)
    for phis in ([-3, -1, 1, 3], [-4, -2, 2, 4]):
        assert enumerate_weight_systems(qspec, phis) == _all_divisor_systems(qspec, phis)


def test_enumerate_quadric_odd_gap_is_empty():
    spec = RingSpec(RingKind.QUADRIC, 3)
    assert enumerate_weight_systems(spec, [-2, -1, 1, 3]) == []


def test_enumerate_other_ring_is_filter_only():
    # The true weight system for the x^2-5y ring exists (it passes the
    # battery) but violates the paired-sphere ansatz: no sphere joins
    # P_0 and P_2, so the ansatz search must come up empty rather than
    # claim a wrong system.
    r = (Fraction(1), Fraction(1), Fraction(1, 5), Fraction(1, 5))
    spec = RingSpec(RingKind.OTHER, 3, r)
    assert enumerate_weight_systems(spec, [0, 1, 5, 6]) == []
    true_system = FixedPointData.from_weights([0, 1, 5, 6], CASE1_WEIGHTS)
    assert vanishing_battery(true_system).passed


def test_enumerate_results_pass_all_checks():
    spec = RingSpec(RingKind.QUADRIC, 5)
    systems = enumerate_weight_systems(spec, [-3, -2, -1, 1, 2, 3])
    assert len(systems) == 1
    for data in systems:
        assert validate(data).is_valid
        assert vanishing_battery(data).passed
        c1_coefficient(data)


def test_enumerate_budget_exceeded():
    spec = RingSpec(RingKind.PROJECTIVE_SPACE, 2)
    with pytest.raises(SearchBudgetExceeded):
        enumerate_weight_systems(spec, [0, 1, 2], SolveOptions(budget=0))


def test_enumerate_jobs_do_not_change_output():
    spec = RingSpec(RingKind.QUADRIC, 3)
    phis = [-3, -1, 1, 3]
    serial = enumerate_weight_systems(spec, phis, SolveOptions(jobs=1))
    threaded = enumerate_weight_systems(spec, phis, SolveOptions(jobs=4))
    assert serial == threaded


def test_enumerate_max_abs_weight_cap():
    spec = RingSpec(RingKind.PROJECTIVE_SPACE, 1)
    # the only weight system needs |w| = 1, so a cap of 1 keeps it
    assert enumerate_weight_systems(spec, [0, 1], SolveOptions(max_abs_weight=1))


# --- verify ------------------------------------------------------------------


def test_verify_cpn():
    report = verify_equivalence(RingSpec(RingKind.PROJECTIVE_SPACE, 3), [0, 1, 2, 3])
    assert report.passed
    assert [line.name for line in report.lines] == [
        "(2)=>(4)",
        "(4)=>(2)",
        "(4)=>(3)",
        "(4)=>(1)",
    ]


def test_verify_quadric_reports_c1():
    report = verify_equivalence(RingSpec(RingKind.QUADRIC, 3), [-2, -1, 1, 2])
    assert report.passed
    assert report.lines[3].detail == "C = 3 = n"


def test_verify_quadric_odd_gap_fails_2_implies_4():
    report = verify_equivalence(RingSpec(RingKind.QUADRIC, 3), [-2, -1, 1, 3])
    assert not report.passed
    assert not report.lines[0].passed
    assert report.system_count == 0


def test_verify_rejects_other_rings():
    r = (Fraction(1),) * 3
    with pytest.raises(SpecMismatch):
        verify_equivalence(RingSpec(RingKind.OTHER, 2, r), [0, 1, 2])


# --- moment inference --------------------------------------------------------


def test_infer_case1():
    assert infer_moment_values(CASE1_WEIGHTS) == [0, 1, 5, 6]


def test_infer_case2():
    assert infer_moment_values(CASE2_WEIGHTS) == [0, 1, 11, 12]


def test_infer_round_trip_on_model():
    data = cpn_model((0, 1, 2))
    phis = infer_moment_values([p.weights for p in data.points])
    assert phis == [0, 1, 2]


def test_infer_orders_by_weight_sum():
    shuffled = [CASE1_WEIGHTS[2], CASE1_WEIGHTS[0], CASE1_WEIGHTS[3], CASE1_WEIGHTS[1]]
    assert infer_moment_values(shuffled) == [0, 1, 5, 6]


def test_infer_rejects_tied_gamma():
    with pytest.raises(InconsistentGamma):
        infer_moment_values([(1, 2), (-1, 4), (-2, -1)])


def test_infer_rejects_bad_counts():
    # sums 5, 3, -3 are distinct, but the middle multiset has no negative weight
    with pytest.raises(InconsistentGamma):
        infer_moment_values([(1, 2), (2, 3), (-2, -1)])


@given(st.lists(st.integers(-6, 6), min_size=2, max_size=5, unique=True))
def test_infer_round_trip_property(b):
    data = cpn_model(b).normalized()
    phis = infer_moment_values([p.weights for p in data.points])
    assert phis == list(data.moment_values)


# --- gradient graph ----------------------------------------------------------


def test_gradient_graph_cpn2():
    graph = gradient_graph(cpn_model((0, 1, 2)))
    assert [(e.lower, e.upper, e.weight) for e in graph.edges] == [
        (0, 1, 1),
        (0, 2, 2),
        (1, 2, 1),
    ]
    assert all(e.paired for e in graph.edges)
    assert graph.missing_pairs == ()


def test_gradient_graph_quadric3_antipodal_edge():
    graph = gradient_graph(quadric_model((2, 1)))
    antipodal = graph.edges_between(0, 3)
    assert [(e.weight, e.paired) for e in antipodal] == [(2, True)]
    assert graph.missing_pairs == ()


def test_gradient_graph_case1_flags():
    data = FixedPointData.from_weights([0, 1, 5, 6], CASE1_WEIGHTS)
    graph = gradient_graph(data)
    assert (0, 2) in graph.missing_pairs
    assert len(graph.edges_between(0, 3)) == 2
    assert {e.weight for e in graph.edges_between(0, 3)} == {2, 3}


def test_gradient_graph_unpaired_edge():
    # -2 at the top has no +2 partner below, but P_0 is its only feasible pole
    data = FixedPointData.from_weights([0, 2], [(1,), (-2,)])
    graph = gradient_graph(data)
    unpaired = [e for e in graph.edges if not e.paired]
    assert [(e.lower, e.upper, e.weight) for e in unpaired] == [(0, 1, 1), (0, 1, 2)]


def test_gradient_graph_ambiguous_weight():
    # +1 at P_0 can pair with no one; both P_1 and P_2 are feasible poles
    data = FixedPointData.from_weights(
        [0, 1, 2], [(1, 1), (-2, 2), (-2, -1)]
    )
    graph = gradient_graph(data)
    assert any(a.point == 0 and a.weight == 1 for a in graph.ambiguous)
