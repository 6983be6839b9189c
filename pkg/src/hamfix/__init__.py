"""Exact combinatorial toolkit for Hamiltonian circle actions whose fixed
point set is the minimal number of isolated points.

A manifold enters only through its fixed point data: one moment value
and one integer weight multiset per fixed point.  From that shadow the
package validates every consistency rule such an action must obey,
evaluates localization sums, measures the cohomology ring and Chern
classes, and conversely enumerates the weight systems a prescribed ring
allows.
"""

from .cohomology import (
    ChernData,
    RingCoefficients,
    RingKind,
    RingSpec,
    c1_coefficient,
    chern_coefficients,
    classify_ring,
    condition_d_offset,
    reference_chern,
    ring_coefficients,
)
from .core import (
    FixedPoint,
    FixedPointData,
    Rat,
    ValidationReport,
    Violation,
    gamma,
    lambda_all,
    lambda_minus,
    lambda_plus,
    rat,
    validate,
)
from .documents import (
    InputDocument,
    document_from_json,
    load_document,
    parse_document,
    save_document,
    serialize_document,
)
from .errors import (
    ConditionDViolated,
    CrossCheckFailed,
    DegenerateGamma,
    DuplicateAbsB,
    DuplicateB,
    EvenN,
    HamfixError,
    InconsistentGamma,
    IndexOutOfRange,
    MissingRestriction,
    NoPositiveScale,
    NonConstantC1,
    NonIncreasing,
    NonPositiveC1,
    OddHalfWeight,
    ParseError,
    SearchBudgetExceeded,
    SpecMismatch,
    StructureError,
    ZeroB,
)
from .localization import (
    BatteryFailure,
    BatteryReport,
    EquivariantRestriction,
    abbv_sum,
    c1_omega_monomial,
    omega_power_restriction,
    vanishing_battery,
)
from .models import (
    cpn_model,
    expected_weights_cpn,
    expected_weights_quadric,
    quadric_model,
)
from .solver import (
    AmbiguousWeight,
    EquivalenceReport,
    GradientSphereGraph,
    ImplicationLine,
    SolveOptions,
    SphereEdge,
    enumerate_weight_systems,
    gradient_graph,
    infer_moment_values,
    lambda_minus_targets,
    positive_targets,
    verify_equivalence,
)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
