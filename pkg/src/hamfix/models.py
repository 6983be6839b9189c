"""Standard fixed point data: projective spaces and odd quadrics.

``cpn_model(b)`` is the diagonal circle action on CP^n with pairwise
distinct exponents b_i: P_i sits at moment value b_i and carries the
weights {b_j - b_i}.  ``quadric_model(b)`` is the rotation action on the
Grassmannian of oriented 2-planes in R^{n+2} (the smooth quadric in
CP^{n+1}), n odd: each parameter b_i produces an antipodal pair of fixed
points at moment values -b_i and b_i with weights
{b_j + b_i, -b_j + b_i}_{j != i} + {b_i}  and their negatives.

``expected_weights_cpn`` / ``expected_weights_quadric`` build, from the
moment values alone, the unique weight system a datum with the
corresponding cohomology ring must carry: all pairwise moment gaps, with
the antipodal gap halved in the quadric case.
"""

from __future__ import annotations

from typing import Sequence

from .core import FixedPoint, FixedPointData, rat
from .errors import (
    DuplicateAbsB,
    DuplicateB,
    EvenN,
    NonIncreasing,
    OddHalfWeight,
    StructureError,
    ZeroB,
)


def _check_increasing_ints(phis: Sequence[int]) -> list[int]:
    out = []
    for v in phis:
        if isinstance(v, bool) or not isinstance(v, int):
            raise NonIncreasing(f"moment values must be integers, got {v!r}")
        out.append(v)
    for a, b in zip(out, out[1:]):
        if b <= a:
            raise NonIncreasing(f"moment values must be strictly increasing: {a} then {b}")
    if len(out) < 2:
        raise NonIncreasing("need at least two moment values")
    return out


def cpn_model(b: Sequence[int]) -> FixedPointData:
    """Projective space fixed point data for exponents ``b``.

    ``b`` is sorted ascending first; P_i then has moment value b_i and
    weights {b_j - b_i : j != i}.
    """
    bs = sorted(b)
    if len(set(bs)) != len(bs):
        raise DuplicateB(f"exponents must be pairwise distinct, got {list(b)}")
    if len(bs) < 2:
        raise StructureError("need at least two exponents")
    points = tuple(
        FixedPoint(i, rat(bi), tuple(bj - bi for j, bj in enumerate(bs) if j != i))
        for i, bi in enumerate(bs)
    )
    return FixedPointData(len(bs) - 1, points)


def quadric_model(b: Sequence[int], n: int | None = None) -> FixedPointData:
    """Oriented 2-plane Grassmannian data for rotation exponents ``b``.

    ``b`` holds (n+1)/2 nonzero integers with pairwise distinct absolute
    values; signs are absorbed (reorienting a plane) and the values are
    used as b_0 > b_1 > ... > 0, which lists the moment values
    -b_0 < ... < -b_last < b_last < ... < b_0 in increasing order.
    """
    if n is not None:
        if n % 2 == 0:
            raise EvenN(f"quadric model requires odd n, got {n}")
        if n < 3:
            raise StructureError(f"quadric model requires n >= 3, got {n}")
        if len(b) != (n + 1) // 2:
            raise StructureError(
                f"need (n+1)/2 = {(n + 1) // 2} exponents for n = {n}, got {len(b)}"
            )
    if any(v == 0 for v in b):
        raise ZeroB("exponents must be nonzero")
    bs = sorted((abs(v) for v in b), reverse=True)
    if len(set(bs)) != len(bs):
        raise DuplicateAbsB(f"exponents must have distinct absolute values, got {list(b)}")
    if n is None:
        n = 2 * len(bs) - 1
        if n < 3:
            raise StructureError("need at least two exponents")

    half = len(bs)
    points: list[FixedPoint] = []
    for i, bi in enumerate(bs):
        low = [bj + bi for j, bj in enumerate(bs) if j != i]
        low += [-bj + bi for j, bj in enumerate(bs) if j != i]
        low.append(bi)
        points.append(FixedPoint(i, rat(-bi), tuple(low)))
    for i in range(half - 1, -1, -1):
        bi = bs[i]
        high = [bj - bi for j, bj in enumerate(bs) if j != i]
        high += [-bj - bi for j, bj in enumerate(bs) if j != i]
        high.append(-bi)
        points.append(FixedPoint(n - i, rat(bi), tuple(high)))
    return FixedPointData(n, tuple(points))


def expected_weights_cpn(phis: Sequence[int]) -> FixedPointData:
    """The weight system forced by a projective-space cohomology ring:
    P_i carries exactly the moment gaps {phi_j - phi_i : j != i}."""
    vals = _check_increasing_ints(phis)
    points = tuple(
        FixedPoint(i, rat(p), tuple(q - p for j, q in enumerate(vals) if j != i))
        for i, p in enumerate(vals)
    )
    return FixedPointData(len(vals) - 1, points)


def expected_weights_quadric(phis: Sequence[int]) -> FixedPointData:
    """The weight system forced by an odd-quadric cohomology ring:
    P_i carries the moment gaps to every non-antipodal point plus half
    the gap to its antipode P_{n-i}."""
    vals = _check_increasing_ints(phis)
    n = len(vals) - 1
    if n % 2 == 0:
        raise EvenN(f"quadric weights require odd n, got {n}")
    if n < 3:
        raise StructureError(f"quadric weights require n >= 3, got {n}")
    for i in range(n + 1):
        if (vals[n - i] - vals[i]) % 2 != 0:
            raise OddHalfWeight(
                f"moment gap phi(P_{n - i}) - phi(P_{i}) = {vals[n - i] - vals[i]} "
                "is odd; its half-weight is not an integer"
            )
    points = []
    for i, p in enumerate(vals):
        ws = [q - p for j, q in enumerate(vals) if j != i and j != n - i]
        ws.append((vals[n - i] - p) // 2)
        points.append(FixedPoint(i, rat(p), tuple(ws)))
    return FixedPointData(n, tuple(points))
