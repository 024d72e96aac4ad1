"""
Numeric verification of flows: translation equation, flow PDE,
commutation, orbit invariance, boundary behaviour, closed form
compositions, agreement of two evaluators of one flow and the algebraic
identity between partner branches.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable
from typing import Iterable
from typing import List
from typing import Optional
from typing import Sequence
from typing import Union

from sympy.polys.rings import PolyElement

from projflow._errors import BoundaryConditionError
from projflow._errors import ProjflowError
from projflow._errors import SingularPointError
from projflow._settings import DEFAULT_SETTINGS
from projflow._settings import Settings
from projflow.algebra import RationalFunction
from projflow.algebra._rings import TXYZ_T
from projflow.algebra._rings import TXYZ_X
from projflow.algebra._rings import TXYZ_Y
from projflow.fields import FieldPair
from projflow.numeric._flows import ClosedFormComposition
from projflow.numeric._flows import ComposedFlow
from projflow.numeric._flows import Point
from projflow.numeric._flows import ScaledFlow
from projflow.numeric._report import CheckName
from projflow.numeric._report import VerificationReport
from projflow.numeric._sampling import Sample
from projflow.numeric._sampling import SamplePlan
from projflow.partner import CombinedOrbit
from projflow.partner import ImplicitEquation

logger = logging.getLogger(__name__)

BOUNDARY_STEPS = (1e-3, 1e-4, 1e-5)
_DECAY_SLACK = 2.0
# rounding of (φ^z(p) - p)/z at z = 1e-5
_DECAY_FLOOR = 1e-6


def residual(expected: Sequence[complex], actual: Sequence[complex]) -> float:
    """
    max |a - b|/(1 + |a|) over coordinates.
    """
    return max(
        abs(a - b) / (1 + abs(a)) for a, b in zip(expected, actual)
    )


def _guarded(function: Callable[[Sample], float]) -> Callable[[Sample], float]:
    def run(sample: Sample) -> float:
        try:
            value = function(sample)
        except (ProjflowError, ZeroDivisionError, OverflowError) as error:
            logger.warning(f"sample {sample.index} failed: {error}")
            return math.inf
        return value if math.isfinite(value) else math.inf

    return run


def _run(
    check: CheckName,
    function: Callable[[Sample], float],
    plan: SamplePlan,
    loci: Iterable[PolyElement],
    tolerance: float,
    settings: Settings,
    label: Optional[str],
) -> VerificationReport:
    samples = plan.draw(loci)
    guarded = _guarded(function)
    workers = settings.sampling.workers
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            residuals: List[float] = list(executor.map(guarded, samples))
    else:
        residuals = [guarded(sample) for sample in samples]
    report = VerificationReport.from_residuals(
        check, plan.seed, residuals, tolerance, label=label
    )
    logger.info(
        f"{check.value} check{'' if label is None else ' of ' + label}: "
        f"max residual {report.max_residual:.3e} against {tolerance:.1e}, "
        f"{'pass' if report.passed else 'FAIL'}"
    )
    return report


def verify_translation(
    flow: ScaledFlow,
    plan: SamplePlan,
    tolerance: Optional[float] = None,
    loci: Iterable[PolyElement] = (),
    settings: Settings = DEFAULT_SETTINGS,
    label: Optional[str] = None,
) -> VerificationReport:
    """
    Checks φ^(z+w) = φ^z ∘ φ^w at sampled (p, z, w).
    """

    def check(sample: Sample) -> float:
        p, z, w = sample.point, sample.z, sample.w
        return residual(flow(p, z + w), flow(flow(p, w), z))

    tolerance = settings.tolerances.translation if tolerance is None else tolerance
    return _run(CheckName.TRANSLATION, check, plan, loci, tolerance, settings, label)


def _partials(flow: ScaledFlow, p: Point, z: float, step_scale: float):
    x, y = p
    hx = step_scale * max(1.0, abs(x))
    hy = step_scale * max(1.0, abs(y))
    forward_x, backward_x = flow((x + hx, y), z), flow((x - hx, y), z)
    forward_y, backward_y = flow((x, y + hy), z), flow((x, y - hy), z)
    dx = [(f - b) / (2 * hx) for f, b in zip(forward_x, backward_x)]
    dy = [(f - b) / (2 * hy) for f, b in zip(forward_y, backward_y)]
    return dx, dy


def verify_pde(
    flow: ScaledFlow,
    field: FieldPair,
    plan: SamplePlan,
    tolerance: Optional[float] = None,
    loci: Iterable[PolyElement] = (),
    settings: Settings = DEFAULT_SETTINGS,
    label: Optional[str] = None,
) -> VerificationReport:
    """
    Checks g_x (zϖ - x) + g_y (zϱ - y) + g = 0 for both coordinates g of
    φ^z, the scaled form of u_x(ϖ - x) + u_y(ϱ - y) = -u. Derivatives are
    central differences.
    """
    step_scale = settings.sampling.finite_difference_step

    def check(sample: Sample) -> float:
        p, z = sample.point, sample.z
        varpi, rho = field.evaluate_numeric(*p)
        values = flow(p, z)
        dx, dy = _partials(flow, p, z, step_scale)
        return max(
            abs(gx * (z * varpi - p[0]) + gy * (z * rho - p[1]) + g) / (1 + abs(g))
            for g, gx, gy in zip(values, dx, dy)
        )

    tolerance = settings.tolerances.pde if tolerance is None else tolerance
    return _run(CheckName.PDE, check, plan, loci, tolerance, settings, label)


def verify_commute(
    first: ScaledFlow,
    second: ScaledFlow,
    plan: SamplePlan,
    tolerance: Optional[float] = None,
    loci: Iterable[PolyElement] = (),
    settings: Settings = DEFAULT_SETTINGS,
    label: Optional[str] = None,
) -> VerificationReport:
    """
    Checks φ^z ∘ ψ^w = ψ^w ∘ φ^z.
    """

    def check(sample: Sample) -> float:
        p, z, w = sample.point, sample.z, sample.w
        return residual(first(second(p, w), z), second(first(p, z), w))

    tolerance = settings.tolerances.commute if tolerance is None else tolerance
    return _run(CheckName.COMMUTE, check, plan, loci, tolerance, settings, label)


def _orbit_value(
    orbit: Union[RationalFunction, CombinedOrbit], p: Point, z: float, w: float
) -> complex:
    if isinstance(orbit, CombinedOrbit):
        return orbit.evaluate_numeric(p[0], p[1], z, w)
    return orbit.evaluate_numeric(*p)


def verify_orbit(
    first: ScaledFlow,
    orbit: Union[RationalFunction, CombinedOrbit],
    plan: SamplePlan,
    second: Optional[ScaledFlow] = None,
    tolerance: Optional[float] = None,
    loci: Iterable[PolyElement] = (),
    settings: Settings = DEFAULT_SETTINGS,
    label: Optional[str] = None,
) -> VerificationReport:
    """
    Checks that the orbit function stays constant along φ^z ∘ ψ^w. A plain
    W is checked along φ^z alone; a template Ŵ(z, w) along the composition.
    """

    def check(sample: Sample) -> float:
        p, z, w = sample.point, sample.z, sample.w
        if second is None:
            moved = first(p, z)
            w = 0.0
        else:
            moved = first(second(p, w), z)
        before = _orbit_value(orbit, p, z, w)
        after = _orbit_value(orbit, moved, z, w)
        return abs(after - before) / (1 + abs(before))

    tolerance = settings.tolerances.orbit if tolerance is None else tolerance
    return _run(CheckName.ORBIT, check, plan, loci, tolerance, settings, label)


def _boundary_residuals(
    flow: ScaledFlow, expected: Sequence[complex], p: Point
) -> List[float]:
    residuals = []
    for z in BOUNDARY_STEPS:
        moved = flow(p, z)
        residuals.append(residual(expected, [(m - c) / z for m, c in zip(moved, p)]))
    return residuals


def verify_boundary(
    flow: ScaledFlow,
    field: FieldPair,
    plan: SamplePlan,
    tolerance: Optional[float] = None,
    loci: Iterable[PolyElement] = (),
    settings: Settings = DEFAULT_SETTINGS,
    label: Optional[str] = None,
) -> VerificationReport:
    """
    Checks (φ^z(p) - p)/z -> F(p) over z = 1e-3, 1e-4, 1e-5. Each step must
    shrink the error at least linearly in z, up to a factor of
    ``_DECAY_SLACK`` and the noise floor ``_DECAY_FLOOR``; a sample whose
    error stalls fails outright. The residual of a sample is its error at
    the smallest z.
    """

    def check(sample: Sample) -> float:
        p = sample.point
        residuals = _boundary_residuals(flow, field.evaluate_numeric(*p), p)
        steps = list(zip(BOUNDARY_STEPS, residuals))
        for (z, error), (smaller_z, smaller_error) in zip(steps, steps[1:]):
            bound = _DECAY_SLACK * error * smaller_z / z + _DECAY_FLOOR
            if smaller_error > bound:
                raise BoundaryConditionError(
                    f"error {smaller_error:.3e} at z={smaller_z:g} does not decay "
                    f"linearly from {error:.3e} at z={z:g}"
                )
        return residuals[-1]

    tolerance = settings.tolerances.boundary if tolerance is None else tolerance
    return _run(CheckName.BOUNDARY, check, plan, loci, tolerance, settings, label)


def verify_identity(
    phi: ScaledFlow,
    psi: ScaledFlow,
    plan: SamplePlan,
    tolerance: Optional[float] = None,
    loci: Iterable[PolyElement] = (),
    settings: Settings = DEFAULT_SETTINGS,
    label: Optional[str] = None,
) -> VerificationReport:
    """
    Checks u(a, y/(y + 1)) = a(u, y) with u, a the first coordinates of φ^1
    and ψ^1, both continued from their boundary values.
    """

    def check(sample: Sample) -> float:
        p = sample.point
        left = phi(psi(p, 1.0), 1.0)[0]
        right = psi(phi(p, 1.0), 1.0)[0]
        return residual([left], [right])

    tolerance = settings.tolerances.identity if tolerance is None else tolerance
    return _run(CheckName.IDENTITY, check, plan, loci, tolerance, settings, label)


def verify_agreement(
    expected: ScaledFlow,
    actual: ScaledFlow,
    plan: SamplePlan,
    tolerance: Optional[float] = None,
    loci: Iterable[PolyElement] = (),
    settings: Settings = DEFAULT_SETTINGS,
    label: Optional[str] = None,
) -> VerificationReport:
    """
    Checks that two evaluators of the same flow agree at sampled (p, z).
    """

    def check(sample: Sample) -> float:
        p, z = sample.point, sample.z
        return residual(expected(p, z), actual(p, z))

    tolerance = settings.tolerances.agreement if tolerance is None else tolerance
    return _run(CheckName.AGREEMENT, check, plan, loci, tolerance, settings, label)


def verify_composition(
    first: ScaledFlow,
    second: ScaledFlow,
    closed_form: ClosedFormComposition,
    plan: SamplePlan,
    tolerance: Optional[float] = None,
    loci: Iterable[PolyElement] = (),
    settings: Settings = DEFAULT_SETTINGS,
    label: Optional[str] = None,
) -> VerificationReport:
    """
    Checks φ^z ∘ ψ^w against a closed form of the composition.
    """
    composed = ComposedFlow(first, second)

    def check(sample: Sample) -> float:
        p, z, w = sample.point, sample.z, sample.w
        return residual(closed_form(p, z, w), composed(p, z, w))

    tolerance = settings.tolerances.translation if tolerance is None else tolerance
    return _run(CheckName.COMPOSITION, check, plan, loci, tolerance, settings, label)


def _numeric_polynomial(poly: PolyElement) -> Callable[..., complex]:
    terms = [(monom, float(coeff)) for monom, coeff in poly.terms()]

    def evaluate(*values: complex) -> complex:
        total = 0j
        for monom, coeff in terms:
            term = coeff
            for value, exponent in zip(values, monom):
                term *= value**exponent
            total += term
        return total

    return evaluate


def verify_implicit_pde(
    flow: ScaledFlow,
    equation: ImplicitEquation,
    field: FieldPair,
    plan: SamplePlan,
    tolerance: Optional[float] = None,
    loci: Iterable[PolyElement] = (),
    settings: Settings = DEFAULT_SETTINGS,
    label: Optional[str] = None,
) -> VerificationReport:
    """
    Checks the flow PDE for the first coordinate a of ``flow`` with its
    partials taken implicitly from E(a, x, y, z) = 0, a_x = -E_x/E_t and
    a_y = -E_y/E_t.
    """
    e_t, e_x, e_y = (
        _numeric_polynomial(equation.scaled.diff(gen)) for gen in (TXYZ_T, TXYZ_X, TXYZ_Y)
    )

    def check(sample: Sample) -> float:
        p, z = sample.point, sample.z
        a = flow(p, z)[0]
        slope = e_t(a, p[0], p[1], z)
        if slope == 0:
            raise SingularPointError(f"E_t vanishes at {a=}, {p=}, {z=}")
        a_x = -e_x(a, p[0], p[1], z) / slope
        a_y = -e_y(a, p[0], p[1], z) / slope
        varpi, rho = field.evaluate_numeric(*p)
        return abs(a_x * (z * varpi - p[0]) + a_y * (z * rho - p[1]) + a) / (1 + abs(a))

    tolerance = settings.tolerances.pde if tolerance is None else tolerance
    return _run(CheckName.PDE, check, plan, loci, tolerance, settings, label)
