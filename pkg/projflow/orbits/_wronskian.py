import logging
from fractions import Fraction
from typing import Optional
from typing import Tuple

from projflow._errors import InconsistentInputError
from projflow._errors import PreconditionError
from projflow.algebra import dehomogenize
from projflow.algebra import RationalFunction
from projflow.algebra import rehomogenize
from projflow.algebra import require_degree
from projflow.fields import commutation_system
from projflow.fields import FieldPair
from projflow.orbits._integration import hermite_logpart
from projflow.orbits._orbit import scalar_ratio

logger = logging.getLogger(__name__)


def beta_from_W(field: FieldPair, orbit: RationalFunction) -> RationalFunction:
    """
    β = -ϱ ∫ y ϱ_x W/ϱ² dx with integration constant 0; any multiple of ϱ
    may be added to the result.

    Raises:
        PreconditionError: ϱ is zero.
        NotHomogeneousError: ``orbit`` is not 1-homogeneous.
        InconsistentInputError: the integral is not rational, so ``orbit``
            is not an orbit function of ``field``.
    """
    rho = field.second
    if rho.is_zero:
        raise PreconditionError(f"second component of {field} is zero")
    require_degree(orbit, 1, "W")
    y = RationalFunction.y()
    integrand = y * rho.diff("x") * orbit / rho**2
    integral = hermite_logpart(dehomogenize(integrand, -1))
    if not integral.is_rational:
        raise InconsistentInputError(
            f"∫ y ϱ_x W/ϱ² dx is not rational for {field} and W={orbit}"
        )
    return -rho * rehomogenize(integral.rational_part, 0)


def _solve_constant(
    base: FieldPair, direction: FieldPair
) -> Optional[Fraction]:
    constant = None
    for offset, slope in zip(base, direction):
        if slope.is_zero:
            if not offset.is_zero:
                return None
            continue
        candidate = (-offset / slope).constant_value()
        if candidate is None or (constant is not None and candidate != constant):
            return None
        constant = candidate
    return Fraction(1) if constant is None else constant


def alpha_from_wronskian(
    field: FieldPair, orbit: RationalFunction, beta: RationalFunction
) -> RationalFunction:
    """
    Completes β to a commuting partner α•β using the Wronskian identity
    αϱ - βϖ = c W (xϱ - yϖ).

    The bracket with F is affine in c, so c is solved exactly; when every
    c works the choice is c = 1.

    Raises:
        PreconditionError: ϱ is zero.
        InconsistentInputError: no constant c makes α•β commute with F.
    """
    varpi, rho = field
    if rho.is_zero:
        raise PreconditionError(f"second component of {field} is zero")
    x, y = RationalFunction.x(), RationalFunction.y()
    base = beta * varpi / rho
    direction = orbit * (x * rho - y * varpi) / rho
    constant = _solve_constant(
        commutation_system(field, FieldPair(base, beta)),
        commutation_system(field, FieldPair(direction, 0)),
    )
    if constant is None:
        raise InconsistentInputError(
            f"no constant c makes (βϖ + cW(xϱ - yϖ))/ϱ • β commute with "
            f"{field} for W={orbit}, β={beta}"
        )
    logger.debug(f"Wronskian constant c={constant}")
    return base + constant * direction


def wronskian_constants(
    field: FieldPair,
    partner: FieldPair,
    orbit: RationalFunction,
    partner_orbit: RationalFunction,
) -> Tuple[Optional[Fraction], Optional[Fraction]]:
    """
    The constants c and c' of

        αϱ - βϖ = c W (xϱ - yϖ)
        βϖ - αϱ = c' V (xβ - yα)

    each None when the two sides are not proportional.
    """
    varpi, rho = field
    alpha, beta = partner
    x, y = RationalFunction.x(), RationalFunction.y()
    wronskian = alpha * rho - beta * varpi
    return (
        scalar_ratio(wronskian, orbit * (x * rho - y * varpi)),
        scalar_ratio(-wronskian, partner_orbit * (x * beta - y * alpha)),
    )
