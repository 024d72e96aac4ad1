"""
Rational solutions of first order linear ODEs a f' + b f = c.

The particular solution is found with a universal denominator and a degree
bound for the numerator, after which the numerator coefficients solve an
exact linear system.
"""

import logging
from fractions import Fraction
from typing import Optional

from sympy.polys.rings import PolyElement

from projflow._errors import LevelZeroError
from projflow._errors import PreconditionError
from projflow._errors import UndecidedError
from projflow._settings import DEFAULT_SETTINGS
from projflow._settings import Settings
from projflow.algebra import dehomogenize
from projflow.algebra import irreducible_factors
from projflow.algebra import RationalFunction
from projflow.algebra import UnivariateRationalFunction
from projflow.algebra._linear import solve_over_qq
from projflow.algebra._rings import to_scalar
from projflow.algebra._rings import X1
from projflow.fields import FieldPair
from projflow.fields import is_level0
from projflow.orbits._integration import hermite_logpart

logger = logging.getLogger(__name__)


class RationalODEProblem:
    """
    The equation a f' + b f = c with rational coefficients in x.

    Raises:
        PreconditionError: ``a`` is zero.
    """

    def __init__(
        self,
        a: UnivariateRationalFunction,
        b: UnivariateRationalFunction,
        c: UnivariateRationalFunction,
    ):
        if a.is_zero:
            raise PreconditionError("leading coefficient a of the ODE is zero")
        self.a = a
        self.b = b
        self.c = c

    def residual(self, f: UnivariateRationalFunction) -> UnivariateRationalFunction:
        return self.a * f.diff() + self.b * f - self.c

    def __repr__(self) -> str:
        return f"RationalODEProblem(a={self.a}, b={self.b}, c={self.c})"


class ODESolution:
    """
    Args:
        particular: a rational solution, or None when none exists.
        homogeneous_rational: whether exp(-∫b/a) is rational.
        homogeneous: that solution when it is rational.
    """

    def __init__(
        self,
        particular: Optional[UnivariateRationalFunction],
        homogeneous_rational: bool,
        homogeneous: Optional[UnivariateRationalFunction] = None,
    ):
        self.particular = particular
        self.homogeneous_rational = homogeneous_rational
        self.homogeneous = homogeneous

    @property
    def all_rational(self) -> bool:
        return self.particular is not None and self.homogeneous_rational

    def __repr__(self) -> str:
        return (
            f"ODESolution(particular={self.particular}, "
            f"homogeneous_rational={self.homogeneous_rational})"
        )


def _valuation(poly: PolyElement, factor: PolyElement) -> Optional[int]:
    if not poly:
        return None
    count = 0
    quotient, remainder = poly.div(factor)
    while not remainder:
        count += 1
        poly = quotient
        quotient, remainder = poly.div(factor)
    return count


def _positive_integer(value: Fraction) -> Optional[int]:
    if value.denominator == 1 and value > 0:
        return int(value)
    return None


def _indicial_root(
    a: PolyElement, b: PolyElement, factor: PolyElement, k: int, l: int
) -> Optional[int]:
    x = X1.gens[0]
    leading_a = a.exquo(factor**k) * factor.diff(x)
    leading_b = b.exquo(factor**l)
    inverse, gcd = leading_a.half_gcdex(factor)
    inverse = inverse.quo_ground(gcd.LC)
    root = (leading_b * inverse).rem(factor)
    if not root.is_ground:
        return None
    return _positive_integer(to_scalar(root.LC) if root else Fraction(0))


def _pole_order(a: PolyElement, b: PolyElement, factor: PolyElement) -> int:
    k = _valuation(a, factor)
    l = _valuation(b, factor)
    if l is None or k - 1 < l:
        return k - 1
    if k - 1 > l:
        return l
    root = _indicial_root(a, b, factor, k, l)
    return l if root is None else max(l, root)


def _degree_bound(a: PolyElement, b: PolyElement, rhs: PolyElement) -> int:
    alpha = a.degree()
    gamma = rhs.degree()
    if not b:
        return gamma - alpha + 1
    beta = b.degree()
    if beta >= alpha:
        return gamma - beta
    if beta < alpha - 1:
        return gamma - alpha + 1
    bound = gamma - alpha + 1
    special = _positive_integer(to_scalar(-b.LC / a.LC))
    if special is not None:
        bound = max(bound, special)
    return bound


def _particular(
    problem: RationalODEProblem, settings: Settings
) -> Optional[UnivariateRationalFunction]:
    x = X1.gens[0]
    common = problem.a.denom.lcm(problem.b.denom).lcm(problem.c.denom)
    a = (problem.a * UnivariateRationalFunction(common)).numer
    b = (problem.b * UnivariateRationalFunction(common)).numer
    c = (problem.c * UnivariateRationalFunction(common)).numer
    if not c:
        return UnivariateRationalFunction(0)
    limits = settings.limits
    denominator = X1.one
    for factor, _ in irreducible_factors(a).factors:
        if factor.degree() < 1:
            continue
        order = _pole_order(a, b, factor)
        if order > limits.max_pole_order:
            raise UndecidedError(
                f"pole order {order} at {factor=} exceeds "
                f"{limits.max_pole_order=}"
            )
        if order > 0:
            denominator = denominator * factor**order
    shift = (a * denominator.diff(x)).exquo(denominator)
    b_shifted = b - shift
    rhs = c * denominator
    degree = _degree_bound(a, b_shifted, rhs)
    logger.debug(
        f"universal denominator {denominator}, numerator degree bound {degree}"
    )
    if degree > limits.max_numerator_degree:
        raise UndecidedError(
            f"numerator degree bound {degree} exceeds "
            f"{limits.max_numerator_degree=}"
        )
    if degree < 0:
        return None
    images = [
        (a * (x**i).diff(x) + b_shifted * x**i) for i in range(degree + 1)
    ]
    height = max([rhs.degree()] + [image.degree() for image in images]) + 1
    rows = [
        [image.coeff(x**j) if j else image.coeff(1) for image in images]
        for j in range(height)
    ]
    values = [rhs.coeff(x**j) if j else rhs.coeff(1) for j in range(height)]
    solution = solve_over_qq(rows, values)
    if solution is None:
        return None
    numerator = X1.from_dict(
        {(i,): value for i, value in enumerate(solution) if value}
    )
    return UnivariateRationalFunction(numerator, denominator)


def _homogeneous(
    problem: RationalODEProblem,
) -> Optional[UnivariateRationalFunction]:
    integral = hermite_logpart(-problem.b / problem.a)
    if not integral.rational_part.is_zero or integral.algebraic:
        return None
    solution = UnivariateRationalFunction(1)
    for term in integral.log_terms:
        if term.coefficient.denominator != 1:
            return None
        solution = solution * UnivariateRationalFunction(term.argument) ** int(
            term.coefficient
        )
    return solution


def rational_ode_solve(
    problem: RationalODEProblem, settings: Settings = DEFAULT_SETTINGS
) -> ODESolution:
    """
    Decides whether a f' + b f = c has a rational particular solution and
    whether its homogeneous solution exp(-∫b/a) is rational.

    Raises:
        UndecidedError: the pole order or numerator degree bound exceeds the
            configured search limits.
    """
    homogeneous = _homogeneous(problem)
    particular = _particular(problem, settings)
    logger.debug(f"{problem}: {particular=}, {homogeneous=}")
    return ODESolution(particular, homogeneous is not None, homogeneous)


def level1_problem(field: FieldPair) -> RationalODEProblem:
    """
    The ODE f ϱ(x) + f' (xϱ(x) - ϖ(x)) = 1 with ϖ(x) = ϖ(x, 1) and
    ϱ(x) = ϱ(x, 1).

    Raises:
        LevelZeroError: xϱ - yϖ vanishes identically.
    """
    if is_level0(field):
        raise LevelZeroError(f"{field} has level 0")
    x, y = RationalFunction.x(), RationalFunction.y()
    a = dehomogenize(x * field.second - y * field.first, 3)
    b = dehomogenize(field.second, 2)
    return RationalODEProblem(a, b, UnivariateRationalFunction(1))


def level1_check(field: FieldPair, settings: Settings = DEFAULT_SETTINGS) -> bool:
    """
    True iff every solution of f ϱ(x) + f' (xϱ(x) - ϖ(x)) = 1 is rational,
    which characterises level 1 flows with rational vector fields.

    Raises:
        LevelZeroError: xϱ - yϖ vanishes identically.
        UndecidedError: a search limit was hit.
    """
    solution = rational_ode_solve(level1_problem(field), settings=settings)
    logger.info(f"level 1 check of {field}: {solution}")
    return solution.all_rational
