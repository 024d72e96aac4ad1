"""
Branch-consistent evaluation of algebraic functions by continuation in the
flow parameter, starting from the boundary value at parameter 0.
"""

import logging
from typing import Callable
from typing import Dict
from typing import Mapping
from typing import Optional
from typing import Sequence

import numpy as np
from numpy.polynomial import polynomial as P

from projflow._errors import ContinuationError
from projflow._errors import RootCollisionError
from projflow._errors import StepUnderflowError
from projflow._settings import DEFAULT_SETTINGS
from projflow._settings import Settings
from projflow.numeric._expr import Constant
from projflow.numeric._expr import Expr
from projflow.numeric._expr import from_polynomial
from projflow.numeric._expr import Resolver
from projflow.numeric._expr import Root
from projflow.numeric._expr import Variable
from projflow.partner import ImplicitEquation

logger = logging.getLogger(__name__)

# a root may move at most this fraction of the gap to its nearest sibling per step
_JUMP_FRACTION = 0.25


class _Anchored(Resolver):
    def __init__(self, env: Mapping[str, complex]):
        self.env = env
        self.chosen: Dict[int, complex] = {}

    def root(self, node: Root, radicand: complex) -> complex:
        value = node.anchored(radicand)
        self.chosen[node.identifier] = value
        return value


class _Continued(Resolver):
    def __init__(self, env: Mapping[str, complex], previous: Dict[int, complex]):
        self.env = env
        self.previous = previous
        self.chosen: Dict[int, complex] = {}
        self.jumped = False

    def root(self, node: Root, radicand: complex) -> complex:
        candidates = node.candidates(radicand)
        last = self.previous[node.identifier]
        distances = np.abs(candidates - last)
        best = int(np.argmin(distances))
        gap = abs(candidates[0]) * 2 * np.sin(np.pi / node.order)
        if distances[best] > _JUMP_FRACTION * gap:
            self.jumped = True
        value = complex(candidates[best])
        self.chosen[node.identifier] = value
        return value


def _continue(
    advance: Callable[[float, object], Optional[object]],
    start: object,
    settings: Settings,
) -> object:
    """
    Walks the fraction τ of the target parameter from 0 to 1. ``advance(τ,
    state)`` returns the new state or None to request a smaller step.
    """
    continuation = settings.continuation
    base_step = 1 / continuation.steps
    tau, step, state = 0.0, base_step, start
    while tau < 1:
        target = min(1.0, tau + step)
        advanced = advance(target, state)
        if advanced is None:
            step /= 2
            if step < continuation.min_step:
                raise StepUnderflowError(
                    f"continuation step fell below {continuation.min_step} "
                    f"at fraction {tau}"
                )
            logger.debug(f"halving continuation step to {step} at {tau=}")
            continue
        tau, state = target, advanced
        step = min(2 * step, base_step)
    return state


def branch_eval(
    expression: Expr,
    point: Mapping[str, complex],
    z: float,
    parameter: str = "z",
    settings: Settings = DEFAULT_SETTINGS,
) -> complex:
    """
    Evaluates ``expression`` at ``point`` with ``parameter = z``, every
    radical continued from its anchored value at parameter 0.

    Raises:
        SingularPointError: the path meets an exact singularity.
        StepUnderflowError: a radical cannot be followed without jumping
            branches.
    """
    anchored = _Anchored({**point, parameter: 0})
    value = expression.evaluate(anchored)
    if z == 0 or not anchored.chosen:
        return expression.evaluate(_Anchored({**point, parameter: z}))

    def advance(tau, state):
        resolver = _Continued({**point, parameter: tau * z}, state[0])
        value = expression.evaluate(resolver)
        if resolver.jumped:
            return None
        return resolver.chosen, value

    _, value = _continue(advance, (anchored.chosen, value), settings)
    return value


def accept_real(value: complex, settings: Settings = DEFAULT_SETTINGS) -> Optional[float]:
    """
    The real part of ``value`` when its imaginary part is negligible.
    """
    if abs(value.imag) < settings.tolerances.real_acceptance * (1 + abs(value.real)):
        return value.real
    return None


class ImplicitBranch:
    """
    The root t of sum(c_k t^k) = 0 that equals ``base`` at parameter 0.

    Args:
        coefficients: expressions c_k, lowest power first.
        base: the boundary value of t, x by default.
        parameter: name of the continuation variable.
    """

    def __init__(
        self,
        coefficients: Sequence[Expr],
        base: Optional[Expr] = None,
        parameter: str = "z",
    ):
        if not coefficients:
            raise ContinuationError("defining polynomial is empty")
        self.coefficients = tuple(coefficients)
        self.base = Variable("x") if base is None else base
        self.parameter = parameter

    @classmethod
    def from_equation(cls, equation: ImplicitEquation) -> "ImplicitBranch":
        """
        The branch of a partner relation; its parameter is renamed to z.
        """
        poly = equation.scaled
        t = poly.ring.gens[0]
        degree = equation.degree
        coefficients = []
        for k in range(degree + 1):
            part = poly.ring.from_dict(
                {
                    (0,) + monom[1:]: coeff
                    for monom, coeff in poly.terms()
                    if monom[0] == k
                }
            )
            coefficients.append(from_polynomial(part.drop(t)) if part else Constant(0))
        return cls(coefficients, parameter="z")

    def values(self, env: Mapping[str, complex]) -> np.ndarray:
        resolver = _Anchored(env)
        return np.array(
            [coefficient.evaluate(resolver) for coefficient in self.coefficients],
            dtype=complex,
        )


def _relative_residual(coefficients: np.ndarray, t: complex) -> float:
    scale = np.sum(np.abs(coefficients) * np.abs(t) ** np.arange(len(coefficients)))
    if scale == 0:
        return 0.0
    return abs(P.polyval(t, coefficients)) / scale


def _newton(
    coefficients: np.ndarray, t: complex, settings: Settings
) -> Optional[complex]:
    continuation = settings.continuation
    derivative = P.polyder(coefficients)
    for _ in range(continuation.newton_iterations):
        if _relative_residual(coefficients, t) < continuation.newton_tolerance:
            return t
        slope = P.polyval(t, derivative)
        if slope == 0:
            return None
        t = t - P.polyval(t, coefficients) / slope
    if _relative_residual(coefficients, t) < continuation.newton_tolerance:
        return t
    return None


def implicit_eval(
    branch: ImplicitBranch,
    point: Mapping[str, complex],
    z: float,
    settings: Settings = DEFAULT_SETTINGS,
) -> complex:
    """
    Follows the root of ``branch`` from its base value at parameter 0 to
    parameter ``z``. Each step takes the root of the defining polynomial
    nearest to the previous value, refused when another root is nearly as
    close, and polishes it by Newton's method.

    Raises:
        ContinuationError: the base value is not a root at parameter 0.
        StepUnderflowError: roots collide along the path.
    """
    env = {**point, branch.parameter: 0}
    start = branch.base.evaluate(_Anchored(env))
    start = _newton(branch.values(env), start, settings)
    if start is None:
        raise ContinuationError(
            f"base value is not a root of the defining polynomial at {point=}"
        )
    if z == 0:
        return start

    def advance(tau, t):
        coefficients = branch.values({**point, branch.parameter: tau * z})
        roots = P.polyroots(coefficients) if len(np.trim_zeros(coefficients, "b")) > 1 else []
        if len(roots) == 0:
            raise RootCollisionError(f"defining polynomial degenerates at {tau=}")
        distances = np.sort(np.abs(roots - t))
        if len(distances) > 1 and distances[0] > 0.5 * distances[1]:
            return None
        nearest = roots[int(np.argmin(np.abs(roots - t)))]
        return _newton(coefficients, complex(nearest), settings)

    return _continue(advance, start, settings)
