import logging
from typing import Tuple

import numpy as np
from scipy.integrate import solve_ivp

from projflow._errors import SingularPointError
from projflow._errors import StepUnderflowError
from projflow._settings import DEFAULT_SETTINGS
from projflow._settings import Settings
from projflow.fields import FieldPair

logger = logging.getLogger(__name__)

# trajectories stop once a field denominator gets this small
_SINGULAR_GUARD = 1e-10


def flow_integrate(
    field: FieldPair,
    point: Tuple[float, float],
    z: float,
    settings: Settings = DEFAULT_SETTINGS,
) -> Tuple[float, float]:
    """
    φ^z(point) for the flow of ``field``, integrating dX/dz = F(X) with an
    adaptive order 8 Runge-Kutta scheme.

    Raises:
        SingularPointError: the trajectory approaches a pole of the field.
        StepUnderflowError: the integrator could not reach ``z``.
    """
    if z == 0:
        return point
    first, second = field
    tolerance = settings.sampling.ode_tolerance

    def rhs(_, state):
        x, y = state
        return [first.evaluate_numeric(x, y).real, second.evaluate_numeric(x, y).real]

    def near_pole(_, state):
        x, y = state
        return (
            min(abs(first.denominator_at(x, y)), abs(second.denominator_at(x, y)))
            - _SINGULAR_GUARD
        )

    near_pole.terminal = True
    solution = solve_ivp(
        rhs,
        (0.0, z),
        np.array(point, dtype=float),
        method="DOP853",
        rtol=tolerance,
        atol=tolerance,
        events=near_pole,
    )
    if solution.status == 1:
        raise SingularPointError(
            f"trajectory of {point=} reaches a pole of {field} before {z=}"
        )
    if not solution.success:
        raise StepUnderflowError(f"integration of {field} failed: {solution.message}")
    return float(solution.y[0, -1]), float(solution.y[1, -1])
