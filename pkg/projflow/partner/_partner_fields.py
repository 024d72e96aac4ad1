from typing import Tuple

from projflow._errors import DegenerateOrbitError
from projflow.algebra import RationalFunction
from projflow.algebra import require_degree
from projflow.fields import VectorField


def _derivative(orbit: RationalFunction) -> RationalFunction:
    require_degree(orbit, 1, "V")
    derivative = orbit.diff("x")
    if derivative.is_zero:
        raise DegenerateOrbitError(f"V={orbit} has V_x = 0")
    return derivative


def phi_field(orbit: RationalFunction) -> VectorField:
    """
    (V²/V_x) • 0, the horizontal field whose flow keeps y fixed.
    """
    return VectorField(orbit**2 / _derivative(orbit), 0)


def psi_field(orbit: RationalFunction) -> VectorField:
    """
    (yV/V_x - xy) • (-y²), the field whose flow preserves V.
    """
    x, y = RationalFunction.x(), RationalFunction.y()
    return VectorField(y * orbit / _derivative(orbit) - x * y, -(y**2))


def partner_fields_from_V(orbit: RationalFunction) -> Tuple[VectorField, VectorField]:
    """
    The commuting pair (V²/V_x) • 0 and (yV/V_x - xy) • (-y²).

    Raises:
        NotHomogeneousError: V is not 1-homogeneous.
        DegenerateOrbitError: V_x vanishes, i.e. V = c*y.
    """
    return phi_field(orbit), psi_field(orbit)
