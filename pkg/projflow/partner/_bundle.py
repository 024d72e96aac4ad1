import logging
from fractions import Fraction
from typing import Any
from typing import Dict
from typing import Union

from projflow._errors import SingularPointError
from projflow.algebra import RationalFunction
from projflow.fields import VectorField
from projflow.partner._implicit import a_equation_polynomial
from projflow.partner._implicit import ImplicitEquation
from projflow.partner._implicit import u_equation_polynomial
from projflow.partner._partner_fields import partner_fields_from_V

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]


class CombinedOrbit:
    """
    The orbit template Ŵ(z, w) = P/(zR + wS) of the field zF + wG.
    """

    def __init__(
        self,
        numer: RationalFunction,
        first: RationalFunction,
        second: RationalFunction,
    ):
        self.numer = numer
        self.first = first
        self.second = second

    def at(self, z: Scalar, w: Scalar) -> RationalFunction:
        """
        Raises:
            ZeroDivisionError: zR + wS vanishes identically.
        """
        return self.numer / (z * self.first + w * self.second)

    def evaluate_numeric(self, x: complex, y: complex, z: float, w: float) -> complex:
        """
        Raises:
            SingularPointError: a component or zR + wS vanishes at the point.
        """
        denom = z * self.first.evaluate_numeric(x, y) + w * self.second.evaluate_numeric(x, y)
        if denom == 0:
            raise SingularPointError(f"{self} is singular at {x=}, {y=}, {z=}, {w=}")
        return self.numer.evaluate_numeric(x, y) / denom

    def reparametrized(self, m: Scalar, k: Scalar) -> "CombinedOrbit":
        """
        The template for the basis (F, mF + kG): Ŵ'(z, w) = Ŵ(z + mw, kw).
        """
        return CombinedOrbit(self.numer, self.first, m * self.first + k * self.second)

    def __str__(self) -> str:
        return f"({self.numer})/(z*({self.first}) + w*({self.second}))"

    def __repr__(self) -> str:
        return f"CombinedOrbit({str(self)!r})"


class PartnerBundle:
    """
    Everything the construction produces from a 1-homogeneous V: both
    fields, the implicit relations of the flow coordinates a and u, and the
    combined orbit template Vy/(zV + wy).
    """

    def __init__(
        self,
        orbit: RationalFunction,
        phi_field: VectorField,
        psi_field: VectorField,
        a_equation: ImplicitEquation,
        u_equation: ImplicitEquation,
        combined_orbit: CombinedOrbit,
    ):
        self.orbit = orbit
        self.phi_field = phi_field
        self.psi_field = psi_field
        self.a_equation = a_equation
        self.u_equation = u_equation
        self.combined_orbit = combined_orbit

    @property
    def V(self) -> RationalFunction:
        return self.orbit

    @property
    def independent(self) -> bool:
        """
        True when the two fields are independent at a generic point.
        """
        phi, psi = self.phi_field, self.psi_field
        return not (phi.first * psi.second - phi.second * psi.first).is_zero

    def to_dict(self) -> Dict[str, Any]:
        return {
            "V": str(self.orbit),
            "phi_field": [str(component) for component in self.phi_field],
            "psi_field": [str(component) for component in self.psi_field],
            "a_equation": str(self.a_equation),
            "u_equation": str(self.u_equation),
            "combined_orbit": str(self.combined_orbit),
        }

    def __repr__(self) -> str:
        return f"PartnerBundle(V={self.orbit})"


def partner_bundle(orbit: RationalFunction) -> PartnerBundle:
    """
    Builds the partner pair of V with the relations

        V(a, y/(y + 1)) = V(x, y)        V(u, y) = V/(1 - V)

    stored in their scaled forms, y + 1 becoming wy + 1 and 1 - V becoming
    1 - zV.

    Raises:
        NotHomogeneousError: V is not 1-homogeneous.
        DegenerateOrbitError: V_x vanishes, i.e. V = c*y.
    """
    phi, psi = partner_fields_from_V(orbit)
    y = RationalFunction.y()
    bundle = PartnerBundle(
        orbit,
        phi,
        psi,
        ImplicitEquation("a", "w", a_equation_polynomial(orbit)),
        ImplicitEquation("u", "z", u_equation_polynomial(orbit)),
        CombinedOrbit(orbit * y, orbit, y),
    )
    logger.debug(f"partner bundle of V={orbit}: {bundle.to_dict()}")
    return bundle
