from typing import Tuple

from sympy.polys.rings import PolyElement

from projflow._errors import BoundaryConditionError
from projflow.algebra import parse_rational_function
from projflow.algebra import RationalFunction
from projflow.algebra._rings import homogeneous_part
from projflow.algebra._rings import min_degree
from projflow.algebra._rings import XYZ
from projflow.fields._vector_field import VectorField


def _first_order(
    component: RationalFunction, target: RationalFunction, name: str
) -> RationalFunction:
    numer, denom = component.numer, component.denom
    low_numer, low_denom = min_degree(numer), min_degree(denom)
    if not numer or low_numer - low_denom != 1:
        raise BoundaryConditionError(
            f"{name}={component} does not satisfy {name}(xz, yz)/z -> {target}"
        )
    leading_numer = RationalFunction(homogeneous_part(numer, low_numer))
    leading_denom = RationalFunction(homogeneous_part(denom, low_denom))
    if leading_numer != target * leading_denom:
        raise BoundaryConditionError(
            f"{name}={component} does not satisfy {name}(xz, yz)/z -> {target}"
        )
    next_numer = RationalFunction(homogeneous_part(numer, low_numer + 1))
    next_denom = RationalFunction(homogeneous_part(denom, low_denom + 1))
    return (next_numer - target * next_denom) / leading_denom


def _scaled(poly: PolyElement, lowest: int) -> PolyElement:
    return XYZ.from_dict(
        {(i, j, i + j - lowest): coeff for (i, j), coeff in poly.terms()}
    )


class RationalFlow:
    """
    A projective flow ``u•v`` given by rational functions.

    The boundary condition u(xz, yz)/z -> x, v(xz, yz)/z -> y as z -> 0 is
    checked exactly on construction.

    Raises:
        BoundaryConditionError: either component violates the condition.
    """

    def __init__(self, u: RationalFunction, v: RationalFunction):
        self.u = u
        self.v = v
        self._field = VectorField(
            _first_order(u, RationalFunction.x(), "u"),
            _first_order(v, RationalFunction.y(), "v"),
        )

    @classmethod
    def identity(cls) -> "RationalFlow":
        return cls(RationalFunction.x(), RationalFunction.y())

    @classmethod
    def parse(cls, u: str, v: str) -> "RationalFlow":
        return cls(parse_rational_function(u), parse_rational_function(v))

    @property
    def field(self) -> VectorField:
        return self._field

    def scaled_polynomials(
        self,
    ) -> Tuple[Tuple[PolyElement, PolyElement], Tuple[PolyElement, PolyElement]]:
        """
        Numerators and denominators of u(xz, yz)/z and v(xz, yz)/z as
        polynomials in x, y, z, regular at z = 0.
        """
        pairs = []
        for component in (self.u, self.v):
            numer, denom = component.numer, component.denom
            pairs.append(
                (
                    _scaled(numer, min_degree(numer)),
                    _scaled(denom, min_degree(denom)),
                )
            )
        return pairs[0], pairs[1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalFlow):
            return NotImplemented
        return self.u == other.u and self.v == other.v

    def __hash__(self):
        return hash((self.u, self.v))

    def __repr__(self) -> str:
        return f"RationalFlow({str(self.u)!r}, {str(self.v)!r})"


def field_of_rational_flow(flow: RationalFlow) -> VectorField:
    """
    The vector field d/dz [u(xz, yz)/z] at z = 0, extracted exactly from the
    two lowest homogeneous parts of numerator and denominator.
    """
    return flow.field
