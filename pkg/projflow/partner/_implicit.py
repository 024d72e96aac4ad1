from functools import cached_property
from typing import Dict
from typing import List
from typing import Tuple

import numpy as np
from sympy.polys.rings import PolyElement

from projflow.algebra import format_polynomial
from projflow.algebra import RationalFunction
from projflow.algebra._rings import TXY
from projflow.algebra._rings import TXYZ
from projflow.algebra._rings import TXYZ_T
from projflow.algebra._rings import TXYZ_Y
from projflow.algebra._rings import TXYZ_Z
from projflow.algebra._rings import XYZ


def _content(poly: PolyElement) -> PolyElement:
    groups: Dict[int, Dict[tuple, object]] = {}
    for (k, i, j, l), coeff in poly.terms():
        groups.setdefault(k, {})[(i, j, l)] = coeff
    content = XYZ.zero
    for terms in groups.values():
        content = content.gcd(XYZ.from_dict(terms))
    return content


def _primitive(poly: PolyElement) -> PolyElement:
    if not poly:
        return poly
    content = _content(poly)
    lifted = TXYZ.from_dict(
        {(0, i, j, l): coeff for (i, j, l), coeff in content.terms()}
    )
    poly = poly.exquo(lifted)
    return poly.quo_ground(poly.LC)


def substitute_scaled(
    poly: PolyElement, first: PolyElement, second: PolyElement
) -> PolyElement:
    """
    Evaluates a polynomial in x, y at (first, second), both in the ring of
    t, x, y, z.
    """
    result = TXYZ.zero
    powers_first: Dict[int, PolyElement] = {}
    powers_second: Dict[int, PolyElement] = {}
    for (i, j), coeff in poly.terms():
        if i not in powers_first:
            powers_first[i] = first**i
        if j not in powers_second:
            powers_second[j] = second**j
        result += powers_first[i] * powers_second[j] * coeff
    return result


def lift_xy(poly: PolyElement) -> PolyElement:
    return TXYZ.from_dict({(0, i, j, 0): coeff for (i, j), coeff in poly.terms()})


def a_equation_polynomial(orbit: RationalFunction) -> PolyElement:
    """
    V(t, y/(zy + 1)) = V(x, y) cleared of denominators, using
    N(t, y/(zy + 1)) = (zy + 1)^-deg N * N(t(zy + 1), y).
    """
    numer, denom = orbit.numer, orbit.denom
    scale = TXYZ_Z * TXYZ_Y + 1
    numer_degree = max(sum(monom) for monom in numer.monoms())
    denom_degree = max(sum(monom) for monom in denom.monoms())
    moved_numer = substitute_scaled(numer, TXYZ_T * scale, TXYZ_Y)
    moved_denom = substitute_scaled(denom, TXYZ_T * scale, TXYZ_Y)
    return (
        moved_numer * scale**denom_degree * lift_xy(denom)
        - moved_denom * scale**numer_degree * lift_xy(numer)
    )


def u_equation_polynomial(orbit: RationalFunction) -> PolyElement:
    """
    V(t, y) = V/(1 - zV) cleared of denominators.
    """
    numer, denom = lift_xy(orbit.numer), lift_xy(orbit.denom)
    at_t = substitute_scaled(orbit.numer, TXYZ_T, TXYZ_Y)
    denom_at_t = substitute_scaled(orbit.denom, TXYZ_T, TXYZ_Y)
    return at_t * (denom - TXYZ_Z * numer) - denom_at_t * numer


class ImplicitEquation:
    """
    A polynomial relation E(t, x, y, z) = 0 defining the scaled flow
    coordinate t = ``unknown`` as an algebraic function, z being the flow
    parameter. The relation is primitive in t; setting z = 1 gives the
    unscaled relation.
    """

    def __init__(self, unknown: str, parameter: str, scaled: PolyElement):
        self.unknown = unknown
        self.parameter = parameter
        self.scaled = _primitive(scaled)

    @cached_property
    def unscaled(self) -> PolyElement:
        evaluated = self.scaled.evaluate(TXYZ_Z, 1)
        return TXY.from_dict(dict(evaluated))

    @property
    def degree(self) -> int:
        return self.scaled.degree(TXYZ_T)

    @cached_property
    def _numeric_terms(self) -> List[List[Tuple[Tuple[int, int, int], float]]]:
        terms: List[List[Tuple[Tuple[int, int, int], float]]] = [
            [] for _ in range(self.degree + 1)
        ]
        for (k, i, j, l), coeff in self.scaled.terms():
            terms[k].append(((i, j, l), float(coeff)))
        return terms

    def coefficients(self, x: complex, y: complex, z: complex) -> np.ndarray:
        """
        Coefficients in t at a point, lowest power first.
        """
        values = np.zeros(self.degree + 1, dtype=complex)
        for k, terms in enumerate(self._numeric_terms):
            values[k] = sum(
                coeff * x**i * y**j * z**l for (i, j, l), coeff in terms
            )
        return values

    def residual(self, t: complex, x: complex, y: complex, z: complex) -> complex:
        return complex(np.polynomial.polynomial.polyval(t, self.coefficients(x, y, z)))

    def is_root_at_origin(self) -> bool:
        """
        True when t = x solves the relation at z = 0.
        """
        base = self.scaled.evaluate(TXYZ_Z, 0)
        x = base.ring.gens[1]
        return not base.compose(base.ring.gens[0], x)

    def __str__(self) -> str:
        return format_polynomial(self.unscaled).replace("t", self.unknown)

    def __repr__(self) -> str:
        return f"ImplicitEquation({self.unknown!r}, {format_polynomial(self.scaled)!r})"
