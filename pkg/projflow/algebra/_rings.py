"""
Polynomial rings shared by the exact modules.

All coefficients live in ``QQ``; bivariate polynomials use graded
lexicographic order with x before y.
"""

from fractions import Fraction
from typing import Final
from typing import Union

from sympy.polys.domains import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement
from sympy.polys.rings import ring

Scalar = Fraction
ScalarLike = Union[int, Fraction]

XY, X, Y = ring("x,y", QQ, grlex)
X1, X1_GEN = ring("x", QQ, grlex)
TX, TX_T, TX_X = ring("t,x", QQ, grlex)
XT, XT_X, XT_T = ring("x,t", QQ, grlex)
T1, T1_GEN = ring("t", QQ, grlex)
TXY, TXY_T, TXY_X, TXY_Y = ring("t,x,y", QQ, grlex)
XYZ, XYZ_X, XYZ_Y, XYZ_Z = ring("x,y,z", QQ, grlex)
TXYZ, TXYZ_T, TXYZ_X, TXYZ_Y, TXYZ_Z = ring("t,x,y,z", QQ, grlex)

ZERO: Final[Fraction] = Fraction(0)
ONE: Final[Fraction] = Fraction(1)


def to_domain(value):
    """
    Converts an exact Python scalar into a ``QQ`` element; ``QQ`` elements
    pass through unchanged.
    """
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    return QQ.convert(value)


def to_scalar(value) -> Fraction:
    """
    Converts a ``QQ`` element (or any exact rational) into a ``Fraction``.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    return Fraction(int(QQ.numer(value)), int(QQ.denom(value)))


def convert(poly: PolyElement, target) -> PolyElement:
    """
    Moves ``poly`` into ``target`` when both rings name the same generators
    in the same positions.
    """
    if poly.ring == target:
        return poly
    return target.from_dict(dict(poly))


def total_degree(poly: PolyElement) -> int:
    """
    Total degree of a nonzero polynomial; -1 for zero.
    """
    if not poly:
        return -1
    return max(sum(monom) for monom in poly.monoms())


def min_degree(poly: PolyElement) -> int:
    """
    Lowest total degree present in a nonzero polynomial; -1 for zero.
    """
    if not poly:
        return -1
    return min(sum(monom) for monom in poly.monoms())


def homogeneous_part(poly: PolyElement, degree: int) -> PolyElement:
    """
    The terms of ``poly`` of total degree ``degree``.
    """
    return poly.ring.from_dict(
        {monom: coeff for monom, coeff in poly.items() if sum(monom) == degree}
    )
