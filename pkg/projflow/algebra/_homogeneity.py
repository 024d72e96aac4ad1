from sympy.polys.rings import PolyElement

from projflow._errors import NotHomogeneousError
from projflow.algebra._rational_function import Degree
from projflow.algebra._rational_function import RationalFunction
from projflow.algebra._rational_function import UnivariateRationalFunction
from projflow.algebra._rings import convert
from projflow.algebra._rings import total_degree
from projflow.algebra._rings import X1
from projflow.algebra._rings import XY


def homogeneity_degree(f: RationalFunction) -> Degree:
    """
    Returns the homogeneity degree of ``f``.

    Returns:
        int: d with f(xz, yz) = z^d f(x, y) as an identity.
        NOT_HOMOGENEOUS: f mixes degrees.
        ANY_DEGREE: f is zero.
    """
    return f.homogeneity


def require_degree(f: RationalFunction, degree: int, name: str = "f") -> None:
    """
    Raises:
        NotHomogeneousError: ``f`` is not homogeneous of ``degree``.
    """
    if not f.has_degree(degree):
        raise NotHomogeneousError(
            f"{name}={f} is not {degree}-homogeneous "
            f"(found {f.homogeneity!r})"
        )


def dehomogenize(f: RationalFunction, degree: int) -> UnivariateRationalFunction:
    """
    Restricts a ``degree``-homogeneous function to the line y = 1.
    """
    require_degree(f, degree)
    y = XY.gens[1]
    numer = convert(f.numer.evaluate(y, 1), X1)
    denom = convert(f.denom.evaluate(y, 1), X1)
    return UnivariateRationalFunction(numer, denom)


def _homogenize(poly: PolyElement) -> PolyElement:
    degree = total_degree(poly)
    return XY.from_dict(
        {(i, degree - i): coeff for (i,), coeff in poly.terms()}
    )


def rehomogenize(g: UnivariateRationalFunction, degree: int) -> RationalFunction:
    """
    Returns y^degree * g(x/y) in reduced form; inverse of ``dehomogenize``.
    """
    if g.is_zero:
        return RationalFunction(0)
    numer = _homogenize(g.numer)
    denom = _homogenize(g.denom)
    shift = degree - total_degree(g.numer) + total_degree(g.denom)
    y = XY.gens[1]
    if shift >= 0:
        numer = numer * y**shift
    else:
        denom = denom * y**-shift
    return RationalFunction(numer, denom)
