from fractions import Fraction
from functools import cached_property
from typing import ClassVar
from typing import List
from typing import Optional
from typing import Tuple
from typing import Union

from sympy.polys.rings import PolyElement
from sympy.polys.rings import PolyRing
from typing_extensions import Self

from projflow._errors import SingularPointError
from projflow.algebra._formatting import format_fraction
from projflow.algebra._rings import convert
from projflow.algebra._rings import to_domain
from projflow.algebra._rings import to_scalar
from projflow.algebra._rings import X1
from projflow.algebra._rings import XY
from projflow.algebra._sentinels import _AnyDegreeType
from projflow.algebra._sentinels import _NotHomogeneousType
from projflow.algebra._sentinels import ANY_DEGREE
from projflow.algebra._sentinels import NOT_HOMOGENEOUS

Degree = Union[int, _NotHomogeneousType, _AnyDegreeType]


class _ReducedFraction:
    """
    A quotient of two polynomials over the rationals kept in canonical form.

    The numerator and denominator are coprime and the denominator has
    leading coefficient 1 under the ring's term order, so two instances are
    equal exactly when their representations are.
    """

    _ring: ClassVar[PolyRing]

    def __init__(self, numer=0, denom=1):
        numer = self._coerce(numer)
        denom = self._coerce(denom)
        if not denom:
            raise ZeroDivisionError(
                f"{type(self).__name__} with a zero denominator"
            )
        if not numer:
            denom = self._ring.one
        else:
            numer, denom = numer.cancel(denom)
            lead = denom.LC
            if lead != self._ring.domain.one:
                numer = numer.quo_ground(lead)
                denom = denom.quo_ground(lead)
        self._numer = numer
        self._denom = denom

    @classmethod
    def _coerce(cls, value) -> PolyElement:
        if isinstance(value, PolyElement):
            return convert(value, cls._ring)
        if isinstance(value, (int, Fraction)):
            return cls._ring.ground_new(to_domain(value))
        raise TypeError(f"cannot build {cls.__name__} from {value!r}")

    @classmethod
    def constant(cls, value: Union[int, Fraction]) -> Self:
        return cls(value)

    @property
    def numer(self) -> PolyElement:
        return self._numer

    @property
    def denom(self) -> PolyElement:
        return self._denom

    @property
    def is_zero(self) -> bool:
        return not self._numer

    @property
    def is_polynomial(self) -> bool:
        return self._denom == self._ring.one

    def constant_value(self) -> Optional[Fraction]:
        """
        Returns the value of a constant function, or None when it depends on
        a variable.
        """
        if self._numer.is_ground and self._denom.is_ground:
            if not self._numer:
                return Fraction(0)
            return to_scalar(self._numer.LC / self._denom.LC)
        return None

    def _wrap(self, other) -> Optional[Self]:
        if isinstance(other, type(self)):
            return other
        if isinstance(other, (int, Fraction)):
            return type(self)(other)
        return None

    def __bool__(self) -> bool:
        return not self.is_zero

    def __eq__(self, other) -> bool:
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        return self._numer == other._numer and self._denom == other._denom

    def __hash__(self):
        return hash(
            (
                type(self).__name__,
                frozenset(self._numer.items()),
                frozenset(self._denom.items()),
            )
        )

    def __neg__(self) -> Self:
        return type(self)(-self._numer, self._denom)

    def __add__(self, other) -> Self:
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        if self._denom == other._denom:
            return type(self)(self._numer + other._numer, self._denom)
        return type(self)(
            self._numer * other._denom + other._numer * self._denom,
            self._denom * other._denom,
        )

    __radd__ = __add__

    def __sub__(self, other) -> Self:
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Self:
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> Self:
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        return type(self)(
            self._numer * other._numer, self._denom * other._denom
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> Self:
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError(f"division of {self} by zero")
        return type(self)(
            self._numer * other._denom, self._denom * other._numer
        )

    def __rtruediv__(self, other) -> Self:
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int) -> Self:
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent >= 0:
            return type(self)(self._numer**exponent, self._denom**exponent)
        if self.is_zero:
            raise ZeroDivisionError(f"{self} raised to {exponent=}")
        return type(self)(self._denom**-exponent, self._numer**-exponent)

    def inverse(self) -> Self:
        return self**-1

    def _generator(self, variable: str) -> PolyElement:
        names = [str(symbol) for symbol in self._ring.symbols]
        if variable not in names:
            raise ValueError(f"{variable=} is not one of {names}")
        return self._ring.gens[names.index(variable)]

    def diff(self, variable: str = "x") -> Self:
        """
        Partial derivative with respect to ``variable`` by the quotient rule.
        """
        gen = self._generator(variable)
        numer, denom = self._numer, self._denom
        return type(self)(
            numer.diff(gen) * denom - numer * denom.diff(gen), denom**2
        )

    def __call__(self, *values: Union[int, Fraction]) -> Fraction:
        """
        Exact evaluation at a rational point.

        Raises:
            SingularPointError: the denominator vanishes at the point.
        """
        point = [to_domain(value) for value in values]
        denom = self._denom(*point)
        if not denom:
            raise SingularPointError(f"{self} is singular at {values=}")
        return to_scalar(self._numer(*point) / denom)

    @cached_property
    def _numeric_terms(
        self,
    ) -> Tuple[List[Tuple[tuple, float]], List[Tuple[tuple, float]]]:
        def terms(poly: PolyElement):
            return [
                (monom, float(coeff)) for monom, coeff in poly.terms()
            ]

        return terms(self._numer), terms(self._denom)

    def evaluate_numeric(self, *values: complex) -> complex:
        """
        Floating point evaluation; complex arguments are allowed.
        """
        numer_terms, denom_terms = self._numeric_terms
        numer = _evaluate_terms(numer_terms, values)
        denom = _evaluate_terms(denom_terms, values)
        if denom == 0:
            raise SingularPointError(f"{self} is singular at {values=}")
        return numer / denom

    def denominator_at(self, *values: complex) -> complex:
        return _evaluate_terms(self._numeric_terms[1], values)

    def __str__(self) -> str:
        return format_fraction(self._numer, self._denom)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"


def _evaluate_terms(terms, values) -> complex:
    total = 0
    for monom, coeff in terms:
        term = coeff
        for value, exponent in zip(values, monom):
            if exponent:
                term = term * value**exponent
        total = total + term
    return total


def _polynomial_degree(poly: PolyElement) -> Optional[int]:
    degrees = {sum(monom) for monom in poly.monoms()}
    if len(degrees) != 1:
        return None
    return degrees.pop()


class RationalFunction(_ReducedFraction):
    """
    Reduced rational function in x and y with verified homogeneity metadata.
    """

    _ring = XY

    @classmethod
    def x(cls) -> "RationalFunction":
        return cls(XY.gens[0])

    @classmethod
    def y(cls) -> "RationalFunction":
        return cls(XY.gens[1])

    @cached_property
    def homogeneity(self) -> Degree:
        """
        The degree d with f(xz, yz) = z^d f(x, y), ``ANY_DEGREE`` for zero,
        ``NOT_HOMOGENEOUS`` otherwise. Recomputed from the terms and confirmed
        by the Euler identity x*f_x + y*f_y = d*f.
        """
        if self.is_zero:
            return ANY_DEGREE
        numer_degree = _polynomial_degree(self._numer)
        denom_degree = _polynomial_degree(self._denom)
        if numer_degree is None or denom_degree is None:
            return NOT_HOMOGENEOUS
        degree = numer_degree - denom_degree
        x, y = RationalFunction.x(), RationalFunction.y()
        euler = x * self.diff("x") + y * self.diff("y") - degree * self
        if not euler.is_zero:
            return NOT_HOMOGENEOUS
        return degree

    def has_degree(self, degree: int) -> bool:
        """
        True when the function is homogeneous of ``degree`` (zero always is).
        """
        found = self.homogeneity
        return found is ANY_DEGREE or found == degree

    def substitute(
        self, sx: "RationalFunction", sy: "RationalFunction"
    ) -> "RationalFunction":
        """
        Exact composition f(sx, sy).

        Raises:
            ZeroDivisionError: the denominator vanishes identically after the
                substitution.
        """
        sx = self._wrap(sx)
        sy = self._wrap(sy)
        numer = _substitute_polynomial(self._numer, sx, sy)
        denom = _substitute_polynomial(self._denom, sx, sy)
        if denom.is_zero:
            raise ZeroDivisionError(
                f"denominator of {self} vanishes after substituting "
                f"x={sx}, y={sy}"
            )
        return numer / denom

    def scaled(self, factor: Union[int, Fraction]) -> "RationalFunction":
        """
        f(factor*x, factor*y).
        """
        return self.substitute(
            factor * RationalFunction.x(), factor * RationalFunction.y()
        )


def _substitute_polynomial(
    poly: PolyElement, sx: RationalFunction, sy: RationalFunction
) -> RationalFunction:
    powers_x = {}
    powers_y = {}
    total = RationalFunction(0)
    for (i, j), coeff in poly.terms():
        if i not in powers_x:
            powers_x[i] = sx**i
        if j not in powers_y:
            powers_y[j] = sy**j
        total = total + RationalFunction(poly.ring.ground_new(coeff)) * powers_x[i] * powers_y[j]
    return total


class UnivariateRationalFunction(_ReducedFraction):
    """
    Reduced rational function in the single variable x.
    """

    _ring = X1

    @classmethod
    def x(cls) -> "UnivariateRationalFunction":
        return cls(X1.gens[0])

    def split_polynomial_part(
        self,
    ) -> Tuple[PolyElement, "UnivariateRationalFunction"]:
        """
        Returns ``(q, r)`` with self = q + r, q a polynomial and r proper.
        """
        quotient, remainder = self._numer.div(self._denom)
        return quotient, UnivariateRationalFunction(remainder, self._denom)
