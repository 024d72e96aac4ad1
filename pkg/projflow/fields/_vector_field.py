from fractions import Fraction
from typing import Iterator
from typing import Tuple
from typing import Union

from typing_extensions import Self

from projflow._errors import NotHomogeneousError
from projflow.algebra import parse_rational_function
from projflow.algebra import RationalFunction

Component = Union[RationalFunction, int, Fraction]


def _as_function(value: Component) -> RationalFunction:
    if isinstance(value, RationalFunction):
        return value
    return RationalFunction(value)


class FieldPair:
    """
    An ordered pair of rational functions, written ``first • second``.

    Lie brackets come back as a ``FieldPair`` because their components are
    3-homogeneous; ``VectorField`` is the 2-homogeneous specialisation.
    """

    def __init__(self, first: Component, second: Component):
        self._first = _as_function(first)
        self._second = _as_function(second)

    @property
    def first(self) -> RationalFunction:
        return self._first

    @property
    def second(self) -> RationalFunction:
        return self._second

    @property
    def is_zero(self) -> bool:
        return self._first.is_zero and self._second.is_zero

    def __iter__(self) -> Iterator[RationalFunction]:
        return iter((self._first, self._second))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldPair):
            return NotImplemented
        return self._first == other._first and self._second == other._second

    def __hash__(self):
        return hash((self._first, self._second))

    def _combine(self, other: "FieldPair", first, second) -> "FieldPair":
        if isinstance(self, VectorField) and isinstance(other, VectorField):
            return VectorField(first, second)
        return FieldPair(first, second)

    def __add__(self, other: "FieldPair") -> "FieldPair":
        if not isinstance(other, FieldPair):
            return NotImplemented
        return self._combine(
            other, self._first + other._first, self._second + other._second
        )

    def __sub__(self, other: "FieldPair") -> "FieldPair":
        if not isinstance(other, FieldPair):
            return NotImplemented
        return self._combine(
            other, self._first - other._first, self._second - other._second
        )

    def __neg__(self) -> Self:
        return type(self)(-self._first, -self._second)

    def __mul__(self, scalar: Union[int, Fraction]) -> Self:
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return type(self)(scalar * self._first, scalar * self._second)

    __rmul__ = __mul__

    def evaluate_numeric(self, x: complex, y: complex) -> Tuple[complex, complex]:
        return (
            self._first.evaluate_numeric(x, y),
            self._second.evaluate_numeric(x, y),
        )

    def __str__(self) -> str:
        return f"({self._first}) • ({self._second})"

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self._first)!r}, {str(self._second)!r})"


class VectorField(FieldPair):
    """
    The vector field ``ϖ•ϱ`` of a projective flow: a pair of 2-homogeneous
    rational functions. Homogeneity is re-verified on construction.
    """

    def __init__(self, first: Component, second: Component):
        super().__init__(first, second)
        for name, component in (("first", self._first), ("second", self._second)):
            if not component.has_degree(2):
                raise NotHomogeneousError(
                    f"{name} component {component} is not 2-homogeneous"
                )

    @classmethod
    def parse(cls, first: str, second: str) -> "VectorField":
        return cls(parse_rational_function(first), parse_rational_function(second))

    @property
    def cross_term(self) -> RationalFunction:
        """
        x*ϱ - y*ϖ; vanishes exactly for level 0 flows.
        """
        x, y = RationalFunction.x(), RationalFunction.y()
        return x * self._second - y * self._first
