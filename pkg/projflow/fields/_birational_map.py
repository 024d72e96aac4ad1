from abc import ABC
from abc import abstractmethod
from fractions import Fraction
from typing import List
from typing import Sequence
from typing import Tuple
from typing import Union

from sympy.polys.rings import PolyElement

from projflow._errors import PreconditionError
from projflow._errors import SingularPointError
from projflow.algebra import RationalFunction
from projflow.algebra import require_degree
from projflow.fields._conjugation import conjugate_field
from projflow.fields._vector_field import VectorField

Number = Union[int, Fraction, float, complex]
Point = Tuple[Number, Number]


def _is_exact(point: Point) -> bool:
    return all(isinstance(value, (int, Fraction)) for value in point)


def _evaluate(f: RationalFunction, point: Point) -> Number:
    if _is_exact(point):
        return f(*point)
    return f.evaluate_numeric(*point)


class BirationalMap(ABC):
    """
    A 1-homogeneous birational map of the plane.

    ``conjugate(F)`` is the vector field of m⁻¹ ∘ φ ∘ m where φ is the flow
    of ``F``. Points with int or Fraction coordinates are mapped exactly,
    anything else in floating point.
    """

    @abstractmethod
    def apply(self, point: Point) -> Point:
        """
        Raises:
            SingularPointError: the map is undefined at ``point``.
        """

    @abstractmethod
    def inverse(self) -> "BirationalMap":
        pass

    @abstractmethod
    def conjugate(self, field: VectorField) -> VectorField:
        pass

    def __call__(self, point: Point) -> Point:
        return self.apply(point)


class LinearMap(BirationalMap):
    """
    An invertible linear map given by a 2×2 matrix of exact scalars.
    """

    def __init__(self, matrix: Sequence[Sequence[Union[int, Fraction]]]):
        rows = tuple(tuple(Fraction(entry) for entry in row) for row in matrix)
        if len(rows) != 2 or any(len(row) != 2 for row in rows):
            raise PreconditionError(f"{matrix=} is not 2x2")
        (a, b), (c, d) = rows
        if a * d - b * c == 0:
            raise PreconditionError(f"{matrix=} is singular")
        self.matrix = rows

    @classmethod
    def identity(cls) -> "LinearMap":
        return cls(((1, 0), (0, 1)))

    @classmethod
    def swap(cls) -> "LinearMap":
        return cls(((0, 1), (1, 0)))

    @property
    def determinant(self) -> Fraction:
        (a, b), (c, d) = self.matrix
        return a * d - b * c

    def apply(self, point: Point) -> Point:
        (a, b), (c, d) = self.matrix
        x, y = point
        if not _is_exact(point):
            a, b, c, d = float(a), float(b), float(c), float(d)
        return a * x + b * y, c * x + d * y

    def inverse(self) -> "LinearMap":
        (a, b), (c, d) = self.matrix
        det = self.determinant
        return LinearMap(((d / det, -b / det), (-c / det, a / det)))

    def conjugate(self, field: VectorField) -> VectorField:
        (a, b), (c, d) = self.matrix
        x, y = RationalFunction.x(), RationalFunction.y()
        sx, sy = a * x + b * y, c * x + d * y
        moved = [component.substitute(sx, sy) for component in field]
        (ia, ib), (ic, id_) = self.inverse().matrix
        return VectorField(
            ia * moved[0] + ib * moved[1], ic * moved[0] + id_ * moved[1]
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearMap):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self) -> str:
        rows = ", ".join(
            "(" + ", ".join(str(entry) for entry in row) + ")"
            for row in self.matrix
        )
        return f"LinearMap(({rows}))"


class RadialMap(BirationalMap):
    """
    The map ℓ(x, y) = (x P/Q, y P/Q) for homogeneous P, Q of equal degree.

    P and Q are stored coprime with Q normalised, so ``RadialMap(P, Q)`` and
    ``RadialMap(k P, k Q)`` compare equal; the inverse is ``RadialMap(Q, P)``.
    """

    def __init__(
        self,
        numer: Union[PolyElement, RationalFunction, int],
        denom: Union[PolyElement, RationalFunction, int] = 1,
    ):
        ratio = _as_function(numer) / _as_function(denom)
        if ratio.is_zero:
            raise PreconditionError("radial map with P=0 is not birational")
        require_degree(ratio, 0, "P/Q")
        self.ratio = ratio

    @classmethod
    def from_ratio(cls, ratio: RationalFunction) -> "RadialMap":
        return cls(ratio)

    @property
    def numer(self) -> PolyElement:
        return self.ratio.numer

    @property
    def denom(self) -> PolyElement:
        return self.ratio.denom

    def apply(self, point: Point) -> Point:
        if self.ratio.denominator_at(*point) == 0:
            raise SingularPointError(f"Q={self.denom} vanishes at {point=}")
        scale = _evaluate(self.ratio, point)
        x, y = point
        return x * scale, y * scale

    def inverse(self) -> "RadialMap":
        return RadialMap(self.denom, self.numer)

    def conjugate(self, field: VectorField) -> VectorField:
        return conjugate_field(self.ratio, field)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RadialMap):
            return NotImplemented
        return self.ratio == other.ratio

    def __hash__(self):
        return hash(self.ratio)

    def __repr__(self) -> str:
        return f"RadialMap({str(self.ratio)!r})"


def _as_function(value) -> RationalFunction:
    if isinstance(value, RationalFunction):
        return value
    return RationalFunction(value)


class CompositeMap(BirationalMap):
    """
    The composition m1 ∘ m2 ∘ ... ∘ mk; ``apply`` runs mk first.
    """

    def __init__(self, parts: Sequence[BirationalMap]):
        flat: List[BirationalMap] = []
        for part in parts:
            if isinstance(part, CompositeMap):
                flat.extend(part.parts)
            else:
                flat.append(part)
        self.parts = tuple(flat)

    def apply(self, point: Point) -> Point:
        for part in reversed(self.parts):
            point = part.apply(point)
        return point

    def inverse(self) -> "CompositeMap":
        return CompositeMap([part.inverse() for part in reversed(self.parts)])

    def conjugate(self, field: VectorField) -> VectorField:
        for part in self.parts:
            field = part.conjugate(field)
        return field

    def __eq__(self, other) -> bool:
        if not isinstance(other, CompositeMap):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"CompositeMap({list(self.parts)!r})"


def birmap_apply(m: BirationalMap, point: Point) -> Point:
    """
    Raises:
        SingularPointError: ``m`` is undefined at ``point``.
    """
    return m.apply(point)


def birmap_inverse(m: BirationalMap) -> BirationalMap:
    return m.inverse()


def conjugate_by_map(m: BirationalMap, field: VectorField) -> VectorField:
    """
    Vector field of m⁻¹ ∘ φ ∘ m.
    """
    return m.conjugate(field)


def mirror_field(field: VectorField) -> VectorField:
    """
    Conjugation by the swap (x, y) -> (y, x): returns β(y, x) • α(y, x).
    """
    return LinearMap.swap().conjugate(field)
