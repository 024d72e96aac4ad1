"""
Expression trees for closed-form flows.

Radicals are ``Root`` nodes; which of the q values of ``base^(p/q)`` a node
takes is decided by continuation (see ``branch_eval``), starting from the
value prescribed by its ``RootAnchor``.
"""

from abc import ABC
from abc import abstractmethod
from enum import Enum
from fractions import Fraction
from itertools import count
from typing import FrozenSet
from typing import Iterator
from typing import Mapping
from typing import Union

import numpy as np
from sympy.polys.rings import PolyElement

from projflow._errors import SingularPointError
from projflow.algebra import RationalFunction

Number = Union[int, float, complex, Fraction]

_ROOT_IDS = count()


class RootAnchor(str, Enum):
    """
    The value a radical takes where continuation starts.
    """

    PRINCIPAL = "principal"
    REAL = "real"


class Resolver(ABC):
    """
    Chooses the value of every ``Root`` node during one evaluation.
    """

    env: Mapping[str, complex]

    @abstractmethod
    def root(self, node: "Root", radicand: complex) -> complex:
        """
        Returns the chosen q-th root of ``radicand`` for ``node``.
        """


class Expr(ABC):
    @abstractmethod
    def evaluate(self, resolver: Resolver) -> complex:
        pass

    @abstractmethod
    def children(self) -> tuple:
        pass

    def variables(self) -> FrozenSet[str]:
        names = set()
        for child in self.children():
            names |= child.variables()
        return frozenset(names)

    def radicals(self) -> Iterator["Root"]:
        for child in self.children():
            yield from child.radicals()

    def __add__(self, other) -> "Expr":
        return Sum(self, wrap(other))

    def __radd__(self, other) -> "Expr":
        return Sum(wrap(other), self)

    def __sub__(self, other) -> "Expr":
        return Difference(self, wrap(other))

    def __rsub__(self, other) -> "Expr":
        return Difference(wrap(other), self)

    def __mul__(self, other) -> "Expr":
        return Product(self, wrap(other))

    def __rmul__(self, other) -> "Expr":
        return Product(wrap(other), self)

    def __truediv__(self, other) -> "Expr":
        return Quotient(self, wrap(other))

    def __rtruediv__(self, other) -> "Expr":
        return Quotient(wrap(other), self)

    def __neg__(self) -> "Expr":
        return Product(Constant(-1), self)

    def __pow__(self, exponent: Union[int, Fraction]) -> "Expr":
        exponent = Fraction(exponent)
        if exponent.denominator == 1:
            return Power(self, exponent.numerator)
        return Root(self, exponent)


class Constant(Expr):
    def __init__(self, value: Number):
        self.value = complex(value)

    def evaluate(self, resolver: Resolver) -> complex:
        return self.value

    def children(self) -> tuple:
        return ()

    def __repr__(self) -> str:
        if self.value.imag == 0:
            return repr(self.value.real)
        return repr(self.value)


class Variable(Expr):
    def __init__(self, name: str):
        self.name = name

    def evaluate(self, resolver: Resolver) -> complex:
        try:
            return complex(resolver.env[self.name])
        except KeyError as error:
            raise KeyError(f"no value for variable {self.name!r}") from error

    def children(self) -> tuple:
        return ()

    def variables(self) -> FrozenSet[str]:
        return frozenset({self.name})

    def __repr__(self) -> str:
        return self.name


class _Binary(Expr):
    symbol: str

    def __init__(self, left: Expr, right: Expr):
        self.left = left
        self.right = right

    def children(self) -> tuple:
        return self.left, self.right

    def __repr__(self) -> str:
        return f"({self.left!r} {self.symbol} {self.right!r})"


class Sum(_Binary):
    symbol = "+"

    def evaluate(self, resolver: Resolver) -> complex:
        return self.left.evaluate(resolver) + self.right.evaluate(resolver)


class Difference(_Binary):
    symbol = "-"

    def evaluate(self, resolver: Resolver) -> complex:
        return self.left.evaluate(resolver) - self.right.evaluate(resolver)


class Product(_Binary):
    symbol = "*"

    def evaluate(self, resolver: Resolver) -> complex:
        return self.left.evaluate(resolver) * self.right.evaluate(resolver)


class Quotient(_Binary):
    symbol = "/"

    def evaluate(self, resolver: Resolver) -> complex:
        numer = self.left.evaluate(resolver)
        denom = self.right.evaluate(resolver)
        if denom == 0:
            raise SingularPointError(f"division by zero in {self!r}")
        return numer / denom


class Power(Expr):
    def __init__(self, base: Expr, exponent: int):
        self.base = base
        self.exponent = exponent

    def evaluate(self, resolver: Resolver) -> complex:
        value = self.base.evaluate(resolver)
        if value == 0 and self.exponent < 0:
            raise SingularPointError(f"zero raised to {self.exponent} in {self!r}")
        return value**self.exponent

    def children(self) -> tuple:
        return (self.base,)

    def __repr__(self) -> str:
        return f"({self.base!r})^{self.exponent}"


class Root(Expr):
    """
    ``base^(p/q)`` with q > 1; the q-th root of ``base`` is tracked and then
    raised to p.
    """

    def __init__(
        self,
        base: Expr,
        exponent: Fraction,
        anchor: RootAnchor = RootAnchor.PRINCIPAL,
    ):
        self.base = base
        self.exponent = Fraction(exponent)
        self.anchor = anchor
        self.identifier = next(_ROOT_IDS)

    @property
    def order(self) -> int:
        return self.exponent.denominator

    def candidates(self, radicand: complex) -> np.ndarray:
        principal = np.power(complex(radicand), 1 / self.order)
        unity = np.exp(2j * np.pi * np.arange(self.order) / self.order)
        return principal * unity

    def anchored(self, radicand: complex) -> complex:
        """
        The q-th root prescribed by the anchor.
        """
        if self.anchor is RootAnchor.REAL and self.order % 2 == 1:
            real = radicand.real
            return complex(np.sign(real) * abs(real) ** (1 / self.order))
        return complex(np.power(complex(radicand), 1 / self.order))

    def evaluate(self, resolver: Resolver) -> complex:
        radicand = self.base.evaluate(resolver)
        root = resolver.root(self, radicand)
        if root == 0 and self.exponent < 0:
            raise SingularPointError(f"zero radicand in {self!r}")
        return root**self.exponent.numerator

    def children(self) -> tuple:
        return (self.base,)

    def radicals(self) -> Iterator["Root"]:
        yield from self.base.radicals()
        yield self

    def __repr__(self) -> str:
        return f"({self.base!r})^({self.exponent})"


def wrap(value: Union[Expr, Number]) -> Expr:
    if isinstance(value, Expr):
        return value
    return Constant(value)


def variable(name: str) -> Variable:
    return Variable(name)


def root(base: Union[Expr, Number], exponent: Fraction, anchor: RootAnchor) -> Root:
    """
    ``base^exponent`` with an explicit anchor.
    """
    return Root(wrap(base), Fraction(exponent), anchor)


def from_polynomial(poly: PolyElement) -> Expr:
    """
    The expression tree of a polynomial over the rationals; generator names
    become variable names.
    """
    names = [str(symbol) for symbol in poly.ring.symbols]
    total: Expr = Constant(0)
    for monom, coeff in poly.terms():
        term: Expr = Constant(float(coeff))
        for name, exponent in zip(names, monom):
            if exponent:
                term = term * Power(Variable(name), exponent)
        total = total + term
    return total


def from_rational_function(f: RationalFunction) -> Expr:
    if f.is_polynomial:
        return from_polynomial(f.numer)
    return from_polynomial(f.numer) / from_polynomial(f.denom)
