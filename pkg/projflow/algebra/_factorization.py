"""
Univariate factorization helpers used by the integration engine.
"""

from fractions import Fraction
from typing import List
from typing import NamedTuple
from typing import Tuple

from sympy.polys.rings import PolyElement

from projflow._errors import PreconditionError
from projflow.algebra._rings import convert
from projflow.algebra._rings import T1
from projflow.algebra._rings import to_domain
from projflow.algebra._rings import to_scalar
from projflow.algebra._rings import X1

_UNIVARIATE_RINGS = {"x": X1, "t": T1}


class Factorization(NamedTuple):
    """
    ``unit * prod(factor**multiplicity)`` with monic factors.
    """

    unit: Fraction
    factors: List[Tuple[PolyElement, int]]

    def expand(self) -> PolyElement:
        ring = self.factors[0][0].ring if self.factors else X1
        product = ring.ground_new(ring.domain.one)
        for factor, multiplicity in self.factors:
            product = product * factor**multiplicity
        return product * to_domain(self.unit)


def _require_nonzero(poly: PolyElement, operation: str) -> None:
    if not poly:
        raise PreconditionError(f"{operation} of the zero polynomial")


def _monic_factors(poly: PolyElement, coeff, pairs) -> Factorization:
    unit = to_scalar(coeff)
    factors = []
    for factor, multiplicity in pairs:
        lead = to_scalar(factor.LC)
        unit *= lead**multiplicity
        factors.append((factor.monic(), multiplicity))
    factors.sort(key=lambda pair: (pair[0].degree(), str(pair[0])))
    return Factorization(unit, factors)


def squarefree_factor(poly: PolyElement) -> Factorization:
    """
    Squarefree decomposition: the factors are pairwise coprime, squarefree
    and monic.

    Raises:
        PreconditionError: ``poly`` is zero.
    """
    _require_nonzero(poly, "squarefree factorization")
    coeff, pairs = poly.sqf_list()
    return _monic_factors(poly, coeff, pairs)


def irreducible_factors(poly: PolyElement) -> Factorization:
    """
    Factorization into monic irreducible factors over the rationals.
    """
    _require_nonzero(poly, "factorization")
    coeff, pairs = poly.factor_list()
    return _monic_factors(poly, coeff, pairs)


def resultant(first: PolyElement, second: PolyElement) -> PolyElement:
    """
    Resultant eliminating the first generator of a two-variable ring; the
    result is returned in the univariate ring of the remaining variable.
    """
    _require_nonzero(first, "resultant")
    _require_nonzero(second, "resultant")
    remaining = str(first.ring.symbols[-1])
    target = _UNIVARIATE_RINGS[remaining]
    value = first.resultant(second)
    if isinstance(value, PolyElement):
        return convert(value, target)
    return target.ground_new(value)


def rational_roots(poly: PolyElement) -> List[Fraction]:
    """
    All rational roots of a univariate polynomial with multiplicity, in
    increasing order.
    """
    _require_nonzero(poly, "rational root search")
    roots = []
    for factor, multiplicity in irreducible_factors(poly).factors:
        if factor.degree() == 1:
            root = -to_scalar(factor.coeff(1))
            roots.extend([root] * multiplicity)
    return sorted(roots)
