"""
Exact integration of univariate rational functions.

The rational part comes from Hermite reduction over the squarefree
factorization of the denominator; the logarithmic part from the resultant
res_x(d, a - t d') whose rational roots are the residues.
"""

import logging
from fractions import Fraction
from typing import List
from typing import Optional
from typing import Tuple

from sympy.polys.rings import PolyElement

from projflow.algebra import irreducible_factors
from projflow.algebra import resultant
from projflow.algebra import squarefree_factor
from projflow.algebra import UnivariateRationalFunction
from projflow.algebra._rings import to_domain
from projflow.algebra._rings import to_scalar
from projflow.algebra._rings import X1
from projflow.algebra._rings import XT
from projflow.algebra._rings import XT_T

logger = logging.getLogger(__name__)


class LogTerm:
    """
    ``coefficient * log(argument)`` with a rational coefficient and a monic
    squarefree argument.
    """

    def __init__(self, coefficient: Fraction, argument: PolyElement):
        self.coefficient = coefficient
        self.argument = argument

    def __eq__(self, other) -> bool:
        if not isinstance(other, LogTerm):
            return NotImplemented
        return (
            self.coefficient == other.coefficient
            and self.argument == other.argument
        )

    def __hash__(self):
        return hash((self.coefficient, str(self.argument)))

    def __repr__(self) -> str:
        return f"LogTerm({self.coefficient}, {self.argument})"


class AlgebraicResidue:
    """
    Marker for a group of residues that are the roots of an irreducible
    polynomial of degree > 1 over the rationals.

    Args:
        minimal_polynomial: monic irreducible polynomial in t satisfied by the
            residues.
        argument: the factor of the denominator carrying these residues.
    """

    def __init__(self, minimal_polynomial: PolyElement, argument: PolyElement):
        self.minimal_polynomial = minimal_polynomial
        self.argument = argument

    def __repr__(self) -> str:
        return (
            f"AlgebraicResidue(minimal_polynomial={self.minimal_polynomial}, "
            f"argument={self.argument})"
        )


class IntegralResult:
    """
    An antiderivative ``rational_part + sum(c * log(v))``.

    ``algebraic`` is non-empty when some residues are irrational; the log
    terms then cover the rational residues only.
    """

    def __init__(
        self,
        rational_part: UnivariateRationalFunction,
        log_terms: List[LogTerm],
        algebraic: List[AlgebraicResidue],
    ):
        self.rational_part = rational_part
        self.log_terms = log_terms
        self.algebraic = algebraic

    @property
    def is_elementary_rational(self) -> bool:
        """
        True when every residue is rational.
        """
        return not self.algebraic

    @property
    def is_rational(self) -> bool:
        """
        True when the antiderivative itself is a rational function.
        """
        return not self.algebraic and not self.log_terms

    @property
    def residues(self) -> List[Tuple[PolyElement, Fraction]]:
        return [(term.argument, term.coefficient) for term in self.log_terms]

    def derivative(self) -> Optional[UnivariateRationalFunction]:
        """
        Exact derivative of the antiderivative, or None when some residues
        are algebraic.
        """
        if self.algebraic:
            return None
        total = self.rational_part.diff()
        for term in self.log_terms:
            total = total + term.coefficient * UnivariateRationalFunction(
                term.argument.diff(X1.gens[0]), term.argument
            )
        return total

    def __repr__(self) -> str:
        return (
            f"IntegralResult(rational_part={self.rational_part}, "
            f"log_terms={self.log_terms}, algebraic={self.algebraic})"
        )


def gcdex_diophantine(
    a: PolyElement, b: PolyElement, c: PolyElement
) -> Tuple[PolyElement, PolyElement]:
    """
    Returns (s, t) with s*a + t*b == c and either s == 0 or deg s < deg b,
    for c in the ideal generated by a and b.
    """
    s, g = a.half_gcdex(b)
    s = s * c.exquo(g)
    if s and s.degree() >= b.degree():
        _, s = s.div(b)
    t = (c - s * a).exquo(b)
    return s, t


def _integrate_polynomial(poly: PolyElement) -> PolyElement:
    return X1.from_dict(
        {(k + 1,): coeff / (k + 1) for (k,), coeff in poly.terms()}
    )


def hermite_reduce(
    numer: PolyElement, denom: PolyElement
) -> Tuple[UnivariateRationalFunction, UnivariateRationalFunction]:
    """
    Splits a proper fraction numer/denom into ``(g, h)`` with
    numer/denom = g' + h and h having a squarefree denominator.
    """
    x = X1.gens[0]
    rational = UnivariateRationalFunction(0)
    if not numer:
        return rational, rational
    for factor, multiplicity in squarefree_factor(denom).factors:
        if multiplicity < 2 or factor.degree() < 1:
            continue
        cofactor = denom.exquo(factor**multiplicity)
        for j in range(multiplicity - 1, 0, -1):
            rhs = -numer.quo_ground(to_domain(j))
            first, second = gcdex_diophantine(
                cofactor * factor.diff(x), factor, rhs
            )
            rational = rational + UnivariateRationalFunction(first, factor**j)
            numer = -second * to_domain(j) - cofactor * first.diff(x)
        denom = cofactor * factor
        logger.debug(f"hermite step on {factor=} with {multiplicity=}")
    return rational, UnivariateRationalFunction(numer, denom)


def _lift(poly: PolyElement) -> PolyElement:
    return XT.from_dict({(i, 0): coeff for (i,), coeff in poly.terms()})


def _log_part(
    numer: PolyElement, denom: PolyElement
) -> Tuple[List[LogTerm], List[AlgebraicResidue]]:
    if not numer or denom.degree() < 1:
        return [], []
    x = X1.gens[0]
    derivative = denom.diff(x)
    rothstein_trager = resultant(
        _lift(denom), _lift(numer) - XT_T * _lift(derivative)
    )
    logger.debug(f"log part resultant R(t)={rothstein_trager}")
    log_terms = []
    algebraic = []
    covered = X1.one
    for factor, _ in irreducible_factors(rothstein_trager).factors:
        if factor.degree() == 1:
            root = -factor.coeff(1)
            argument = denom.gcd(numer - root * derivative)
            argument = argument.monic()
            covered = covered * argument
            log_terms.append(LogTerm(to_scalar(root), argument))
    for factor, _ in irreducible_factors(rothstein_trager).factors:
        if factor.degree() > 1:
            algebraic.append(AlgebraicResidue(factor, denom.monic().exquo(covered)))
    log_terms.sort(key=lambda term: (term.argument.degree(), str(term.argument)))
    return log_terms, algebraic


def hermite_logpart(g: UnivariateRationalFunction) -> IntegralResult:
    """
    Integrates ``g`` exactly up to its logarithmic part.

    Returns an ``IntegralResult`` whose rational part collects the
    polynomial part and the Hermite reduction; the log terms carry the
    rational residues of the remaining squarefree fraction and irrational
    residues are reported as ``AlgebraicResidue`` markers.
    """
    polynomial, proper = g.split_polynomial_part()
    rational, remainder = hermite_reduce(proper.numer, proper.denom)
    rational = rational + UnivariateRationalFunction(
        _integrate_polynomial(polynomial)
    )
    log_terms, algebraic = _log_part(remainder.numer, remainder.denom)
    logger.debug(
        f"integrated {g}: rational part {rational}, "
        f"{len(log_terms)} log terms, {len(algebraic)} algebraic groups"
    )
    return IntegralResult(rational, log_terms, algebraic)
