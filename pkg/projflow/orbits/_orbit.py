import logging
from enum import Enum
from fractions import Fraction
from math import lcm
from typing import Any
from typing import Dict
from typing import List
from typing import Optional
from typing import Tuple

from sympy.polys.rings import PolyElement

from projflow.algebra import dehomogenize
from projflow.algebra import format_polynomial
from projflow.algebra import RationalFunction
from projflow.algebra import rehomogenize
from projflow.algebra import UnivariateRationalFunction
from projflow.algebra._rings import to_scalar
from projflow.fields import FieldPair
from projflow.fields import is_level0
from projflow.orbits._integration import hermite_logpart
from projflow.orbits._integration import IntegralResult
from projflow.orbits._trace import orbit_trace

logger = logging.getLogger(__name__)


class LevelKind(str, Enum):
    ZERO = "level-0"
    FINITE = "finite"
    NOT_FINITE = "not-finite-level"


class OrbitReport:
    """
    Level classification of a vector field.

    Args:
        kind: level 0, finite level N, or no finite level.
        level: 0 for level 0, N for finite level, None otherwise.
        orbit_power: W^N, N-homogeneous with numerator leading coefficient 1;
            present for finite level only.
        trace: the (-1)-homogeneous trace T; absent for level 0.
        log_derivative: W_x/W restricted to y = 1; absent for level 0.
        integral: the exact integral of ``log_derivative``.
    """

    def __init__(
        self,
        kind: LevelKind,
        level: Optional[int] = None,
        orbit_power: Optional[RationalFunction] = None,
        trace: Optional[RationalFunction] = None,
        log_derivative: Optional[UnivariateRationalFunction] = None,
        integral: Optional[IntegralResult] = None,
    ):
        self.kind = kind
        self.level = level
        self.orbit_power = orbit_power
        self.trace = trace
        self.log_derivative = log_derivative
        self.integral = integral

    @property
    def W(self) -> Optional[RationalFunction]:
        """
        The orbit function itself when the flow has level 1.
        """
        if self.level == 1:
            return self.orbit_power
        return None

    @property
    def residues(self) -> List[Tuple[PolyElement, Fraction]]:
        if self.integral is None:
            return []
        return self.integral.residues

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "level": self.level,
            "W_power": None if self.orbit_power is None else str(self.orbit_power),
            "trace": None if self.trace is None else str(self.trace),
            "residues": [
                {"factor": format_polynomial(factor), "residue": str(residue)}
                for factor, residue in self.residues
            ],
            "algebraic_residues": []
            if self.integral is None
            else [
                format_polynomial(marker.minimal_polynomial)
                for marker in self.integral.algebraic
            ],
        }

    def __repr__(self) -> str:
        return (
            f"OrbitReport(kind={self.kind.value}, level={self.level}, "
            f"orbit_power={self.orbit_power})"
        )


def orbit_log_derivative(field: FieldPair) -> RationalFunction:
    """
    W_x/W = ϱ/(xϱ - yϖ), a (-1)-homogeneous function.
    """
    x, y = RationalFunction.x(), RationalFunction.y()
    return field.second / (x * field.second - y * field.first)


def _normalized(f: RationalFunction) -> RationalFunction:
    return f * (1 / to_scalar(f.numer.LC))


def orbit_function(field: FieldPair) -> OrbitReport:
    """
    Integrates W_x/W = ϱ/(xϱ - yϖ) exactly and classifies the level.

    The level is N when the integral has no rational part and every residue
    is rational, N being the lcm of their denominators. Irrational residues
    exclude every finite level, as W^N rational needs N*c integral for each
    residue c.
    """
    if is_level0(field):
        logger.info(f"{field} has level 0")
        return OrbitReport(LevelKind.ZERO, level=0)
    trace = orbit_trace(field)
    log_derivative = dehomogenize(orbit_log_derivative(field), -1)
    integral = hermite_logpart(log_derivative)
    if not integral.rational_part.is_zero or integral.algebraic:
        logger.info(
            f"{field} has no finite level: rational part "
            f"{integral.rational_part}, {len(integral.algebraic)} algebraic "
            "residue groups"
        )
        return OrbitReport(
            LevelKind.NOT_FINITE,
            trace=trace,
            log_derivative=log_derivative,
            integral=integral,
        )
    level = lcm(1, *(term.coefficient.denominator for term in integral.log_terms))
    restricted = UnivariateRationalFunction(1)
    for term in integral.log_terms:
        exponent = int(term.coefficient * level)
        restricted = restricted * UnivariateRationalFunction(term.argument) ** exponent
    orbit_power = _normalized(rehomogenize(restricted, level))
    logger.info(f"{field} has level {level} with W^{level}={orbit_power}")
    return OrbitReport(
        LevelKind.FINITE,
        level=level,
        orbit_power=orbit_power,
        trace=trace,
        log_derivative=log_derivative,
        integral=integral,
    )


def satisfies_orbit_equation(
    field: FieldPair, orbit_power: RationalFunction, level: int = 1
) -> bool:
    """
    Exact test of N ϱ W^N + (W^N)_x (yϖ - xϱ) = 0.
    """
    x, y = RationalFunction.x(), RationalFunction.y()
    residual = level * field.second * orbit_power + orbit_power.diff("x") * (
        y * field.first - x * field.second
    )
    return residual.is_zero


def scalar_ratio(
    first: RationalFunction, second: RationalFunction
) -> Optional[Fraction]:
    """
    The constant c with first = c * second, or None when there is none.
    """
    if second.is_zero:
        return Fraction(0) if first.is_zero else None
    return (first / second).constant_value()
