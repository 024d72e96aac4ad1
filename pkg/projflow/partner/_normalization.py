import logging

from projflow._errors import InconsistentInputError
from projflow._errors import LevelZeroError
from projflow._errors import NotLevelOneError
from projflow.algebra import RationalFunction
from projflow.fields import conjugate_field
from projflow.fields import RadialMap
from projflow.fields import VectorField
from projflow.orbits import LevelKind
from projflow.orbits import orbit_function

logger = logging.getLogger(__name__)


class NormalizationResult:
    """
    The chart in which a level 1 field becomes horizontal.

    Args:
        ratio: A = y/W.
        map: the radial map (xA, yA).
        normalized_field: conjugate_field(A, F), with second component 0.
        orbit: the orbit function W of F.
    """

    def __init__(
        self,
        ratio: RationalFunction,
        map: RadialMap,
        normalized_field: VectorField,
        orbit: RationalFunction,
    ):
        self.ratio = ratio
        self.map = map
        self.normalized_field = normalized_field
        self.orbit = orbit

    def __repr__(self) -> str:
        return (
            f"NormalizationResult(ratio={self.ratio}, "
            f"normalized_field={self.normalized_field})"
        )


def normalize_to_horizontal(field: VectorField) -> NormalizationResult:
    """
    Conjugates a level 1 field by ℓ(x, y) = (xA, yA), A = y/W, so that the
    second component of the result vanishes.

    Raises:
        LevelZeroError: ``field`` has level 0.
        NotLevelOneError: ``field`` has a level other than 1 or none.
    """
    report = orbit_function(field)
    if report.kind is LevelKind.ZERO:
        raise LevelZeroError(f"{field} has level 0")
    if report.level != 1:
        raise NotLevelOneError(f"{field} is not level 1: {report}")
    orbit = report.W
    ratio = RationalFunction.y() / orbit
    normalized = conjugate_field(ratio, field)
    if not normalized.second.is_zero:
        raise InconsistentInputError(
            f"conjugation by A={ratio} left second component {normalized.second}"
        )
    logger.debug(f"normalized {field} by A={ratio} to {normalized}")
    return NormalizationResult(ratio, RadialMap.from_ratio(ratio), normalized, orbit)
