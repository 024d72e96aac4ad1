import logging
from typing import Iterable
from typing import List
from typing import NamedTuple
from typing import Sequence
from typing import Tuple

import numpy as np
from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field
from pydantic import model_validator
from sympy.polys.rings import PolyElement

from projflow._errors import PreconditionError
from projflow.algebra import RationalFunction

logger = logging.getLogger(__name__)

Interval = Tuple[float, float]


class Sample(NamedTuple):
    index: int
    x: float
    y: float
    z: float
    w: float

    @property
    def point(self) -> Tuple[float, float]:
        return self.x, self.y


class _Locus:
    def __init__(self, poly: PolyElement):
        self.value = RationalFunction(poly)
        self.gradient = (self.value.diff("x"), self.value.diff("y"))

    def distance(self, x: float, y: float) -> float:
        """
        First order estimate |p|/|∇p| of the distance to {p = 0}.
        """
        value = abs(self.value.evaluate_numeric(x, y))
        slope = np.hypot(
            abs(self.gradient[0].evaluate_numeric(x, y)),
            abs(self.gradient[1].evaluate_numeric(x, y)),
        )
        if slope == 0:
            return np.inf if value else 0.0
        return value / slope


def singular_loci(*functions: RationalFunction) -> List[PolyElement]:
    """
    The non-constant denominators of ``functions``.
    """
    loci = []
    for function in functions:
        if not function.denom.is_ground and function.denom not in loci:
            loci.append(function.denom)
    return loci


class SamplePlan(BaseModel):
    """
    Reproducible sampling of (x, y, z, w) from a box, keeping (x, y) at
    least ``exclusion_radius`` away from given singular curves.
    """

    model_config = ConfigDict(frozen=True)

    seed: int
    count: int = Field(default=100, ge=1)
    x_range: Interval
    y_range: Interval
    z_range: Interval = (0.0, 0.1)
    w_range: Interval = (0.0, 0.1)
    exclusion_radius: float = Field(default=0.05, gt=0)
    oversampling: int = Field(default=10, ge=1)

    @model_validator(mode="after")
    def _check_ranges(self) -> "SamplePlan":
        for name in ("x_range", "y_range", "z_range", "w_range"):
            low, high = getattr(self, name)
            if low > high:
                raise ValueError(f"{name}=({low}, {high}) is empty")
        return self

    def draw(self, loci: Iterable[PolyElement] = ()) -> List[Sample]:
        """
        Raises:
            PreconditionError: fewer than ``count`` admissible samples within
                ``oversampling * count`` draws.
        """
        rng = np.random.default_rng(self.seed)
        curves: Sequence[_Locus] = [_Locus(poly) for poly in loci]
        samples: List[Sample] = []
        for _ in range(self.oversampling * self.count):
            x = rng.uniform(*self.x_range)
            y = rng.uniform(*self.y_range)
            z = rng.uniform(*self.z_range)
            w = rng.uniform(*self.w_range)
            if all(curve.distance(x, y) > self.exclusion_radius for curve in curves):
                samples.append(Sample(len(samples), x, y, z, w))
                if len(samples) == self.count:
                    return samples
        raise PreconditionError(
            f"only {len(samples)} of {self.count} samples clear the singular "
            f"loci after {self.oversampling * self.count} draws"
        )
