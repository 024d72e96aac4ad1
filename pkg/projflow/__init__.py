"""
Commuting projective flows in the plane.

A projective flow is a map φ(x, y) in two variables that satisfies the
translation equation under the scaling φ^z(p) = φ(pz)/z. Its vector field is a
pair of 2-homogeneous rational functions. This package classifies such
fields by their orbit functions, builds the commuting partner of a level one
field and checks closed form, implicit and integrated flows numerically.

Usage:
```python
from projflow.fields import VectorField
from projflow.orbits import orbit_function
from projflow.partner import commuting_family

field = VectorField.parse("2*x^2 - 3*x*y", "x*y - 2*y^2")
print(orbit_function(field).orbit)     # (x*y^2 - y^3)/(x^2)
print(orbit_function(field).level)
family = commuting_family(field)
```
"""

import logging

from projflow._errors import BoundaryConditionError
from projflow._errors import ContinuationError
from projflow._errors import DegenerateOrbitError
from projflow._errors import InconsistentInputError
from projflow._errors import LevelZeroError
from projflow._errors import NotAlgebraicError
from projflow._errors import NotHomogeneousError
from projflow._errors import NotLevelOneError
from projflow._errors import ParseError
from projflow._errors import PreconditionError
from projflow._errors import ProjflowError
from projflow._errors import RootCollisionError
from projflow._errors import SingularPointError
from projflow._errors import StepUnderflowError
from projflow._errors import UndecidedError
from projflow._settings import ContinuationSettings
from projflow._settings import DEFAULT_SETTINGS
from projflow._settings import SamplingDefaults
from projflow._settings import SearchLimits
from projflow._settings import Settings
from projflow._settings import Tolerances

logging.getLogger(__name__).addHandler(logging.NullHandler())

__all__ = [
    "BoundaryConditionError",
    "ContinuationError",
    "ContinuationSettings",
    "DEFAULT_SETTINGS",
    "DegenerateOrbitError",
    "InconsistentInputError",
    "LevelZeroError",
    "NotAlgebraicError",
    "NotHomogeneousError",
    "NotLevelOneError",
    "ParseError",
    "PreconditionError",
    "ProjflowError",
    "RootCollisionError",
    "SamplingDefaults",
    "SearchLimits",
    "Settings",
    "SingularPointError",
    "StepUnderflowError",
    "Tolerances",
    "UndecidedError",
]
