"""
Orbit functions, level classification and the Wronskian machinery.

Usage:
```python
from projflow.fields import VectorField
from projflow.orbits import orbit_function, level1_check

f = VectorField.parse("2*x^2 - 3*x*y", "x*y - 2*y^2")
orbit_function(f).W    # (x*y^2 - y^3)/(x^2)
level1_check(f)        # True
```
"""

from projflow.orbits._integration import AlgebraicResidue
from projflow.orbits._integration import gcdex_diophantine
from projflow.orbits._integration import hermite_logpart
from projflow.orbits._integration import hermite_reduce
from projflow.orbits._integration import IntegralResult
from projflow.orbits._integration import LogTerm
from projflow.orbits._ode import level1_check
from projflow.orbits._ode import level1_problem
from projflow.orbits._ode import ODESolution
from projflow.orbits._ode import rational_ode_solve
from projflow.orbits._ode import RationalODEProblem
from projflow.orbits._orbit import LevelKind
from projflow.orbits._orbit import orbit_function
from projflow.orbits._orbit import orbit_log_derivative
from projflow.orbits._orbit import OrbitReport
from projflow.orbits._orbit import satisfies_orbit_equation
from projflow.orbits._orbit import scalar_ratio
from projflow.orbits._trace import orbit_trace
from projflow.orbits._wronskian import alpha_from_wronskian
from projflow.orbits._wronskian import beta_from_W
from projflow.orbits._wronskian import wronskian_constants

__all__ = [
    "AlgebraicResidue",
    "IntegralResult",
    "LevelKind",
    "LogTerm",
    "ODESolution",
    "OrbitReport",
    "RationalODEProblem",
    "alpha_from_wronskian",
    "beta_from_W",
    "gcdex_diophantine",
    "hermite_logpart",
    "hermite_reduce",
    "level1_check",
    "level1_problem",
    "orbit_function",
    "orbit_log_derivative",
    "orbit_trace",
    "rational_ode_solve",
    "satisfies_orbit_equation",
    "scalar_ratio",
    "wronskian_constants",
]
