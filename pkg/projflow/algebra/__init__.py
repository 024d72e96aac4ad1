"""
Exact arithmetic on bivariate rational functions over the rationals.

Usage:
```python
from projflow.algebra import parse_rational_function, dehomogenize

w = parse_rational_function("(x - y)*y^2/x^2")
w.homogeneity          # 1
dehomogenize(w, 1)     # (x - 1)/x^2
```
"""

from projflow.algebra._factorization import Factorization
from projflow.algebra._factorization import irreducible_factors
from projflow.algebra._factorization import rational_roots
from projflow.algebra._factorization import resultant
from projflow.algebra._factorization import squarefree_factor
from projflow.algebra._formatting import format_polynomial
from projflow.algebra._homogeneity import dehomogenize
from projflow.algebra._homogeneity import homogeneity_degree
from projflow.algebra._homogeneity import rehomogenize
from projflow.algebra._homogeneity import require_degree
from projflow.algebra._linear import solve_linear_system
from projflow.algebra._parser import format_rational_function
from projflow.algebra._parser import parse_rational_function
from projflow.algebra._rational_function import Degree
from projflow.algebra._rational_function import RationalFunction
from projflow.algebra._rational_function import UnivariateRationalFunction
from projflow.algebra._rings import Scalar
from projflow.algebra._rings import T1
from projflow.algebra._rings import TX
from projflow.algebra._rings import X1
from projflow.algebra._rings import XT
from projflow.algebra._rings import XY
from projflow.algebra._sentinels import ANY_DEGREE
from projflow.algebra._sentinels import NOT_HOMOGENEOUS

__all__ = [
    "ANY_DEGREE",
    "Degree",
    "Factorization",
    "NOT_HOMOGENEOUS",
    "RationalFunction",
    "Scalar",
    "T1",
    "TX",
    "UnivariateRationalFunction",
    "X1",
    "XT",
    "XY",
    "dehomogenize",
    "format_polynomial",
    "format_rational_function",
    "homogeneity_degree",
    "irreducible_factors",
    "parse_rational_function",
    "rational_roots",
    "rehomogenize",
    "require_degree",
    "resultant",
    "solve_linear_system",
    "squarefree_factor",
]
