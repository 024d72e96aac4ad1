"""
Vector fields of projective flows and the exact operations on them.

Usage:
```python
from projflow.fields import VectorField, commute_check

f = VectorField.parse("2*x^2 - 3*x*y", "x*y - 2*y^2")
g = VectorField.parse("y^3/x", "y^3/x")
commute_check(f, g).commute   # True
```
"""

from projflow.fields._bracket import commutation_system
from projflow.fields._bracket import commute_check
from projflow.fields._bracket import CommutationResult
from projflow.fields._bracket import lie_bracket
from projflow.fields._birational_map import BirationalMap
from projflow.fields._birational_map import birmap_apply
from projflow.fields._birational_map import birmap_inverse
from projflow.fields._birational_map import CompositeMap
from projflow.fields._birational_map import conjugate_by_map
from projflow.fields._birational_map import LinearMap
from projflow.fields._birational_map import mirror_field
from projflow.fields._birational_map import RadialMap
from projflow.fields._conjugation import conjugate_field
from projflow.fields._level_zero import compose_level0
from projflow.fields._level_zero import is_level0
from projflow.fields._rational_flow import field_of_rational_flow
from projflow.fields._rational_flow import RationalFlow
from projflow.fields._vector_field import FieldPair
from projflow.fields._vector_field import VectorField

__all__ = [
    "BirationalMap",
    "CommutationResult",
    "CompositeMap",
    "FieldPair",
    "LinearMap",
    "RadialMap",
    "RationalFlow",
    "VectorField",
    "birmap_apply",
    "birmap_inverse",
    "commutation_system",
    "commute_check",
    "compose_level0",
    "conjugate_by_map",
    "conjugate_field",
    "field_of_rational_flow",
    "is_level0",
    "lie_bracket",
    "mirror_field",
]
