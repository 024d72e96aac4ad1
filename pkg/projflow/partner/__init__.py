"""
Construction of the commuting partner of a level 1 flow.

Usage:
```python
from projflow.algebra import parse_rational_function
from projflow.partner import partner_bundle

bundle = partner_bundle(parse_rational_function("x - y"))
bundle.psi_field            # (-y^2) • (-y^2)
str(bundle.a_equation)      # the relation V(a, y/(y+1)) = V(x, y)
```
"""

from projflow.partner._bundle import CombinedOrbit
from projflow.partner._bundle import partner_bundle
from projflow.partner._bundle import PartnerBundle
from projflow.partner._family import chart_orbit
from projflow.partner._family import commuting_family
from projflow.partner._family import CommutingFamily
from projflow.partner._implicit import ImplicitEquation
from projflow.partner._normalization import normalize_to_horizontal
from projflow.partner._normalization import NormalizationResult
from projflow.partner._partner_fields import partner_fields_from_V
from projflow.partner._partner_fields import phi_field
from projflow.partner._partner_fields import psi_field

__all__ = [
    "CombinedOrbit",
    "CommutingFamily",
    "ImplicitEquation",
    "NormalizationResult",
    "PartnerBundle",
    "chart_orbit",
    "commuting_family",
    "normalize_to_horizontal",
    "partner_bundle",
    "partner_fields_from_V",
    "phi_field",
    "psi_field",
]
