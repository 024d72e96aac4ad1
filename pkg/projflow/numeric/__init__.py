"""
Floating point evaluation and verification of projective flows.

Usage:
```python
from projflow.fields import RationalFlow
from projflow.numeric import RationalScaledFlow, SamplePlan, verify_translation

flow = RationalScaledFlow(RationalFlow.parse("x/(1-x)", "y/(1-x)"))
plan = SamplePlan(seed=7, x_range=(0.1, 0.5), y_range=(0.1, 0.5))
verify_translation(flow, plan).passed   # True
```
"""

from projflow.numeric._checks import residual
from projflow.numeric._checks import verify_agreement
from projflow.numeric._checks import verify_boundary
from projflow.numeric._checks import verify_commute
from projflow.numeric._checks import verify_composition
from projflow.numeric._checks import verify_identity
from projflow.numeric._checks import verify_implicit_pde
from projflow.numeric._checks import verify_orbit
from projflow.numeric._checks import verify_pde
from projflow.numeric._checks import verify_translation
from projflow.numeric._continuation import accept_real
from projflow.numeric._continuation import branch_eval
from projflow.numeric._continuation import ImplicitBranch
from projflow.numeric._continuation import implicit_eval
from projflow.numeric._expr import Constant
from projflow.numeric._expr import Expr
from projflow.numeric._expr import from_polynomial
from projflow.numeric._expr import from_rational_function
from projflow.numeric._expr import root
from projflow.numeric._expr import Root
from projflow.numeric._expr import RootAnchor
from projflow.numeric._expr import variable
from projflow.numeric._expr import Variable
from projflow.numeric._flows import chart_flows
from projflow.numeric._flows import ClosedFormComposition
from projflow.numeric._flows import ClosedFormFlow
from projflow.numeric._flows import CombinationFlow
from projflow.numeric._flows import ComposedFlow
from projflow.numeric._flows import ConjugatedFlow
from projflow.numeric._flows import ImplicitFlow
from projflow.numeric._flows import IntegratedFlow
from projflow.numeric._flows import Point
from projflow.numeric._flows import RationalScaledFlow
from projflow.numeric._flows import ScaledFlow
from projflow.numeric._flows import solve_partner_pointwise
from projflow.numeric._integrate import flow_integrate
from projflow.numeric._report import CheckName
from projflow.numeric._report import reports_document
from projflow.numeric._report import SCHEMA_VERSION
from projflow.numeric._report import VerificationReport
from projflow.numeric._sampling import Sample
from projflow.numeric._sampling import SamplePlan
from projflow.numeric._sampling import singular_loci

__all__ = [
    "CheckName",
    "ClosedFormComposition",
    "ClosedFormFlow",
    "CombinationFlow",
    "ComposedFlow",
    "ConjugatedFlow",
    "Constant",
    "Expr",
    "ImplicitBranch",
    "ImplicitFlow",
    "IntegratedFlow",
    "Point",
    "RationalScaledFlow",
    "Root",
    "RootAnchor",
    "SCHEMA_VERSION",
    "Sample",
    "SamplePlan",
    "ScaledFlow",
    "Variable",
    "VerificationReport",
    "accept_real",
    "branch_eval",
    "chart_flows",
    "flow_integrate",
    "from_polynomial",
    "from_rational_function",
    "implicit_eval",
    "reports_document",
    "residual",
    "root",
    "singular_loci",
    "verify_agreement",
    "verify_boundary",
    "verify_commute",
    "verify_composition",
    "verify_identity",
    "verify_implicit_pde",
    "verify_orbit",
    "verify_pde",
    "verify_translation",
]
