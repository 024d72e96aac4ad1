"""
Worked examples with their flows, goldens and verification pipeline.

Usage:
```python
from projflow.examples import EXAMPLES

record = EXAMPLES.resolve("E3")
record.rederive()                                # [] when every golden agrees
all(report.passed for report in record.verify(seed=7))
```
"""

from projflow.examples._catalogue import cubic
from projflow.examples._catalogue import cubic_partner_equation
from projflow.examples._catalogue import EXAMPLES
from projflow.examples._catalogue import monomial
from projflow.examples._catalogue import quadratic
from projflow.examples._catalogue import superflow
from projflow.examples._goldens import GOLDENS
from projflow.examples._record import ExampleRecord
from projflow.examples._record import GoldenDiff
from projflow.examples._record import IdentityCheck
from projflow.examples._record import linear_solution
from projflow.examples._record import SampleDomain
from projflow.examples._registry import ExampleRegistry
from projflow.examples._registry import format_example_id
from projflow.examples._registry import NOT_BUILT
from projflow.examples._registry import parse_example_id
from projflow.examples._registry import UnknownExampleError

__all__ = [
    "EXAMPLES",
    "ExampleRecord",
    "ExampleRegistry",
    "GOLDENS",
    "GoldenDiff",
    "IdentityCheck",
    "NOT_BUILT",
    "SampleDomain",
    "UnknownExampleError",
    "cubic",
    "cubic_partner_equation",
    "format_example_id",
    "linear_solution",
    "monomial",
    "parse_example_id",
    "quadratic",
    "superflow",
]
