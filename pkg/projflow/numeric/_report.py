import math
from enum import Enum
from typing import Any
from typing import Dict
from typing import Iterable
from typing import Optional
from typing import Sequence
from typing import Tuple

from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field

SCHEMA_VERSION = 1


class CheckName(str, Enum):
    TRANSLATION = "translation"
    PDE = "pde"
    COMMUTE = "commute"
    ORBIT = "orbit"
    BOUNDARY = "boundary"
    IDENTITY = "identity"
    COMPOSITION = "composition"
    AGREEMENT = "agreement"


class VerificationReport(BaseModel):
    """
    Outcome of one numeric check; serialises as
    ``{check, seed, samples, max_residual, tolerance, pass}``.
    """

    model_config = ConfigDict(frozen=True, validate_by_name=True, validate_by_alias=True)

    check: CheckName
    seed: int
    samples: int
    max_residual: float
    tolerance: float
    passed: bool = Field(alias="pass")
    label: Optional[str] = Field(default=None, exclude=True)
    residuals: Tuple[float, ...] = Field(default=(), exclude=True)

    @classmethod
    def from_residuals(
        cls,
        check: CheckName,
        seed: int,
        residuals: Sequence[float],
        tolerance: float,
        label: Optional[str] = None,
    ) -> "VerificationReport":
        """
        A non-finite residual fails the check.
        """
        worst = max(
            (value if math.isfinite(value) else math.inf for value in residuals),
            default=0.0,
        )
        return cls(
            check=check,
            seed=seed,
            samples=len(residuals),
            max_residual=worst,
            tolerance=tolerance,
            passed=worst < tolerance,
            label=label,
            residuals=tuple(residuals),
        )

    def to_json_dict(self) -> Dict[str, Any]:
        return self.model_dump(mode="json", by_alias=True)


def reports_document(reports: Iterable[VerificationReport]) -> Dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "reports": [report.to_json_dict() for report in reports],
    }
