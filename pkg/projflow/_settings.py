from typing import Final

from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field


class Tolerances(BaseModel):
    model_config = ConfigDict(frozen=True)

    translation: float = Field(default=1e-8, gt=0)
    pde: float = Field(default=1e-6, gt=0)
    commute: float = Field(default=1e-8, gt=0)
    orbit: float = Field(default=1e-8, gt=0)
    boundary: float = Field(default=1e-2, gt=0)
    identity: float = Field(default=1e-9, gt=0)
    agreement: float = Field(default=1e-8, gt=0)
    real_acceptance: float = Field(default=1e-9, gt=0)


class ContinuationSettings(BaseModel):
    model_config = ConfigDict(frozen=True)

    steps: int = Field(default=64, ge=1)
    min_step: float = Field(default=2.0**-20, gt=0)
    newton_tolerance: float = Field(default=1e-12, gt=0)
    newton_iterations: int = Field(default=50, ge=1)


class SearchLimits(BaseModel):
    model_config = ConfigDict(frozen=True)

    max_pole_order: int = Field(default=30, ge=0)
    max_numerator_degree: int = Field(default=60, ge=0)


class SamplingDefaults(BaseModel):
    model_config = ConfigDict(frozen=True)

    count: int = Field(default=100, ge=1)
    exclusion_radius: float = Field(default=0.05, gt=0)
    oversampling: int = Field(default=10, ge=1)
    finite_difference_step: float = Field(default=1e-6, gt=0)
    ode_tolerance: float = Field(default=1e-12, gt=0)
    workers: int = Field(default=1, ge=1)


class Settings(BaseModel):
    """
    Tunables shared by the exact and numeric pipelines.

    Every operation with a tunable accepts ``settings``; derive variants with
    ``DEFAULT_SETTINGS.model_copy(update={...})``.
    """

    model_config = ConfigDict(frozen=True)

    tolerances: Tolerances = Tolerances()
    continuation: ContinuationSettings = ContinuationSettings()
    limits: SearchLimits = SearchLimits()
    sampling: SamplingDefaults = SamplingDefaults()

    def with_tolerance(self, value: float) -> "Settings":
        """
        Returns a copy with every residual tolerance replaced by ``value``.
        """
        tolerances = self.tolerances.model_copy(
            update={
                "translation": value,
                "pde": value,
                "commute": value,
                "orbit": value,
                "identity": value,
                "agreement": value,
            }
        )
        return self.model_copy(update={"tolerances": tolerances})


DEFAULT_SETTINGS: Final[Settings] = Settings()
