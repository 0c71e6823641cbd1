"""Pydantic schemas for configuration validation"""

from typing import Literal, Optional
from pydantic import BaseModel, Field, model_validator


class TolerancesConfig(BaseModel):
    """Numerische Toleranzen"""
    rank: float = Field(
        default=1e-10,
        gt=0.0,
        lt=1.0,
        description="Relative rank threshold (times largest singular value)"
    )
    equivalence: float = Field(
        default=1e-9,
        ge=0.0,
        description="Distance below which two vectors of R^inf are equivalent"
    )
    pi_invertible: float = Field(
        default=1e-10,
        gt=0.0,
        description="Relative threshold on |Det(A)| for Π-invertibility"
    )
    bridge_condition: float = Field(
        default=1e12,
        gt=1.0,
        description="Condition number above which a bridge Gram matrix counts as degenerate"
    )
    group_residual: float = Field(
        default=1e-9,
        gt=0.0,
        description="Relative residual accepted by the group inverse solver"
    )


class SeriesConfig(BaseModel):
    """Abbruch von Potenzreihen (E0, Exp, kontinuierliche Trajektorien)"""
    tol: float = Field(default=1e-12, gt=0.0, description="Term norm stopping threshold")
    max_terms: int = Field(
        default=10_000,
        ge=10,
        le=1_000_000,
        description="Hard cap on the number of series terms"
    )


class SamplingConfig(BaseModel):
    """Zufallsvektoren für die empirische DK-Norm"""
    samples: int = Field(default=10_000, ge=1)
    seed: int = Field(default=0, ge=0)


class LimitsConfig(BaseModel):
    """Größenbeschränkungen"""
    max_dimension: int = Field(
        default=4096,
        ge=1,
        le=65536,
        description="Largest admissible row or column count"
    )


class LoggingConfig(BaseModel):
    """Logging configuration"""
    level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = Field(default="WARNING")
    path: Optional[str] = Field(default=None)
    rotation: str = Field(default="10 MB")
    retention: str = Field(default="7 days")


class DKSTPConfig(BaseModel):
    """Complete DK-STP toolkit configuration schema"""
    tolerances: TolerancesConfig = Field(default_factory=TolerancesConfig)
    series: SeriesConfig = Field(default_factory=SeriesConfig)
    sampling: SamplingConfig = Field(default_factory=SamplingConfig)
    limits: LimitsConfig = Field(default_factory=LimitsConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)

    @model_validator(mode='after')
    def validate_series_against_tolerances(self) -> 'DKSTPConfig':
        """Series threshold must not be looser than the group residual tolerance"""
        if self.series.tol > self.tolerances.group_residual:
            raise ValueError("series.tol must not exceed tolerances.group_residual")
        return self

    model_config = {
        "extra": "forbid",
        "validate_assignment": True
    }
