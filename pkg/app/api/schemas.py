# app/api/schemas.py
from pydantic import BaseModel, Field
from typing import Optional, List, Literal

from app.config import settings
from app.core.experiment.config import ExperimentConfig, ModelSpec


class DivergenceRequest(BaseModel):
    dgp: ModelSpec
    model: ModelSpec
    n: int = Field(ge=2)
    alpha: float = settings.DEFAULT_ALPHA
    seed: int = Field(default=0, ge=0)
    variance_convention: Literal["variance", "std"] = "variance"


class SelectionRequest(BaseModel):
    values: List[float] = Field(min_length=2)
    model1: ModelSpec
    model2: ModelSpec
    alpha: float = settings.DEFAULT_ALPHA
    level: float = Field(default=settings.DEFAULT_LEVEL, gt=0, lt=1)
    bandwidth: Optional[float] = Field(default=None, gt=0)
    variance_convention: Literal["variance", "std"] = "variance"


class Ar1Request(BaseModel):
    phi: float = Field(ge=-1.0, le=1.0)
    mu: float = 0.0
    sigma2: float = Field(default=1.0, gt=0)
    n: int = Field(ge=2, le=100000)
    seed: int = Field(default=0, ge=0)
    select: bool = False
    alt_phi: Optional[float] = None
    alpha: float = settings.DEFAULT_ALPHA
    level: float = Field(default=settings.DEFAULT_LEVEL, gt=0, lt=1)


class ExperimentRequest(BaseModel):
    config: ExperimentConfig = Field(default_factory=ExperimentConfig)
    mode: Literal["desk", "full", "custom"] = "desk"
