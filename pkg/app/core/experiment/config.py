# app/core/experiment/config.py
import json
import os
from typing import List, Literal, Optional, Tuple
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from app.config import settings
from app.core.density.kernels import KernelSpec
from app.core.divergence.alpha_divergence import DivergenceOrder
from app.core.divergence.models import DensityModel, GaussianModel, Ar1M1Model, Ar1M2Model, mixture_dgp
from app.exceptions import ConfigError
from app.logger import logger

VarianceConvention = Literal["variance", "std"]


class ModelSpec(BaseModel):
    """
    JSON description of a candidate density. Under the "std" convention the
    `variance` of a gaussian (and the mixture's second component) is read as a
    standard deviation, i.e. N(0, 2) means sd 2.
    """
    model_config = ConfigDict(frozen=True)

    family: Literal["gaussian", "mixture", "ar1_m1", "ar1_m2"] = "gaussian"
    mean: float = 0.0
    variance: float = 1.0
    weight: float = 1.0
    sigma2: float = 1.0
    phi: float = 0.0

    def build(self, convention: VarianceConvention = "variance") -> DensityModel:
        if self.family == "gaussian":
            var = self.variance ** 2 if convention == "std" else self.variance
            return GaussianModel(mean=self.mean, variance=var)
        if self.family == "mixture":
            return mixture_dgp(self.weight, second_variance=second_component_variance(convention))
        if self.family == "ar1_m1":
            return Ar1M1Model(sigma2=self.sigma2)
        return Ar1M2Model(sigma2=self.sigma2, phi=self.phi)


def second_component_variance(convention: VarianceConvention) -> float:
    """Variance of the study's "N(0,2)" under the chosen reading."""
    return 4.0 if convention == "std" else 2.0


class ExperimentConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str = "experiment"
    pi: float = Field(default=1.0, ge=0.0, le=1.0)
    sample_sizes: List[int] = Field(default_factory=lambda: list(settings.SAMPLE_SIZES))
    replications: int = Field(default=settings.EXECUTION_MODES["full"]["replications"], ge=1)
    order_alpha: float = settings.DEFAULT_ALPHA
    unchecked_order: bool = False
    level: float = Field(default=settings.DEFAULT_LEVEL, gt=0.0, lt=1.0)
    kernel: KernelSpec = Field(default_factory=KernelSpec)
    bandwidth_rule: Literal["silverman", "fixed"] = "silverman"
    bandwidth: Optional[float] = Field(default=None, gt=0)
    seed: int = Field(default=12345, ge=0)
    model1: ModelSpec = Field(default_factory=lambda: ModelSpec(family="gaussian", mean=0.0, variance=1.0))
    model2: ModelSpec = Field(default_factory=lambda: ModelSpec(family="gaussian", mean=0.0, variance=2.0))
    variance_convention: VarianceConvention = "variance"
    n_jobs: int = settings.N_JOBS
    schedule_bounds: Tuple[float, float] = settings.SCHEDULE_BOUNDS
    schedule_beta: float = Field(default=settings.DEFAULT_BETA, gt=0.0, lt=1.0)

    @field_validator("sample_sizes")
    @classmethod
    def _sizes(cls, v):
        if not v:
            raise ValueError("at least one sample size is required")
        if any(n < 2 for n in v):
            raise ValueError(f"every sample size must be >= 2, got {v}")
        return v

    @model_validator(mode="after")
    def _bandwidth(self):
        if self.bandwidth_rule == "fixed" and self.bandwidth is None:
            raise ValueError("bandwidth_rule 'fixed' needs a bandwidth")
        return self

    @property
    def order(self) -> DivergenceOrder:
        return DivergenceOrder(alpha=self.order_alpha, unchecked=self.unchecked_order)

    @property
    def second_variance(self) -> float:
        return second_component_variance(self.variance_convention)

    @property
    def fixed_bandwidth(self) -> Optional[float]:
        return self.bandwidth if self.bandwidth_rule == "fixed" else None

    def models(self) -> Tuple[DensityModel, DensityModel]:
        return self.model1.build(self.variance_convention), self.model2.build(self.variance_convention)


def load_experiment_config(path: Optional[str] = None, overrides: dict = None) -> ExperimentConfig:
    """
    Builds a config from a JSON file, then the ALPHADIV_SEED environment
    variable, then explicit overrides (None values are ignored).
    """
    data = {}
    if path:
        if not os.path.exists(path):
            raise ConfigError(f"config file not found: {path}")
        try:
            with open(path, "r", encoding="utf-8") as f:
                data = json.load(f)
        except json.JSONDecodeError as e:
            raise ConfigError(f"config file {path} is not valid JSON: {e}")
        if not isinstance(data, dict):
            raise ConfigError(f"config file {path} must hold a JSON object")

    try:
        env_seed = settings.seed_override()
    except ValueError:
        raise ConfigError(f"{settings.SEED_ENV_VAR} must be an integer")
    if env_seed is not None:
        logger.info(f"Config: seed overridden by {settings.SEED_ENV_VAR}={env_seed}")
        data["seed"] = env_seed

    for key, value in (overrides or {}).items():
        if value is not None:
            data[key] = value

    try:
        cfg = ExperimentConfig(**data)
        cfg.order # validates the order eagerly
        return cfg
    except ValidationError as e:
        raise ConfigError(f"invalid experiment config: {e}")
