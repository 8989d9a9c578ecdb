# app/core/inference/goodness_of_fit.py
from pydantic import BaseModel, ConfigDict, Field
from scipy import stats

from app.core.density.kernels import KernelSpec
from app.core.density.sample import Sample
from app.core.divergence.alpha_divergence import DivergenceOrder, estimate_divergence
from app.core.divergence.models import DensityModel
from app.exceptions import ConfigError


class GofResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    statistic: float
    threshold: float
    significance_level: float = Field(gt=0, lt=1)
    reject: bool


def _check_level(level: float):
    if not (0.0 < level < 1.0):
        raise ConfigError(f"significance level must lie in (0, 1), got {level}")


def gof_decision(statistic: float, level: float, scale_sigma: float) -> GofResult:
    """Critical region {D >= z_(1-level) * sigma}; the boundary rejects."""
    _check_level(level)
    if not scale_sigma > 0:
        raise ConfigError(f"scale_sigma must be positive, got {scale_sigma}")
    threshold = float(stats.norm.ppf(1.0 - level) * scale_sigma)
    return GofResult(
        statistic=statistic,
        threshold=threshold,
        significance_level=level,
        reject=bool(statistic >= threshold),
    )


def gof_test(sample: Sample, model: DensityModel, order: DivergenceOrder, level: float,
             scale_sigma: float, kernel: KernelSpec = None, bandwidth: float = None) -> GofResult:
    """
    Goodness-of-fit of a fully specified model, H0: D_alpha(f, f_j) = 0.
    The scale sigma is the caller's; no default is derived.
    """
    _check_level(level)
    estimate = estimate_divergence(sample, model, order, kernel, bandwidth)
    return gof_decision(estimate.value, level, scale_sigma)
