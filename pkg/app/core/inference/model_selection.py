# app/core/inference/model_selection.py
from enum import Enum
import math
from pydantic import BaseModel, ConfigDict, Field
from scipy import stats

from app.config import settings
from app.core.density.kde import fit_kde
from app.core.density.kernels import KernelSpec
from app.core.density.sample import Sample
from app.core.divergence.alpha_divergence import DivergenceOrder, estimate_divergences
from app.core.divergence.models import DensityModel
from app.core.inference.variance import influence_values, gamma_from_influence
from app.exceptions import ConfigError


class Decision(str, Enum):
    MODEL1 = "model1"
    MODEL2 = "model2"
    INDECISIVE = "indecisive"

    def swapped(self) -> "Decision":
        if self == Decision.MODEL1:
            return Decision.MODEL2
        if self == Decision.MODEL2:
            return Decision.MODEL1
        return self


class SelectionResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    d1: float
    d2: float
    di_raw: float
    di_scaled: float
    variance_estimate: float = Field(ge=0)
    standardized: float
    decision: Decision
    significance_level: float
    n: int
    bandwidth: float


def decide(di_scaled: float, variance_estimate: float, level: float) -> Decision:
    """
    Two-sided rule: inside the band |DI| <= z_(1-level/2) sqrt(Gamma) is indecisive,
    negative favours model 1, positive favours model 2.
    """
    critical = stats.norm.ppf(1.0 - level / 2.0) * math.sqrt(variance_estimate)
    if abs(di_scaled) <= critical:
        return Decision.INDECISIVE
    return Decision.MODEL1 if di_scaled < 0 else Decision.MODEL2


def model_select(sample: Sample, f1: DensityModel, f2: DensityModel, order: DivergenceOrder,
                 level: float = settings.DEFAULT_LEVEL, kernel: KernelSpec = None,
                 bandwidth: float = None) -> SelectionResult:
    """
    Divergence-indicator model selection between two candidate densities,
    neither of which needs to contain the data-generating law.
    """
    if not (0.0 < level < 1.0):
        raise ConfigError(f"significance level must lie in (0, 1), got {level}")

    fit = fit_kde(sample, kernel, bandwidth)
    est1, est2 = estimate_divergences(fit, [f1, f2], order)
    d1, d2 = est1.value, est2.value

    di_raw = d1 - d2
    di_scaled = math.sqrt(fit.n * fit.bandwidth) * di_raw
    gamma = gamma_from_influence(influence_values(fit, f1, f2, order))

    if gamma > 0:
        standardized = di_scaled / math.sqrt(gamma)
    else:
        standardized = 0.0 if di_scaled == 0 else math.copysign(math.inf, di_scaled)

    return SelectionResult(
        d1=d1,
        d2=d2,
        di_raw=di_raw,
        di_scaled=di_scaled,
        variance_estimate=gamma,
        standardized=standardized,
        decision=decide(di_scaled, gamma, level),
        significance_level=level,
        n=fit.n,
        bandwidth=fit.bandwidth,
    )
