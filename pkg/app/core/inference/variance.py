# app/core/inference/variance.py
from enum import Enum
import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from app.core.density.kde import KdeFit, kde_evaluate, fit_kde
from app.core.density.kernels import KernelSpec
from app.core.density.sample import Sample
from app.core.divergence.alpha_divergence import DivergenceOrder
from app.core.divergence.models import DensityModel
from app.exceptions import DensityVanishesError, EmptySampleError


class VarianceFormula(str, Enum):
    SIGMA_J = "sigma_j"
    GAMMA = "gamma"


class PointwiseVariance(BaseModel):
    model_config = ConfigDict(frozen=True)

    formula: VarianceFormula
    evaluated_at: float
    value: float = Field(ge=0)


def _density_at(f: DensityModel, x: float) -> float:
    fx = float(f.pdf(x))
    if not fx > 0:
        raise DensityVanishesError(f"density vanishes at x={x}")
    return fx


def pointwise_sigma_j(f: DensityModel, fj: DensityModel, order: DivergenceOrder,
                      x: float, sigma2_x: float) -> PointwiseVariance:
    """
    Asymptotic variance of the single-model statistic at x:
    (1 / (1 - a)^2) * (f_j(x) / f(x))^(4 - 4a) * f(x)^2 * sigma2(x).
    """
    a = order.alpha
    fx = _density_at(f, x)
    ratio = float(fj.pdf(x)) / fx
    value = (ratio ** (4.0 - 4.0 * a)) * fx ** 2 * sigma2_x / (1.0 - a) ** 2
    return PointwiseVariance(formula=VarianceFormula.SIGMA_J, evaluated_at=x, value=value)


def pointwise_gamma(f: DensityModel, f1: DensityModel, f2: DensityModel, order: DivergenceOrder,
                    x: float, sigma2_x: float) -> PointwiseVariance:
    """
    Asymptotic variance of the divergence indicator at x:
    (1 / (1 - a)^2) * [(f1/f)^(1-a) - (f2/f)^(1-a)]^4 * f(x)^2 * sigma2(x).
    """
    a = order.alpha
    fx = _density_at(f, x)
    bracket = (float(f1.pdf(x)) / fx) ** (1.0 - a) - (float(f2.pdf(x)) / fx) ** (1.0 - a)
    value = bracket ** 4 * fx ** 2 * sigma2_x / (1.0 - a) ** 2
    return PointwiseVariance(formula=VarianceFormula.GAMMA, evaluated_at=x, value=value)


def influence_values(fit: KdeFit, f1: DensityModel, f2: DensityModel, order: DivergenceOrder) -> np.ndarray:
    """
    psi(W_i) = (1 / (1 - a)) * [(f1(W_i) / f_n(W_i))^(1-a) - (f2(W_i) / f_n(W_i))^(1-a)],
    the linearization of D_1 - D_2 around the kernel estimate.
    """
    a = order.alpha
    w = fit.sample.values
    fn_w = kde_evaluate(fit, w)
    if np.any(fn_w <= 0):
        raise DensityVanishesError("kernel estimate vanishes at an observation")

    log_fn = np.log(fn_w)
    with np.errstate(under="ignore"):
        r1 = np.exp((1.0 - a) * (np.asarray(f1.logpdf(w)) - log_fn))
        r2 = np.exp((1.0 - a) * (np.asarray(f2.logpdf(w)) - log_fn))
    return (r1 - r2) / (1.0 - a)


def gamma_from_influence(psi: np.ndarray) -> float:
    if psi.size < 2:
        return 0.0
    return float(np.var(psi, ddof=1))


def estimate_gamma_integrated(sample: Sample, f1: DensityModel, f2: DensityModel, order: DivergenceOrder,
                              kernel: KernelSpec = None, bandwidth: float = None) -> float:
    """Sample variance of the influence function over the observations."""
    if len(sample) == 0:
        raise EmptySampleError()
    fit = fit_kde(sample, kernel, bandwidth)
    return gamma_from_influence(influence_values(fit, f1, f2, order))
