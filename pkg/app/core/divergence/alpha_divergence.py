# app/core/divergence/alpha_divergence.py
from enum import Enum
from typing import List, Optional, Sequence, Tuple
import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from app.config import settings
from app.core.density.kde import KdeFit, fit_kde
from app.core.density.kernels import KernelSpec
from app.core.density.sample import Sample
from app.core.divergence.models import DensityModel, KdeModel
from app.core.divergence.quadrature import QuadratureInfo, build_grid, simpson
from app.exceptions import (
    ConfigError, InvalidOrderError, UnboundedRatioError,
    IntegralDivergedError, NonPositiveLogError
)


class DivergenceKind(str, Enum):
    ALPHA = "alpha_div"
    RENYI = "renyi"


class DivergenceOrder(BaseModel):
    """
    The order alpha of the divergence. 0 and 1 are always rejected; orders
    outside (0, 1) additionally need unchecked=True.
    """
    model_config = ConfigDict(frozen=True)

    alpha: float = settings.DEFAULT_ALPHA
    unchecked: bool = False

    @model_validator(mode="after")
    def _validate(self):
        if not np.isfinite(self.alpha) or self.alpha in (0.0, 1.0):
            raise InvalidOrderError(f"divergence order must differ from 0 and 1, got {self.alpha}")
        if not self.unchecked and not (0.0 < self.alpha < 1.0):
            raise InvalidOrderError(
                f"order {self.alpha} outside (0, 1); pass unchecked=True to allow it"
            )
        return self


class DivergenceEstimate(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: DivergenceKind
    order: DivergenceOrder
    value: float
    n: int = 0 # 0 for exact values between two known densities
    quadrature: Optional[QuadratureInfo] = None
    bandwidth: Optional[float] = None


def _affinity_from_logs(log_p: np.ndarray, log_q: np.ndarray, grid: np.ndarray,
                        alpha: float) -> Tuple[float, QuadratureInfo]:
    """
    Integral of p^alpha q^(1-alpha) = integral of (p/q)^alpha q, computed in log space.
    p = 0 contributes 0 only for alpha > 0; for alpha < 0 it makes (p/q)^alpha
    infinite wherever q > 0. q = 0 where p > 0 is an unbounded ratio.
    """
    p_alive = np.isfinite(log_p)
    q_dead = ~np.isfinite(log_q) & (log_q < 0)
    if np.any(p_alive & q_dead):
        raise UnboundedRatioError()
    if alpha < 0 and np.any(~p_alive & ~q_dead):
        raise IntegralDivergedError(
            f"order {alpha} < 0 and the first density vanishes where the second does not"
        )

    with np.errstate(invalid="ignore", over="ignore", under="ignore"):
        exponent = np.where(p_alive, alpha * log_p + (1.0 - alpha) * log_q, -np.inf)
        integrand = np.exp(exponent)

    if not np.all(np.isfinite(integrand)):
        raise IntegralDivergedError()

    total, info = simpson(integrand, grid)
    if not np.isfinite(total):
        raise IntegralDivergedError()
    # Outside (0, 1) the integral is finite only if the integrand decays inside the grid
    if not (0.0 < alpha < 1.0) and info.boundary_mass > settings.BOUNDARY_MASS_WARNING * max(abs(total), 1.0):
        raise IntegralDivergedError(
            f"order {alpha}: integrand does not decay at the grid edges (edge mass {info.boundary_mass:.3e})"
        )
    return total, info


def affinity_integral(p: DensityModel, q: DensityModel, order: DivergenceOrder,
                      grid: np.ndarray = None) -> Tuple[float, QuadratureInfo]:
    grid = build_grid(p, q) if grid is None else grid
    return _affinity_from_logs(np.asarray(p.logpdf(grid)), np.asarray(q.logpdf(grid)), grid, order.alpha)


def _alpha_value(integral: float, alpha: float) -> float:
    return (1.0 - integral) / (alpha * (1.0 - alpha))


def alpha_divergence(p: DensityModel, q: DensityModel, order: DivergenceOrder,
                     grid: np.ndarray = None) -> DivergenceEstimate:
    """
    D_alpha(p, q) = (1 / (alpha (1 - alpha))) * (1 - integral (p/q)^alpha q dx).
    """
    integral, info = affinity_integral(p, q, order, grid)
    return DivergenceEstimate(
        kind=DivergenceKind.ALPHA, order=order,
        value=_alpha_value(integral, order.alpha), n=0, quadrature=info
    )


def renyi_divergence(p: DensityModel, q: DensityModel, order: DivergenceOrder,
                     grid: np.ndarray = None) -> DivergenceEstimate:
    """
    R_alpha(p, q) = (1 / (alpha - 1)) * log integral p^alpha q^(1-alpha) dx,
    on the same grid as alpha_divergence.
    """
    integral, info = affinity_integral(p, q, order, grid)
    if not integral > 0:
        raise NonPositiveLogError(f"log of nonpositive: integral={integral}")
    return DivergenceEstimate(
        kind=DivergenceKind.RENYI, order=order,
        value=float(np.log(integral) / (order.alpha - 1.0)), n=0, quadrature=info
    )


def alpha_from_renyi(r: DivergenceEstimate, convention: str = "consistent") -> DivergenceEstimate:
    """
    Maps a Renyi value to the alpha-divergence.

    "consistent": D = (exp((alpha - 1) R) - 1) / (alpha (alpha - 1)), the exact inverse
    of renyi_divergence as defined here.
    "literal": D = (exp(alpha (alpha - 1) R) - 1) / (alpha (alpha - 1)), the exponent as
    commonly printed for a 1/(alpha(alpha-1))-normalized Renyi divergence.
    """
    if r.kind != DivergenceKind.RENYI:
        raise ConfigError(f"expected a Renyi estimate, got {r.kind.value}")

    alpha = r.order.alpha
    if convention == "consistent":
        exponent = (alpha - 1.0) * r.value
    elif convention == "literal":
        exponent = alpha * (alpha - 1.0) * r.value
    else:
        raise ConfigError(f"unknown identity convention '{convention}'")

    value = float(np.expm1(exponent) / (alpha * (alpha - 1.0)))
    return r.model_copy(update={"kind": DivergenceKind.ALPHA, "value": value})


def estimate_divergences(fit: KdeFit, models: Sequence[DensityModel], order: DivergenceOrder) -> List[DivergenceEstimate]:
    """
    Plug-in estimates D_alpha(f_n, f_j) for several models on one shared grid,
    evaluating the kernel estimate only once.
    """
    plug_in = KdeModel(fit)
    grid = build_grid(plug_in, *models)
    log_fn = np.asarray(plug_in.logpdf(grid))

    estimates = []
    for model in models:
        integral, info = _affinity_from_logs(log_fn, np.asarray(model.logpdf(grid)), grid, order.alpha)
        estimates.append(DivergenceEstimate(
            kind=DivergenceKind.ALPHA, order=order,
            value=_alpha_value(integral, order.alpha),
            n=fit.n, quadrature=info, bandwidth=fit.bandwidth
        ))
    return estimates


def estimate_divergence(sample: Sample, model: DensityModel, order: DivergenceOrder,
                        kernel: KernelSpec = None, bandwidth: float = None) -> DivergenceEstimate:
    """
    Plug-in estimator: fit the kernel estimate on the sample and integrate
    against the model. Negative values are reported as they come.
    """
    fit = fit_kde(sample, kernel, bandwidth)
    return estimate_divergences(fit, [model], order)[0]
