# app/core/divergence/models.py
from dataclasses import dataclass
from typing import Tuple
import numpy as np
from scipy import stats
from scipy.special import logsumexp

from app.config import settings
from app.core.density.kde import KdeFit, kde_evaluate
from app.exceptions import ConfigError, StationarityError


class DensityModel:
    """
    An evaluable univariate density. Subclasses provide logpdf and span;
    everything downstream (quadrature, inference) only relies on this surface.
    """
    family = "abstract"
    support: Tuple[float, float] = (-np.inf, np.inf)

    def logpdf(self, x):
        raise NotImplementedError

    def pdf(self, x):
        with np.errstate(under="ignore"):
            out = np.exp(self.logpdf(x))
        if np.ndim(out) == 0:
            return float(out)
        return out

    def span(self, n_sigmas: float = settings.QUADRATURE_SPAN_SIGMAS) -> Tuple[float, float]:
        """Interval holding all but a negligible share of the mass."""
        raise NotImplementedError

    def sample(self, n: int, rng: np.random.Generator) -> np.ndarray:
        raise ConfigError(f"cannot draw from a {self.family} model")

    def describe(self) -> dict:
        return {"family": self.family}

    def __call__(self, x):
        return self.pdf(x)


class GaussianShaped(DensityModel):
    """Shared behaviour of every model that is a normal law; needs mean and variance."""

    @property
    def sd(self) -> float:
        return float(np.sqrt(self.variance))

    def logpdf(self, x):
        out = stats.norm.logpdf(x, loc=self.mean, scale=self.sd)
        if np.ndim(out) == 0:
            return float(out)
        return out

    def span(self, n_sigmas: float = settings.QUADRATURE_SPAN_SIGMAS) -> Tuple[float, float]:
        return self.mean - n_sigmas * self.sd, self.mean + n_sigmas * self.sd

    def sample(self, n: int, rng: np.random.Generator) -> np.ndarray:
        return rng.normal(self.mean, self.sd, size=n)

    def describe(self) -> dict:
        return {"family": self.family, "mean": self.mean, "variance": self.variance}


@dataclass(frozen=True)
class GaussianModel(GaussianShaped):
    mean: float = 0.0
    variance: float = 1.0
    family = "gaussian"

    def __post_init__(self):
        if not (np.isfinite(self.variance) and self.variance > 0):
            raise ConfigError(f"gaussian variance must be positive, got {self.variance}")


@dataclass(frozen=True)
class Ar1M1Model(GaussianShaped):
    """Density of W_t under the unit-root model: N(0, sigma2)."""
    sigma2: float = 1.0
    family = "ar1_m1"

    def __post_init__(self):
        if not (np.isfinite(self.sigma2) and self.sigma2 > 0):
            raise ConfigError(f"sigma2 must be positive, got {self.sigma2}")

    @property
    def mean(self) -> float:
        return 0.0

    @property
    def variance(self) -> float:
        return self.sigma2

    def describe(self) -> dict:
        return {**super().describe(), "sigma2": self.sigma2}


@dataclass(frozen=True)
class Ar1M2Model(GaussianShaped):
    """Density of W_t under the stationary model, as stated: N(0, 2 sigma2 / (1 - phi^2))."""
    sigma2: float = 1.0
    phi: float = 0.0
    family = "ar1_m2"

    def __post_init__(self):
        if not (np.isfinite(self.sigma2) and self.sigma2 > 0):
            raise ConfigError(f"sigma2 must be positive, got {self.sigma2}")
        if not abs(self.phi) < 1:
            raise StationarityError(f"stationarity violated: |phi|={abs(self.phi)} >= 1")

    @property
    def mean(self) -> float:
        return 0.0

    @property
    def variance(self) -> float:
        return 2.0 * self.sigma2 / (1.0 - self.phi ** 2)

    def describe(self) -> dict:
        return {**super().describe(), "sigma2": self.sigma2, "phi": self.phi}


@dataclass(frozen=True)
class MixtureModel(DensityModel):
    """weight * comp1 + (1 - weight) * comp2."""
    weight: float
    comp1: DensityModel
    comp2: DensityModel
    family = "mixture"

    def __post_init__(self):
        if not (0.0 <= self.weight <= 1.0):
            raise ConfigError(f"mixture weight must lie in [0, 1], got {self.weight}")

    def logpdf(self, x):
        parts = np.stack([np.asarray(self.comp1.logpdf(x)), np.asarray(self.comp2.logpdf(x))])
        weights = np.array([self.weight, 1.0 - self.weight]).reshape((2,) + (1,) * (parts.ndim - 1))
        out = logsumexp(parts, b=weights, axis=0)
        if np.ndim(out) == 0:
            return float(out)
        return out

    def span(self, n_sigmas: float = settings.QUADRATURE_SPAN_SIGMAS) -> Tuple[float, float]:
        lo1, hi1 = self.comp1.span(n_sigmas)
        lo2, hi2 = self.comp2.span(n_sigmas)
        return min(lo1, lo2), max(hi1, hi2)

    def sample(self, n: int, rng: np.random.Generator) -> np.ndarray:
        pick_first = rng.random(n) < self.weight
        first = self.comp1.sample(n, rng)
        second = self.comp2.sample(n, rng)
        return np.where(pick_first, first, second)

    def describe(self) -> dict:
        return {
            "family": self.family,
            "weight": self.weight,
            "comp1": self.comp1.describe(),
            "comp2": self.comp2.describe(),
        }


@dataclass(frozen=True, eq=False)
class KdeModel(DensityModel):
    """The kernel estimate seen as a density model (the plug-in f_n)."""
    fit: KdeFit
    family = "kde"

    def pdf(self, x):
        return kde_evaluate(self.fit, x)

    def logpdf(self, x):
        with np.errstate(divide="ignore"):
            out = np.log(kde_evaluate(self.fit, x))
        if np.ndim(out) == 0:
            return float(out)
        return out

    def span(self, n_sigmas: float = settings.QUADRATURE_SPAN_SIGMAS) -> Tuple[float, float]:
        return self.fit.span()

    def describe(self) -> dict:
        return {
            "family": self.family,
            "n": self.fit.n,
            "kernel": self.fit.kernel.family.value,
            "bandwidth": self.fit.bandwidth,
        }


def mixture_dgp(pi: float, second_variance: float = 2.0) -> MixtureModel:
    """The study's data-generating density m(pi) = pi N(0,1) + (1 - pi) N(0, second_variance)."""
    return MixtureModel(weight=pi, comp1=GaussianModel(0.0, 1.0), comp2=GaussianModel(0.0, second_variance))
