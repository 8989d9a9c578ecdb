# app/core/ar1/process.py
from dataclasses import dataclass
import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator
from scipy import signal

from app.core.density.sample import Sample
from app.exceptions import SampleTooShortError


class Ar1Config(BaseModel):
    """X_t - mu = phi (X_{t-1} - mu) + eps_t, eps_t iid N(0, sigma2)."""
    model_config = ConfigDict(frozen=True)

    phi: float = Field(ge=-1.0, le=1.0)
    mu: float = 0.0
    sigma2: float = Field(default=1.0, gt=0)
    n: int = Field(gt=0)
    seed: int = Field(default=0, ge=0)
    burn_in: int = Field(default=0, ge=0)

    @field_validator("sigma2", "mu", "phi")
    @classmethod
    def _finite(cls, v):
        if not np.isfinite(v):
            raise ValueError("must be finite")
        return v

    @property
    def is_unit_root(self) -> bool:
        return abs(self.phi) == 1.0


@dataclass(frozen=True, eq=False)
class DifferencedSample:
    """W_t = X_t - X_{t-1}, t = 1..n."""
    w: Sample

    def __len__(self) -> int:
        return len(self.w)


def simulate_ar1(cfg: Ar1Config) -> Sample:
    """
    Returns the path X_0..X_n (n + 1 values).
    X_0 starts at the stationary law N(mu, sigma2 / (1 - phi^2)) when |phi| < 1
    and at mu + eps_0 under a unit root. Deviations from mu are simulated first so
    that mu only enters as a final shift.
    """
    rng = np.random.default_rng(cfg.seed)
    sd = float(np.sqrt(cfg.sigma2))
    total = cfg.n + 1 + cfg.burn_in
    eps = rng.normal(0.0, sd, size=total)

    if not cfg.is_unit_root:
        eps[0] = eps[0] / np.sqrt(1.0 - cfg.phi ** 2)
    # dev_t = phi * dev_{t-1} + eps_t with dev_0 = eps_0
    dev = signal.lfilter([1.0], [1.0, -cfg.phi], eps)

    path = cfg.mu + dev[cfg.burn_in:]
    return Sample(path, seed=cfg.seed, dgp=f"ar1(phi={cfg.phi}, mu={cfg.mu}, sigma2={cfg.sigma2})")


def difference(x: Sample) -> DifferencedSample:
    """First differences; removes the level mu."""
    if len(x) < 2:
        raise SampleTooShortError(f"differencing needs at least 2 values, got {len(x)}")
    w = np.diff(x.values)
    return DifferencedSample(w=Sample(w, seed=x.seed, dgp=f"diff[{x.dgp}]"))


def ar1_variance_diagnostic(cfg: Ar1Config) -> dict:
    """
    Compares the variance the stationary model assigns to W (2 sigma2 / (1 - phi^2))
    with the variance of W under the simulated process (2 sigma2 / (1 + phi)).
    """
    w = difference(simulate_ar1(cfg)).w.values
    empirical = float(np.var(w, ddof=1)) if w.size > 1 else float("nan")
    if cfg.is_unit_root:
        model_variance = float("inf")
        process_variance = cfg.sigma2 if cfg.phi == 1.0 else float("inf")
    else:
        model_variance = 2.0 * cfg.sigma2 / (1.0 - cfg.phi ** 2)
        process_variance = 2.0 * cfg.sigma2 / (1.0 + cfg.phi)
    return {
        "phi": cfg.phi,
        "sigma2": cfg.sigma2,
        "n": cfg.n,
        "model_variance": model_variance,
        "process_variance": process_variance,
        "empirical_variance": empirical,
    }
