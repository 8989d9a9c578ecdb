# app/core/density/kde.py
from dataclasses import dataclass
from typing import Tuple, Union
import numpy as np
from scipy import integrate

from app.config import settings
from app.core.density.bandwidth import bandwidth_silverman
from app.core.density.kernels import KernelSpec, kernel_eval
from app.core.density.sample import Sample
from app.exceptions import EmptySampleError, ConfigError


@dataclass(frozen=True, eq=False)
class KdeFit:
    """Parzen-Rosenblatt estimate f_n(x) = (1/(n h)) sum_i K((W_i - x) / h)."""
    sample: Sample
    kernel: KernelSpec
    bandwidth: float

    def __post_init__(self):
        if len(self.sample) == 0:
            raise EmptySampleError()
        if not (np.isfinite(self.bandwidth) and self.bandwidth > 0):
            raise ConfigError(f"bandwidth must be positive, got {self.bandwidth}")

    @property
    def n(self) -> int:
        return len(self.sample)

    def span(self, pad_bandwidths: float = settings.KDE_PAD_BANDWIDTHS) -> Tuple[float, float]:
        w = self.sample.values
        pad = pad_bandwidths * self.bandwidth
        return float(w.min() - pad), float(w.max() + pad)

    def __call__(self, x):
        return kde_evaluate(self, x)


def fit_kde(sample: Sample, kernel: KernelSpec = None, bandwidth: float = None) -> KdeFit:
    """Builds a fit; the bandwidth defaults to Silverman's rule."""
    sample.require_nonempty()
    kernel = kernel or KernelSpec()
    h = bandwidth if bandwidth is not None else bandwidth_silverman(sample)
    return KdeFit(sample=sample, kernel=kernel, bandwidth=float(h))


def kde_evaluate(fit: KdeFit, x: Union[float, np.ndarray]):
    """
    Evaluates the kernel estimate at x (scalar or array).
    Evaluation is blocked over x so an n-by-grid matrix never materializes at once.
    """
    if fit.n == 0:
        raise EmptySampleError()

    xs = np.atleast_1d(np.asarray(x, dtype=float))
    w = fit.sample.values
    h = fit.bandwidth
    out = np.empty(xs.shape, dtype=float)

    chunk = settings.KDE_CHUNK_SIZE
    flat_x = xs.ravel()
    flat_out = out.ravel()
    for start in range(0, flat_x.size, chunk):
        block = flat_x[start:start + chunk]
        u = (w[:, None] - block[None, :]) / h
        flat_out[start:start + chunk] = kernel_eval(fit.kernel, u).sum(axis=0)
    out = flat_out.reshape(xs.shape) / (fit.n * h)

    if np.ndim(x) == 0:
        return float(out[0])
    return out


def kde_normalization(fit: KdeFit, points: int = settings.KDE_CHECK_POINTS) -> float:
    """Trapezoid integral of the estimate over the sample range padded by 10 h."""
    lo, hi = fit.span()
    grid = np.linspace(lo, hi, points)
    return float(integrate.trapezoid(kde_evaluate(fit, grid), grid))
