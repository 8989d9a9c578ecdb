# app/core/divergence/quadrature.py
from typing import Tuple
import numpy as np
from pydantic import BaseModel, ConfigDict
from scipy import integrate

from app.config import settings
from app.core.divergence.models import DensityModel
from app.logger import logger


class QuadratureInfo(BaseModel):
    model_config = ConfigDict(frozen=True)

    grid_lo: float
    grid_hi: float
    points: int
    boundary_mass: float = 0.0


def build_grid(*models: DensityModel, bounds: Tuple[float, float] = settings.QUADRATURE_BOUNDS,
               points: int = settings.QUADRATURE_POINTS) -> np.ndarray:
    """
    Fixed Simpson grid. Starts from the default bounds and widens to cover the
    span of every model so wide Gaussians and far-out samples keep their mass.
    """
    lo, hi = bounds
    for model in models:
        m_lo, m_hi = model.span()
        lo = min(lo, m_lo)
        hi = max(hi, m_hi)
    if points % 2 == 0:
        points += 1
    return np.linspace(lo, hi, points)


def boundary_mass(values: np.ndarray, grid: np.ndarray, share: float = 0.01) -> float:
    """Mass of the integrand in the outer `share` of the grid on each side."""
    k = max(2, int(len(grid) * share))
    left = integrate.trapezoid(values[:k], grid[:k])
    right = integrate.trapezoid(values[-k:], grid[-k:])
    return float(abs(left) + abs(right))


def simpson(values: np.ndarray, grid: np.ndarray) -> Tuple[float, QuadratureInfo]:
    """Composite Simpson integral plus the grid description and boundary diagnostic."""
    total = float(integrate.simpson(values, x=grid))
    edge = boundary_mass(values, grid)
    if edge > settings.BOUNDARY_MASS_WARNING:
        logger.warning(
            f"Quadrature: integrand mass {edge:.3e} near grid edges [{grid[0]:.3f}, {grid[-1]:.3f}]"
        )
    info = QuadratureInfo(grid_lo=float(grid[0]), grid_hi=float(grid[-1]), points=int(grid.size), boundary_mass=edge)
    return total, info
