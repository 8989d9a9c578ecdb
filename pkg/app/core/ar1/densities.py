# app/core/ar1/densities.py
from app.core.divergence.models import Ar1M1Model, Ar1M2Model


def m1_density(sigma2: float) -> Ar1M1Model:
    """f1: W_t ~ N(0, sigma2) under the unit root."""
    return Ar1M1Model(sigma2=sigma2)


def m2_density(sigma2: float, phi: float) -> Ar1M2Model:
    """f2: W_t ~ N(0, 2 sigma2 / (1 - phi^2)) under the stationary model; |phi| < 1."""
    return Ar1M2Model(sigma2=sigma2, phi=phi)
