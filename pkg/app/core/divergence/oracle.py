# app/core/divergence/oracle.py
import math

from app.core.divergence.alpha_divergence import DivergenceOrder
from app.core.divergence.models import GaussianShaped
from app.exceptions import ConfigError, InadmissibleOrderError


def gaussian_renyi_oracle(p: GaussianShaped, q: GaussianShaped, order: DivergenceOrder) -> float:
    """
    Closed-form Renyi divergence between two normals:

        R_a(p || q) = a (mu_p - mu_q)^2 / (2 s_a) + log(s_a / (s_p^(1-a) s_q^a)) / (2 (1 - a))

    with variances s_p, s_q and mixed variance s_a = a s_q + (1 - a) s_p.
    At a = 1/2 this is -2 log of the Bhattacharyya coefficient.
    """
    if not (isinstance(p, GaussianShaped) and isinstance(q, GaussianShaped)):
        raise ConfigError("the closed form needs two gaussian models")

    a = order.alpha
    s_p, s_q = p.variance, q.variance
    s_a = a * s_q + (1.0 - a) * s_p
    if not s_a > 0:
        raise InadmissibleOrderError(f"order outside admissible range: mixed variance {s_a} <= 0")

    mean_term = a * (p.mean - q.mean) ** 2 / (2.0 * s_a)
    if s_p == s_q:
        log_term = 0.0
    else:
        log_term = (math.log(s_a) - (1.0 - a) * math.log(s_p) - a * math.log(s_q)) / (2.0 * (1.0 - a))
    return mean_term + log_term


def gaussian_alpha_oracle(p: GaussianShaped, q: GaussianShaped, order: DivergenceOrder) -> float:
    """Closed-form alpha-divergence, through D = (exp((a - 1) R) - 1) / (a (a - 1))."""
    a = order.alpha
    r = gaussian_renyi_oracle(p, q, order)
    return math.expm1((a - 1.0) * r) / (a * (a - 1.0))


def bhattacharyya_coefficient(p: GaussianShaped, q: GaussianShaped) -> float:
    """Integral of sqrt(p q) for two normals."""
    s_p, s_q = p.variance, q.variance
    scale = math.sqrt(2.0 * math.sqrt(s_p * s_q) / (s_p + s_q))
    return scale * math.exp(-((p.mean - q.mean) ** 2) / (4.0 * (s_p + s_q)))
