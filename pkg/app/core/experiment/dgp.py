# app/core/experiment/dgp.py
import numpy as np

from app.core.density.sample import Sample
from app.core.divergence.models import mixture_dgp
from app.exceptions import ConfigError


def replication_rng(master_seed: int, n: int, replication: int) -> np.random.Generator:
    """
    Counter-based stream for replication r at sample size n. Streams depend only on
    (master_seed, n, r), so results do not depend on execution order.
    """
    if int(master_seed) < 0:
        raise ConfigError(f"master seed must be a non-negative integer, got {master_seed}")
    seq = np.random.SeedSequence([int(master_seed), int(n), int(replication)])
    return np.random.Generator(np.random.Philox(seq))


def sample_mixture(pi: float, n: int, seed, second_variance: float = 2.0) -> Sample:
    """
    n draws from m(pi) = pi N(0,1) + (1 - pi) N(0, second_variance).
    `seed` is an int or an already positioned Generator.
    """
    if not (0.0 <= pi <= 1.0):
        raise ConfigError(f"mixture weight pi must lie in [0, 1], got {pi}")
    if n < 1:
        raise ConfigError(f"sample size must be positive, got {n}")

    if not isinstance(seed, np.random.Generator) and seed is not None and int(seed) < 0:
        raise ConfigError(f"seed must be a non-negative integer, got {seed}")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    values = mixture_dgp(pi, second_variance).sample(n, rng)
    return Sample(
        values,
        seed=None if isinstance(seed, np.random.Generator) else int(seed),
        dgp=f"mixture(pi={pi}, var2={second_variance})",
    )
