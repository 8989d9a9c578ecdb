# app/core/experiment/runner.py
import math
from typing import List
import numpy as np
from joblib import Parallel, delayed
from pydantic import BaseModel, ConfigDict, model_validator
from scipy import stats

from app.core.density.bandwidth import BandwidthSchedule, check_schedule
from app.core.experiment.config import ExperimentConfig
from app.core.experiment.dgp import replication_rng, sample_mixture
from app.core.inference.model_selection import Decision, model_select
from app.exceptions import AlphaDivException, ReplicationError
from app.logger import logger


class ReplicationOutcome(BaseModel):
    model_config = ConfigDict(frozen=True)

    seed: int
    n: int
    replication: int
    d1: float
    d2: float
    di_raw: float
    di_scaled: float
    gamma: float
    standardized: float
    bandwidth: float
    decision: Decision


class TableRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int
    mean_d1: float
    mean_d2: float
    mean_di: float
    pct_model1: float
    pct_model2: float
    pct_indecisive: float
    mean_standardized: float = 0.0

    @model_validator(mode="after")
    def _closure(self):
        total = self.pct_model1 + self.pct_model2 + self.pct_indecisive
        if abs(total - 100.0) > 0.01:
            raise ValueError(f"decision percentages sum to {total}, not 100")
        return self


def run_single_replication(cfg: ExperimentConfig, n: int, replication: int) -> ReplicationOutcome:
    """One draw from m(pi) followed by the divergence-indicator selection."""
    try:
        rng = replication_rng(cfg.seed, n, replication)
        sample = sample_mixture(cfg.pi, n, rng, second_variance=cfg.second_variance)
        f1, f2 = cfg.models()
        result = model_select(
            sample, f1, f2, cfg.order,
            level=cfg.level, kernel=cfg.kernel, bandwidth=cfg.fixed_bandwidth
        )
    except AlphaDivException as e:
        logger.error(f"Replication failed: seed={cfg.seed} n={n} replication={replication}: {e}")
        raise ReplicationError(cfg.seed, n, replication, e)

    return ReplicationOutcome(
        seed=cfg.seed,
        n=n,
        replication=replication,
        d1=result.d1,
        d2=result.d2,
        di_raw=result.di_raw,
        di_scaled=result.di_scaled,
        gamma=result.variance_estimate,
        standardized=result.standardized,
        bandwidth=result.bandwidth,
        decision=result.decision,
    )


def run_replications(cfg: ExperimentConfig, n: int) -> List[ReplicationOutcome]:
    """
    All replications at one sample size. joblib returns results in task order,
    so aggregation never depends on scheduling.
    """
    return Parallel(n_jobs=cfg.n_jobs)(
        delayed(run_single_replication)(cfg, n, r) for r in range(cfg.replications)
    )


def aggregate(n: int, outcomes: List[ReplicationOutcome]) -> TableRow:
    total = len(outcomes)
    counts = {d: 0 for d in Decision}
    for o in outcomes:
        counts[o.decision] += 1

    finite_std = [o.standardized for o in outcomes if math.isfinite(o.standardized)]
    return TableRow(
        n=n,
        mean_d1=float(np.mean([o.d1 for o in outcomes])),
        mean_d2=float(np.mean([o.d2 for o in outcomes])),
        mean_di=float(np.mean([o.di_raw for o in outcomes])),
        pct_model1=100.0 * counts[Decision.MODEL1] / total,
        pct_model2=100.0 * counts[Decision.MODEL2] / total,
        pct_indecisive=100.0 * counts[Decision.INDECISIVE] / total,
        mean_standardized=float(np.mean(finite_std)) if finite_std else 0.0,
    )


def _advisory_schedule(cfg: ExperimentConfig, n: int):
    """Logs when the typical bandwidth at size n misses the consistency rate conditions."""
    if cfg.fixed_bandwidth is not None:
        h = cfg.fixed_bandwidth
    else:
        sd = math.sqrt(cfg.pi + (1.0 - cfg.pi) * cfg.second_variance)
        h = 1.06 * sd * n ** (-0.2)
    lo, hi = cfg.schedule_bounds
    check = check_schedule(BandwidthSchedule(
        h=h, h_lower=lo, h_upper=hi, rate_exponent_beta=cfg.schedule_beta, n=n
    ))
    if not check.valid:
        logger.warning(f"Bandwidth schedule advisory at n={n}: {'; '.join(check.diagnostics)}")
    return check


def run_experiment(cfg: ExperimentConfig) -> List[TableRow]:
    """One table: for every sample size, replicate, select, and aggregate."""
    rows = []
    logger.info(
        f"Experiment '{cfg.name}': pi={cfg.pi} alpha={cfg.order_alpha} level={cfg.level} "
        f"reps={cfg.replications} sizes={cfg.sample_sizes} seed={cfg.seed}"
    )
    for n in cfg.sample_sizes:
        _advisory_schedule(cfg, n)
        outcomes = run_replications(cfg, n)
        row = aggregate(n, outcomes)
        logger.info(
            f"n={n}: model1={row.pct_model1:.1f}% indecisive={row.pct_indecisive:.1f}% "
            f"model2={row.pct_model2:.1f}% mean_di={row.mean_di:.4f}"
        )
        rows.append(row)
    return rows


def standardized_normality(outcomes: List[ReplicationOutcome]) -> dict:
    """Skewness and excess kurtosis of the standardized indicator across replications."""
    values = np.array([o.standardized for o in outcomes if math.isfinite(o.standardized)])
    if values.size < 3:
        return {"count": int(values.size), "skewness": float("nan"), "excess_kurtosis": float("nan")}
    return {
        "count": int(values.size),
        "mean": float(np.mean(values)),
        "sd": float(np.std(values, ddof=1)),
        "skewness": float(stats.skew(values)),
        "excess_kurtosis": float(stats.kurtosis(values, fisher=True)),
    }
