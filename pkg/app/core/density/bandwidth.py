# app/core/density/bandwidth.py
import math
from typing import List
import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from app.config import settings
from app.core.density.sample import Sample
from app.exceptions import ZeroVarianceError, SampleTooShortError


class BandwidthSchedule(BaseModel):
    """A bandwidth h with its admissible range [h_lower, h_upper] at sample size n."""
    model_config = ConfigDict(frozen=True)

    h: float = Field(gt=0)
    h_lower: float = Field(gt=0)
    h_upper: float = Field(gt=0)
    rate_exponent_beta: float = Field(default=settings.DEFAULT_BETA, gt=0, lt=1)
    n: int = Field(gt=0)

    @property
    def rate_term(self) -> float:
        return (self.n * self.h) ** (1.0 - self.rate_exponent_beta)


class ScheduleCheck(BaseModel):
    valid: bool
    rate_term: float
    log_n: float
    diagnostics: List[str] = []


def bandwidth_silverman(sample: Sample) -> float:
    """
    Silverman's rule of thumb: h = 1.06 * sd * n^(-1/5).
    """
    n = len(sample)
    if n < 2:
        raise SampleTooShortError(f"bandwidth needs at least 2 observations, got {n}")

    sd = float(np.std(sample.values, ddof=1))
    if not sd > 0:
        raise ZeroVarianceError()
    return 1.06 * sd * n ** (-0.2)


def check_schedule(sched: BandwidthSchedule) -> ScheduleCheck:
    """
    Advisory check of the consistency rate conditions:
    h_lower <= h <= h_upper and (n h)^(1 - beta) > log(n).
    """
    diagnostics = []
    if sched.h < sched.h_lower:
        diagnostics.append(f"h={sched.h:.6g} below h_lower={sched.h_lower:.6g}")
    if sched.h > sched.h_upper:
        diagnostics.append(f"h={sched.h:.6g} above h_upper={sched.h_upper:.6g}")
    if sched.h_lower > sched.h_upper:
        diagnostics.append(f"empty range: h_lower={sched.h_lower:.6g} > h_upper={sched.h_upper:.6g}")

    rate = sched.rate_term
    log_n = math.log(sched.n)
    if not (math.isfinite(rate) and rate > log_n):
        diagnostics.append(
            f"rate condition fails: (n*h)^(1-beta)={rate:.6g} <= log(n)={log_n:.6g}"
        )

    return ScheduleCheck(valid=not diagnostics, rate_term=rate, log_n=log_n, diagnostics=diagnostics)
