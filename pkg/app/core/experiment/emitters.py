# app/core/experiment/emitters.py
import json
from typing import List
import numpy as np
import pandas as pd

from app.config import settings
from app.core.density.kde import fit_kde
from app.core.divergence.alpha_divergence import estimate_divergences
from app.core.experiment.config import ExperimentConfig
from app.core.experiment.dgp import replication_rng, sample_mixture
from app.core.experiment.runner import TableRow
from app.exceptions import ConfigError

TABLE_COLUMNS = ["n", "mean_d1", "mean_d2", "mean_di", "pct_model1", "pct_indecisive", "pct_model2"]
FIGURE_COLUMNS = ["block", "x", "x_right", "count", "density", "f1", "f2", "n", "d1", "d2"]
FLOAT_FORMAT = "%.6g"


def _six_digits(value):
    if isinstance(value, float):
        return float(f"{value:.6g}")
    return value


def emit_table(rows: List[TableRow], fmt: str = "csv") -> bytes:
    """Serializes table rows; percentages stay on the 0-100 scale."""
    if not rows:
        raise ConfigError("no table rows to emit")

    fmt = fmt.lower()
    if fmt == "csv":
        df = pd.DataFrame([r.model_dump() for r in rows])[TABLE_COLUMNS]
        return df.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n").encode("utf-8")
    if fmt == "json":
        payload = [{k: _six_digits(v) for k, v in r.model_dump().items()} for r in rows]
        return json.dumps(payload, indent=2).encode("utf-8")
    raise ConfigError(f"unknown table format '{fmt}', expected csv or json")


def emit_figure_data(cfg: ExperimentConfig, n: int) -> bytes:
    """
    Long-format CSV for external plotting, one `block` column per section:
      histogram - bins of one generated sample of size n
      curve     - f1 and f2 on a fixed grid
      series    - D1 and D2 for one sample per configured size
    """
    f1, f2 = cfg.models()
    sample = sample_mixture(cfg.pi, n, replication_rng(cfg.seed, n, 0), second_variance=cfg.second_variance)
    values = sample.values

    # 1. Histogram
    counts, edges = np.histogram(values, bins=settings.FIGURE_BINS)
    widths = np.diff(edges)
    hist = pd.DataFrame({
        "block": "histogram",
        "x": edges[:-1],
        "x_right": edges[1:],
        "count": counts,
        "density": counts / (len(values) * widths),
    })

    # 2. Model curves
    sd_max = max((m.span(1.0)[1] - m.span(1.0)[0]) / 2.0 for m in (f1, f2))
    spread = 4.0 * sd_max
    lo = min(float(values.min()), -spread)
    hi = max(float(values.max()), spread)
    grid = np.linspace(lo, hi, settings.FIGURE_GRID_POINTS)
    curve = pd.DataFrame({
        "block": "curve",
        "x": grid,
        "f1": f1.pdf(grid),
        "f2": f2.pdf(grid),
    })

    # 3. Divergence series over sample sizes
    series_rows = []
    for size in cfg.sample_sizes:
        s = sample_mixture(cfg.pi, size, replication_rng(cfg.seed, size, 0), second_variance=cfg.second_variance)
        fit = fit_kde(s, cfg.kernel, cfg.fixed_bandwidth)
        d1, d2 = estimate_divergences(fit, [f1, f2], cfg.order)
        series_rows.append({"block": "series", "n": size, "d1": d1.value, "d2": d2.value})
    series = pd.DataFrame(series_rows)

    frame = pd.concat([hist, curve, series], ignore_index=True).reindex(columns=FIGURE_COLUMNS)
    frame["count"] = frame["count"].astype("Int64")
    frame["n"] = frame["n"].astype("Int64")
    return frame.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n").encode("utf-8")
