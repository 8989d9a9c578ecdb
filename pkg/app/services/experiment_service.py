# app/services/experiment_service.py
import os
from typing import List, Optional
import numpy as np

from app.config import settings
from app.core.ar1.densities import m1_density, m2_density
from app.core.ar1.process import Ar1Config, ar1_variance_diagnostic, difference, simulate_ar1
from app.core.density.kernels import KernelSpec
from app.core.density.sample import Sample
from app.core.divergence.alpha_divergence import DivergenceEstimate, DivergenceOrder, estimate_divergence
from app.core.experiment.config import ExperimentConfig, ModelSpec
from app.core.experiment.emitters import emit_figure_data, emit_table
from app.core.experiment.runner import TableRow, run_experiment, run_replications, standardized_normality
from app.core.inference.model_selection import SelectionResult, model_select
from app.exceptions import ConfigError
from app.logger import logger


class ExperimentService:
    """Glue between the numerical core and the CLI / HTTP surfaces."""

    def _write(self, payload: bytes, out_path: Optional[str]) -> Optional[str]:
        if not out_path:
            return None
        if not os.path.isabs(out_path) and os.path.dirname(out_path) == "":
            os.makedirs(settings.OUTPUT_DIR, exist_ok=True)
            out_path = os.path.join(settings.OUTPUT_DIR, out_path)
        else:
            os.makedirs(os.path.dirname(os.path.abspath(out_path)), exist_ok=True)
        with open(out_path, "wb") as f:
            f.write(payload)
        logger.info(f"Wrote {len(payload)} bytes to {out_path}")
        return out_path

    def run_table(self, cfg: ExperimentConfig, fmt: str = "csv", out_path: Optional[str] = None):
        """Runs one table and returns (rows, serialized bytes, written path)."""
        rows: List[TableRow] = run_experiment(cfg)
        payload = emit_table(rows, fmt)
        return rows, payload, self._write(payload, out_path)

    def normality(self, cfg: ExperimentConfig, n: int) -> dict:
        return standardized_normality(run_replications(cfg, n))

    def figure(self, cfg: ExperimentConfig, n: int, out_path: Optional[str] = None):
        payload = emit_figure_data(cfg, n)
        return payload, self._write(payload, out_path)

    def divergence(self, dgp: ModelSpec, model: ModelSpec, n: int, order: DivergenceOrder, seed: int,
                   convention: str = "variance", kernel: KernelSpec = None,
                   bandwidth: float = None) -> DivergenceEstimate:
        """Draws n points from the DGP and returns the plug-in estimate against the model."""
        if seed < 0:
            raise ConfigError(f"seed must be a non-negative integer, got {seed}")
        rng = np.random.default_rng(seed)
        values = dgp.build(convention).sample(n, rng)
        sample = Sample(values, seed=seed, dgp=dgp.family)
        return estimate_divergence(sample, model.build(convention), order, kernel, bandwidth)

    def ar1(self, cfg: Ar1Config, select: bool = False, alt_phi: Optional[float] = None,
            order: DivergenceOrder = None, level: float = settings.DEFAULT_LEVEL) -> dict:
        """Simulates the path, differences it, and optionally runs the M1 vs M2 selection."""
        path = simulate_ar1(cfg)
        w = difference(path).w
        result = {
            "config": cfg.model_dump(),
            "path": path.values.tolist(),
            "w": w.values.tolist(),
            "diagnostic": ar1_variance_diagnostic(cfg),
        }
        if select:
            phi2 = alt_phi if alt_phi is not None else (cfg.phi if abs(cfg.phi) < 1 else 0.0)
            selection: SelectionResult = model_select(
                w, m1_density(cfg.sigma2), m2_density(cfg.sigma2, phi2),
                order or DivergenceOrder(), level=level
            )
            result["m2_phi"] = phi2
            result["selection"] = selection.model_dump(mode="json")
        return result
