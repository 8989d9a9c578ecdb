# app/core/density/kernels.py
from enum import Enum
from typing import List, Union
import numpy as np
from pydantic import BaseModel, ConfigDict
from scipy import integrate

SQRT_2PI = np.sqrt(2 * np.pi)


class KernelFamily(str, Enum):
    GAUSSIAN = "gaussian"
    EPANECHNIKOV = "epanechnikov"
    UNIFORM = "uniform"


class KernelSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    family: KernelFamily = KernelFamily.GAUSSIAN

    @property
    def support_radius(self) -> float:
        if self.family == KernelFamily.GAUSSIAN:
            return float("inf")
        return 1.0

    @property
    def is_compact(self) -> bool:
        return np.isfinite(self.support_radius)


class KernelConditionReport(BaseModel):
    family: KernelFamily
    integral: float
    sup_abs: float
    min_value: float
    total_variation: float
    integrates_to_one: bool
    bounded: bool
    nonnegative: bool
    bounded_variation: bool
    diagnostics: List[str] = []

    @property
    def valid(self) -> bool:
        return self.integrates_to_one and self.bounded and self.nonnegative and self.bounded_variation


def kernel_eval(spec: KernelSpec, t: Union[float, np.ndarray]):
    """
    Evaluates K(t). Scalars in, float out; arrays in, arrays out.
    Compact kernels are 0 outside [-1, 1].
    """
    u = np.asarray(t, dtype=float)

    if spec.family == KernelFamily.GAUSSIAN:
        out = np.exp(-0.5 * u * u) / SQRT_2PI
    elif spec.family == KernelFamily.EPANECHNIKOV:
        out = np.where(np.abs(u) <= 1.0, 0.75 * (1.0 - u * u), 0.0)
    else:
        out = np.where(np.abs(u) <= 1.0, 0.5, 0.0)

    if np.ndim(out) == 0:
        return float(out)
    return out


def check_kernel_conditions(spec: KernelSpec, points: int = 20001, tol: float = 1e-6) -> KernelConditionReport:
    """
    Dense-grid checks of the kernel regularity conditions:
    unit integral, finite supremum, nonnegativity and bounded variation.
    Entropy and measurability conditions have no runtime check.
    """
    radius = spec.support_radius if spec.is_compact else 12.0
    # Straddle the support edge so jumps of compact kernels are seen
    grid = np.linspace(-radius - 0.5, radius + 0.5, points)
    values = kernel_eval(spec, grid)

    integral = float(integrate.trapezoid(values, grid))
    sup_abs = float(np.max(np.abs(values)))
    min_value = float(np.min(values))
    total_variation = float(np.sum(np.abs(np.diff(values))))

    # Trapezoid on a discontinuous kernel is exact only up to one cell
    int_tol = tol if not spec.is_compact else max(tol, 2 * sup_abs * (grid[1] - grid[0]))

    report = KernelConditionReport(
        family=spec.family,
        integral=integral,
        sup_abs=sup_abs,
        min_value=min_value,
        total_variation=total_variation,
        integrates_to_one=bool(abs(integral - 1.0) <= int_tol),
        bounded=bool(np.isfinite(sup_abs)),
        nonnegative=bool(min_value >= 0.0),
        bounded_variation=bool(np.isfinite(total_variation)),
    )
    if not report.integrates_to_one:
        report.diagnostics.append(f"integral {integral:.8f} differs from 1")
    if not report.nonnegative:
        report.diagnostics.append(f"kernel takes negative value {min_value}")
    return report
