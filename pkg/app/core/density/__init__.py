from app.core.density.sample import Sample
from app.core.density.kernels import KernelFamily, KernelSpec, kernel_eval, check_kernel_conditions
from app.core.density.kde import KdeFit, fit_kde, kde_evaluate, kde_normalization
from app.core.density.bandwidth import BandwidthSchedule, bandwidth_silverman, check_schedule
