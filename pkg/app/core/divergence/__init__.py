from app.core.divergence.models import (
    DensityModel, GaussianShaped, GaussianModel, MixtureModel, KdeModel,
    Ar1M1Model, Ar1M2Model, mixture_dgp
)
from app.core.divergence.quadrature import QuadratureInfo, build_grid
from app.core.divergence.alpha_divergence import (
    DivergenceKind, DivergenceOrder, DivergenceEstimate,
    alpha_divergence, renyi_divergence, alpha_from_renyi,
    estimate_divergence, estimate_divergences
)
from app.core.divergence.oracle import gaussian_renyi_oracle, gaussian_alpha_oracle, bhattacharyya_coefficient
