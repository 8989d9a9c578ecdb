from app.core.inference.goodness_of_fit import GofResult, gof_test, gof_decision
from app.core.inference.variance import (
    VarianceFormula, PointwiseVariance, pointwise_sigma_j, pointwise_gamma,
    influence_values, estimate_gamma_integrated
)
from app.core.inference.model_selection import Decision, SelectionResult, decide, model_select
