from app.core.ar1.process import Ar1Config, DifferencedSample, simulate_ar1, difference, ar1_variance_diagnostic
from app.core.ar1.densities import m1_density, m2_density
