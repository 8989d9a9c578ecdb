import math

import numpy as np
import pytest
from scipy import stats

from app.core.density.sample import Sample
from app.core.divergence.alpha_divergence import DivergenceOrder
from app.core.divergence.models import GaussianModel, mixture_dgp
from app.core.inference.goodness_of_fit import gof_decision, gof_test
from app.core.inference.model_selection import Decision, decide, model_select
from app.core.inference.variance import (
    VarianceFormula, estimate_gamma_integrated, gamma_from_influence, pointwise_gamma, pointwise_sigma_j
)
from app.exceptions import ConfigError, DensityVanishesError


@pytest.fixture
def big_normal_sample():
    rng = np.random.default_rng(31337)
    return Sample(rng.normal(0.0, 1.0, size=2000), seed=31337, dgp="N(0,1)")


# --- Goodness of fit ---

def test_gof_boundary_rejects():
    threshold = gof_decision(0.0, 0.05, 0.2).threshold
    assert threshold == pytest.approx(stats.norm.ppf(0.95) * 0.2)
    assert gof_decision(threshold, 0.05, 0.2).reject
    assert not gof_decision(threshold - 1e-9, 0.05, 0.2).reject


@pytest.mark.parametrize("level", [0.0, 1.0, -0.1, 1.5])
def test_gof_level_out_of_range(level):
    with pytest.raises(ConfigError):
        gof_decision(0.1, level, 1.0)


def test_gof_needs_positive_scale():
    with pytest.raises(ConfigError):
        gof_decision(0.1, 0.05, 0.0)


def test_gof_true_model_not_rejected(big_normal_sample, std_normal, half):
    result = gof_test(big_normal_sample, std_normal, half, level=0.05, scale_sigma=0.1)
    assert not result.reject
    assert result.statistic < result.threshold


def test_gof_wrong_model_rejected(std_normal, half):
    rng = np.random.default_rng(4)
    wide = Sample(rng.normal(0.0, math.sqrt(2.0), size=2000))
    result = gof_test(wide, std_normal, half, level=0.05, scale_sigma=0.01)
    assert result.reject
    assert result.statistic > 0.05


# --- Pointwise variances ---

def test_pointwise_sigma_j(std_normal, normal_var2, half):
    v = pointwise_sigma_j(std_normal, normal_var2, half, x=0.0, sigma2_x=1.0)
    assert v.formula == VarianceFormula.SIGMA_J
    assert v.value == pytest.approx(1.0 / math.pi, rel=1e-12)


def test_pointwise_gamma(std_normal, normal_var2, half):
    v = pointwise_gamma(std_normal, std_normal, normal_var2, half, x=0.0, sigma2_x=1.0)
    expected = 4.0 * (1.0 - 2.0 ** -0.25) ** 4 / (2.0 * math.pi)
    assert v.formula == VarianceFormula.GAMMA
    assert v.value == pytest.approx(expected, rel=1e-12)


def test_pointwise_gamma_matches_binomial_expansion():
    rng = np.random.default_rng(100)
    for _ in range(100):
        f = GaussianModel(0.0, 1.0)
        f1 = GaussianModel(rng.uniform(-1, 1), rng.uniform(0.5, 2.0))
        f2 = GaussianModel(rng.uniform(-1, 1), rng.uniform(0.5, 2.0))
        a = rng.uniform(0.1, 0.9)
        x = rng.uniform(-1.5, 1.5)
        s2 = rng.uniform(0.1, 3.0)

        fx = stats.norm.pdf(x)
        u = (stats.norm.pdf(x, f1.mean, math.sqrt(f1.variance)) / fx) ** (1.0 - a)
        v = (stats.norm.pdf(x, f2.mean, math.sqrt(f2.variance)) / fx) ** (1.0 - a)
        fourth = sum(math.comb(4, k) * u ** (4 - k) * (-v) ** k for k in range(5))
        expected = fourth * fx ** 2 * s2 / (1.0 - a) ** 2

        value = pointwise_gamma(f, f1, f2, DivergenceOrder(alpha=a), x=x, sigma2_x=s2).value
        assert value == pytest.approx(expected, rel=1e-9, abs=1e-12)


def test_pointwise_gamma_same_models_is_zero(std_normal, half):
    assert pointwise_gamma(std_normal, std_normal, std_normal, half, x=0.7, sigma2_x=2.0).value == 0.0


def test_pointwise_density_vanishes(std_normal, normal_var2, half):
    with pytest.raises(DensityVanishesError):
        pointwise_sigma_j(std_normal, normal_var2, half, x=1e4, sigma2_x=1.0)


# --- Gamma estimate ---

def test_gamma_permutation_invariant(normal_sample, std_normal, normal_var2, half):
    g = estimate_gamma_integrated(normal_sample, std_normal, normal_var2, half)
    g_perm = estimate_gamma_integrated(normal_sample.permuted(np.random.default_rng(1)), std_normal, normal_var2, half)
    assert g > 0
    assert g_perm == pytest.approx(g, rel=1e-9)


def test_gamma_uses_unbiased_variance():
    psi = np.array([1.0, 2.0, 3.0, 4.0])
    assert gamma_from_influence(psi) == pytest.approx(np.var(psi, ddof=1))
    assert gamma_from_influence(np.array([5.0])) == 0.0


# --- Decision rule ---

def test_decide_band():
    crit = stats.norm.ppf(0.975)
    assert decide(crit, 1.0, 0.05) == Decision.INDECISIVE
    assert decide(-crit - 1e-6, 1.0, 0.05) == Decision.MODEL1
    assert decide(crit + 1e-6, 1.0, 0.05) == Decision.MODEL2
    assert decide(0.0, 0.0, 0.05) == Decision.INDECISIVE


def test_selection_picks_true_model(big_normal_sample, std_normal, normal_var2, half):
    result = model_select(big_normal_sample, std_normal, normal_var2, half, level=0.05)
    assert result.decision == Decision.MODEL1
    assert result.di_raw < 0
    assert result.di_scaled == pytest.approx(math.sqrt(result.n * result.bandwidth) * result.di_raw)
    assert result.variance_estimate > 0
    assert result.n == 2000


def test_selection_antisymmetry(normal_sample, std_normal, normal_var2, half):
    a = model_select(normal_sample, std_normal, normal_var2, half)
    b = model_select(normal_sample, normal_var2, std_normal, half)
    assert b.di_raw == -a.di_raw
    assert b.di_scaled == -a.di_scaled
    assert b.variance_estimate == pytest.approx(a.variance_estimate, rel=1e-12)
    assert b.decision == a.decision.swapped()


def test_selection_identical_models(normal_sample, std_normal, half):
    result = model_select(normal_sample, std_normal, std_normal, half)
    assert result.di_raw == 0.0
    assert result.variance_estimate == 0.0
    assert result.standardized == 0.0
    assert result.decision == Decision.INDECISIVE


def test_selection_with_mixture_candidate(normal_sample, std_normal, half):
    result = model_select(normal_sample, std_normal, mixture_dgp(0.5), half)
    assert math.isfinite(result.d2)
    assert result.decision in set(Decision)


def test_selection_level_checked(normal_sample, std_normal, normal_var2, half):
    with pytest.raises(ConfigError):
        model_select(normal_sample, std_normal, normal_var2, half, level=1.0)
