import math

import numpy as np
import pytest

from app.core.density.kernels import KernelFamily, KernelSpec
from app.core.density.sample import Sample
from app.core.divergence.alpha_divergence import (
    DivergenceEstimate, DivergenceKind, DivergenceOrder,
    alpha_divergence, alpha_from_renyi, estimate_divergence, renyi_divergence
)
from app.core.divergence.models import GaussianModel, MixtureModel, mixture_dgp
from app.core.divergence.oracle import bhattacharyya_coefficient, gaussian_alpha_oracle, gaussian_renyi_oracle
from app.core.divergence.quadrature import build_grid
from app.exceptions import ConfigError, IntegralDivergedError, InvalidOrderError

D_HALF_N01_N02 = 4.0 * (1.0 - math.sqrt(2.0 * math.sqrt(2.0) / 3.0))
ORDERS = (0.25, 0.5, 0.75)


# --- Order ---

@pytest.mark.parametrize("alpha", [0.0, 1.0, float("nan")])
def test_order_rejects_degenerate(alpha):
    with pytest.raises(InvalidOrderError):
        DivergenceOrder(alpha=alpha)


def test_order_outside_unit_interval_needs_unchecked():
    with pytest.raises(InvalidOrderError):
        DivergenceOrder(alpha=1.5)
    assert DivergenceOrder(alpha=1.5, unchecked=True).alpha == 1.5


def test_invalid_order_is_config_error():
    with pytest.raises(ConfigError):
        DivergenceOrder(alpha=0.0)


# --- Exact divergences between known densities ---

def test_alpha_divergence_pinned(std_normal, normal_var2, half):
    est = alpha_divergence(std_normal, normal_var2, half)
    assert est.kind == DivergenceKind.ALPHA
    assert est.n == 0
    assert est.value == pytest.approx(D_HALF_N01_N02, abs=1e-8)
    assert est.value == pytest.approx(0.1160658, abs=1e-6)


def test_renyi_pinned(std_normal, normal_var2, half):
    est = renyi_divergence(std_normal, normal_var2, half)
    assert est.kind == DivergenceKind.RENYI
    assert est.value == pytest.approx(0.0588915, abs=1e-6)
    assert est.value == pytest.approx(-2.0 * math.log(bhattacharyya_coefficient(std_normal, normal_var2)), abs=1e-9)


def test_renyi_variance_four(std_normal, half):
    est = renyi_divergence(std_normal, GaussianModel(0.0, 4.0), half)
    assert est.value == pytest.approx(-math.log(0.8), abs=1e-8)


def test_divergence_of_model_with_itself(std_normal, half):
    assert alpha_divergence(std_normal, std_normal, half).value == pytest.approx(0.0, abs=1e-10)
    assert renyi_divergence(std_normal, std_normal, half).value == pytest.approx(0.0, abs=1e-10)


def test_symmetry_at_one_half(half):
    p, q = GaussianModel(0.3, 1.2), GaussianModel(-1.0, 3.0)
    assert alpha_divergence(p, q, half).value == pytest.approx(alpha_divergence(q, p, half).value, abs=1e-10)


def _random_pair(rng):
    p = GaussianModel(rng.uniform(-3, 3), rng.uniform(0.25, 9.0))
    q = GaussianModel(rng.uniform(-3, 3), rng.uniform(0.25, 9.0))
    return p, q


def test_renyi_identity_round_trip():
    rng = np.random.default_rng(11)
    for _ in range(50):
        p, q = _random_pair(rng)
        for alpha in ORDERS:
            order = DivergenceOrder(alpha=alpha)
            mapped = alpha_from_renyi(renyi_divergence(p, q, order))
            assert mapped.kind == DivergenceKind.ALPHA
            assert mapped.value == pytest.approx(alpha_divergence(p, q, order).value, rel=1e-10, abs=1e-12)


def test_renyi_identity_conventions(half):
    r = DivergenceEstimate(kind=DivergenceKind.RENYI, order=half, value=1.0)
    assert alpha_from_renyi(r).value == pytest.approx(4.0 * (1.0 - math.exp(-0.5)))
    assert alpha_from_renyi(r, convention="literal").value == pytest.approx(4.0 * (1.0 - math.exp(-0.25)))


def test_renyi_identity_rejects_bad_input(half):
    alpha_est = DivergenceEstimate(kind=DivergenceKind.ALPHA, order=half, value=0.1)
    with pytest.raises(ConfigError):
        alpha_from_renyi(alpha_est)
    r = DivergenceEstimate(kind=DivergenceKind.RENYI, order=half, value=0.1)
    with pytest.raises(ConfigError):
        alpha_from_renyi(r, convention="other")


def test_quadrature_matches_closed_form_on_random_pairs():
    rng = np.random.default_rng(7)
    for _ in range(50):
        p, q = _random_pair(rng)
        for alpha in ORDERS:
            order = DivergenceOrder(alpha=alpha)
            r = renyi_divergence(p, q, order).value
            d = alpha_divergence(p, q, order).value
            assert abs(r - gaussian_renyi_oracle(p, q, order)) < 1e-6
            assert abs(d - gaussian_alpha_oracle(p, q, order)) < 1e-6


def test_oracle_equal_variances_has_no_log_term(half):
    p, q = GaussianModel(0.0, 2.0), GaussianModel(1.0, 2.0)
    # alpha (mu_p - mu_q)^2 / (2 sigma^2)
    assert gaussian_renyi_oracle(p, q, half) == pytest.approx(0.5 / 4.0)
    assert gaussian_renyi_oracle(p, p, half) == 0.0


def test_oracle_needs_gaussians(std_normal, half):
    with pytest.raises(ConfigError):
        gaussian_renyi_oracle(std_normal, mixture_dgp(0.5), half)


# --- Orders below zero ---

def test_negative_order_between_gaussians_matches_closed_form():
    order = DivergenceOrder(alpha=-0.5, unchecked=True)
    p, q = GaussianModel(0.0, 1.0), GaussianModel(0.0, 1.5)
    d = alpha_divergence(p, q, order).value
    assert d > 0
    assert abs(d - gaussian_alpha_oracle(p, q, order)) < 1e-6


def test_negative_order_plug_in_diverges(std_normal):
    order = DivergenceOrder(alpha=-0.5, unchecked=True)
    sample = Sample(np.random.default_rng(5).normal(size=200))
    with pytest.raises(IntegralDivergedError):
        estimate_divergence(sample, std_normal, order)


def test_negative_order_with_compact_kernel_diverges(std_normal):
    # the kernel estimate is exactly zero outside the sample range while N(0,1) is not
    order = DivergenceOrder(alpha=-0.5, unchecked=True)
    sample = Sample(np.random.default_rng(5).normal(size=200))
    with pytest.raises(IntegralDivergedError):
        estimate_divergence(sample, std_normal, order, kernel=KernelSpec(family=KernelFamily.EPANECHNIKOV))


# --- Quadrature grid ---

def test_grid_widens_for_wide_models():
    grid = build_grid(GaussianModel(3.0, 9.0))
    assert grid[0] == pytest.approx(3.0 - 12.0 * 3.0)
    assert grid[-1] == pytest.approx(3.0 + 12.0 * 3.0)
    assert grid.size % 2 == 1


def test_mixture_degenerate_weights(std_normal, normal_var2):
    x = np.linspace(-3, 3, 7)
    np.testing.assert_allclose(mixture_dgp(1.0).pdf(x), std_normal.pdf(x), rtol=1e-12)
    np.testing.assert_allclose(mixture_dgp(0.0).pdf(x), normal_var2.pdf(x), rtol=1e-12)
    with pytest.raises(ConfigError):
        MixtureModel(weight=1.2, comp1=std_normal, comp2=normal_var2)


# --- Plug-in estimates ---

def test_plug_in_estimates_near_tabulated_values(std_normal, normal_var2, half):
    rng = np.random.default_rng(2000)
    sample = Sample(rng.normal(0.0, 1.0, size=2000), dgp="N(0,1)")

    d1 = estimate_divergence(sample, std_normal, half)
    d2 = estimate_divergence(sample, normal_var2, half)
    assert d1.n == 2000
    assert d1.bandwidth > 0
    assert abs(d1.value) < 0.05
    assert d2.value == pytest.approx(D_HALF_N01_N02, abs=0.04)

    wide = Sample(rng.normal(0.0, math.sqrt(2.0), size=2000), dgp="N(0,2)")
    assert abs(estimate_divergence(wide, normal_var2, half).value) < 0.05


@pytest.mark.slow
def test_plug_in_consistency(std_normal, half):
    medians = []
    for n in (100, 500, 2000):
        values = []
        for r in range(50):
            rng = np.random.default_rng([99, n, r])
            sample = Sample(rng.normal(0.0, 1.0, size=n))
            values.append(abs(estimate_divergence(sample, std_normal, half).value))
        medians.append(float(np.median(values)))

    assert medians[0] > medians[1] > medians[2]
    assert medians[2] <= 0.05
