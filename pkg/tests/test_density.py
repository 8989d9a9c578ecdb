import math
import warnings

import numpy as np
import pytest

from app.core.density.bandwidth import BandwidthSchedule, bandwidth_silverman, check_schedule
from app.core.density.kde import fit_kde, kde_evaluate, kde_normalization
from app.core.density.kernels import KernelFamily, KernelSpec, check_kernel_conditions, kernel_eval
from app.core.density.sample import Sample
from app.exceptions import EmptySampleError, SampleTooShortError, ZeroVarianceError, ConfigError


# --- Kernels ---

def test_kernel_values():
    gauss = KernelSpec()
    epan = KernelSpec(family=KernelFamily.EPANECHNIKOV)
    unif = KernelSpec(family="uniform")

    assert kernel_eval(gauss, 0.0) == pytest.approx(1.0 / math.sqrt(2 * math.pi))
    assert kernel_eval(epan, 0.5) == pytest.approx(0.5625)
    assert kernel_eval(epan, 1.5) == 0.0
    assert kernel_eval(unif, 1.0) == 0.5
    assert kernel_eval(unif, -1.0001) == 0.0


def test_kernel_eval_shapes():
    out = kernel_eval(KernelSpec(), np.zeros((3, 4)))
    assert isinstance(out, np.ndarray)
    assert out.shape == (3, 4)
    assert isinstance(kernel_eval(KernelSpec(), 0.3), float)


@pytest.mark.parametrize("family", list(KernelFamily))
def test_kernel_conditions_hold(family):
    report = check_kernel_conditions(KernelSpec(family=family))
    assert report.valid, report.diagnostics
    assert report.integral == pytest.approx(1.0, abs=1e-3)
    assert report.min_value >= 0.0


def test_kernel_conditions_report_plain_flags():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        report = check_kernel_conditions(KernelSpec(family=KernelFamily.UNIFORM))
    assert type(report.integrates_to_one) is bool
    assert type(report.nonnegative) is bool


def test_support_radius():
    assert KernelSpec().support_radius == float("inf")
    assert not KernelSpec().is_compact
    assert KernelSpec(family="epanechnikov").support_radius == 1.0


# --- Sample ---

def test_sample_is_read_only():
    s = Sample([1.0, 2.0, 3.0])
    with pytest.raises(ValueError):
        s.values[0] = 10.0
    assert len(s) == 3
    assert s.n == 3


def test_sample_copies_input():
    raw = np.array([1.0, 2.0])
    s = Sample(raw)
    raw[0] = 99.0
    assert s.values[0] == 1.0


def test_empty_sample():
    with pytest.raises(EmptySampleError):
        Sample([]).require_nonempty()
    with pytest.raises(EmptySampleError):
        fit_kde(Sample([]), bandwidth=0.5)


# --- Kernel density estimate ---

def _brute_force(values, kernel, h, x):
    total = 0.0
    for w in values:
        total += kernel_eval(kernel, (w - x) / h)
    return total / (len(values) * h)


@pytest.mark.parametrize("family", list(KernelFamily))
def test_kde_matches_brute_force(normal_sample, family):
    kernel = KernelSpec(family=family)
    fit = fit_kde(normal_sample, kernel, bandwidth=0.35)
    for x in (-2.5, -0.4, 0.0, 0.77, 3.1):
        assert kde_evaluate(fit, x) == pytest.approx(_brute_force(normal_sample.values, kernel, 0.35, x), abs=1e-12)


def test_kde_chunked_evaluation_matches_single_block(normal_sample, monkeypatch):
    from app.config import settings

    fit = fit_kde(normal_sample, bandwidth=0.3)
    grid = np.linspace(-4, 4, 3001)
    blocked = kde_evaluate(fit, grid)
    monkeypatch.setattr(settings, "KDE_CHUNK_SIZE", 10000)
    whole = kde_evaluate(fit, grid)
    np.testing.assert_allclose(blocked, whole, rtol=0, atol=1e-14)


@pytest.mark.parametrize("family", [KernelFamily.GAUSSIAN, KernelFamily.EPANECHNIKOV])
def test_kde_normalization(normal_sample, family):
    fit = fit_kde(normal_sample, KernelSpec(family=family))
    assert kde_normalization(fit) == pytest.approx(1.0, abs=1e-4)


def test_kde_nonnegative(normal_sample):
    fit = fit_kde(normal_sample, KernelSpec(family="epanechnikov"), bandwidth=0.2)
    grid = np.linspace(-8, 8, 2001)
    assert np.all(kde_evaluate(fit, grid) >= 0.0)


def test_kde_location_equivariance(normal_sample):
    c = 3.7
    base = fit_kde(normal_sample, bandwidth=0.4)
    moved = fit_kde(normal_sample.shifted(c), bandwidth=0.4)
    grid = np.linspace(-3, 3, 61)
    np.testing.assert_allclose(kde_evaluate(moved, grid + c), kde_evaluate(base, grid), atol=1e-12)


def test_kde_rejects_bad_bandwidth(normal_sample):
    with pytest.raises(ConfigError):
        fit_kde(normal_sample, bandwidth=0.0)
    with pytest.raises(ConfigError):
        fit_kde(normal_sample, bandwidth=float("nan"))


# --- Bandwidth ---

def test_silverman_formula(normal_sample):
    n = len(normal_sample)
    expected = 1.06 * np.std(normal_sample.values, ddof=1) * n ** (-0.2)
    assert bandwidth_silverman(normal_sample) == pytest.approx(expected)


def test_silverman_scale_and_shift(normal_sample):
    h = bandwidth_silverman(normal_sample)
    assert bandwidth_silverman(normal_sample.scaled(3.0)) == pytest.approx(3.0 * h)
    assert bandwidth_silverman(normal_sample.shifted(-50.0)) == pytest.approx(h)


def test_silverman_degenerate_samples():
    with pytest.raises(ZeroVarianceError):
        bandwidth_silverman(Sample([2.0, 2.0, 2.0]))
    with pytest.raises(SampleTooShortError):
        bandwidth_silverman(Sample([1.0]))


def test_schedule_valid():
    check = check_schedule(BandwidthSchedule(h=0.2, h_lower=0.01, h_upper=1.0, rate_exponent_beta=0.5, n=1000))
    assert check.valid
    assert check.rate_term == pytest.approx(math.sqrt(200.0))
    assert check.log_n == pytest.approx(math.log(1000))


def test_schedule_rate_failure():
    check = check_schedule(BandwidthSchedule(h=0.01, h_lower=0.001, h_upper=1.0, rate_exponent_beta=0.9, n=10))
    assert not check.valid
    assert any("rate condition" in d for d in check.diagnostics)


def test_schedule_out_of_range():
    check = check_schedule(BandwidthSchedule(h=2.0, h_lower=0.01, h_upper=1.0, n=10000))
    assert not check.valid
    assert any("above h_upper" in d for d in check.diagnostics)
