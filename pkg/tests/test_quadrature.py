import math
import warnings

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate as sci

from qdistance.integrate import ConvergenceError, PrecisionWarning
from qdistance.quadrature import (
    QuadratureSpec,
    ds_dt_from_limits,
    ds_dt_quadrature,
    log_grid,
    sweep,
    truncation_limits,
    truncation_study,
)

FIG1_BETAS = (0.01, 0.1, 0.990, 0.999)


def scipy_ds_dt(x, beta, n_sigma=3.0):
    """The truncated integral written out literally, integrated by QUADPACK."""
    rho0 = beta / math.sqrt(x)
    cutoff = 1 / math.sqrt(x)
    half = n_sigma / math.sqrt(2)
    xi1 = min(cutoff, max(0.0, rho0 - half))
    xi2 = min(cutoff, rho0 + half)
    xi3 = min(cutoff, max(0.0, -rho0 + half))

    def w(r):
        return math.sqrt(max(0.0, 1 - x * r * r))

    first = sci.quad(lambda r: math.exp(-(r - rho0) ** 2) * w(r) * r, xi1, xi2,
                     epsabs=0, epsrel=1e-12, limit=500)[0]
    second = 0.0
    if xi3 > 0:
        second = sci.quad(lambda r: math.exp(-(r + rho0) ** 2) * w(r) * r, 0, xi3,
                          epsabs=0, epsrel=1e-12, limit=500)[0]
    return math.sqrt(x / math.pi) / beta * (first - second)


def quiet(x, beta, spec=None):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", PrecisionWarning)
        return ds_dt_quadrature(x, beta, spec)


def test_spec_validation():
    with pytest.raises(ValueError):
        QuadratureSpec(rel_tol=0)
    with pytest.raises(ValueError):
        QuadratureSpec(abs_tol=-1)
    with pytest.raises(ValueError):
        QuadratureSpec(n_sigma=0)
    with pytest.raises(ValueError):
        QuadratureSpec(max_subdivisions=0)


def test_limits_cutoff_binds():
    lim = truncation_limits(1.0, 0.5, 3)
    assert lim.rho0 == pytest.approx(0.5)
    assert lim.xi1 == 0
    assert lim.xi2 == 1
    assert lim.xi3 == 1
    assert lim.cutoff == 1


def test_limits_classical_regime():
    lim = truncation_limits(1e-8, 0.1, 3)
    assert lim.rho0 == pytest.approx(1000, rel=1e-14)
    assert lim.xi1 == pytest.approx(1000 - 3 / math.sqrt(2), rel=1e-14)
    assert lim.xi2 == pytest.approx(1000 + 3 / math.sqrt(2), rel=1e-14)
    assert lim.xi3 == 0


def test_zero_width_window():
    lim = truncation_limits(0.3, 0.4, 0)
    assert lim.xi1 == lim.xi2 == lim.rho0
    assert lim.xi3 == 0
    assert ds_dt_from_limits(0.3, 0.4, lim) == (0.0, 0.0)


@settings(max_examples=200, deadline=None)
@given(st.floats(1e-10, 1e6), st.floats(1e-3, 0.999), st.floats(0.0, 10.0))
def test_limit_invariants(x, beta, n_sigma):
    lim = truncation_limits(x, beta, n_sigma)
    assert 0 <= lim.xi1 <= lim.xi2 <= lim.cutoff
    assert 0 <= lim.xi3 <= lim.cutoff
    assert lim.cutoff == pytest.approx(lim.rho0 / beta)
    if lim.rho0 > n_sigma / math.sqrt(2):
        assert lim.xi3 == 0


def test_classical_example_small_beta():
    # stated example: 0.994987 within 1e-6.  The three-sigma window keeps
    # only erf(3/sqrt 2) = 99.73% of the Gaussian weight.
    assert ds_dt_quadrature(1e-8, 0.1) == pytest.approx(0.994987, abs=1e-6)


def test_classical_example_high_beta():
    assert ds_dt_quadrature(1e-8, 0.999) == pytest.approx(math.sqrt(1 - 0.999 ** 2), abs=1e-4)


@pytest.mark.parametrize("beta", [0.01, 0.1, 0.5])
@pytest.mark.parametrize("n_sigma", [1, 2, 3, 4])
def test_window_weight_in_classical_regime(beta, n_sigma):
    # far from the cutoff the root is ~constant and the window integrates
    # rho e^{-(rho - rho0)^2} to rho0 sqrt(pi) erf(n/sqrt 2)
    value = ds_dt_quadrature(1e-8, beta, QuadratureSpec(n_sigma=n_sigma))
    expected = math.sqrt(1 - beta ** 2) * math.erf(n_sigma / math.sqrt(2))
    assert value == pytest.approx(expected, rel=1e-7)


@pytest.mark.parametrize("beta", FIG1_BETAS)
def test_wide_window_recovers_classical_value(beta):
    spec = QuadratureSpec(rel_tol=1e-12, abs_tol=1e-15, n_sigma=12)
    value = ds_dt_quadrature(1e-8, beta, spec)
    assert value == pytest.approx(scipy_ds_dt(1e-8, beta, 12), rel=1e-9)
    # what remains is the finite-x correction, which grows like
    # x / (1 - beta^2)^{3/2}: ~1e-9 at beta = 0.1, ~3e-5 at beta = 0.999
    assert value == pytest.approx(math.sqrt(1 - beta ** 2), abs=1e-4)
    if beta <= 0.1:
        assert value == pytest.approx(math.sqrt(1 - beta ** 2), abs=1e-7)


@pytest.mark.parametrize("x", [1e-6, 1e-3, 0.1, 1.0, 3.0, 50.0, 1e4])
@pytest.mark.parametrize("beta", FIG1_BETAS + (0.5,))
@pytest.mark.parametrize("n_sigma", [1, 3, 4])
def test_against_scipy(x, beta, n_sigma):
    spec = QuadratureSpec(rel_tol=1e-11, abs_tol=1e-14, n_sigma=n_sigma)
    value = quiet(x, beta, spec)
    assert value == pytest.approx(scipy_ds_dt(x, beta, n_sigma), rel=1e-8, abs=1e-10)


def test_light_like_example():
    assert quiet(1e4, 0.1) < 0.05


@pytest.mark.parametrize("beta", FIG1_BETAS)
def test_light_like_monotone(beta):
    xs = log_grid()
    xs = xs[xs >= 1e2]
    values = [quiet(float(x), beta) for x in xs]
    assert all(b < a for a, b in zip(values, values[1:]))
    assert values[-1] < 0.05


def test_bounds_on_figure_grid():
    rows = sweep(log_grid(), FIG1_BETAS)
    for row in rows:
        assert row.status in ("ok", "precision")
        assert 0 <= row.ds_dt <= 1 + 1e-12


def test_high_beta_overshoot():
    xs = log_grid()
    xs = xs[(xs >= 1e-4) & (xs <= 1e2)]
    values = np.array([quiet(float(x), 0.999) for x in xs])
    assert values.max() > math.sqrt(1 - 0.999 ** 2)


def test_small_beta_curves_nearly_coincide():
    rows = sweep(log_grid(), [0.01, 0.1])
    a = np.array([r.ds_dt for r in rows[:61]])
    b = np.array([r.ds_dt for r in rows[61:]])
    assert np.max(np.abs(a - b)) < 0.01


def test_sweep_order_and_reference():
    xs = [1e-3, 1.0, 10.0]
    rows = sweep(xs, [0.5, 0.2])
    assert [(r.beta, r.x) for r in rows] == [(0.5, 1e-3), (0.5, 1.0), (0.5, 10.0),
                                            (0.2, 1e-3), (0.2, 1.0), (0.2, 10.0)]
    assert rows[0].classical_ref == pytest.approx(math.sqrt(0.75))


def test_single_point_sweep():
    (row,) = sweep([0.01], [0.3])
    assert row.ds_dt == ds_dt_quadrature(0.01, 0.3)
    assert row.status == "ok"


def test_sweep_records_failures_in_row():
    rows = sweep([0.1, 1.0], [0.3, 1.5])
    assert [r.status for r in rows[:2]] == ["ok", "ok"]
    assert all(r.status.startswith("error") and math.isnan(r.ds_dt) for r in rows[2:])


def test_convergence_error_carries_estimate():
    spec = QuadratureSpec(rel_tol=1e-15, abs_tol=1e-300, max_subdivisions=1)
    with pytest.raises(ConvergenceError) as info:
        ds_dt_quadrature(1.0, 0.5, spec)
    assert info.value.estimate == pytest.approx(scipy_ds_dt(1.0, 0.5), rel=1e-6)
    (row,) = sweep([1.0], [0.5], spec)
    assert row.status.startswith("error")


def test_precision_warning_when_only_abs_tol_is_met():
    spec = QuadratureSpec(rel_tol=1e-15, abs_tol=1e-3)
    with pytest.warns(PrecisionWarning):
        ds_dt_quadrature(1.0, 0.5, spec)
    (row,) = sweep([1.0], [0.5], spec)
    assert row.status == "precision"


def test_invalid_points():
    for beta in (0.0, 1.0, -0.1):
        with pytest.raises(ValueError):
            ds_dt_quadrature(1.0, beta)
    with pytest.raises(ValueError):
        ds_dt_quadrature(0.0, 0.5)


def test_truncation_study_single_width_matches_sweep():
    xs = log_grid(count=13)
    study = truncation_study(xs, 0.1, [3])
    plain = sweep(xs, [0.1])
    assert [r.ds_dt for r in study] == [r.ds_dt for r in plain]
    assert [r.n_sigma for r in study] == [3.0] * 13


def test_truncation_study_layout_and_narrow_window_gap():
    xs = log_grid(count=21)
    rows = truncation_study(xs, 0.1, [1, 2, 3, 4])
    assert [r.n_sigma for r in rows] == [n for n in (1.0, 2.0, 3.0, 4.0) for _ in xs]
    one = np.array([r.ds_dt for r in rows[:21]])
    three = np.array([r.ds_dt for r in rows[42:63]])
    assert np.max(np.abs(one - three) / three) > 1e-3


def test_truncation_study_bad_width_is_recorded():
    rows = truncation_study([1.0], 0.1, [-1, 3])
    assert rows[0].status.startswith("error")
    assert rows[1].status == "ok"
