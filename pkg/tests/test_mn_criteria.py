import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gaussbeta import constants as K
from gaussbeta.errors import DomainError, InfeasibleConfigurationError
from gaussbeta.mn_criteria import (
    ProblemConfig,
    advise,
    closed_form_minimizer,
    golden_section,
    log_mn,
    mn_curve,
    numeric_minimizer,
    sup_exponent,
    sup_exponent_grid,
)


def config(space="B", criterion="scattered", n=1, b0=1.0, delta=0.01, sigma=1.0):
    return ProblemConfig(n=n, b0=b0, delta=delta, sigma=sigma, space=space, criterion=criterion)


@st.composite
def valid_configs(draw):
    criterion = draw(st.sampled_from(["scattered", "evenly-spaced"]))
    space = draw(st.sampled_from(["B", "G"]))
    n = draw(st.integers(1, 4))
    b0 = 10 ** draw(st.floats(-1, 1))
    sigma = 10 ** draw(st.floats(-1, 1))
    cap = K.delta_n(n, b0) if criterion == "scattered" else b0
    delta = cap * 10 ** draw(st.floats(-3, 0))
    return ProblemConfig(n=n, b0=b0, delta=delta, sigma=sigma, space=space, criterion=criterion)


def test_log_mn_examples():
    assert log_mn(config(), 0.01) == pytest.approx(12.5 * math.log(0.01) + 12.5, rel=1e-14)
    assert log_mn(config(), 0.01) == pytest.approx(-45.0646, abs=1e-4)
    assert log_mn(config(criterion="evenly-spaced", delta=0.5), 1.0) == pytest.approx(0.125, abs=1e-15)
    g = config("G", "evenly-spaced", delta=0.03)
    assert log_mn(g, 0.1) == pytest.approx(50 / 3 * math.log(0.1) + 1 / 0.864, rel=1e-14)


def test_log_mn_rejects_nonpositive_beta():
    with pytest.raises(DomainError):
        log_mn(config(), 0.0)


def test_log_mn_sup_oracle_agrees():
    g = config("G", "evenly-spaced", delta=0.03)
    assert log_mn(g, 0.1, sup_oracle=True) == pytest.approx(log_mn(g, 0.1), rel=1e-9)


@pytest.mark.parametrize("sigma, beta", [(1.0, 0.1), (1.0, 1.0), (2.5, 0.3), (0.2, 7.0)])
def test_sup_exponent_grid_oracle(sigma, beta):
    assert sup_exponent(sigma, beta) == pytest.approx(sup_exponent_grid(sigma, beta), rel=1e-6)


def test_sup_exponent_values():
    assert sup_exponent(1, 0.1) == pytest.approx(2.31481, rel=1e-5)
    assert sup_exponent(1, 1) == pytest.approx(2.31481e-3, rel=1e-5)
    assert sup_exponent(2.0, 0.4) == pytest.approx(4 * sup_exponent(1.0, 0.4), rel=1e-14)


def test_closed_form_examples():
    assert closed_form_minimizer(config()) == pytest.approx(0.01, rel=1e-14)
    assert closed_form_minimizer(config(criterion="evenly-spaced", delta=0.03)) == pytest.approx(0.0075, rel=1e-14)
    assert closed_form_minimizer(config("G", "evenly-spaced", delta=0.03)) == pytest.approx(
        (0.03 / 144) ** (1 / 3), rel=1e-14
    )
    assert (0.03 / 144) ** (1 / 3) == pytest.approx(0.059282, abs=1e-6)


def test_numeric_minimizer_example():
    assert numeric_minimizer(config(), 1e-6, 10) == pytest.approx(0.01, abs=1e-8)


def test_numeric_minimizer_bracket_excluding_optimum():
    c = config(criterion="evenly-spaced", delta=0.03)
    assert numeric_minimizer(c, 1.0, 10.0) == 1.0
    assert numeric_minimizer(c, 1e-6, 1e-4) == 1e-4


def test_numeric_minimizer_domain():
    with pytest.raises(DomainError):
        numeric_minimizer(config(), 1.0, 0.5)
    with pytest.raises(DomainError):
        numeric_minimizer(config("G"), 1e-300, 1.0)


def test_golden_section_plain_quadratic():
    x = golden_section(lambda a, b: (a - 0.3) ** 2 - (b - 0.3) ** 2, -2.0, 5.0, tol=1e-12)
    assert x == pytest.approx(0.3, abs=1e-6)


@settings(max_examples=200, deadline=None)
@given(valid_configs())
def test_closed_form_matches_numeric(cfg):
    star = closed_form_minimizer(cfg)
    found = numeric_minimizer(cfg, star / 137.0, star * 59.0)
    assert found == pytest.approx(star, rel=1e-8)


@settings(max_examples=200, deadline=None)
@given(valid_configs())
def test_log_mn_convex_in_log_beta(cfg):
    star = closed_form_minimizer(cfg)
    curve = mn_curve(cfg, star / 100, star * 100, 41)
    assert np.all(np.diff(curve.log_mn, 2) > 0)


def test_advise_examples():
    r = advise(config())
    assert r.beta_unconstrained == pytest.approx(0.01, rel=1e-14)
    assert r.clamped
    assert r.beta_star == pytest.approx(4.8480e-5, rel=1e-4)
    assert math.log(r.beta_star) == pytest.approx(-9.934, abs=1e-3)

    r = advise(config(criterion="evenly-spaced", delta=0.03))
    assert not r.clamped
    assert r.beta_star == r.beta_unconstrained == pytest.approx(0.0075, rel=1e-14)
    assert math.exp(r.log_beta0) == pytest.approx(0.010430, rel=1e-4)

    r = advise(config(criterion="evenly-spaced", delta=0.2))
    assert r.beta_unconstrained == pytest.approx(0.05, rel=1e-14)
    assert r.clamped
    assert r.beta_star == pytest.approx(4.039e-3, rel=1e-3)


def test_advise_infeasible():
    with pytest.raises(InfeasibleConfigurationError) as info:
        advise(config(delta=0.3))
    assert info.value.bound_name == "delta_n"
    assert info.value.bound_value == 0.25
    assert "delta_n = 0.25" in str(info.value)
    with pytest.raises(InfeasibleConfigurationError):
        advise(config(criterion="evenly-spaced", delta=1.5))


def test_advise_high_dimension_stays_in_log_domain():
    r = advise(config(n=3, delta=1e-4))
    assert r.clamped
    assert r.log_beta_star == r.log_beta0
    assert r.log_beta0 < -900


@settings(max_examples=200, deadline=None)
@given(valid_configs())
def test_advise_invariants(cfg):
    r = advise(cfg)
    assert r.log_beta_star <= r.log_beta0
    assert r.clamped == (math.log(r.beta_unconstrained) > r.log_beta0)
    if not r.clamped:
        assert r.beta_star == r.beta_unconstrained
    if abs(r.log_beta0) < 50:
        hi = math.exp(r.log_beta0)
        for beta in np.geomspace(hi * 1e-3, hi, 25):
            assert r.log_mn_at_star <= log_mn(cfg, float(beta)) + 1e-9 * abs(r.log_mn_at_star)


@given(st.floats(1e-3, 0.9), st.floats(0.1, 10))
def test_evenly_spaced_dimension_independent(delta, sigma):
    results = {advise(config("B", "evenly-spaced", n=n, delta=delta, sigma=sigma)).beta_unconstrained for n in (1, 2, 5, 9)}
    assert len(results) == 1


def test_mn_curve_examples():
    c = config(criterion="evenly-spaced", delta=0.03)
    star = closed_form_minimizer(c)
    three = mn_curve(c, star / 10, star * 10, 3)
    assert np.argmin(three.log_mn) == 1
    wide = mn_curve(c, star / 1e4, star * 1e4, 3)
    assert wide.log_mn[0] > wide.log_mn[1] and wide.log_mn[2] > wide.log_mn[1]
    grid = mn_curve(c, 1e-4, 1.0, 101)
    step = grid.betas[1] / grid.betas[0]
    best = grid.betas[np.argmin(grid.log_mn)]
    assert 1 / step <= best / 0.0075 <= step
    assert np.all(np.diff(grid.betas) > 0)
    assert three.exponent_a == pytest.approx(50 / 3)


def test_mn_curve_domain():
    with pytest.raises(DomainError):
        mn_curve(config(), 1.0, 0.1, 10)
    with pytest.raises(DomainError):
        mn_curve(config(), 0.1, 1.0, 1)


def test_problem_config_validation():
    with pytest.raises(DomainError):
        config(delta=-1)
    with pytest.raises(DomainError):
        config(space="X")
    with pytest.raises(DomainError):
        config(n=0)
