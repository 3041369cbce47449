import math

import numpy as np
import pytest
from scipy import integrate

from hocc import specfun
from hocc.errors import (
    DivergenceError,
    DomainError,
    NonConvergenceError,
    NonFiniteSampleError,
    PoleError,
)
from hocc.specfun import GlConfig, SeriesConfig

EULER = 0.5772156649015329


# ----------------------------------------------------------------- configs

@pytest.mark.parametrize("step,order", [(0.0, 4), (0.02, 4), (1e-3, 9)])
def test_gl_config_rejects(step, order):
    with pytest.raises(DomainError):
        GlConfig(step=step, max_order=order)


@pytest.mark.parametrize("tol,terms", [(1e-5, 1000), (1e-12, 100), (0.0, 1000)])
def test_series_config_rejects(tol, terms):
    with pytest.raises(DomainError):
        SeriesConfig(rel_tol=tol, max_terms=terms)


# ----------------------------------------------------------- gamma family

def test_ln_gamma_values():
    assert specfun.ln_gamma(1.0) == 0.0
    assert specfun.ln_gamma(5.0) == pytest.approx(math.log(24.0), rel=1e-12)
    # Euler integral for Gamma(1/2) with the substitution t = u^2
    euler, _ = integrate.quad(lambda u: 2.0 * math.exp(-u * u), 0, np.inf, epsabs=0, epsrel=1e-13)
    assert specfun.ln_gamma(0.5) == pytest.approx(math.log(euler), rel=1e-12)
    assert specfun.ln_gamma(0.5) == pytest.approx(0.5723649429, abs=1e-10)


@pytest.mark.parametrize("x", [0.0, -1.0, -2.5])
def test_ln_gamma_domain(x):
    with pytest.raises(DomainError):
        specfun.ln_gamma(x)


@pytest.mark.parametrize(
    "m,x,expected",
    [(0, 1.0, -EULER), (0, 2.0, 1.0 - EULER), (1, 1.0, math.pi**2 / 6)],
)
def test_polygamma_values(m, x, expected):
    assert specfun.polygamma(m, x) == pytest.approx(expected, abs=1e-10)


def test_polygamma_recurrence():
    for x in (0.5, 1.3, 7.0):
        assert specfun.polygamma(0, x + 1) - specfun.polygamma(0, x) == pytest.approx(1 / x, abs=1e-12)


def test_polygamma_domain():
    with pytest.raises(DomainError):
        specfun.polygamma(0, 0.0)
    with pytest.raises(DomainError):
        specfun.polygamma(-1, 1.0)


# ---------------------------------------------------------------- erf

def _newton_erf_inv(y):
    x = 0.0
    for _ in range(60):
        x -= (math.erf(x) - y) / (2 / math.sqrt(math.pi) * math.exp(-x * x))
    return x


def test_erf_basics():
    assert specfun.erf(0.0) == 0.0
    assert specfun.erf_inv(0.5) == pytest.approx(_newton_erf_inv(0.5), abs=1e-12)
    assert specfun.erf_inv(0.5) == pytest.approx(0.4769362762, abs=1e-10)
    assert specfun.erf(specfun.erf_inv(0.3)) == pytest.approx(0.3, abs=1e-12)


def test_erf_roundtrip_and_oddness():
    xs = np.linspace(-3, 3, 61)
    back = [specfun.erf_inv(specfun.erf(x)) for x in xs]
    assert np.max(np.abs(np.array(back) - xs)) <= 1e-9
    assert specfun.erf_inv(-0.7) == -specfun.erf_inv(0.7)
    assert specfun.erf(-1.1) == -specfun.erf(1.1)


@pytest.mark.parametrize("y", [1.0, -1.0, 1.5])
def test_erf_inv_domain(y):
    with pytest.raises(DomainError):
        specfun.erf_inv(y)


# ---------------------------------------------------------------- Bessel

def test_bessel_values():
    assert specfun.bessel_i(0, 0) == 1.0
    assert specfun.bessel_i(1, 0) == 0.0
    assert specfun.bessel_i(0.5, 2.0) == pytest.approx(math.sinh(2) * math.sqrt(2 / (math.pi * 2)), rel=1e-12)


def test_bessel_series_agreement():
    # ascending series as an independent check
    for nu, x in [(0.3, 1.7), (2.0, 10.0), (-0.5, 3.0)]:
        series = sum((x / 2) ** (2 * k + nu) / (math.factorial(k) * math.gamma(k + nu + 1)) for k in range(80))
        assert specfun.bessel_i(nu, x) == pytest.approx(series, rel=1e-9)


def test_bessel_errors():
    with pytest.raises(DomainError):
        specfun.bessel_i(-1.5, 1.0)
    with pytest.raises(DomainError):
        specfun.bessel_i(0, -1.0)
    with pytest.raises(OverflowError):
        specfun.bessel_i(0, 800.0)


# ------------------------------------------------------------------ pFq

def test_pfq_values():
    assert specfun.pfq([1.3], [2.2], 0.0) == 1.0
    assert specfun.pfq([1, 1], [2], 0.5) == pytest.approx(2 * math.log(2), rel=1e-14)
    for kappa, mu in [(1.0, 2.0), (3.0, 0.5)]:
        assert specfun.pfq([-1], [mu], -kappa * mu) == pytest.approx(1 + kappa, rel=1e-14)


def test_pfq_exponential():
    assert specfun.pfq([], [], 1.3) == pytest.approx(math.exp(1.3), rel=1e-14)
    assert specfun.pfq([2.0], [2.0], -4.0) == pytest.approx(math.exp(-4.0), rel=1e-12)


@pytest.mark.parametrize("n", [2, 3, 5])
def test_pfq_terminating_matches_polynomial(n):
    a, b, x = -n, 1.7, -2.3
    direct = sum(
        math.prod(a + i for i in range(j)) / math.prod(b + i for i in range(j)) * x**j / math.factorial(j)
        for j in range(n + 1)
    )
    assert specfun.pfq([a], [b], x) == pytest.approx(direct, rel=1e-12)


def test_pfq_errors():
    with pytest.raises(PoleError):
        specfun.pfq([1.0], [-2.0], 0.5)
    with pytest.raises(DivergenceError):
        specfun.pfq([1.0, 1.0], [2.0], 1.5)
    with pytest.raises(DivergenceError):
        specfun.pfq([1.0, 1.0, 1.0], [2.0], 0.1)
    with pytest.raises(NonConvergenceError):
        specfun.pfq([1.0], [1.0], 400.0, SeriesConfig(max_terms=200))


# --------------------------------------------------------------- HOD-GH

def test_hod_reference_value():
    value = specfun.hod_pfq([1, 2], [3], 0.5, m=[1, 0], n=[1], k=0)
    assert value == pytest.approx(-0.3795244284791705, abs=1e-12)


def test_hod_zero_orders_equal_pfq():
    for a, b, x in [([1, 2], [3], 0.5), ([0.3], [1.7], -2.0), ([-3], [2.5], 1.2)]:
        assert specfun.hod_pfq(a, b, x) == specfun.pfq(a, b, x)


def test_hod_parameter_derivative_at_origin():
    assert specfun.hod_pfq([1.5, 2.0], [3.0], 0.0, m=[1, 0], n=[0]) == 0.0


def test_hod_kappa_mu_series():
    mu, kappa = 2.0, 1.0
    x = -kappa * mu
    series = 0.0
    poch = 1.0
    for j in range(1, 80):
        poch *= mu + j - 1
        series += x**j / (j * poch)
    # d/dn 1F1(-n; mu; x) at n = 0 is minus the upper-parameter derivative at 0
    d_dn = -specfun.hod_pfq([0.0], [mu], x, m=[1], n=[0])
    assert d_dn == pytest.approx(-series, rel=1e-12)
    h = 1e-4
    central = (specfun.pfq([-h], [mu], x) - specfun.pfq([h], [mu], x)) / (2 * h)
    assert d_dn == pytest.approx(central, rel=1e-6)


@pytest.mark.parametrize(
    "m,n,k",
    [([2, 0], [0], 0), ([1, 1], [0], 0), ([0, 0], [2], 0), ([1, 0], [1], 0), ([0, 1], [0], 1)],
)
def test_hod_mixed_against_finite_differences(m, n, k):
    a, b, x = [1.2, 0.8], [2.5], 0.4

    def f(da1, da2, db, dx):
        return specfun.pfq([a[0] + da1, a[1] + da2], [b[0] + db], x + dx)

    h = 1e-3
    axes = [0] * m[0] + [1] * m[1] + [2] * n[0] + [3] * k

    def diff(axes_left, shift):
        if not axes_left:
            return f(*shift)
        i = axes_left[0]
        up, down = list(shift), list(shift)
        up[i] += h
        down[i] -= h
        return (diff(axes_left[1:], up) - diff(axes_left[1:], down)) / (2 * h)

    expected = diff(axes, [0.0, 0.0, 0.0, 0.0])
    got = specfun.hod_pfq(a, b, x, m=m, n=n, k=k)
    assert got == pytest.approx(expected, rel=1e-5, abs=1e-8)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_hod_argument_derivative_shift(k):
    a, b, x = [1.2, 0.8], [2.5], 0.4

    def poch(v, j):
        return math.prod(v + i for i in range(j))

    expected = poch(a[0], k) * poch(a[1], k) / poch(b[0], k) * specfun.pfq([a[0] + k, a[1] + k], [b[0] + k], x)
    assert specfun.hod_pfq(a, b, x, k=k) == pytest.approx(expected, rel=1e-13)


def test_hod_order_limit():
    with pytest.raises(DomainError):
        specfun.hod_pfq([1.0], [2.0], 0.1, m=[4], n=[3])


# ---------------------------------------------------------------- Bell

@pytest.mark.parametrize(
    "g,expected",
    [([], 1.0), ([2.5], 2.5), ([1, 1, 1], 5.0), ([1, 1, 1, 1], 15.0), ([1, 2], 3.0)],
)
def test_complete_bell(g, expected):
    assert specfun.complete_bell(g) == expected


def test_psi_and_phi_closed_forms():
    a, b, k = 1.7, 0.6, 0.3
    x = a + b * k
    assert specfun.psi_n(0, a, b, k) == pytest.approx(math.gamma(x), rel=1e-14)
    assert specfun.psi_n(1, a, b, k) == pytest.approx(b * math.gamma(x) * specfun.polygamma(0, x), rel=1e-12)
    assert specfun.psi_n(1, 1, 1, 0) == pytest.approx(-EULER, abs=1e-12)
    assert specfun.phi_n(1, a, b, k) == pytest.approx(2 * b * k * math.exp(a + b * k * k), rel=1e-14)
    assert specfun.phi_n(1, a, b, 0.0) == 0.0
    assert specfun.phi_n(2, 0.0, 1.0, 0.0) == 2.0


def test_psi_domain():
    with pytest.raises(DomainError):
        specfun.psi_n(2, -1.0, 1.0, 0.5)


GL_GRID = [(n, a, b) for n in (1, 2, 3, 4) for a in (0.5, 1.0, 2.5) for b in (0.5, 1.0, 2.0)]


def _gl_mismatches(exact_fn, f_factory):
    bad = []
    for n, a, b in GL_GRID:
        numeric = specfun.gl_derivative(f_factory(a, b), 0.0, n, GlConfig(step=1e-3))
        exact = exact_fn(n, a, b, 0.0)
        # odd derivatives of exp(a + b k^2) vanish at k = 0: compare absolutely there
        rel = abs(numeric - exact) / abs(exact) if exact else abs(numeric)
        if rel > 1e-4:
            bad.append(f"n={n} a={a} b={b} rel={rel:.2e}")
    return bad


def test_psi_matches_gl_grid():
    bad = _gl_mismatches(specfun.psi_n, lambda a, b: lambda k: math.gamma(a + b * k))
    assert not bad, "; ".join(bad)


def test_phi_matches_gl_grid():
    bad = _gl_mismatches(specfun.phi_n, lambda a, b: lambda k: math.exp(a + b * k * k))
    assert not bad, "; ".join(bad)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_psi_and_phi_match_gl_low_orders_loosely(n):
    # the same stencil, with its O(eps^2) truncation budgeted explicitly
    for _, a, b in [c for c in GL_GRID if c[0] == n]:
        for exact_fn, f in (
            (specfun.psi_n, lambda k: math.gamma(a + b * k)),
            (specfun.phi_n, lambda k: math.exp(a + b * k * k)),
        ):
            numeric = specfun.gl_derivative(f, 0.0, n, GlConfig(step=1e-3))
            exact = exact_fn(n, a, b, 0.0)
            assert numeric == pytest.approx(exact, rel=1e-2, abs=1e-6)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_psi_matches_high_order_differences(n):
    # an independent seventh-order central stencil reaches 1e-7 where the GL stencil cannot
    a, b = 2.5, 0.5
    f = lambda k: math.gamma(a + b * k)  # noqa: E731
    h = 0.05
    # Taylor coefficients by least squares on a symmetric stencil
    ks = np.arange(-8, 9) * h
    coeffs = np.polynomial.polynomial.polyfit(ks, [f(k) for k in ks], 12)
    assert specfun.psi_n(n, a, b, 0.0) == pytest.approx(coeffs[n] * math.factorial(n), rel=1e-7)


# ------------------------------------------------------------------ GL

def test_gl_polynomial_and_constant():
    cfg = GlConfig()
    assert specfun.gl_derivative(lambda x: x * x, 0.0, 2, cfg) == pytest.approx(2.0, abs=1e-6)
    for order in (1, 2, 3, 4):
        assert specfun.gl_derivative(lambda x: 3.0, 0.7, order, cfg) == 0.0


def test_gl_exp_first_derivative():
    eps = 1e-3
    assert abs(specfun.gl_derivative(math.exp, 0.0, 1, GlConfig(step=eps)) - 1.0) <= eps


def test_gl_second_order_accuracy():
    # halving the step cuts the error by four
    f = lambda x: math.exp(2 * x)  # noqa: E731
    errs = [abs(specfun.gl_derivative(f, 0.0, 2, GlConfig(step=s)) - 4.0) for s in (8e-3, 4e-3)]
    assert errs[0] / errs[1] == pytest.approx(4.0, rel=0.05)


def test_gl_nonfinite():
    with pytest.raises(NonFiniteSampleError):
        specfun.gl_derivative(lambda x: math.log(x) if x > 0 else math.nan, 0.0, 1)


# ---------------------------------------------------- extended inc. gamma

def _simpson(f, a, b, n):
    x = np.linspace(a, b, n + 1)
    y = f(x)
    return (b - a) / (3 * n) * (y[0] + y[-1] + 4 * y[1:-1:2].sum() + 2 * y[2:-1:2].sum())


def test_ext_inc_gamma_reductions():
    for alpha in (0.5, 1.0, 2.5, 7.0):
        assert specfun.ext_inc_gamma(alpha, 0.0, 0.0, 1.0) == pytest.approx(math.gamma(alpha), rel=1e-10)
    assert specfun.ext_inc_gamma(1.0, 0.0, 0.0, 1.0) == pytest.approx(1.0, rel=1e-12)
    assert specfun.ext_inc_gamma(1.0, 2.0, 0.0, 1.0) == pytest.approx(math.exp(-2.0), rel=1e-10)


def test_ext_inc_gamma_simpson():
    # r = u^2 removes the r^-1/2 factor; the integrand is smooth and vanishes at both ends
    f = lambda u: 2.0 * np.exp(-u * u - 1.0 / np.maximum(u * u, 1e-300))  # noqa: E731
    oracle = _simpson(f, 0.0, 12.0, 40000)
    assert specfun.ext_inc_gamma(0.5, 0.0, 1.0, 1.0) == pytest.approx(oracle, abs=1e-6)
    assert specfun.ext_inc_gamma(0.5, 0.0, 1.0, 1.0) == pytest.approx(oracle, rel=1e-9)


def test_ext_inc_gamma_bessel_identity():
    # int_0^inf r^(a-1) exp(-r - b/r) dr = 2 b^(a/2) K_a(2 sqrt b)
    from scipy.special import kv

    for alpha, b in [(0.5, 1.0), (-1.5, 0.3), (3.0, 20.0)]:
        expected = 2 * b ** (alpha / 2) * kv(alpha, 2 * math.sqrt(b))
        assert specfun.ext_inc_gamma(alpha, 0.0, b, 1.0) == pytest.approx(expected, rel=1e-9)


def test_ext_inc_gamma_domain():
    with pytest.raises(DomainError):
        specfun.ext_inc_gamma(-1.0, 0.0, 0.0, 1.0)
    with pytest.raises(DomainError):
        specfun.ext_inc_gamma(1.0, -1.0, 0.0, 1.0)
    with pytest.raises(DomainError):
        specfun.ext_inc_gamma(1.0, 0.0, 1.0, 0.0)
