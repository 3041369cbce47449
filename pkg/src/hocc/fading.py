"""Fading distributions of the instantaneous SNR.

Every model is a frozen dataclass parameterized by its shape parameters
only; the mean SNR is passed to each call. All families in scope are
scale families, so ``E[gamma^n] = mean^n * E[(gamma/mean)^n]`` and the
normalized moment is a function of the shape parameters alone.
"""

from __future__ import annotations

import functools
import math
import warnings
from abc import ABC, abstractmethod
from dataclasses import MISSING, dataclass, fields
from typing import ClassVar

import numpy as np
from scipy import integrate, special

from . import specfun
from .errors import DomainError, NonConvergenceError
from .snr import mean_value

__all__ = [
    "FadingModel",
    "GeneralizedNakagami",
    "Nakagami",
    "Rayleigh",
    "Weibull",
    "OneSidedGaussian",
    "Lognormal",
    "Egk",
    "KappaMu",
    "EtaMu",
    "Awgn",
    "DB_KAPPA",
    "pdf",
    "cdf",
    "moment",
    "sample",
    "integrate_pdf",
    "MODEL_TYPES",
    "ModelSpecError",
    "parse_model",
]

DB_KAPPA = 10.0 / math.log(10.0)


def _as_output(values, scalar):
    return float(values) if scalar else values


class FadingModel(ABC):
    """Distribution of the instantaneous SNR for a given mean SNR."""

    name: ClassVar[str]

    @abstractmethod
    def log_unit_moment(self, n: float) -> float:
        """``ln E[(gamma/mean)^n]`` for real ``n``."""

    @abstractmethod
    def _pdf(self, gamma: np.ndarray, mean: float) -> np.ndarray:
        """Density on ``gamma > 0``."""

    @abstractmethod
    def _draw(self, mean: float, count: int, rng: np.random.Generator) -> np.ndarray:
        ...

    @property
    @abstractmethod
    def zero_exponent(self) -> float:
        """Exponent ``e`` with ``pdf(gamma) ~ gamma^e`` as ``gamma -> 0``."""

    def _pdf_at_zero(self, mean: float) -> float:
        e = self.zero_exponent
        if e > 0:
            return 0.0
        if e < 0:
            return math.inf
        return float(self._pdf(np.array([1e-300]), mean)[0])

    # public surface -----------------------------------------------------

    def params(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def spec(self) -> str:
        body = ",".join(f"{k}={v:g}" for k, v in self.params().items())
        return f"{self.name}:{body}" if body else self.name

    def log_moment(self, n: float, mean) -> float:
        return self.log_unit_moment(n) + n * math.log(mean_value(mean))

    def moment(self, n: float, mean) -> float:
        """``E[gamma^n]``; ``n = 1`` returns the mean exactly."""
        mean = mean_value(mean)
        if n == 0:
            return 1.0
        if n == 1:
            return mean
        return math.exp(self.log_moment(n, mean))

    def pdf(self, gamma, mean):
        mean = mean_value(mean)
        scalar = np.ndim(gamma) == 0
        g = np.atleast_1d(np.asarray(gamma, dtype=float))
        if np.any(g < 0):
            raise DomainError("gamma must be non-negative")
        out = np.empty_like(g)
        pos = g > 0
        if np.any(pos):
            out[pos] = self._pdf(g[pos], mean)
        if np.any(~pos):
            out[~pos] = self._pdf_at_zero(mean)
        return _as_output(out[0] if scalar else out, scalar)

    def cdf(self, gamma, mean):
        mean = mean_value(mean)
        scalar = np.ndim(gamma) == 0
        g = np.atleast_1d(np.asarray(gamma, dtype=float))
        if np.any(g < 0):
            raise DomainError("gamma must be non-negative")
        out = np.clip(self._cdf(g, mean), 0.0, 1.0)
        out[g == 0] = 0.0
        return _as_output(out[0] if scalar else out, scalar)

    def _cdf(self, g: np.ndarray, mean: float) -> np.ndarray:
        return np.array(
            [integrate_pdf(self, mean, upper=float(x), rel_tol=1e-10)[0] if x > 0 else 0.0 for x in g]
        )

    def sample(self, mean, count: int, seed=None) -> np.ndarray:
        """``count`` i.i.d. draws; ``seed`` is anything numpy's ``default_rng`` accepts."""
        if count < 1:
            raise DomainError(f"count must be at least 1, got {count}")
        return self._draw(mean_value(mean), int(count), np.random.default_rng(seed))


# ---------------------------------------------------------------------------
# generalized Nakagami-m and its special cases


class _GeneralizedGamma(FadingModel):
    """Shared machinery for models with ``gamma = (mean/beta) G^(1/xi)``, ``G ~ Gamma(m)``."""

    @property
    @abstractmethod
    def shape(self) -> tuple[float, float]:
        """``(m, xi)``."""

    @property
    def beta(self) -> float:
        m, xi = self.shape
        return math.exp(math.lgamma(m + 1.0 / xi) - math.lgamma(m))

    @property
    def zero_exponent(self) -> float:
        m, xi = self.shape
        return xi * m - 1.0

    def log_unit_moment(self, n):
        m, xi = self.shape
        if not m + n / xi > 0:
            raise DomainError(f"moment of order {n} undefined for m={m}, xi={xi}")
        return math.lgamma(m + n / xi) - math.lgamma(m) - n * math.log(self.beta)

    def _pdf(self, gamma, mean):
        m, xi = self.shape
        rate = self.beta / mean
        log_p = (
            math.log(xi)
            - math.lgamma(m)
            + xi * m * math.log(rate)
            + (xi * m - 1.0) * np.log(gamma)
            - (rate * gamma) ** xi
        )
        return np.exp(log_p)

    def _cdf(self, g, mean):
        m, xi = self.shape
        return special.gammainc(m, (self.beta * g / mean) ** xi)

    def _draw(self, mean, count, rng):
        m, xi = self.shape
        return (mean / self.beta) * rng.gamma(m, 1.0, count) ** (1.0 / xi)


@dataclass(frozen=True)
class GeneralizedNakagami(_GeneralizedGamma):
    m: float
    xi: float
    name: ClassVar[str] = "gnak"

    def __post_init__(self):
        if not self.m >= 0.5:
            raise DomainError(f"fading figure m must be >= 0.5, got {self.m}")
        if not self.xi > 0:
            raise DomainError(f"shaping parameter xi must be > 0, got {self.xi}")

    @property
    def shape(self):
        return (float(self.m), float(self.xi))


@dataclass(frozen=True)
class Nakagami(_GeneralizedGamma):
    m: float
    name: ClassVar[str] = "nak"

    def __post_init__(self):
        if not self.m >= 0.5:
            raise DomainError(f"fading figure m must be >= 0.5, got {self.m}")

    @property
    def shape(self):
        return (float(self.m), 1.0)


@dataclass(frozen=True)
class Rayleigh(_GeneralizedGamma):
    name: ClassVar[str] = "ray"

    @property
    def shape(self):
        return (1.0, 1.0)

    def _cdf(self, g, mean):
        return -np.expm1(-g / mean)


@dataclass(frozen=True)
class Weibull(_GeneralizedGamma):
    xi: float
    name: ClassVar[str] = "wei"

    def __post_init__(self):
        if not self.xi > 0:
            raise DomainError(f"shaping parameter xi must be > 0, got {self.xi}")

    @property
    def shape(self):
        return (1.0, float(self.xi))


@dataclass(frozen=True)
class OneSidedGaussian(_GeneralizedGamma):
    """Worst-case fading: Nakagami with ``m = 1/2``."""

    name: ClassVar[str] = "osg"

    @property
    def shape(self):
        return (0.5, 1.0)

    def _pdf(self, gamma, mean):
        return np.exp(-0.5 * gamma / mean) / np.sqrt(2.0 * math.pi * mean * gamma)

    def _cdf(self, g, mean):
        return special.erf(np.sqrt(0.5 * g / mean))


# ---------------------------------------------------------------------------
# lognormal


@dataclass(frozen=True)
class Lognormal(FadingModel):
    """Lognormal shadowing with dB spread ``sigma_db``; the dB mean follows from the mean SNR."""

    sigma_db: float
    name: ClassVar[str] = "logn"

    def __post_init__(self):
        if not self.sigma_db > 0:
            raise DomainError(f"sigma_db must be > 0, got {self.sigma_db}")

    @property
    def spread(self) -> float:
        """``sigma^2 / (2 kappa^2)`` with ``kappa = 10/ln 10``."""
        return self.sigma_db**2 / (2.0 * DB_KAPPA**2)

    def mu_db(self, mean) -> float:
        """dB-domain mean giving ``E[gamma] = mean``."""
        return DB_KAPPA * (math.log(mean_value(mean)) - self.spread)

    @property
    def zero_exponent(self):
        return math.inf

    def log_unit_moment(self, n):
        return self.spread * (n * n - n)

    def _pdf(self, gamma, mean):
        mu, sigma = self.mu_db(mean), self.sigma_db
        z = (DB_KAPPA * np.log(gamma) - mu) / sigma
        return DB_KAPPA / (math.sqrt(2.0 * math.pi) * sigma * gamma) * np.exp(-0.5 * z * z)

    def _cdf(self, g, mean):
        with np.errstate(divide="ignore"):
            z = (DB_KAPPA * np.log(g) - self.mu_db(mean)) / self.sigma_db
        return special.ndtr(z)

    def _draw(self, mean, count, rng):
        return np.exp(rng.normal(self.mu_db(mean) / DB_KAPPA, self.sigma_db / DB_KAPPA, count))


# ---------------------------------------------------------------------------
# extended generalized-K


@functools.lru_cache(maxsize=1 << 16)
def _egk_log_kernel(alpha, z, xi, xis):
    # quadrature nodes repeat across weights and orders at a fixed mean; cache the costly part
    return specfun.log_ext_inc_gamma(alpha, 0.0, z**xi, xi / xis)


@dataclass(frozen=True)
class Egk(FadingModel):
    """Extended generalized-K: generalized-gamma fading times generalized-gamma shadowing.

    ``gamma = mean / (beta beta_s) * X^(1/xi) * Y^(1/xi_s)`` with independent
    ``X ~ Gamma(m)``, ``Y ~ Gamma(m_s)``.
    """

    m: float
    xi: float
    m_s: float
    xi_s: float
    name: ClassVar[str] = "egk"

    def __post_init__(self):
        if not (self.m >= 0.5 and self.m_s >= 0.5):
            raise DomainError(f"m and m_s must be >= 0.5, got {self.m}, {self.m_s}")
        if not (self.xi > 0 and self.xi_s > 0):
            raise DomainError(f"xi and xi_s must be > 0, got {self.xi}, {self.xi_s}")

    @property
    def beta(self) -> float:
        return math.exp(math.lgamma(self.m + 1.0 / self.xi) - math.lgamma(self.m))

    @property
    def beta_s(self) -> float:
        return math.exp(math.lgamma(self.m_s + 1.0 / self.xi_s) - math.lgamma(self.m_s))

    @property
    def zero_exponent(self):
        return min(self.xi * self.m, self.xi_s * self.m_s) - 1.0

    def log_unit_moment(self, n):
        m, xi, ms, xis = self.m, self.xi, self.m_s, self.xi_s
        if not (m + n / xi > 0 and ms + n / xis > 0):
            raise DomainError(f"EGK moment of order {n} undefined")
        return (
            math.lgamma(m + n / xi)
            + math.lgamma(ms + n / xis)
            - math.lgamma(m)
            - math.lgamma(ms)
            - n * math.log(self.beta * self.beta_s)
        )

    def _ordered(self):
        # the product is symmetric in the two factors; putting the factor
        # with the smaller xi*m outside keeps the incomplete-gamma order positive
        a = (self.m, self.xi)
        b = (self.m_s, self.xi_s)
        return (a, b) if a[0] * a[1] <= b[0] * b[1] else (b, a)

    def _pdf(self, gamma, mean):
        (m, xi), (ms, xis) = self._ordered()
        scale = mean / (self.beta * self.beta_s)
        alpha = ms - m * xi / xis
        head = math.log(xi) - math.lgamma(m) - math.lgamma(ms) - xi * m * math.log(scale)
        out = np.empty_like(gamma)
        for i, g in enumerate(gamma):
            out[i] = math.exp(head + (xi * m - 1.0) * math.log(g) + _egk_log_kernel(alpha, float(g / scale), xi, xis))
        return out

    def _pdf_at_zero(self, mean):
        (m, xi), (ms, xis) = self._ordered()
        e = xi * m - 1.0
        if e != 0:
            return 0.0 if e > 0 else math.inf
        alpha = ms - m * xi / xis
        if alpha <= 0:
            return math.inf
        scale = mean / (self.beta * self.beta_s)
        return xi / (math.gamma(m) * math.gamma(ms)) / scale * math.gamma(alpha)

    def _cdf(self, g, mean):
        # condition on the shadowing factor Y and integrate the fading cdf over it
        scale = mean / (self.beta * self.beta_s)
        m, xi, ms, xis = self.m, self.xi, self.m_s, self.xi_s
        out = np.empty_like(g)
        for i, x in enumerate(g):
            if x <= 0:
                out[i] = 0.0
                continue
            z = x / scale

            def integrand(y):
                return special.gammainc(m, (z * y ** (-1.0 / xis)) ** xi) * math.exp(
                    (ms - 1.0) * math.log(y) - y - math.lgamma(ms)
                )

            pts = [max(ms - 1.0, 0.0) + 0.5, ms + 4.0 * math.sqrt(ms) + 5.0]
            out[i] = sum(
                integrate.quad(integrand, lo, hi, epsabs=1e-13, epsrel=1e-11, limit=400)[0]
                for lo, hi in [(0.0, pts[0]), (pts[0], pts[1]), (pts[1], math.inf)]
            )
        return out

    def _draw(self, mean, count, rng):
        scale = mean / (self.beta * self.beta_s)
        x = rng.gamma(self.m, 1.0, count)
        y = rng.gamma(self.m_s, 1.0, count)
        return scale * x ** (1.0 / self.xi) * y ** (1.0 / self.xi_s)


# ---------------------------------------------------------------------------
# kappa-mu and eta-mu


@dataclass(frozen=True)
class KappaMu(FadingModel):
    kappa: float
    mu: float
    name: ClassVar[str] = "kmu"

    def __post_init__(self):
        if not self.kappa >= 0:
            raise DomainError(f"kappa must be >= 0, got {self.kappa}")
        if not self.mu > 0:
            raise DomainError(f"mu must be > 0, got {self.mu}")

    @property
    def zero_exponent(self):
        return self.mu - 1.0

    def log_unit_moment(self, n):
        k, mu = self.kappa, self.mu
        if not mu + n > 0:
            raise DomainError(f"kappa-mu moment of order {n} undefined for mu={mu}")
        log_hyp = 0.0
        if k > 0:
            log_hyp = math.log(specfun.pfq([-n], [mu], -k * mu))
        return math.lgamma(mu + n) - math.lgamma(mu) - n * math.log((1.0 + k) * mu) + log_hyp

    def _pdf(self, gamma, mean):
        k, mu = self.kappa, self.mu
        if k == 0:
            theta = mean / mu
            return np.exp((mu - 1.0) * np.log(gamma) - gamma / theta - mu * math.log(theta) - math.lgamma(mu))
        z = 2.0 * mu * np.sqrt(k * (1.0 + k) * gamma / mean)
        log_p = (
            math.log(mu)
            + 0.5 * (mu + 1.0) * math.log1p(k)
            + 0.5 * (mu - 1.0) * (np.log(gamma) - math.log(k))
            - mu * k
            - 0.5 * (mu + 1.0) * math.log(mean)
            - mu * (1.0 + k) * gamma / mean
            + np.log(specfun.bessel_i_scaled(mu - 1.0, z))
            + z
        )
        return np.exp(log_p)

    def _pdf_at_zero(self, mean):
        if self.mu != 1.0:
            return 0.0 if self.mu > 1.0 else math.inf
        return math.exp(-self.kappa) * (1.0 + self.kappa) / mean

    def _cdf(self, g, mean):
        # Poisson(kappa mu) mixture of Gamma(mu + j) laws with a common scale
        lam = self.kappa * self.mu
        theta = mean / (self.mu * (1.0 + self.kappa))
        jmax = int(lam + 12.0 * math.sqrt(lam) + 40)
        j = np.arange(jmax + 1)
        weights = np.exp(j * math.log(lam) - lam - special.gammaln(j + 1)) if lam > 0 else (j == 0).astype(float)
        return np.array([float(np.dot(weights, special.gammainc(self.mu + j, x / theta))) for x in g])

    def _draw(self, mean, count, rng):
        theta = mean / (self.mu * (1.0 + self.kappa))
        if self.kappa == 0:
            return theta * rng.gamma(self.mu, 1.0, count)
        return 0.5 * theta * rng.noncentral_chisquare(2.0 * self.mu, 2.0 * self.kappa * self.mu, count)


@dataclass(frozen=True)
class EtaMu(FadingModel):
    """eta-mu fading; ``format=1`` takes a power ratio ``eta > 0``, ``format=2`` a correlation ``|eta| < 1``."""

    eta: float
    mu: float
    format: int = 1
    name: ClassVar[str] = "emu"

    def __post_init__(self):
        if self.format not in (1, 2):
            raise DomainError(f"eta-mu format must be 1 or 2, got {self.format}")
        if self.format == 1 and not self.eta > 0:
            raise DomainError(f"format 1 needs eta > 0, got {self.eta}")
        if self.format == 2 and not -1 < self.eta < 1:
            raise DomainError(f"format 2 needs -1 < eta < 1, got {self.eta}")
        if not self.mu > 0:
            raise DomainError(f"mu must be > 0, got {self.mu}")

    @property
    def h(self) -> float:
        e = self.eta
        return (2.0 + 1.0 / e + e) / 4.0 if self.format == 1 else 1.0 / (1.0 - e * e)

    @property
    def big_h(self) -> float:
        e = self.eta
        return (1.0 / e - e) / 4.0 if self.format == 1 else e / (1.0 - e * e)

    @property
    def zero_exponent(self):
        return 2.0 * self.mu - 1.0

    def log_unit_moment(self, n):
        mu, h, big_h = self.mu, self.h, self.big_h
        if not 2.0 * mu + n > 0:
            raise DomainError(f"eta-mu moment of order {n} undefined for mu={mu}")
        hyp = specfun.pfq([mu + n / 2.0 + 0.5, mu + n / 2.0], [mu + 0.5], (big_h / h) ** 2)
        return (
            math.lgamma(2.0 * mu + n)
            - (mu + n) * math.log(h)
            - n * math.log(2.0 * mu)
            - math.lgamma(2.0 * mu)
            + math.log(hyp)
        )

    def _pdf(self, gamma, mean):
        mu, h, big_h = self.mu, self.h, abs(self.big_h)
        if big_h == 0:
            theta = mean / (2.0 * mu * h)
            return np.exp(
                (2.0 * mu - 1.0) * np.log(gamma) - gamma / theta - 2.0 * mu * math.log(theta) - math.lgamma(2.0 * mu)
            )
        # (gamma/H)^(mu-1/2) I_(mu-1/2)(c H gamma) is even in H
        z = 2.0 * mu * big_h * gamma / mean
        log_p = (
            math.log(2.0 * math.sqrt(math.pi))
            + mu * math.log(h)
            - math.lgamma(mu)
            + (mu + 0.5) * math.log(mu / mean)
            + (mu - 0.5) * (np.log(gamma) - math.log(big_h))
            - 2.0 * mu * h * gamma / mean
            + np.log(specfun.bessel_i_scaled(mu - 0.5, z))
            + z
        )
        return np.exp(log_p)

    def _pdf_at_zero(self, mean):
        if self.mu != 0.5:
            return 0.0 if self.mu > 0.5 else math.inf
        return math.sqrt(self.h) / mean

    def _draw(self, mean, count, rng):
        # sum of in-phase and quadrature cluster powers: two independent gammas of shape mu
        h, big_h, mu = self.h, self.big_h, self.mu
        x = rng.gamma(mu, mean / (2.0 * mu * (h - big_h)), count)
        y = rng.gamma(mu, mean / (2.0 * mu * (h + big_h)), count)
        return x + y


# ---------------------------------------------------------------------------
# no fading


@dataclass(frozen=True)
class Awgn(FadingModel):
    """Deterministic channel, ``gamma = mean`` with probability one."""

    name: ClassVar[str] = "awgn"

    @property
    def zero_exponent(self):
        return math.inf

    def log_unit_moment(self, n):
        return 0.0

    def _pdf(self, gamma, mean):
        raise DomainError("the AWGN channel has no density")

    def pdf(self, gamma, mean):
        raise DomainError("the AWGN channel has no density")

    def _cdf(self, g, mean):
        return (g >= mean).astype(float)

    def _draw(self, mean, count, rng):
        return np.full(count, mean)


# ---------------------------------------------------------------------------
# integration against the density


def _quad(f, lo, hi, epsabs, epsrel, limit):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        value, err = integrate.quad(f, lo, hi, epsabs=epsabs, epsrel=epsrel, limit=limit)[:2]
    return value, err


def integrate_pdf(model: FadingModel, mean, weight=None, weight_exponent: float = 0.0,
                  upper: float = math.inf, rel_tol: float = 1e-8, limit: int = 2000):
    """``int_0^upper weight(gamma) pdf(gamma) dgamma`` and its error estimate.

    The range is split at ``mean/100``, ``mean`` and ``100 mean``. The first
    piece is integrated in ``u = gamma^(1/p)``, with ``p`` chosen to cancel an
    integrable singularity at the origin (``weight ~ gamma^weight_exponent``
    there); the last piece is mapped to ``[0, 1)`` by
    ``gamma = a + mean t/(1-t)``.
    """
    mean = mean_value(mean)
    pdf_ = model._pdf

    def f(g):
        if g <= 0.0:
            return 0.0
        p = pdf_(np.array([g]), mean)[0]
        return p * weight(g) if weight is not None else p

    knots = [0.0, mean / 100.0, mean, 100.0 * mean]
    pieces = []
    for lo, hi in zip(knots, knots[1:] + [math.inf]):
        if lo >= upper:
            break
        pieces.append((lo, min(hi, upper)))

    e = model.zero_exponent + weight_exponent
    power = 1.0 / (1.0 + e) if e < -0.25 else 1.0

    def head(u):
        return power * u ** (power - 1.0) * f(u**power) if u > 0 else 0.0

    def tail_map(a):
        def g(t):
            if t >= 1.0:
                return 0.0
            return f(a + mean * t / (1.0 - t)) * mean / (1.0 - t) ** 2
        return g

    # bulk pieces first so the others can use an absolute tolerance relative to it
    order = sorted(range(len(pieces)), key=lambda i: (i not in (1, 2), i))
    total = error = scale = 0.0
    for i in order:
        lo, hi = pieces[i]
        epsabs = 0.0 if i in (1, 2) or total == 0.0 else 0.01 * rel_tol * abs(total)
        if i == 0:
            v, err = _quad(head, 0.0, hi ** (1.0 / power), epsabs, rel_tol, limit)
        elif math.isinf(hi):
            v, err = _quad(tail_map(lo), 0.0, 1.0, epsabs, rel_tol, limit)
        else:
            v, err = _quad(f, lo, hi, epsabs, rel_tol, limit)
        total += v
        scale += abs(v)
        error += err
    # measured against the summed piece magnitudes so sign-changing weights are not penalized
    if not error <= rel_tol * scale + 1e-300:
        raise NonConvergenceError(
            f"quadrature for {model.spec()} at mean {mean:g} stalled: error {error:.3g} on {total:.6g}"
        )
    return total, error


# ---------------------------------------------------------------------------
# model strings

MODEL_TYPES = {
    cls.name: cls
    for cls in (
        GeneralizedNakagami, Nakagami, Rayleigh, Weibull, OneSidedGaussian,
        Lognormal, Egk, KappaMu, EtaMu, Awgn,
    )
}

_NAME_ALIASES = {"awgn-proxy": "awgn"}
_KEY_ALIASES = {"sigma": "sigma_db", "ms": "m_s", "xis": "xi_s", "fmt": "format"}


class ModelSpecError(DomainError):
    """Malformed model string; ``column`` is the 1-based offending position."""

    def __init__(self, message: str, text: str, column: int):
        self.text = text
        self.column = column
        super().__init__(f"{message} (column {column}): {text!r}")


def parse_model(text: str) -> FadingModel:
    """Build a model from ``name:key=val,key=val``, e.g. ``gnak:m=2.5,xi=0.7``."""
    name, sep, body = text.strip().partition(":")
    offset = len(text) - len(text.lstrip())
    cls = MODEL_TYPES.get(_NAME_ALIASES.get(name, name))
    if cls is None:
        known = ", ".join(sorted(MODEL_TYPES))
        raise ModelSpecError(f"unknown model {name!r}; expected one of {known}", text, offset + 1)
    allowed = {f.name for f in fields(cls)}
    kwargs = {}
    col = offset + len(name) + len(sep) + 1
    for item in body.split(",") if body.strip() else []:
        key, eq, raw = item.partition("=")
        key_col = col + len(item) - len(item.lstrip())
        key = key.strip()
        key = _KEY_ALIASES.get(key, key)
        if not eq:
            raise ModelSpecError(f"expected key=value, got {item.strip()!r}", text, key_col)
        if key not in allowed:
            raise ModelSpecError(f"{name} has no parameter {key!r}", text, key_col)
        if key in kwargs:
            raise ModelSpecError(f"parameter {key!r} given twice", text, key_col)
        try:
            value = float(raw)
        except ValueError:
            raise ModelSpecError(f"bad number {raw.strip()!r}", text, col + len(item.partition("=")[0]) + 1) from None
        kwargs[key] = int(value) if key == "format" else value
        col += len(item) + 1
    missing = [f.name for f in fields(cls) if f.name not in kwargs and f.default is MISSING]
    if missing:
        raise ModelSpecError(f"{name} needs {', '.join(missing)}", text, len(text) + 1)
    return cls(**kwargs)


# ---------------------------------------------------------------------------
# functional surface


def pdf(model: FadingModel, gamma, mean):
    return model.pdf(gamma, mean)


def cdf(model: FadingModel, gamma, mean):
    return model.cdf(gamma, mean)


def moment(model: FadingModel, order: float, mean) -> float:
    return model.moment(order, mean)


def sample(model: FadingModel, mean, count: int, seed=None) -> np.ndarray:
    return model.sample(mean, count, seed)
