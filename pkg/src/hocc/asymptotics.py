"""High- and low-SNR asymptotes of the higher-order capacity statistics.

At high SNR ``E[log^n(1+gamma)]`` approaches ``E[log^n gamma]``, which
expands exactly in the auxiliary coefficients:
``log^n(mean) + sum_k C(n,k) mu_k log^(n-k)(mean)``. At low SNR
``log(1+gamma) ~ gamma`` and the statistic approaches ``mu_hat_n mean^n``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from . import specfun
from .errors import DomainError, InsufficientCoefficientsError
from .fading import (
    Awgn,
    Egk,
    FadingModel,
    GeneralizedNakagami,
    KappaMu,
    Lognormal,
    Nakagami,
    OneSidedGaussian,
    Rayleigh,
    Weibull,
)
from .snr import mean_value
from .statistics import AuxCoefficients, mu_coeffs, mu_hat

__all__ = [
    "EULER_GAMMA",
    "HoccResult",
    "hocc_high",
    "acc_high",
    "acc_high_closed",
    "hocc_low",
    "jensen_high",
    "capacity_gap",
    "vertical_offset",
]

EULER_GAMMA = 0.5772156649015329

MethodTag = Literal["quadrature", "monte-carlo", "high-asymptote", "low-asymptote", "jensen"]


@dataclass(frozen=True)
class HoccResult:
    """A capacity statistic in nats^order; ``error`` is ``None`` for asymptotes."""

    value: float
    method: MethodTag
    order: int
    mean: float
    error: float | None = None

    def __float__(self):
        return float(self.value)


def _check_order(n: int) -> int:
    if int(n) != n or n < 1:
        raise DomainError(f"order must be a positive integer, got {n}")
    return int(n)


def hocc_high(model: FadingModel, n: int, mean, coeffs: AuxCoefficients | None = None) -> HoccResult:
    """High-SNR asymptote of ``E[log^n(1+gamma)]``."""
    n = _check_order(n)
    mean = mean_value(mean)
    if coeffs is None:
        coeffs = mu_coeffs(model, n)
    if len(coeffs) < n + 1:
        raise InsufficientCoefficientsError(
            f"order {n} needs mu_0..mu_{n}, got {len(coeffs)} coefficients"
        )
    log_mean = math.log(mean)
    value = log_mean**n + sum(math.comb(n, k) * coeffs[k] * log_mean ** (n - k) for k in range(n + 1))
    return HoccResult(value, "high-asymptote", n, mean)


def acc_high(model: FadingModel, mean, coeffs: AuxCoefficients | None = None) -> HoccResult:
    """High-SNR asymptote of the ergodic capacity, ``log(mean) + mu_1``."""
    return hocc_high(model, 1, mean, coeffs)


def acc_high_closed(model: FadingModel, mean) -> float:
    """Family-specific simplified form of :func:`acc_high`."""
    log_mean = math.log(mean_value(mean))
    dg = specfun.polygamma
    if isinstance(model, Rayleigh):
        return log_mean - EULER_GAMMA
    if isinstance(model, (Nakagami, OneSidedGaussian)):
        m = model.shape[0]
        return log_mean - math.log(m) + dg(0, m)
    if isinstance(model, Weibull):
        xi = model.xi
        return log_mean - math.lgamma(1.0 + 1.0 / xi) - EULER_GAMMA / xi
    if isinstance(model, GeneralizedNakagami):
        return log_mean - math.log(model.beta) + dg(0, model.m) / model.xi
    if isinstance(model, Lognormal):
        return log_mean - model.spread
    if isinstance(model, Egk):
        return (
            log_mean
            - math.log(model.beta * model.beta_s)
            + dg(0, model.m) / model.xi
            + dg(0, model.m_s) / model.xi_s
        )
    if isinstance(model, KappaMu):
        kappa, mu = model.kappa, model.mu
        hyp = 0.0
        if kappa > 0:
            hyp = -specfun.hod_pfq([0.0], [mu], -kappa * mu, m=[1], n=[0])
        return log_mean - math.log((1.0 + kappa) * mu) + dg(0, mu) + hyp
    if isinstance(model, Awgn):
        return log_mean
    return acc_high(model, mean).value


def hocc_low(model: FadingModel, n: int, mean) -> HoccResult:
    """Low-SNR asymptote ``mu_hat_n mean^n``."""
    n = _check_order(n)
    mean = mean_value(mean)
    value = mu_hat(model, n) * mean**n
    return HoccResult(value, "low-asymptote", n, mean)


def jensen_high(n: int, mean) -> HoccResult:
    """The AWGN curve ``log^n(mean)``, a high-SNR lower bound for any fading."""
    n = _check_order(n)
    mean = mean_value(mean)
    return HoccResult(math.log(mean) ** n, "jensen", n, mean)


def capacity_gap(model: FadingModel, n: int, mean, regime: str = "high",
                 coeffs: AuxCoefficients | None = None) -> float:
    """Log-domain gap between the AWGN curve and the model's asymptote at ``mean``.

    ``high``: ``ln(log^n(mean) / hocc_high)``; ``low``: ``ln(hocc_low / mean^n)``.
    Neither is constant in ``mean`` in general; see :func:`vertical_offset`.
    """
    if regime == "high":
        awgn, faded = jensen_high(n, mean).value, hocc_high(model, n, mean, coeffs).value
    elif regime == "low":
        awgn, faded = mean_value(mean) ** n, hocc_low(model, n, mean).value
        awgn, faded = faded, awgn
    else:
        raise DomainError(f"regime must be 'high' or 'low', got {regime!r}")
    if not (awgn > 0 and faded > 0):
        raise DomainError(f"gap undefined: capacities {awgn:g} and {faded:g} must be positive")
    return math.log(awgn / faded)


def vertical_offset(model: FadingModel, coeffs: AuxCoefficients | None = None) -> float:
    """``C_awgn - C_model`` between first-order high-SNR asymptotes; equals ``-mu_1`` at every SNR."""
    if coeffs is None:
        coeffs = mu_coeffs(model, 1)
    return -coeffs[1]
