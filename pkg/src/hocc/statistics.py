"""Higher-order amount of fading and the auxiliary coefficients derived from it.

``AF_n = E[gamma^n] / E[gamma]^n - 1`` is a smooth function of the real
order ``n``; its derivatives at ``n = 0`` (the auxiliary coefficients
``mu_k``) determine the high-SNR asymptote, and its value plus one
(``mu_hat``) the low-SNR asymptote.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Literal

from . import specfun
from .errors import DomainError, UnsupportedModelError
from .fading import (
    Awgn,
    Egk,
    EtaMu,
    FadingModel,
    KappaMu,
    Lognormal,
    _GeneralizedGamma,
)
from .specfun import GlConfig

__all__ = ["AuxCoefficients", "aof", "mu_coeffs_gl", "mu_coeffs_closed", "mu_coeffs", "mu_hat"]

Method = Literal["closed-form", "gl-numeric"]


@dataclass(frozen=True)
class AuxCoefficients:
    """``mu_0 .. mu_K`` for one model together with how they were obtained."""

    values: tuple
    method: Method
    model: FadingModel

    def __post_init__(self):
        vals = tuple(float(v) for v in self.values)
        if not all(math.isfinite(v) for v in vals):
            raise DomainError(f"auxiliary coefficients must be finite, got {vals}")
        object.__setattr__(self, "values", vals)

    @property
    def max_order(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, k):
        return self.values[k]

    def __len__(self):
        return len(self.values)


def aof(model: FadingModel, order: float, mean=1.0) -> float:
    """Amount of fading of real order ``order``; independent of ``mean`` for scale families."""
    model.log_moment(order, mean)  # validates mean and the order's domain
    return math.expm1(model.log_unit_moment(order))


def mu_hat(model: FadingModel, order: int, mean=1.0) -> float:
    """``E[gamma^n] / mean^n``, the low-SNR coefficient."""
    if order == 1:
        return 1.0
    return aof(model, order, mean) + 1.0


def mu_coeffs_gl(model: FadingModel, max_order: int, cfg: GlConfig = GlConfig()) -> AuxCoefficients:
    """``mu_k`` by the centered Grunwald-Letnikov stencil applied to ``n -> AF_n``."""
    if max_order > 4:
        warnings.warn(
            f"GL coefficients above order 4 lose accuracy quickly (requested {max_order})",
            RuntimeWarning,
            stacklevel=2,
        )

    def af(n):
        return math.expm1(model.log_unit_moment(n))

    values = [specfun.gl_derivative(af, 0.0, k, cfg) for k in range(max_order + 1)]
    return AuxCoefficients(tuple(values), "gl-numeric", model)


def _compositions(total: int, parts: int):
    """Non-negative integer tuples of length ``parts`` summing to ``total``, lexicographic."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _multinomial(parts) -> int:
    out, acc = 1, 0
    for p in parts:
        acc += p
        out *= math.comb(acc, p)
    return out


def _gamma_factor(order: int, m: float, xi: float) -> float:
    """``d^i/dn^i Gamma(m + n/xi) / Gamma(m)`` at ``n = 0``.

    Equal to ``psi_n(i, m, 1/xi, 0) / Gamma(m)``; the Bell form avoids
    overflowing ``Gamma(m)`` for large fading figures.
    """
    if m < 100.0:
        return specfun.psi_n(order, m, 1.0 / xi, 0.0) / math.gamma(m)
    return xi ** (-order) * specfun.complete_bell([specfun.polygamma(j, m) for j in range(order)])


def _closed_generalized_gamma(model: _GeneralizedGamma, k: int) -> float:
    m, xi = model.shape
    log_beta = math.log(model.beta)
    return sum(
        math.comb(k, j) * _gamma_factor(k - j, m, xi) * (-log_beta) ** j for j in range(k + 1)
    )


def _closed_lognormal(model: Lognormal, k: int) -> float:
    s = model.spread
    return sum(math.comb(k, j) * specfun.phi_n(k - j, 0.0, s, 0.0) * (-s) ** j for j in range(k + 1))


def _closed_egk(model: Egk, k: int) -> float:
    log_bb = math.log(model.beta * model.beta_s)
    total = 0.0
    for i, j, l in _compositions(k, 3):
        total += (
            _multinomial((i, j, l))
            * _gamma_factor(i, model.m, model.xi)
            * _gamma_factor(j, model.m_s, model.xi_s)
            * (-log_bb) ** l
        )
    return total


def _closed_kappa_mu(model: KappaMu, k: int) -> float:
    kappa, mu = model.kappa, model.mu
    log_scale = math.log((1.0 + kappa) * mu)
    total = 0.0
    for i, j, l in _compositions(k, 3):
        if j == 0:
            hyp = 1.0
        elif kappa == 0:
            continue
        else:
            # d/dn of 1F1(-n; mu; x) is minus the derivative in the upper parameter
            hyp = (-1) ** j * specfun.hod_pfq([0.0], [mu], -kappa * mu, m=[j], n=[0])
        total += _multinomial((i, j, l)) * _gamma_factor(i, mu, 1.0) * hyp * (-log_scale) ** l
    return total


def mu_coeffs_closed(model: FadingModel, max_order: int) -> AuxCoefficients:
    """``mu_k`` from the closed-form derivative expansions of each family.

    Supported: the generalized Nakagami-m family and its special cases,
    lognormal, EGK, kappa-mu and the deterministic channel. eta-mu has no
    closed form here and raises :class:`UnsupportedModelError`.
    """
    if max_order < 0:
        raise DomainError(f"max_order must be non-negative, got {max_order}")
    if isinstance(model, _GeneralizedGamma):
        term = _closed_generalized_gamma
    elif isinstance(model, Lognormal):
        term = _closed_lognormal
    elif isinstance(model, Egk):
        term = _closed_egk
    elif isinstance(model, KappaMu):
        term = _closed_kappa_mu
    elif isinstance(model, Awgn):
        return AuxCoefficients((0.0,) * (max_order + 1), "closed-form", model)
    elif isinstance(model, EtaMu):
        raise UnsupportedModelError("no closed-form auxiliary coefficients for eta-mu fading")
    else:
        raise UnsupportedModelError(f"no closed-form auxiliary coefficients for {model.spec()}")
    values = [0.0] + [term(model, k) for k in range(1, max_order + 1)]
    return AuxCoefficients(tuple(values), "closed-form", model)


def mu_coeffs(model: FadingModel, max_order: int, cfg: GlConfig = GlConfig()) -> AuxCoefficients:
    """Closed-form coefficients where available, GL otherwise."""
    try:
        return mu_coeffs_closed(model, max_order)
    except UnsupportedModelError:
        return mu_coeffs_gl(model, max_order, cfg)
