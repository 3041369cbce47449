"""Where the high- and low-SNR regimes begin for a given fading model.

The high-SNR onset is the mean SNR at which the outage probability at a
threshold ``gamma_th`` drops to one half. The low-SNR boundary compares the
higher-order statistics with the first one: the ratio
``Delta(n) = C(n)/C(1) - 1`` is negative below roughly ``e - 1`` and positive
above, and the boundary is the mean SNR that minimizes a weighted sum of
``Delta(n)^2`` over the first four orders.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy import optimize

from . import specfun
from .errors import BracketError, DomainError
from .fading import FadingModel, OneSidedGaussian
from .oracle import QuadratureConfig, hocc_quadrature
from .snr import MeanSnr, mean_value

__all__ = [
    "INFIMUM_BOUNDARY",
    "SUPREMUM_BOUNDARY",
    "DEFAULT_WEIGHTS",
    "DEFAULT_ORDERS",
    "BoundaryScan",
    "RegimeReport",
    "psi_measure",
    "high_onset",
    "delta_measure",
    "boundary_objective",
    "boundary_scan",
    "low_boundary",
    "supremum_boundary",
    "regime_report",
]

INFIMUM_BOUNDARY = 0.64117587677
SUPREMUM_BOUNDARY = 1.71828182846
DEFAULT_WEIGHTS = (0.25, 0.25, 0.25, 0.25)
DEFAULT_ORDERS = (1, 2, 3, 4)
SCAN_RANGE = (0.3, 2.5)
SCAN_POINTS = 64


def psi_measure(model: FadingModel, gamma_th: float, mean) -> float:
    """Odds ``P / (1 - P)`` of the SNR falling below ``gamma_th``; ``inf`` when ``P = 1``."""
    p = model.cdf(gamma_th, mean)
    return math.inf if p >= 1.0 else p / (1.0 - p)


def high_onset(model: FadingModel, gamma_th: float = 8.0, target_p: float = 0.5) -> MeanSnr:
    """Mean SNR with ``P(gamma < gamma_th) = target_p``."""
    if not gamma_th > 0:
        raise DomainError(f"gamma_th must be positive, got {gamma_th}")
    if not 0 < target_p < 1:
        raise DomainError(f"target_p must lie in (0, 1), got {target_p}")
    if isinstance(model, OneSidedGaussian):
        return MeanSnr(0.5 * gamma_th / specfun.erf_inv(target_p) ** 2)

    def excess(log_mean):
        return model.cdf(gamma_th, math.exp(log_mean)) - target_p

    lo, hi = math.log(1e-4), math.log(1e6)
    if not (excess(lo) > 0 > excess(hi)):
        raise BracketError(f"P({gamma_th}) = {target_p} not bracketed by mean SNR in [1e-4, 1e6]")
    root = optimize.bisect(excess, lo, hi, xtol=1e-10, rtol=1e-12, maxiter=200)
    return MeanSnr(math.exp(root))


def delta_measure(model: FadingModel, n: int, mean, cfg: QuadratureConfig = QuadratureConfig()) -> float:
    """``C(n) / C(1) - 1`` from the quadrature oracle."""
    if n < 1:
        raise DomainError(f"order must be positive, got {n}")
    first = hocc_quadrature(model, 1, mean, cfg).value
    return hocc_quadrature(model, n, mean, cfg).value / first - 1.0


def _check_weights(weights, orders) -> tuple:
    w = tuple(float(v) for v in weights)
    if len(w) != len(orders):
        raise DomainError(f"need {len(orders)} weights, got {len(w)}")
    if any(not v > 0 for v in w):
        raise DomainError(f"weights must be positive, got {w}")
    if abs(sum(w) - 1.0) > 1e-12:
        raise DomainError(f"weights must sum to 1, got {sum(w)!r}")
    return w


def boundary_objective(model: FadingModel, mean, weights: Sequence[float] = DEFAULT_WEIGHTS,
                       orders: Sequence[int] = DEFAULT_ORDERS,
                       cfg: QuadratureConfig = QuadratureConfig()) -> float:
    """``sum_i w_i Delta(orders_i)^2`` at one mean SNR."""
    w = _check_weights(weights, orders)
    mean = mean_value(mean)
    first = hocc_quadrature(model, 1, mean, cfg).value
    total = 0.0
    for wi, n in zip(w, orders):
        if n == 1:
            continue
        delta = hocc_quadrature(model, n, mean, cfg).value / first - 1.0
        total += wi * delta * delta
    return total


@dataclass(frozen=True)
class BoundaryScan:
    """Objective sampled on a logarithmic mean-SNR grid."""

    means: tuple
    values: tuple


def boundary_scan(model: FadingModel, weights=DEFAULT_WEIGHTS, orders=DEFAULT_ORDERS,
                  cfg: QuadratureConfig = QuadratureConfig(), lo: float = SCAN_RANGE[0],
                  hi: float = SCAN_RANGE[1], points: int = SCAN_POINTS) -> BoundaryScan:
    means = np.geomspace(lo, hi, points)
    values = [boundary_objective(model, g, weights, orders, cfg) for g in means]
    return BoundaryScan(tuple(float(g) for g in means), tuple(values))


def low_boundary(model: FadingModel, weights: Sequence[float] = DEFAULT_WEIGHTS,
                 cfg: QuadratureConfig = QuadratureConfig(), orders: Sequence[int] = DEFAULT_ORDERS,
                 scan: BoundaryScan | None = None) -> MeanSnr:
    """Mean SNR minimizing the weighted squared Delta-measures over ``[0.3, 2.5]``.

    A 64-point logarithmic scan locates the best grid cell, then golden-section
    search refines it in ``log(mean)``. Pass ``orders=(2, 3, 4, 5)`` to weight
    the orders above the first instead of the first four.
    """
    _check_weights(weights, orders)
    if scan is None:
        scan = boundary_scan(model, weights, orders, cfg)
    vals = np.asarray(scan.values)
    if vals.max() - vals.min() < 1e-10:
        warnings.warn(f"boundary objective for {model.spec()} is flat across the scan", RuntimeWarning, stacklevel=2)
    i = int(np.argmin(vals))
    logs = np.log(scan.means)
    a = logs[max(i - 1, 0)]
    b = logs[min(i + 1, len(logs) - 1)]

    def objective(log_mean):
        return boundary_objective(model, math.exp(log_mean), weights, orders, cfg)

    if 0 < i < len(logs) - 1:
        res = optimize.minimize_scalar(objective, bracket=(a, logs[i], b), method="golden",
                                       options={"xtol": 1e-10})
    else:
        # minimum on the scan edge: no interior bracket for golden section
        res = optimize.minimize_scalar(objective, bounds=(a, b), method="bounded",
                                       options={"xatol": 1e-10, "maxiter": 200})
    best = res.x if res.fun <= vals[i] else logs[i]
    return MeanSnr(math.exp(best))


def supremum_boundary() -> MeanSnr:
    """Root of ``log(1 + gamma) = 1``: the boundary of a channel without fading."""
    root = optimize.bisect(lambda g: math.log1p(g) - 1.0, 1.0, 2.0, xtol=1e-15, maxiter=200)
    return MeanSnr(root)


@dataclass(frozen=True)
class RegimeReport:
    model: FadingModel
    high_onset_snr: MeanSnr
    low_boundary_snr: MeanSnr
    weights: tuple
    psi_curve: tuple = field(default=())
    delta_curve: tuple = field(default=())
    objective_curve: tuple = field(default=())

    @property
    def within_bracket(self) -> bool:
        return INFIMUM_BOUNDARY <= self.low_boundary_snr.value <= SUPREMUM_BOUNDARY


def regime_report(model: FadingModel, weights=DEFAULT_WEIGHTS, gamma_th: float = 8.0,
                  cfg: QuadratureConfig = QuadratureConfig()) -> RegimeReport:
    """Both regime boundaries plus the psi, Delta(2) and objective curves on the scan grid."""
    weights = _check_weights(weights, DEFAULT_ORDERS)
    scan = boundary_scan(model, weights, DEFAULT_ORDERS, cfg)
    low = low_boundary(model, weights, cfg, scan=scan)
    onset = high_onset(model, gamma_th)
    psi_curve = tuple((g, psi_measure(model, gamma_th, g)) for g in scan.means)
    delta_curve = tuple((g, delta_measure(model, 2, g, cfg)) for g in scan.means)
    return RegimeReport(model, onset, low, weights, psi_curve, delta_curve,
                        tuple(zip(scan.means, scan.values)))
