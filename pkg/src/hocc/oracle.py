"""Reference values of ``E[log^n(1+gamma)]`` by quadrature and by Monte Carlo."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .asymptotics import HoccResult, _check_order
from .errors import DomainError
from .fading import Awgn, FadingModel, integrate_pdf
from .snr import mean_value

__all__ = ["QuadratureConfig", "McConfig", "hocc_quadrature", "hocc_monte_carlo"]


@dataclass(frozen=True)
class QuadratureConfig:
    rel_tol: float = 1e-8
    max_subdivisions: int = 2000

    def __post_init__(self):
        if not 0 < self.rel_tol <= 1e-4:
            raise DomainError(f"rel_tol must lie in (0, 1e-4], got {self.rel_tol}")
        if self.max_subdivisions < 50:
            raise DomainError(f"max_subdivisions must be at least 50, got {self.max_subdivisions}")


@dataclass(frozen=True)
class McConfig:
    samples: int = 10**6
    seed: int = 20240601
    batch: int = 2**18

    def __post_init__(self):
        if self.samples < 10**4:
            raise DomainError(f"samples must be at least 1e4, got {self.samples}")
        if self.batch < 1:
            raise DomainError(f"batch must be positive, got {self.batch}")
        if not 0 <= self.seed < 2**64:
            raise DomainError(f"seed must be a 64-bit unsigned integer, got {self.seed}")


def hocc_quadrature(model: FadingModel, n: int, mean, cfg: QuadratureConfig = QuadratureConfig()) -> HoccResult:
    """``int_0^inf log^n(1+gamma) pdf(gamma) dgamma`` by adaptive quadrature."""
    n = _check_order(n)
    mean = mean_value(mean)
    if isinstance(model, Awgn):
        return HoccResult(math.log1p(mean) ** n, "quadrature", n, mean, 0.0)
    value, error = integrate_pdf(
        model,
        mean,
        weight=lambda g: math.log1p(g) ** n,
        weight_exponent=float(n),
        rel_tol=cfg.rel_tol,
        limit=cfg.max_subdivisions,
    )
    return HoccResult(value, "quadrature", n, mean, error)


def hocc_monte_carlo(model: FadingModel, n: int, mean, cfg: McConfig = McConfig()) -> HoccResult:
    """Sample mean of ``log^n(1+gamma)`` with its standard error.

    Draws are split into batches whose generators are spawned from the master
    seed, so the result depends only on ``cfg``.
    """
    n = _check_order(n)
    mean = mean_value(mean)
    sizes = [cfg.batch] * (cfg.samples // cfg.batch)
    if cfg.samples % cfg.batch:
        sizes.append(cfg.samples % cfg.batch)
    children = np.random.SeedSequence(cfg.seed).spawn(len(sizes))
    count, avg, m2 = 0, 0.0, 0.0
    for size, child in zip(sizes, children):
        x = np.log1p(model.sample(mean, size, seed=child)) ** n
        b_avg = float(x.mean())
        b_m2 = float(((x - b_avg) ** 2).sum())
        # Chan et al. pairwise combination of running moments
        delta = b_avg - avg
        total = count + size
        avg += delta * size / total
        m2 += b_m2 + delta * delta * count * size / total
        count = total
    stderr = math.sqrt(m2 / (count - 1) / count)
    return HoccResult(avg, "monte-carlo", n, mean, stderr)
