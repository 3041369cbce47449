"""Mean-SNR value types with dB helpers."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError


def db_to_linear(db):
    return 10.0 ** (np.asarray(db, dtype=float) / 10.0) if np.ndim(db) else 10.0 ** (db / 10.0)


def linear_to_db(value):
    return 10.0 * np.log10(value) if np.ndim(value) else 10.0 * math.log10(value)


@dataclass(frozen=True)
class MeanSnr:
    """Average SNR in linear units."""

    value: float

    def __post_init__(self):
        if not self.value > 0:
            raise DomainError(f"mean SNR must be positive, got {self.value}")

    @classmethod
    def from_db(cls, db: float) -> "MeanSnr":
        return cls(db_to_linear(db))

    @property
    def db(self) -> float:
        return linear_to_db(self.value)

    def __float__(self):
        return float(self.value)


@dataclass(frozen=True)
class SnrGrid:
    """Ordered mean-SNR points stored linearly."""

    values: tuple

    def __post_init__(self):
        vals = tuple(float(v) for v in self.values)
        if any(not v > 0 for v in vals):
            raise DomainError("SNR grid values must be positive")
        if any(b <= a for a, b in zip(vals, vals[1:])):
            raise DomainError("SNR grid must be strictly increasing")
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_db_range(cls, start_db: float, stop_db: float, points: int) -> "SnrGrid":
        if points < 2 or not start_db < stop_db:
            raise DomainError("need points >= 2 and start < stop")
        return cls(tuple(db_to_linear(d) for d in np.linspace(start_db, stop_db, points)))

    @property
    def db(self) -> tuple:
        return tuple(linear_to_db(v) for v in self.values)

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)


def mean_value(mean) -> float:
    """Linear value of a ``MeanSnr`` or a plain positive number."""
    value = float(mean)
    if not value > 0:
        raise DomainError(f"mean SNR must be positive, got {value}")
    return value
