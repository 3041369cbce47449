"""Exact and asymptotic higher-order statistics of channel capacity over fading channels."""

from .errors import (
    BracketError,
    DivergenceError,
    DomainError,
    HoccError,
    InsufficientCoefficientsError,
    NonConvergenceError,
    NonFiniteSampleError,
    PoleError,
    UnsupportedModelError,
)
from .fading import (
    Awgn,
    Egk,
    EtaMu,
    FadingModel,
    GeneralizedNakagami,
    KappaMu,
    Lognormal,
    Nakagami,
    OneSidedGaussian,
    Rayleigh,
    Weibull,
    parse_model,
)
from .snr import MeanSnr, SnrGrid

__version__ = "0.1.0"
