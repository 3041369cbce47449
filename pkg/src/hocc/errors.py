"""Exception hierarchy shared by every module of the package."""


class HoccError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(HoccError, ValueError):
    """An argument lies outside the domain of the requested function."""


class PoleError(DomainError):
    """A lower hypergeometric parameter is a non-positive integer."""


class DivergenceError(HoccError, ValueError):
    """A series is evaluated outside its region of convergence."""


class NonConvergenceError(HoccError, RuntimeError):
    """An iterative procedure exhausted its budget before converging."""


class NonFiniteSampleError(HoccError, FloatingPointError):
    """A sampled function value was NaN or infinite."""


class UnsupportedModelError(HoccError, NotImplementedError):
    """The requested operation has no implementation for this fading model."""


class InsufficientCoefficientsError(HoccError, ValueError):
    """Fewer auxiliary coefficients were supplied than the order requires."""


class BracketError(HoccError, RuntimeError):
    """A root or minimum could not be bracketed in the search interval."""
