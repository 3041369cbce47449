"""Special-function kernel.

Gamma-family functions, error functions and Bessel functions are thin,
domain-checked wrappers over :mod:`scipy.special`. The generalized
hypergeometric series, its parameter derivatives, the Bell-polynomial
derivatives of ``Gamma(a + b k)`` and ``exp(a + b k^2)``, the centered
Grunwald-Letnikov stencil and the extended incomplete gamma function are
implemented here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy import integrate, special

from .errors import (
    DivergenceError,
    DomainError,
    NonConvergenceError,
    NonFiniteSampleError,
    PoleError,
)

__all__ = [
    "GlConfig",
    "SeriesConfig",
    "ln_gamma",
    "polygamma",
    "erf",
    "erf_inv",
    "bessel_i",
    "bessel_i_scaled",
    "pfq",
    "hod_pfq",
    "complete_bell",
    "psi_n",
    "phi_n",
    "gl_derivative",
    "ext_inc_gamma",
    "log_ext_inc_gamma",
]


@dataclass(frozen=True)
class GlConfig:
    """Step and order limit of the centered Grunwald-Letnikov stencil."""

    step: float = 1e-3
    max_order: int = 8

    def __post_init__(self):
        if not (0.0 < self.step <= 0.01):
            raise DomainError(f"GL step must lie in (0, 0.01], got {self.step}")
        if not (0 <= self.max_order <= 8):
            raise DomainError(f"GL max_order must lie in [0, 8], got {self.max_order}")


@dataclass(frozen=True)
class SeriesConfig:
    """Truncation control for hypergeometric series."""

    rel_tol: float = 1e-15
    max_terms: int = 20000

    def __post_init__(self):
        if not (0.0 < self.rel_tol <= 1e-6):
            raise DomainError(f"rel_tol must lie in (0, 1e-6], got {self.rel_tol}")
        if self.max_terms < 200:
            raise DomainError(f"max_terms must be at least 200, got {self.max_terms}")


DEFAULT_SERIES = SeriesConfig()


# ---------------------------------------------------------------------------
# gamma family, error function, Bessel I


def ln_gamma(x: float) -> float:
    """Natural log of the gamma function for ``x > 0``."""
    if not x > 0:
        raise DomainError(f"ln_gamma requires x > 0, got {x}")
    return float(special.gammaln(x))


def polygamma(m: int, x: float) -> float:
    """Polygamma function: the ``(m+1)``-th derivative of ``ln Gamma`` at ``x``."""
    if m < 0 or int(m) != m:
        raise DomainError(f"polygamma order must be a natural number, got {m}")
    if not x > 0:
        raise DomainError(f"polygamma requires x > 0, got {x}")
    if m == 0:
        return float(special.digamma(x))
    return float(special.polygamma(int(m), x))


def erf(x: float) -> float:
    return float(special.erf(x))


def erf_inv(y: float) -> float:
    if not abs(y) < 1:
        raise DomainError(f"erf_inv requires |y| < 1, got {y}")
    return float(special.erfinv(y))


def bessel_i(nu: float, x: float) -> float:
    """Modified Bessel function of the first kind ``I_nu(x)`` for ``x >= 0``."""
    if nu < -1:
        raise DomainError(f"bessel_i requires nu >= -1, got {nu}")
    if x < 0:
        raise DomainError(f"bessel_i requires x >= 0, got {x}")
    value = float(special.iv(nu, x))
    if math.isinf(value):
        raise OverflowError(f"I_{nu}({x}) exceeds the double range")
    return value


def bessel_i_scaled(nu, x):
    """``exp(-x) I_nu(x)``; vectorized, never overflows for finite ``x >= 0``."""
    return special.ive(nu, x)


# ---------------------------------------------------------------------------
# generalized hypergeometric series and its parameter derivatives


class _Jet:
    """Truncated Taylor series ``sum c[r] eps^r`` of a Pochhammer factor.

    Coefficients are kept normalized with a running log scale so that
    products of hundreds of factors neither overflow nor underflow.
    """

    __slots__ = ("c", "log_scale")

    def __init__(self, order: int):
        self.c = np.zeros(order + 1)
        self.c[0] = 1.0
        self.log_scale = 0.0

    def mul_linear(self, d: float):
        # (d + eps) * series
        c = self.c
        new = d * c
        new[1:] += c[:-1]
        self._store(new)

    def div_linear(self, d: float):
        # series / (d + eps), d != 0
        c = self.c
        new = np.empty_like(c)
        new[0] = c[0] / d
        for r in range(1, len(c)):
            new[r] = (c[r] - new[r - 1]) / d
        self._store(new)

    def _store(self, new):
        s = float(np.max(np.abs(new)))
        if s > 0.0:
            new = new / s
            self.log_scale += math.log(s)
        self.c = new

    def derivative(self, order: int):
        """``(sign, log|value|)`` of the ``order``-th derivative at ``eps = 0``."""
        v = self.c[order]
        if v == 0.0:
            return 0.0, -math.inf
        return math.copysign(1.0, v), math.log(abs(v)) + self.log_scale + math.lgamma(order + 1)


def _is_nonpositive_integer(v: float) -> bool:
    return v <= 0 and float(v).is_integer()


def _orders(orders, size, label):
    if orders is None:
        return (0,) * size
    orders = tuple(int(o) for o in orders)
    if len(orders) != size:
        raise DomainError(f"{label} has {len(orders)} entries, expected {size}")
    if any(o < 0 for o in orders):
        raise DomainError(f"{label} must be natural numbers, got {orders}")
    return orders


def _hypergeometric_series(a, b, x, m, n, k, cfg: SeriesConfig) -> float:
    a = tuple(float(v) for v in a)
    b = tuple(float(v) for v in b)
    x = float(x)
    m = _orders(m, len(a), "upper derivative orders")
    n = _orders(n, len(b), "lower derivative orders")
    k = int(k)
    if k < 0:
        raise DomainError(f"argument derivative order must be natural, got {k}")
    for bj in b:
        if _is_nonpositive_integer(bj):
            raise PoleError(f"lower parameter {bj} is a non-positive integer")

    # an undifferentiated non-positive integer upper parameter truncates the sum
    degree = None
    for ai, mi in zip(a, m):
        if mi == 0 and _is_nonpositive_integer(ai):
            d = int(-ai)
            degree = d if degree is None else min(degree, d)

    p, q = len(a), len(b)
    if degree is None:
        if p > q + 1:
            raise DivergenceError(f"{p}F{q} diverges for every x != 0")
        if p == q + 1 and abs(x) >= 1.0:
            raise DivergenceError(f"{p}F{q} requires |x| < 1, got {x}")

    upper = [_Jet(mi) for mi in m]
    lower = [_Jet(ni) for ni in n]

    def term(j):
        # derivative orders of every factor at the current index j
        sign, log_mag = 1.0, 0.0
        for jet, mi in zip(upper, m):
            s, lm = jet.derivative(mi)
            sign *= s
            log_mag += lm
        for jet, ni in zip(lower, n):
            s, lm = jet.derivative(ni)
            sign *= s
            log_mag += lm
        if sign == 0.0:
            return 0.0
        power = j - k
        if power > 0:
            if x == 0.0:
                return 0.0
            log_mag += power * math.log(abs(x))
            if x < 0 and power % 2:
                sign = -sign
        log_mag -= math.lgamma(power + 1)
        return sign * math.exp(log_mag)

    last = degree if degree is not None else None
    if x == 0.0:
        # only the index that the argument derivative reduces to x^0 survives
        last = k if last is None else min(last, k)

    j_min = k + int(math.ceil(max([abs(v) for v in a + b] + [0.0]))) + int(math.ceil(abs(x))) + 2
    total = 0.0
    small_run = 0
    prev = None
    for j in range(cfg.max_terms):
        if j >= k:
            t = term(j)
            total += t
            if last is None and j > j_min:
                ratio = abs(t / prev) if prev else 0.0
                tail = abs(t) * (ratio / (1.0 - ratio) if ratio < 1.0 else math.inf)
                if tail <= cfg.rel_tol * abs(total) or (t == 0.0 and total == 0.0):
                    small_run += 1
                    if small_run >= 3:
                        return total
                else:
                    small_run = 0
            prev = t
        if last is not None and j >= last:
            return total
        for jet, ai in zip(upper, a):
            jet.mul_linear(ai + j)
        for jet, bi in zip(lower, b):
            jet.div_linear(bi + j)
    raise NonConvergenceError(
        f"hypergeometric series did not converge within {cfg.max_terms} terms"
    )


def pfq(a: Sequence[float], b: Sequence[float], x: float, cfg: SeriesConfig = DEFAULT_SERIES) -> float:
    """Generalized hypergeometric function ``pFq(a; b; x)`` by direct summation.

    Raises :class:`PoleError` for a non-positive integer lower parameter and
    :class:`DivergenceError` outside the convergence region (``p <= q``, or
    ``p = q + 1`` with ``|x| < 1``; terminating series converge everywhere).
    """
    return _hypergeometric_series(a, b, x, None, None, 0, cfg)


def hod_pfq(
    a: Sequence[float],
    b: Sequence[float],
    x: float,
    m: Sequence[int] | None = None,
    n: Sequence[int] | None = None,
    k: int = 0,
    cfg: SeriesConfig = DEFAULT_SERIES,
) -> float:
    """Mixed parameter/argument derivative of ``pFq``.

    Returns ``prod_i d^{m_i}/da_i^{m_i} prod_j d^{n_j}/db_j^{n_j} d^k/dx^k
    pFq(a; b; x)``. Each series term factorizes over the parameters, so the
    Pochhammer symbols are carried as truncated Taylor expansions and every
    derivative is exact term by term, including at ``a_i = 0`` where
    ``(a)_j`` vanishes but its derivatives do not.
    """
    if sum(m or ()) + sum(n or ()) + int(k) > 6:
        raise DomainError("total derivative order must not exceed 6")
    return _hypergeometric_series(a, b, x, m, n, k, cfg)


# ---------------------------------------------------------------------------
# Bell polynomials and the derivatives of Gamma(a + b k), exp(a + b k^2)


def complete_bell(g: Sequence[float]) -> float:
    """Complete Bell polynomial ``B_n(g_1, ..., g_n)`` with ``n = len(g)``."""
    g = [float(v) for v in g]
    bell = [1.0]
    for order in range(len(g)):
        bell.append(
            sum(math.comb(order, i) * bell[order - i] * g[i] for i in range(order + 1))
        )
    return bell[-1]


def psi_n(n: int, a: float, b: float, k: float) -> float:
    """``n``-th derivative in ``k`` of ``Gamma(a + b k)``.

    Faa di Bruno applied to ``exp(ln Gamma(a + b k))`` gives
    ``b^n Gamma(x) B_n(psi_0(x), ..., psi_{n-1}(x))`` with ``x = a + b k``.
    """
    x = a + b * k
    if not x > 0:
        raise DomainError(f"psi_n requires a + b k > 0, got {x}")
    if n == 0:
        return float(special.gamma(x))
    if n == 1:
        return b * float(special.gamma(x)) * polygamma(0, x)
    g = [polygamma(j, x) for j in range(n)]
    return b**n * float(special.gamma(x)) * complete_bell(g)


def phi_n(n: int, a: float, b: float, k: float) -> float:
    """``n``-th derivative in ``k`` of ``exp(a + b k^2)``."""
    g = [0.0] * n
    if n >= 1:
        g[0] = 2.0 * b * k
    if n >= 2:
        g[1] = 2.0 * b
    return math.exp(a + b * k * k) * complete_bell(g)


# ---------------------------------------------------------------------------
# numerical differentiation


def gl_derivative(
    f: Callable[[float], float], at: float, order: int, cfg: GlConfig = GlConfig()
) -> float:
    """Centered Grunwald-Letnikov estimate of the ``order``-th derivative.

    Averages the forward and backward ``order``-th differences with step
    ``cfg.step``.
    """
    if order < 0 or order > cfg.max_order:
        raise DomainError(f"order must lie in [0, {cfg.max_order}], got {order}")
    eps = cfg.step
    total = 0.0
    sign_k = -1.0 if order % 2 else 1.0
    for j in range(order + 1):
        fp = f(at + j * eps)
        fm = f(at - j * eps)
        if not (math.isfinite(fp) and math.isfinite(fm)):
            raise NonFiniteSampleError(f"f is not finite near {at} (offset {j * eps})")
        total += (-1) ** j * math.comb(order, j) * (sign_k * fp + fm)
    return total / (2.0 * eps**order)


# ---------------------------------------------------------------------------
# extended incomplete gamma function


def _concave_mode(dg, lo, hi, b, beta):
    """Root of the decreasing ``dg`` in ``[lo, hi]`` by Newton steps kept inside the bracket."""
    u = 0.5 * (lo + hi)
    for _ in range(200):
        d = dg(u)
        if d > 0:
            lo = u
        else:
            hi = u
        slope = -math.exp(u) - (b * beta * beta * math.exp(-beta * u) if b > 0 else 0.0)
        step = u - d / slope
        u_new = step if lo < step < hi else 0.5 * (lo + hi)
        if abs(u_new - u) <= 1e-14 * max(1.0, abs(u)):
            return u_new
        u = u_new
    return u


def log_ext_inc_gamma(alpha: float, x: float, b: float, beta: float) -> float:
    """Natural log of :func:`ext_inc_gamma`."""
    if x < 0 or b < 0 or not beta > 0:
        raise DomainError(f"need x >= 0, b >= 0, beta > 0; got x={x}, b={b}, beta={beta}")
    if x == 0 and b == 0 and alpha <= 0:
        raise DomainError(f"integral diverges at 0 for alpha={alpha} with b=0")

    # substitute r = e^u: log-integrand g(u) = alpha u - e^u - b e^{-beta u} is concave
    def g(u):
        return alpha * u - math.exp(u) - (b * math.exp(-beta * u) if b > 0 else 0.0)

    def dg(u):
        return alpha - math.exp(u) + (b * beta * math.exp(-beta * u) if b > 0 else 0.0)

    u_lo = math.log(x) if x > 0 else -math.inf
    if b == 0 and alpha <= 0:
        u_mode = u_lo
    else:
        lo, hi = -1.0, 1.0
        while dg(lo) < 0:
            lo = 2 * lo - 1
        while dg(hi) > 0:
            hi = 2 * hi + 1
        u_mode = _concave_mode(dg, lo, hi, b, beta)
    u_c = max(u_mode, u_lo)
    g_c = g(u_c)
    curvature = math.exp(u_c) + (b * beta * beta * math.exp(-beta * u_c) if b > 0 else 0.0)
    width = 1.0 / math.sqrt(curvature)

    def h(u):
        try:
            return math.exp(g(u) - g_c)
        except OverflowError:
            # exp(u) or exp(-beta u) overflowed far outside the mode: integrand is zero
            return 0.0

    pieces = []
    if u_lo < u_c:
        left = max(u_lo, u_c - 40 * width)
        pieces.append((left, u_c))
        if left > u_lo:
            pieces.append((u_lo, left))
    right = u_c + 40 * width
    pieces += [(u_c, right), (right, math.inf)]

    total = error = 0.0
    for lo, hi in pieces:
        val, err = integrate.quad(h, lo, hi, epsabs=0.0, epsrel=1e-12, limit=400, full_output=1)[:2]
        total += val
        error += err
    if not error <= 1e-9 * total:
        raise NonConvergenceError(
            f"extended incomplete gamma quadrature stalled (error {error:.3g} on {total:.3g})"
        )
    return g_c + math.log(total)


def ext_inc_gamma(alpha: float, x: float, b: float, beta: float) -> float:
    """Extended incomplete gamma ``int_x^inf r^(alpha-1) exp(-r - b r^-beta) dr``."""
    return math.exp(log_ext_inc_gamma(alpha, x, b, beta))
