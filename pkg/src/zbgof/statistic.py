"""Scaled residuals and the zero-bias characteristic-function statistic Z_{n,a}.

The statistic is

    Z_{n,a} = n * int |phi_n'(t) + t phi_n(t)|^2 exp(-a t^2) dt,

with ``phi_n`` the empirical characteristic function of the scaled residuals.
It vanishes iff the empirical characteristic function solves the initial value
problem whose unique solution is the standard normal characteristic function.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateSample, InvalidInput, InvalidTuning, NonFiniteInput, TooFewObservations
from .quadrature import QuadratureSpec, refine

__all__ = [
    "Sample",
    "ScaledResiduals",
    "as_sample",
    "scale_residuals",
    "z_statistic",
    "z_statistic_batch",
    "z_statistic_integral",
    "skewness_limit_diagnostic",
    "check_tuning",
]


@dataclass(frozen=True)
class Sample:
    """Raw observations; validated on construction (finite, n >= 2, non-constant)."""

    values: np.ndarray

    def __post_init__(self):
        x = np.array(self.values, dtype=float).ravel()
        if not np.all(np.isfinite(x)):
            raise NonFiniteInput("sample contains NaN or infinite values")
        if x.size < 2:
            raise TooFewObservations(f"need at least 2 observations, got {x.size}")
        if np.ptp(x) == 0.0:
            raise DegenerateSample("all observations are equal (zero variance)")
        x.setflags(write=False)
        object.__setattr__(self, "values", x)

    @property
    def n(self) -> int:
        return self.values.size


@dataclass(frozen=True)
class ScaledResiduals:
    y: np.ndarray

    @property
    def n(self) -> int:
        return self.y.size


def as_sample(x) -> Sample:
    return x if isinstance(x, Sample) else Sample(x)


def scale_residuals(sample, ddof: int = 0) -> ScaledResiduals:
    """``Y_j = (x_j - mean) / S_n`` with the 1/n-divisor standard deviation.

    ``ddof=1`` divides by the 1/(n-1) standard deviation instead; this is not
    the statistic's definition but is needed to replicate results produced
    with that convention.
    """
    x = as_sample(sample).values
    if ddof not in (0, 1):
        raise InvalidInput("ddof must be 0 or 1")
    # moments from the sorted copy so the result does not depend on input order
    xs = np.sort(x)
    m = xs.mean()
    ds = xs - m
    s = np.sqrt(np.sum(ds * ds) / (x.size - ddof))
    d = x - m
    if s == 0.0:
        raise DegenerateSample("zero sample variance")
    y = d / s
    y.setflags(write=False)
    return ScaledResiduals(y)


def _residuals(res) -> np.ndarray:
    if isinstance(res, ScaledResiduals):
        return res.y
    return scale_residuals(res).y


def check_tuning(a: float, name: str = "a") -> float:
    a = float(a)
    if not (np.isfinite(a) and a > 0):
        raise InvalidTuning(f"tuning parameter {name} must be positive and finite, got {a}")
    return a


def _pair_sum(y: np.ndarray, a: float) -> float:
    """Double sum of the closed form, rearranged to avoid cancellation.

    Each summand is ``c_jk * exp(-u)`` with ``u = d^2/(4a)``.  Writing
    ``exp(-u) = 1 + expm1(-u)`` the ``1``-part sums in closed form through the
    power sums of ``y``; only the ``expm1`` part is accumulated pairwise.  The
    diagonal has ``expm1(0) = 0``, so only ``j < k`` pairs (counted twice) are
    visited.  Without this the naive sum loses all precision once ``a`` is
    large compared with the spread of the residuals.
    """
    n = y.size
    p1 = y.sum()
    p2 = np.dot(y, y)
    lin = 1.0 / (4.0 * a * a) + 1.0 / (2.0 * a)
    head = n * n / (2.0 * a) - (2.0 * n * p2 - 2.0 * p1 * p1) * lin + p1 * p1
    j, k = np.triu_indices(n, 1)
    d2 = (y[j] - y[k]) ** 2
    c = 1.0 / (2.0 * a) - d2 * lin + y[j] * y[k]
    return head + 2.0 * np.dot(c, np.expm1(-d2 / (4.0 * a)))


def z_statistic(res, a: float) -> float:
    """Closed-form Z_{n,a} from scaled residuals (or a raw sample).

    Residuals are sorted first so the summation order, and hence the
    floating-point result, does not depend on the order of the observations.
    """
    a = check_tuning(a)
    y = np.sort(_residuals(res))
    n = y.size
    return float(np.sqrt(np.pi / a) * _pair_sum(y, a) / n)


def z_statistic_batch(Y: np.ndarray, a, chunk_elems: int = 2_000_000) -> np.ndarray:
    """Vectorized Z_{n,a} for the rows of ``Y`` (each row already scaled).

    ``a`` may be a scalar or a sequence; for a sequence the result has shape
    ``(rows, len(a))`` and the pairwise differences are shared across values.
    """
    Y = np.sort(np.atleast_2d(np.asarray(Y, dtype=float)), axis=1)
    scalar = np.ndim(a) == 0
    avals = [check_tuning(v) for v in np.atleast_1d(a)]
    B, n = Y.shape
    j, k = np.triu_indices(n, 1)
    npairs = j.size
    out = np.empty((B, len(avals)))
    step = max(1, chunk_elems // max(npairs, 1))
    p1 = Y.sum(axis=1)
    p2 = np.einsum("ij,ij->i", Y, Y)
    for lo in range(0, B, step):
        hi = min(B, lo + step)
        yj, yk = Y[lo:hi, j], Y[lo:hi, k]
        d2 = (yj - yk) ** 2
        prod = yj * yk
        for i, av in enumerate(avals):
            lin = 1.0 / (4.0 * av * av) + 1.0 / (2.0 * av)
            head = n * n / (2.0 * av) - (2.0 * n * p2[lo:hi] - 2.0 * p1[lo:hi] ** 2) * lin + p1[lo:hi] ** 2
            c = 1.0 / (2.0 * av) - d2 * lin + prod
            s = head + 2.0 * np.einsum("ij,ij->i", c, np.expm1(-d2 / (4.0 * av)))
            out[lo:hi, i] = np.sqrt(np.pi / av) * s / n
    return out[:, 0] if scalar else out


def ecf_residual_parts(y: np.ndarray, t: np.ndarray, chunk_elems: int = 4_000_000):
    """Real and imaginary parts of ``mean_j (i y_j + t) exp(i t y_j)`` at each ``t``."""
    t = np.asarray(t, dtype=float)
    re = np.empty_like(t)
    im = np.empty_like(t)
    step = max(1, chunk_elems // max(y.size, 1))
    for lo in range(0, t.size, step):
        tt = t[lo:lo + step, None]
        arg = tt * y[None, :]
        c, s = np.cos(arg), np.sin(arg)
        re[lo:lo + step] = np.mean(tt * c - y * s, axis=1)
        im[lo:lo + step] = np.mean(y * c + tt * s, axis=1)
    return re, im


def z_statistic_integral(res, a: float, quad: QuadratureSpec | None = None) -> float:
    """Z_{n,a} by numerical integration of its defining integral.

    Independent of :func:`z_statistic`; used as its oracle and for very large n
    where the O(n^2) double sum is impractical (cost is O(n * nodes)).
    """
    a = check_tuning(a)
    quad = quad or QuadratureSpec()
    y = _residuals(res)
    n = y.size

    def evaluate(m):
        t, w = quad.nodes_weights(a, m)
        re, im = ecf_residual_parts(y, t)
        return n * np.dot(w, re * re + im * im)

    return float(refine(evaluate, quad, "z_statistic_integral"))


def skewness_limit_diagnostic(res, a: float) -> float:
    """``16 a^(5/2) / (3 n sqrt(pi)) * Z_{n,a}``; tends to the squared skewness as a grows."""
    a = check_tuning(a)
    y = _residuals(res)
    return 16.0 * a ** 2.5 / (3.0 * y.size * np.sqrt(np.pi)) * z_statistic(ScaledResiduals(y), a)
