"""Competitor normality statistics and a common batched interface.

Scalar entry points take a sample or scaled residuals.  :class:`StatisticId`
wraps every statistic (including Z_{n,a}) behind ``evaluate`` and a
row-vectorized ``evaluate_batch`` used by the Monte Carlo engine, and records
the rejection direction.  Only Shapiro-Wilk rejects for small values.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import integrate, special

from .errors import InvalidInput, InvalidTuning, UnsupportedSampleSize
from .statistic import ScaledResiduals, as_sample, scale_residuals, z_statistic_batch

__all__ = [
    "hv_statistic",
    "be_statistic",
    "bhep_statistic",
    "bcmr_statistic",
    "ad_statistic",
    "sw_statistic",
    "jb_statistic",
    "sw_coefficients",
    "classical_statistics",
    "StatisticId",
    "parse_statistic",
    "scale_rows",
]

_SQRT2PI = math.sqrt(2 * math.pi)


def _res(x) -> np.ndarray:
    return x.y if isinstance(x, ScaledResiduals) else scale_residuals(x).y


def _positive(v, name, lower=0.0):
    v = float(v)
    if not (math.isfinite(v) and v > lower):
        raise InvalidTuning(f"{name} must be finite and > {lower:g}, got {v}")
    return v


def scale_rows(X: np.ndarray, ddof: int = 0) -> np.ndarray:
    """Scaled residuals of each row (1/n divisor, or 1/(n-1) for ``ddof=1``)."""
    X = np.atleast_2d(np.asarray(X, dtype=float))
    Xs = np.sort(X, axis=1)
    m = Xs.mean(axis=1, keepdims=True)
    ds = Xs - m
    s = np.sqrt(np.sum(ds * ds, axis=1, keepdims=True) / (X.shape[1] - ddof))
    return (X - m) / s


def _pair_rows(Y: np.ndarray, kernel, chunk_elems: int = 2_000_000) -> np.ndarray:
    """``sum_{j,k} kernel(Y_j, Y_k)`` for each row of ``Y``."""
    B, n = Y.shape
    out = np.empty(B)
    step = max(1, chunk_elems // (n * n))
    for lo in range(0, B, step):
        y = Y[lo:lo + step]
        out[lo:lo + step] = kernel(y[:, :, None], y[:, None, :]).sum(axis=(1, 2))
    return out


# -- Henze-Visagie ---------------------------------------------------------
def _hv_rows(Y: np.ndarray, gamma: float) -> np.ndarray:
    c = 1 / (4 * gamma * gamma) - 1 / (2 * gamma)

    def k(yj, yk):
        s2 = (yj + yk) ** 2
        return np.exp(s2 / (4 * gamma)) * (yj * yk + s2 * c + 1 / (2 * gamma))

    return math.sqrt(math.pi / gamma) * _pair_rows(Y, k) / Y.shape[1]


def hv_statistic(res, gamma: float = 2.5) -> float:
    """Henze-Visagie HV_gamma; the exponent is positive, so gamma > 2 is required."""
    gamma = _positive(gamma, "gamma", 2.0)
    return float(_hv_rows(np.sort(_res(res))[None, :], gamma)[0])


# -- Betsch-Ebner ----------------------------------------------------------
def _be_rows(Y: np.ndarray, a: float) -> np.ndarray:
    Y = np.sort(Y, axis=1)
    n = Y.shape[1]
    ra = math.sqrt(a)
    tail = special.ndtr(-Y / ra)
    dens = math.sqrt(a / (2 * math.pi)) * np.exp(-Y * Y / (2 * a))
    y2 = Y * Y
    # prefix sums over j < k
    s0 = np.arange(n, dtype=float)[None, :]
    s1 = np.cumsum(Y, axis=1) - Y
    s2 = np.cumsum(y2, axis=1) - y2
    pair = tail * ((s2 - s0) * (y2 - 1) + a * Y * s1) + dens * (-s2 * Y + s0 * Y + s1)
    single = tail * (y2 * y2 + (a - 2) * y2 + 1) + dens * (2 * Y - Y * y2)
    return (2 * pair.sum(axis=1) + single.sum(axis=1)) / n


def be_statistic(res, a: float = 1.0) -> float:
    """Betsch-Ebner statistic with fixed tuning parameter ``a``."""
    a = _positive(a, "a")
    return float(_be_rows(_res(res)[None, :], a)[0])


# -- BHEP ------------------------------------------------------------------
def _bhep_rows(Y: np.ndarray, beta: float) -> np.ndarray:
    b2 = beta * beta
    n = Y.shape[1]
    pair = _pair_rows(Y, lambda yj, yk: np.exp(-b2 / 2 * (yj - yk) ** 2)) / n
    single = np.exp(-b2 / (2 * (1 + b2)) * Y * Y).sum(axis=1) * 2 / math.sqrt(1 + b2)
    return pair - single + n / math.sqrt(1 + 2 * b2)


def bhep_statistic(res, beta: float = 1.0) -> float:
    beta = _positive(beta, "beta")
    return float(_bhep_rows(np.sort(_res(res))[None, :], beta)[0])


# -- del Barrio et al. (Wasserstein) ---------------------------------------
@lru_cache(maxsize=64)
def _bcmr_constants(n: int):
    q = special.ndtri(np.arange(n + 1) / n)
    phi = np.exp(-q * q / 2) / _SQRT2PI  # zero at both infinite endpoints
    w = phi[:-1] - phi[1:]
    lo, hi = special.ndtri(1 / (n + 1)), special.ndtri(n / (n + 1))
    # t = Phi(x) turns t(1-t)/phi(Phi^-1(t))^2 dt into Phi(x)(1-Phi(x))/phi(x) dx
    corr, _ = integrate.quad(
        lambda x: special.ndtr(x) * special.ndtr(-x) * _SQRT2PI * math.exp(x * x / 2),
        lo, hi, epsabs=0, epsrel=1e-12, limit=200,
    )
    w.setflags(write=False)
    return w, corr


def _bcmr_rows(X: np.ndarray) -> np.ndarray:
    n = X.shape[1]
    w, corr = _bcmr_constants(n)
    Xs = np.sort(X, axis=1)
    d = X - X.mean(axis=1, keepdims=True)
    s2 = np.mean(d * d, axis=1)
    return n * (1 - (Xs @ w) ** 2 / s2) - corr


def bcmr_statistic(sample) -> float:
    s = as_sample(sample)
    if s.n < 3:
        raise UnsupportedSampleSize("BCMR needs n >= 3")
    return float(_bcmr_rows(s.values[None, :])[0])


# -- Anderson-Darling --------------------------------------------------------
def _ad_rows(X: np.ndarray) -> np.ndarray:
    n = X.shape[1]
    Xs = np.sort(X, axis=1)
    z = (Xs - Xs.mean(axis=1, keepdims=True)) / Xs.std(axis=1, ddof=1, keepdims=True)
    logp = special.log_ndtr(z)
    logq = special.log_ndtr(-z)[:, ::-1]
    i = np.arange(1, n + 1)
    return -n - ((2 * i - 1) * (logp + logq)).sum(axis=1) / n


def ad_statistic(sample) -> float:
    """A^2 with estimated mean and (n-1)-divisor standard deviation."""
    s = as_sample(sample)
    if s.n < 3:
        raise UnsupportedSampleSize("AD needs n >= 3")
    return float(_ad_rows(s.values[None, :])[0])


# -- Shapiro-Wilk ------------------------------------------------------------
_C1 = (0.0, 0.221157, -0.147981, -2.071190, 4.434685, -2.706056)
_C2 = (0.0, 0.042981, -0.293762, -1.752461, 5.682633, -3.582633)


@lru_cache(maxsize=64)
def sw_coefficients(n: int) -> np.ndarray:
    """Royston's polynomial approximation of the Shapiro-Wilk weights (ascending order)."""
    if not 3 <= n <= 5000:
        raise UnsupportedSampleSize(f"Shapiro-Wilk requires 3 <= n <= 5000, got {n}")
    if n == 3:
        a = np.array([-math.sqrt(0.5), 0.0, math.sqrt(0.5)])
        a.setflags(write=False)
        return a
    m = special.ndtri((np.arange(1, n + 1) - 0.375) / (n + 0.25))
    mm = np.dot(m, m)
    u = 1 / math.sqrt(n)
    poly = lambda c: sum(ci * u ** i for i, ci in enumerate(c))
    a = m / math.sqrt(mm)
    an = a[-1] + poly(_C1)
    if n > 5:
        an1 = a[-2] + poly(_C2)
        phi = (mm - 2 * m[-1] ** 2 - 2 * m[-2] ** 2) / (1 - 2 * an ** 2 - 2 * an1 ** 2)
        a = m / math.sqrt(phi)
        a[-1], a[-2] = an, an1
    else:
        phi = (mm - 2 * m[-1] ** 2) / (1 - 2 * an ** 2)
        a = m / math.sqrt(phi)
        a[-1] = an
    a[: n // 2] = -a[::-1][: n // 2]
    if n % 2:
        a[n // 2] = 0.0
    a.setflags(write=False)
    return a


def _sw_rows(X: np.ndarray) -> np.ndarray:
    a = sw_coefficients(X.shape[1])
    Xs = np.sort(X, axis=1)
    d = Xs - Xs.mean(axis=1, keepdims=True)
    return (Xs @ a) ** 2 / np.einsum("ij,ij->i", d, d)


def sw_statistic(sample) -> float:
    return float(_sw_rows(as_sample(sample).values[None, :])[0])


# -- Jarque-Bera -------------------------------------------------------------
def _jb_rows(X: np.ndarray) -> np.ndarray:
    n = X.shape[1]
    d = X - X.mean(axis=1, keepdims=True)
    m2 = np.mean(d ** 2, axis=1)
    skew = np.mean(d ** 3, axis=1) / m2 ** 1.5
    kurt = np.mean(d ** 4, axis=1) / m2 ** 2
    return n * (skew ** 2 / 6 + (kurt - 3) ** 2 / 24)


def jb_statistic(sample) -> float:
    """``n (S^2/6 + (K-3)^2/24)`` with biased (1/n) moment estimators."""
    s = as_sample(sample)
    if s.n < 3:
        raise UnsupportedSampleSize("JB needs n >= 3")
    return float(_jb_rows(s.values[None, :])[0])


def classical_statistics(sample, id: str) -> float:
    fn = {"AD": ad_statistic, "SW": sw_statistic, "JB": jb_statistic}.get(str(id).upper())
    if fn is None:
        raise InvalidInput(f"classical statistic must be AD, SW or JB, got {id!r}")
    return fn(sample)


# -- unified interface -------------------------------------------------------
_DEFAULT_PARAM = {"Z": 1.0, "HV": 2.5, "BE": 1.0, "BHEP": 1.0}
_RESIDUAL_BASED = ("Z", "HV", "BE", "BHEP")
_MIN_N = {"Z": 2, "HV": 2, "BE": 2, "BHEP": 2, "BCMR": 3, "AD": 3, "SW": 3, "JB": 3}


@dataclass(frozen=True)
class StatisticId:
    """A statistic and its tuning parameter: Z(a), HV(gamma), BE(a), BHEP(beta), BCMR, AD, SW, JB."""

    kind: str
    param: float | None = None
    ddof: int = 0

    def __post_init__(self):
        kind = self.kind.upper()
        if kind not in _MIN_N:
            raise InvalidInput(f"unknown statistic {self.kind!r}")
        object.__setattr__(self, "kind", kind)
        if self.ddof not in (0, 1):
            raise InvalidInput("ddof must be 0 or 1")
        if self.ddof and kind not in _RESIDUAL_BASED:
            raise InvalidInput(f"{kind} does not use scaled residuals; ddof must be 0")
        if kind in _DEFAULT_PARAM:
            p = _DEFAULT_PARAM[kind] if self.param is None else self.param
            p = _positive(p, {"Z": "a", "HV": "gamma", "BE": "a", "BHEP": "beta"}[kind],
                          2.0 if kind == "HV" else 0.0)
            object.__setattr__(self, "param", p)
        elif self.param is not None:
            raise InvalidInput(f"{kind} takes no parameter")

    @property
    def label(self) -> str:
        base = self.kind if self.param is None else f"{self.kind}({self.param:g})"
        return base + ("[ddof=1]" if self.ddof else "")

    def with_ddof(self, ddof: int) -> "StatisticId":
        return StatisticId(self.kind, self.param, ddof)

    @property
    def rejects_small(self) -> bool:
        return self.kind == "SW"

    def check_n(self, n: int):
        if n < _MIN_N[self.kind] or (self.kind == "SW" and n > 5000):
            raise UnsupportedSampleSize(f"{self.label} not available for n = {n}")

    def evaluate(self, sample) -> float:
        s = as_sample(sample)
        self.check_n(s.n)
        return float(self.evaluate_batch(s.values[None, :])[0])

    def evaluate_batch(self, X: np.ndarray) -> np.ndarray:
        """Statistic for every row of the raw-sample matrix ``X``."""
        X = np.atleast_2d(np.asarray(X, dtype=float))
        self.check_n(X.shape[1])
        k, p = self.kind, self.param
        if k in ("BCMR", "AD", "SW", "JB"):
            return {"BCMR": _bcmr_rows, "AD": _ad_rows, "SW": _sw_rows, "JB": _jb_rows}[k](X)
        Y = np.sort(scale_rows(X, self.ddof), axis=1)
        if k == "Z":
            return z_statistic_batch(Y, p)
        return {"HV": _hv_rows, "BE": _be_rows, "BHEP": _bhep_rows}[k](Y, p)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "param": self.param, "ddof": self.ddof, "label": self.label,
                "rejects": "small" if self.rejects_small else "large"}


def parse_statistic(text: str, default_a: float = 1.0) -> StatisticId:
    """Parse ``Z``, ``Z(0.5)``, ``HV(2.5)``, ``BHEP``, ``SW``, ...; bare ``Z`` uses ``default_a``."""
    t = text.strip()
    ddof = 0
    if t.endswith("[ddof=1]"):
        t, ddof = t[: -len("[ddof=1]")], 1
    elif t.endswith("[ddof=0]"):
        t = t[: -len("[ddof=0]")]
    if "(" in t:
        if not t.endswith(")"):
            raise InvalidInput(f"cannot parse statistic {text!r}")
        kind, arg = t[:-1].split("(", 1)
        try:
            return StatisticId(kind.strip(), float(arg), ddof)
        except ValueError as exc:
            raise InvalidInput(f"cannot parse statistic {text!r}: {exc}") from None
    if t.upper() == "Z":
        return StatisticId("Z", default_a, ddof)
    return StatisticId(t, None, ddof)
