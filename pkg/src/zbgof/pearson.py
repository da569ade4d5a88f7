"""Pearson-system approximation of a law from its first four moments.

The density solves ``d log p / dx = -(x + c1) / (c0 + c1 x + c2 x^2)`` with
``x`` measured from the mean; the coefficients follow from (mean, variance,
sqrt(beta1), beta2).  The family is read off the roots of the quadratic:

    kappa = c1^2 / (4 c0 c2)  (equivalently beta1 (beta2+3)^2 / (4 (4 beta2 - 3 beta1)(2 beta2 - 3 beta1 - 6)))

    kappa < 0      type I   (beta on a finite interval; type II if symmetric)
    0 < kappa < 1  type IV  (no closed-form normalizer)
    kappa = 1      type V   (inverse gamma)
    kappa > 1      type VI  (beta prime)
    c2 = 0         type III (gamma)
    beta1 = 0      normal (beta2 = 3), type II (beta2 < 3), type VII (beta2 > 3)

Families other than IV map onto scipy distributions; type IV is normalized
and integrated numerically.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np
from scipy import integrate, optimize, stats

from .errors import InfeasibleMoments, InvalidInput
from .null_theory import MomentSummary, moment_summary

__all__ = [
    "PearsonFit",
    "pearson_fit",
    "pearson_criterion",
    "pearson_quantile",
    "pearson_cdf",
    "pearson_pvalue",
    "asymptotic_null",
    "LOWER_TAIL_UNRELIABLE",
    "lower_tail_unreliable",
]

# Below this level the four-moment fit is known to disagree with the finite-n
# lower tail; quantiles there are still returned but flagged.
LOWER_TAIL_UNRELIABLE = 0.1

_EPS = 1e-10


@dataclass(frozen=True)
class PearsonFit:
    family: str
    params: dict
    moments: MomentSummary
    _dist: Any = field(repr=False, compare=False, default=None)

    def cdf(self, x):
        return self._dist.cdf(x)

    def sf(self, x):
        return self._dist.sf(x)

    def pdf(self, x):
        return self._dist.pdf(x)

    def ppf(self, q):
        return self._dist.ppf(q)

    @property
    def support(self) -> tuple[float, float]:
        return tuple(float(v) for v in self._dist.support())

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "params": {k: float(v) for k, v in self.params.items()},
            "moments": dict(zip(("mean", "variance", "sqrt_beta1", "beta2"), self.moments.as_tuple())),
        }


def pearson_criterion(sqrt_beta1: float, beta2: float) -> float:
    b1 = sqrt_beta1 ** 2
    den = 4 * (4 * beta2 - 3 * b1) * (2 * beta2 - 3 * b1 - 6)
    return math.inf if den == 0 else b1 * (beta2 + 3) ** 2 / den


class _Reflected:
    """Law of ``2 * center - X`` for a frozen scipy distribution ``X``."""

    def __init__(self, dist, center: float):
        self.d, self.c = dist, center

    def pdf(self, x):
        return self.d.pdf(2 * self.c - np.asarray(x))

    def cdf(self, x):
        return self.d.sf(2 * self.c - np.asarray(x))

    def sf(self, x):
        return self.d.cdf(2 * self.c - np.asarray(x))

    def ppf(self, q):
        return 2 * self.c - self.d.isf(q)

    def support(self):
        lo, hi = self.d.support()
        return 2 * self.c - hi, 2 * self.c - lo


class _PearsonIV:
    """``p(x) = k [1 + ((x - lam)/alpha)^2]^(-m) exp(-nu arctan((x - lam)/alpha))``."""

    def __init__(self, m, nu, alpha, lam):
        self.m, self.nu, self.alpha, self.lam = m, nu, alpha, lam
        lo, hi = -np.pi / 2, np.pi / 2
        # substitute x = lam + alpha tan(theta); integrand becomes smooth on (-pi/2, pi/2)
        val, _ = integrate.quad(self._theta_density, lo, hi, epsabs=0, epsrel=1e-12, limit=200)
        self.logk = -math.log(val)
        self._mode = lam - alpha * nu / (2 * m)

    def _theta_density(self, th):
        return np.cos(th) ** (2 * self.m - 2) * np.exp(-self.nu * th) * self.alpha

    def _logpdf(self, x):
        u = (np.asarray(x, dtype=float) - self.lam) / self.alpha
        return self.logk - self.m * np.log1p(u * u) - self.nu * np.arctan(u)

    def pdf(self, x):
        return np.exp(self._logpdf(x))

    def _cdf1(self, x):
        th = math.atan((x - self.lam) / self.alpha)
        f = lambda s: self._theta_density(s) * math.exp(self.logk)
        if x <= self._mode:
            v, _ = integrate.quad(f, -np.pi / 2, th, epsabs=0, epsrel=1e-12, limit=200)
            return v
        v, _ = integrate.quad(f, th, np.pi / 2, epsabs=0, epsrel=1e-12, limit=200)
        return 1.0 - v

    def _sf1(self, x):
        th = math.atan((x - self.lam) / self.alpha)
        f = lambda s: self._theta_density(s) * math.exp(self.logk)
        if x >= self._mode:
            v, _ = integrate.quad(f, th, np.pi / 2, epsabs=0, epsrel=1e-12, limit=200)
            return v
        return 1.0 - self._cdf1(x)

    def cdf(self, x):
        return np.vectorize(self._cdf1, otypes=[float])(x)

    def sf(self, x):
        return np.vectorize(self._sf1, otypes=[float])(x)

    def _ppf1(self, q):
        if q <= 0:
            return -np.inf
        if q >= 1:
            return np.inf
        lo = hi = self._mode
        step = self.alpha
        while self._cdf1(lo) > q:
            lo -= step
            step *= 2
        step = self.alpha
        while self._cdf1(hi) < q:
            hi += step
            step *= 2
        return optimize.brentq(lambda x: self._cdf1(x) - q, lo, hi, xtol=1e-14, rtol=1e-13)

    def ppf(self, q):
        return np.vectorize(self._ppf1, otypes=[float])(q)

    def support(self):
        return -np.inf, np.inf


def _coefficients(mo: MomentSummary):
    b1, b2 = mo.beta1, mo.beta2
    sd = math.sqrt(mo.variance)
    d = 10 * b2 - 12 * b1 - 18
    if abs(d) < _EPS:
        raise InfeasibleMoments("10 beta2 - 12 beta1 - 18 = 0: Pearson coefficients undefined")
    c0 = (4 * b2 - 3 * b1) * mo.variance / d
    c1 = sd * mo.sqrt_beta1 * (b2 + 3) / d
    c2 = (2 * b2 - 3 * b1 - 6) / d
    return c0, c1, c2


def pearson_fit(moments) -> PearsonFit:
    """Select the Pearson family for ``moments`` and match all four of them."""
    mo = moments if isinstance(moments, MomentSummary) else MomentSummary(*moments)
    if not mo.feasible:
        raise InfeasibleMoments(f"beta2 - beta1 - 1 = {mo.beta2 - mo.beta1 - 1:.3g} <= 0")
    mu, var, sb1, b2 = mo.as_tuple()
    sd = math.sqrt(var)

    if abs(sb1) < _EPS:
        if abs(b2 - 3) < _EPS:
            return PearsonFit("normal", {"loc": mu, "scale": sd}, mo, stats.norm(mu, sd))
        if b2 < 3:
            alpha = (6 / (3 - b2) - 3) / 2
            r = sd * math.sqrt(2 * alpha + 1)
            return PearsonFit("II", {"shape": alpha, "loc": mu - r, "scale": 2 * r}, mo,
                              stats.beta(alpha, alpha, loc=mu - r, scale=2 * r))
        nu = 4 + 6 / (b2 - 3)
        s = sd * math.sqrt((nu - 2) / nu)
        return PearsonFit("VII", {"df": nu, "loc": mu, "scale": s}, mo, stats.t(nu, loc=mu, scale=s))

    c0, c1, c2 = _coefficients(mo)

    if abs(c2) < _EPS:
        # gamma; support on the side of the skew
        k = c0 / c1 ** 2
        scale = abs(c1)
        lower = -c0 / c1
        if c1 > 0:
            dist = stats.gamma(k, loc=mu + lower, scale=scale)
        else:
            dist = _Reflected(stats.gamma(k, loc=mu - lower, scale=scale), mu)
        return PearsonFit("III", {"shape": k, "loc": mu + lower, "scale": scale}, mo, dist)

    disc = c1 * c1 - 4 * c0 * c2
    kappa = c1 * c1 / (4 * c0 * c2)

    if abs(kappa - 1) < _EPS:
        # double root r: inverse gamma in (x - r)
        r = -c1 / (2 * c2)
        shape = 1 / c2 - 1
        scale = -(r + c1) / c2
        if scale > 0:
            dist = stats.invgamma(shape, loc=mu + r, scale=scale)
        else:
            dist = _Reflected(stats.invgamma(shape, loc=mu - r, scale=-scale), mu)
        return PearsonFit("V", {"shape": shape, "loc": mu + r, "scale": abs(scale)}, mo, dist)

    if disc < 0:
        # complex roots: type IV
        x0 = -c1 / (2 * c2)
        alpha = math.sqrt(c0 / c2 - x0 * x0)
        m = 1 / (2 * c2)
        nu = (x0 + c1) / (c2 * alpha)
        lam = mu + x0
        return PearsonFit("IV", {"m": m, "nu": nu, "alpha": alpha, "lam": lam}, mo,
                          _PearsonIV(m, nu, alpha, lam))

    sq = math.sqrt(disc)
    r1, r2 = sorted(((-c1 - sq) / (2 * c2), (-c1 + sq) / (2 * c2)))
    e1 = -(r1 + c1) / (c2 * (r1 - r2))
    e2 = -(r2 + c1) / (c2 * (r2 - r1))
    width = r2 - r1

    if r1 < 0 < r2:
        # type I: p ~ (x - r1)^e1 (r2 - x)^e2 on [r1, r2]
        dist = stats.beta(e1 + 1, e2 + 1, loc=mu + r1, scale=width)
        return PearsonFit("I", {"a": e1 + 1, "b": e2 + 1, "loc": mu + r1, "scale": width}, mo, dist)

    if r2 < 0:
        # type VI, support x > r2: with y = (x - r2)/width, p ~ y^e2 (1 + y)^e1
        pa, pb = e2 + 1, -e1 - e2 - 1
        dist = stats.betaprime(pa, pb, loc=mu + r2, scale=width)
        return PearsonFit("VI", {"a": pa, "b": pb, "loc": mu + r2, "scale": width}, mo, dist)

    # type VI mirrored, support x < r1: with y = (r1 - x)/width, p ~ y^e1 (1 + y)^e2
    pa, pb = e1 + 1, -e1 - e2 - 1
    base = stats.betaprime(pa, pb, loc=mu - r1, scale=width)
    return PearsonFit("VI", {"a": pa, "b": pb, "loc": mu + r1, "scale": -width}, mo, _Reflected(base, mu))


def pearson_quantile(fit: PearsonFit, q: float) -> float:
    q = float(q)
    if not 0 < q < 1:
        raise InvalidInput("q must lie in (0, 1)")
    return float(fit.ppf(q))


def pearson_cdf(fit: PearsonFit, x) -> float:
    return float(np.clip(fit.cdf(x), 0.0, 1.0))


def pearson_pvalue(fit: PearsonFit, statistic: float) -> float:
    """Upper-tail probability ``1 - F(statistic)``, clamped to [0, 1]."""
    return float(np.clip(fit.sf(statistic), 0.0, 1.0))


def lower_tail_unreliable(q: float) -> bool:
    return q <= LOWER_TAIL_UNRELIABLE


_ASYMPTOTIC_CACHE: dict[float, PearsonFit] = {}


def asymptotic_null(a: float) -> PearsonFit:
    """Pearson approximation of the limit null law of Z_{n,a}."""
    a = float(a)
    fit = _ASYMPTOTIC_CACHE.get(a)
    if fit is None:
        fit = _ASYMPTOTIC_CACHE[a] = pearson_fit(moment_summary(a))
    return fit
