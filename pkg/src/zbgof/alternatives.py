"""Sampling distributions used under the null and in power studies.

An :class:`AlternativeSpec` is a tagged family plus parameters.  It knows its
exact mean and variance (used to standardize analytically) and, for some
families, the characteristic function of the standardized variable together
with its derivative.  Sampling methods are frozen: any change to them changes
every simulated table, so they are part of the versioned output contract.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass

import numpy as np
from scipy import special

from .errors import InvalidParams, UnknownAlternativeName, UnsupportedAlternative

FAMILIES = {
    "Normal": ("mu", "sigma2"),
    "NMix": ("p", "mu", "sigma2"),
    "StudentT": ("nu",),
    "Uniform": ("lo", "hi"),
    "ChiSq": ("nu",),
    "Beta": ("alpha", "beta"),
    "Gamma": ("shape", "rate"),
    "Weibull": ("scale", "shape"),
    "Gumbel": ("loc", "scale"),
    "LogNormal": ("mu", "sigma"),
}

SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True)
class AlternativeSpec:
    family: str
    params: tuple[float, ...]

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidParams(f"unknown family {self.family!r}")
        params = tuple(float(p) for p in self.params)
        if len(params) != len(FAMILIES[self.family]):
            raise InvalidParams(f"{self.family} takes parameters {FAMILIES[self.family]}")
        if not all(math.isfinite(p) for p in params):
            raise InvalidParams("parameters must be finite")
        object.__setattr__(self, "params", params)
        self._validate()

    def _validate(self):
        f, p = self.family, self.params
        positive = {
            "Normal": [1], "NMix": [2], "StudentT": [0], "ChiSq": [0],
            "Beta": [0, 1], "Gamma": [0, 1], "Weibull": [0, 1],
            "Gumbel": [1], "LogNormal": [1],
        }.get(f, [])
        for i in positive:
            if not p[i] > 0:
                raise InvalidParams(f"{f}: {FAMILIES[f][i]} must be positive")
        if f == "NMix" and not 0 < p[0] < 1:
            raise InvalidParams("NMix: p must lie in (0, 1)")
        if f == "Uniform" and not p[0] < p[1]:
            raise InvalidParams("Uniform: need lo < hi")

    @property
    def label(self) -> str:
        f, p = self.family, self.params
        g = lambda v: f"{v:g}"
        short = {
            "Normal": lambda: f"N({g(p[0])},{g(p[1])})",
            "NMix": lambda: f"NMix({g(p[0])},{g(p[1])},{g(p[2])})",
            "StudentT": lambda: f"t{g(p[0])}",
            "ChiSq": lambda: f"chi2_{g(p[0])}",
            "Uniform": lambda: "U(-sqrt3,sqrt3)" if p == (-SQRT3, SQRT3) else f"U({g(p[0])},{g(p[1])})",
            "Beta": lambda: f"B({g(p[0])},{g(p[1])})",
            "Gamma": lambda: f"Gamma({g(p[0])},{g(p[1])})",
            "Weibull": lambda: f"W({g(p[0])},{g(p[1])})",
            "Gumbel": lambda: f"Gum({g(p[0])},{g(p[1])})",
            "LogNormal": lambda: f"LN({g(p[0])},{g(p[1])})",
        }
        return short[f]()

    def to_dict(self) -> dict:
        return {"family": self.family, "params": list(self.params), "label": self.label}

    # -- exact moments ---------------------------------------------------
    def mean_var(self) -> tuple[float, float]:
        """Exact mean and variance; raises if the variance is infinite."""
        f, p = self.family, self.params
        if f == "Normal":
            return p[0], p[1]
        if f == "NMix":
            w, mu, s2 = p
            m = w * mu
            return m, (1 - w) + w * (s2 + mu * mu) - m * m
        if f == "StudentT":
            if p[0] <= 2:
                raise UnsupportedAlternative(f"t with nu={p[0]:g} has infinite variance")
            return 0.0, p[0] / (p[0] - 2)
        if f == "Uniform":
            return (p[0] + p[1]) / 2, (p[1] - p[0]) ** 2 / 12
        if f == "ChiSq":
            return p[0], 2 * p[0]
        if f == "Beta":
            s = p[0] + p[1]
            return p[0] / s, p[0] * p[1] / (s * s * (s + 1))
        if f == "Gamma":
            return p[0] / p[1], p[0] / p[1] ** 2
        if f == "Weibull":
            lam, k = p
            g1 = special.gamma(1 + 1 / k)
            return lam * g1, lam * lam * (special.gamma(1 + 2 / k) - g1 * g1)
        if f == "Gumbel":
            return p[0] + np.euler_gamma * p[1], (math.pi * p[1]) ** 2 / 6
        mu, s = p
        return math.exp(mu + s * s / 2), math.expm1(s * s) * math.exp(2 * mu + s * s)

    # -- characteristic function of the standardized variable ------------
    @property
    def has_analytic_cf(self) -> bool:
        return self.family in ("Normal", "NMix", "Uniform", "ChiSq", "Gamma")

    def standardized_cf(self, t) -> tuple[np.ndarray, np.ndarray]:
        """``(g(t), g'(t))`` for ``(X - E X) / sd(X)``; only for analytic families."""
        t = np.asarray(t, dtype=float)
        f, p = self.family, self.params
        if f == "Normal":
            g = np.exp(-t * t / 2).astype(complex)
            return g, -t * g
        if f == "Uniform":
            # every uniform standardizes to U(-sqrt3, sqrt3)
            x = SQRT3 * t
            g = np.sinc(x / np.pi).astype(complex)
            small = np.abs(x) < 1e-4
            safe = np.where(small, 1.0, t)
            dg = (np.cos(x) - np.sinc(x / np.pi)) / safe
            dg = np.where(small, -t + 0.3 * t ** 3, dg)
            return g, dg.astype(complex)
        if f in ("Gamma", "ChiSq"):
            k = p[0] / 2 if f == "ChiSq" else p[0]
            rk = math.sqrt(k)
            z = 1 - 1j * t / rk
            g = np.exp(-1j * t * rk - k * np.log(z))
            return g, -t * g / z
        if f == "NMix":
            w, mu, s2 = p
            m, v = self.mean_var()
            s = math.sqrt(v)
            u = t / s
            e0 = np.exp(-u * u / 2)
            e1 = np.exp(1j * mu * u - s2 * u * u / 2)
            gx = (1 - w) * e0 + w * e1
            dgx = (1 - w) * (-u) * e0 + w * (1j * mu - s2 * u) * e1
            shift = np.exp(-1j * t * m / s)
            return shift * gx, shift * (-1j * m / s * gx + dgx / s)
        raise UnsupportedAlternative(f"no analytic characteristic function for {f}")

    # -- sampling --------------------------------------------------------
    def draw(self, rng: np.random.Generator, n: int) -> np.ndarray:
        f, p = self.family, self.params
        if f == "Normal":
            return p[0] + math.sqrt(p[1]) * rng.standard_normal(n)
        if f == "NMix":
            w, mu, s2 = p
            comp = rng.random(n) < w
            z = rng.standard_normal(n)
            return np.where(comp, mu + math.sqrt(s2) * z, z)
        if f == "StudentT":
            z = rng.standard_normal(n)
            v = 2.0 * rng.standard_gamma(p[0] / 2, n)
            return z / np.sqrt(v / p[0])
        if f == "Uniform":
            return p[0] + (p[1] - p[0]) * rng.random(n)
        if f == "ChiSq":
            return 2.0 * rng.standard_gamma(p[0] / 2, n)
        if f == "Beta":
            g1 = rng.standard_gamma(p[0], n)
            g2 = rng.standard_gamma(p[1], n)
            return g1 / (g1 + g2)
        if f == "Gamma":
            return rng.standard_gamma(p[0], n) / p[1]
        if f == "Weibull":
            return p[0] * rng.standard_exponential(n) ** (1.0 / p[1])
        if f == "Gumbel":
            return p[0] - p[1] * np.log(rng.standard_exponential(n))
        return np.exp(p[0] + p[1] * rng.standard_normal(n))


STANDARD_NORMAL = AlternativeSpec("Normal", (0.0, 1.0))

_NAME_RE = re.compile(r"^\s*([A-Za-z]+?)\s*(?:_?(\d+(?:\.\d+)?)|\(([^)]*)\))?\s*$")

_ALIASES = {
    "n": "Normal", "normal": "Normal", "norm": "Normal",
    "nmix": "NMix", "mix": "NMix",
    "t": "StudentT", "student": "StudentT", "studentt": "StudentT",
    "u": "Uniform", "unif": "Uniform", "uniform": "Uniform",
    "chi": "ChiSq", "chi2": "ChiSq", "chisq": "ChiSq",
    "b": "Beta", "beta": "Beta",
    "gamma": "Gamma", "g": "Gamma",
    "w": "Weibull", "weibull": "Weibull",
    "gum": "Gumbel", "gumbel": "Gumbel",
    "ln": "LogNormal", "lognormal": "LogNormal",
}


def parse_alternative(name: str) -> AlternativeSpec:
    """Parse names such as ``t3``, ``chi2_5``, ``U``, ``NMix(0.5,1,4)``, ``Gum(1,2)``.

    A bare ``U`` is ``U(-sqrt3, sqrt3)`` and a bare ``N`` is ``N(0,1)``.
    """
    text = name.strip()
    m = _NAME_RE.match(text.replace("chi2", "chi"))
    if not m:
        raise UnknownAlternativeName(f"cannot parse alternative {name!r}")
    head, suffix, args = m.groups()
    family = _ALIASES.get(head.lower())
    if family is None:
        raise UnknownAlternativeName(f"unknown alternative {name!r}")
    if suffix is not None:
        params = (float(suffix),)
    elif args is not None:
        try:
            params = tuple(_parse_number(s) for s in args.split(","))
        except ValueError:
            raise UnknownAlternativeName(f"bad parameters in {name!r}") from None
    else:
        params = {"Normal": (0.0, 1.0), "Uniform": (-SQRT3, SQRT3)}.get(family)
        if params is None:
            raise UnknownAlternativeName(f"{name!r} needs parameters")
    try:
        return AlternativeSpec(family, params)
    except InvalidParams as exc:
        raise UnknownAlternativeName(f"{name!r}: {exc}") from None


def _parse_number(s: str) -> float:
    s = s.strip().replace(" ", "")
    sign = -1.0 if s.startswith("-") else 1.0
    body = s.lstrip("+-")
    if body in ("sqrt3", "sqrt(3)"):
        return sign * SQRT3
    return float(s)
