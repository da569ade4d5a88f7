"""Limit null law of Z_{n,a}: covariance kernel, cumulants, and the discrepancy Delta.

Under normality Z_{n,a} converges to ``sum_j lambda_j(a) N_j^2`` where the
``lambda_j`` are the eigenvalues of the integral operator with kernel K_Z and
weight ``exp(-a t^2)``.  The m-th cumulant is ``2^(m-1) (m-1)!`` times the
trace of the m-th operator power.  Closed forms for m = 1..4 are evaluated in
multiprecision (they cancel heavily); :func:`cumulant_oracle` computes the same
traces from a discretized operator and serves as the independent check.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import mpmath as mp
import numpy as np

from . import _kappa4_terms as _k4
from .alternatives import AlternativeSpec
from .errors import InvalidInput, UnsupportedAlternative
from .quadrature import QuadratureSpec, refine
from .statistic import check_tuning, scale_residuals, z_statistic_integral

__all__ = [
    "kernel_kz",
    "cumulant_closed_form",
    "cumulant_oracle",
    "cumulants",
    "CumulantSet",
    "MomentSummary",
    "moment_summary",
    "kernel_matrix",
    "DeltaResult",
    "delta_discrepancy",
    "sample_discrepancy",
]

_DPS = 60


def kernel_kz(s, t):
    """Covariance kernel of the limiting Gaussian process under the null."""
    s = np.asarray(s, dtype=float)
    t = np.asarray(t, dtype=float)
    st = s * t
    return (st + 1) * np.exp(-((s - t) ** 2) / 2) - (2 * st + 1) * np.exp(-(s * s + t * t) / 2)


# ---------------------------------------------------------------------------
# closed forms


def _frac(n, d):
    return mp.mpf(n) / d


def _kappa1(a):
    s = mp.sqrt(a + 1)
    num = 2 * a ** 2.5 - 2 * s * a ** 2 + 4 * a ** 1.5 - 3 * s * a - s
    return -mp.sqrt(mp.pi) * num / (2 * (a + 1) ** 1.5 * a ** 1.5)


def _kappa2(a):
    F = _frac
    r = mp.sqrt(a + 2)
    q = mp.sqrt(4 * a ** 2 + 8 * a + 3)
    pre = mp.pi / ((a + 2) ** 2 * (a + F(3, 2)) ** 2 * (a + 1) ** 3 * (a + F(1, 2)) ** 2)
    over_r = (
        F(27, 32) * a ** -2.5 + 2 * a ** 8.5 + 22 * a ** 7.5 + F(215, 2) * a ** 6.5
        + F(615, 2) * a ** 5.5 + F(13045, 32) * a ** 1.5 + F(719, 4) * mp.sqrt(a)
        + F(429, 8) / mp.sqrt(a) + F(20729, 32) * a ** 2.5 + F(4575, 8) * a ** 4.5
        + F(5817, 8) * a ** 3.5 + F(315, 32) * a ** -1.5
    )
    over_q = (
        416 * a + 1295 * a ** 2 + 2377 * a ** 3 + 2835 * a ** 4 + 2277 * a ** 5 + 60
        + 1230 * a ** 6 + 430 * a ** 7 + 88 * a ** 8 + 8 * a ** 9
    )
    poly = (
        9 + 66 * a + F(799, 4) * a ** 2 + F(1323, 4) * a ** 3 + F(2681, 8) * a ** 4
        + 216 * a ** 5 + 87 * a ** 6 + 20 * a ** 7 + 2 * a ** 8
    )
    return pre * (poly + over_r / r - over_q / q)


def _half_poly(terms, a):
    """``sum_p c_p a^(p/2)`` for a mapping ``p -> (num, den)``."""
    return mp.fsum(_frac(*c) * a ** (mp.mpf(p) / 2) for p, c in terms.items())


def _kappa3(a):
    F = _frac
    half = F(1, 2)
    s23 = mp.sqrt(2 * a + 3)
    q = mp.sqrt(4 * a ** 2 + 8 * a + 3)
    r = mp.sqrt(2 * a ** 2 + 4 * a + 1)
    pre = 16 * mp.pi ** 1.5 / (
        (a ** 2 + 2 * a + half) ** 3 * (a + half) ** 2 * (a + F(3, 2)) ** 3
        * q * s23 * r * (a + 1) ** 4.5 * a ** 3.5
    )
    A = {
        7: (3, 41218), 9: (117, 82436), 11: (1007, 82436), 13: (45691, 741924),
        15: (37834, 185481), 17: (175337, 370962), 19: (49256, 61827), 21: (1, 1),
        23: (58384, 61827), 25: (124090, 185481), 27: (64900, 185481),
        29: (24256, 185481), 31: (6112, 185481), 33: (928, 185481), 35: (64, 185481),
    }
    B = {
        7: (4320, 1), 9: (82080, 1), 11: (694176, 1), 13: (3487008, 1),
        15: (11732544, 1), 17: (28261824, 1), 19: (50733120, 1), 21: (69467904, 1),
        23: (73348224, 1), 25: (59750400, 1), 27: (37211904, 1), 29: (17370624, 1),
        31: (5872128, 1), 33: (1354752, 1), 35: (190464, 1), 37: (12288, 1),
    }
    D = {
        7: (189, 1156952), 9: (30321, 12726472), 11: (207081, 12726472),
        13: (881383, 12726472), 15: (327552, 1590809), 17: (1442591, 3181618),
        19: (2429741, 3181618), 21: (1, 1), 23: (1627996, 1590809),
        25: (1297344, 1590809), 27: (795456, 1590809), 29: (367232, 1590809),
        31: (11200, 144619), 33: (1664, 93577), 35: (3968, 1590809), 37: (256, 1590809),
    }
    pa, pb, pd = (_half_poly(c, a) for c in (A, B, D))
    c = 4096 * (a + half) ** 3 * (a + 1) ** 4.5 * mp.sqrt(2 * a + 1) * (a ** 2 + 2 * a + half) ** 3 * (
        a ** 5 + 4 * a ** 4 + F(11, 2) * a ** 3 + F(27, 8) * a ** 2 + F(21, 16) * a + F(15, 32)
    )
    inner = -5935392 * s23 * q * pa + s23 * pb + c
    return pre * (r / 4096 * inner - F(4772427, 512) * q * mp.sqrt(2) * s23 * pd)


def _kappa4(a):
    F = _frac
    S = mp.sqrt
    half = F(1, 2)
    e1 = a ** 2 + F(5, 2) * a + F(5, 4)
    e2 = a ** 2 + 2 * a + half
    e3 = a ** 2 + F(3, 2) * a + F(1, 4)
    c2 = S(2 * a ** 3 + 6 * a ** 2 + 5 * a + 1)
    c3 = S(4 * a ** 3 + 12 * a ** 2 + 11 * a + 3)
    c4 = S(16 * a ** 4 + 64 * a ** 3 + 84 * a ** 2 + 40 * a + 5)
    q = S(4 * a ** 2 + 8 * a + 3)
    r32 = S(a ** 2 + 3 * a + 2)
    pre = 48 * mp.pi ** 2 / (
        e1 ** 5 * (a + half) ** 5 * (a + 2) ** 4 * e2 ** 3 * e3 ** 5
        * (a + 1) ** 6 * (a + F(3, 2)) ** 5 * c2 * r32 * a ** 4.5
    )
    P = {name: _half_poly(getattr(_k4, name), a) for name in ("P1", "P2", "P3", "P4", "P5", "P6")}
    t1 = -F(15888388972237, 67108864) * c3 * q * c2 * c4 * (
        S(a + 1) * P["P1"] * r32 + F(73701960223245, 63553555888948) * S(a + 2) * P["P2"]
    )
    t2 = (
        F(241982982129125, 4294967296) * S(a + 2) * q * c3 * P["P3"]
        - F(386109436024375, 536870912) * r32 * (P["P4"] + P["P5"] * q)
    ) * c2
    t3 = F(11799584447520125, 17179869184) * q * S(2) * c3 * S(a + 2) * S(a + 1) * P["P6"]
    poly12 = (
        a ** 12 + 12 * a ** 11 + 63 * a ** 10 + 190 * a ** 9 + F(5833, 16) * a ** 8
        + F(937, 2) * a ** 7 + F(837, 2) * a ** 6 + 272 * a ** 5 + F(2191, 16) * a ** 4
        + F(223, 4) * a ** 3 + F(141, 8) * a ** 2 + F(15, 4) * a + F(105, 256)
    )
    t4 = (
        (a + half) ** 5 * poly12 * e1 ** 5 * S(2 * a ** 2 + 4 * a + 1) * e2 ** 3
        * e3 ** 5 * (a + 1) ** 2 * (a + F(3, 2)) ** 5
    )
    return pre * (t1 + t2 + t3 + t4)


_CLOSED = {1: _kappa1, 2: _kappa2, 3: _kappa3, 4: _kappa4}


@lru_cache(maxsize=256)
def _closed(a: float, m: int) -> float:
    with mp.workdps(_DPS):
        return float(_CLOSED[m](mp.mpf(a)))


def cumulant_closed_form(a: float, m: int) -> float:
    """m-th cumulant (m = 1..4) of the limit null law, from its explicit formula."""
    a = check_tuning(a)
    if m not in _CLOSED:
        raise InvalidInput(f"cumulant order must be 1..4, got {m}")
    return _closed(a, int(m))


# ---------------------------------------------------------------------------
# quadrature oracle


def kernel_matrix(a: float, quad: QuadratureSpec, node_count: int | None = None) -> np.ndarray:
    """Symmetric node-weighted kernel matrix ``sqrt(w_i) K(t_i, t_j) sqrt(w_j)``.

    Its eigenvalues approximate the operator eigenvalues ``lambda_j(a)``.
    """
    t, w = quad.nodes_weights(a, node_count)
    keep = w > 0
    t, w = t[keep], w[keep]
    sw = np.sqrt(w)
    return sw[:, None] * kernel_kz(t[:, None], t[None, :]) * sw[None, :]


def _traces(a: float, quad: QuadratureSpec, m: int) -> np.ndarray:
    lam = np.linalg.eigvalsh(kernel_matrix(a, quad, m))
    return np.array([2 ** (k - 1) * math.factorial(k - 1) * np.sum(lam ** k) for k in (1, 2, 3, 4)])


def cumulant_oracle(a: float, m: int, quad: QuadratureSpec | None = None) -> float:
    """m-th cumulant from traces of powers of the discretized operator.

    The node count is doubled until two successive discretizations agree to
    ``quad.rel_tol``; otherwise :class:`QuadratureFailure` is raised.
    """
    a = check_tuning(a)
    if m not in (1, 2, 3, 4):
        raise InvalidInput(f"cumulant order must be 1..4, got {m}")
    quad = quad or QuadratureSpec(max_nodes=1024)
    return float(refine(lambda k: _traces(a, quad, k)[m - 1], quad, f"cumulant_oracle(m={m})"))


# ---------------------------------------------------------------------------
# summaries


@dataclass(frozen=True)
class CumulantSet:
    a: float
    kappa: tuple[float, float, float, float]
    source: str = "closed-form"

    def __post_init__(self):
        if not self.kappa[1] > 0 or not self.kappa[0] > 0:
            raise InvalidInput("kappa1 and kappa2 must be positive")


@dataclass(frozen=True)
class MomentSummary:
    mean: float
    variance: float
    sqrt_beta1: float
    beta2: float

    def __post_init__(self):
        if not self.variance > 0:
            raise InvalidInput("variance must be positive")

    @property
    def beta1(self) -> float:
        return self.sqrt_beta1 ** 2

    @property
    def feasible(self) -> bool:
        return self.beta2 - self.beta1 - 1 > 0

    @classmethod
    def from_cumulants(cls, k1, k2, k3, k4) -> "MomentSummary":
        return cls(k1, k2, k3 / k2 ** 1.5, 3.0 + k4 / k2 ** 2)

    def as_tuple(self):
        return (self.mean, self.variance, self.sqrt_beta1, self.beta2)


def cumulants(a: float, source: str = "closed-form", quad: QuadratureSpec | None = None) -> CumulantSet:
    if source == "closed-form":
        k = tuple(cumulant_closed_form(a, m) for m in (1, 2, 3, 4))
    elif source == "quadrature-oracle":
        k = tuple(cumulant_oracle(a, m, quad) for m in (1, 2, 3, 4))
    else:
        raise InvalidInput(f"unknown cumulant source {source!r}")
    return CumulantSet(float(a), k, source)


def moment_summary(a: float) -> MomentSummary:
    """Mean, variance, skewness and kurtosis (beta2) of the limit null law."""
    return MomentSummary.from_cumulants(*cumulants(a).kappa)


# ---------------------------------------------------------------------------
# discrepancy under fixed alternatives


@dataclass(frozen=True)
class DeltaResult:
    delta: float
    std_error: float
    method: str
    a: float = 1.0

    def to_dict(self) -> dict:
        return {"delta": self.delta, "std_error": self.std_error, "method": self.method, "a": self.a}


def delta_discrepancy(
    alt: AlternativeSpec,
    quad: QuadratureSpec | None = None,
    mc_budget: int = 1_000_000,
    seed=None,
    a: float = 1.0,
    method: str = "auto",
    batches: int = 20,
) -> DeltaResult:
    """Population value ``Delta = int |g'(t) + t g(t)|^2 exp(-a t^2) dt``.

    ``g`` is the characteristic function of the standardized alternative.  It
    is zero exactly for normal laws.  ``method`` is ``"analytic-cf"``,
    ``"monte-carlo-cf"`` or ``"auto"`` (analytic when available).
    """
    from .rng import SeedSpec, replication_rng

    a = check_tuning(a)
    quad = quad or QuadratureSpec()
    mean, var = alt.mean_var()
    if not np.isfinite(var):
        raise UnsupportedAlternative(f"{alt.label}: infinite variance")
    if method == "auto":
        method = "analytic-cf" if alt.has_analytic_cf else "monte-carlo-cf"
    if method == "analytic-cf":
        if alt.family == "Normal":
            return DeltaResult(0.0, 0.0, method, a)

        def evaluate(m):
            t, w = quad.nodes_weights(a, m)
            g, dg = alt.standardized_cf(t)
            return np.dot(w, np.abs(dg + t * g) ** 2)

        return DeltaResult(float(refine(evaluate, quad, "delta")), 0.0, method, a)
    if method != "monte-carlo-cf":
        raise InvalidInput(f"unknown method {method!r}")
    if mc_budget < 2 * batches:
        raise InvalidInput("mc_budget too small for batching")
    seed = seed if seed is not None else SeedSpec(0)
    rng = replication_rng(seed, 0)
    x = (alt.draw(rng, mc_budget) - mean) / math.sqrt(var)
    t, w = quad.nodes_weights(a)
    per = mc_budget // batches
    # unbiased squared-mean estimates per batch; the pooled value averages them
    ests = np.empty(batches)
    for b in range(batches):
        xb = x[b * per:(b + 1) * per]
        ests[b] = _unbiased_delta(xb, t, w)
    return DeltaResult(float(ests.mean()), float(ests.std(ddof=1) / math.sqrt(batches)), method, a)


def _unbiased_delta(x: np.ndarray, t: np.ndarray, w: np.ndarray) -> float:
    n = x.size
    total = 0.0
    for ti, wi in zip(t, w):
        c, s = np.cos(ti * x), np.sin(ti * x)
        re = ti * c - x * s
        im = x * c + ti * s
        sq = 0.0
        for h in (re, im):
            m = h.mean()
            sq += m * m - h.var(ddof=1) / n
        total += wi * sq
    return total


def sample_discrepancy(x, a: float = 1.0, batches: int = 20, quad: QuadratureSpec | None = None):
    """``Z_{n,a} / n`` for one (large) sample with a batch-means standard error.

    The statistic is evaluated through its integral form (O(n * nodes)), so
    n = 10^5 is cheap.  The standard error is ``sd(Z_m / m) / sqrt(batches)``
    over ``batches`` disjoint sub-samples of size ``m = n / batches``.
    """
    x = np.asarray(x, dtype=float)
    n = x.size
    value = z_statistic_integral(scale_residuals(x), a, quad) / n
    m = n // batches
    subs = np.array([
        z_statistic_integral(scale_residuals(x[i * m:(i + 1) * m]), a, quad) / m for i in range(batches)
    ])
    return value, float(subs.std(ddof=1) / math.sqrt(batches))
