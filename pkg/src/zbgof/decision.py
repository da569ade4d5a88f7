"""The Z_{n,a} normality test as a single call: statistic, p-value, decision."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .competitors import StatisticId
from .errors import InvalidInput
from .pearson import asymptotic_null, lower_tail_unreliable, pearson_pvalue, pearson_quantile
from .rng import SeedSpec, stream_for
from .statistic import as_sample, check_tuning, scale_residuals, z_statistic

__all__ = ["TestOutcome", "zb_test", "METHODS"]

METHODS = ("pearson", "montecarlo")


@dataclass(frozen=True)
class TestOutcome:
    statistic: float
    a: float
    n: int
    alpha: float
    p_value: float
    critical_value: float
    reject: bool
    method: str
    provenance: dict

    __test__ = False  # not a pytest class

    def to_dict(self) -> dict:
        return {
            "statistic": self.statistic,
            "a": self.a,
            "n": self.n,
            "alpha": self.alpha,
            "p_value": self.p_value,
            "critical_value": self.critical_value,
            "reject": self.reject,
            "method": self.method,
            "provenance": self.provenance,
        }


def zb_test(
    sample,
    a: float = 1.0,
    alpha: float = 0.05,
    method: str = "pearson",
    replications: int = 20_000,
    seed: int | SeedSpec = 0,
) -> TestOutcome:
    """Test normality with Z_{n,a}; large values reject.

    ``method="pearson"`` uses the four-moment Pearson approximation of the
    limit null law.  ``method="montecarlo"`` simulates ``replications`` null
    statistics at the sample size and reports ``(r + 1) / (R + 1)`` where
    ``r`` counts simulated values at least as large as the observed one.
    """
    s = as_sample(sample)
    a = check_tuning(a)
    alpha = float(alpha)
    if not 0 < alpha < 1:
        raise InvalidInput("alpha must lie in (0, 1)")
    z = z_statistic(scale_residuals(s), a)
    if method == "pearson":
        fit = asymptotic_null(a)
        crit = pearson_quantile(fit, 1 - alpha)
        p = pearson_pvalue(fit, z)
        prov = {
            "source": "asymptotic",
            "approximation": "pearson",
            "family": fit.family,
            "lower_tail_unreliable": lower_tail_unreliable(1 - alpha),
        }
        return TestOutcome(z, a, s.n, alpha, p, crit, bool(z > crit), method, prov)
    if method == "montecarlo":
        from .simulation import simulate_null_statistics

        if replications < 1000:
            raise InvalidInput("montecarlo needs at least 1000 replications")
        seed = seed if isinstance(seed, SeedSpec) else SeedSpec(int(seed), stream_for(f"null/n={s.n}"))
        null = simulate_null_statistics(s.n, StatisticId("Z", a), replications, seed)
        r = int(np.count_nonzero(null >= z))
        p = (r + 1) / (replications + 1)
        crit = float(np.quantile(null, 1 - alpha))
        prov = {"source": "simulated", "replications": replications, "seed": seed.to_dict()}
        return TestOutcome(z, a, s.n, alpha, p, crit, bool(p <= alpha), method, prov)
    raise InvalidInput(f"method must be one of {METHODS}, got {method!r}")
