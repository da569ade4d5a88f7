"""Zero-bias characteristic-function test of normality.

Quick start::

    >>> import numpy as np, zbgof
    >>> x = np.random.default_rng(1).standard_normal(50)
    >>> out = zbgof.zb_test(x, a=1.0)
    >>> out.reject
    False
"""
from .alternatives import STANDARD_NORMAL, AlternativeSpec, parse_alternative
from .competitors import (
    StatisticId,
    ad_statistic,
    bcmr_statistic,
    be_statistic,
    bhep_statistic,
    classical_statistics,
    hv_statistic,
    jb_statistic,
    parse_statistic,
    sw_statistic,
)
from .decision import TestOutcome, zb_test
from .errors import (
    DegenerateSample,
    InfeasibleMoments,
    InvalidInput,
    InvalidParams,
    InvalidTuning,
    MissingCriticalValue,
    NonFiniteInput,
    ParseError,
    QuadratureFailure,
    TooFewObservations,
    UnknownAlternativeName,
    UnsupportedAlternative,
    UnsupportedSampleSize,
    ZBGOFError,
)
from .null_theory import (
    CumulantSet,
    DeltaResult,
    MomentSummary,
    cumulant_closed_form,
    cumulant_oracle,
    cumulants,
    delta_discrepancy,
    kernel_kz,
    moment_summary,
    sample_discrepancy,
)
from .pearson import PearsonFit, asymptotic_null, pearson_fit, pearson_pvalue, pearson_quantile
from .quadrature import QuadratureSpec
from .rng import SeedSpec
from .simulation import (
    PowerEntry,
    QuantileTable,
    ReplicationBudget,
    power_study,
    reproduce_table,
    sample_alternative,
    simulate_critical_values,
)
from .statistic import (
    Sample,
    ScaledResiduals,
    scale_residuals,
    skewness_limit_diagnostic,
    z_statistic,
    z_statistic_integral,
)

__version__ = "0.1.0"
