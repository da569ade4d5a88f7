import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import integrate

from zbgof.alternatives import AlternativeSpec, parse_alternative
from zbgof.errors import InvalidInput, QuadratureFailure, UnsupportedAlternative
from zbgof.null_theory import (
    CumulantSet,
    MomentSummary,
    cumulant_closed_form,
    cumulant_oracle,
    cumulants,
    delta_discrepancy,
    kernel_kz,
    kernel_matrix,
    moment_summary,
)
from zbgof.published import TABLE1
from zbgof.quadrature import QuadratureSpec
from zbgof.rng import SeedSpec

finite = st.floats(min_value=-8, max_value=8, allow_nan=False)


class TestKernel:
    def test_origin(self):
        assert kernel_kz(0.0, 0.0) == 0.0

    def test_unit_point(self):
        assert kernel_kz(1.0, 1.0) == pytest.approx(2 - 3 * math.exp(-1), rel=1e-14)
        assert kernel_kz(1.0, 1.0) == pytest.approx(0.896362, abs=1e-6)

    @given(finite, finite)
    def test_symmetric(self, s, t):
        assert kernel_kz(s, t) == kernel_kz(t, s)

    def test_diagonal_nonnegative(self):
        t = np.linspace(-10, 10, 4001)
        assert np.all(kernel_kz(t, t) >= 0)

    @pytest.mark.parametrize("a", [0.1, 0.5, 1.0, 3.0, 10.0])
    @pytest.mark.parametrize("scheme", ["gauss-hermite", "adaptive-interval"])
    def test_positive_semidefinite(self, a, scheme):
        K = kernel_matrix(a, QuadratureSpec(scheme=scheme), 128)
        assert np.linalg.eigvalsh(K).min() >= -1e-8


class TestClosedForms:
    @pytest.mark.parametrize("a", [0.25, 0.5, 1.0, 3.0, 10.0])
    def test_kappa1_is_trace_integral(self, a):
        val, _ = integrate.quad(lambda t: kernel_kz(t, t) * math.exp(-a * t * t), -np.inf, np.inf,
                                epsabs=0, epsrel=1e-12)
        assert cumulant_closed_form(a, 1) == pytest.approx(val, rel=1e-8)

    @pytest.mark.parametrize("a,m,want", [(1, 1, 0.7787), (1, 2, 0.5430), (3, 1, 0.0861), (3, 2, 0.0094)])
    def test_published_examples(self, a, m, want):
        assert round(cumulant_closed_form(a, m), 4) == want

    @pytest.mark.parametrize("a", sorted(TABLE1))
    def test_moment_summary_table(self, a):
        got = moment_summary(a).as_tuple()
        for g, w in zip(got, TABLE1[a]):
            assert abs(g - w) <= 5e-5 + 1e-12

    @pytest.mark.parametrize("a", [0.01, 0.1, 1.0, 10.0, 100.0])
    def test_cumulants_positive_and_feasible(self, a):
        k = cumulants(a).kappa
        assert all(v > 0 for v in k)
        assert moment_summary(a).feasible

    def test_bad_order(self):
        with pytest.raises(InvalidInput):
            cumulant_closed_form(1.0, 5)


class TestOracle:
    @pytest.mark.parametrize("m", [1, 2, 3, 4])
    @pytest.mark.parametrize("a", [0.25, 0.5, 1.0, 3.0])
    def test_matches_closed_form(self, a, m):
        assert cumulant_oracle(a, m) == pytest.approx(cumulant_closed_form(a, m), rel=1e-6)

    def test_kappa2_double_integral(self):
        # kappa2 = 2 * int int K(s,t)^2 w(s) w(t) ds dt by a tensor Gauss-Legendre rule,
        # independent of the eigenvalue route
        a = 1.0
        x, w = np.polynomial.legendre.leggauss(200)
        R = 7.0
        t, wt = R * x, R * w * np.exp(-a * (R * x) ** 2)
        K = kernel_kz(t[:, None], t[None, :])
        val = 2 * wt @ (K ** 2) @ wt
        assert cumulant_oracle(a, 2) == pytest.approx(val, rel=1e-6)

    def test_two_schemes_agree(self):
        a = 0.5
        gh = cumulant_oracle(a, 3)
        ai = cumulant_oracle(a, 3, QuadratureSpec(scheme="adaptive-interval", max_nodes=2048))
        assert gh == pytest.approx(ai, rel=1e-8)

    def test_failure_reported(self):
        with pytest.raises(QuadratureFailure):
            cumulant_oracle(0.01, 4, QuadratureSpec(max_nodes=256))

    def test_cumulant_set_source(self):
        cs = cumulants(1.0, source="quadrature-oracle")
        assert cs.source == "quadrature-oracle"
        np.testing.assert_allclose(cs.kappa, cumulants(1.0).kappa, rtol=1e-6)


class TestSummaryTypes:
    def test_cumulant_set_rejects_nonpositive(self):
        with pytest.raises(InvalidInput):
            CumulantSet(1.0, (0.5, -1.0, 0.1, 0.1))

    def test_feasibility(self):
        assert not MomentSummary(0, 1, 2.0, 4.5).feasible
        assert MomentSummary(0, 1, 2.0, 5.5).feasible


class TestDelta:
    @pytest.mark.parametrize("mu,s2", [(0, 1), (3.0, 0.25), (-2.0, 9.0)])
    def test_normal_is_zero(self, mu, s2):
        res = delta_discrepancy(AlternativeSpec("Normal", (mu, s2)))
        assert res.delta == 0.0 and res.std_error == 0.0 and res.method == "analytic-cf"

    def test_uniform_analytic_vs_monte_carlo(self):
        U = parse_alternative("U")
        exact = delta_discrepancy(U)
        mc = delta_discrepancy(U, mc_budget=200_000, seed=SeedSpec(7), method="monte-carlo-cf")
        assert exact.delta > 0 and mc.std_error > 0
        assert abs(mc.delta - exact.delta) <= 3 * mc.std_error

    def test_uniform_invariant_to_location_scale(self):
        a = delta_discrepancy(parse_alternative("U"))
        b = delta_discrepancy(AlternativeSpec("Uniform", (2.0, 7.0)))
        assert a.delta == pytest.approx(b.delta, rel=1e-10)

    @pytest.mark.parametrize("name", ["chi2_5", "Gamma(5,1)", "NMix(0.5,1,4)"])
    def test_analytic_families_vs_monte_carlo(self, name):
        alt = parse_alternative(name)
        exact = delta_discrepancy(alt, a=0.5)
        mc = delta_discrepancy(alt, mc_budget=200_000, seed=SeedSpec(3), a=0.5, method="monte-carlo-cf")
        assert abs(mc.delta - exact.delta) <= 4 * mc.std_error

    def test_monte_carlo_only_family(self):
        res = delta_discrepancy(parse_alternative("LN(0,1)"), mc_budget=50_000, seed=SeedSpec(1))
        assert res.method == "monte-carlo-cf" and res.delta > 0

    def test_infinite_variance(self):
        with pytest.raises(UnsupportedAlternative):
            delta_discrepancy(AlternativeSpec("StudentT", (2.0,)))
