import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from zbgof.errors import DegenerateSample, InvalidTuning, NonFiniteInput, TooFewObservations
from zbgof.quadrature import QuadratureSpec
from zbgof.statistic import (
    Sample,
    ScaledResiduals,
    scale_residuals,
    skewness_limit_diagnostic,
    z_statistic,
    z_statistic_batch,
    z_statistic_integral,
)

from .conftest import samples

PAIR = ScaledResiduals(np.array([-1.0, 1.0]))
# 2x2 double sum by hand: diagonal terms give 1/2 + 1 each, the two
# off-diagonal terms give (1/4)(2 - 4) - 2 - 1 = -7/2 times exp(-1)
PAIR_A1 = 0.5 * math.sqrt(math.pi) * (3 - 7 * math.exp(-1))


class TestScaledResiduals:
    def test_symmetric_pair(self):
        np.testing.assert_allclose(scale_residuals([0.0, 2.0]).y, [-1.0, 1.0])

    def test_constant_sample_rejected(self):
        with pytest.raises(DegenerateSample):
            scale_residuals([5.0, 5.0, 5.0])

    def test_too_few(self):
        with pytest.raises(TooFewObservations):
            Sample([1.0])

    @pytest.mark.parametrize("bad", [np.nan, np.inf, -np.inf])
    def test_non_finite(self, bad):
        with pytest.raises(NonFiniteInput):
            Sample([0.0, 1.0, bad])

    def test_normalization_identities(self, rng):
        y = scale_residuals(rng.standard_normal(100)).y
        assert abs(y.sum()) <= 1e-10 * 100
        assert y @ y == pytest.approx(100, rel=1e-10)

    def test_ddof_one_divides_by_n_minus_one(self, rng):
        x = rng.standard_normal(30)
        y = scale_residuals(x, ddof=1).y
        assert y @ y == pytest.approx(29, rel=1e-12)

    @given(samples())
    def test_identities_hold_for_arbitrary_data(self, x):
        y = scale_residuals(x).y
        assert abs(y.sum()) <= 1e-10 * y.size
        assert y @ y == pytest.approx(y.size, rel=1e-10)


class TestClosedForm:
    def test_hand_value(self):
        assert z_statistic(PAIR, 1.0) == pytest.approx(PAIR_A1, rel=1e-12)
        assert z_statistic(PAIR, 1.0) == pytest.approx(0.376508, abs=5e-7)

    def test_hand_value_matches_integral(self):
        assert z_statistic_integral(PAIR, 1.0) == pytest.approx(PAIR_A1, rel=1e-8)

    def test_raw_sample_accepted(self):
        assert z_statistic([0.0, 2.0], 1.0) == pytest.approx(PAIR_A1, rel=1e-12)

    @pytest.mark.parametrize("a", [0.0, -1.0, np.inf, np.nan])
    def test_bad_tuning(self, a):
        with pytest.raises(InvalidTuning):
            z_statistic(PAIR, a)

    def test_decreasing_in_a_for_pair(self):
        vals = [z_statistic(PAIR, a) for a in (0.5, 1.0, 2.0)]
        assert vals[0] > vals[1] > vals[2]
        ints = [z_statistic_integral(PAIR, a) for a in (0.5, 1.0, 2.0)]
        np.testing.assert_allclose(vals, ints, rtol=1e-8)

    def test_stable_for_large_a(self, rng):
        # naive summation loses every digit here; the rearranged form must not
        res = scale_residuals(rng.exponential(size=30))
        big = z_statistic(res, 1e6)
        assert np.isfinite(big) and big > 0
        assert big == pytest.approx(z_statistic_integral(res, 1e6), rel=1e-6)

    def test_batch_matches_scalar(self, rng):
        X = rng.standard_normal((7, 25))
        Y = np.array([scale_residuals(x).y for x in X])
        got = z_statistic_batch(Y, [0.5, 2.0])
        want = np.array([[z_statistic(ScaledResiduals(y), a) for a in (0.5, 2.0)] for y in Y])
        np.testing.assert_allclose(got, want, rtol=1e-12)
        np.testing.assert_allclose(z_statistic_batch(Y, 0.5), want[:, 0], rtol=1e-12)


class TestOracleEquivalence:
    @pytest.mark.parametrize("a", [0.25, 1.0, 5.0])
    def test_random_samples(self, a):
        rng = np.random.default_rng(int(a * 100))
        for _ in range(25):
            n = int(rng.integers(2, 51))
            res = scale_residuals(rng.standard_t(4, n))
            assert z_statistic(res, a) == pytest.approx(z_statistic_integral(res, a), rel=1e-8)

    def test_adaptive_interval_scheme(self, rng):
        res = scale_residuals(rng.gamma(2.0, size=20))
        quad = QuadratureSpec(scheme="adaptive-interval", node_count=64)
        assert z_statistic_integral(res, 1.0, quad) == pytest.approx(z_statistic(res, 1.0), rel=1e-8)

    @given(samples(max_size=20), st.sampled_from([0.3, 1.0, 4.0]))
    def test_property(self, x, a):
        res = scale_residuals(x)
        assert z_statistic(res, a) == pytest.approx(z_statistic_integral(res, a), rel=1e-8, abs=1e-12)


class TestInvariances:
    @given(
        samples(),
        st.floats(min_value=-50, max_value=50).filter(lambda c: abs(c) > 1e-2),
        st.floats(min_value=-100, max_value=100),
        st.sampled_from([0.25, 1.0, 5.0]),
    )
    def test_affine(self, x, c, d, a):
        z0 = z_statistic(scale_residuals(x), a)
        z1 = z_statistic(scale_residuals(c * x + d), a)
        assert z1 == pytest.approx(z0, rel=1e-8, abs=1e-12)

    @given(samples(), st.sampled_from([0.25, 1.0, 5.0]))
    def test_reflection(self, x, a):
        y = scale_residuals(x).y
        assert z_statistic(ScaledResiduals(-y), a) == pytest.approx(z_statistic(ScaledResiduals(y), a), rel=1e-10, abs=1e-12)

    @given(samples(), st.randoms(use_true_random=False), st.sampled_from([0.25, 1.0]))
    def test_permutation_exact(self, x, r, a):
        perm = list(x)
        r.shuffle(perm)
        # residuals are sorted before summation, so the result is bitwise stable
        assert z_statistic(np.array(perm), a) == z_statistic(x, a)

    @given(samples(), st.sampled_from([0.1, 1.0, 10.0, 1e4]))
    def test_nonnegative(self, x, a):
        assert z_statistic(x, a) >= -1e-10


class TestSkewnessLimit:
    def test_symmetric_pair_vanishes(self):
        assert 0 <= skewness_limit_diagnostic(PAIR, 1e4) <= 1e-3

    def test_skewed_four_points(self):
        res = scale_residuals([0.0, 0.0, 0.0, 4.0])
        target = np.mean(res.y ** 3) ** 2
        assert skewness_limit_diagnostic(res, 1e4) == pytest.approx(target, rel=0.01)

    def test_large_a(self, rng):
        for _ in range(10):
            res = scale_residuals(rng.exponential(size=int(rng.integers(5, 60))))
            target = np.mean(res.y ** 3) ** 2
            assert skewness_limit_diagnostic(res, 1e6) == pytest.approx(target, rel=1e-3)
