import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arcbeta.distribution import GeneralizedBetaDist, make_dist, uniforms
from arcbeta.errors import DomainError, UnsupportedCaseError
from arcbeta.quadrature import integrate

INTERVALS = [(0.0, 1.0), (-1.0, 3.0), (1.0, 3.0)]
GRID = [0.3, 0.5, 1.0, 2.5, 7.0]
STD = make_dist((0, 1), (0.5, 0.5))
UNIFORM = make_dist((0, 1), (1, 1))


def exact_standard_moment(width, n):
    # width^(2n) (2n)! / (16^n (n!)^2)
    return float(Fraction(width) ** (2 * n) * Fraction(math.factorial(2 * n), 16**n * math.factorial(n) ** 2))


def test_make_dist_predicates():
    assert STD.is_standard_arcsine and STD.is_generalized_arcsine
    assert UNIFORM.is_generalized_arcsine and not UNIFORM.is_standard_arcsine
    d = make_dist((-1, 3), (0.5, 7))
    assert not d.is_generalized_arcsine
    assert isinstance(d, GeneralizedBetaDist)
    # B(1/2, n + 1) = 2^(2n+1) (n!)^2 / (2n+1)! at n = 6
    b = Fraction(2**13 * math.factorial(6) ** 2, math.factorial(13))
    assert d.log_normalizer == pytest.approx(6.5 * math.log(4) + math.log(b), rel=1e-14)


@pytest.mark.parametrize("iv,sp", [((1, 1), (1, 1)), ((0, 1), (0, 1)), ((0, 1), (1, -2))])
def test_make_dist_rejects(iv, sp):
    with pytest.raises(DomainError):
        make_dist(iv, sp)


def test_pdf_examples():
    assert UNIFORM.pdf(0.3) == 1.0
    assert STD.pdf(0.5) == pytest.approx(2 / math.pi, rel=1e-14)
    assert STD.pdf(-0.1) == 0.0 and STD.pdf(1.5) == 0.0
    assert UNIFORM.log_pdf(0.3) == 0.0
    assert STD.log_pdf(2.0) == -math.inf
    assert STD.log_pdf(0.5) == pytest.approx(math.log(2 / math.pi), rel=1e-14)


def test_pdf_endpoint_convention():
    assert STD.pdf(0.0) == math.inf and STD.pdf(1.0) == math.inf
    assert UNIFORM.pdf(0.0) == 1.0 and UNIFORM.pdf(1.0) == 1.0
    d = make_dist((0, 2), (1, 3))  # exponent 0 at r1, 2 at r2
    assert d.pdf(0.0) == pytest.approx(3 / 2, rel=1e-14)
    assert d.pdf(2.0) == 0.0


def test_pdf_vectorised():
    x = np.array([-1.0, 0.25, 0.5, 2.0])
    out = STD.pdf(x)
    assert out.shape == (4,)
    assert out[0] == 0.0 and out[-1] == 0.0


@pytest.mark.parametrize("iv", INTERVALS)
@pytest.mark.parametrize("s", GRID)
@pytest.mark.parametrize("t", GRID)
def test_normalisation_and_mean(iv, s, t):
    d = make_dist(iv, (s, t))
    total = integrate(lambda x, da, db: d.pdf_from_distances(da, db), *iv, distances=True)
    assert total.value == pytest.approx(1.0, abs=1e-10)
    first = integrate(lambda x, da, db: (iv[0] + da) * d.pdf_from_distances(da, db), *iv, distances=True)
    assert d.mean() == pytest.approx(first.value, rel=1e-9)


def test_mean_examples():
    assert UNIFORM.mean() == 0.5
    assert make_dist((0, 1), (2, 3)).mean() == pytest.approx(0.4, rel=1e-15)
    assert make_dist((-1, 3), (0.5, 7)).mean() == pytest.approx(-11 / 15, rel=1e-15)
    for iv in INTERVALS:
        d = make_dist(iv, (2.5, 2.5))
        assert d.mean() == pytest.approx(0.5 * (iv[0] + iv[1]), abs=np.spacing(abs(iv[1])))


def test_cdf_examples():
    d = make_dist((1, 3), (2, 2))
    assert d.cdf(1.0) == 0.0 and d.cdf(3.0) == 1.0
    assert d.cdf(0.0) == 0.0 and d.cdf(9.0) == 1.0
    assert d.cdf(2.0) == pytest.approx(0.5, abs=1e-15)
    assert STD.cdf(0.25) == pytest.approx(1 / 3, abs=1e-14)


def test_cdf_matches_arcsine_closed_form():
    x = np.linspace(0, 1, 101)
    assert np.allclose(STD.cdf(x), 2 / np.pi * np.arcsin(np.sqrt(x)), atol=1e-14, rtol=0)


def test_quantile_examples():
    d = make_dist((-1, 3), (1.5, 1.5))
    assert d.quantile(0.0) == -1.0 and d.quantile(1.0) == 3.0
    assert d.quantile(0.5) == pytest.approx(1.0, abs=1e-14)
    assert STD.quantile(1 / 3) == pytest.approx(0.25, abs=1e-14)
    with pytest.raises(DomainError):
        d.quantile(1.2)


@pytest.mark.parametrize("iv", INTERVALS)
@pytest.mark.parametrize("s,t", [(0.5, 0.5), (1, 1), (2.5, 0.5), (7, 2.5), (0.3, 1)])
def test_cdf_quantile_round_trip(iv, s, t):
    d = make_dist(iv, (s, t))
    p = np.linspace(0.001, 0.999, 500)
    assert np.max(np.abs(d.cdf(d.quantile(p)) - p)) <= 1e-9


@settings(max_examples=100, deadline=None)
@given(k=st.integers(1, 2**20 - 1), s=st.floats(0.2, 10.0))
def test_pdf_symmetry(k, s):
    # dyadic offsets around a dyadic midpoint keep x - r1 and r2 - x exact
    d = make_dist((-1, 3), (s, s))
    delta = 2.0 * k / 2**20
    assert d.pdf(1.0 + delta) == d.pdf(1.0 - delta)


class TestCentralMoments:
    def test_odd_vanish(self):
        for s in (0.5, 2.0):
            assert make_dist((1, 3), (s, s)).central_moment(3) == 0.0

    def test_standard_second(self):
        assert STD.central_moment(2) == pytest.approx(1 / 8, rel=1e-13)
        assert make_dist((1, 3), (0.5, 0.5)).central_moment(2) == pytest.approx(0.5, rel=1e-13)

    def test_width_scaled_case_by_oracle(self):
        assert make_dist((1, 3), (0.5, 0.5)).central_moment_numeric(2) == pytest.approx(0.5, rel=1e-10)

    def test_uniform_matches_variance(self):
        assert UNIFORM.central_moment(2) == pytest.approx(1 / 12, rel=1e-13)

    def test_requires_symmetry(self):
        with pytest.raises(UnsupportedCaseError):
            make_dist((0, 1), (2, 3)).central_moment(2)
        with pytest.raises(DomainError):
            STD.central_moment(0)

    @pytest.mark.parametrize("n,expected", [(1, 1 / 8), (2, 3 / 128)])
    def test_standard_formula(self, n, expected):
        assert STD.standard_arcsine_central_moment(n) == pytest.approx(expected, rel=1e-14)

    def test_standard_zero_order(self):
        assert STD.standard_arcsine_central_moment(0) == 1.0

    def test_standard_requires_half(self):
        with pytest.raises(UnsupportedCaseError):
            UNIFORM.standard_arcsine_central_moment(1)

    @pytest.mark.parametrize("iv", INTERVALS)
    @pytest.mark.parametrize("n", range(1, 11))
    def test_standard_formula_vs_general(self, iv, n):
        d = make_dist(iv, (0.5, 0.5))
        exact = exact_standard_moment(iv[1] - iv[0], n)
        assert d.standard_arcsine_central_moment(n) == pytest.approx(exact, rel=1e-12)
        assert d.central_moment(2 * n) == pytest.approx(exact, rel=1e-12)

    @pytest.mark.parametrize("s", [0.5, 1.0, 1.5, 3.0])
    def test_width_scaling(self, s):
        unit = make_dist((0, 1), (s, s))
        for iv in INTERVALS:
            d = make_dist(iv, (s, s))
            w = iv[1] - iv[0]
            for k in (2, 4, 6, 8):
                assert d.central_moment(k) == pytest.approx(w**k * unit.central_moment(k), rel=1e-12)

    def test_numeric_examples(self):
        assert UNIFORM.central_moment_numeric(2) == pytest.approx(1 / 12, rel=1e-10)
        assert make_dist((0, 1), (2, 3)).central_moment_numeric(1) == pytest.approx(0.0, abs=1e-12)
        assert STD.central_moment_numeric(4) == pytest.approx(3 / 128, rel=1e-10)

    def test_numeric_general_case_matches_raw_moments(self):
        # Beta(2, 3) on [0, 1]: variance 6 / (25 * 6) = 1/25
        assert make_dist((0, 1), (2, 3)).central_moment_numeric(2) == pytest.approx(1 / 25, rel=1e-10)

    def test_moment_table(self):
        tab = STD.moment_table(4)
        assert [r[0] for r in tab.rows] == [1, 2, 3, 4]
        assert tab.as_dict()[1] == 0.0 and tab.as_dict()[3] == 0.0
        assert tab.as_dict()[4] == pytest.approx(3 / 128, rel=1e-13)
        assert {r[2] for r in tab.rows} == {"closed"}
        general = make_dist((0, 1), (2, 3)).moment_table(2)
        assert {r[2] for r in general.rows} == {"quadrature"}
        with pytest.raises(UnsupportedCaseError):
            make_dist((0, 1), (2, 3)).moment_table(2, method="closed")


class TestSampling:
    def test_uniforms_open_interval_and_pinned(self):
        u = uniforms(10_000, 123)
        assert np.all((u > 0) & (u < 1))
        raw = np.random.PCG64(123).random_raw(3)
        assert np.array_equal(u[:3], ((raw >> np.uint64(11)) + 0.5) * 2.0**-53)

    def test_deterministic(self):
        d = make_dist((-1, 3), (0.5, 7))
        a, b = d.sample(1, 99), d.sample(1, 99)
        assert a.shape == (1,) and a[0] == b[0]
        assert -1 < a[0] < 3
        assert not np.array_equal(d.sample(5, 1), d.sample(5, 2))

    def test_strictly_inside(self):
        d = make_dist((1, 3), (0.3, 0.3))
        x = d.sample(20_000, 5)
        assert np.all((x > 1) & (x < 3))

    def test_bad_args(self):
        with pytest.raises(DomainError):
            STD.sample(0, 1)
        with pytest.raises(DomainError):
            STD.sample(3, -1)

    def test_standard_arcsine_mean(self):
        n = 100_000
        x = STD.sample(n, 2024)
        assert abs(x.mean() - 0.5) < 4 * math.sqrt(1 / 8) / math.sqrt(n)

    @pytest.mark.parametrize("iv,s", [((0, 1), 0.5), ((-1, 3), 2.5), ((1, 3), 0.3)])
    def test_ks(self, iv, s):
        from arcbeta.arcsine_laws import ks_against

        d = make_dist(iv, (s, s))
        rep = ks_against(d.sample(100_000, 11), d)
        assert rep.statistic < 1.63 / math.sqrt(100_000)
