from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from relhermite.algebra import (
    MultiPoly,
    Poly,
    QuadExtPoly,
    TruncSeries,
    multipoly_expectation,
    poly_divmod,
    poly_exact_div,
    real_poly,
    series_exp,
    series_mul,
    series_pow,
)
from relhermite.families import MomentSequence
from relhermite.numeric import ConsistencyError, DomainError, GaussianRational

fracs = st.fractions(min_value=-3, max_value=3, max_denominator=5)
polys = st.lists(fracs, min_size=0, max_size=5).map(Poly)


# ---------------------------------------------------------------------------
# Poly


def test_poly_ring_examples():
    x = Poly.x()
    assert (x + Poly.one()) * (x - Poly.one()) == Poly((-1, 0, 1))
    p = Poly((F(1, 2), 3))
    assert p + Poly.zero() == p
    two_x = Poly((0, 2))
    assert two_x * two_x * two_x == Poly((0, 0, 0, 8))


def test_poly_trailing_zeros_trimmed():
    assert Poly((1, 2, 0, 0)).coeffs == (F(1), F(2))
    assert Poly((0, 0)).is_zero
    assert Poly(()).degree == -1


def test_poly_eval():
    p = Poly((-1, 0, 1))  # X^2 - 1
    assert p.evaluate(F(3, 5)) == F(-16, 25)
    assert Poly((7, 1, 4)).evaluate(F(0)) == 7
    assert Poly((0, 0, 1)).evaluate(GaussianRational.i()) == -1


def test_poly_derivative():
    assert Poly((-2, 0, 4)).derivative() == Poly((0, 8))
    assert Poly.constant(5).derivative().is_zero
    assert Poly((0, -18, 0, 15)).derivative() == Poly((-18, 0, 45))


def test_poly_compose_linear():
    h2 = Poly((-2, 0, 4))
    assert h2.compose_linear(F(1, 2), 0) == Poly((-2, 0, 1))
    p = Poly((1, 2, 3))
    assert p.compose_linear(1, 0) == p
    c = F(5, 3)
    assert Poly((0, 0, 1)).compose_linear(0, c) == Poly.constant(c * c)


@given(polys)
def test_compose_identity(p):
    assert p.compose_linear(1, 0) == p


@given(polys, polys)
def test_degree_of_product(p, q):
    if not p.is_zero and not q.is_zero:
        assert (p * q).degree == p.degree + q.degree


def test_poly_divmod_exact():
    p = Poly((-1, 0, 1))
    q = Poly((1, 1))
    quot, rem = poly_divmod(p, q)
    assert quot == Poly((-1, 1)) and rem.is_zero
    assert poly_exact_div(p, q) == quot
    with pytest.raises(ConsistencyError):
        poly_exact_div(Poly((1, 1, 1)), Poly((1, 1)))


def test_poly_serialization_roundtrip():
    p = Poly((F(-2), F(0), F(5, 3)))
    assert p.to_strings() == ["-2", "0", "5/3"]
    assert Poly.from_strings(p.to_strings()) == p


def test_real_poly_rejects_imaginary():
    i = GaussianRational.i()
    with pytest.raises(ConsistencyError):
        real_poly(Poly((i, 1)))
    assert real_poly(Poly((GaussianRational(F(2), F(0)), 1))) == Poly((2, 1))


# ---------------------------------------------------------------------------
# QuadExtPoly


def test_quadext_norm_of_conjugates():
    mod = Poly((-1, 0, 1))  # s^2 = X^2 - 1
    plus = QuadExtPoly(Poly.x(), Poly.one(), mod)
    minus = QuadExtPoly(Poly.x(), -Poly.one(), mod)
    prod = plus * minus
    assert prod.a == Poly.one() and prod.b.is_zero


def test_quadext_square_of_radical():
    mod = Poly((1, 0, 1))  # s^2 = 1 + X^2
    s = QuadExtPoly(Poly.zero(), Poly.one(), mod)
    sq = s * s
    assert sq.a == mod and sq.b.is_zero


def test_quadext_one_plus_radical_squared():
    mod = Poly((1, 0, 1))
    u = QuadExtPoly(Poly.one(), Poly.one(), mod)
    sq = u**2
    assert sq.a == Poly((2, 0, 1)) and sq.b == Poly.constant(2)


def test_quadext_modulus_mismatch():
    a = QuadExtPoly(Poly.one(), Poly.one(), Poly((1, 0, 1)))
    b = QuadExtPoly(Poly.one(), Poly.one(), Poly((-1, 0, 1)))
    with pytest.raises(ValueError):
        a * b


@given(
    st.lists(fracs, min_size=1, max_size=4),
    st.lists(fracs, min_size=1, max_size=4),
    st.sampled_from([Poly((1, 0, 1)), Poly((-1, 0, 1))]),
)
def test_quadext_conjugation_kills_radical(acoeffs, bcoeffs, mod):
    u = QuadExtPoly(Poly(acoeffs), Poly(bcoeffs), mod)
    prod = u * u.conjugate()
    assert prod.b.is_zero


# ---------------------------------------------------------------------------
# TruncSeries


def test_series_pow_binomial():
    one_plus_t = TruncSeries((1, 1), 3)
    assert series_pow(one_plus_t, -2).coeffs == (F(1), F(-2), F(3), F(-4))
    f = TruncSeries((1, F(1, 3), F(2, 5)), 4)
    assert series_pow(f, 0) == TruncSeries.constant(1, 4)


def test_series_pow_even_binomial():
    f = TruncSeries((1, 0, F(1, 2)), 4)  # 1 + t^2/2
    assert series_pow(f, -2).coeffs == (F(1), F(0), F(-1), F(0), F(3, 4))


def test_series_pow_requires_unit_constant():
    with pytest.raises(DomainError):
        series_pow(TruncSeries((0, 1), 3), F(1, 2))
    with pytest.raises(DomainError):
        series_pow(TruncSeries((2, 1), 3), F(1, 2))
    # exact roots of perfect powers are allowed
    assert series_pow(TruncSeries((4, 1), 2), F(1, 2)).coeffs[0] == 2


def test_series_exp():
    t = TruncSeries((0, 1), 3)
    assert series_exp(t).coeffs == (F(1), F(1), F(1, 2), F(1, 6))
    assert series_exp(TruncSeries.zero(4)) == TruncSeries.constant(1, 4)
    scaled = TruncSeries((0, F(3, 5)), 2)
    assert series_exp(scaled).coeffs == (F(1), F(3, 5), F(9, 50))
    with pytest.raises(DomainError):
        series_exp(TruncSeries((1, 1), 2))


def test_series_order_is_min():
    a = TruncSeries((1, 1, 1), 2)
    b = TruncSeries((1, 1), 5)
    assert (a * b).order == 2
    assert (a + b).order == 2


@settings(max_examples=40)
@given(st.lists(fracs, min_size=0, max_size=4), st.fractions(min_value=-3, max_value=3, max_denominator=4))
def test_series_pow_inverse(tail, e):
    f = TruncSeries([F(1)] + tail, 6)
    prod = series_mul(series_pow(f, e), series_pow(f, -e))
    assert prod == TruncSeries.constant(1, 6)
    assert series_pow(f, 1) == f


# ---------------------------------------------------------------------------
# MultiPoly


def _pair_diff_squared():
    z0 = MultiPoly.variable(0, 2)
    z1 = MultiPoly.variable(1, 2)
    d = z0 - z1
    return d * d


def test_expectation_examples():
    gauss = MomentSequence.gaussian_half()
    assert multipoly_expectation(_pair_diff_squared(), gauss) == 1
    assert multipoly_expectation(MultiPoly.constant(F(5, 7), 2), gauss) == F(5, 7)
    student = MomentSequence.student_r(2)
    assert multipoly_expectation(_pair_diff_squared(), student) == F(2, 5)


@given(fracs)
def test_expectation_linear(scale):
    gauss = MomentSequence.gaussian_half()
    m1 = _pair_diff_squared()
    m2 = MultiPoly.variable(0, 2) * MultiPoly.variable(1, 2)
    combo = MultiPoly(2, {k: scale * v for k, v in m1.terms.items()}) + m2
    assert multipoly_expectation(combo, gauss) == scale * multipoly_expectation(
        m1, gauss
    ) + multipoly_expectation(m2, gauss)
