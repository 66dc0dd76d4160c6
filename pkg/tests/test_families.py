from fractions import Fraction as F
from math import factorial

import pytest

from relhermite.algebra import Poly
from relhermite.families import (
    Family,
    FamilyId,
    MomentSequence,
    Normalization,
    OperatorSeries,
    apply_operator,
    bessel_operator_series,
    clear_perturbation,
    family_member,
    from_moment_binomial,
    gegenbauer_explicit,
    gegenbauer_moment_gamma_gauss,
    gegenbauer_moment_normalized,
    gegenbauer_moment_studentr,
    gegenbauer_moment_uv,
    gegenbauer_rodrigues,
    hermite,
    hermite_from_moments,
    hermite_from_operator,
    hermite_limit_deviation,
    hermite_moment_normalized,
    hermite_operator_series,
    normalize,
    perturbed,
    rhp_explicit,
    rhp_moment_gamma_gauss,
    rhp_moment_studentr,
    rhp_moment_uv,
    rhp_normalized,
    rhp_normalized_from_operator,
    rhp_raw_to_scaled,
    rhp_rodrigues,
    rhp_scaled,
    rhp_scaled_to_raw,
)
from relhermite.numeric import DomainError, pochhammer

TEST_PARAMS = [F(2), F(3), F(10), F(7, 2), F(1, 3)]


# ---------------------------------------------------------------------------
# The explicit low-degree members, written out as functions of N


def expected_rhp(n: int, N: F) -> Poly:
    if n == 0:
        return Poly((1,))
    if n == 1:
        return Poly((0, 2))
    if n == 2:
        return Poly((-2, 0, 2 * (2 + 1 / N)))
    if n == 3:
        c = 4 * (1 + 1 / N)
        return Poly((0, -3 * c, 0, c * (2 + 1 / N)))
    raise ValueError


def expected_gegenbauer(n: int, N: F) -> Poly:
    if n == 0:
        return Poly((1,))
    if n == 1:
        return Poly((0, 2 * N))
    if n == 2:
        return Poly((-N, 0, 2 * N * (N + 1)))
    if n == 3:
        c = 2 * N * (N + 1)
        return Poly((0, -c, 0, c * 2 * (N + 2) / 3))
    raise ValueError


@pytest.mark.parametrize("N", [F(1), F(2), F(3), F(7, 2)])
def test_low_degree_tables(N):
    for n in range(4):
        assert rhp_explicit(n, N) == expected_rhp(n, N)
        assert gegenbauer_explicit(n, N) == expected_gegenbauer(n, N)


def test_hermite_small():
    assert hermite(0) == Poly((1,))
    assert hermite(1) == Poly((0, 2))
    assert hermite(2) == Poly((-2, 0, 4))
    assert hermite(3) == Poly((0, -12, 0, 8))


def test_rodrigues_small_cases():
    N = F(7, 2)
    assert rhp_rodrigues(0, N) == Poly((1,))
    assert rhp_rodrigues(1, N) == Poly((0, 2))
    assert rhp_rodrigues(2, N) == expected_rhp(2, N)
    assert gegenbauer_rodrigues(0, N) == Poly((1,))
    assert gegenbauer_rodrigues(1, N) == Poly((0, 2 * N))
    assert gegenbauer_rodrigues(2, N) == expected_gegenbauer(2, N)


def test_rhp_explicit_rejects_poles():
    with pytest.raises(DomainError):
        rhp_explicit(2, 0)
    with pytest.raises(DomainError):
        rhp_explicit(4, F(-3, 2))  # (N+1/2)_2 = 0


# ---------------------------------------------------------------------------
# Moment sequences


def test_gaussian_moments():
    gauss = MomentSequence.gaussian_half()
    assert [gauss(k) for k in range(5)] == [1, 0, F(1, 2), 0, F(3, 4)]


def test_student_r_moments_match_beta_form():
    # independent form: E Z^(2k) = (1/2)_k / (N+1/2)_k
    for N in TEST_PARAMS:
        mom = MomentSequence.student_r(N)
        for k in range(6):
            assert mom(2 * k) == pochhammer(F(1, 2), k) / pochhammer(N + F(1, 2), k)
            assert mom(2 * k + 1) == 0


def test_gamma_and_point_moments():
    gamma = MomentSequence.gamma_shape(F(5, 2))
    assert [gamma(k) for k in range(4)] == [1, F(5, 2), F(35, 4), F(315, 8)]
    point = MomentSequence.point_mass(F(2, 3))
    assert point(3) == F(8, 27)


def test_student_r_pole():
    mom = MomentSequence.student_r(F(-3, 2))
    with pytest.raises(DomainError):
        mom(4)


# ---------------------------------------------------------------------------
# Route agreement (the full n <= 10 sweep lives in the acceptance suite)


@pytest.mark.parametrize("N", TEST_PARAMS)
def test_all_routes_agree(N):
    for n in range(7):
        raw = rhp_explicit(n, N)
        assert rhp_rodrigues(n, N) == raw
        scaled = rhp_scaled(n, N)
        assert rhp_moment_uv(n, N) == scaled
        assert rhp_moment_studentr(n, N) == scaled
        assert rhp_moment_gamma_gauss(n, N) == scaled
        assert rhp_normalized_from_operator(n, N) == rhp_normalized(n, N)

        geg = gegenbauer_explicit(n, N)
        assert gegenbauer_rodrigues(n, N) == geg
        assert gegenbauer_moment_uv(n, N) == geg
        assert gegenbauer_moment_studentr(n, N) == geg
        assert gegenbauer_moment_gamma_gauss(n, N) == geg


def test_hermite_routes_agree():
    for n in range(9):
        h = hermite(n)
        assert hermite_from_moments(n) == h
        assert hermite_from_operator(n) == h


def test_scale_conversion_roundtrip():
    for N in TEST_PARAMS:
        for n in range(6):
            raw = rhp_explicit(n, N)
            assert rhp_scaled_to_raw(rhp_raw_to_scaled(raw, n, N), n, N) == raw


# ---------------------------------------------------------------------------
# Structural properties


@pytest.mark.parametrize("N", TEST_PARAMS)
def test_parity_degree_leading(N):
    for n in range(9):
        for member, lead in (
            (gegenbauer_explicit(n, N), F(2) ** n * pochhammer(N, n) / factorial(n)),
            (rhp_scaled(n, N), pochhammer(2 * N, n)),
        ):
            assert member.degree == n
            assert member.leading == lead
            flipped = member.compose_linear(-1, 0)
            assert flipped == (member if n % 2 == 0 else -member)
        assert rhp_explicit(n, N).leading == pochhammer(2 * N, n) / N**n


@pytest.mark.parametrize("N", TEST_PARAMS)
def test_normalized_rhp_is_monic(N):
    for n in range(9):
        member = rhp_normalized(n, N)
        assert member.degree == n and member.leading == 1


def test_normalize_examples():
    N = F(7, 2)
    fid = FamilyId(Family.RHP, 1, N, Normalization.RAW)
    assert normalize(rhp_explicit(1, N), fid) == Poly((0, 1))
    fid2 = FamilyId(Family.RHP, 2, N, Normalization.SQRT_SCALED)
    assert normalize(rhp_scaled(2, N), fid2) == Poly((-1 / (2 * N + 1), 0, 1))
    fid3 = FamilyId(Family.GEGENBAUER, 2, N, Normalization.RAW)
    assert normalize(gegenbauer_explicit(2, N), fid3) == Poly(
        (-1 / (2 * N + 1), 0, 2 * (N + 1) / (2 * N + 1))
    )
    fid4 = FamilyId(Family.HERMITE, 2)
    assert normalize(hermite(2), fid4) == hermite_moment_normalized(2)


def test_family_id_validation():
    with pytest.raises(ValueError):
        FamilyId(Family.HERMITE, 2, F(2))
    with pytest.raises(ValueError):
        FamilyId(Family.GEGENBAUER, 2, None)
    with pytest.raises(ValueError):
        FamilyId(Family.GEGENBAUER, 2, F(2), Normalization.SQRT_SCALED)
    with pytest.raises(DomainError):
        FamilyId(Family.RHP, 2, F(0))


def test_family_member_dispatch():
    assert family_member(FamilyId(Family.HERMITE, 2)) == hermite(2)
    assert family_member(FamilyId(Family.RHP, 2, F(2), Normalization.MOMENT)) == rhp_normalized(2, F(2))
    assert family_member(
        FamilyId(Family.GEGENBAUER, 3, F(1, 3), Normalization.MOMENT)
    ) == gegenbauer_moment_normalized(3, F(1, 3))


# ---------------------------------------------------------------------------
# Moment and operator constructions


def test_from_moment_binomial_examples():
    gauss = MomentSequence.gaussian_half()
    assert from_moment_binomial(2, 4, gauss) == Poly((-2, 0, 4))
    student = MomentSequence.student_r(F(2))
    assert from_moment_binomial(0, 1, student) == Poly((1,))
    assert from_moment_binomial(2, pochhammer(F(4), 2), student) == Poly((-4, 0, 20))


def test_operator_examples():
    assert apply_operator(hermite_operator_series(), 2) == Poly((-2, 0, 4))
    op = OperatorSeries(lambda k: F(7) if k == 0 else F(0))
    assert apply_operator(op, 0) == Poly.constant(7)
    N = F(3)
    assert apply_operator(bessel_operator_series(N - F(1, 2)), 2) == Poly(
        (-1 / (2 * N + 1), 0, 1)
    )


def test_operator_series_from_student_moments_is_bessel():
    # the characteristic-function coefficients of the Student-r law are
    # exactly the normalized Bessel series of order N - 1/2
    for N in (F(2), F(7, 2), F(1, 3)):
        from_mom = OperatorSeries.from_moments(MomentSequence.student_r(N))
        bessel = bessel_operator_series(N - F(1, 2))
        for k in range(9):
            assert from_mom.coeff(k) == bessel.coeff(k)


def test_operator_series_from_gaussian_moments_is_exponential():
    from_mom = OperatorSeries.from_moments(MomentSequence.gaussian_half())
    exp_op = hermite_operator_series()
    for k in range(9):
        assert from_mom.coeff(k) == exp_op.coeff(k)


# ---------------------------------------------------------------------------
# Limit toward the classical family


def test_limit_deviation_stabilizes():
    for n in range(7):
        near = hermite_limit_deviation(n, F(10**4))
        far = hermite_limit_deviation(n, F(10**8))
        for a, b in zip(near, far):
            if a == b == 0:
                continue
            assert abs(a - b) <= F(1, 1000) * abs(b)


# ---------------------------------------------------------------------------
# Perturbation hook


def test_perturbation_hits_only_its_target():
    baseline = rhp_explicit(2, F(2))
    with perturbed("rhp", 2, 0, 1):
        assert rhp_explicit(2, F(2)) == baseline + Poly((1,))
        assert rhp_explicit(3, F(2)) == rhp_explicit(3, F(2))
        assert gegenbauer_explicit(2, F(2)) == expected_gegenbauer(2, F(2))
    assert rhp_explicit(2, F(2)) == baseline


def test_perturbation_clears_on_error():
    try:
        with perturbed("hermite", 1, 0, 1):
            raise RuntimeError
    except RuntimeError:
        pass
    assert hermite(1) == Poly((0, 2))
    clear_perturbation()
