"""Identity checks.

Every check constructs both sides of one stated identity from
independent routes, entirely over exact rationals, and returns a
CheckResult whose witness is the difference LHS - RHS (a polynomial, a
truncated series, or a constant holding the first mismatching grid
value).  A check passes exactly when its witness is identically zero.

Square roots never reach the arithmetic: identities involving sqrt(N),
sqrt(N+l), sqrt(1/2-N-n) or sqrt(1+X^2) are verified in equivalent
forms where all half powers have been paired analytically beforehand.
Bivariate statements are proven by exact evaluation on a grid with more
points per variable than that variable's degree bound; the bound is
computed from the constructed polynomials, not assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Optional, Sequence, Tuple, Union

from .algebra import Poly, TruncSeries
from .families import (
    HALF,
    Family,
    MomentSequence,
    gegenbauer_explicit,
    hermite,
    rhp_explicit,
    rhp_normalized,
    rhp_scaled,
)
from .numeric import (
    ConsistencyError,
    DomainError,
    GaussianRational,
    GammaRatio,
    RationalLike,
    as_param,
    binomial,
    factorial,
    gamma_ratio_rational_value,
    pochhammer,
    rational,
    rational_str,
)

Witness = Union[Poly, TruncSeries, None]


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one identity check.

    passed is true iff the witness is identically zero; skipped marks a
    pole-precondition exclusion (neither passed nor failed).
    """

    name: str
    params: dict
    passed: bool
    witness: Witness = None
    notes: str = ""
    skipped: bool = False

    def to_json_dict(self) -> dict:
        params = {}
        for key, value in self.params.items():
            if isinstance(value, Fraction):
                params[key] = rational_str(value)
            elif isinstance(value, (tuple, list)):
                params[key] = [rational_str(v) for v in value]
            else:
                params[key] = value
        witness = None
        if not self.passed and not self.skipped and self.witness is not None:
            witness = self.witness.to_strings()
        return {
            "name": self.name,
            "params": params,
            "passed": self.passed,
            "skipped": self.skipped,
            "witness": witness,
            "notes": self.notes,
        }


def run_guarded(name: str, params: dict, builder: Callable[[], CheckResult]) -> CheckResult:
    """Run a check, converting pole preconditions into a skipped result."""
    try:
        return builder()
    except DomainError as exc:
        return CheckResult(name, params, passed=False, skipped=True, notes=f"skipped: {exc}")


def _poly_result(name: str, params: dict, lhs: Poly, rhs: Poly, notes: str = "") -> CheckResult:
    witness = lhs - rhs
    return CheckResult(name, params, passed=witness.is_zero, witness=witness, notes=notes)


def _series_result(
    name: str, params: dict, lhs: TruncSeries, rhs: TruncSeries, notes: str = ""
) -> CheckResult:
    witness = lhs - rhs
    return CheckResult(name, params, passed=witness.is_zero, witness=witness, notes=notes)


# ---------------------------------------------------------------------------
# Nagel-type identities


def check_nagel(n: int, N: RationalLike) -> CheckResult:
    """N^(n/2) H_n^N(X sqrt N) = n! sum_k c_{n-2k} X^(n-2k) (1+X^2)^k,
    where the c's are the coefficients of C_n^N.  This is the Gegenbauer
    relation at argument X/sqrt(1+X^2) with the (1+X^2)^(n/2) factor
    absorbed, exact because C_n^N has parity n."""
    N = as_param(N)
    params = {"n": n, "N": N}
    lhs = rhp_scaled(n, N)
    geg = gegenbauer_explicit(n, N)
    one_plus_x2 = Poly((1, 0, 1))
    rhs = Poly.zero()
    for k in range(n // 2 + 1):
        j = n - 2 * k
        c = geg.coeff(j)
        if c != 0:
            rhs = rhs + c * (Poly.monomial(j) * one_plus_x2**k)
    rhs = rhs * factorial(n)
    return _poly_result("nagel", params, lhs, rhs)


@dataclass(frozen=True)
class AlphaCoefficient:
    """The connection scalar between C_n^N and the relativistic family at
    parameter M = 1/2 - N - n.

    Decomposed as the unit (-2i)^n, the rational (N)_n / ((2N+n)_n n!),
    and the half power M^(n/2), which stays symbolic until each term's
    matching half powers arrive; pairing must leave an even total
    exponent and a purely real unit.
    """

    n: int
    N: Fraction

    def __post_init__(self):
        object.__setattr__(self, "N", as_param(self.N))

    @property
    def m_value(self) -> Fraction:
        return HALF - self.N - self.n

    @property
    def rational_part(self) -> Fraction:
        denom = pochhammer(2 * self.N + self.n, self.n)
        if denom == 0:
            raise DomainError(f"(2N+n)_{self.n} vanishes at N={self.N}")
        return pochhammer(self.N, self.n) / (denom * factorial(self.n))

    def pair(self, k: int) -> Fraction:
        """Scalar multiplying the X^(n-2k) coefficient of H_n^M after the
        substitution X -> -iX sqrt(M): combines (-2i)^n with the term's
        (-i)^(n-2k) and M^(n/2) with the term's M^((n-2k)/2)."""
        unit = GaussianRational(0, -2) ** self.n * GaussianRational(0, -1) ** (
            self.n - 2 * k
        )
        if unit.im != 0:
            raise ConsistencyError("i powers must combine to a real unit")
        half_exponent = self.n + (self.n - 2 * k)
        if half_exponent % 2:
            raise ConsistencyError("unresolved half power of M")
        return unit.re * self.rational_part * self.m_value ** (half_exponent // 2)


def check_cnix(n: int, N: RationalLike) -> CheckResult:
    """C_n^N(X) = alpha_n^N H_n^M(-iX sqrt M) with M = 1/2 - N - n,
    verified coefficientwise with every half power of M and every power
    of i paired analytically, so both sides are rational polynomials."""
    N = as_param(N)
    params = {"n": n, "N": N}
    M = HALF - N - n
    as_param(M)
    lhs = gegenbauer_explicit(n, N)
    alpha = AlphaCoefficient(n, N)
    raw = rhp_explicit(n, M)
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n // 2 + 1):
        j = n - 2 * k
        coeffs[j] = alpha.pair(k) * raw.coeff(j)
    rhs = Poly(coeffs)
    return _poly_result("cnix", params, lhs, rhs, notes=f"M={rational_str(M)}")


# ---------------------------------------------------------------------------
# Subordination


def check_subordination_gegenbauer(n: int, N: RationalLike) -> CheckResult:
    """C_n^N = ((N)_{n/2}/n!) E_b H_n(X sqrt b) with b ~ Gamma(N + n/2).

    Per coefficient, the half-integer product (N)_{n/2} E b^((n-2k)/2)
    is reduced to the rational (N)_{n-k} by the Gamma normal form.
    """
    N = as_param(N)
    params = {"n": n, "N": N}
    lhs = gegenbauer_explicit(n, N)
    herm = hermite(n)
    half_n = Fraction(n, 2)
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n // 2 + 1):
        j = n - 2 * k
        ratio = GammaRatio.rising(0, half_n) * GammaRatio.rising(half_n, Fraction(j, 2))
        value = gamma_ratio_rational_value(ratio, N)
        coeffs[j] = herm.coeff(j) * value / factorial(n)
    rhs = Poly(coeffs)
    return _poly_result("subordination-gegenbauer", params, lhs, rhs)


def check_subordination_hermite(n: int, N: RationalLike) -> CheckResult:
    """H_n = (N^(n/2)/(N)_{n/2}) E_c H_n^N(X sqrt N / sqrt c) with
    c ~ Gamma(N + (n+1)/2).

    Each coefficient assembles (2N)_n / (N)_{n/2} * E c^(k-n/2)
    symbolically; the Legendre duplication of Gamma(2N+n)/Gamma(2N) is
    what makes the half-integer offsets cancel, leaving 2^n (N+1/2)_k.
    """
    N = as_param(N)
    params = {"n": n, "N": N}
    lhs = hermite(n)
    half_n = Fraction(n, 2)
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n // 2 + 1):
        j = n - 2 * k
        pk = pochhammer(N + HALF, k)
        if pk == 0:
            raise DomainError(f"(N+1/2)_{k} vanishes at N={N}")
        ratio = (
            GammaRatio.rising(0, n, slope=2)
            * GammaRatio.rising(0, half_n).reciprocal()
            * GammaRatio.rising(Fraction(n + 1, 2), k - half_n)
        )
        value = gamma_ratio_rational_value(ratio, N)
        coeffs[j] = (
            factorial(n)
            * Fraction((-1) ** k)
            / (Fraction(4) ** k * pk * factorial(j) * factorial(k))
            * value
        )
    rhs = Poly(coeffs)
    return _poly_result("subordination-hermite", params, lhs, rhs)


# ---------------------------------------------------------------------------
# Derivatives


def check_derivative(family: Family, n: int, N: Optional[RationalLike] = None) -> CheckResult:
    """d/dX of a family member against its stated lowering identity:
    H_n' = 2n H_{n-1};  (H_n^N)' = n(2N+n-1)/N H_{n-1}^N;
    (C_n^N)' = 2N C_{n-1}^{N+1}."""
    if n < 1:
        raise ValueError("derivative check needs n >= 1")
    if family is Family.HERMITE:
        params = {"family": family.value, "n": n}
        lhs = hermite(n).derivative()
        rhs = (2 * n) * hermite(n - 1)
    elif family is Family.RHP:
        N = as_param(N)
        params = {"family": family.value, "n": n, "N": N}
        lhs = rhp_explicit(n, N).derivative()
        rhs = (Fraction(n) * (2 * N + n - 1) / N) * rhp_explicit(n - 1, N)
    else:
        N = as_param(N)
        params = {"family": family.value, "n": n, "N": N}
        lhs = gegenbauer_explicit(n, N).derivative()
        rhs = (2 * N) * gegenbauer_explicit(n - 1, N + 1)
    return _poly_result("derivative", params, lhs, rhs)


# ---------------------------------------------------------------------------
# Addition theorems


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def check_hermite_addition(n: int, a: Sequence[RationalLike]) -> CheckResult:
    """(sum a_k^2)^(n/2)/n! H_n(sum a_k X_k / sqrt(sum a_k^2)) =
    sum over compositions m of n of prod a_k^{m_k} H_{m_k}(X_k)/m_k!.

    The half powers of S = sum a_k^2 pair with the parity of H_n, so the
    left side is a polynomial in (X_1..X_r); both sides are evaluated on
    the integer grid {0..n}^r, which exceeds every per-variable degree.
    """
    a = tuple(rational(v) for v in a)
    if not a or all(v == 0 for v in a):
        raise DomainError("the coefficient vector must be nonzero")
    r = len(a)
    params = {"n": n, "a": a}
    s = sum(v * v for v in a)
    members = [hermite(m) for m in range(n + 1)]
    degree_bound = max(members[n].degree, 0)
    grid = range(n + 1)
    if len(grid) <= degree_bound:
        raise ConsistencyError("grid too small for a polynomial identity proof")

    table = [[members[m].evaluate(Fraction(x)) for x in grid] for m in range(n + 1)]
    comps = list(_compositions(n, r))
    hn = members[n]

    first_bad = None
    for point in product(grid, repeat=r):
        y = sum(ak * xk for ak, xk in zip(a, point))
        lhs = Fraction(0)
        for j in range(n % 2, n + 1, 2):
            c = hn.coeff(j)
            if c != 0:
                lhs += c * y**j * s ** ((n - j) // 2)
        lhs /= factorial(n)
        rhs = Fraction(0)
        for comp in comps:
            term = Fraction(1)
            for k, mk in enumerate(comp):
                term *= a[k] ** mk * table[mk][point[k]] / factorial(mk)
            rhs += term
        if lhs != rhs:
            first_bad = (point, lhs - rhs)
            break

    notes = f"grid {n + 1}^{r} points, per-variable degree <= {degree_bound}"
    if first_bad is None:
        return CheckResult("hermite-addition", params, True, Poly.zero(), notes)
    point, diff = first_bad
    return CheckResult(
        "hermite-addition",
        params,
        False,
        Poly.constant(diff),
        notes + f"; first mismatch at X={point}",
    )


def _rotated_scaled_rhp(k: int, M: Fraction) -> Poly:
    """U_k(W): the rescaled member M^(k/2) H_k^M(W sqrt M) with its
    argument rotated by i and the unit (-i)^k stripped, i.e. coefficient
    j picks up (-1)^((k-j)/2).  Rational by parity."""
    scaled = rhp_scaled(k, M)
    coeffs = [Fraction(0)] * (k + 1)
    for j in range(k % 2, k + 1, 2):
        c = scaled.coeff(j)
        if c != 0:
            coeffs[j] = c * Fraction((-1) ** ((k - j) // 2))
    return Poly(coeffs)


def check_rhp_addition(n: int, N: RationalLike) -> CheckResult:
    """Bivariate addition law for the relativistic family in the fully
    rational form

        U_n(X+Y) = sum_k C(n,k) (-X)^(n-k) (2N+n)_{n-k} U_k(Y),

    with U_k the i-rotated rescaled member at parameter M = 1/2 - N - n
    (all half powers of M paired analytically).  Verified by exact
    evaluation on the (n+1) x (n+1) integer grid, which exceeds both
    per-variable degree bounds.
    """
    N = as_param(N)
    params = {"n": n, "N": N}
    M = HALF - N - n
    as_param(M)
    u = [_rotated_scaled_rhp(k, M) for k in range(n + 1)]
    poch = [pochhammer(2 * N + n, n - k) for k in range(n + 1)]

    x_degree = max((n - k) + 0 for k in range(n + 1))
    y_degree = max(max(p.degree, 0) for p in u)
    degree_bound = max(x_degree, y_degree, max(u[n].degree, 0))
    if n + 1 <= degree_bound:
        raise ConsistencyError("grid too small for a polynomial identity proof")

    first_bad = None
    for x in range(n + 1):
        for y in range(n + 1):
            lhs = u[n].evaluate(Fraction(x + y))
            rhs = Fraction(0)
            for k in range(n + 1):
                rhs += (
                    binomial(n, k)
                    * Fraction(-x) ** (n - k)
                    * poch[k]
                    * u[k].evaluate(Fraction(y))
                )
            if lhs != rhs:
                first_bad = ((x, y), lhs - rhs)
                break
        if first_bad:
            break

    notes = f"M={rational_str(M)}; grid {n + 1}x{n + 1}, per-variable degree <= {degree_bound}"
    if first_bad is None:
        return CheckResult("rhp-addition", params, True, Poly.zero(), notes)
    point, diff = first_bad
    return CheckResult(
        "rhp-addition", params, False, Poly.constant(diff), notes + f"; first mismatch at {point}"
    )


# ---------------------------------------------------------------------------
# Scaling identities


def check_scaling(
    family: Family, n: int, N: Optional[RationalLike], c: RationalLike
) -> CheckResult:
    """Scale-change expansions:
    H_n(cX) = sum_l (-1)^l n!/((n-2l)! l!) (1-c^2)^l c^(n-2l) H_{n-2l}(X);
    C_n^N(cX) = sum_l (-1)^l (N)_l / l! (1-c^2)^l c^(n-2l) C_{n-2l}^{N+l}(X);
    and for the relativistic family the rescaled form
    N^(n/2) H_n^N(cX sqrt N) =
      sum_l (-1)^l n!/((n-2l)! l!) (N)_l (1-c^2)^l c^(n-2l)
            (N+l)^((n-2l)/2) H_{n-2l}^{N+l}(X sqrt(N+l))."""
    c = rational(c)
    one_minus_c2 = 1 - c * c
    if family is Family.HERMITE:
        params = {"family": family.value, "n": n, "c": c}
        lhs = hermite(n).compose_linear(c, 0)
        rhs = Poly.zero()
        for l in range(n // 2 + 1):
            weight = (
                Fraction((-1) ** l)
                * factorial(n)
                / (factorial(n - 2 * l) * factorial(l))
                * one_minus_c2**l
                * c ** (n - 2 * l)
            )
            rhs = rhs + weight * hermite(n - 2 * l)
    elif family is Family.GEGENBAUER:
        N = as_param(N)
        params = {"family": family.value, "n": n, "N": N, "c": c}
        lhs = gegenbauer_explicit(n, N).compose_linear(c, 0)
        rhs = Poly.zero()
        for l in range(n // 2 + 1):
            weight = (
                Fraction((-1) ** l)
                * pochhammer(N, l)
                / factorial(l)
                * one_minus_c2**l
                * c ** (n - 2 * l)
            )
            rhs = rhs + weight * gegenbauer_explicit(n - 2 * l, N + l)
    else:
        N = as_param(N)
        params = {"family": family.value, "n": n, "N": N, "c": c}
        lhs = rhp_scaled(n, N).compose_linear(c, 0)
        rhs = Poly.zero()
        for l in range(n // 2 + 1):
            as_param(N + l)
            weight = (
                Fraction((-1) ** l)
                * factorial(n)
                / (factorial(n - 2 * l) * factorial(l))
                * pochhammer(N, l)
                * one_minus_c2**l
                * c ** (n - 2 * l)
            )
            rhs = rhs + weight * rhp_scaled(n - 2 * l, N + l)
    return _poly_result("scaling", params, lhs, rhs)


# ---------------------------------------------------------------------------
# Generating functions


def _rhp_genfunc_base(N: Fraction, x: Fraction, order: int) -> TruncSeries:
    """(1 - tX/N)^2 + t^2/N as a series in t at concrete X."""
    return TruncSeries.from_poly(
        Poly((Fraction(1), -2 * x / N, x * x / (N * N) + 1 / N)), order
    )


def genfunc_rhp_sides(
    N: RationalLike, x: RationalLike, order: int
) -> Tuple[TruncSeries, TruncSeries]:
    """Family side sum_n H_n^N(X) t^n/n! and closed side
    ((1 - tX/N)^2 + t^2/N)^(-N), both truncated at the given order."""
    N = as_param(N)
    x = rational(x)
    closed = _rhp_genfunc_base(N, x, order).pow_fraction(-N)
    family = TruncSeries(
        [rhp_explicit(m, N).evaluate(x) / factorial(m) for m in range(order + 1)], order
    )
    return family, closed


def check_genfunc_rhp(N: RationalLike, x: RationalLike, order: int) -> CheckResult:
    """sum_n H_n^N(X) t^n / n! = ((1 - tX/N)^2 + t^2/N)^(-N) as truncated
    series at a rational point X."""
    params = {"N": as_param(N), "x": rational(x), "order": order}
    lhs, rhs = genfunc_rhp_sides(N, x, order)
    return _series_result("genfunc-rhp", params, lhs, rhs)


def check_moment_3665(N: RationalLike, a: RationalLike, order: int) -> CheckResult:
    """E (a - ibZ)^(-2N) = (a^2 + b^2)^(-N) over the Student-r law, as a
    series identity in b with the common a^(-2N) factor cancelled:
    sum_m (2N)_m/m! (i/a)^m E Z^m b^m = (1 + b^2/a^2)^(-N)."""
    N = as_param(N)
    a = rational(a)
    if a == 0:
        raise DomainError("a must be nonzero")
    params = {"N": N, "a": a, "order": order}
    mom = MomentSequence.student_r(N)
    i = GaussianRational.i()
    lhs_coeffs = []
    for m in range(order + 1):
        value = pochhammer(2 * N, m) / factorial(m) * (i / a) ** m * mom(m)
        lhs_coeffs.append(value)
    lhs = TruncSeries(lhs_coeffs, order)
    rhs = TruncSeries.from_poly(Poly((1, 0, 1 / (a * a))), order).pow_fraction(-N)
    return _series_result("moment-3665", params, lhs, rhs)


def _bessel_series(nu: Fraction, scale: Fraction, order: int) -> TruncSeries:
    """Normalized Bessel series of order nu evaluated at scale*t:
    even coefficients (-1)^k scale^(2k) / (k! (nu+1)_k 4^k)."""
    coeffs = [Fraction(0)] * (order + 1)
    for k in range(order // 2 + 1):
        denom = pochhammer(nu + 1, k)
        if denom == 0:
            raise DomainError(f"(nu+1)_{k} vanishes at nu={nu}")
        coeffs[2 * k] = Fraction((-1) ** k) * scale ** (2 * k) / (
            factorial(k) * denom * Fraction(4) ** k
        )
    return TruncSeries(coeffs, order)


def feldheim_sides(
    N: RationalLike, cos_t: RationalLike, sin_t: RationalLike, order: int
) -> Tuple[TruncSeries, TruncSeries]:
    """Family side sum_n [C_n^N(cos)/C_n^N(1)] r^n/n! and closed side
    exp(r cos) j_{N-1/2}(r sin) at a rational point on the unit circle."""
    N = as_param(N)
    cos_t, sin_t = rational(cos_t), rational(sin_t)
    if cos_t * cos_t + sin_t * sin_t != 1:
        raise DomainError("(cos, sin) must satisfy cos^2 + sin^2 = 1")
    family_coeffs = []
    for m in range(order + 1):
        geg = gegenbauer_explicit(m, N)
        at_one = geg.evaluate(Fraction(1))
        if at_one == 0:
            raise DomainError(f"C_{m}^N(1) vanishes at N={N}")
        family_coeffs.append(geg.evaluate(cos_t) / at_one / factorial(m))
    family = TruncSeries(family_coeffs, order)
    exp_part = TruncSeries.from_poly(Poly((0, cos_t)), order).exp()
    closed = exp_part * _bessel_series(N - HALF, sin_t, order)
    return family, closed


def check_feldheim(
    N: RationalLike, cos_t: RationalLike, sin_t: RationalLike, order: int
) -> CheckResult:
    """sum_n [C_n^N(cos)/C_n^N(1)] r^n/n! = exp(r cos) j_{N-1/2}(r sin)
    at a rational point on the unit circle."""
    params = {
        "N": as_param(N),
        "cos": rational(cos_t),
        "sin": rational(sin_t),
        "order": order,
    }
    lhs, rhs = feldheim_sides(N, cos_t, sin_t, order)
    return _series_result("feldheim", params, lhs, rhs)


def feldheim_rhp_sides(
    N: RationalLike, x: RationalLike, order: int
) -> Tuple[TruncSeries, TruncSeries]:
    """Family side over the monic relativistic members and closed side
    exp(rX) j_{N-1/2}(r)."""
    N = as_param(N)
    x = rational(x)
    family = TruncSeries(
        [rhp_normalized(m, N).evaluate(x) / factorial(m) for m in range(order + 1)],
        order,
    )
    exp_part = TruncSeries.from_poly(Poly((0, x)), order).exp()
    closed = exp_part * _bessel_series(N - HALF, Fraction(1), order)
    return family, closed


def check_feldheim_rhp(N: RationalLike, x: RationalLike, order: int) -> CheckResult:
    """sum_n curlyH_n^N(X) r^n/n! = exp(rX) j_{N-1/2}(r), with curlyH the
    monic rescaled relativistic member."""
    params = {"N": as_param(N), "x": rational(x), "order": order}
    lhs, rhs = feldheim_rhp_sides(N, x, order)
    return _series_result("feldheim-rhp", params, lhs, rhs)


def shifted_genfunc_sides(
    N: RationalLike, k: int, x: RationalLike, order: int
) -> Tuple[TruncSeries, TruncSeries]:
    """Family side sum_n H_{n+k}^N(X) t^n/n! and closed side
    phi^(1+k/N) H_k^N(X - (1+X^2/N) t); the composed member is a
    polynomial in t."""
    N = as_param(N)
    x = rational(x)
    if k < 0:
        raise ValueError("shift must be nonnegative")
    phi = _rhp_genfunc_base(N, x, order).pow_fraction(-N)
    power = phi.pow_fraction(1 + Fraction(k) / N)
    shifted_member = rhp_explicit(k, N).compose_linear(-(1 + x * x / N), x)
    closed = power * TruncSeries.from_poly(shifted_member, order)
    family = TruncSeries(
        [rhp_explicit(m + k, N).evaluate(x) / factorial(m) for m in range(order + 1)],
        order,
    )
    return family, closed


def check_shifted_genfunc(
    N: RationalLike, k: int, x: RationalLike, order: int
) -> CheckResult:
    """sum_n H_{n+k}^N(X) t^n/n! = phi^(1+k/N) H_k^N(X - (1+X^2/N) t),
    with phi the relativistic generating function at X."""
    params = {"N": as_param(N), "k": k, "x": rational(x), "order": order}
    lhs, rhs = shifted_genfunc_sides(N, k, x, order)
    return _series_result("shifted-genfunc", params, lhs, rhs)
