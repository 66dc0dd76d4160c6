"""Hankel matrices of family members, exact determinants, closed-form
Turan constants, and the Wilks moment-determinant cross-check.

Determinants are computed by Bareiss fraction-free elimination over the
polynomial ring (every division performed is exact by the Sylvester
identity); cofactor expansion is kept as an independent cross-check for
small sizes.  The Wilks route expands the squared Vandermonde
prod_{j<k}(Z_j - Z_k)^2 and takes its expectation against a moment
sequence, reproducing Hankel determinants of moments without any
determinant computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .algebra import MultiPoly, Poly, multipoly_expectation, poly_divmod
from .families import (
    Family,
    FamilyId,
    MomentSequence,
    Normalization,
    gegenbauer_moment_normalized,
    hermite_moment_normalized,
    rhp_normalized,
)
from .identities import CheckResult
from .numeric import (
    ConsistencyError,
    DomainError,
    RationalLike,
    as_param,
    factorial,
    pochhammer,
    rational,
    rational_str,
)


@dataclass(frozen=True)
class HankelPolyMatrix:
    """(n+1) x (n+1) matrix with entry (i, j) = P_{i+j} for one
    moment-normalized family sequence."""

    family: FamilyId
    sequence: Tuple[Poly, ...]  # P_0 .. P_{2n}

    @property
    def size(self) -> int:
        return (len(self.sequence) + 1) // 2

    def entry(self, i: int, j: int) -> Poly:
        return self.sequence[i + j]

    def rows(self) -> list[list[Poly]]:
        s = self.size
        return [[self.sequence[i + j] for j in range(s)] for i in range(s)]


def _moment_normalized_member(family: Family, m: int, N: Optional[Fraction]) -> Poly:
    if family is Family.HERMITE:
        return hermite_moment_normalized(m)
    if family is Family.GEGENBAUER:
        return gegenbauer_moment_normalized(m, N)
    return rhp_normalized(m, N)


def hankel(family: Family, n: int, N: Optional[RationalLike] = None) -> HankelPolyMatrix:
    """Hankel matrix of the moment-normalized members P_0..P_{2n}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if family is not Family.HERMITE:
        N = as_param(N)
    fid = FamilyId(family, n, None if family is Family.HERMITE else N, Normalization.MOMENT)
    seq = tuple(_moment_normalized_member(family, m, fid.N) for m in range(2 * n + 1))
    return HankelPolyMatrix(fid, seq)


def poly_determinant(matrix) -> Poly:
    """Exact determinant by Bareiss elimination over the polynomial ring.

    Accepts a HankelPolyMatrix or a square list of Poly rows.  Each
    division by the previous pivot is exact; an inexact division would
    signal a bug and raises ConsistencyError.
    """
    rows = matrix.rows() if isinstance(matrix, HankelPolyMatrix) else [list(r) for r in matrix]
    size = len(rows)
    for row in rows:
        if len(row) != size:
            raise ValueError("determinant needs a square matrix")
    if size == 0:
        return Poly.one()
    m = [list(row) for row in rows]
    sign = 1
    previous = Poly.one()
    for k in range(size - 1):
        if m[k][k].is_zero:
            for i in range(k + 1, size):
                if not m[i][k].is_zero:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Poly.zero()
        pivot = m[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                numerator = pivot * m[i][j] - m[i][k] * m[k][j]
                quotient, remainder = poly_divmod(numerator, previous)
                if not remainder.is_zero:
                    raise ConsistencyError("fraction-free elimination division was inexact")
                m[i][j] = quotient
        previous = pivot
    return sign * m[size - 1][size - 1]


def determinant_cofactor(rows: list[list[Poly]]) -> Poly:
    """Cofactor expansion along the first row; cross-check for sizes <= 3."""
    size = len(rows)
    if size == 0:
        return Poly.one()
    if size == 1:
        return rows[0][0]
    total = Poly.zero()
    for j in range(size):
        minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
        term = rows[0][j] * determinant_cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


# ---------------------------------------------------------------------------
# Closed forms


def _turan_product(n: int, N: Fraction) -> Fraction:
    value = Fraction(1)
    for j in range(1, n + 1):
        lower = pochhammer(N - Fraction(1, 2), j) * pochhammer(N + Fraction(1, 2), j)
        if lower == 0:
            raise DomainError(f"(N-1/2)_{j} (N+1/2)_{j} vanishes at N={N}")
        value *= Fraction(factorial(j)) * pochhammer(2 * N - 1, j) / lower
    return value


def turan_closed_rhp(n: int, N: RationalLike) -> Fraction:
    """Closed-form constant of the monic relativistic Hankel determinant:
    (-1)^(n(n+1)/2) / 2^(n(n+1)) * prod_j j! (2N-1)_j / ((N-1/2)_j (N+1/2)_j)."""
    N = as_param(N)
    sign = Fraction((-1) ** ((n * (n + 1) // 2) % 2))
    return sign * _turan_product(n, N) / Fraction(2) ** (n * (n + 1))


def turan_closed_gegenbauer(n: int, N: RationalLike) -> Poly:
    """Closed form of the normalized Gegenbauer Hankel determinant:
    ((X^2-1)/4)^(n(n+1)/2) times the same product constant."""
    N = as_param(N)
    base = Poly((Fraction(-1, 4), Fraction(0), Fraction(1, 4)))
    return base ** (n * (n + 1) // 2) * _turan_product(n, N)


# ---------------------------------------------------------------------------
# Wilks expansion


def vandermonde_squared(nvars: int) -> MultiPoly:
    """prod_{0 <= j < k < nvars} (Z_j - Z_k)^2, expanded."""
    result = MultiPoly.constant(1, nvars)
    for j in range(nvars):
        for k in range(j + 1, nvars):
            diff = MultiPoly.variable(j, nvars) - MultiPoly.variable(k, nvars)
            result = result * diff * diff
    return result


WILKS_MAX_N = 3  # squared-Vandermonde expansion size grows super-exponentially


def wilks_expectation(n: int, mom: MomentSequence) -> Tuple[Fraction, Fraction]:
    """E prod_{j<k} (Z_j - Z_k)^2 over n+1 i.i.d. variables, divided by
    (n+1)!, returned both unsigned (the Hankel determinant of the raw
    moments) and with the sign (-1)^(n(n+1)/2) (the Hankel determinant
    of the moment-normalized polynomial family E(X+iZ)^m)."""
    if n > WILKS_MAX_N:
        raise DomainError(f"Wilks expansion capped at n={WILKS_MAX_N}")
    expanded = vandermonde_squared(n + 1)
    unsigned = multipoly_expectation(expanded, mom) / factorial(n + 1)
    signed = unsigned * Fraction((-1) ** ((n * (n + 1) // 2) % 2))
    return unsigned, signed


def moment_hankel_det(mom: MomentSequence, n: int) -> Fraction:
    """det[m_{i+j}] for i, j = 0..n, through the same fraction-free
    elimination specialized to constant polynomials."""
    rows = [[Poly.constant(mom(i + j)) for j in range(n + 1)] for i in range(n + 1)]
    det = poly_determinant(rows)
    return det.coeff(0)


# ---------------------------------------------------------------------------
# CheckResult builders


def check_turan_rhp(n: int, N: RationalLike) -> CheckResult:
    """Determinant of the monic relativistic Hankel matrix: asserted
    constant by degree (not spot evaluation) and equal to the closed form."""
    N = as_param(N)
    params = {"n": n, "N": N}
    det = poly_determinant(hankel(Family.RHP, n, N))
    closed = turan_closed_rhp(n, N)
    witness = det - Poly.constant(closed)
    constant = det.degree <= 0
    notes = f"determinant degree {det.degree}"
    return CheckResult(
        "turan-rhp", params, passed=constant and witness.is_zero, witness=witness, notes=notes
    )


def check_turan_gegenbauer(n: int, N: RationalLike) -> CheckResult:
    N = as_param(N)
    params = {"n": n, "N": N}
    det = poly_determinant(hankel(Family.GEGENBAUER, n, N))
    closed = turan_closed_gegenbauer(n, N)
    witness = det - closed
    return CheckResult("turan-gegenbauer", params, passed=witness.is_zero, witness=witness)


def check_wilks_studentr(n: int, N: RationalLike) -> CheckResult:
    """Signed Wilks expectation over Student-r variables against the
    closed-form relativistic Turan constant: the finite-moment face of
    the Selberg-integral evaluation, without the Selberg integral."""
    N = as_param(N)
    params = {"n": n, "N": N}
    _, signed = wilks_expectation(n, MomentSequence.student_r(N))
    closed = turan_closed_rhp(n, N)
    witness = Poly.constant(signed - closed)
    return CheckResult("wilks-studentr", params, passed=witness.is_zero, witness=witness)


def check_wilks_hankel(n: int, mom: MomentSequence, label: str) -> CheckResult:
    """Wilks' formula itself: det[m_{i+j}] equals the unsigned expansion."""
    params = {"n": n, "moments": label}
    unsigned, _ = wilks_expectation(n, mom)
    det = moment_hankel_det(mom, n)
    witness = Poly.constant(det - unsigned)
    return CheckResult("wilks-hankel", params, passed=witness.is_zero, witness=witness)
