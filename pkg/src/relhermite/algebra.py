"""Exact polynomial and series algebra.

Dense univariate polynomials (Poly) and truncated power series
(TruncSeries) over the rationals carry every construction in the
library; QuadExtPoly mechanizes a single radical s with s^2 equal to a
fixed polynomial (sqrt(1+X^2), sqrt(X^2-1), ...); MultiPoly is a small
sparse multivariate ring whose only job is taking expectations of
expanded products against a moment sequence.

Poly arithmetic is written against a generic exact field: coefficients
are Fractions in the public contract, but the same code runs verbatim
with GaussianRational coefficients, which the moment expansions use
internally before their imaginary parts are checked and dropped.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence, Tuple, Union

from .numeric import (
    ConsistencyError,
    DomainError,
    GaussianRational,
    RationalLike,
    rational,
    require_real,
)

Coefficient = Union[Fraction, GaussianRational]


def _coerce_coeff(c) -> Coefficient:
    if isinstance(c, GaussianRational):
        return c
    return rational(c)


class Poly:
    """Dense univariate polynomial; index j holds the coefficient of X^j.

    Immutable; trailing zeros are trimmed, the zero polynomial has an
    empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_coerce_coeff(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: Tuple[Coefficient, ...] = tuple(cs)

    # -- constructors

    @classmethod
    def zero(cls) -> "Poly":
        return cls(())

    @classmethod
    def one(cls) -> "Poly":
        return cls((1,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c=1) -> "Poly":
        return cls((0,) * degree + (c,))

    # -- structure

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, j: int) -> Coefficient:
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return Fraction(0)

    @property
    def leading(self) -> Coefficient:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero

    # -- ring operations

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for j, c in enumerate(b):
            out[j] = out[j] + c
        return Poly(out)

    def __sub__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Poly):
            if self.is_zero or other.is_zero:
                return Poly.zero()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return Poly(out)
        scalar = _coerce_coeff(other)
        return Poly(tuple(scalar * c for c in self.coeffs))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = Poly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- calculus and evaluation

    def evaluate(self, x):
        """Horner evaluation; x may be a Fraction or GaussianRational."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly(tuple(j * c for j, c in enumerate(self.coeffs) if j))

    def compose_linear(self, alpha: RationalLike, beta: RationalLike) -> "Poly":
        """Return p(alpha*X + beta), expanded."""
        arg = Poly((rational(beta), rational(alpha)))
        acc = Poly.zero()
        for c in reversed(self.coeffs):
            acc = acc * arg + Poly.constant(c)
        return acc

    # -- serialization

    def to_strings(self) -> list[str]:
        """Coefficients as rational strings, ascending degree."""
        return [str(require_real(c)) for c in self.coeffs]

    @classmethod
    def from_strings(cls, items: Sequence[str]) -> "Poly":
        return cls(tuple(rational(s) for s in items))

    def __repr__(self) -> str:
        if self.is_zero:
            return "Poly(0)"
        terms = [f"{c}*X^{j}" for j, c in enumerate(self.coeffs) if c != 0]
        return "Poly(" + " + ".join(terms) + ")"


def real_poly(p: Poly) -> Poly:
    """Project a polynomial with Gaussian coefficients to a rational one,
    insisting every imaginary part is exactly zero."""
    return Poly(tuple(require_real(c) for c in p.coeffs))


def poly_divmod(p: Poly, q: Poly) -> Tuple[Poly, Poly]:
    """Long division over the rational coefficient field."""
    if q.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p.coeffs)
    if len(rem) < len(q.coeffs):
        return Poly.zero(), p
    quot = [Fraction(0)] * (len(rem) - len(q.coeffs) + 1)
    qlead = q.leading
    while len(rem) >= len(q.coeffs):
        c = rem[-1] / qlead
        k = len(rem) - len(q.coeffs)
        quot[k] = c
        for j, qc in enumerate(q.coeffs):
            rem[k + j] = rem[k + j] - c * qc
        rem.pop()  # the leading term cancels exactly
        while rem and rem[-1] == 0:
            rem.pop()
    return Poly(quot), Poly(rem)


def poly_exact_div(p: Poly, q: Poly) -> Poly:
    quot, rem = poly_divmod(p, q)
    if not rem.is_zero:
        raise ConsistencyError("expected exact polynomial division")
    return quot


# ---------------------------------------------------------------------------
# Quadratic extension a(X) + b(X) * s with s^2 = modulus(X)


@dataclass(frozen=True)
class QuadExtPoly:
    a: Poly
    b: Poly
    modulus: Poly

    @classmethod
    def of(cls, a: Poly, b: Poly, modulus: Poly) -> "QuadExtPoly":
        return cls(a, b, modulus)

    @classmethod
    def zero(cls, modulus: Poly) -> "QuadExtPoly":
        return cls(Poly.zero(), Poly.zero(), modulus)

    def _check(self, other: "QuadExtPoly"):
        if self.modulus != other.modulus:
            raise ValueError("cannot combine quadratic extensions over different moduli")

    def __add__(self, other: "QuadExtPoly") -> "QuadExtPoly":
        self._check(other)
        return QuadExtPoly(self.a + other.a, self.b + other.b, self.modulus)

    def __sub__(self, other: "QuadExtPoly") -> "QuadExtPoly":
        self._check(other)
        return QuadExtPoly(self.a - other.a, self.b - other.b, self.modulus)

    def __neg__(self) -> "QuadExtPoly":
        return QuadExtPoly(-self.a, -self.b, self.modulus)

    def __mul__(self, other):
        if isinstance(other, QuadExtPoly):
            self._check(other)
            return QuadExtPoly(
                self.a * other.a + self.b * other.b * self.modulus,
                self.a * other.b + self.b * other.a,
                self.modulus,
            )
        return QuadExtPoly(self.a * other, self.b * other, self.modulus)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QuadExtPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = QuadExtPoly(Poly.one(), Poly.zero(), self.modulus)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "QuadExtPoly":
        return QuadExtPoly(self.a, -self.b, self.modulus)

    @property
    def is_radical_free(self) -> bool:
        return self.b.is_zero


# ---------------------------------------------------------------------------
# Truncated power series in t


class TruncSeries:
    """Power series truncated at a fixed order (inclusive).

    Arithmetic between series of orders p and q yields order min(p, q);
    operations never extend the order on their own.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable, order: Optional[int] = None):
        cs = [_coerce_coeff(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("series order must be nonnegative")
        cs = cs[: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        self.coeffs: Tuple[Coefficient, ...] = tuple(cs)
        self.order = order

    @classmethod
    def zero(cls, order: int) -> "TruncSeries":
        return cls((), order)

    @classmethod
    def constant(cls, c, order: int) -> "TruncSeries":
        return cls((c,), order)

    @classmethod
    def from_poly(cls, p: Poly, order: int) -> "TruncSeries":
        return cls(p.coeffs, order)

    def coeff(self, j: int) -> Coefficient:
        return self.coeffs[j]

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def _common(self, other: "TruncSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other):
        if isinstance(other, TruncSeries):
            m = self._common(other)
            return TruncSeries(
                tuple(self.coeffs[j] + other.coeffs[j] for j in range(m + 1)), m
            )
        scalar = _coerce_coeff(other)
        out = list(self.coeffs)
        out[0] = out[0] + scalar
        return TruncSeries(out, self.order)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self) -> "TruncSeries":
        return TruncSeries(tuple(-c for c in self.coeffs), self.order)

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            m = self._common(other)
            out = [Fraction(0)] * (m + 1)
            for i in range(m + 1):
                a = self.coeffs[i]
                if a == 0:
                    continue
                for j in range(m + 1 - i):
                    b = other.coeffs[j]
                    if b != 0:
                        out[i + j] = out[i + j] + a * b
            return TruncSeries(out, m)
        scalar = _coerce_coeff(other)
        return TruncSeries(tuple(scalar * c for c in self.coeffs), self.order)

    __rmul__ = __mul__

    def pow_fraction(self, e: RationalLike) -> "TruncSeries":
        """Raise to a rational power via the first-order recurrence
        g' f = e g f' term by term; requires a nonzero constant term whose
        e-th power is rational (1 in every use here)."""
        e = rational(e)
        c0 = self.coeffs[0]
        if c0 == 0:
            raise DomainError("series power needs a nonzero constant term")
        g = [Fraction(0)] * (self.order + 1)
        g[0] = _exact_fraction_pow(require_real(c0), e)
        for m in range(1, self.order + 1):
            acc = Fraction(0)
            for j in range(1, m + 1):
                cj = self.coeffs[j]
                if cj != 0:
                    acc += ((e + 1) * j - m) * cj * g[m - j]
            g[m] = acc / (m * c0)
        return TruncSeries(g, self.order)

    def exp(self) -> "TruncSeries":
        """Exponential of a series with zero constant term."""
        if self.coeffs[0] != 0:
            raise DomainError("series exponential needs a zero constant term")
        g = [Fraction(0)] * (self.order + 1)
        g[0] = Fraction(1)
        for m in range(1, self.order + 1):
            acc = Fraction(0)
            for j in range(1, m + 1):
                fj = self.coeffs[j]
                if fj != 0:
                    acc += j * fj * g[m - j]
            g[m] = acc / m
        return TruncSeries(g, self.order)

    def to_strings(self) -> list[str]:
        return [str(require_real(c)) for c in self.coeffs]

    def __repr__(self) -> str:
        return f"TruncSeries({list(self.coeffs)!r}, order={self.order})"


def series_add(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    return f + g


def series_mul(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    return f * g


def series_pow(f: TruncSeries, e: RationalLike) -> TruncSeries:
    return f.pow_fraction(e)


def series_exp(f: TruncSeries) -> TruncSeries:
    return f.exp()


def _int_nth_root(x: int, n: int) -> Optional[int]:
    """Exact integer n-th root, or None when x is not a perfect power."""
    if x < 0:
        if n % 2 == 0:
            return None
        r = _int_nth_root(-x, n)
        return None if r is None else -r
    if x in (0, 1) or n == 1:
        return x
    # integer Newton iteration from a bit-length upper bound
    r = 1 << (x.bit_length() + n - 1) // n
    while True:
        nxt = ((n - 1) * r + x // r ** (n - 1)) // n
        if nxt >= r:
            break
        r = nxt
    return r if r**n == x else None


def _exact_fraction_pow(c: Fraction, e: Fraction) -> Fraction:
    if e.denominator == 1:
        if c == 0 and e < 0:
            raise ZeroDivisionError("zero cannot be raised to a negative power")
        return c ** int(e)
    num_root = _int_nth_root(c.numerator, e.denominator)
    den_root = _int_nth_root(c.denominator, e.denominator)
    if num_root is None or den_root is None:
        raise DomainError(f"{c}^{e} is not rational")
    return Fraction(num_root, den_root) ** e.numerator


# ---------------------------------------------------------------------------
# Sparse multivariate polynomials over Z_0..Z_{nvars-1}


class MultiPoly:
    """Sparse multivariate polynomial: exponent tuple -> coefficient."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Optional[dict] = None):
        self.nvars = nvars
        clean = {}
        for expo, c in (terms or {}).items():
            c = rational(c)
            if c != 0:
                clean[tuple(expo)] = c
        self.terms = clean

    @classmethod
    def constant(cls, c: RationalLike, nvars: int) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: rational(c)})

    @classmethod
    def variable(cls, i: int, nvars: int) -> "MultiPoly":
        expo = [0] * nvars
        expo[i] = 1
        return cls(nvars, {tuple(expo): Fraction(1)})

    def _check(self, other: "MultiPoly"):
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        out = dict(self.terms)
        for expo, c in other.terms.items():
            out[expo] = out.get(expo, Fraction(0)) + c
        return MultiPoly(self.nvars, out)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        out = dict(self.terms)
        for expo, c in other.terms.items():
            out[expo] = out.get(expo, Fraction(0)) - c
        return MultiPoly(self.nvars, out)

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                expo = tuple(a + b for a, b in zip(e1, e2))
                out[expo] = out.get(expo, Fraction(0)) + c1 * c2
        return MultiPoly(self.nvars, out)

    def __pow__(self, k: int) -> "MultiPoly":
        result = MultiPoly.constant(1, self.nvars)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, tuple(sorted(self.terms.items()))))


def multipoly_expectation(m: MultiPoly, mom: Callable[[int], Fraction]) -> Fraction:
    """Replace each monomial prod Z_j^{e_j} by prod mom(e_j) and sum;
    all variables are treated as i.i.d. with the given moments."""
    total = Fraction(0)
    for expo, c in m.terms.items():
        value = c
        for e in expo:
            if e:
                value *= mom(e)
        total += value
    return total
