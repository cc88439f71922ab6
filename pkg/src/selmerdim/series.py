"""Exact truncated power series and two-pole partial fractions.

Only products of the form ``(1 - t)^-p * (1 + t)^-q`` ever need to be
decomposed here, so the decomposition is computed by shifting one pole to
the origin and Taylor-expanding the remaining regular factor
(differentiate-and-evaluate), never by a linear solve.

All coefficients are ``fractions.Fraction`` values; nothing rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, zero whenever k falls outside [0, n]."""
    if n < 0:
        raise ValueError("binomial requires n >= 0")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def moebius(n: int) -> int:
    """Moebius function via trial factorization."""
    if n < 1:
        raise ValueError("moebius requires n >= 1")
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


@dataclass(frozen=True)
class FormalSeries:
    """Coefficients c_0 .. c_N of a power series truncated at order N."""

    truncation_order: int
    coefficients: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.truncation_order < 0:
            raise ValueError("truncation order must be nonnegative")
        coeffs = tuple(Fraction(c) for c in self.coefficients)
        if len(coeffs) != self.truncation_order + 1:
            raise ValueError(
                "a series truncated at order N carries exactly N + 1 coefficients"
            )
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def from_coefficients(cls, coefficients) -> "FormalSeries":
        coeffs = tuple(Fraction(c) for c in coefficients)
        if not coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        return cls(len(coeffs) - 1, coeffs)

    @classmethod
    def one(cls, truncation_order: int) -> "FormalSeries":
        """The constant series 1, truncated at the given order."""
        return cls(truncation_order, (Fraction(1),) + (Fraction(0),) * truncation_order)

    def coefficient(self, n: int) -> Fraction:
        if not 0 <= n <= self.truncation_order:
            raise ValueError(f"coefficient index {n} beyond truncation order")
        return self.coefficients[n]


def geometric_inverse_power(sign: int, exponent: int, truncation: int) -> FormalSeries:
    """Series of (1 - sign*t)^-exponent.

    The n-th coefficient is sign^n * binomial(n + exponent - 1, exponent - 1).
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if exponent < 1:
        raise ValueError("exponent must be >= 1")
    coeffs = tuple(
        Fraction(sign**n * binomial(n + exponent - 1, exponent - 1))
        for n in range(truncation + 1)
    )
    return FormalSeries(truncation, coeffs)


def series_multiply(lhs: FormalSeries, rhs: FormalSeries) -> FormalSeries:
    """Cauchy product truncated to the shorter operand's order."""
    order = min(lhs.truncation_order, rhs.truncation_order)
    coeffs = tuple(
        sum(
            (lhs.coefficients[i] * rhs.coefficients[n - i] for i in range(n + 1)),
            Fraction(0),
        )
        for n in range(order + 1)
    )
    return FormalSeries(order, coeffs)


@dataclass(frozen=True)
class PartialFractionDecomp:
    """Block coefficients A_1..A_p of (1-t)^-i and B_1..B_q of (1+t)^-i."""

    a_plus: tuple[Fraction, ...]
    b_minus: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "a_plus", tuple(Fraction(c) for c in self.a_plus))
        object.__setattr__(self, "b_minus", tuple(Fraction(c) for c in self.b_minus))


def _pole_taylor(c: int, order: int) -> list[Fraction]:
    """Taylor coefficients at u = 0 of (2 - u)^-c.

    These are the successive derivatives at the shifted pole divided by
    factorials; coefficient j equals binomial(j + c - 1, c - 1) / 2^(c + j).
    """
    if order < 0:
        return []
    if c == 0:
        return [Fraction(1)] + [Fraction(0)] * order
    return [Fraction(binomial(j + c - 1, c - 1), 2 ** (c + j)) for j in range(order + 1)]


def partial_fractions(m_plus: int, m_minus: int) -> PartialFractionDecomp:
    """Decompose (1-t)^-m_plus * (1+t)^-m_minus into pole blocks.

    Substituting u = 1 - t moves the first pole to the origin; the block
    coefficient A_i is then the Taylor coefficient of order m_plus - i of
    the regular factor (2 - u)^-m_minus, and symmetrically for B_i.  When
    one exponent is zero the function is already a single block.
    """
    if m_plus < 0 or m_minus < 0:
        raise ValueError("pole multiplicities must be nonnegative")
    if m_plus + m_minus == 0:
        raise ValueError("at least one pole multiplicity must be positive")
    taylor_minus = _pole_taylor(m_minus, m_plus - 1)
    taylor_plus = _pole_taylor(m_plus, m_minus - 1)
    a_plus = tuple(taylor_minus[m_plus - i] for i in range(1, m_plus + 1))
    b_minus = tuple(taylor_plus[m_minus - i] for i in range(1, m_minus + 1))
    return PartialFractionDecomp(a_plus, b_minus)


def coefficient_via_pfd(pfd: PartialFractionDecomp, n: int) -> Fraction:
    """n-th series coefficient read off the decomposition.

    Each block (1 -/+ t)^-i contributes binomial(n + i - 1, i - 1) times its
    block coefficient, with alternating sign on the (1 + t) side.
    """
    if n < 0:
        raise ValueError("coefficient index must be nonnegative")
    total = Fraction(0)
    for i, a in enumerate(pfd.a_plus, start=1):
        total += a * binomial(n + i - 1, i - 1)
    sign = -1 if n % 2 else 1
    for i, b in enumerate(pfd.b_minus, start=1):
        total += sign * b * binomial(n + i - 1, i - 1)
    return total
