"""Eigenspace dimensions for a diagonal involution on m generators.

Throughout, the involution fixes the first s generators (+1) and negates the
remaining m - s, and a basis monomial or bracket word is an eigenvector with
sign (-1)^k, k the number of entries greater than s.  Every count here ships
with two independent routes: a streaming enumeration, which the test suite
treats as authoritative, and a closed form driven by the two-pole
partial-fraction coefficients, which is polynomial in the level and is what
production callers use.

Convention for the leading-generator bracket space (``v1_plus_dimension``):
the space is spanned by left-normed brackets headed by the first generator.
In the faithful tensor model of the metabelian algebra its basis is indexed
by pairs (a, mu) with a in {2, ..., m} and mu a monomial of degree n - 2,
each pair an eigenvector with sign determined by a and mu together.  The +1
count is therefore (s - 1) * E + (m - s) * O, where E and O count the
degree-(n - 2) monomials with an even (resp. odd) number of entries greater
than s.  Pure powers of the leading generator index no basis element, so
this is not a plain degree-(n - 1) monomial tally.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .liealg import (
    BracketWord,
    GradedDimensionTable,
    _descending_tuples,
    metabelian_basis,
    metabelian_dimension,
)
from .series import binomial, coefficient_via_pfd, partial_fractions


@dataclass(frozen=True)
class SignSignature:
    """Generator count m and the number s of +1-eigenvalue generators."""

    m: int
    s: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError("signature needs at least one generator")
        if not 0 <= self.s <= self.m:
            raise ValueError("need 0 <= s <= m")

    @property
    def m_plus(self) -> int:
        return self.s

    @property
    def m_minus(self) -> int:
        return self.m - self.s


def bracket_sign(word: BracketWord, sig: SignSignature) -> int:
    """Sign of the involution on a basis bracket: (-1)^(#indices above s)."""
    if word.alphabet_size != sig.m:
        raise ValueError(
            f"word over {word.alphabet_size} letters does not match signature m={sig.m}"
        )
    k = sum(1 for i in word.indices if i > sig.s)
    return -1 if k % 2 else 1


def _signed_count(plus: int, minus: int, degree: int) -> int:
    """Signed monomial count: #even minus #odd entries-above-s, degree fixed.

    Equals the degree-indexed coefficient of (1-t)^-plus (1+t)^-minus.
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    if plus + minus == 0:
        return 1 if degree == 0 else 0
    value = coefficient_via_pfd(partial_fractions(plus, minus), degree)
    assert value.denominator == 1
    return int(value)


def _monomials(m: int, degree: int) -> Iterator[tuple[int, ...]]:
    """Degree-d monomials in m variables as nonincreasing index tuples."""
    return _descending_tuples(m, degree)


def _excess_count(mono: tuple[int, ...], s: int) -> int:
    return sum(1 for i in mono if i > s)


def sym_eigenspaces(sig: SignSignature, n: int) -> tuple[int, int]:
    """(+1, -1) eigenspace dimensions on the n-th symmetric power.

    The total is binomial(n + m - 1, m - 1); the difference is the n-th
    coefficient of (1-t)^-s (1+t)^-(m-s).
    """
    if n < 0:
        raise ValueError("symmetric power degree must be nonnegative")
    total = binomial(n + sig.m - 1, sig.m - 1)
    diff = _signed_count(sig.m_plus, sig.m_minus, n)
    plus, rem = divmod(total + diff, 2)
    assert rem == 0
    return plus, total - plus


def sym_eigenspaces_enumerated(sig: SignSignature, n: int) -> tuple[int, int]:
    """Same count by walking the monomials and reading each one's parity."""
    plus = minus = 0
    for mono in _monomials(sig.m, n):
        if _excess_count(mono, sig.s) % 2 == 0:
            plus += 1
        else:
            minus += 1
    return plus, minus


def parity_placements(a: int, b: int, n: int) -> int:
    """Ways to drop n balls into a blue + b green labelled bins with an even
    number of balls ending up green.

    Closed form ((total + signed)/2) with the signed count from the
    partial-fraction coefficients.
    """
    if a < 1 or b < 1:
        raise ValueError("need at least one bin of each color")
    if n < 0:
        raise ValueError("ball count must be nonnegative")
    total = binomial(n + a + b - 1, a + b - 1)
    value, rem = divmod(total + _signed_count(a, b, n), 2)
    assert rem == 0
    return value


def parity_placements_enumerated(a: int, b: int, n: int) -> int:
    if a < 1 or b < 1:
        raise ValueError("need at least one bin of each color")
    return sum(
        1 for mono in _monomials(a + b, n) if _excess_count(mono, a) % 2 == 0
    )


def bracket_plus_dimension(m: int, s: int, n: int) -> int:
    """Count of level-n basis brackets fixed by the involution.

    Streams the basis; memory stays constant while the level grows.
    """
    sig = SignSignature(m, s)
    if n < 2:
        raise ValueError("bracket counts start at level 2")
    return sum(1 for word in metabelian_basis(m, n) if bracket_sign(word, sig) == 1)


def bracket_plus_dimension_analytic(m: int, s: int, n: int) -> int:
    """Same count via signed tail series, one term per choice of i_2.

    For each top index v, the signed sum over admissible i_1 < v is
    2*min(v-1, s) - (v-1), the top index contributes its own sign, and the
    nonincreasing tails over [1, v] contribute the signed multiset count.
    """
    sig = SignSignature(m, s)
    if n < 2:
        raise ValueError("bracket counts start at level 2")
    signed = 0
    for v in range(2, m + 1):
        prefix = 2 * min(v - 1, s) - (v - 1)
        top_sign = -1 if v > s else 1
        signed += prefix * top_sign * _signed_count(min(v, s), v - min(v, s), n - 2)
    total = metabelian_dimension(m, n)
    plus, rem = divmod(total + signed, 2)
    assert rem == 0
    return plus


def v1_plus_dimension(m: int, s: int, n: int) -> int:
    """Dimension of the +1 part of the leading-generator bracket space.

    Closed form ((m-1)*T + (2s - m - 1)*c) / 2 where T counts degree-(n-2)
    monomials and c is their signed count; see the module docstring for the
    pair convention this encodes.
    """
    if m < 2:
        raise ValueError("need >= 2 generators")
    if n < 2:
        raise ValueError("bracket spaces start at level 2")
    if not 1 <= s <= m:
        raise ValueError("the leading generator must have eigenvalue +1, so 1 <= s <= m")
    total = binomial(n - 2 + m - 1, m - 1)
    signed = _signed_count(s, m - s, n - 2)
    value, rem = divmod((m - 1) * total + (2 * s - m - 1) * signed, 2)
    assert rem == 0
    return value


def v1_plus_dimension_enumerated(m: int, s: int, n: int) -> int:
    """Oracle route: stream the (a, mu) basis pairs and count +1 signs."""
    if m < 2:
        raise ValueError("need >= 2 generators")
    if n < 2:
        raise ValueError("bracket spaces start at level 2")
    if not 1 <= s <= m:
        raise ValueError("the leading generator must have eigenvalue +1, so 1 <= s <= m")
    count = 0
    for a in range(2, m + 1):
        head = 1 if a > s else 0
        for mono in _monomials(m, n - 2):
            if (head + _excess_count(mono, s)) % 2 == 0:
                count += 1
    return count


def bracket_plus_table(m: int, s: int, max_n: int) -> GradedDimensionTable:
    """Plus-eigenspace dimensions per level; level 1 is the s fixed generators."""
    rows = {1: s}
    for n in range(2, max_n + 1):
        rows[n] = bracket_plus_dimension_analytic(m, s, n)
    return GradedDimensionTable(m, rows, "eigenplus")
