"""Graded dimensions and explicit bases of free and metabelian free Lie algebras.

The free Lie algebra side (Witt dimensions, Lyndon words) exists purely as an
independent oracle for the metabelian side, whose graded pieces carry the
explicit left-normed bracket basis used everywhere else in the package: index
words (i_1, ..., i_n) with i_1 < i_2 and i_2 >= i_3 >= ... >= i_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from .series import binomial, moebius

PROVENANCE_LABELS = ("witt", "metabelian", "eigenplus", "ledger-bound")


def witt_dimension(m: int, n: int) -> int:
    """Dimension of the degree-n piece of the free Lie algebra on m generators.

    Computed as (1/n) * sum over divisors d of n of moebius(d) * m^(n/d).
    """
    if m < 1:
        raise ValueError("alphabet size must be >= 1")
    if n < 1:
        raise ValueError("level must be >= 1")
    total = sum(moebius(d) * m ** (n // d) for d in range(1, n + 1) if n % d == 0)
    quotient, remainder = divmod(total, n)
    assert remainder == 0
    return quotient


def lyndon_words(m: int, n: int) -> list[tuple[int, ...]]:
    """All Lyndon words of length n over the alphabet {1, ..., m}, in lex order.

    Duval's algorithm; the count matches witt_dimension(m, n).
    """
    if m < 1:
        raise ValueError("alphabet size must be >= 1")
    if n < 1:
        raise ValueError("length must be >= 1")
    out: list[tuple[int, ...]] = []
    w = [1]
    while w:
        if len(w) == n:
            out.append(tuple(w))
        k = len(w)
        while len(w) < n:
            w.append(w[len(w) - k])
        while w and w[-1] == m:
            w.pop()
        if w:
            w[-1] += 1
    return out


@dataclass(frozen=True)
class BracketWord:
    """Index word (i_1, ..., i_n) of a left-normed basis bracket.

    Encodes [ ... [a_{i_1}, a_{i_2}], a_{i_3}], ... ], a_{i_n}] subject to the
    normal form i_1 < i_2 and i_2 >= i_3 >= ... >= i_n.
    """

    indices: tuple[int, ...]
    alphabet_size: int

    def __post_init__(self) -> None:
        indices = tuple(int(i) for i in self.indices)
        object.__setattr__(self, "indices", indices)
        if self.alphabet_size < 2:
            raise ValueError("bracket words need an alphabet of size >= 2")
        if len(indices) < 2:
            raise ValueError("bracket words have arity >= 2")
        if any(i < 1 or i > self.alphabet_size for i in indices):
            raise ValueError("indices must lie in [1, alphabet_size]")
        if not indices[0] < indices[1]:
            raise ValueError("normal form requires i_1 < i_2")
        if any(indices[j] < indices[j + 1] for j in range(1, len(indices) - 1)):
            raise ValueError("normal form requires i_2 >= i_3 >= ... >= i_n")

    @property
    def arity(self) -> int:
        return len(self.indices)


def _descending_tuples(bound: int, length: int) -> Iterator[tuple[int, ...]]:
    """Nonincreasing tuples over [1, bound], emitted in lexicographic order."""
    if length == 0:
        yield ()
        return
    for first in range(1, bound + 1):
        for rest in _descending_tuples(first, length - 1):
            yield (first,) + rest


def metabelian_basis(m: int, n: int) -> Iterator[BracketWord]:
    """Stream the level-n basis words over m generators in lexicographic order.

    Lazy by design: consumers that only count signs never materialize the
    whole level.
    """
    if m < 2:
        raise ValueError("metabelian basis needs >= 2 generators")
    if n < 2:
        raise ValueError("level-1 elements are generators, not bracket words")
    for i1 in range(1, m):
        for i2 in range(i1 + 1, m + 1):
            for tail in _descending_tuples(i2, n - 2):
                yield BracketWord((i1, i2) + tail, m)


def metabelian_dimension(m: int, n: int) -> int:
    """Dimension of the level-n graded piece of the metabelian free Lie algebra.

    Level 1 is the generator space itself.  For n >= 2 the closed form
    (n - 1) * binomial(m + n - 2, n) counts the normal-form basis words; the
    test suite gates it against direct enumeration before it is trusted.
    """
    if m < 2:
        raise ValueError("metabelian dimensions need >= 2 generators")
    if n < 1:
        raise ValueError("level must be >= 1")
    if n == 1:
        return m
    return (n - 1) * binomial(m + n - 2, n)


@dataclass(frozen=True)
class GradedDimensionTable:
    """Map from level n to an exact dimension, tagged with its provenance."""

    alphabet_size: int
    rows: Mapping[int, int]
    provenance: str

    def __post_init__(self) -> None:
        if self.provenance not in PROVENANCE_LABELS:
            raise ValueError(f"unknown provenance {self.provenance!r}")
        rows = {int(n): int(v) for n, v in dict(self.rows).items()}
        if not rows:
            raise ValueError("a dimension table needs at least row 1")
        top = max(rows)
        if set(rows) != set(range(1, top + 1)):
            raise ValueError("rows must cover 1..max with no gaps")
        if any(v < 0 for v in rows.values()):
            raise ValueError("dimensions are nonnegative")
        if self.provenance in ("witt", "metabelian") and rows[1] != self.alphabet_size:
            raise ValueError("row 1 must equal the generator count")
        object.__setattr__(self, "rows", rows)

    @property
    def max_level(self) -> int:
        return max(self.rows)


def cumulative_dimension(table: GradedDimensionTable, n: int) -> int:
    """Partial sum of rows 1..n; missing rows are a usage error."""
    if n < 1:
        raise ValueError("cumulative dimension needs n >= 1")
    if n > table.max_level:
        raise ValueError(f"table only holds rows up to {table.max_level}")
    return sum(table.rows[i] for i in range(1, n + 1))


def witt_table(m: int, max_n: int) -> GradedDimensionTable:
    rows = {n: witt_dimension(m, n) for n in range(1, max_n + 1)}
    return GradedDimensionTable(m, rows, "witt")


def metabelian_table(m: int, max_n: int) -> GradedDimensionTable:
    rows = {n: metabelian_dimension(m, n) for n in range(1, max_n + 1)}
    return GradedDimensionTable(m, rows, "metabelian")
