"""Per-level ledger for the dimension-hypothesis inequality.

A scenario fixes the genus g (so 2g generators), the field degree d, the
count s of +1-eigenvalue generators, two nonnegative budget coefficients A
(filtered-piece budget d*A*n^g) and B (second-cohomology budget
d*B*n^(2g-1), charged at every level n >= 1), the archimedean signature
(r1 real places, r2 complex places) of the base field, and a search bound.

The per-level report fields follow the bookkeeping conventions exactly:

* the group dimension is sandwiched between the one-copy cumulative
  dimension and d times it, and the printed ``h1_upper`` / lower-bound
  fields resolve that sandwich pessimistically on each side;
* the row verdict, however, certifies the strict inequality uniformly over
  every group dimension inside the sandwich.  Because the two realizations
  being compared have equal dimension, the unknown cancels, leaving

      d*B*n^(2g-1) + d*A*n^g + (r1 + r2 - 1) * d * cum(n)  <  r1 * sum z+(i)

  which coincides with ``h1_upper < dr_quotient_lower`` at degree one.
  A nonpositive lower bound can therefore never certify failure, only
  leave a level inconclusive.

Every real place is charged the same plus-eigenspace bound derived from s;
the signature is the base field's.  The plus-eigenspace term itself is the
one-copy lower bound in all three branches and is never scaled by d.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Optional

from ._concurrency import ordered_map
from .eigenspaces import v1_plus_dimension
from .liealg import GradedDimensionTable, metabelian_dimension

VIABLE = "viable"
OBSTRUCTED_COMPLEX = "obstructed-complex-place"
OBSTRUCTED_REAL = "obstructed-real-growth"
UNDETERMINED = "undetermined"

HOLDS = "holds"
FAILS = "fails"

APPLIES = "applies"
UNKNOWN = "unknown"

EXCEPTIONAL_PRIMES = frozenset({101, 103, 107, 131, 167, 191})
_SMALL_PRIME_BOUND = 89


@dataclass(frozen=True)
class CurveScenario:
    """All ledger inputs for one run."""

    g: int
    d: int
    s: int
    coeff_a: Fraction
    coeff_b: Fraction
    signature: tuple[int, int] = (1, 0)
    n_max: int = 32

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeff_a", Fraction(self.coeff_a))
        object.__setattr__(self, "coeff_b", Fraction(self.coeff_b))
        object.__setattr__(self, "signature", tuple(int(v) for v in self.signature))
        if self.g < 2:
            raise ValueError("genus must be at least 2")
        if self.d < 1:
            raise ValueError("field degree must be at least 1")
        if not 0 <= self.s <= 2 * self.g:
            raise ValueError("need 0 <= s <= 2g")
        if self.coeff_a < 0 or self.coeff_b < 0:
            raise ValueError("budget coefficients must be nonnegative")
        r1, r2 = self.signature
        if r1 < 0 or r2 < 0 or r1 + r2 < 1:
            raise ValueError("archimedean signature needs r1 + r2 >= 1")
        if self.n_max < 1:
            raise ValueError("search bound must be at least 1")

    @property
    def generators(self) -> int:
        return 2 * self.g


@dataclass(frozen=True)
class LedgerRow:
    n: int
    z_dim_upper: int
    w_dim_upper: int
    dr_dim_lower: int
    h2_budget: Fraction
    z_plus_lower: int
    h1_upper: Fraction
    f0_upper: Fraction
    dr_quotient_lower: Fraction
    verdict: str


@dataclass(frozen=True)
class DHReport:
    scenario: CurveScenario
    rows: tuple[LedgerRow, ...] = field(default_factory=tuple)
    crossover: Optional[int] = None
    sustained: Optional[bool] = None
    viability: str = UNDETERMINED


def z_plus_lower_bound(scn: CurveScenario, i: int) -> int:
    """Lower bound for the +1-eigenspace dimension of the level-i graded piece.

    Level 1 contributes the s fixed generators.  Above that: with every
    generator fixed the whole piece counts; with none fixed only even levels
    survive; in between the leading-generator bracket space provides the
    bound.
    """
    if i < 1:
        raise ValueError("level must be >= 1")
    m = scn.generators
    if i == 1:
        return scn.s
    if scn.s == m:
        return metabelian_dimension(m, i)
    if scn.s == 0:
        return metabelian_dimension(m, i) if i % 2 == 0 else 0
    return v1_plus_dimension(m, scn.s, i)


def _cumulative(scn: CurveScenario, n: int) -> int:
    return sum(metabelian_dimension(scn.generators, i) for i in range(1, n + 1))


def _z_plus_sum(scn: CurveScenario, n: int) -> int:
    return sum(z_plus_lower_bound(scn, i) for i in range(1, n + 1))


def _h2_budget(scn: CurveScenario, n: int) -> Fraction:
    return scn.d * scn.coeff_b * n ** (2 * scn.g - 1)


def _f0_budget(scn: CurveScenario, n: int) -> Fraction:
    return scn.d * scn.coeff_a * n**scn.g


def h1_upper_bound(scn: CurveScenario, n: int) -> Fraction:
    """Upper bound for the first-cohomology dimension at level n.

    Defined for the rational base field, signature (1, 0): the cumulative
    dimension at the heavy end of the sandwich, plus the quadratic budget,
    minus the accumulated plus-eigenspace bound.
    """
    if scn.signature != (1, 0):
        raise ValueError("h1_upper_bound is defined for signature (1, 0)")
    if n < 1:
        raise ValueError("level must be >= 1")
    return scn.d * _cumulative(scn, n) + _h2_budget(scn, n) - _z_plus_sum(scn, n)


def derham_lower_bound(scn: CurveScenario, n: int) -> Fraction:
    """Lower bound for the filtered-quotient dimension at level n.

    Light end of the sandwich minus the filtered-piece budget; may be
    nonpositive for large A, in which case the level is inconclusive.
    """
    if n < 1:
        raise ValueError("level must be >= 1")
    return Fraction(_cumulative(scn, n)) - _f0_budget(scn, n)


def _viability(scn: CurveScenario, crossover: Optional[int]) -> str:
    r1, r2 = scn.signature
    if r2 >= 1:
        return OBSTRUCTED_COMPLEX
    if (r1, r2) == (1, 0):
        return VIABLE
    # Totally real with r1 >= 2: the growth heuristic is decided by the
    # exact rows; a holding row leaves the question open rather than viable.
    return OBSTRUCTED_REAL if crossover is None else UNDETERMINED


def _build_rows(scn: CurveScenario) -> tuple[LedgerRow, ...]:
    m = scn.generators
    r1, r2 = scn.signature
    levels = list(range(1, scn.n_max + 1))
    per_level = ordered_map(
        lambda i: (metabelian_dimension(m, i), z_plus_lower_bound(scn, i)), levels
    )
    rows: list[LedgerRow] = []
    cum = 0
    z_plus_sum = 0
    for n, (z_dim, z_plus) in zip(levels, per_level):
        cum += z_dim
        z_plus_sum += z_plus
        h2 = _h2_budget(scn, n)
        f0 = _f0_budget(scn, n)
        h1 = (r1 + r2) * scn.d * cum + h2 - r1 * z_plus_sum
        holds = h2 + f0 + (r1 + r2 - 1) * scn.d * cum < r1 * z_plus_sum
        rows.append(
            LedgerRow(
                n=n,
                z_dim_upper=scn.d * z_dim,
                w_dim_upper=scn.d * cum,
                dr_dim_lower=cum,
                h2_budget=h2,
                z_plus_lower=z_plus,
                h1_upper=h1,
                f0_upper=f0,
                dr_quotient_lower=Fraction(cum) - f0,
                verdict=HOLDS if holds else FAILS,
            )
        )
    return tuple(rows)


def dh_crossover(scn: CurveScenario) -> DHReport:
    """Run the ledger over levels 1..n_max and locate the first holding level.

    A single holding level suffices; the report also flags whether the
    verdict stays monotone from the crossover to the search bound.
    """
    rows = _build_rows(scn)
    crossover = next((row.n for row in rows if row.verdict == HOLDS), None)
    sustained: Optional[bool] = None
    if crossover is not None:
        sustained = all(row.verdict == HOLDS for row in rows[crossover - 1 :])
    return DHReport(
        scenario=scn,
        rows=rows,
        crossover=crossover,
        sustained=sustained,
        viability=_viability(scn, crossover),
    )


def signature_viability(scn: CurveScenario) -> str:
    """Archimedean-signature verdict.

    Any complex place makes the generalized deficiency at least the full
    graded dimension, so the inequality can never hold.  Totally real
    signatures beyond (1, 0) are judged by the exact rows; (1, 0) is the
    signature the method is built for.
    """
    r1, r2 = scn.signature
    if r2 >= 1:
        return OBSTRUCTED_COMPLEX
    if (r1, r2) == (1, 0):
        return VIABLE
    return dh_crossover(scn).viability


def z_plus_table(scn: CurveScenario, max_n: int) -> GradedDimensionTable:
    """The per-level plus-eigenspace bounds as a provenance-tagged table."""
    rows = {i: z_plus_lower_bound(scn, i) for i in range(1, max_n + 1)}
    return GradedDimensionTable(scn.generators, rows, "ledger-bound")


@dataclass(frozen=True)
class CoverDescription:
    """Inputs to the unramified-correspondence applicability predicate.

    ``ramification_profiles`` lists, per point of the quotient curve, the
    multiset of ramification indices above it.  ``ramification_triple``
    optionally names three indices expected to be divisible by 2, 3, and
    some admissible prime respectively.
    """

    curve_genus: int
    quotient_genus: int
    solvable: bool = False
    ramification_profiles: tuple[tuple[int, ...], ...] = ()
    ramification_triple: Optional[tuple[int, int, int]] = None

    def __post_init__(self) -> None:
        profiles = tuple(tuple(int(e) for e in p) for p in self.ramification_profiles)
        object.__setattr__(self, "ramification_profiles", profiles)
        if self.ramification_triple is not None:
            triple = tuple(int(e) for e in self.ramification_triple)
            if len(triple) != 3:
                raise ValueError("the ramification triple needs exactly three indices")
            object.__setattr__(self, "ramification_triple", triple)
        if self.curve_genus < 2:
            raise ValueError("the covering curve must have genus >= 2")
        if not 0 <= self.quotient_genus <= 2:
            raise ValueError("the quotient curve must have genus <= 2")
        for profile in profiles:
            if not profile or any(e < 1 for e in profile):
                raise ValueError("ramification profiles need positive indices")
        if self.ramification_triple is not None and any(
            e < 1 for e in self.ramification_triple
        ):
            raise ValueError("ramification indices are positive")


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _admissible_prime(index: int) -> bool:
    return any(
        p <= _SMALL_PRIME_BOUND or p in EXCEPTIONAL_PRIMES
        for p in _prime_divisors(index)
    )


def matched_condition(data: CoverDescription) -> Optional[int]:
    """Index (1-4) of the first sufficient condition that holds, else None."""
    if data.quotient_genus in (1, 2):
        return 1
    if data.solvable:
        return 2
    profiles = data.ramification_profiles
    for i in range(len(profiles)):
        for j in range(i + 1, len(profiles)):
            combined = 0
            for e in profiles[i] + profiles[j]:
                combined = gcd(combined, e)
            if combined > 1:
                return 3
    triple = data.ramification_triple
    if triple is not None:
        e2, e3, el = triple
        if e2 % 2 == 0 and e3 % 3 == 0 and _admissible_prime(el):
            return 4
    return None


def bt_poonen_applies(data: CoverDescription) -> str:
    """Decide applicability of the unramified-correspondence theorem.

    The four printed conditions are sufficient only, so a miss yields
    ``unknown`` rather than a refusal.
    """
    return APPLIES if matched_condition(data) is not None else UNKNOWN
