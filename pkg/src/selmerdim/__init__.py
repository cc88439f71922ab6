"""Exact dimension counting for metabelian free Lie algebras and the
dimension-hypothesis ledger built on top of it.

Everything is computed in arbitrary-precision integer and rational
arithmetic; no floating point enters any result.  The package is organized
in four layers:

``series``
    Truncated formal power series and the two-pole partial-fraction
    machinery behind every generating-function count.
``liealg``
    Witt dimensions, Lyndon words, and the explicit bracket basis of the
    graded pieces of a metabelian free Lie algebra.
``eigenspaces``
    Dimensions of the +1/-1 eigenspaces of a diagonal involution acting on
    symmetric powers, bracket spaces, and the balls-in-bins model, each
    computed by two independent routes.
``ledger``
    The per-level ledger that locates the level at which the
    dimension-hypothesis inequality first holds, the archimedean-signature
    analysis, and the unramified-correspondence applicability predicate.

The ``cli`` module exposes all of it as the ``selmerdim`` command.
"""

from .series import (
    FormalSeries,
    PartialFractionDecomp,
    binomial,
    coefficient_via_pfd,
    geometric_inverse_power,
    moebius,
    partial_fractions,
    series_multiply,
)
from .liealg import (
    BracketWord,
    GradedDimensionTable,
    cumulative_dimension,
    lyndon_words,
    metabelian_basis,
    metabelian_dimension,
    metabelian_table,
    witt_dimension,
    witt_table,
)
from .eigenspaces import (
    SignSignature,
    bracket_plus_dimension,
    bracket_plus_dimension_analytic,
    bracket_plus_table,
    bracket_sign,
    parity_placements,
    parity_placements_enumerated,
    sym_eigenspaces,
    sym_eigenspaces_enumerated,
    v1_plus_dimension,
    v1_plus_dimension_enumerated,
)
from .ledger import (
    CoverDescription,
    CurveScenario,
    DHReport,
    LedgerRow,
    bt_poonen_applies,
    dh_crossover,
    derham_lower_bound,
    h1_upper_bound,
    signature_viability,
    z_plus_lower_bound,
    z_plus_table,
)

__all__ = [
    "FormalSeries",
    "PartialFractionDecomp",
    "binomial",
    "coefficient_via_pfd",
    "geometric_inverse_power",
    "moebius",
    "partial_fractions",
    "series_multiply",
    "BracketWord",
    "GradedDimensionTable",
    "cumulative_dimension",
    "lyndon_words",
    "metabelian_basis",
    "metabelian_dimension",
    "metabelian_table",
    "witt_dimension",
    "witt_table",
    "SignSignature",
    "bracket_plus_dimension",
    "bracket_plus_dimension_analytic",
    "bracket_plus_table",
    "bracket_sign",
    "parity_placements",
    "parity_placements_enumerated",
    "sym_eigenspaces",
    "sym_eigenspaces_enumerated",
    "v1_plus_dimension",
    "v1_plus_dimension_enumerated",
    "CoverDescription",
    "CurveScenario",
    "DHReport",
    "LedgerRow",
    "bt_poonen_applies",
    "dh_crossover",
    "derham_lower_bound",
    "h1_upper_bound",
    "signature_viability",
    "z_plus_lower_bound",
    "z_plus_table",
]
