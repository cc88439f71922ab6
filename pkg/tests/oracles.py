"""Independent brute-force oracles used by the test suite.

Everything here is written against the definitions, not against the package
implementation: words are filtered from full cartesian products, monomial
counts walk combinations-with-replacement, and bracket spaces are realized
inside the tensor model with exact Gaussian elimination.
"""

from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import comb


# ---------------------------------------------------------------------------
# words

def brute_lyndon_words(m: int, n: int) -> list[tuple[int, ...]]:
    """Aperiodic words strictly smaller than all their proper rotations."""
    out = []
    for word in product(range(1, m + 1), repeat=n):
        rotations = [word[i:] + word[:i] for i in range(1, n)]
        if all(word < r for r in rotations):
            out.append(word)
    return out


def brute_metabelian_words(m: int, n: int) -> list[tuple[int, ...]]:
    """Normal-form words filtered from the full product."""
    out = []
    for word in product(range(1, m + 1), repeat=n):
        if word[0] >= word[1]:
            continue
        if any(word[j] < word[j + 1] for j in range(1, n - 1)):
            continue
        out.append(word)
    return out


def word_sign(word: tuple[int, ...], s: int) -> int:
    return -1 if sum(1 for i in word if i > s) % 2 else 1


# ---------------------------------------------------------------------------
# monomial counts

def monomials(m: int, degree: int):
    return combinations_with_replacement(range(1, m + 1), degree)


def brute_sym_eigenspaces(m: int, s: int, n: int) -> tuple[int, int]:
    plus = minus = 0
    for mono in monomials(m, n):
        if sum(1 for i in mono if i > s) % 2 == 0:
            plus += 1
        else:
            minus += 1
    return plus, minus


def brute_parity_placements(a: int, b: int, n: int) -> int:
    """Count placements directly over the green-ball total."""
    count = 0
    for mono in monomials(a + b, n):
        green = sum(1 for i in mono if i > a)
        if green % 2 == 0:
            count += 1
    return count


# ---------------------------------------------------------------------------
# tensor model of the metabelian algebra
#
# A left-normed bracket word (j1, ..., jn) embeds as
#   e(j1) (x) x_{j2} x_{j3} ... x_{jn}  -  e(j2) (x) x_{j1} x_{j3} ... x_{jn}
# inside (m-dim space) (x) (degree n-1 monomials); the involution acts
# diagonally on the coordinates.

def phi_vector(word: tuple[int, ...]) -> dict:
    j1, j2, tail = word[0], word[1], word[2:]
    vec: dict = {}
    for key, coeff in (
        ((j1, tuple(sorted((j2,) + tail))), 1),
        ((j2, tuple(sorted((j1,) + tail))), -1),
    ):
        vec[key] = vec.get(key, 0) + coeff
    return {k: Fraction(c) for k, c in vec.items() if c}


def rank(vectors) -> int:
    basis: dict = {}
    r = 0
    for vec in vectors:
        row = dict(vec)
        while row:
            pivot = min(row)
            if pivot in basis:
                ref = basis[pivot]
                factor = row[pivot] / ref[pivot]
                for key, coeff in ref.items():
                    updated = row.get(key, Fraction(0)) - factor * coeff
                    if updated:
                        row[key] = updated
                    else:
                        row.pop(key, None)
            else:
                basis[pivot] = row
                r += 1
                break
    return r


def model_metabelian_dimension(m: int, n: int) -> int:
    return rank(phi_vector(w) for w in brute_metabelian_words(m, n))


def model_v1_plus_dimension(m: int, s: int, n: int) -> int:
    """Rank of the +1-signed leading-generator brackets, all tails allowed."""
    vectors = []
    for tail in product(range(1, m + 1), repeat=n - 1):
        word = (1,) + tail
        vec = phi_vector(word)
        if vec and word_sign(word, s) == 1:
            vectors.append(vec)
    return rank(vectors)


def model_v1_total_dimension(m: int, n: int) -> int:
    vectors = []
    for tail in product(range(1, m + 1), repeat=n - 1):
        vec = phi_vector((1,) + tail)
        if vec:
            vectors.append(vec)
    return rank(vectors)


# ---------------------------------------------------------------------------
# series

def brute_product_coefficients(p: int, q: int, order: int) -> list[Fraction]:
    """Coefficients of (1-t)^-p (1+t)^-q by direct convolution."""
    plus = [Fraction(comb(n + p - 1, p - 1)) if p else Fraction(1 if n == 0 else 0)
            for n in range(order + 1)]
    minus = [Fraction((-1) ** n * comb(n + q - 1, q - 1)) if q
             else Fraction(1 if n == 0 else 0)
             for n in range(order + 1)]
    return [sum((plus[i] * minus[n - i] for i in range(n + 1)), Fraction(0))
            for n in range(order + 1)]
