"""gcd-symmetric invariants of a partition.

Taking gcd as the product makes the naturals a commutative structure whose
multiplication is idempotent (``gcd(a, a) == a``) and absorbs addition
(``gcd(a + b, a) == gcd(b, a)``).  Evaluating the classical elementary
symmetric polynomials over it gives, for a partition, the vector

    g_i = sum of gcd(chosen parts) over all i-element subsets of parts,

from which inclusion-exclusion recovers the h-vector: h_i counts the roots
of unity lying in exactly i of the cyclic groups of orders given by the
parts.  The triangular divisor matrix of pairwise gcds ties g_{i+1} to the
norm of its i-th power, and the full gcd matrix carries the dimension data
of the fixed-matrix algebra.  All arithmetic is exact; no floating point.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import ConsistencyError, InputError
from .partitions import Partition


def gcd_product(a: int, b: int) -> int:
    """gcd of two naturals; the idempotent product.  ``gcd(0, a) == a``."""
    if a < 0 or b < 0:
        raise InputError(f"gcd product is defined on naturals, got {a}, {b}")
    return math.gcd(a, b)


@dataclass(frozen=True)
class GVector:
    """The sequence (g_1, ..., g_s); ``vec[i]`` is 1-based like g_i."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.values:
            raise ConsistencyError("empty g-vector")
        last = self.values[-1]
        for i, value in enumerate(self.values, start=1):
            if value < 1:
                raise ConsistencyError(f"g_{i} must be positive, got {value}")
            if value % last != 0:
                raise ConsistencyError(f"g_s = {last} does not divide g_{i} = {value}")

    @property
    def s(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i: int) -> int:
        if not 1 <= i <= len(self.values):
            raise IndexError(f"g-vector index {i} outside 1..{len(self.values)}")
        return self.values[i - 1]


@dataclass(frozen=True)
class HVector:
    """The sequence (h_1, ..., h_s) of exact-membership counts."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.values:
            raise ConsistencyError("empty h-vector")
        for i, value in enumerate(self.values, start=1):
            if value < 0:
                raise ConsistencyError(f"h_{i} must be nonnegative, got {value}")

    @property
    def s(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i: int) -> int:
        if not 1 <= i <= len(self.values):
            raise IndexError(f"h-vector index {i} outside 1..{len(self.values)}")
        return self.values[i - 1]


def g_vector(lam: Partition) -> GVector:
    """All g_i of a partition, by incremental absorption of parts.

    A table per subset size maps each realizable gcd value to the number of
    subsets realizing it; absorbing one part updates the tables in place of
    ever enumerating the 2^s subsets (the literal enumeration lives in
    :func:`partinv.oracles.brute_g` and must agree).
    """
    s = lam.s
    levels: list[dict[int, int]] = [{} for _ in range(s + 1)]
    seen = 0
    for part in lam.parts:
        for size in range(seen, 0, -1):
            grown = levels[size + 1]
            for value, count in levels[size].items():
                key = math.gcd(value, part)
                grown[key] = grown.get(key, 0) + count
        ones = levels[1]
        ones[part] = ones.get(part, 0) + 1
        seen += 1
    return GVector(
        tuple(
            sum(value * count for value, count in levels[size].items())
            for size in range(1, s + 1)
        )
    )


def h_vector(g: GVector) -> HVector:
    """Inclusion-exclusion transform h_i = sum_k (-1)^k C(i+k, i) g_{i+k}."""
    s = g.s
    values = []
    for i in range(1, s + 1):
        acc = 0
        for k in range(s - i + 1):
            term = math.comb(i + k, i) * g[i + k]
            acc += -term if k % 2 else term
        if acc < 0:
            raise ConsistencyError(f"negative multiplicity h_{i} = {acc} from {g.values}")
        values.append(acc)
    return HVector(tuple(values))


@dataclass(frozen=True)
class DivisorMatrix:
    """Strictly upper triangular matrix of pairwise gcds of the parts."""

    entries: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.entries)

    def upper_entries(self) -> list[int]:
        """The entries above the diagonal, row by row (a multiset)."""
        return [self.entries[i][j] for i in range(self.order) for j in range(i + 1, self.order)]


@dataclass(frozen=True)
class GcdMatrix:
    """Symmetric matrix of pairwise gcds; the diagonal is the parts."""

    entries: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.entries)

    def total(self) -> int:
        return sum(sum(row) for row in self.entries)


def divisor_matrix(lam: Partition) -> DivisorMatrix:
    parts = lam.parts
    s = lam.s
    return DivisorMatrix(
        tuple(
            tuple(math.gcd(parts[i], parts[j]) if j > i else 0 for j in range(s))
            for i in range(s)
        )
    )


def gcd_matrix(lam: Partition) -> GcdMatrix:
    parts = lam.parts
    return GcdMatrix(
        tuple(tuple(math.gcd(a, b) for b in parts) for a in parts)
    )


def power_norm(lam: Partition, i: int) -> int:
    """Norm of the i-th power of the triangular divisor matrix.

    The entries of the power are sums of monomials indexed by strict index
    chains j_0 < j_1 < ... < j_i; evaluating a monomial collapses repeated
    factors (the product is idempotent), leaving the gcd of the parts on the
    chain.  The norm sums these over all chains.  Deliberately not computed
    as g_{i+1}: that equality is a theorem, exercised by the test suite.
    """
    if not 1 <= i <= lam.s - 1:
        raise InputError(f"chain length {i} outside 1..{lam.s - 1} for {lam}")
    # combinations() walks index chains in order; equal parts still belong to
    # distinct chain positions, so duplicates are wanted.
    return sum(itertools.starmap(math.gcd, itertools.combinations(lam.parts, i + 1)))


def euler_phi(m: int) -> int:
    """Euler's totient, by trial-division factorization."""
    if m < 1:
        raise InputError(f"totient needs a positive integer, got {m}")
    result = m
    remaining = m
    p = 2
    while p * p <= remaining:
        if remaining % p == 0:
            result -= result // p
            while remaining % p == 0:
                remaining //= p
        p += 1
    if remaining > 1:
        result -= result // remaining
    return result


def _fraction_free_det(rows: list[list[int]]) -> int:
    # Bareiss one-step elimination: every entry stays an exact minor of the
    # input, so the divisions are exact and no fractions appear.
    size = len(rows)
    sign = 1
    prev = 1
    for k in range(size - 1):
        if rows[k][k] == 0:
            for r in range(k + 1, size):
                if rows[r][k] != 0:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        for r in range(k + 1, size):
            factor = rows[r][k]
            row = rows[r]
            lead = rows[k]
            for c in range(k + 1, size):
                row[c] = (pivot * row[c] - factor * lead[c]) // prev
            row[k] = 0
        prev = pivot
    return sign * rows[size - 1][size - 1]


@dataclass(frozen=True)
class DetBounds:
    """Exact determinant of the gcd matrix with the totient/product bounds.

    The bounds (and positivity) are only asserted when the parts are pairwise
    distinct; ``distinct`` records that.  For a single part the upper-bound
    formula degenerates (s!/2 is not an integer), so the part itself is
    reported as the upper bound.
    """

    determinant: int
    lower: int
    upper: int
    distinct: bool


def gcd_matrix_det_and_bounds(lam: Partition) -> DetBounds:
    """Determinant of the gcd matrix by fraction-free elimination, plus bounds."""
    matrix = [list(row) for row in gcd_matrix(lam).entries]
    det = _fraction_free_det(matrix) if lam.s > 1 else matrix[0][0]
    lower = math.prod(euler_phi(p) for p in lam.parts)
    if lam.s == 1:
        upper = lam.parts[0]
    else:
        upper = math.prod(lam.parts) - math.factorial(lam.s) // 2
    distinct = len(set(lam.parts)) == lam.s
    return DetBounds(determinant=det, lower=lower, upper=upper, distinct=distinct)
