"""Small helpers shared by the test modules, kept independent of the
library internals wherever they serve as oracles."""

from __future__ import annotations

import itertools
import math
from typing import Iterator

from partinv import Partition, enumerate_partitions


def all_partitions(n_max: int) -> Iterator[Partition]:
    for n in range(1, n_max + 1):
        for s in range(1, n + 1):
            yield from enumerate_partitions(s, n)


def subset_gcd_sum(parts: tuple[int, ...], size: int) -> int:
    """Independent re-derivation: gcd summed over all index subsets."""
    total = 0
    for combo in itertools.combinations(range(len(parts)), size):
        g = 0
        for index in combo:
            g = math.gcd(g, parts[index])
        total += g
    return total


def mat_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    n, k, m = len(a), len(b), len(b[0])
    assert len(a[0]) == k
    return [[sum(a[i][p] * b[p][j] for p in range(k)) for j in range(m)] for i in range(n)]


def mat_transpose(a) -> list[list[int]]:
    return [list(col) for col in zip(*a)]


def mat_eq(a, b) -> bool:
    return [list(r) for r in a] == [list(r) for r in b]


def identity_matrix(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]
