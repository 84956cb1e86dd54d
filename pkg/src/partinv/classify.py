"""Equivalence classes of P(s, n) under polynomial equivalence.

Within a fixed (s, n) two partitions are equivalent exactly when their
g-vectors agree, so the raw g-vector serves as the class key (g_1 = n makes
the normalization by g_s injective here, and keys stay unsigned).  Grouping
is an order-independent reduction keyed by g-vector followed by a final
deterministic sort, so any evaluation order produces identical output.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .errors import InputError
from .gcd_symm import g_vector
from .partitions import Partition, count_partitions, enumerate_partitions


@dataclass(frozen=True)
class EquivalenceClass:
    key: tuple[int, ...]
    members: tuple[Partition, ...]

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class EquivalenceClasses:
    """The full classification of P(s, n).

    Classes are sorted by key (ascending lexicographic); members keep the
    descending-lexicographic enumeration order.
    """

    s: int
    n: int
    classes: tuple[EquivalenceClass, ...]

    @property
    def p(self) -> int:
        """Number of partitions classified."""
        return sum(c.size for c in self.classes)

    @property
    def i(self) -> int:
        """Number of classes."""
        return len(self.classes)

    @property
    def e(self) -> dict[int, int]:
        """Histogram: class size -> number of classes of that size."""
        histogram: dict[int, int] = {}
        for c in self.classes:
            histogram[c.size] = histogram.get(c.size, 0) + 1
        return dict(sorted(histogram.items()))

    def to_json_dict(self) -> dict:
        return {
            "s": self.s,
            "n": self.n,
            "classes": [
                {"key": list(c.key), "members": [list(m.parts) for m in c.members]}
                for c in self.classes
            ],
            "summary": {
                "p": self.p,
                "i": self.i,
                "e": {str(size): count for size, count in self.e.items()},
            },
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "EquivalenceClasses":
        classes = tuple(
            EquivalenceClass(
                key=tuple(entry["key"]),
                members=tuple(Partition(tuple(m)) for m in entry["members"]),
            )
            for entry in data["classes"]
        )
        return cls(s=data["s"], n=data["n"], classes=classes)

    def to_csv(self) -> str:
        """One row per partition: parts, g-vector, 0-based class id."""
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["parts", "g_vector", "class_id"])
        by_key = {c.key: idx for idx, c in enumerate(self.classes)}
        for lam in enumerate_partitions(self.s, self.n):
            key = g_vector(lam).values
            writer.writerow([str(lam), ",".join(str(v) for v in key), by_key[key]])
        return out.getvalue()


def classify(s: int, n: int) -> EquivalenceClasses:
    """Group P(s, n) by g-vector."""
    if s < 1 or n < s:
        raise InputError(f"need s >= 1 and n >= s, got s={s}, n={n}")
    groups: dict[tuple[int, ...], list[Partition]] = {}
    for lam in enumerate_partitions(s, n):
        groups.setdefault(g_vector(lam).values, []).append(lam)
    classes = tuple(
        EquivalenceClass(key=key, members=tuple(groups[key])) for key in sorted(groups)
    )
    result = EquivalenceClasses(s=s, n=n, classes=classes)
    assert result.p == count_partitions(s, n)
    return result


def self_equivalent(s: int, n: int) -> list[Partition]:
    """Partitions alone in their class, in enumeration order."""
    singletons = [c.members[0] for c in classify(s, n).classes if c.size == 1]
    return sorted(singletons, key=lambda lam: lam.parts, reverse=True)
