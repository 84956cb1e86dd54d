"""Permutations, pair orbits, and the matrix algebra fixed by a permutation.

The matrices commuting with a permutation matrix are exactly those constant
on the orbits of index pairs under the cyclic group the permutation
generates.  Their count, the algebra dimension, and, over an algebraically
closed field in good characteristic, the full block decomposition are all
determined by the cycle type, through the gcd-symmetric invariants.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ConsistencyError, InputError
from .gcd_symm import GVector, g_vector, h_vector, power_norm
from .partition_poly import epsilon
from .partitions import Partition

Matrix = list[list[int]]


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1, ..., n}; ``images[i-1]`` is the image of i.

    Composition is left-to-right: ``(sigma * tau)(i) == tau(sigma(i))``,
    matching the row convention of the permutation matrices below.
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if n == 0:
            raise InputError("a permutation needs degree at least 1")
        if sorted(self.images) != list(range(1, n + 1)):
            raise InputError(f"images are not a bijection of 1..{n}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.n != other.n:
            raise InputError("cannot compose permutations of different degree")
        return Permutation(tuple(other(self(i)) for i in range(1, self.n + 1)))

    def inverse(self) -> "Permutation":
        images = [0] * self.n
        for i, j in enumerate(self.images, start=1):
            images[j - 1] = i
        return Permutation(tuple(images))

    def cycles(self) -> list[list[int]]:
        """Disjoint cycles including fixed points, longest first."""
        seen = [False] * (self.n + 1)
        cycles = []
        for start in range(1, self.n + 1):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            j = self(start)
            while j != start:
                cycle.append(j)
                seen[j] = True
                j = self(j)
            cycles.append(cycle)
        cycles.sort(key=lambda c: (-len(c), c[0]))
        return cycles


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, degree: int | None = None) -> Permutation:
    """Parse 1-based cycle notation like ``(1 2 3)(4 5)``.

    Points are whitespace-separated.  Fixed points may be omitted when
    ``degree`` is given explicitly; otherwise the degree is the largest point
    mentioned.
    """
    body = text.strip()
    stripped = _CYCLE.sub("", body).strip()
    if stripped:
        raise InputError(f"unexpected text outside cycles: {stripped!r}")
    cycles = []
    for group in _CYCLE.findall(body):
        points = []
        for token in group.split():
            try:
                point = int(token)
            except ValueError:
                raise InputError(f"not an integer point: {token!r}") from None
            if point < 1:
                raise InputError(f"points are 1-based, got {point}")
            points.append(point)
        if points:
            cycles.append(points)
    mentioned = [p for cycle in cycles for p in cycle]
    if len(set(mentioned)) != len(mentioned):
        raise InputError("cycles are not disjoint")
    if degree is None:
        if not mentioned:
            raise InputError("empty permutation needs an explicit degree")
        degree = max(mentioned)
    elif mentioned and max(mentioned) > degree:
        raise InputError(f"point {max(mentioned)} exceeds degree {degree}")
    images = list(range(1, degree + 1))
    for cycle in cycles:
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            images[a - 1] = b
    return Permutation(tuple(images))


def canonical_permutation(lam: Partition) -> Permutation:
    """The permutation with consecutive cycles (1..l1)(l1+1..l1+l2)..."""
    images = []
    offset = 0
    for length in lam.parts:
        images.extend(range(offset + 2, offset + length + 1))
        images.append(offset + 1)
        offset += length
    return Permutation(tuple(images))


def cycle_type(sigma: Permutation) -> Partition:
    """Cycle lengths in weakly decreasing order; fixed points count as 1."""
    return Partition(tuple(sorted((len(c) for c in sigma.cycles()), reverse=True)))


def perm_matrix(sigma: Permutation) -> Matrix:
    """0/1 matrix with a 1 at (i, sigma(i)) per row, 1-based positions."""
    n = sigma.n
    matrix = [[0] * n for _ in range(n)]
    for i in range(1, n + 1):
        matrix[i - 1][sigma(i) - 1] = 1
    return matrix


@dataclass(frozen=True)
class OrbitDecomposition:
    """Orbit ids of index pairs under (i, j) -> (sigma(i), sigma(j)).

    ``ids[i][j]`` (0-based cell) is the orbit id of the pair (i+1, j+1); ids
    are assigned in row-major first-encounter order, so the labelling is
    deterministic.
    """

    ids: tuple[tuple[int, ...], ...]
    count: int


def pair_orbits(sigma: Permutation) -> OrbitDecomposition:
    """Walk every index pair along the diagonal action and label orbits."""
    n = sigma.n
    ids = [[-1] * n for _ in range(n)]
    count = 0
    for i in range(n):
        for j in range(n):
            if ids[i][j] >= 0:
                continue
            a, b = i, j
            while ids[a][b] < 0:
                ids[a][b] = count
                a, b = sigma(a + 1) - 1, sigma(b + 1) - 1
            count += 1
    return OrbitDecomposition(ids=tuple(tuple(row) for row in ids), count=count)


@dataclass(frozen=True)
class OrbitBasis:
    """Indicator matrices of the pair orbits plus the cycle idempotents.

    ``matrices[k]`` is the 0/1 indicator of orbit k; the basis spans the
    fixed algebra and is closed under transpose.  ``idempotents[i]`` is the
    diagonal indicator of the (i+1)-th cycle's support (cycles ordered as in
    :meth:`Permutation.cycles`); they are orthogonal and sum to the identity.
    """

    matrices: tuple[tuple[tuple[int, ...], ...], ...]
    idempotents: tuple[tuple[tuple[int, ...], ...], ...]


def orbit_basis(sigma: Permutation) -> OrbitBasis:
    n = sigma.n
    orbits = pair_orbits(sigma)
    matrices = [[[0] * n for _ in range(n)] for _ in range(orbits.count)]
    for i in range(n):
        for j in range(n):
            matrices[orbits.ids[i][j]][i][j] = 1
    idempotents = []
    for cycle in sigma.cycles():
        diag = [[0] * n for _ in range(n)]
        for point in cycle:
            diag[point - 1][point - 1] = 1
        idempotents.append(diag)
    def freeze(m: Matrix) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(row) for row in m)

    return OrbitBasis(
        matrices=tuple(freeze(m) for m in matrices),
        idempotents=tuple(freeze(m) for m in idempotents),
    )


def dimension(lam: Partition) -> int:
    """Rank of the fixed algebra: g_1 plus twice the first divisor-matrix norm."""
    if lam.s == 1:
        return lam.n
    return g_vector(lam)[1] + 2 * power_norm(lam, 1)


@dataclass(frozen=True)
class FieldSpec:
    """Ground field data: characteristic (0 or a prime) and closedness."""

    characteristic: int = 0
    algebraically_closed: bool = True

    def __post_init__(self) -> None:
        p = self.characteristic
        if p == 0:
            return
        if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise InputError(f"characteristic must be 0 or prime, got {p}")


def is_semisimple(lam: Partition, field: FieldSpec) -> bool:
    """True unless the characteristic divides some part."""
    p = field.characteristic
    return p == 0 or all(part % p for part in lam.parts)


@dataclass(frozen=True)
class WedderburnShape:
    """Block structure of the semisimple algebra: ``multiplicities[i-1]``
    copies of the i-by-i matrix ring, i = 1..s."""

    multiplicities: tuple[int, ...]

    @property
    def n(self) -> int:
        return sum(i * h for i, h in enumerate(self.multiplicities, start=1))

    @property
    def dim(self) -> int:
        return sum(i * i * h for i, h in enumerate(self.multiplicities, start=1))

    @property
    def blocks(self) -> int:
        """Number of simple factors."""
        return sum(self.multiplicities)

    def as_dict(self) -> dict[int, int]:
        return {i: h for i, h in enumerate(self.multiplicities, start=1)}

    def describe(self) -> str:
        pieces = []
        for i, h in enumerate(self.multiplicities, start=1):
            if h == 0:
                continue
            base = "R" if i == 1 else f"M_{i}(R)"
            pieces.append(base if h == 1 else f"{base}^{h}")
        return " x ".join(pieces)


def not_semisimple_message(lam: Partition, field: FieldSpec) -> str:
    """Human-readable reason, e.g. ``not semisimple (2 divides 4 and 2)``."""
    p = field.characteristic
    bad = [str(part) for part in lam.parts if p and part % p == 0]
    if len(bad) <= 2:
        listing = " and ".join(bad)
    else:
        listing = ", ".join(bad[:-1]) + " and " + bad[-1]
    return f"not semisimple ({p} divides {listing})"


def _require_decomposable(lam: Partition, field: FieldSpec) -> None:
    if not field.algebraically_closed:
        raise InputError("block decomposition requires an algebraically closed field")
    if not is_semisimple(lam, field):
        raise InputError(
            f"{not_semisimple_message(lam, field)} at characteristic {field.characteristic}"
        )


def wedderburn(lam: Partition, field: FieldSpec) -> WedderburnShape:
    """Block multiplicities of the fixed algebra; they are the h-vector."""
    _require_decomposable(lam, field)
    h = h_vector(g_vector(lam))
    shape = WedderburnShape(multiplicities=h.values)
    if shape.n != lam.n:
        raise ConsistencyError(f"block sizes sum to {shape.n}, expected {lam.n}")
    if shape.multiplicities[-1] < 1:
        raise ConsistencyError(f"largest block multiplicity vanished for {lam}")
    return shape


def isomorphic(lam: Partition, mu: Partition, field: FieldSpec) -> bool:
    """Whether the two fixed algebras are isomorphic: equal degree and polynomial."""
    _require_decomposable(lam, field)
    _require_decomposable(mu, field)
    return lam.n == mu.n and epsilon(lam) == epsilon(mu)


@dataclass(frozen=True)
class MoritaResult:
    """Verdict plus the witnessing numbers for both sides.

    ``blocks`` are the simple-factor counts (their equality is the
    criterion); ``signed_values`` are gcd(parts) times the polynomial value
    at 1, whose sign flips with the parity of the part count; reported for
    inspection, not used for the decision.
    """

    equivalent: bool
    blocks: tuple[int, int]
    signed_values: tuple[int, int]

    def __bool__(self) -> bool:
        return self.equivalent


def _signed_value(lam: Partition, g: GVector) -> int:
    return g[g.s] * epsilon(lam)(1)


def morita_equivalent(lam: Partition, mu: Partition, field: FieldSpec) -> MoritaResult:
    """Morita equivalence: equal numbers of simple blocks.

    Two semisimple algebras over an algebraically closed field are Morita
    equivalent exactly when their multiplicity-free companions coincide,
    i.e. when they have the same number of simple factors.
    """
    _require_decomposable(lam, field)
    _require_decomposable(mu, field)
    g_lam, g_mu = g_vector(lam), g_vector(mu)
    blocks = (sum(h_vector(g_lam).values), sum(h_vector(g_mu).values))
    signed = (_signed_value(lam, g_lam), _signed_value(mu, g_mu))
    return MoritaResult(
        equivalent=blocks[0] == blocks[1], blocks=blocks, signed_values=signed
    )
