"""Independent brute-force verifiers for every closed-form invariant.

Each oracle recomputes a quantity from its raw definition: literal subset
enumeration, explicit roots of unity as reduced fractions, the nullity of
the actual commutation linear system, all with exact integer arithmetic, never
floating point.  The check families compare these against the closed-form
implementations over exhaustive sweeps and report every mismatch.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable, Iterator, NamedTuple

from .algebra import Permutation, canonical_permutation, dimension, pair_orbits, perm_matrix
from .classify import classify
from .errors import BoundExceededError, InputError
from .gcd_symm import HVector, g_vector, gcd_matrix, gcd_matrix_det_and_bounds, h_vector, power_norm
from .partition_poly import distinct_eigenvalue_count, epsilon, equivalent
from .partitions import Partition, concat, enumerate_partitions, scale


class ReducedFraction(NamedTuple):
    """k/l in lowest terms with 0 <= k < l; encodes the root e^(2*pi*i*k/l)."""

    numerator: int
    denominator: int


def root_fraction(k: int, l: int) -> ReducedFraction:
    if l < 1:
        raise InputError(f"denominator must be positive, got {l}")
    k %= l
    g = math.gcd(k, l)
    return ReducedFraction(k // g, l // g)


def root_union(lam: Partition) -> set[ReducedFraction]:
    """Every root of unity whose order divides some part, as reduced fractions."""
    union: set[ReducedFraction] = set()
    for part in lam.parts:
        for k in range(part):
            union.add(root_fraction(k, part))
    return union


def eigenvalue_multiplicities(lam: Partition) -> HVector:
    """h_i by direct counting: how many roots lie in exactly i part-groups.

    A reduced k/l is an m-th root of unity iff l divides m*k, which given
    gcd(k, l) = 1 is just l | m.  Entirely integer arithmetic.
    """
    counts = [0] * (lam.s + 1)
    for _, l in root_union(lam):
        inside = sum(1 for part in lam.parts if part % l == 0)
        counts[inside] += 1
    return HVector(tuple(counts[1:]))


def brute_g(lam: Partition, i: int) -> int:
    """Literal enumeration: sum of gcds over all C(s, i) index subsets.

    ``combinations`` walks the index subsets in order (equal parts are kept
    apart by position), so this is the raw definition with no incremental
    shortcut; it is the oracle for both g_vector and power_norm.
    """
    if not 1 <= i <= lam.s:
        raise InputError(f"subset size {i} outside 1..{lam.s} for {lam}")
    return sum(itertools.starmap(math.gcd, itertools.combinations(lam.parts, i)))


def _commutation_system(sigma: Permutation) -> list[list[int]]:
    # Row for each matrix position (i, j): entry of X*C - C*X there, as a
    # linear form in the n^2 unknowns X_pq ordered row-major.
    n = sigma.n
    c = perm_matrix(sigma)
    rows = []
    for i in range(n):
        for j in range(n):
            row = [0] * (n * n)
            for p in range(n):
                if c[p][j]:
                    row[i * n + p] += 1
                if c[i][p]:
                    row[p * n + j] -= 1
            if any(row):
                rows.append(row)
    return rows


def _fraction_free_rank(rows: list[list[int]]) -> int:
    """Rank by integer-preserving elimination with row and column pivoting.

    One-step fraction-free updates: every intermediate entry is a minor of
    the input matrix, so dividing by the previous pivot is exact.  Rows with
    a zero in the pivot column still need the pivot/previous rescaling to
    keep that property, except when the two coincide.
    """
    if not rows:
        return 0
    n_rows, n_cols = len(rows), len(rows[0])
    rank = 0
    prev = 1
    for col in range(n_cols):
        pivot_row = None
        for r in range(rank, n_rows):
            if rows[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        lead = rows[rank]
        pivot = lead[col]
        for r in range(rank + 1, n_rows):
            row = rows[r]
            factor = row[col]
            if factor:
                row[:] = [
                    (pivot * a - factor * b) // prev for a, b in zip(row, lead)
                ]
            elif pivot != prev:
                row[:] = [(pivot * a) // prev for a in row]
        prev = pivot
        rank += 1
        if rank == n_rows:
            break
    return rank


def commutant_dimension(sigma: Permutation, *, max_degree: int = 12) -> int:
    """Nullity of the linear system 'X commutes with the permutation matrix'.

    Builds the n^2-by-n^2 integer system literally and eliminates it exactly;
    the result is the rank of the fixed algebra, found without any orbit or
    gcd reasoning.  Degrees above ``max_degree`` are refused to keep the
    elimination size bounded.
    """
    if sigma.n > max_degree:
        raise BoundExceededError(
            f"degree {sigma.n} exceeds the matrix bound {max_degree}"
        )
    rows = _commutation_system(sigma)
    return sigma.n**2 - _fraction_free_rank(rows)


# --- check families -------------------------------------------------------


@dataclass(frozen=True)
class Failure:
    input: str
    expected: str
    actual: str


@dataclass(frozen=True)
class FamilyResult:
    family: str
    instances: int
    failures: tuple[Failure, ...]

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class VerificationReport:
    families: tuple[FamilyResult, ...]

    @property
    def passed(self) -> bool:
        return all(f.passed for f in self.families)

    def to_text(self) -> str:
        lines = []
        width = max((len(f.family) for f in self.families), default=0)
        for fam in self.families:
            status = "ok" if fam.passed else f"FAIL ({len(fam.failures)})"
            lines.append(f"{fam.family:<{width}}  {fam.instances:>7} instances  {status}")
            for failure in fam.failures[:5]:
                lines.append(
                    f"    {failure.input}: expected {failure.expected}, got {failure.actual}"
                )
        lines.append("all checks passed" if self.passed else "CHECKS FAILED")
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        return {
            "passed": self.passed,
            "families": [
                {
                    "family": fam.family,
                    "instances": fam.instances,
                    "failures": [
                        {"input": f.input, "expected": f.expected, "actual": f.actual}
                        for f in fam.failures
                    ],
                }
                for fam in self.families
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "VerificationReport":
        return cls(
            families=tuple(
                FamilyResult(
                    family=fam["family"],
                    instances=fam["instances"],
                    failures=tuple(
                        Failure(f["input"], f["expected"], f["actual"])
                        for f in fam["failures"]
                    ),
                )
                for fam in data["families"]
            )
        )


def _all_partitions(n_max: int) -> Iterator[Partition]:
    for n in range(1, n_max + 1):
        for s in range(1, n + 1):
            yield from enumerate_partitions(s, n)


GTweak = Callable[[Partition, tuple[int, ...]], tuple[int, ...]]


def check_g_vector_vs_brute(n_max: int, fault_hook: GTweak | None = None) -> FamilyResult:
    """g-vector (incremental) against literal subset enumeration.

    ``fault_hook`` exists for testing the reporting machinery only: it may
    perturb the computed vector before comparison.
    """
    instances = 0
    failures = []
    for lam in _all_partitions(n_max):
        instances += 1
        expected = tuple(brute_g(lam, i) for i in range(1, lam.s + 1))
        actual = g_vector(lam).values
        if fault_hook is not None:
            actual = fault_hook(lam, actual)
        if actual != expected:
            failures.append(Failure(str(lam), str(expected), str(actual)))
    return FamilyResult("g-vector vs subset enumeration", instances, tuple(failures))


def check_power_norm_vs_g(n_max: int) -> FamilyResult:
    """Divisor-matrix power norms against the shifted g-vector."""
    instances = 0
    failures = []
    for lam in _all_partitions(n_max):
        g = g_vector(lam)
        for i in range(1, lam.s):
            instances += 1
            actual = power_norm(lam, i)
            if actual != g[i + 1]:
                failures.append(Failure(f"{lam} i={i}", str(g[i + 1]), str(actual)))
    return FamilyResult("power norm vs g-vector", instances, tuple(failures))


def check_h_vector_vs_roots(n_max: int) -> FamilyResult:
    """Inclusion-exclusion h-vector against direct root-of-unity counting."""
    instances = 0
    failures = []
    for lam in _all_partitions(n_max):
        instances += 1
        expected = eigenvalue_multiplicities(lam).values
        actual = h_vector(g_vector(lam)).values
        if actual != expected:
            failures.append(Failure(str(lam), str(expected), str(actual)))
    return FamilyResult("h-vector vs root counting", instances, tuple(failures))


def check_inclusion_exclusion(n_max: int) -> FamilyResult:
    """|union of root groups| vs alternating g-sum vs the eigenvalue count."""
    instances = 0
    failures = []
    for lam in _all_partitions(n_max):
        instances += 1
        expected = len(root_union(lam))
        g = g_vector(lam)
        alternating = sum(v if i % 2 else -v for i, v in enumerate(g.values, start=1))
        counted = distinct_eigenvalue_count(lam)
        if not expected == alternating == counted:
            failures.append(
                Failure(str(lam), str(expected), f"alt={alternating} count={counted}")
            )
    return FamilyResult("inclusion-exclusion union size", instances, tuple(failures))


def check_orbit_count_vs_gcd_sum(n_max: int) -> FamilyResult:
    """Pair-orbit walking against the gcd-matrix total and the dimension."""
    instances = 0
    failures = []
    for lam in _all_partitions(n_max):
        instances += 1
        sigma = canonical_permutation(lam)
        walked = pair_orbits(sigma).count
        total = gcd_matrix(lam).total()
        dim = dimension(lam)
        if not walked == total == dim:
            failures.append(Failure(str(lam), str(total), f"walk={walked} dim={dim}"))
    return FamilyResult("orbit count vs gcd sum", instances, tuple(failures))


def check_commutant_dimension(n_max: int) -> FamilyResult:
    """Exact nullity of the commutation system against the gcd-matrix total."""
    instances = 0
    failures = []
    for lam in _all_partitions(n_max):
        instances += 1
        sigma = canonical_permutation(lam)
        actual = commutant_dimension(sigma, max_degree=n_max)
        expected = gcd_matrix(lam).total()
        if actual != expected:
            failures.append(Failure(str(lam), str(expected), str(actual)))
    return FamilyResult("commutant nullity vs gcd sum", instances, tuple(failures))


def check_block_sum_rules(n_max: int) -> FamilyResult:
    """sum(i*h_i) = n, sum(i^2*h_i) = dimension, h_s = g_s, and
    sum(h_i) equals the alternating g-sum."""
    instances = 0
    failures = []
    for lam in _all_partitions(n_max):
        instances += 1
        g = g_vector(lam)
        h = h_vector(g)
        weighted = sum(i * v for i, v in enumerate(h.values, start=1))
        squares = sum(i * i * v for i, v in enumerate(h.values, start=1))
        alternating = sum(v if i % 2 else -v for i, v in enumerate(g.values, start=1))
        dim = dimension(lam)
        if (
            weighted != lam.n
            or squares != dim
            or h[h.s] != g[g.s]
            or sum(h.values) != alternating
        ):
            failures.append(
                Failure(
                    str(lam),
                    f"n={lam.n} dim={dim} g_s={g[g.s]} alt={alternating}",
                    f"sum_ih={weighted} sum_iih={squares} h_s={h[h.s]} sum_h={sum(h.values)}",
                )
            )
    return FamilyResult("block multiplicity sum rules", instances, tuple(failures))


def check_determinant_bounds(n_max: int) -> FamilyResult:
    """For pairwise distinct parts: totient product <= det <= part product - s!/2."""
    instances = 0
    failures = []
    for lam in _all_partitions(n_max):
        result = gcd_matrix_det_and_bounds(lam)
        if not result.distinct:
            continue
        instances += 1
        if not (0 < result.determinant and result.lower <= result.determinant <= result.upper):
            failures.append(
                Failure(
                    str(lam),
                    f"{result.lower} <= det <= {result.upper}",
                    str(result.determinant),
                )
            )
    return FamilyResult("gcd determinant bounds", instances, tuple(failures))


def check_scaling_invariance(n_max: int, d_max: int = 4) -> FamilyResult:
    """g(d*lam) = d*g(lam) elementwise and identical polynomials."""
    instances = 0
    failures = []
    for lam in _all_partitions(n_max):
        base_g = g_vector(lam).values
        base_eps = epsilon(lam)
        for d in range(2, d_max + 1):
            instances += 1
            scaled = scale(d, lam)
            got_g = g_vector(scaled).values
            want_g = tuple(d * v for v in base_g)
            if got_g != want_g or epsilon(scaled) != base_eps:
                failures.append(Failure(f"{lam} d={d}", str(want_g), str(got_g)))
    return FamilyResult("scaling invariance", instances, tuple(failures))


def _equivalent_pairs(s: int, n: int) -> Iterator[tuple[Partition, Partition]]:
    for cls in classify(s, n).classes:
        for pair in itertools.combinations(cls.members, 2):
            yield pair


def check_append_part(n_max: int) -> FamilyResult:
    """Appending a part preserves (non-)equivalence when its gcd pattern matches.

    For every equivalent pair, the appended pair must stay equivalent for
    m = 1 and for an m coprime to every part (both make the gcd multisets
    all ones); inequivalent pairs must stay inequivalent.
    """
    instances = 0
    failures = []
    for n in range(2, n_max + 1):
        for s in range(1, n + 1):
            grouped = classify(s, n)
            coprime_m = _prime_above(n)
            for cls in grouped.classes:
                for lam, mu in itertools.combinations(cls.members, 2):
                    for m in (1, coprime_m):
                        instances += 1
                        bigger = (concat(lam, Partition((m,))), concat(mu, Partition((m,))))
                        if not equivalent(*bigger):
                            failures.append(
                                Failure(f"{lam} ~ {mu} m={m}", "equivalent", "inequivalent")
                            )
            representatives = [cls.members[0] for cls in grouped.classes]
            for lam, mu in itertools.combinations(representatives, 2):
                instances += 1
                m = coprime_m
                bigger = (concat(lam, Partition((m,))), concat(mu, Partition((m,))))
                if equivalent(*bigger):
                    failures.append(
                        Failure(f"{lam} !~ {mu} m={m}", "inequivalent", "equivalent")
                    )
    return FamilyResult("append-part equivalence", instances, tuple(failures))


def _prime_above(n: int) -> int:
    candidate = n + 1
    while any(candidate % d == 0 for d in range(2, int(candidate**0.5) + 1)):
        candidate += 1
    return max(candidate, 2)


def _coprime_partner_pair(lam: Partition, mu: Partition) -> tuple[Partition, Partition] | None:
    """An equivalent two-part pair whose parts are coprime to both inputs.

    Any two two-part partitions of the same total whose parts are internally
    coprime share the g-vector (total, 1), so picking two fresh primes and a
    second coprime splitting of their sum gives an equivalent pair with every
    cross-gcd equal to 1.
    """
    forbidden = set()
    for part in lam.parts + mu.parts:
        forbidden |= _prime_factors(part)
    fresh = []
    candidate = 2
    while len(fresh) < 2:
        if _is_prime(candidate) and candidate not in forbidden:
            fresh.append(candidate)
        candidate += 1
    p1, p2 = fresh
    total = p1 + p2
    gamma = Partition.of(p2, p1)
    for k in range(1, total // 2 + 1):
        a, b = total - k, k
        if (a, b) == gamma.parts:
            continue
        if math.gcd(a, b) == 1 and all(a % q and b % q for q in forbidden):
            return gamma, Partition((a, b))
    return None


def _prime_factors(m: int) -> set[int]:
    factors = set()
    p = 2
    while p * p <= m:
        if m % p == 0:
            factors.add(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        factors.add(m)
    return factors


def _is_prime(m: int) -> bool:
    return m >= 2 and all(m % d for d in range(2, int(m**0.5) + 1))


def check_concat_classes(n_max: int, sample_cap: int = 300) -> FamilyResult:
    """Concatenating equivalent pairs with constant cross-gcd stays equivalent.

    For each equivalent pair, a partner equivalent pair with fully coprime
    cross parts is constructed (constant cross-gcd 1) and the concatenations
    are compared; the variant scaled by 3 exercises constant cross-gcd 3.
    """
    instances = 0
    failures = []
    sampled = 0
    for n1 in range(2, n_max + 1):
        for s1 in range(2, n1 + 1):
            for lam, mu in _equivalent_pairs(s1, n1):
                if sampled >= sample_cap:
                    return FamilyResult(
                        "concatenation of equivalent pairs", instances, tuple(failures)
                    )
                partner = _coprime_partner_pair(lam, mu)
                if partner is None:
                    continue
                gamma, delta = partner
                sampled += 1
                for d in (1, 3):
                    instances += 1
                    left = concat(scale(d, lam), scale(d, gamma))
                    right = concat(scale(d, mu), scale(d, delta))
                    if not equivalent(left, right):
                        failures.append(
                            Failure(
                                f"({lam};{gamma}) vs ({mu};{delta}) d={d}",
                                "equivalent",
                                "inequivalent",
                            )
                        )
    return FamilyResult("concatenation of equivalent pairs", instances, tuple(failures))


def check_multiset_sufficiency(n_max: int) -> FamilyResult:
    """Equal off-diagonal gcd multisets force equivalence."""
    instances = 0
    failures = []
    for n in range(2, n_max + 1):
        for s in range(2, n + 1):
            pool = list(enumerate_partitions(s, n))
            keyed = [
                (tuple(sorted(itertools.starmap(math.gcd, itertools.combinations(lam.parts, 2)))), lam)
                for lam in pool
            ]
            keyed.sort(key=lambda kv: kv[0])
            for _, group in itertools.groupby(keyed, key=lambda kv: kv[0]):
                members = [lam for _, lam in group]
                for lam, mu in itertools.combinations(members, 2):
                    instances += 1
                    if not equivalent(lam, mu):
                        failures.append(Failure(f"{lam} vs {mu}", "equivalent", "inequivalent"))
    return FamilyResult("gcd multiset sufficiency", instances, tuple(failures))


def verify_all(
    n_max: int,
    *,
    matrix_cap: int = 12,
    fault_hook: GTweak | None = None,
) -> VerificationReport:
    """Run every check family up to ``n_max``.

    Matrix-backed families (orbit walking, commutation-system nullity) are
    additionally capped at ``matrix_cap``; the sampling families use smaller
    internal bounds because their instance counts grow quadratically.
    Family order is fixed, so reports are deterministic.
    """
    if n_max < 0:
        raise InputError(f"n_max must be nonnegative, got {n_max}")
    matrix_bound = min(n_max, matrix_cap)
    families = (
        check_g_vector_vs_brute(n_max, fault_hook),
        check_power_norm_vs_g(n_max),
        check_h_vector_vs_roots(n_max),
        check_inclusion_exclusion(n_max),
        check_orbit_count_vs_gcd_sum(matrix_bound),
        check_commutant_dimension(matrix_bound),
        check_block_sum_rules(n_max),
        check_determinant_bounds(n_max),
        check_scaling_invariance(n_max),
        check_append_part(min(n_max, 12)),
        check_concat_classes(min(n_max, 10)),
        check_multiset_sufficiency(min(n_max, 14)),
    )
    return VerificationReport(families=families)
