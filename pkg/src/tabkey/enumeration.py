"""Exhaustive ASM generation, the census by number of -1 entries, the
closed formulas for one and two -1 entries, and 132-pattern counting."""
from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from math import comb, factorial
from typing import Iterator

from . import kernels
from .asm import AsmError, Permutation, permutation_matrix, permutation_of
from .signmatrix import SignMatrix, pseudo_remove


def _interlacing(upper: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Sorted rows of length ``len(upper) - 1`` interlacing ``upper``."""
    size = len(upper) - 1
    lower: list[int] = []

    def choose(k: int, prev: int):
        if k == size:
            yield tuple(lower)
            return
        for x in range(max(upper[k], prev + 1), upper[k + 1] + 1):
            lower.append(x)
            yield from choose(k + 1, x)
            lower.pop()

    yield from choose(0, 0)


def monotone_rows(n: int) -> Iterator[list[tuple[int, ...]]]:
    """Monotone triangles as prefix-support rows ``[S_1, ..., S_n]``.

    ``S_n = {1..n}`` is fixed; ``S_{n-1}``, ``S_{n-2}``, ... are chosen in
    lexicographic order, longest row first.
    """
    stack: list[tuple[int, ...]] = [tuple(range(1, n + 1))]

    def descend():
        if len(stack[-1]) == 0 or len(stack) == n:
            yield list(reversed(stack))
            return
        for row in _interlacing(stack[-1]):
            stack.append(row)
            yield from descend()
            stack.pop()

    yield from descend()


def _rows_to_matrix(n: int, supports: list[tuple[int, ...]]) -> SignMatrix:
    prev: set[int] = set()
    rows = []
    for s in supports:
        cur = set(s)
        rows.append(tuple((j in cur) - (j in prev) for j in range(1, n + 1)))
        prev = cur
    return SignMatrix(tuple(rows), n)


def enumerate_asms(n: int) -> Iterator[SignMatrix]:
    """Every ASM of size ``n`` exactly once, in :func:`monotone_rows` order."""
    if n < 1:
        raise ValueError("ASM size must be >= 1")
    for supports in monotone_rows(n):
        yield _rows_to_matrix(n, supports)


@dataclass
class MinusOneCensus:
    n: int
    counts: dict[int, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def to_json(self) -> dict:
        return {"n": self.n, "total": self.total,
                "by_minus_ones": {str(k): v for k, v in sorted(self.counts.items())}}

    def to_csv(self) -> str:
        lines = ["n,k,count"]
        lines += [f"{self.n},{k},{v}" for k, v in sorted(self.counts.items())]
        return "\n".join(lines)

    @classmethod
    def from_json(cls, data: dict | str) -> MinusOneCensus:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["n"]), {int(k): int(v) for k, v in data["by_minus_ones"].items()})


def default_jobs() -> int:
    env = os.environ.get("TABKEY_JOBS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def census(n: int, jobs: int = 1) -> MinusOneCensus:
    """Exact counts of size-``n`` ASMs by number of -1 entries.

    With ``jobs > 1`` the ``n`` branches of the second prefix row are
    counted in separate processes; the merged result does not depend on
    ``jobs``.
    """
    if n < 1:
        raise ValueError("ASM size must be >= 1")
    if jobs <= 1 or n < 6:
        counts = kernels.census_counts(n)
    else:
        counts = {}
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(kernels.census_counts, [n] * n, range(1, n + 1)):
                for k, v in part.items():
                    counts[k] = counts.get(k, 0) + v
    return MinusOneCensus(n, dict(sorted(counts.items())))


def census_by_scan(n: int) -> MinusOneCensus:
    """Same counts, by scanning the materialised matrices."""
    counts: dict[int, int] = {}
    for m in enumerate_asms(n):
        k = m.count(-1)
        counts[k] = counts.get(k, 0) + 1
    return MinusOneCensus(n, dict(sorted(counts.items())))


# -- closed forms -------------------------------------------------------------

def _inv_factorial(k: int) -> Fraction:
    # 1/k! with 1/(negative)! taken as 0
    return Fraction(0) if k < 0 else Fraction(1, factorial(k))


def a_n_1(n: int) -> int:
    """Number of size-``n`` ASMs with exactly one -1."""
    if n < 3:
        return 0
    return factorial(n) ** 2 // (36 * factorial(n - 3))


def a_n_2(n: int) -> int:
    """Number of size-``n`` ASMs with exactly two -1 entries.

    Terms whose factorial argument is negative vanish, which extends the
    formula to every ``n >= 1``.
    """
    value = factorial(n) ** 2 * (Fraction(1, 2592) * _inv_factorial(n - 6)
                                 + Fraction(11, 3600) * _inv_factorial(n - 5)
                                 + Fraction(1, 288) * _inv_factorial(n - 4))
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral value {value} at n={n}")
    return int(value)


def count_132(n: int) -> int:
    """Occurrences of the pattern 132 summed over all permutations of size n."""
    if n < 3:
        return 0
    return comb(n, 3) ** 2 * factorial(n - 3)


def count_132_bruteforce(n: int) -> int:
    return kernels.count_132_scan(n)


def occurrences_132(sigma: Permutation) -> list[tuple[int, int, int]]:
    """1-based triples ``i < j < k`` with ``sigma(i) < sigma(k) < sigma(j)``."""
    return [(i + 1, j + 1, k + 1) for i, j, k in combinations(range(len(sigma)), 3)
            if sigma[i] < sigma[k] < sigma[j]]


def count_132_itertools(n: int) -> int:
    return sum(len(occurrences_132(p)) for p in permutations(range(1, n + 1)))


# -- marked patterns ------------------------------------------------------------

@dataclass(frozen=True)
class MarkedPattern:
    sigma: Permutation
    triple: tuple[int, int, int]

    def __post_init__(self):
        i, j, k = self.triple
        s = self.sigma
        if sorted(s) != list(range(1, len(s) + 1)):
            raise ValueError(f"{s} is not a permutation")
        if not (1 <= i < j < k <= len(s)) or not (s[i - 1] < s[k - 1] < s[j - 1]):
            raise ValueError(f"{self.triple} is not a 132 occurrence in {s}")


def marked_pattern_of(m: SignMatrix) -> MarkedPattern:
    """Collapse the single -1 of ``m`` and remember where the three
    surviving 1's of its cross sit."""
    negatives = m.minus_ones()
    if len(negatives) != 1:
        raise AsmError(f"expected exactly one -1, found {len(negatives)}")
    (row, col), = negatives
    above = next(r for r in range(row - 1, 0, -1) if m[r, col] == 1)
    below = next(r for r in range(row + 1, m.rows + 1) if m[r, col] == 1)
    sigma = permutation_of(pseudo_remove(m, (row, col)))
    return MarkedPattern(sigma, (above, row, below))


def asm_of_marked_pattern(p: MarkedPattern) -> SignMatrix:
    """Reinstate the cross of 1's around the -1 at ``(j, sigma(k))``."""
    i, j, k = p.triple
    s = p.sigma
    rows = permutation_matrix(s).to_lists()
    rows[i - 1][s[i - 1] - 1] = 0
    rows[i - 1][s[k - 1] - 1] = 1
    rows[j - 1][s[i - 1] - 1] = 1
    rows[j - 1][s[k - 1] - 1] = -1
    return SignMatrix(tuple(map(tuple, rows)), len(s))


def all_marked_patterns(n: int) -> Iterator[MarkedPattern]:
    for sigma in permutations(range(1, n + 1)):
        for t in occurrences_132(sigma):
            yield MarkedPattern(sigma, t)
