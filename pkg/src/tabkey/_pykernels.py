"""Pure-Python kernels.  ``_ckernels.pyx`` mirrors these signatures.

Matrices are lists of row lists with 0-based indices.
"""
from __future__ import annotations

from itertools import combinations, permutations

BACKEND = "python"


def find_removable(rows):
    """(row, col) of the rightmost -1 in the topmost row holding a -1."""
    for a, row in enumerate(rows):
        for b in range(len(row) - 1, -1, -1):
            if row[b] == -1:
                return a, b
    return None


def neighbours(rows, a, b):
    """1-entries whose rectangle up to (a, b) holds no other 1, top row first."""
    found = []
    bound = -1
    for i in range(a, -1, -1):
        row = rows[i]
        for j in range(b, bound, -1):
            if row[j] == 1:
                found.append((i, j))
                bound = j
                break
        if bound == b:
            break
    found.reverse()
    return found


def remove_at(rows, a, b):
    """Remove the removable -1 at (a, b) in place."""
    nb = neighbours(rows, a, b)
    rows[a][b] = 0
    for i, j in nb:
        rows[i][j] = 0
    for (i, _), (_, j) in zip(nb, nb[1:]):
        rows[i][j] = 1


def eliminate_rows(rows):
    """Copy of ``rows`` with every -1 removed in the normative order."""
    rows = [list(r) for r in rows]
    while True:
        pos = find_removable(rows)
        if pos is None:
            return rows
        remove_at(rows, *pos)


def _minus_ones_in_subtree(upper, level, counts, acc):
    # upper: sorted row of length level + 1; choose the interlacing row below
    if level == 0:
        counts[acc] = counts.get(acc, 0) + 1
        return
    lower = [0] * level

    def choose(k, prev, extra):
        if k == level:
            _minus_ones_in_subtree(lower, level - 1, counts, acc + extra)
            return
        lo, hi = upper[k], upper[k + 1]
        for x in range(max(lo, prev + 1), hi + 1):
            lower[k] = x
            choose(k + 1, x, extra + (lo < x < hi))

    choose(0, 0, 0)


def census_counts(n, skip=0):
    """Map k -> number of n x n ASMs with k entries equal to -1.

    With ``skip`` in 1..n only the ASMs whose last-but-one prefix row omits
    ``skip`` are counted, which partitions the work n ways.
    """
    counts: dict[int, int] = {}
    full = list(range(1, n + 1))
    if n <= 1:
        return {0: 1} if n == 1 else {}
    tops = [skip] if skip else full
    for s in tops:
        second = [x for x in full if x != s]
        _minus_ones_in_subtree(second, n - 2, counts, 0)
    return counts


def count_132_scan(n):
    """Total number of 132 occurrences over all permutations of size n."""
    total = 0
    triples = list(combinations(range(n), 3))
    for p in permutations(range(n)):
        for i, j, k in triples:
            if p[i] < p[k] < p[j]:
                total += 1
    return total
