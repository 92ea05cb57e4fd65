"""Alternating sign matrices, monotone triangles, ASM keys and the lattice.

An ASM of size n is a square sign matrix, so the tableau bijection of
:mod:`tabkey.signmatrix` carries it to a staircase tableau (a monotone
triangle).  The lattice order compares triangles box by box.
"""
from __future__ import annotations

from typing import Sequence

from .signmatrix import (SignMatrix, SignMatrixError, eliminate, from_tableau,
                         pseudo_key, to_tableau)
from .tableau import YoungTableau

Permutation = tuple[int, ...]


class AsmError(ValueError):
    pass


def validate_asm(entries: Sequence[Sequence[int]] | SignMatrix) -> SignMatrix:
    """Return ``entries`` as a validated ASM or raise :class:`AsmError`."""
    rows = entries.entries if isinstance(entries, SignMatrix) else \
        tuple(tuple(r) for r in entries)
    n = len(rows)
    if n == 0:
        raise AsmError("size-0 ASM is excluded")
    for i, row in enumerate(rows, 1):
        if len(row) != n:
            raise AsmError(f"not square: row {i} has {len(row)} entries, expected {n}")
    lines = [(f"row {i}", row) for i, row in enumerate(rows, 1)]
    lines += [(f"column {j + 1}", [r[j] for r in rows]) for j in range(n)]
    for name, line in lines:
        nonzero = [x for x in line if x]
        if any(x not in (-1, 1) for x in nonzero):
            raise AsmError(f"{name} has an entry outside {{-1,0,1}}")
        if sum(nonzero) != 1:
            raise AsmError(f"{name} sums to {sum(nonzero)}")
        if any(x == y for x, y in zip(nonzero, nonzero[1:])) or nonzero[0] != 1:
            raise AsmError(f"{name} does not alternate in sign")
    try:
        return SignMatrix(rows, n)
    except SignMatrixError as exc:  # unreachable for alternating lines
        raise AsmError(str(exc)) from exc


def is_asm(m: SignMatrix) -> bool:
    try:
        validate_asm(m)
    except AsmError:
        return False
    return True


# -- monotone triangles -------------------------------------------------------

def validate_monotone(t: YoungTableau) -> YoungTableau:
    n = t.alphabet
    if t.shape != tuple(range(n, 0, -1)):
        raise AsmError(f"shape {t.shape} is not the staircase of size {n}")
    for c in range(2, n + 1):
        for r in range(1, n - c + 2):
            if t.box(r, c) > t.box(r + 1, c - 1):
                raise AsmError(f"diagonal decreases at box ({r},{c})")
    return t


def is_monotone_triangle(t: YoungTableau) -> bool:
    try:
        validate_monotone(t)
    except AsmError:
        return False
    return True


def asm_to_monotone(m: SignMatrix) -> YoungTableau:
    return validate_monotone(to_tableau(validate_asm(m)))


def monotone_to_asm(t: YoungTableau) -> SignMatrix:
    return validate_asm(from_tableau(validate_monotone(t)))


# -- permutations -------------------------------------------------------------

def permutation_matrix(sigma: Permutation) -> SignMatrix:
    """Row ``i`` holds its 1 in column ``sigma(i)`` (values are 1-based)."""
    n = len(sigma)
    return SignMatrix(tuple(tuple(int(sigma[i] == j) for j in range(1, n + 1))
                            for i in range(n)), n)


def permutation_of(m: SignMatrix) -> Permutation:
    """Inverse of :func:`permutation_matrix`; rejects matrices with a -1."""
    if m.rows != m.cols or m.count(-1):
        raise AsmError("not a permutation matrix")
    sigma = tuple(row.index(1) + 1 for row in m.entries)
    if sorted(sigma) != list(range(1, m.rows + 1)):
        raise AsmError("not a permutation matrix")
    return sigma


def key_of_asm(m: SignMatrix) -> SignMatrix:
    return eliminate(validate_asm(m))


def pseudo_key_of_asm(m: SignMatrix, rng=None) -> SignMatrix:
    return pseudo_key(validate_asm(m), rng)


# -- lattice ----------------------------------------------------------------

def _boxwise(t1: YoungTableau, t2: YoungTableau, pick) -> YoungTableau:
    if t1.alphabet != t2.alphabet:
        raise AsmError(f"size mismatch: {t1.alphabet} vs {t2.alphabet}")
    validate_monotone(t1)
    validate_monotone(t2)
    cols = []
    for c1, c2 in zip(t1.columns, t2.columns):
        cols.append(tuple(pick(x, y) for x, y in zip(c1, c2)))
    return YoungTableau(t1.alphabet, tuple(cols))


def mt_sup(t1: YoungTableau, t2: YoungTableau) -> YoungTableau:
    return _boxwise(t1, t2, max)


def mt_inf(t1: YoungTableau, t2: YoungTableau) -> YoungTableau:
    return _boxwise(t1, t2, min)


def mt_leq(t1: YoungTableau, t2: YoungTableau) -> bool:
    if t1.alphabet != t2.alphabet:
        raise AsmError(f"size mismatch: {t1.alphabet} vs {t2.alphabet}")
    return all(x <= y for c1, c2 in zip(t1.columns, t2.columns)
               for x, y in zip(c1, c2))


def asm_leq(m: SignMatrix, n: SignMatrix) -> bool:
    if m.rows != n.rows:
        raise AsmError(f"size mismatch: {m.rows} vs {n.rows}")
    return mt_leq(asm_to_monotone(m), asm_to_monotone(n))


def asm_sup(m: SignMatrix, n: SignMatrix) -> SignMatrix:
    return monotone_to_asm(mt_sup(asm_to_monotone(m), asm_to_monotone(n)))


def asm_inf(m: SignMatrix, n: SignMatrix) -> SignMatrix:
    return monotone_to_asm(mt_inf(asm_to_monotone(m), asm_to_monotone(n)))


def render_triangle(t: YoungTableau) -> str:
    """Rows of a tableau, top row first, as drawn in French notation.

    For human reading only; this is not a parseable format.
    """
    height = max(t.shape, default=0)
    lines = []
    for r in range(height, 0, -1):
        cells = [str(c[-r]) if len(c) >= r else "" for c in t.columns]
        lines.append(" ".join(f"{x:>2}" for x in cells).rstrip())
    return "\n".join(lines)
