"""Schensted insertion, Knuth equivalence, two-column jeu de taquin and the
classical left/right keys computed from frank words.

This module is the reference route to keys.  It shares nothing with the
sign-matrix elimination in :mod:`tabkey.signmatrix` beyond the tableau type.
"""
from __future__ import annotations

from bisect import bisect_right
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .tableau import Column, YoungTableau, column, format_columns

Word = Sequence[int]


def insert_rows(word: Word) -> list[list[int]]:
    """Row-insert ``word``; returns rows bottom to top (French notation)."""
    rows: list[list[int]] = []
    for x in word:
        for row in rows:
            pos = bisect_right(row, x)
            if pos == len(row):
                row.append(x)
                break
            row[pos], x = x, row[pos]
        else:
            rows.append([x])
    return rows


def p_tableau(word: Word, alphabet: int | None = None) -> YoungTableau:
    """Insertion tableau of ``word``."""
    if any(x < 1 for x in word):
        raise ValueError("word entries must be >= 1")
    if alphabet is None:
        alphabet = max(word, default=0)
    rows = insert_rows(word)
    width = len(rows[0]) if rows else 0
    cols = tuple(
        tuple(rows[r][c] for r in range(len(rows) - 1, -1, -1) if c < len(rows[r]))
        for c in range(width))
    return YoungTableau(alphabet, cols)


def knuth_equivalent(w1: Word, w2: Word) -> bool:
    return insert_rows(w1) == insert_rows(w2)


# -- two-column exchange --------------------------------------------------

def _straight(a: Column, b: Column) -> bool:
    """``a b`` is a two-column Young tableau (bottom-justified)."""
    return len(b) <= len(a) and all(a[-r] <= b[-r] for r in range(1, len(b) + 1))


def _dual(c: Column, n: int) -> Column:
    return tuple(sorted((n + 1 - x for x in c), reverse=True))


def _exchange_straight(a: Column, b: Column) -> tuple[Column, Column]:
    # b is shorter; trade the largest unmatched entry of b for the largest
    # free entry of a below it until b sits inside a.
    a_set = set(a)
    b_set = set(b)
    while True:
        extra = b_set - a_set
        if not extra:
            break
        top = max(extra)
        candidates = [x for x in a_set - b_set if x <= top]
        if not candidates:
            raise ValueError(f"no exchange for columns {a} {b}")
        b_set.remove(top)
        b_set.add(max(candidates))
    left = column(b_set)
    rest = Counter(a) + Counter(b)
    rest.subtract(left)
    return left, column(rest.elements())


def column_exchange(a: Column, b: Column) -> tuple[Column, Column]:
    """Swap the heights of two adjacent columns inside their plactic class.

    If ``a`` is at least as tall as ``b`` the pair must form a Young
    tableau; otherwise the shorter ``a`` must sit top-aligned against ``b``
    with weakly increasing rows (the skew configuration a jeu de taquin
    slide produces).  Raises :class:`ValueError` for any other pair.
    """
    a, b = tuple(a), tuple(b)
    if len(a) >= len(b):
        if not _straight(a, b):
            raise ValueError(f"columns {a} {b} do not form a tableau")
        if len(a) == len(b):
            return a, b
        return _exchange_straight(a, b)
    # reversing the word and complementing the values maps plactic classes
    # to plactic classes and turns the skew pair into a straight one
    n = max(b[0], a[0] if a else 0)
    da, db = _dual(a, n), _dual(b, n)
    if not _straight(db, da):
        raise ValueError(f"columns {a} {b} are not a skew tableau pair")
    p, q = _exchange_straight(db, da)
    return _dual(q, n), _dual(p, n)


# -- frank words ----------------------------------------------------------

@dataclass(frozen=True)
class FrankWord:
    columns: tuple[Column, ...]
    heights: tuple[int, ...]

    def word(self) -> tuple[int, ...]:
        return tuple(x for c in self.columns for x in c)

    def format(self, alphabet: int) -> str:
        return format_columns(alphabet, self.columns)


def frank_word(t: YoungTableau, heights: Sequence[int]) -> FrankWord:
    """The column factorisation with the given heights in the class of ``t``.

    ``heights`` must be a rearrangement of ``t.shape``.  Columns are brought
    into place one position at a time by moving a column of the wanted
    height leftwards through taller neighbours.
    """
    heights = tuple(heights)
    if sorted(heights) != sorted(t.shape):
        raise ValueError(f"{heights} is not a rearrangement of {t.shape}")
    cols = list(t.columns)
    for k, h in enumerate(heights):
        # cols[k:] is a straight tableau here, so heights decrease
        j = next(i for i in range(k, len(cols)) if len(cols[i]) == h)
        for i in range(j, k, -1):
            cols[i - 1], cols[i] = column_exchange(cols[i - 1], cols[i])
    return FrankWord(tuple(cols), heights)


def left_factor(t: YoungTableau, k: int) -> Column:
    """First column after sliding column ``k`` (0-based) to the front."""
    cols = t.columns
    cur = cols[k]
    for i in range(k - 1, -1, -1):
        cur, _ = column_exchange(cols[i], cur)
    return cur


def right_factor(t: YoungTableau, k: int) -> Column:
    """Last column after sliding column ``k`` (0-based) to the end."""
    cols = t.columns
    cur = cols[k]
    for i in range(k + 1, len(cols)):
        _, cur = column_exchange(cur, cols[i])
    return cur


def left_key_classical(t: YoungTableau) -> YoungTableau:
    return YoungTableau(t.alphabet,
                        tuple(left_factor(t, k) for k in range(len(t))))


def right_key_classical(t: YoungTableau) -> YoungTableau:
    return YoungTableau(t.alphabet,
                        tuple(right_factor(t, k) for k in range(len(t))))
