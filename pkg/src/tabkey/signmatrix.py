"""Sign matrices, the tableau bijection, and keys by eliminating -1 entries.

Positions in the public API are 1-based ``(row, col)`` pairs with row 1 at
the top.  Row ``i`` of the matrix of an ``l``-column tableau records which
entries appear (+1) and disappear (-1) going from column ``l-i+2`` to
column ``l-i+1``.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from . import kernels
from .tableau import ParseError, YoungTableau, column, complement

Position = tuple[int, int]


class SignMatrixError(ValueError):
    pass


@dataclass(frozen=True)
class SignMatrix:
    entries: tuple[tuple[int, ...], ...]
    cols: int = -1

    def __post_init__(self):
        entries = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", entries)
        cols = len(entries[0]) if entries else max(self.cols, 0)
        if self.cols >= 0 and entries and self.cols != cols:
            raise SignMatrixError(f"declared {self.cols} columns, rows have {cols}")
        object.__setattr__(self, "cols", cols)
        _check(entries, cols)

    @property
    def rows(self) -> int:
        return len(self.entries)

    def __getitem__(self, pos: Position) -> int:
        i, j = pos
        return self.entries[i - 1][j - 1]

    def __str__(self) -> str:
        return format_matrix(self)

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def count(self, value: int) -> int:
        return sum(row.count(value) for row in self.entries)

    def minus_ones(self) -> list[Position]:
        return [(i, j) for i, row in enumerate(self.entries, 1)
                for j, x in enumerate(row, 1) if x == -1]


def _check(entries, cols: int) -> None:
    prefix = [0] * cols
    for i, row in enumerate(entries, 1):
        if len(row) != cols:
            raise SignMatrixError(f"row {i} has {len(row)} entries, expected {cols}")
        run = 0
        for j, x in enumerate(row, 1):
            if x not in (-1, 0, 1):
                raise SignMatrixError(f"entry ({i},{j}) = {x} not in {{-1,0,1}}")
            prefix[j - 1] += x
            if prefix[j - 1] not in (0, 1):
                raise SignMatrixError(f"column prefix sum at ({i},{j}) is {prefix[j - 1]}")
            run += x
            if run < 0:
                raise SignMatrixError(f"row prefix sum at ({i},{j}) is negative")


# -- bijection --------------------------------------------------------------

def from_tableau(t: YoungTableau) -> SignMatrix:
    n = t.alphabet
    rows = []
    previous: set[int] = set()
    for col in reversed(t.columns):
        current = set(col)
        rows.append(tuple((j in current) - (j in previous) for j in range(1, n + 1)))
        previous = current
    return SignMatrix(tuple(rows), n)


def to_tableau(m: SignMatrix) -> YoungTableau:
    prefix = [0] * m.cols
    cols = []
    for row in m.entries:
        prefix = [p + x for p, x in zip(prefix, row)]
        cols.append(column(j for j, p in enumerate(prefix, 1) if p))
    return YoungTableau(m.cols, tuple(reversed(cols)))


# -- elimination ------------------------------------------------------------

def find_removable(m: SignMatrix) -> Position | None:
    """The rightmost -1 of the topmost row containing a -1, if any."""
    pos = kernels.find_removable(m.entries)
    return None if pos is None else (pos[0] + 1, pos[1] + 1)


def _require_removable(m: SignMatrix, p: Position) -> None:
    if find_removable(m) != tuple(p):
        raise SignMatrixError(f"{p} is not the removable -1 of this matrix")


def neighbours(m: SignMatrix, p: Position) -> list[Position]:
    """The 1-entries framing the removable -1 at ``p``, top row first."""
    _require_removable(m, p)
    a, b = p
    return [(i + 1, j + 1) for i, j in kernels.neighbours(m.entries, a - 1, b - 1)]


def remove_minus_one(m: SignMatrix, p: Position) -> SignMatrix:
    """Zero the -1 at ``p`` and its neighbours, then put a 1 at each inner
    corner ``(r_k, c_{k+1})`` of the neighbour staircase."""
    nb = neighbours(m, p)
    rows = m.to_lists()
    a, b = p
    rows[a - 1][b - 1] = 0
    for i, j in nb:
        rows[i - 1][j - 1] = 0
    for (i, _), (_, j) in zip(nb, nb[1:]):
        rows[i - 1][j - 1] = 1
    return SignMatrix(tuple(map(tuple, rows)), m.cols)


def elimination_steps(m: SignMatrix) -> Iterator[SignMatrix]:
    """Yield the matrix after each single removal, ending at the key."""
    while (p := find_removable(m)) is not None:
        m = remove_minus_one(m, p)
        yield m


def eliminate(m: SignMatrix) -> SignMatrix:
    """Remove every -1 in the normative order (compiled kernel when built)."""
    if not m.rows or not m.cols:
        return m
    return SignMatrix(tuple(map(tuple, kernels.eliminate_rows(m.entries))), m.cols)


def left_key_elimination(t: YoungTableau) -> YoungTableau:
    return to_tableau(eliminate(from_tableau(t)))


def right_key_via_complement(t: YoungTableau) -> YoungTableau:
    return complement(left_key_elimination(complement(t)))


# -- pseudo-key -------------------------------------------------------------

def pseudo_eligible(m: SignMatrix) -> list[Position]:
    """-1 entries with no other -1 weakly north-west of them."""
    out = []
    for a, b in m.minus_ones():
        if not any(m[k, l] == -1 for k in range(1, a + 1) for l in range(1, b + 1)
                   if (k, l) != (a, b)):
            out.append((a, b))
    return out


def pseudo_remove(m: SignMatrix, p: Position) -> SignMatrix:
    """Collapse the rectangle ``1 .. 1 / 1 .. -1`` at ``p`` to a single 1 at
    its north-west corner."""
    a, b = p
    if not (1 <= a <= m.rows and 1 <= b <= m.cols) or m[a, b] != -1:
        raise SignMatrixError(f"no -1 at {p}")
    if p not in pseudo_eligible(m):
        raise SignMatrixError(f"-1 at {p} has another -1 in its north-west quadrant")
    k = next(r for r in range(a - 1, 0, -1) if m[r, b] == 1)
    l = next(c for c in range(b - 1, 0, -1) if m[a, c] == 1)
    rows = m.to_lists()
    rows[a - 1][b - 1] = 0
    rows[k - 1][b - 1] = 0
    rows[a - 1][l - 1] = 0
    rows[k - 1][l - 1] = 1
    return SignMatrix(tuple(map(tuple, rows)), m.cols)


def pseudo_key(m: SignMatrix, rng: random.Random | None = None) -> SignMatrix:
    """Fixed point of :func:`pseudo_remove`.

    Without ``rng`` the topmost, then leftmost, eligible -1 goes first;
    with ``rng`` a random eligible -1 is chosen at every step.
    """
    while True:
        eligible = pseudo_eligible(m)
        if not eligible:
            return m
        p = rng.choice(eligible) if rng is not None else min(eligible)
        m = pseudo_remove(m, p)


# -- enumeration of small sign matrices ---------------------------------------

def all_sign_matrices(rows: int, cols: int) -> Iterator[SignMatrix]:
    """Every ``rows x cols`` sign matrix, built row by row."""
    def row_options(prefix):
        choices = [(0, 1) if p == 0 else (-1, 0) for p in prefix]

        def walk(j, run, acc):
            if j == cols:
                yield tuple(acc)
                return
            for x in choices[j]:
                if run + x >= 0:
                    acc.append(x)
                    yield from walk(j + 1, run + x, acc)
                    acc.pop()
        return walk(0, 0, [])

    def grow(prefix, acc):
        if len(acc) == rows:
            yield SignMatrix(tuple(acc), cols)
            return
        for r in list(row_options(prefix)):
            acc.append(r)
            yield from grow([p + x for p, x in zip(prefix, r)], acc)
            acc.pop()

    yield from grow([0] * cols, [])


# -- text / JSON ------------------------------------------------------------

_COMPACT = {-1: "-", 0: ".", 1: "+"}


def format_matrix(m: SignMatrix) -> str:
    return "\n".join(" ".join(str(x) for x in row) for row in m.entries)


def format_compact(m: SignMatrix) -> str:
    return "\n".join("".join(_COMPACT[x] for x in row) for row in m.entries)


def matrix_to_json(m: SignMatrix) -> dict:
    return {"rows": m.rows, "cols": m.cols, "entries": [list(r) for r in m.entries]}


def matrix_from_json(data: dict | str) -> SignMatrix:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        entries = tuple(tuple(r) for r in data["entries"])
        rows, cols = int(data["rows"]), int(data["cols"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad matrix JSON: {exc}") from exc
    if len(entries) != rows:
        raise ParseError(f"declared {rows} rows, found {len(entries)}")
    return SignMatrix(entries, cols)


def parse_matrix_rows(text: str) -> list[list[int]]:
    """Parse the spaced-integer or the compact ``.+-`` format into rows."""
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    rows = []
    offset = 0
    compact = {v: k for k, v in _COMPACT.items()}
    for ln in lines:
        if set(ln) <= set(".+-"):
            rows.append([compact[ch] for ch in ln])
        else:
            try:
                rows.append([int(tok) for tok in ln.split()])
            except ValueError:
                raise ParseError(f"bad matrix row {ln!r}", offset) from None
        offset += len(ln) + 1
    return rows


def parse_matrix(text: str, cols: int | None = None) -> SignMatrix:
    rows = parse_matrix_rows(text)
    if not rows:
        return SignMatrix((), cols or 0)
    return SignMatrix(tuple(map(tuple, rows)), len(rows[0]))


def complement_row_mismatches(t: YoungTableau, offset: int) -> Sequence[tuple[int, int, int, int]]:
    """Mismatches between ``M[i][j]`` and ``M'[l-i+offset][j]`` for ``i > 1``,
    where ``M'`` is the matrix of the complement.  Returns ``(i, j, M, M')``
    for every disagreeing or out-of-range cell."""
    m, mc = from_tableau(t), from_tableau(complement(t))
    l = len(t)
    bad = []
    for i in range(2, l + 1):
        r = l - i + offset
        for j in range(1, t.alphabet + 1):
            if not 1 <= r <= l:
                bad.append((i, j, m[i, j], None))
            elif m[i, j] != mc[r, j]:
                bad.append((i, j, m[i, j], mc[r, j]))
    return bad
