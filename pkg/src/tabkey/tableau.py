"""Columns, Young tableaux, keys and the complement construction.

Tableaux use French notation and are stored as a tuple of columns, each
column a strictly decreasing tuple of entries (read top to bottom).  Rows
are bottom-justified and never stored.  The alphabet bound is an explicit
field because the complement depends on it.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

Column = tuple[int, ...]


class TableauError(ValueError):
    """A candidate tableau violates one of the tableau invariants.

    ``invariant`` names the violated rule: ``"column-order"``,
    ``"positive-entries"``, ``"alphabet-bound"``, ``"height-monotonicity"``
    or ``"row-monotonicity"``.
    """

    def __init__(self, invariant: str, message: str):
        super().__init__(f"{invariant}: {message}")
        self.invariant = invariant


class ParseError(ValueError):
    """Malformed text; ``position`` is the character offset of the problem."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def column(entries: Iterable[int]) -> Column:
    """Return the column holding the given set of entries."""
    return tuple(sorted(set(entries), reverse=True))


def _check_columns(columns: Sequence[Column], alphabet: int) -> None:
    for idx, col in enumerate(columns, start=1):
        for top, below in zip(col, col[1:]):
            if top <= below:
                raise TableauError(
                    "column-order",
                    f"column {idx} {list(col)} is not strictly decreasing")
        if col and col[-1] < 1:
            raise TableauError(
                "positive-entries", f"column {idx} has an entry below 1")
        if col and col[0] > alphabet:
            raise TableauError(
                "alphabet-bound",
                f"column {idx} has entry {col[0]} > alphabet {alphabet}")
        if idx > 1:
            prev = columns[idx - 2]
            if len(col) > len(prev):
                raise TableauError(
                    "height-monotonicity",
                    f"column {idx} is taller than column {idx - 1}")
            # bottom-justified rows: r-th entry from the bottom
            for r in range(1, len(col) + 1):
                if prev[-r] > col[-r]:
                    raise TableauError(
                        "row-monotonicity",
                        f"row {r} decreases between columns {idx - 1} and {idx}")


@dataclass(frozen=True)
class YoungTableau:
    """A Young tableau over the alphabet ``{1, ..., alphabet}``.

    Trailing empty columns are allowed; they arise as complements of full
    columns and as the images of sign matrices with zero top rows.
    """

    alphabet: int
    columns: tuple[Column, ...] = ()

    def __post_init__(self):
        cols = tuple(tuple(c) for c in self.columns)
        object.__setattr__(self, "columns", cols)
        if self.alphabet < 0:
            raise TableauError("alphabet-bound", "alphabet must be >= 0")
        _check_columns(cols, self.alphabet)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.columns)

    def __len__(self) -> int:
        return len(self.columns)

    def __str__(self) -> str:
        return format_tableau(self)

    def box(self, row: int, col: int) -> int:
        """Entry in bottom-justified French coordinates (1-based)."""
        return self.columns[col - 1][-row]

    def with_alphabet(self, alphabet: int) -> YoungTableau:
        return YoungTableau(alphabet, self.columns)


def validate(columns: Iterable[Iterable[int]], alphabet: int) -> YoungTableau:
    """Build a tableau from raw columns, raising :class:`TableauError`."""
    return YoungTableau(alphabet, tuple(tuple(c) for c in columns))


def word(t: YoungTableau) -> tuple[int, ...]:
    return tuple(x for col in t.columns for x in col)


def is_key(t: YoungTableau) -> bool:
    return all(set(right) <= set(left)
               for left, right in zip(t.columns, t.columns[1:]))


def complement(t: YoungTableau) -> YoungTableau:
    """Column ``i`` of the result holds what column ``l-i+1`` of ``t`` lacks."""
    full = set(range(1, t.alphabet + 1))
    return YoungTableau(
        t.alphabet, tuple(column(full - set(c)) for c in reversed(t.columns)))


# -- text / JSON ----------------------------------------------------------

_HEADER = re.compile(r"\s*n\s*=\s*(\d+)\s*:")


def format_columns(alphabet: int, columns: Sequence[Column]) -> str:
    """Canonical text for a column sequence; an empty column prints as ``-``."""
    body = " | ".join(",".join(map(str, c)) if c else "-" for c in columns)
    return f"n={alphabet}: {body}" if body else f"n={alphabet}:"


def format_tableau(t: YoungTableau) -> str:
    return format_columns(t.alphabet, t.columns)


def parse_columns(text: str) -> tuple[int, tuple[Column, ...]]:
    """Parse the text format without checking tableau invariants."""
    m = _HEADER.match(text)
    if not m:
        raise ParseError("expected header 'n=<alphabet>:'", 0)
    alphabet = int(m.group(1))
    rest = text[m.end():]
    if not rest.strip():
        return alphabet, ()
    columns = []
    offset = m.end()
    for chunk in rest.split("|"):
        token = chunk.strip()
        if token == "-":
            columns.append(())
        elif not token:
            raise ParseError("empty column token (use '-')", offset)
        else:
            entries = []
            pos = offset
            for raw in chunk.split(","):
                s = raw.strip()
                if not s.isdigit():
                    raise ParseError(f"bad entry {s!r}", pos)
                entries.append(int(s))
                pos += len(raw) + 1
            columns.append(tuple(entries))
        offset += len(chunk) + 1
    return alphabet, tuple(columns)


def parse_tableau(text: str) -> YoungTableau:
    alphabet, columns = parse_columns(text)
    return YoungTableau(alphabet, columns)


def tableau_to_json(t: YoungTableau) -> dict:
    return {"alphabet": t.alphabet, "columns": [list(c) for c in t.columns]}


def tableau_from_json(data: dict | str) -> YoungTableau:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        return YoungTableau(int(data["alphabet"]),
                            tuple(tuple(c) for c in data["columns"]))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad tableau JSON: {exc}") from exc


# -- generation -----------------------------------------------------------

def _columns_of_alphabet(alphabet: int) -> list[Column]:
    from itertools import combinations
    out = []
    for h in range(alphabet, 0, -1):
        out.extend(tuple(reversed(c))
                   for c in combinations(range(1, alphabet + 1), h))
    return out


def _fits_right_of(left: Column, right: Column) -> bool:
    if len(right) > len(left):
        return False
    return all(left[-r] <= right[-r] for r in range(1, len(right) + 1))


def all_tableaux(alphabet: int, max_columns: int,
                 *, min_columns: int = 0) -> Iterable[YoungTableau]:
    """Every tableau with nonempty columns, entries ``<= alphabet`` and at
    most ``max_columns`` columns, in a deterministic order."""
    cols = _columns_of_alphabet(alphabet)
    followers = {c: [d for d in cols if _fits_right_of(c, d)] for c in cols}

    def extend(prefix: list[Column]):
        if len(prefix) >= min_columns:
            yield YoungTableau(alphabet, tuple(prefix))
        if len(prefix) == max_columns:
            return
        for nxt in (followers[prefix[-1]] if prefix else cols):
            prefix.append(nxt)
            yield from extend(prefix)
            prefix.pop()

    yield from extend([])


def random_tableau(rng, alphabet: int, max_columns: int) -> YoungTableau:
    """A random tableau with 1..max_columns nonempty columns."""
    cols = _columns_of_alphabet(alphabet)
    ncols = rng.randint(1, max_columns)
    prefix = [rng.choice(cols)]
    while len(prefix) < ncols:
        options = [d for d in cols if _fits_right_of(prefix[-1], d)]
        prefix.append(rng.choice(options))
    return YoungTableau(alphabet, tuple(prefix))
