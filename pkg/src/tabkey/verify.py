"""Identity checks run by ``tabkey verify`` and the acceptance tests.

Every check compares two independent routes (elimination against frank
words, closed formula against brute force, map against inverse) over an
exhaustive or seeded-random corpus and returns a :class:`CheckResult`.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import factorial
from typing import Callable, Iterable, Iterator

from . import asm as A
from . import enumeration as E
from . import plactic as P
from . import signmatrix as S
from .tableau import (Column, YoungTableau, all_tableaux, complement, is_key,
                      parse_tableau, random_tableau)

SEED = 20240611


@dataclass
class CheckResult:
    name: str
    passed: bool
    checked: int
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" ({self.detail})" if self.detail else ""
        return f"[{status}] {self.name}: {self.checked} cases{extra}"


def _run(name: str, cases: Iterable, predicate: Callable) -> CheckResult:
    count = 0
    for case in cases:
        count += 1
        ok = predicate(case)
        if not ok:
            return CheckResult(name, False, count, f"counterexample: {case}")
    return CheckResult(name, True, count)


# -- corpora ----------------------------------------------------------------

def tableau_corpus(max_alphabet: int = 4, max_columns: int = 4,
                   random_count: int = 1000, random_alphabet: int = 6,
                   random_columns: int = 6, seed: int = SEED) -> list[YoungTableau]:
    """All tableaux up to the given bounds plus seeded random larger ones."""
    corpus = [t for n in range(1, max_alphabet + 1)
              for t in all_tableaux(n, max_columns)]
    rng = random.Random(seed)
    corpus += [random_tableau(rng, random_alphabet, random_columns)
               for _ in range(random_count)]
    return corpus


def asm_corpus(max_size: int) -> list[S.SignMatrix]:
    return [m for n in range(1, max_size + 1) for m in E.enumerate_asms(n)]


# -- worked examples ------------------------------------------------------------

RUNNING = "n=5: 4,2,1 | 5,2 | 5"
FIVE_COLUMN = "n=6: 5,2,1 | 5,4,2 | 5,4 | 6,4 | 6"
FOUR_COLUMN = "n=6: 5,2,1 | 5,4,2 | 5,4 | 6"

FIVE_COLUMN_MATRIX = ((0, 0, 0, 0, 0, 1), (0, 0, 0, 1, 0, 0), (0, 0, 0, 0, 1, -1),
                (0, 1, 0, 0, 0, 0), (1, 0, 0, -1, 0, 0))
FIVE_COLUMN_STEP1 = ((0, 0, 0, 0, 1, 0), (0, 0, 0, 1, 0, 0), (0, 0, 0, 0, 0, 0),
               (0, 1, 0, 0, 0, 0), (1, 0, 0, -1, 0, 0))
FIVE_COLUMN_KEY = ((0, 0, 0, 0, 1, 0), (0, 1, 0, 0, 0, 0), (0, 0, 0, 0, 0, 0),
             (1, 0, 0, 0, 0, 0), (0, 0, 0, 0, 0, 0))
FIVE_COLUMN_PSEUDO = ((0, 0, 0, 0, 1, 0), (1, 0, 0, 0, 0, 0), (0, 0, 0, 0, 0, 0),
                (0, 1, 0, 0, 0, 0), (0, 0, 0, 0, 0, 0))
FOUR_COLUMN_MATRIX = ((0, 0, 0, 0, 0, 1), (0, 0, 0, 1, 1, -1),
                      (0, 1, 0, 0, 0, 0), (1, 0, 0, -1, 0, 0))


def worked_examples() -> Iterator[tuple[str, bool]]:
    t = parse_tableau(RUNNING)
    t5 = parse_tableau(FIVE_COLUMN)
    m = S.from_tableau(t5)
    yield "four-column tableau matrix", \
        S.from_tableau(parse_tableau(FOUR_COLUMN)).entries == FOUR_COLUMN_MATRIX
    yield "five-column matrix", m.entries == FIVE_COLUMN_MATRIX
    steps = list(S.elimination_steps(m))
    yield "elimination steps", [s.entries for s in steps] == [FIVE_COLUMN_STEP1, FIVE_COLUMN_KEY]
    yield "left key U", str(S.to_tableau(steps[-1])) == "n=6: 5,2,1 | 5,2,1 | 5,2 | 5,2 | 5"
    yield "pseudo-key", S.pseudo_key(m).entries == FIVE_COLUMN_PSEUDO
    yield "pseudo-key differs from key", S.pseudo_key(m).entries != FIVE_COLUMN_KEY
    yield "running left key", str(S.left_key_elimination(t)) == "n=5: 4,2,1 | 4,2 | 4"
    yield "running right key", str(S.right_key_via_complement(t)) == "n=5: 5,2,1 | 5,2 | 5"
    yield "five-column right key", \
        str(S.right_key_via_complement(t5)) == "n=6: 6,4,2 | 6,4,2 | 6,4 | 6,4 | 6"
    yield "five-column complement", \
        str(complement(t5)) == "n=6: 5,4,3,2,1 | 5,3,2,1 | 6,3,2,1 | 6,3,1 | 6,4,3"
    yield "complement left key", str(S.left_key_elimination(complement(t5))) == \
        "n=6: 5,4,3,2,1 | 5,3,2,1 | 5,3,2,1 | 5,3,1 | 5,3,1"


def check_worked_examples() -> CheckResult:
    results = list(worked_examples())
    failed = [name for name, ok in results if not ok]
    return CheckResult("worked examples", not failed, len(results),
                       f"failed: {failed}" if failed else "")


# -- tableau identities -----------------------------------------------------------

def check_left_keys(corpus) -> CheckResult:
    return _run("left key: elimination = frank words", corpus,
                lambda t: S.left_key_elimination(t) == P.left_key_classical(t))


def check_right_keys(corpus) -> CheckResult:
    return _run("right key: complement route = frank words", corpus,
                lambda t: S.right_key_via_complement(t) == P.right_key_classical(t)
                and complement(P.right_key_classical(t))
                == P.left_key_classical(complement(t)))


def check_keys_are_keys(corpus) -> CheckResult:
    return _run("keys nest and keep the shape", corpus,
                lambda t: all(is_key(k) and k.shape == t.shape
                              for k in (P.left_key_classical(t), P.right_key_classical(t))))


def exchange_pairs(corpus) -> set[tuple[Column, Column]]:
    """Every column pair handed to ``column_exchange`` while computing the
    left and right factors of the corpus tableaux."""
    pairs = set()
    for t in corpus:
        cols = t.columns
        for k in range(len(cols)):
            cur = cols[k]
            for i in range(k - 1, -1, -1):
                pairs.add((cols[i], cur))
                cur = P.column_exchange(cols[i], cur)[0]
            cur = cols[k]
            for i in range(k + 1, len(cols)):
                pairs.add((cur, cols[i]))
                cur = P.column_exchange(cur, cols[i])[1]
    return pairs


def brute_force_exchanges(a: Column, b: Column) -> list[tuple[Column, Column]]:
    """All column pairs with heights ``(|b|, |a|)`` plactic-equivalent to ``ab``.

    Only pairs with the same content are tried; insertion preserves content.
    """
    target = a + b
    pool = sorted(set(target))
    found = []
    for left in combinations(pool, len(b)):
        rest = list(target)
        for x in left:
            rest.remove(x)
        if len(set(rest)) != len(rest):
            continue
        x_col = tuple(sorted(left, reverse=True))
        y_col = tuple(sorted(rest, reverse=True))
        if P.knuth_equivalent(x_col + y_col, target):
            found.append((x_col, y_col))
    return found


def check_exchange_oracle(pairs) -> CheckResult:
    return _run("column exchange = unique brute-force pair", sorted(pairs),
                lambda ab: brute_force_exchanges(*ab) == [P.column_exchange(*ab)])


def check_complement_identities(corpus) -> CheckResult:
    def ok(t):
        c = complement(t)
        return (complement(c) == t
                and c.shape == tuple(t.alphabet - h for h in reversed(t.shape))
                and not S.complement_row_mismatches(t, offset=2))
    return _run("complement involution and shifted matrix rows", corpus, ok)


def check_sign_matrix_bijection(max_rows: int = 4, max_cols: int = 5) -> CheckResult:
    def cases():
        for m in range(max_rows + 1):
            for n in range(max_cols + 1):
                yield from S.all_sign_matrices(m, n)

    def ok(mat):
        t = S.to_tableau(mat)
        return (S.from_tableau(t) == mat and len(t) == mat.rows
                and is_key(t) == (mat.count(-1) == 0))
    return _run("sign matrix <-> tableau round trip, key iff no -1", cases(), ok)


def check_tableau_round_trip(corpus) -> CheckResult:
    return _run("tableau -> sign matrix -> tableau", corpus,
                lambda t: S.to_tableau(S.from_tableau(t)) == t
                and is_key(t) == (S.from_tableau(t).count(-1) == 0))


# -- ASM identities -------------------------------------------------------------

def check_asm_keys(asms) -> CheckResult:
    def ok(m):
        k = A.key_of_asm(m)
        A.permutation_of(k)
        tri = A.asm_to_monotone(m)
        key_tri = A.asm_to_monotone(k)
        return (key_tri == P.left_key_classical(tri) == S.left_key_elimination(tri)
                and A.monotone_to_asm(tri) == m)
    return _run("ASM key is a permutation and matches both tableau keys", asms, ok)


def check_pseudo_keys(asms, orders: int = 20, seed: int = SEED) -> CheckResult:
    rng = random.Random(seed)

    def ok(m):
        pk = A.pseudo_key_of_asm(m)
        A.permutation_of(pk)
        if any(A.pseudo_key_of_asm(m, rng) != pk for _ in range(orders)):
            return False
        k = A.key_of_asm(m)
        return A.asm_leq(pk, k) and A.asm_leq(k, m)
    return _run(f"pseudo-key order independence ({orders} orders), pK <= K <= M",
                asms, ok)


def check_lattice_closure(max_exhaustive: int = 4, sampled=(5, 6),
                          samples: int = 10_000, seed: int = SEED) -> CheckResult:
    rng = random.Random(seed)

    def cases():
        for n in range(1, max_exhaustive + 1):
            tris = [A.asm_to_monotone(m) for m in E.enumerate_asms(n)]
            for t1 in tris:
                for t2 in tris:
                    yield t1, t2
        for n in sampled:
            tris = [A.asm_to_monotone(m) for m in E.enumerate_asms(n)]
            for _ in range(samples):
                yield rng.choice(tris), rng.choice(tris)

    def ok(pair):
        t1, t2 = pair
        hi, lo = A.mt_sup(t1, t2), A.mt_inf(t1, t2)
        return (A.is_monotone_triangle(hi) and A.is_monotone_triangle(lo)
                and A.mt_leq(lo, t1) and A.mt_leq(t1, hi))
    return _run("sup/inf of monotone triangles are monotone triangles", cases(), ok)


def check_lattice_laws(sizes=(3, 4, 5, 6), triples: int = 2000,
                       seed: int = SEED) -> CheckResult:
    rng = random.Random(seed)

    def cases():
        for n in sizes:
            tris = [A.asm_to_monotone(m) for m in E.enumerate_asms(n)]
            for _ in range(triples):
                yield tuple(rng.choice(tris) for _ in range(3))

    def ok(triple):
        x, y, z = triple
        sup, inf = A.mt_sup, A.mt_inf
        return (sup(x, x) == x and inf(x, x) == x
                and sup(x, y) == sup(y, x) and inf(x, y) == inf(y, x)
                and sup(sup(x, y), z) == sup(x, sup(y, z))
                and inf(inf(x, y), z) == inf(x, inf(y, z))
                and inf(x, sup(x, y)) == x and sup(x, inf(x, y)) == x)
    return _run("lattice laws on random triples", cases(), ok)


# -- enumeration ---------------------------------------------------------------

ASM_TOTALS = {1: 1, 2: 2, 3: 7, 4: 42, 5: 429, 6: 7436, 7: 218348}


def check_census(max_size: int, jobs: int = 1) -> CheckResult:
    def ok(n):
        c = E.census(n, jobs=jobs)
        return (c.total == ASM_TOTALS[n]
                and c.counts.get(0) == factorial(n)
                and c.counts.get(1, 0) == E.a_n_1(n) == E.count_132_bruteforce(n)
                and (n > 6 or c.counts.get(2, 0) == E.a_n_2(n))
                and E.count_132(n) == E.count_132_bruteforce(n))
    return _run("census totals and closed formulas", range(1, max_size + 1), ok)


def check_marked_patterns(max_size: int) -> CheckResult:
    def ok(n):
        ones = [m for m in E.enumerate_asms(n) if m.count(-1) == 1]
        patterns = [E.marked_pattern_of(m) for m in ones]
        if len(set(patterns)) != len(ones):
            return False
        if any(E.asm_of_marked_pattern(p) != m for p, m in zip(patterns, ones)):
            return False
        every = list(E.all_marked_patterns(n))
        return (len(every) == len(ones) and set(every) == set(patterns)
                and all(E.marked_pattern_of(E.asm_of_marked_pattern(p)) == p
                        for p in every))
    return _run("one -1 ASMs <-> marked 132 patterns", range(1, max_size + 1), ok)


def run_all(max_size: int = 5, tableau_alphabet: int = 4, jobs: int = 1,
            random_count: int = 1000) -> list[CheckResult]:
    corpus = tableau_corpus(max_alphabet=tableau_alphabet, random_count=random_count)
    asms = asm_corpus(max_size)
    census_size = max(max_size, 6)
    return [
        check_worked_examples(),
        check_left_keys(corpus),
        check_right_keys(corpus),
        check_keys_are_keys(corpus),
        check_exchange_oracle(exchange_pairs(corpus)),
        check_complement_identities(corpus),
        check_tableau_round_trip(corpus),
        check_sign_matrix_bijection(),
        check_asm_keys(asms),
        check_pseudo_keys(asms),
        check_lattice_closure(max_exhaustive=min(max_size, 4)),
        check_lattice_laws(),
        check_census(census_size, jobs=jobs),
        check_marked_patterns(min(max_size, 5)),
    ]
