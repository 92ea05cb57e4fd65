import random

import pytest

from tabkey import asm as A
from tabkey.enumeration import enumerate_asms
from tabkey.plactic import left_key_classical
from tabkey.signmatrix import SignMatrix, left_key_elimination, to_tableau
from tabkey.tableau import parse_tableau

EXAMPLE = ((0, 1, 0, 0, 0), (0, 0, 1, 0, 0), (1, -1, 0, 1, 0),
           (0, 1, -1, 0, 1), (0, 0, 1, 0, 0))
CENTER = ((0, 1, 0), (1, -1, 1), (0, 1, 0))


def test_example_asm_is_valid():
    m = A.validate_asm(EXAMPLE)
    assert m.rows == 5


def test_identity_is_asm():
    for n in range(1, 6):
        A.validate_asm(A.permutation_matrix(tuple(range(1, n + 1))))


@pytest.mark.parametrize("rows, message", [
    (((1, 0), (0, 1), (0, 0)), "not square"),
    (((1, -1), (0, 1)), "sums"),
    (((0, 1, 0), (1, 1, -1), (0, -1, 1)), "alternate|sums"),
    ((), "size-0"),
])
def test_invalid_asms(rows, message):
    with pytest.raises(A.AsmError, match=message):
        A.validate_asm(rows)


def test_no_two_by_two_asm_has_a_minus_one():
    import itertools
    for cells in itertools.product((-1, 0, 1), repeat=4):
        rows = (cells[:2], cells[2:])
        if -1 in cells:
            with pytest.raises(A.AsmError):
                A.validate_asm(rows)


def test_example_triangle():
    tri = A.asm_to_monotone(SignMatrix(EXAMPLE))
    assert tri == parse_tableau("n=5: 5,4,3,2,1 | 5,4,2,1 | 4,3,1 | 3,2 | 2")
    assert A.monotone_to_asm(tri).entries == EXAMPLE


def test_render_triangle():
    text = A.render_triangle(A.asm_to_monotone(SignMatrix(EXAMPLE)))
    assert text.splitlines()[0].strip() == "5"
    assert text.splitlines()[-1].split() == ["1", "1", "1", "2", "2"]


def test_monotone_validation():
    with pytest.raises(A.AsmError, match="staircase"):
        A.validate_monotone(parse_tableau("n=3: 3,2,1 | 2,1"))
    # a valid tableau of staircase shape whose diagonal decreases
    with pytest.raises(A.AsmError, match="diagonal"):
        A.validate_monotone(parse_tableau("n=3: 3,2,1 | 2,1 | 3"))


def test_bijection_round_trip_exhaustive():
    for n in range(1, 6):
        for m in enumerate_asms(n):
            tri = A.asm_to_monotone(m)
            assert tri == to_tableau(m)
            assert A.monotone_to_asm(tri) == m


def test_permutation_round_trip():
    import itertools
    for n in range(1, 6):
        for sigma in itertools.permutations(range(1, n + 1)):
            m = A.permutation_matrix(sigma)
            assert A.permutation_of(A.monotone_to_asm(A.asm_to_monotone(m))) == sigma


def test_permutation_of_rejects_minus_one():
    with pytest.raises(A.AsmError):
        A.permutation_of(SignMatrix(CENTER))


def test_center_asm_keys():
    m = SignMatrix(CENTER)
    assert A.permutation_of(A.key_of_asm(m)) == (1, 3, 2)
    assert A.permutation_of(A.pseudo_key_of_asm(m)) == (1, 3, 2)
    assert A.asm_leq(A.pseudo_key_of_asm(m), A.key_of_asm(m))
    assert A.asm_leq(A.key_of_asm(m), m)


def test_permutations_are_their_own_keys():
    for sigma in [(1, 2, 3), (3, 1, 2), (2, 4, 1, 3)]:
        m = A.permutation_matrix(sigma)
        assert A.key_of_asm(m) == m
        assert A.pseudo_key_of_asm(m) == m


def test_example_key_matches_tableau_keys():
    m = SignMatrix(EXAMPLE)
    tri = A.asm_to_monotone(m)
    assert A.asm_to_monotone(A.key_of_asm(m)) == left_key_classical(tri)
    assert A.asm_to_monotone(A.key_of_asm(m)) == left_key_elimination(tri)


def test_key_and_pseudo_key_first_differ_at_size_4():
    def differing(n):
        return [m for m in enumerate_asms(n)
                if A.key_of_asm(m) != A.pseudo_key_of_asm(m)]
    assert [len(differing(n)) for n in range(1, 6)] == [0, 0, 0, 1, 35]
    m, = differing(4)
    assert A.asm_leq(A.pseudo_key_of_asm(m), A.key_of_asm(m))


def test_lattice_orders_keys():
    rng = random.Random(3)
    for n in range(1, 6):
        for m in enumerate_asms(n):
            pk, k = A.pseudo_key_of_asm(m), A.key_of_asm(m)
            assert A.asm_leq(pk, k) and A.asm_leq(k, m)
            assert all(A.pseudo_key_of_asm(m, rng) == pk for _ in range(3))


def test_sup_inf_basics():
    asms = list(enumerate_asms(4))
    tris = [A.asm_to_monotone(m) for m in asms]
    for t1 in tris:
        assert A.mt_sup(t1, t1) == t1
        for t2 in tris[::5]:
            assert A.mt_inf(t1, A.mt_sup(t1, t2)) == t1
            assert A.validate_monotone(A.mt_sup(t1, t2))
    m, n = asms[3], asms[17]
    assert A.asm_leq(A.asm_inf(m, n), m)
    assert A.asm_leq(m, A.asm_sup(m, n))


def test_lattice_extremes_are_identity_and_antidiagonal():
    for n in range(1, 5):
        ident = A.permutation_matrix(tuple(range(1, n + 1)))
        anti = A.permutation_matrix(tuple(range(n, 0, -1)))
        for m in enumerate_asms(n):
            assert A.asm_leq(ident, m) and A.asm_leq(m, anti)


def test_size_mismatch():
    with pytest.raises(A.AsmError, match="size mismatch"):
        A.asm_leq(SignMatrix(CENTER), A.permutation_matrix((1, 2)))
    with pytest.raises(A.AsmError, match="size mismatch"):
        A.mt_sup(A.asm_to_monotone(SignMatrix(CENTER)),
                 A.asm_to_monotone(A.permutation_matrix((1, 2))))
