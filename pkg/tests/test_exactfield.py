from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from conftest import int_matrices, scalars, small_ints
from toric_basic.exactfield import (ExactMatrix, QuadraticScalar, determinant,
                                    format_scalar, hermite_normal_form, inverse,
                                    kernel_basis, lattice_rank, parse_scalar, rank,
                                    relative_elementary_divisors, smith_invariants,
                                    solve, zmodule_equal, zmodule_membership)

R2 = QuadraticScalar(0, 1, 2)


# scalars

def test_quadratic_with_zero_b_equals_rational():
    assert QuadraticScalar(Fraction(3, 4), 0, 2) == Fraction(3, 4)
    assert hash(QuadraticScalar(Fraction(3, 4), 0, 2)) == hash(Fraction(3, 4))


def test_sqrt2_squared_is_two():
    assert R2 * R2 == 2
    assert (1 + R2) * (1 - R2) == -1


def test_mixed_fields_rejected():
    with pytest.raises(ValueError):
        R2 + QuadraticScalar(0, 1, 3)


def test_non_squarefree_radicand_rejected():
    with pytest.raises(ValueError):
        QuadraticScalar(0, 1, 4)


def test_sign_of_irrational():
    assert (R2 - Fraction(141, 100)).sign() == 1
    assert (R2 - Fraction(142, 100)).sign() == -1
    assert QuadraticScalar(-3, 2, 2).sign() == -1  # 2*sqrt2 < 3


@pytest.mark.parametrize("text, value", [
    ("3", Fraction(3)), ("-2/6", Fraction(-1, 3)), ("sqrt(2)", R2),
    ("1-sqrt(2)", 1 - R2), ("1/2+3/4*sqrt(2)", Fraction(1, 2) + Fraction(3, 4) * R2),
    ("-sqrt(2)", -R2),
])
def test_parse_scalar(text, value):
    assert parse_scalar(text, 2) == value


@pytest.mark.parametrize("text", ["", "1/0", "abc", "sqrt(3)", "1.5"])
def test_parse_scalar_rejects(text):
    with pytest.raises(ValueError):
        parse_scalar(text, 2)


@given(scalars())
def test_format_parse_round_trip(x):
    assert parse_scalar(format_scalar(x), 2) == x


@given(scalars(), scalars(), scalars())
def test_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x and x * y == y * x
    assert x - x == 0
    if x:
        assert x * (1 / x) == 1


@given(scalars(), scalars())
def test_order_is_compatible_with_addition(x, y):
    assert (x < y) == ((y - x).sign() > 0)


# matrices

@pytest.mark.parametrize("M, r", [
    ([[1, 0], [0, 1]], 2),
    ([[1, 0, -1], [0, 1, -1]], 2),
    ([[1, R2], [R2, 2]], 1),
])
def test_rank_examples(M, r):
    assert rank(ExactMatrix(M)) == r


def test_kernel_examples():
    assert kernel_basis(ExactMatrix([[1, 0], [0, 1]])) == []
    K = kernel_basis(ExactMatrix([[1, 0, -1, 1], [0, 1, -1, 0]]))
    assert K == [(1, 1, 1, 0), (-1, 0, 0, 1)]
    K = kernel_basis(ExactMatrix([[1, 0, -1, 0], [0, 1, 0, -R2]]))
    assert K == [(1, 0, 1, 0), (0, R2, 0, 1)]


@given(int_matrices())
def test_rank_nullity_and_kernel(M):
    A = ExactMatrix(M)
    K = kernel_basis(A)
    assert rank(A) + len(K) == A.cols
    for v in K:
        assert all(x == 0 for x in A @ v)
    if K:
        assert rank(ExactMatrix([list(v) for v in K])) == len(K)


@given(st.lists(st.tuples(scalars(), scalars(), scalars()), min_size=1, max_size=3))
def test_rank_nullity_quadratic(rows):
    A = ExactMatrix([list(r) for r in rows], field=2)
    K = kernel_basis(A)
    assert rank(A) + len(K) == 3
    for v in K:
        assert all(x == 0 for x in A @ v)


@given(int_matrices(rows=st.just(3), cols=st.just(3)))
def test_inverse_and_determinant(M):
    A = ExactMatrix(M)
    if determinant(A) == 0:
        with pytest.raises(ZeroDivisionError):
            inverse(A)
        assert rank(A) < 3
    else:
        assert A @ inverse(A) == ExactMatrix.identity(3)


@given(int_matrices(rows=st.just(3), cols=st.just(3)), st.tuples(small_ints, small_ints, small_ints))
def test_solve(M, x):
    A = ExactMatrix(M)
    b = A @ x
    y = solve(A, b)
    assert y is not None and A @ y == b


# lattices

@pytest.mark.parametrize("A, H", [
    ([[1, 0], [0, 1]], [[1, 0], [0, 1]]),
    ([[2, 0], [0, 3]], [[2, 0], [0, 3]]),
    ([[2, 4], [1, 3]], [[1, 1], [0, 2]]),
])
def test_hnf_examples(A, H):
    H2, U = hermite_normal_form(A)
    assert H2 == H
    assert abs(determinant(U)) == 1
    assert ExactMatrix(U) @ ExactMatrix(A) == ExactMatrix(H2)


@given(int_matrices())
def test_hnf_properties(A):
    H, U = hermite_normal_form(A)
    assert abs(determinant(U)) == 1
    assert ExactMatrix(U) @ ExactMatrix(A) == ExactMatrix(H)
    lead = -1
    for row in H:
        nz = [j for j, x in enumerate(row) if x]
        if not nz:
            continue
        j = nz[0]
        assert j > lead and row[j] > 0
        assert all(0 <= r[j] < row[j] for r in H[:H.index(row)])
        lead = j


def _brute_member(gens, v, bound=6):
    for cs in product(range(-bound, bound + 1), repeat=len(gens)):
        if all(sum(c * g[k] for c, g in zip(cs, gens)) == v[k] for k in range(len(v))):
            return True
    return False


@pytest.mark.parametrize("gens, v, expected", [
    ([(1, 0), (0, 2)], (3, 4), True),
    ([(1, 0), (0, 2)], (0, 1), False),
    ([(1, 1), (1, -1)], (2, 0), True),
    ([(Fraction(1, 2), 0), (0, 1)], (Fraction(3, 2), 1), True),
    ([(1, 0), (0, R2)], (0, 2 * R2), True),
    ([(1, 0), (0, R2)], (0, 1), False),
])
def test_membership_examples(gens, v, expected):
    assert zmodule_membership(gens, v) is expected


@given(st.lists(st.tuples(small_ints, small_ints), min_size=1, max_size=3),
       st.tuples(small_ints, small_ints))
def test_membership_matches_brute_force(gens, v):
    # rank-2 lattices in Z^2 reach small vectors with small coefficients
    if lattice_rank(gens) == 2 or not any(v):
        if zmodule_membership(gens, v):
            return
        assert not _brute_member(gens, v, bound=4)


def test_zmodule_equal_examples():
    assert zmodule_equal([(1, 0), (0, 1)], [(1, 1), (0, 1)])
    assert not zmodule_equal([(1, 0), (0, 1)], [(1, 0), (0, 2)])
    X = [(2, 3), (5, 7)]
    assert zmodule_equal(X, X)


@given(st.lists(st.tuples(small_ints, small_ints, small_ints), min_size=1, max_size=4),
       st.randoms(use_true_random=False))
def test_zmodule_equal_invariance(gens, rnd):
    shuffled = list(gens)
    rnd.shuffle(shuffled)
    assert zmodule_equal(gens, shuffled)
    # elementary unimodular recombination: g_i += c * g_j
    if len(gens) > 1:
        i, j = rnd.sample(range(len(gens)), 2)
        c = rnd.randint(-3, 3)
        moved = list(gens)
        moved[i] = tuple(a + c * b for a, b in zip(gens[i], gens[j]))
        assert zmodule_equal(gens, moved) and zmodule_equal(moved, gens)
    doubled = [tuple(2 * x for x in g) for g in gens]
    assert zmodule_equal(gens, doubled) == all(not any(g) for g in gens)


def test_smith_and_relative_divisors():
    assert smith_invariants([[2, 4], [1, 3]]) == [1, 2]
    assert smith_invariants([[2, 0], [0, 3]]) == [1, 6]
    assert relative_elementary_divisors([(2, 0), (0, 1)], [(1, 0), (0, 1)]) == (1, 2)
    assert relative_elementary_divisors([(1, 0)], [(1, 0), (0, 1)]) == (1, 0)
    with pytest.raises(ValueError):
        relative_elementary_divisors([(Fraction(1, 2), 0)], [(1, 0), (0, 1)])


@given(int_matrices(rows=st.integers(1, 3), cols=st.integers(1, 3)))
def test_smith_product_matches_gcd_of_minors(A):
    # product of invariants = gcd of the maximal nonzero minors (rank r)
    from itertools import combinations
    from math import gcd
    inv = smith_invariants(A)
    r = rank(ExactMatrix(A))
    assert len(inv) == r
    if r == 0:
        return
    g = 0
    for rows in combinations(range(len(A)), r):
        for cols in combinations(range(len(A[0])), r):
            g = gcd(g, int(determinant([[A[i][j] for j in cols] for i in rows])))
    p = 1
    for x in inv:
        p *= x
    assert p == abs(g)
    assert all(inv[k + 1] % inv[k] == 0 for k in range(len(inv) - 1))
