"""Deterministic checks of the exact integer linear algebra."""

from fractions import Fraction

from toricarr.linalg import (determinant, elementary_divisors,
                             hermite_normal_form, hnf_basis, integer_kernel,
                             mat_mul, rank, rational_row_reduce, saturate,
                             smith_normal_form, solve_in_lattice)


def test_hermite_normal_form_factorisation():
    m = [[2, 4, 4], [-6, 6, 12], [10, 4, 16]]
    h, u = hermite_normal_form(m)
    assert mat_mul(u, m) == h
    assert abs(determinant(u)) == 1
    # echelon with positive pivots and reduced entries above them
    pivots = []
    for row in h:
        if any(row):
            j = next(k for k, x in enumerate(row) if x)
            assert row[j] > 0
            pivots.append(j)
    assert pivots == sorted(pivots)


def test_smith_normal_form_and_elementary_divisors():
    m = [[2, 4, 4], [-6, 6, 12], [10, 4, 16]]
    d, u, v = smith_normal_form(m)
    assert d == mat_mul(mat_mul(u, m), v)
    # gcd of entries 2, gcd of 2x2 minors 4, determinant 624
    assert elementary_divisors(m) == [2, 2, 156]


def test_integer_kernel_of_a_rank_one_matrix():
    assert integer_kernel([[2, -4]]) == [[2, 1]]
    assert integer_kernel([[1, 0], [0, 1]]) == []


def test_rank_and_saturation():
    m = [[2, 0, 0], [0, 3, 0]]
    assert rank(m) == 2
    basis, index = saturate(m)
    assert basis == [[1, 0, 0], [0, 1, 0]]
    assert index == 6


def test_solve_in_lattice_membership():
    basis = hnf_basis([[2, 0], [0, 3]])
    assert solve_in_lattice(basis, [4, -3]) == [2, -1]
    assert solve_in_lattice(basis, [1, 0]) is None


def test_rational_row_reduce_detects_dependence():
    rows = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
    reduced = rational_row_reduce(rows)
    assert len([r for r in reduced if any(r)]) == 1
