"""Dense exact linear algebra, cross-checked against sympy."""

from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.matrices.normalforms import smith_normal_form

from spintorus import (
    GaussianRational,
    Matrix,
    NonUnimodularError,
    NotIntegralError,
    mat_rank,
    rank_of_rows,
    smith_form,
    solve_mod1,
)

small_rationals = st.fractions(max_denominator=6)
small_gaussians = st.builds(GaussianRational, small_rationals, small_rationals)


def square_matrices(n):
    return st.lists(
        st.lists(small_gaussians, min_size=n, max_size=n), min_size=n, max_size=n
    ).map(Matrix)


def to_sympy(m: Matrix) -> sympy.Matrix:
    return sympy.Matrix(
        [
            [sympy.Rational(x.re) + sympy.I * sympy.Rational(x.im) for x in row]
            for row in m.entries()
        ]
    )


@settings(max_examples=40)
@given(square_matrices(3))
def test_determinant_matches_sympy(m):
    ours = m.det()
    theirs = sympy.expand(to_sympy(m).det())
    assert sympy.Rational(ours.re) + sympy.I * sympy.Rational(ours.im) == theirs


@settings(max_examples=40)
@given(square_matrices(3), square_matrices(3))
def test_product_matches_sympy(a, b):
    assert to_sympy(a @ b) == sympy.expand(to_sympy(a) * to_sympy(b))


@settings(max_examples=40)
@given(square_matrices(3))
def test_inverse_round_trips(m):
    if m.det() == GaussianRational():
        with pytest.raises(ValueError):
            m.inv()
    else:
        assert m @ m.inv() == Matrix.identity(3)


@settings(max_examples=40)
@given(
    st.lists(
        st.lists(small_gaussians, min_size=5, max_size=5), min_size=3, max_size=3
    )
)
def test_row_rank_matches_sympy(rows):
    gm = [[as_pair(x) for x in row] for row in rows]
    expected = sympy.Matrix(
        [[sympy.Rational(re) + sympy.I * sympy.Rational(im) for re, im in row] for row in gm]
    ).rank()
    assert rank_of_rows(rows) == expected
    assert mat_rank(Matrix(rows)) == expected


def as_pair(x: GaussianRational) -> tuple[Fraction, Fraction]:
    return (x.re, x.im)


int_matrices = st.lists(
    st.lists(st.integers(min_value=-9, max_value=9), min_size=3, max_size=3),
    min_size=3,
    max_size=3,
)


@settings(max_examples=60)
@given(int_matrices)
def test_smith_divisors_match_sympy_and_chain(rows):
    divisors = smith_form(rows)
    snf = smith_normal_form(sympy.Matrix(rows))
    expected = [abs(snf[t, t]) for t in range(3)]
    assert list(divisors) == expected
    for first, second in zip(divisors, divisors[1:]):
        if first == 0:
            assert second == 0
        else:
            assert second % first == 0


def test_smith_examples():
    assert smith_form([[2, 4], [6, 8]]) == (2, 4)
    assert smith_form([[1, 0], [0, 1]]) == (1, 1)
    assert smith_form([[0, 0], [0, 0]]) == (0, 0)
    assert smith_form([[2, 0, 0], [0, 3, 0]]) == (1, 6)


unimodular_seeds = st.lists(
    st.tuples(
        st.integers(min_value=0, max_value=2),
        st.integers(min_value=0, max_value=2),
        st.integers(min_value=-2, max_value=2),
    ),
    min_size=1,
    max_size=5,
)


def shear_product(seeds, n=3):
    rows = [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]
    m = Matrix(rows)
    for r, c, amount in seeds:
        if r == c:
            continue
        shear = [[Fraction(int(a == b)) for b in range(n)] for a in range(n)]
        shear[r][c] = Fraction(amount)
        m = m @ Matrix(shear)
    return m


@settings(max_examples=40)
@given(unimodular_seeds, st.lists(st.fractions(max_denominator=8), min_size=3, max_size=3))
def test_solve_mod1_reproduces_the_target(seeds, target):
    m = shear_product(seeds)
    rows = [[int(x.re) for x in row] for row in m.entries()]
    reduced_target = tuple(t % 1 for t in target)
    x = solve_mod1(rows, reduced_target)
    image = Matrix(rows).matvec(tuple(GaussianRational(v) for v in x))
    assert tuple(v.re % 1 for v in image) == reduced_target
    assert all(0 <= v < 1 for v in x)


def test_solve_mod1_quarter_turn():
    x = solve_mod1([[0, -1], [1, 0]], (Fraction(0), Fraction(1, 2)))
    assert x == (Fraction(1, 2), Fraction(0))


def test_solve_mod1_rejects_bad_systems():
    with pytest.raises(NonUnimodularError):
        solve_mod1([[2, 0], [0, 1]], (Fraction(0), Fraction(0)))
    with pytest.raises(ValueError):
        solve_mod1([[1, 0, 0], [0, 1, 0]], (Fraction(0), Fraction(0)))
    with pytest.raises(NotIntegralError):
        solve_mod1([[Fraction(1, 2), 0], [0, 1]], (Fraction(0), Fraction(0)))


def test_structure_helpers():
    i2 = Matrix.identity(2)
    x = Matrix([[0, 1], [1, 0]])
    assert i2.kron(x).shape() == (4, 4)
    assert i2.kron(x) == Matrix([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
    y = Matrix([[0, GaussianRational(0, -1)], [GaussianRational(0, 1), 0]])
    assert y.is_hermitian()
    assert y.adjoint() == y
    assert y.transpose() == y.conjugate()
    assert Matrix.diagonal([1, 2]).entries() == (
        (GaussianRational(1), GaussianRational(0)),
        (GaussianRational(0), GaussianRational(2)),
    )
