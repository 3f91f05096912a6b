"""Generator matrices, the algebra isomorphism, and star-versus-adjoint checks."""

from __future__ import annotations

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from spintorus import (
    CliffordElement,
    GaussianRational,
    Matrix,
    NotUnitVectorError,
    Signature,
    SignatureMismatchError,
    basis_elements,
    build_generators,
    evaluate_element,
    star,
    verify_algebra_iso,
    verify_spin_preserves_form,
    verify_unitary,
)

I = GaussianRational(0, 1)


def test_rank_one_generator_matrices_are_frozen(tables):
    table = tables[1]
    assert table.gamma[0] == Matrix([[0, 1], [1, 0]])
    assert table.gamma[1] == Matrix([[0, -I], [I, 0]])
    product = evaluate_element("e1*e2", table.sig)
    assert table.represent(product) == Matrix([[I, 0], [0, -I]])


def test_clifford_relations_hold_for_all_generator_pairs(tables):
    for k in (1, 2):
        table = tables[k]
        dim = 2**k
        for a in range(2 * k):
            for b in range(2 * k):
                anti = table.gamma[a] @ table.gamma[b] + table.gamma[b] @ table.gamma[a]
                expected = Matrix.identity(dim) * (2 if a == b else 0)
                assert anti == expected


def test_blade_images_have_gaussian_integer_entries(tables):
    for k in (1, 2):
        table = tables[k]
        for mask in range(4**k):
            assert table.blade_image(mask).is_gaussian_integer()


def test_algebra_isomorphism_rank(tables):
    for k in (1, 2):
        report = verify_algebra_iso(tables[k])
        assert report.independent
        assert report.spanning_rank == report.expected_rank == 4**k


def test_rank_one_flattening_matches_sympy(tables):
    table = tables[1]
    rows = []
    for mask in range(4):
        flat = []
        for entry in table.blade_image(mask).flatten():
            flat.append(sympy.Rational(entry.re) + sympy.I * sympy.Rational(entry.im))
        rows.append(flat)
    assert sympy.Matrix(rows).rank() == 4


def test_star_matches_matrix_adjoint_on_the_full_basis(tables):
    for k in (1, 2):
        table = tables[k]
        count = 0
        for u in basis_elements(table.sig):
            assert table.represent(star(u)) == table.represent(u).adjoint()
            count += 1
        assert count == 2 * 4**k


coeffs = st.builds(
    GaussianRational, st.fractions(max_denominator=8), st.fractions(max_denominator=8)
)
elements = st.dictionaries(st.integers(min_value=0, max_value=3), coeffs, max_size=3).map(
    lambda terms: CliffordElement(Signature(2, 0), terms)
)


@settings(max_examples=50)
@given(elements, elements)
def test_representation_is_a_ring_map(tables, u, v):
    table = tables[1]
    assert table.represent(u * v) == table.represent(u) @ table.represent(v)
    assert table.represent(u + v) == table.represent(u) + table.represent(v)


def test_unitary_compatibility_depends_on_the_signature(tables):
    report = verify_unitary(tables[1])
    assert report.all_compatible
    assert report.checked == 8

    indefinite = build_generators(1, Signature(1, 1))
    report = verify_unitary(indefinite)
    assert not report.all_compatible
    assert "e{2}" in report.failures


def test_spin_elements_preserve_the_form(tables):
    table = tables[1]
    vectors = [evaluate_element("e1", table.sig), evaluate_element("e2", table.sig)]
    assert verify_spin_preserves_form(table, vectors)
    with pytest.raises(NotUnitVectorError):
        verify_spin_preserves_form(table, [evaluate_element("e1 + e2", table.sig)])


def test_signature_must_match_the_rank():
    with pytest.raises(SignatureMismatchError):
        build_generators(1, Signature(4, 0))


def test_indefinite_generators_square_to_minus_one():
    table = build_generators(1, Signature(1, 1))
    assert table.gamma[1] @ table.gamma[1] == Matrix.identity(2) * (-1)
