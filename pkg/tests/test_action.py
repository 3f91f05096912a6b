"""Clifford multiplication on the torus and its translation structure."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from spintorus import (
    GaussianRational,
    GeneratorGroupElement,
    LatticeNotPreservedError,
    LatticeSpec,
    Matrix,
    NotIntegralError,
    Signature,
    TorusPoint,
    act,
    apply_matrix,
    element_order,
    evaluate_element,
    generator_group,
    group_lattice_matrix,
    lattice_matrix,
    parse_point,
    preserves_lattice,
    translation_system,
    verify_two_torsion,
)

SIG = Signature(2, 0)
LATTICE = LatticeSpec.default(1)

point_coords = st.builds(
    GaussianRational, st.fractions(max_denominator=16), st.fractions(max_denominator=16)
)
points = st.lists(point_coords, min_size=2, max_size=2).map(
    lambda cs: TorusPoint(LATTICE, cs)
)
group_indices = st.integers(min_value=0, max_value=15)


def test_quarter_rotation_orbit_is_frozen(tables):
    system = translation_system(
        GeneratorGroupElement(0b11, 0), parse_point("1/4, 0", 1), tables[1]
    )
    assert system.order == 4
    assert str(system.first_translation) == "3/4+1/4i, 0"
    assert str(system.second_translation) == "3/4+3/4i, 0"
    assert [str(p) for p in system.orbit] == [
        "1/4, 0",
        "1/4i, 0",
        "3/4, 0",
        "3/4i, 0",
        "1/4, 0",
    ]
    assert system.four_step_holds()
    assert system.closure_identity_holds()


@settings(max_examples=60)
@given(group_indices, points)
def test_every_order_four_actor_satisfies_the_four_step_system(tables, index, p):
    g = generator_group(SIG)[index]
    assume(element_order(g, SIG) == 4)
    system = translation_system(g, p, tables[1])
    assert system.four_step_holds()
    assert system.closure_identity_holds()


@settings(max_examples=60)
@given(group_indices, points)
def test_order_two_actors_degenerate_to_opposite_translations(tables, index, p):
    g = generator_group(SIG)[index]
    assume(element_order(g, SIG) == 2)
    system = translation_system(g, p, tables[1])
    assert system.degenerate_pair_holds()
    assert system.second_translation == -system.first_translation


def test_translation_systems_reject_the_identity(tables):
    with pytest.raises(ValueError):
        translation_system(GeneratorGroupElement(0, 0), parse_point("1/4, 0", 1), tables[1])


@settings(max_examples=40)
@given(group_indices, group_indices, points)
def test_action_is_a_homomorphism(tables, i, j, p):
    g = generator_group(SIG)[i]
    h = generator_group(SIG)[j]
    composed = act(g.mul(h, SIG).to_element(SIG), p, tables[1])
    chained = act(g.to_element(SIG), act(h.to_element(SIG), p, tables[1]), tables[1])
    assert composed == chained


@settings(max_examples=40)
@given(group_indices, points)
def test_action_descends_from_the_matrix_on_any_lift(tables, index, p):
    # acting on the reduced point agrees with reducing the matrix image of a lift
    g = generator_group(SIG)[index]
    matrix = tables[1].represent(g.to_element(SIG))
    shifted = tuple(
        c + GaussianRational(2, -3) for c in p.lift()
    )  # move to a different representative
    direct = act(g.to_element(SIG), p, tables[1])
    assert LATTICE.reduce(matrix.matvec(shifted)) == direct
    assert apply_matrix(group_lattice_matrix(g, tables[1], LATTICE), p) == direct


def test_group_matrices_agree_with_element_matrices(tables):
    for g in generator_group(SIG):
        assert group_lattice_matrix(g, tables[1], LATTICE) == lattice_matrix(
            g.to_element(SIG), tables[1], LATTICE
        )


def test_non_integral_elements_cannot_act(tables):
    half = evaluate_element("1/2 * e1", SIG)
    with pytest.raises(NotIntegralError):
        act(half, parse_point("1/4, 0", 1), tables[1])


def test_lattices_that_break_under_an_actor_are_reported(tables):
    stretched = LatticeSpec(1, Matrix([[2, 0], [0, 1]]))
    e1 = evaluate_element("e1", SIG)
    assert not preserves_lattice(e1, tables[1], stretched)
    with pytest.raises(LatticeNotPreservedError):
        lattice_matrix(e1, tables[1], stretched)
    with pytest.raises(LatticeNotPreservedError):
        group_lattice_matrix(GeneratorGroupElement(0b01, 0), tables[1], stretched)
    # the doubled sublattice is still preserved by the scalar i
    assert preserves_lattice(evaluate_element("i", SIG), tables[1], stretched)


def test_two_torsion_translations_square_to_zero(tables):
    for g in generator_group(SIG):
        if element_order(g, SIG) < 2:
            continue
        report = verify_two_torsion(g, tables[1], LATTICE)
        assert report.checked == 16
        assert report.all_pass
        assert report.failures == ()


def test_two_torsion_definition_unwinds(tables):
    # N = M and 2M = 0 for a two-torsion base point, spelled out by hand
    g = GeneratorGroupElement(0b01, 0)
    base = parse_point("1/2, 1/2i", 1)
    system = translation_system(g, base, tables[1])
    m = system.first_translation
    n = system.second_translation
    assert n == m
    assert (m + m).is_zero()
