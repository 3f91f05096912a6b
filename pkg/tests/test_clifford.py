"""Blade products, the star involution, grading, and the finite generator group."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spintorus import (
    CliffordElement,
    GaussianRational,
    GeneratorGroupElement,
    Signature,
    blade_label,
    blade_mul,
    blade_square_sign,
    element_order,
    generator_group,
    grade_project,
    in_integer_subring,
    reversion_sign,
    star,
)

SIG = Signature(2, 0)

coeffs = st.builds(
    GaussianRational, st.fractions(max_denominator=8), st.fractions(max_denominator=8)
)
elements = st.dictionaries(st.integers(min_value=0, max_value=3), coeffs, max_size=3).map(
    lambda terms: CliffordElement(SIG, terms)
)
int_coeffs = st.builds(
    GaussianRational,
    st.integers(min_value=-3, max_value=3),
    st.integers(min_value=-3, max_value=3),
)
integral_elements = st.dictionaries(
    st.integers(min_value=0, max_value=3), int_coeffs, max_size=3
).map(lambda terms: CliffordElement(SIG, terms))


def test_blade_products():
    # e1 * e2 keeps the increasing order, e2 * e1 picks up a transposition sign
    assert blade_mul(0b01, 0b10, SIG) == (1, 0b11)
    assert blade_mul(0b10, 0b01, SIG) == (-1, 0b11)
    # squares follow the signature
    assert blade_mul(0b01, 0b01, SIG) == (1, 0)
    assert blade_mul(0b01, 0b01, Signature(0, 2)) == (-1, 0)
    assert blade_square_sign(0b11, SIG) == -1
    assert blade_label(0b101) == "e{1,3}"
    assert blade_label(0) == "1"


def test_reversion_sign_has_period_four():
    assert [reversion_sign(g) for g in range(6)] == [1, 1, -1, -1, 1, 1]


@settings(max_examples=60)
@given(elements, elements, elements)
def test_multiplication_is_associative(u, v, w):
    assert (u * v) * w == u * (v * w)


@settings(max_examples=60)
@given(elements, elements, elements)
def test_multiplication_distributes(u, v, w):
    assert u * (v + w) == u * v + u * w


@settings(max_examples=60)
@given(elements)
def test_star_is_an_involution(u):
    assert star(star(u)) == u
    assert u.star() == star(u)


@settings(max_examples=60)
@given(elements, elements)
def test_star_reverses_products(u, v):
    assert star(u * v) == star(v) * star(u)


@given(elements)
def test_star_conjugates_scalars(u):
    z = GaussianRational(Fraction(1, 3), Fraction(2, 5))
    scaled = CliffordElement.scalar(SIG, z) * u
    assert star(scaled) == CliffordElement.scalar(SIG, z.conjugate()) * star(u)


@settings(max_examples=60)
@given(elements)
def test_grade_projections_reassemble(u):
    total = CliffordElement.zero(SIG)
    for g in range(3):
        total = total + grade_project(u, g)
    assert total == u
    assert u.grades() == {g for g in range(3) if not grade_project(u, g).is_zero()}


@settings(max_examples=60)
@given(integral_elements, integral_elements)
def test_integer_subring_is_closed_under_products(u, v):
    assert in_integer_subring(u)
    assert in_integer_subring(u * v)
    assert in_integer_subring(u + v)


def test_integer_subring_membership():
    assert not in_integer_subring(
        CliffordElement(SIG, {0b01: GaussianRational(Fraction(1, 2))})
    )


def test_generator_group_size_and_closure():
    for k in (1, 2):
        sig = Signature(2 * k, 0)
        group = generator_group(sig)
        assert len(group) == 2 ** (2 * k + 2)
        members = set(group)
        for g in group:
            assert g.inverse(sig).mul(g, sig).is_identity()
        sample = group[:: max(1, len(group) // 16)]
        for g in sample:
            for h in sample:
                assert g.mul(h, sig) in members


def test_element_orders_split_one_two_four():
    histogram = {1: 0, 2: 0, 4: 0}
    for g in generator_group(SIG):
        order = element_order(g, SIG)
        histogram[order] += 1
        # the reported order is the minimal power reaching the identity
        u = g.to_element(SIG)
        power = u
        for _ in range(order - 1):
            assert not power.is_scalar() or power.scalar_part() != GaussianRational(1)
            power = power * u
        assert power == CliffordElement.scalar(SIG, GaussianRational(1))
    assert histogram == {1: 1, 2: 7, 4: 8}


def test_group_element_labels_and_phase():
    g = GeneratorGroupElement(0b11, 3)
    assert g.label() == "-i*e{1,2}"
    assert g.phase == GaussianRational(0, -1)
    assert g.to_element(SIG) == CliffordElement(SIG, {0b11: GaussianRational(0, -1)})


def test_signature_validation():
    with pytest.raises(ValueError):
        Signature(-1, 2)
    sig = Signature(1, 1)
    assert sig.n == 2
    assert blade_mul(0b10, 0b10, sig) == (-1, 0)
