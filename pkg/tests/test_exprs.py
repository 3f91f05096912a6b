"""The element grammar, point and bundle literals, and their round trips."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spintorus import (
    ArityMismatchError,
    CliffordElement,
    GaussianRational,
    IndexOutOfRangeError,
    LatticeSpec,
    Matrix,
    ParseError,
    Signature,
    TorusPoint,
    bundle_source,
    element_source,
    evaluate,
    evaluate_element,
    parse_bundle,
    parse_element,
    parse_gaussian,
    parse_point,
    parse_rational,
    point_source,
)

SIG = Signature(2, 0)


def test_expression_examples():
    assert evaluate_element("e2*e1", SIG) == CliffordElement(
        SIG, {0b11: GaussianRational(-1)}
    )
    assert evaluate_element("e1*e1*e1", SIG) == evaluate_element("e1", SIG)
    assert evaluate_element("e1^2", SIG) == CliffordElement.scalar(SIG, GaussianRational(1))
    assert evaluate_element("i*i", SIG) == CliffordElement.scalar(SIG, GaussianRational(-1))
    assert evaluate_element("(1+i)^2", SIG) == CliffordElement.scalar(
        SIG, GaussianRational(0, 2)
    )
    mixed = evaluate_element("(1+i)*e2 - i", SIG)
    assert mixed.coefficient(0b10) == GaussianRational(1, 1)
    assert mixed.coefficient(0) == GaussianRational(0, -1)


def test_expressions_respect_written_order():
    four_dim = Signature(4, 0)
    assert evaluate_element("e3*e1", four_dim) == CliffordElement(
        four_dim, {0b101: GaussianRational(-1)}
    )


def test_parse_errors_carry_offsets():
    cases = {
        "-e1": 0,
        "e0": 0,
        "1//2": 2,
        "(1+i": 4,
        "e1 ^ -1": 5,
        "2 + @": 4,
        "": 0,
    }
    for src, offset in cases.items():
        with pytest.raises(ParseError) as err:
            parse_element(src)
        assert err.value.offset == offset
        assert f"(at offset {offset})" in str(err.value)


def test_generator_indices_are_checked_at_evaluation():
    ast = parse_element("e3")
    with pytest.raises(IndexOutOfRangeError):
        evaluate(ast, SIG)
    with pytest.raises(IndexOutOfRangeError):
        evaluate_element("e1*e5", SIG)


coeffs = st.builds(
    GaussianRational, st.fractions(max_denominator=8), st.fractions(max_denominator=8)
)
elements = st.dictionaries(st.integers(min_value=0, max_value=3), coeffs, max_size=4).map(
    lambda terms: CliffordElement(SIG, terms)
)


@settings(max_examples=100)
@given(elements)
def test_rendered_elements_parse_back_to_themselves(u):
    assert evaluate_element(element_source(u), SIG) == u


def test_element_source_examples():
    u = CliffordElement(SIG, {0b11: GaussianRational(-1)})
    assert element_source(u) == "0 - e1*e2"
    z = CliffordElement(SIG, {0: GaussianRational(Fraction(1, 2), Fraction(-3, 4))})
    assert evaluate_element(element_source(z), SIG) == z
    assert element_source(CliffordElement.zero(SIG)) == "0"


def test_rational_and_gaussian_literals():
    assert parse_rational("3/2") == Fraction(3, 2)
    assert parse_rational("-3/2") == Fraction(-3, 2)
    assert parse_gaussian("1/2-3/4i") == GaussianRational(Fraction(1, 2), Fraction(-3, 4))
    assert parse_gaussian("i") == GaussianRational(0, 1)
    assert parse_gaussian("-i") == GaussianRational(0, -1)
    assert parse_gaussian("2i") == GaussianRational(0, 2)
    assert parse_gaussian("7") == GaussianRational(7)
    with pytest.raises(ParseError):
        parse_gaussian("1+1+i")
    with pytest.raises(ParseError):
        parse_gaussian("i+i")


def test_point_literals_round_trip():
    p = parse_point("1/4, 1/2+1/2i", 1)
    assert point_source(p) == "1/4, 1/2+1/2i"
    assert parse_point(point_source(p), 1) == p
    with pytest.raises(ArityMismatchError):
        parse_point("1/4", 2)
    with pytest.raises(ParseError):
        parse_point("1/4, x", 1)


def test_point_literals_reduce_against_custom_lattices():
    doubled = LatticeSpec(1, Matrix([[2, 0], [0, 1]]))
    p = parse_point("1, 0", 1, doubled)
    assert p.coords == (GaussianRational(Fraction(1, 2)), GaussianRational(0))
    assert p == TorusPoint(doubled, [Fraction(1, 2), 0])


def test_bundle_literals_round_trip():
    b = parse_bundle("[0, 0, 1/2, 0]")
    assert b.k == 1
    assert bundle_source(b) == "[0, 0, 1/2, 0]"
    assert parse_bundle(bundle_source(b)) == b
    wide = parse_bundle("[1/4, 0, 0, 0, 0, 0, 1/2, 0]")
    assert wide.k == 2
    with pytest.raises(ParseError):
        parse_bundle("0, 0, 1/2, 0")
    with pytest.raises(ArityMismatchError):
        parse_bundle("[0, 0, 1/2]")
    with pytest.raises(ArityMismatchError):
        parse_bundle("[0, 0, 1/2, 0]", k=2)
