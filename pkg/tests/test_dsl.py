from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ncproj.dsl import (
    format_presentation,
    parse_module,
    parse_morphism,
    parse_ore,
    parse_polynomial,
    parse_presentation,
)
from ncproj.errors import DuplicateGenerator, InhomogeneousRelation, ParseError, ZeroWeight
from ncproj.free import FreeAlgebra, GeneratorInfo
from ncproj.linalg import GF, QQ

QPLANE = """
# quantum plane
field Q
gen x 1
gen y 1
rel y*x - 2*x*y
"""


def test_quantum_plane_text():
    p = parse_presentation(QPLANE)
    assert [g.name for g in p.generators] == ["x", "y"]
    assert len(p.relations) == 1
    assert p.field == QQ


def test_semicolon_statements_and_prime_field():
    p = parse_presentation("field F 5; gen x 1; gen z 2; rel z*x - x*z")
    assert p.field == GF(5)
    assert [g.weight for g in p.generators] == [1, 2]


def test_polynomial_syntax():
    free = FreeAlgebra(QQ, [GeneratorInfo("x", 1), GeneratorInfo("y", 1)])
    f = parse_polynomial("(x + y)*(x - y)", free)
    g = parse_polynomial("x*x - x*y + y*x - y*y", free)
    assert f == g
    h = parse_polynomial("3/4*x*y - -x*y", free)
    assert h == parse_polynomial("7/4*x*y", free)
    assert parse_polynomial("2", free) == free.one() * 2


def test_noncommutative_product_order():
    free = FreeAlgebra(QQ, [GeneratorInfo("x", 1), GeneratorInfo("y", 1)])
    assert parse_polynomial("x*y", free) != parse_polynomial("y*x", free)


@pytest.mark.parametrize(
    "text, line, col",
    [
        ("field Q\ngen x 1\nrel x*q", 3, 7),
        ("field Q\ngen x 1\nrel x*(x", 3, 9),
        ("field Q\ngen x 1\nfoo bar", 3, 1),
        ("field R\ngen x 1", 1, 7),
    ],
)
def test_parse_errors_carry_location(text, line, col):
    with pytest.raises(ParseError) as err:
        parse_presentation(text)
    assert err.value.line == line
    assert err.value.column == col
    assert f"line {line}" in str(err.value)


def test_presentation_errors():
    with pytest.raises(InhomogeneousRelation):
        parse_presentation("gen x 1\ngen z 2\nrel x*x - z*x")
    with pytest.raises(DuplicateGenerator):
        parse_presentation("gen x 1\ngen x 2")
    with pytest.raises(ZeroWeight):
        parse_presentation("gen x 0")
    with pytest.raises(ParseError):
        parse_presentation("gen x -1")


def test_format_round_trip():
    p = parse_presentation(QPLANE)
    assert parse_presentation(format_presentation(p)) == p


names = st.sampled_from(["x", "y", "z"])
monomials = st.lists(names, min_size=1, max_size=3).map("*".join)
coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4).filter(lambda c: c != 0)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(coeffs, monomials), min_size=1, max_size=4))
def test_formatted_polynomials_reparse(terms):
    free = FreeAlgebra(QQ, [GeneratorInfo(n, 1) for n in "xyz"])
    text = " + ".join(f"({c.numerator}/{c.denominator})*{m}" for c, m in terms)
    f = parse_polynomial(text, free)
    assert parse_polynomial(str(f) if f else "0", free) == f


def test_auxiliary_files(tmp_path):
    m = parse_morphism("source a.alg\ntarget b.alg\nmap y -> x*y", tmp_path)
    assert m.source == tmp_path / "a.alg"
    assert m.images["y"].text.strip() == "x*y"
    mod = parse_module("algebra a.alg\ngen e -1\nrel e*x", tmp_path)
    assert mod.generators[0].weight == -1
    o = parse_ore("base a.alg\ndegree 2\nsigma x -> 2*x\ndelta y -> x*x*x", tmp_path)
    assert o.degree == 2 and set(o.sigma) == {"x"} and set(o.delta) == {"y"}
    with pytest.raises(ParseError):
        parse_morphism("source a.alg\nmap y -> y", tmp_path)
    with pytest.raises(ParseError):
        parse_ore("base a.alg\ndegree two", tmp_path)
