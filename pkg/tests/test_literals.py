import pytest
from hypothesis import given, strategies as st

from vahlen import CliffordElement, CliffordMatrix2, ParseError, QuadraticSpace, parse_element, parse_matrix
from vahlen.literals import format_matrix, parse_ring_literal

from support import GF3, LAUR2, ZZ, random_matrix, spaces

SP = QuadraticSpace(ZZ, [1, 2, 3])


def test_spec_literal():
    x = parse_element(SP, "2*e1e3 + 1*e2 + 2")
    assert x.terms == {0b101: 2, 0b010: 1, 0: 2}
    assert str(x) == "2 + 1*e2 + 2*e1e3"


def test_whitespace_insensitive():
    assert parse_element(SP, " 2 * e1e3+e2 ") == parse_element(SP, "2*e1e3 + 1*e2")


def test_products_reduced_in_the_algebra():
    assert parse_element(SP, "e2*e1") == parse_element(SP, "-e1e2")
    assert parse_element(SP, "e1*e1") == parse_element(SP, "1")
    assert parse_element(SP, "(1 + e1)*(1 - e1)") == parse_element(SP, "0")


def test_laurent_coefficients():
    sp = QuadraticSpace(LAUR2, [LAUR2("t")])
    x = parse_element(sp, "(1*t^-1 + 1)*e1 + t^2")
    assert x.coeff(1) == LAUR2("t^-1 + 1")
    assert x.coeff(0) == LAUR2("t^2")
    assert parse_element(sp, str(x)) == x
    assert parse_ring_literal(LAUR2, "1*t^-1 + 1 + 1*t^2") == LAUR2.wrap(((-1, 1), (0, 1), (2, 1)))


def test_residue_literals_reduce():
    assert parse_ring_literal(GF3, "5") == 2
    assert parse_ring_literal(ZZ, "-17") == -17


@pytest.mark.parametrize(
    "text, position",
    [
        ("e1 + ", 5),
        ("e2e1", 2),
        ("e0", 1),
        ("2 + e4", 4),
        ("1 + $", 4),
        ("(e1 + 2", 7),
        ("e", 1),
        ("", 0),
        ("e1 e2", 3),
    ],
)
def test_parse_errors_carry_position(text, position):
    with pytest.raises(ParseError) as info:
        parse_element(SP, text)
    assert info.value.position == position
    assert "^" in info.value.annotated()


def test_t_outside_laurent_ring():
    with pytest.raises(ParseError):
        parse_element(SP, "t*e1")


def test_matrix_literal():
    g = parse_matrix(SP, "1; e1; 0; 1 + e2")
    assert g == CliffordMatrix2(
        CliffordElement.one(SP), CliffordElement.basis(SP, 0), CliffordElement.zero(SP), parse_element(SP, "1 + e2")
    )
    assert format_matrix(g) == "1; 1*e1; 0; 1 + 1*e2"


def test_matrix_errors_are_offset():
    with pytest.raises(ParseError) as info:
        parse_matrix(SP, "1; e1; 0; e9")
    assert info.value.position == 10
    with pytest.raises(ParseError):
        parse_matrix(SP, "1; 0; 1")


@given(spaces(max_rank=3), st.integers(0, 2**32 - 1))
def test_matrix_round_trip(sp, seed):
    import random

    g = random_matrix(sp, random.Random(seed), 0.5)
    assert parse_matrix(sp, format_matrix(g)) == g
    assert parse_matrix(sp, str(g)) == g
