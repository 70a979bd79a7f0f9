"""Tests for the polynomial text grammar."""

import random

import pytest
from src.ffelim.errors import ExponentOverflow, InputError, PolySyntaxError, UnknownVariable
from src.ffelim.field.prime import PrimeModulus
from src.ffelim.poly.grammar import m_parse, m_render
from src.ffelim.poly.mpoly import MultiPoly

P5 = PrimeModulus(5)
P7 = PrimeModulus(7)


def test_parse_examples():
    assert m_parse("x0^2*x1 + 3", 2, P7).terms == {(2, 1): 1, (0, 0): 3}
    assert m_parse("10*x0", 1, P7).terms == {(1,): 3}
    with pytest.raises(UnknownVariable):
        m_parse("x2", 2, P7)


def test_aliases():
    """t is x0 and a bare x is x1 when there are two variables."""
    assert m_parse("t*x + 1", 2, P5) == m_parse("x0*x1 + 1", 2, P5)
    assert m_parse("x^2", 1, P5) == m_parse("x0^2", 1, P5)
    with pytest.raises(UnknownVariable):
        m_parse("t", 3, P5)
    with pytest.raises(UnknownVariable):
        m_parse("x", 3, P5)


def test_signs_parentheses_and_products():
    assert m_parse("-x0 + 2", 1, P7) == m_parse("6*x0 + 2", 1, P7)
    assert m_parse("x1 - (x0^2 - 2)", 2, P5) == m_parse("x1 + 4*x0^2 + 2", 2, P5)
    assert m_parse("(x0 + 1)^2", 1, P7) == m_parse("x0^2 + 2*x0 + 1", 1, P7)
    assert m_parse("2*x0*3", 1, P7) == m_parse("6*x0", 1, P7)
    assert m_parse("  x0 *  x1  ", 2, P7).terms == {(1, 1): 1}


def test_coefficients_reduce_to_zero():
    assert m_parse("5*x0 + 5", 1, P5).is_zero()
    assert m_parse("0", 2, P5).is_zero()


def test_syntax_errors_carry_position():
    with pytest.raises(PolySyntaxError) as exc:
        m_parse("x0 + * 2", 1, P7)
    assert exc.value.position == 5

    with pytest.raises(PolySyntaxError) as exc:
        m_parse("3 $ x0", 1, P7)
    assert exc.value.position == 2

    with pytest.raises(PolySyntaxError) as exc:
        m_parse("(x0 + 1", 1, P7)
    assert exc.value.position == 7

    with pytest.raises(PolySyntaxError):
        m_parse("", 1, P7)
    with pytest.raises(PolySyntaxError):
        m_parse("x0^", 1, P7)
    with pytest.raises(PolySyntaxError):
        m_parse("x0 x1", 2, P7)


def test_syntax_errors_are_input_errors():
    with pytest.raises(InputError):
        m_parse("x0 ++", 1, P7)
    with pytest.raises(ValueError):
        m_parse("x0 ++", 1, P7)


def test_exponent_cap():
    assert m_parse("x0^2147483647", 1, P7).terms == {(2**31 - 1,): 1}
    with pytest.raises(ExponentOverflow):
        m_parse("x0^2147483648", 1, P7)


def test_expanded_power_cap():
    with pytest.raises(ExponentOverflow):
        m_parse("(x0+1)^2000000000", 1, P7)
    with pytest.raises(InputError):
        m_parse("(x0 + x1 + 1)^100", 2, P7)
    with pytest.raises(ExponentOverflow):
        m_parse("(x0+1)^4096", 1, P7)
    assert m_parse("(x0+1)^7", 1, P7) == m_parse("x0^7 + 1", 1, P7)
    assert m_parse("(3)^2000000000", 1, P7) == MultiPoly.constant(pow(3, 2000000000, 7), 1, P7)
    assert m_parse("(x0*x1)^2000000000", 2, P7).terms == {(2000000000, 2000000000): 1}


def test_parse_render_round_trip_random():
    rng = random.Random(20)
    for _ in range(500):
        m = rng.choice([P5, P7, PrimeModulus(31)])
        arity = rng.randint(1, 3)
        f = MultiPoly(
            {
                tuple(rng.randint(0, 4) for _ in range(arity)): rng.randrange(m.p)
                for _ in range(rng.randint(0, 5))
            },
            arity,
            m,
        )
        assert m_parse(m_render(f), arity, m) == f
