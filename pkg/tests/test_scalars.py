from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from grassmann_daha.scalars import (
    I, ONE, Q, S, ZERO, DivisionByZero, ExactScalar, GaussianRational, NotRationalInQ,
    PoleError, conjugate, eval_at_s, eval_numeric, parse, qpow, render, specialize_q,
)

small = st.integers(min_value=-4, max_value=4)


@st.composite
def scalars(draw):
    """Random elements a + b*s^e + i*c*s^f over a small denominator."""
    a, b, c = draw(small), draw(small), draw(small)
    e, f = draw(st.integers(-5, 5)), draw(st.integers(-5, 5))
    x = ExactScalar.const(a) + S**e * b + I * S**f * c
    if draw(st.booleans()):
        x = x / (Q + draw(st.integers(1, 3)))
    return x


@given(scalars(), scalars(), scalars())
@settings(max_examples=60, deadline=None)
def test_field_axioms(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) * z == x * z + y * z
    assert (x * y) * z == x * (y * z)
    assert x - x == ZERO
    if not x.is_zero():
        assert x * x.inverse() == ONE


@given(scalars())
@settings(max_examples=60, deadline=None)
def test_render_parse_roundtrip(x):
    assert parse(render(x)) == x


@given(scalars(), scalars())
@settings(max_examples=40, deadline=None)
def test_conjugation_is_a_ring_map(x, y):
    assert conjugate(x * y) == conjugate(x) * conjugate(y)
    assert conjugate(conjugate(x)) == x


def test_square_root_and_imaginary_unit():
    assert S * S == Q
    assert I * I == -ONE
    assert conjugate(I) == -I
    assert qpow(Fraction(1, 2)) == S


@pytest.mark.parametrize("e", [-3, -1, 0, 2, 5])
def test_qpow_matches_powers_of_q(e):
    assert qpow(e) == Q**e


def test_equal_elements_have_equal_hashes():
    a = (Q**2 - 1) / (Q - 1)
    assert a == Q + 1
    assert hash(a) == hash(Q + 1)


def test_division_by_zero_raises():
    with pytest.raises(DivisionByZero):
        ONE / ZERO


def test_specialize_rejects_odd_powers_of_s():
    with pytest.raises(NotRationalInQ):
        specialize_q(S, 2)


def test_specialize_detects_poles():
    with pytest.raises(PoleError):
        specialize_q(ONE / (Q - 2), 2)


def test_specialize_gaussian_binomial():
    from grassmann_daha.qcomb import gauss_binom
    assert specialize_q(gauss_binom(6, 3), 2) == GaussianRational(Fraction(1395))


def test_eval_at_s_and_numeric_agree():
    x = (S**3 + I) / (Q + 1)
    exact = eval_at_s(x, Fraction(3, 2))
    assert complex(exact) == pytest.approx(eval_numeric(x, Fraction(9, 4)))


@pytest.mark.parametrize("text", ["q^(1/2) + 2*i", "(q + 1)/(q - 1)", "-q^(-7/2)", "i*(q^(-2))"])
def test_parse_examples_roundtrip(text):
    assert parse(render(parse(text))) == parse(text)
