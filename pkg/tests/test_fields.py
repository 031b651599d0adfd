from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wordcf.fields import GF, QQ, check_same_field, is_prime

residue3 = st.integers(min_value=0, max_value=2)
residue7 = st.integers(min_value=0, max_value=6)


def test_gf_requires_prime():
    with pytest.raises(ValueError):
        GF(4)
    with pytest.raises(ValueError):
        GF(1)
    assert GF(2).p == 2
    assert GF(97).p == 97


def test_is_prime_small_table():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}
    assert {n for n in range(50) if is_prime(n)} == primes


def test_gf_identity_cached():
    assert GF(3) is GF(3)
    assert GF(3) == GF(3)
    assert GF(3) != GF(5)


@given(a=residue7, b=residue7)
def test_gf7_ring_ops_match_int_arithmetic(a, b):
    f = GF(7)
    assert f.reduce(a + b) == (a + b) % 7
    assert f.reduce(a * b) == (a * b) % 7
    assert f.reduce(-a) == (-a) % 7


@given(a=residue3, b=st.integers(min_value=1, max_value=2))
def test_gf3_division_inverts(a, b):
    f = GF(3)
    q = f.div(a, b)
    assert f.reduce(q * b) == a


def test_gf_division_by_zero():
    with pytest.raises(ZeroDivisionError, match="zero divisor"):
        GF(5).div(1, 0)
    with pytest.raises(ZeroDivisionError, match="zero divisor"):
        QQ.div(1, 0)


def test_qq_division_is_exact():
    assert QQ.div(1, 3) == Fraction(1, 3)
    # integer-valued results come back as plain ints
    assert QQ.div(4, 2) == 2
    assert isinstance(QQ.div(4, 2), int)


def test_qq_rejects_floats_and_bools():
    with pytest.raises(TypeError):
        QQ.coerce(0.5)
    with pytest.raises(TypeError):
        QQ.coerce(True)
    with pytest.raises(TypeError):
        GF(3).coerce(Fraction(1, 2))


def test_mixed_fields_are_an_error():
    with pytest.raises(ValueError, match="mixed fields"):
        check_same_field(QQ, GF(3))
    with pytest.raises(ValueError, match="mixed fields"):
        check_same_field(GF(3), GF(5))


def test_scalar_format_round_trip():
    assert QQ.format_scalar(Fraction(-125, 48)) == "-125/48"
    assert QQ.parse_scalar("-125/48") == Fraction(-125, 48)
    assert QQ.parse_scalar("6/3") == 2
    assert GF(7).parse_scalar("12") == 5
