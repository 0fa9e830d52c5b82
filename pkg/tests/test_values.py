from fractions import Fraction

import pytest

from fuzzygraphs.errors import ValueRangeError
from fuzzygraphs.values import as_value, parse_value_text, value_text


def test_fraction_text_parses_exactly():
    assert parse_value_text("3/10") == Fraction(3, 10)
    assert parse_value_text("0.35") == Fraction(7, 20)
    assert parse_value_text("1") == Fraction(1)
    assert parse_value_text("0.5") == Fraction(1, 2)


@pytest.mark.parametrize("bad", ["", "a", "1/2/3", "-1/2", "1e-3", ".5", "1/0", "3 /10"])
def test_malformed_text_rejected(bad):
    with pytest.raises(ValueError):
        parse_value_text(bad)


def test_as_value_accepts_fraction_int_str():
    assert as_value(Fraction(2, 5)) == Fraction(2, 5)
    assert as_value(1) == Fraction(1)
    assert as_value(0) == Fraction(0)
    assert as_value("2/4") == Fraction(1, 2)


def test_as_value_rejects_floats_and_bools():
    with pytest.raises(ValueError):
        as_value(0.3)
    with pytest.raises(ValueError):
        as_value(True)


def test_as_value_range():
    with pytest.raises(ValueRangeError):
        as_value("3/2")
    with pytest.raises(ValueRangeError):
        as_value(2)
    with pytest.raises(ValueRangeError):
        as_value(Fraction(-1, 2))


def test_value_text_is_lowest_terms_fraction():
    assert value_text(Fraction(1, 2)) == "1/2"
    assert value_text(Fraction(3, 10)) == "3/10"
    assert value_text(Fraction(4)) == "4/1"
    assert value_text(Fraction(0)) == "0/1"
