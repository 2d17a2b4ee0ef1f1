"""Tests for digit arithmetic."""

import pytest
from hypothesis import given
from hypothesis import strategies as st
from pydantic import ValidationError

from src.natdigits.schemas import DigitString
from src.natdigits.service import (
    InvalidBaseError,
    InvalidDigitError,
    NegativeResultError,
    bit_length,
    digit_sum,
    from_digits,
    is_niven,
    natural_sub,
    parse_natural,
    render_natural,
    to_digits,
)


class TestDigitSum:
    """Tests for digit_sum."""

    @pytest.mark.parametrize(
        "n, q, expected",
        [(0, 10, 0), (2007, 10, 9), (190, 10, 10), (55, 2, 5), (255, 16, 30), (10**6, 10, 1)],
    )
    def test_known_values(self, n, q, expected):
        """Test digit sums of small numbers."""
        assert digit_sum(n, q) == expected

    def test_huge_decimal(self):
        """Test a decimal number past the int-to-str limit."""
        n = 10**20000 - 1
        assert digit_sum(n, 10) == 9 * 20000

    def test_huge_power_of_two_base(self):
        """Test the binary-group path against the bit count."""
        n = (1 << 5000) - 1
        assert digit_sum(n, 16) == 15 * 1250
        assert digit_sum(n, 2) == 5000

    @pytest.mark.parametrize("q", [0, 1, 2**16 + 1])
    def test_invalid_base(self, q):
        """Test bases outside [2, 2^16]."""
        with pytest.raises(InvalidBaseError):
            digit_sum(5, q)

    @given(st.integers(min_value=0, max_value=10**40), st.integers(min_value=2, max_value=40))
    def test_congruent_mod_q_minus_1(self, n, q):
        """Test s_q(n) = n (mod q - 1)."""
        if q > 2:
            assert (n - digit_sum(n, q)) % (q - 1) == 0

    @given(st.integers(min_value=0, max_value=10**30), st.integers(min_value=0, max_value=10**30))
    def test_subadditive(self, a, b):
        """Test s_2(a + b) <= s_2(a) + s_2(b)."""
        assert digit_sum(a + b, 2) <= digit_sum(a, 2) + digit_sum(b, 2)

    @given(st.integers(min_value=0, max_value=10**30), st.integers(min_value=0, max_value=10**30))
    def test_subadditive_base_ten(self, a, b):
        """Test s_10(a + b) <= s_10(a) + s_10(b)."""
        assert digit_sum(a + b, 10) <= digit_sum(a, 10) + digit_sum(b, 10)


class TestDigitStrings:
    """Tests for to_digits and from_digits."""

    def test_to_digits(self):
        """Test the canonical most-significant-first digits."""
        assert to_digits(2007, 10).digits == (2, 0, 0, 7)
        assert to_digits(0, 7).digits == (0,)
        assert len(to_digits(55, 2)) == 6

    def test_from_digits_leading_zeros(self):
        """Test that leading zeros are tolerated on input."""
        assert from_digits([0, 0, 1, 9, 0], 10) == 190

    def test_from_digits_model(self):
        """Test decoding a DigitString."""
        assert from_digits(DigitString(base=2, digits=(1, 1, 0))) == 6

    def test_invalid_digit(self):
        """Test a digit not below the base."""
        with pytest.raises(InvalidDigitError):
            from_digits([1, 10], 10)

    def test_non_canonical_model(self):
        """Test that a DigitString rejects leading zeros."""
        with pytest.raises(ValidationError):
            DigitString(base=10, digits=(0, 1))

    @given(st.integers(min_value=0, max_value=2**300), st.integers(min_value=2, max_value=2**16))
    def test_round_trip(self, n, q):
        """Test from_digits(to_digits(n)) == n."""
        assert from_digits(to_digits(n, q)) == n


class TestNaturals:
    """Tests for the guarded natural-number helpers."""

    def test_natural_sub(self):
        """Test partial subtraction."""
        assert natural_sub(10, 3) == 7
        assert natural_sub(3, 3) == 0

    def test_natural_sub_negative(self):
        """Test that b > a is refused."""
        with pytest.raises(NegativeResultError):
            natural_sub(3, 10)

    def test_bit_length(self):
        """Test bit lengths."""
        assert bit_length(1) == 1
        assert bit_length(1073741791) == 30

    def test_is_niven(self):
        """Test the Niven property: 2007 is divisible by 9."""
        assert is_niven(2007, 10)
        assert not is_niven(2008, 10)
        assert not is_niven(0, 10)

    def test_render_and_parse(self):
        """Test decimal and hexadecimal text."""
        assert render_natural(255) == "255"
        assert render_natural(255, hexadecimal=True) == "ff"
        assert parse_natural("0xff") == 255
        assert parse_natural("1679") == 1679

    @pytest.mark.parametrize("text", ["", "-1", "+5", "12a", "0xzz", "0x-5", "0x", "1_000", "0xf_f", "\u0663"])
    def test_parse_rejects(self, text):
        """Test malformed natural numbers."""
        with pytest.raises(ValueError):
            parse_natural(text)

    def test_big_render_parse(self):
        """Test text conversion past the int-to-str limit."""
        n = 7 * 10**9000 + 123
        assert parse_natural(render_natural(n)) == n
