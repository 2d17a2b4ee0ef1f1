"""Tests for the classes C_m."""

import pytest

from src.classes.service import (
    DensityBudgetExceededError,
    density_scan,
    estimate_scan_cost,
    fast_c1,
    fast_c2,
    is_in_class,
    min_class_index,
    shift_witness,
)
from src.constructions.lemma2 import verify_exponent_set
from src.minsolve.service import minimal_niven
from src.modarith.service import ceil_log2


class TestMembership:
    """Tests for is_in_class and the fast tests."""

    def test_five_in_c1(self):
        """Test 5 in C_1."""
        membership = is_in_class(5, 1)
        assert membership.member
        assert membership.witness is not None
        assert fast_c1(5)

    def test_seven(self):
        """Test 7 in C_3 but not in C_2."""
        assert not is_in_class(7, 1).member
        assert not is_in_class(7, 2).member
        assert is_in_class(7, 3).member

    def test_fast_tests_match_dp(self):
        """Test fast_c1 and fast_c2 against the DP for odd k <= 501."""
        for k in range(3, 502, 2):
            assert fast_c1(k) == is_in_class(k, 1, with_witness=False).member, k
            assert fast_c2(k) == is_in_class(k, 2, with_witness=False).member, k

    def test_nesting(self):
        """Test C_m inside C_(m+1) for odd k <= 501 and m <= n_k."""
        for k in range(3, 502, 2):
            previous = False
            for m in range(1, ceil_log2(k) + 1):
                member = is_in_class(k, m, with_witness=False).member
                assert member or not previous, (k, m)
                previous = member
            assert previous, k

    def test_witnesses_verify(self):
        """Test that every returned witness passes the verifier."""
        for k in range(3, 60, 2):
            for m in range(1, 4):
                membership = is_in_class(k, m)
                if membership.member:
                    verify_exponent_set(membership.witness, count=m)

    @pytest.mark.parametrize("k, m", [(4, 1), (1, 1), (7, 0)])
    def test_invalid(self, k, m):
        """Test even or small k and m below 1."""
        with pytest.raises(ValueError):
            is_in_class(k, m)


class TestMinClassIndex:
    """Tests for min_class_index."""

    @pytest.mark.parametrize("k, m_min", [(3, 2), (5, 1), (7, 3), (29, 1), (31, 5), (127, 7)])
    def test_known(self, k, m_min):
        """Test small class indices."""
        assert min_class_index(k).m_min == m_min

    @pytest.mark.parametrize("i", [2, 3, 5, 7])
    def test_mersenne_index(self, i):
        """Test m_min(2^i - 1) = i."""
        assert min_class_index((1 << i) - 1).m_min == i

    def test_bit_length_bridge(self):
        """Test m_min = bit_length(a_k) - k for odd k <= 255."""
        for k in range(3, 256, 2):
            record = min_class_index(k)
            assert record.m_min == minimal_niven(2, k).value.bit_length() - k, k
            assert record.m_min <= ceil_log2(k)

    def test_shift_witness(self):
        """Test that shifting a C_m witness gives a C_(m+1) witness."""
        for k in range(3, 80, 2):
            witness = min_class_index(k).witness
            shifted = shift_witness(witness)
            assert shifted.exponents[0] == 0
            assert shifted.target == (pow(2, k + len(shifted.exponents), k) - 1) % k


class TestDensityScan:
    """Tests for density_scan."""

    def test_counts(self):
        """Test running counts, ratios and the final point."""
        points = density_scan(501, 1, stride=10)
        assert points[0].x == 3
        assert points[-1].x == 501
        assert all(0 <= p.ratio <= 1 for p in points)
        assert all(a.count <= b.count for a, b in zip(points, points[1:]))
        assert points[-1].count == sum(fast_c1(k) for k in range(3, 502, 2))

    def test_c1_below_c2(self):
        """Test #C_1(x) <= #C_2(x) pointwise."""
        c1 = density_scan(1001, 1, stride=7)
        c2 = density_scan(1001, 2, stride=7)
        assert [p.x for p in c1] == [p.x for p in c2]
        assert all(a.count <= b.count for a, b in zip(c1, c2))

    def test_worker_pool(self):
        """Test that a process pool gives the same curve."""
        assert density_scan(301, 2, threads=2) == density_scan(301, 2, threads=1)

    def test_budget(self):
        """Test that an oversized scan is refused."""
        with pytest.raises(DensityBudgetExceededError):
            density_scan(10_001, 3, budget=estimate_scan_cost(10_001, 3) - 1)

    def test_empty(self):
        """Test that x_max below 3 scans nothing."""
        assert density_scan(1, 1) == []

    def test_single_point(self):
        """Test x_max = 3 with m = 2: 3 is in C_2."""
        assert [(p.x, p.count) for p in density_scan(3, 2)] == [(3, 1)]

    def test_invalid_stride(self):
        """Test stride below 1."""
        with pytest.raises(ValueError):
            density_scan(101, 1, stride=0)
