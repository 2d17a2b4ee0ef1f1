"""Tests for the result cache."""

import pytest

from src.commands.cache import CacheFormatError, ResultCache, make_entry
from src.commands.schemas import CacheEntry
from src.exceptions import CacheCorruptionError
from src.minsolve.service import minimal_niven


class TestResultCache:
    """Tests for ResultCache."""

    def test_append_and_reload(self, cache_dir):
        """Test that appended entries survive a reload."""
        cache = ResultCache(cache_dir, 10)
        assert cache.record(make_entry(minimal_niven(10, 12)))
        assert cache.record(make_entry(minimal_niven(10, 17)))

        reloaded = ResultCache(cache_dir, 10)
        assert reloaded.get(12) == CacheEntry(q=10, k=12, a_k="48", c_k="4", length=2)
        assert reloaded.get(17).a_k == "476"
        assert reloaded.get(18) is None

    def test_file_format(self, cache_dir):
        """Test the header and row layout."""
        cache = ResultCache(cache_dir, 10)
        cache.record(make_entry(minimal_niven(10, 10)))
        assert (cache_dir / "ak_q10.csv").read_text() == "q,k,a_k,c_k,len\n10,10,190,19,3\n"

    def test_duplicate_is_not_appended(self, cache_dir):
        """Test that recording the same value twice keeps one row."""
        cache = ResultCache(cache_dir, 2)
        entry = make_entry(minimal_niven(2, 5))
        assert cache.record(entry)
        assert not cache.record(entry)
        assert cache.path.read_text().count("\n") == 2

    def test_mismatch(self, cache_dir):
        """Test that a different a_k for a cached k is corruption."""
        cache = ResultCache(cache_dir, 2)
        cache.record(CacheEntry(q=2, k=5, a_k="56", c_k="11", length=6))
        with pytest.raises(CacheCorruptionError) as e:
            cache.record(make_entry(minimal_niven(2, 5)))
        assert e.value.k == 5

    @pytest.mark.parametrize(
        "text",
        ["k,q\n", "q,k,a_k,c_k,len\n2,5,55\n", "q,k,a_k,c_k,len\n3,5,55,11,6\n", "q,k,a_k,c_k,len\n2,5,x,11,6\n"],
    )
    def test_unreadable_file(self, cache_dir, text):
        """Test malformed cache files."""
        cache_dir.mkdir(parents=True)
        (cache_dir / "ak_q2.csv").write_text(text)
        with pytest.raises(CacheFormatError):
            ResultCache(cache_dir, 2).get(5)

    def test_conflicting_rows(self, cache_dir):
        """Test two different stored values for one k."""
        cache_dir.mkdir(parents=True)
        (cache_dir / "ak_q2.csv").write_text("q,k,a_k,c_k,len\n2,5,55,11,6\n2,5,60,12,6\n")
        with pytest.raises(CacheCorruptionError):
            ResultCache(cache_dir, 2).get(5)
