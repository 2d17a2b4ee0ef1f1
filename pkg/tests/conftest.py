"""Pytest configuration and fixtures for the minimal Niven toolkit tests."""

import os
import tempfile

import pytest

# Set environment variables before importing toolkit modules
os.environ["NIVEN_CHECK_RESULTS"] = "true"
os.environ["NIVEN_THREADS"] = "1"
os.environ["NIVEN_LOG_LEVEL"] = "WARNING"
os.environ.setdefault("NIVEN_CACHE_DIR", tempfile.mkdtemp(prefix="niven-cache-"))

from src.commands.cache import ResultCache
from src.commands.service import ReproductionService


# a_k in base 10 for k = 10 .. 23.
BASE10_TABLE = {
    10: 190,
    11: 209,
    12: 48,
    13: 247,
    14: 266,
    15: 195,
    16: 448,
    17: 476,
    18: 198,
    19: 874,
    20: 3980,
    21: 399,
    22: 2398,
    23: 1679,
}


@pytest.fixture
def cache_dir(tmp_path):
    """A fresh, empty cache directory."""
    return tmp_path / "cache"


@pytest.fixture
def binary_cache(cache_dir):
    return ResultCache(cache_dir, 2)


@pytest.fixture
def binary_service(binary_cache):
    """Base-2 reproduction service backed by a fresh cache."""
    return ReproductionService(2, cache=binary_cache, threads=1)
