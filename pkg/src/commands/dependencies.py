"""Command service dependencies."""

from typing import Optional

from .cache import ResultCache
from .schemas import RunConfig
from .service import ReproductionService


def get_result_cache(run: RunConfig) -> Optional[ResultCache]:
    """The cache of the run's base, or None when caching is off."""
    if run.cache_dir is None:
        return None
    return ResultCache(run.cache_dir, run.base)


def get_reproduction_service(run: RunConfig) -> ReproductionService:
    return ReproductionService(
        run.base,
        cache=get_result_cache(run),
        state_cap=run.state_cap,
        threads=run.threads,
    )
