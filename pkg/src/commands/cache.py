"""Append-only result cache, one CSV file per base.

File `ak_q<q>.csv` holds the columns `q,k,a_k,c_k,len`, big integers in
decimal. Entries are only ever appended, by the parent process.
"""

import csv
import json
import logging
from pathlib import Path
from typing import Optional

from ..exceptions import CacheCorruptionError, NivenError
from ..minsolve.schemas import SolverResult
from ..natdigits.service import render_natural
from .schemas import CacheEntry


HEADER = ["q", "k", "a_k", "c_k", "len"]


class CacheFormatError(CacheCorruptionError):
    """The cache file cannot be read back."""

    def __init__(self, path: Path, reason: str):
        NivenError.__init__(self, f"Corrupt cache file {path}: {reason}")
        self.path = path


def make_entry(result: SolverResult) -> CacheEntry:
    assert result.value is not None and result.quotient is not None
    return CacheEntry(
        q=result.base,
        k=result.modulus,
        a_k=render_natural(result.value),
        c_k=render_natural(result.quotient),
        length=result.digit_count,
    )


class ResultCache:
    """Cached a_k values of one base."""

    def __init__(self, cache_dir: Path, q: int):
        self.q = q
        self.path = cache_dir / f"ak_q{q}.csv"
        self._entries: Optional[dict[int, CacheEntry]] = None

    @property
    def entries(self) -> dict[int, CacheEntry]:
        if self._entries is None:
            self._entries = self._load()
        return self._entries

    def _load(self) -> dict[int, CacheEntry]:
        if not self.path.exists():
            return {}
        entries: dict[int, CacheEntry] = {}
        with self.path.open(newline="") as f:
            reader = csv.reader(f)
            header = next(reader, None)
            if header != HEADER:
                raise CacheFormatError(self.path, f"unexpected header {header}")
            for line, row in enumerate(reader, start=2):
                try:
                    q, k, a_k, c_k, length = row
                    if int(q) != self.q or not (a_k.isdigit() and c_k.isdigit()):
                        raise ValueError(row)
                    entry = CacheEntry(q=self.q, k=int(k), a_k=a_k, c_k=c_k, length=int(length))
                except ValueError:
                    raise CacheFormatError(self.path, f"bad row at line {line}") from None
                previous = entries.get(entry.k)
                if previous is not None and previous != entry:
                    raise CacheCorruptionError(self.q, entry.k, previous.a_k, entry.a_k)
                entries[entry.k] = entry
        return entries

    def get(self, k: int) -> Optional[CacheEntry]:
        return self.entries.get(k)

    def record(self, entry: CacheEntry) -> bool:
        """Stores `entry`, or checks it against the stored one.

        Raises:
            CacheCorruptionError: A different a_k is stored for the same k.

        Returns:
            bool: True when the entry was appended, False when it was already stored.
        """
        cached = self.entries.get(entry.k)
        if cached is not None:
            if cached != entry:
                logging.warning(
                    json.dumps(
                        {
                            "message": "cache mismatch",
                            "path": str(self.path),
                            "k": entry.k,
                            "cached": cached.a_k,
                            "computed": entry.a_k,
                        }
                    )
                )
                raise CacheCorruptionError(self.q, entry.k, cached.a_k, entry.a_k)
            return False

        self.path.parent.mkdir(parents=True, exist_ok=True)
        new_file = not self.path.exists()
        with self.path.open("a", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            if new_file:
                writer.writerow(HEADER)
            writer.writerow(entry.row())
        self.entries[entry.k] = entry
        logging.info(json.dumps({"message": "cache append", "q": self.q, "k": entry.k}))
        return True
