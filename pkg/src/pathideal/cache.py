"""Content-addressed disk cache for Betti tables.

Keys are SHA-256 hashes of the canonical serialization of (generators,
characteristic), so a hit can only ever replay the exact same computation.
Entries are written atomically (temp file + rename) and validated on read;
anything corrupt is evicted and recomputed.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path

from .monomials import MonomialIdeal
from .oracle import DEFAULT_LATTICE_CAP, BettiTable, FieldSpec, betti_table

__all__ = ["CACHE_ENV_VAR", "DEFAULT_CACHE_DIR", "BettiCache", "betti_cache_key",
           "cached_betti_table", "resolve_cache_dir"]

log = logging.getLogger(__name__)

CACHE_ENV_VAR = "PATHIDEAL_CACHE"
DEFAULT_CACHE_DIR = ".pathideal-cache"


def resolve_cache_dir(explicit: str | os.PathLike | None = None) -> Path:
    """Explicit argument wins, then $PATHIDEAL_CACHE, then the default."""
    if explicit is not None:
        return Path(explicit)
    env = os.environ.get(CACHE_ENV_VAR)
    if env:
        return Path(env)
    return Path(DEFAULT_CACHE_DIR)


def betti_cache_key(ideal: MonomialIdeal, characteristic: int) -> str:
    """SHA-256 over the canonical JSON of the generators and the field."""
    payload = {
        "ambient": ideal.ambient,
        "char": characteristic,
        "generators": [list(g.exponents) for g in ideal.generators],
    }
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


class BettiCache:
    """Directory of cached Betti tables, one JSON file per key."""

    def __init__(self, directory: str | os.PathLike | None = None):
        self.directory = resolve_cache_dir(directory)
        self.hits = 0
        self.misses = 0
        self._write_failed = False

    def _path(self, key: str) -> Path:
        return self.directory / f"{key}.json"

    def lookup(self, key: str) -> BettiTable | None:
        path = self._path(key)
        try:
            raw = path.read_text(encoding="utf-8")
        except OSError:
            self.misses += 1
            return None
        try:
            data = json.loads(raw)
            if data.get("key") != key:
                raise ValueError("stored key mismatch")
            table = BettiTable.from_dict(data["table"])
        except (ValueError, KeyError, TypeError) as exc:
            log.warning("evicting corrupt cache entry %s (%s)", path, exc)
            try:
                path.unlink()
            except OSError:
                pass
            self.misses += 1
            return None
        self.hits += 1
        return table

    def store(self, key: str, table: BettiTable) -> None:
        if self._write_failed:
            return
        payload = json.dumps(
            {"key": key, "table": table.to_dict()},
            sort_keys=True,
            separators=(",", ":"),
        )
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(
                dir=self.directory, prefix=".tmp-", suffix=".json"
            )
            try:
                with os.fdopen(fd, "w", encoding="utf-8") as fh:
                    fh.write(payload)
                os.replace(tmp, self._path(key))
            except BaseException:
                try:
                    os.unlink(tmp)
                except OSError:
                    pass
                raise
        except OSError as exc:
            # Warn once, then keep computing without the cache.
            self._write_failed = True
            log.warning("cache directory %s not writable (%s); continuing "
                        "without cache", self.directory, exc)


def cached_betti_table(
    ideal: MonomialIdeal,
    fieldspec: FieldSpec = FieldSpec(2),
    cache: BettiCache | None = None,
    lattice_cap: int = DEFAULT_LATTICE_CAP,
) -> BettiTable:
    """betti_table with an optional read-through disk cache."""
    if cache is None:
        return betti_table(ideal, fieldspec, lattice_cap)
    key = betti_cache_key(ideal, fieldspec.characteristic)
    found = cache.lookup(key)
    if found is not None:
        return found
    table = betti_table(ideal, fieldspec, lattice_cap)
    cache.store(key, table)
    return table
