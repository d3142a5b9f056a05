"""
On-disk result cache
One JSON file per fingerprint, written atomically through a temporary file and os.replace
"""
import os
import tempfile
from datetime import datetime, timezone
from pathlib import Path
from typing import Optional

import orjson
from loguru import logger
from pydantic import BaseModel, Field, ValidationError

from .. import ENGINE_VERSION
from ..core.config import EngineSettings, get_settings


class CacheEntry(BaseModel):
    """Stored result of one fingerprinted computation"""
    fingerprint: str = Field(description="Canonical hash of method, parameters and polynomial data")
    value: str = Field(description="Serialized result document")
    engine_version: str = Field(default=ENGINE_VERSION)
    timestamp: str = Field(default_factory=lambda: datetime.now(timezone.utc).isoformat())


class ResultCache:
    """Fingerprint-keyed store; storage problems turn into misses, never into failures"""

    def __init__(self, directory: Path, enabled: bool = True):
        self.directory = Path(directory)
        self.enabled = enabled

    @classmethod
    def from_settings(cls, settings: Optional[EngineSettings] = None) -> "ResultCache":
        settings = settings or get_settings()
        return cls(settings.cache, settings.cache_enabled)

    def _path(self, fingerprint: str) -> Path:
        if not fingerprint or any(ch not in "0123456789abcdef" for ch in fingerprint):
            raise ValueError(f"fingerprint must be lowercase hex: {fingerprint!r}")
        return self.directory / fingerprint[:2] / f"{fingerprint}.json"

    def get(self, fingerprint: str) -> Optional[CacheEntry]:
        if not self.enabled:
            return None
        path = self._path(fingerprint)
        try:
            raw = path.read_bytes()
        except FileNotFoundError:
            return None
        except OSError as e:
            logger.warning(f"cache read failed for {fingerprint[:12]}: {e}")
            return None
        try:
            entry = CacheEntry.model_validate(orjson.loads(raw))
        except (orjson.JSONDecodeError, ValidationError) as e:
            logger.warning(f"ignoring corrupt cache entry {path}: {e}")
            return None
        if entry.fingerprint != fingerprint:
            logger.warning(f"cache entry {path} holds fingerprint {entry.fingerprint[:12]}")
            return None
        logger.debug(f"cache hit {fingerprint[:12]}")
        return entry

    def put(self, fingerprint: str, value: str) -> Optional[CacheEntry]:
        if not self.enabled:
            return None
        entry = CacheEntry(fingerprint=fingerprint, value=value)
        path = self._path(fingerprint)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            fd, temp_name = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".json")
            try:
                with os.fdopen(fd, "wb") as handle:
                    handle.write(orjson.dumps(entry.model_dump(mode="json"), option=orjson.OPT_SORT_KEYS))
                    handle.flush()
                    os.fsync(handle.fileno())
                os.replace(temp_name, path)
            except BaseException:
                Path(temp_name).unlink(missing_ok=True)
                raise
        except OSError as e:
            logger.warning(f"cache write failed for {fingerprint[:12]}: {e}")
            return None
        logger.debug(f"cache put {fingerprint[:12]}")
        return entry


def cache_get(fingerprint: str, settings: Optional[EngineSettings] = None) -> Optional[CacheEntry]:
    return ResultCache.from_settings(settings).get(fingerprint)


def cache_put(fingerprint: str, value: str, settings: Optional[EngineSettings] = None) -> Optional[CacheEntry]:
    return ResultCache.from_settings(settings).put(fingerprint, value)
