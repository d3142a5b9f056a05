"""
Test cases for the on-disk result cache
Hits, misses, corruption tolerance and atomic concurrent writes
"""
from concurrent.futures import ThreadPoolExecutor

import orjson
import pytest

from src.core.config import EngineSettings
from src.versuite.cache import CacheEntry, ResultCache, cache_get, cache_put

FINGERPRINT = "ab" + "0" * 62


@pytest.fixture
def cache(tmp_path):
    return ResultCache(tmp_path / "cache")


class TestResultCache:
    """Test suite for ResultCache"""

    def test_put_then_get(self, cache):
        stored = cache.put(FINGERPRINT, '{"value":"24"}')
        entry = cache.get(FINGERPRINT)
        assert isinstance(entry, CacheEntry)
        assert entry.value == stored.value == '{"value":"24"}'
        assert entry.fingerprint == FINGERPRINT

    def test_unknown_fingerprint_misses(self, cache):
        assert cache.get("cd" + "1" * 62) is None

    def test_disabled_cache(self, tmp_path):
        disabled = ResultCache(tmp_path / "off", enabled=False)
        assert disabled.put(FINGERPRINT, "x") is None
        assert disabled.get(FINGERPRINT) is None
        assert not (tmp_path / "off").exists()

    def test_corrupt_entry_is_a_miss(self, cache):
        cache.put(FINGERPRINT, "x")
        cache._path(FINGERPRINT).write_text("{truncated")
        assert cache.get(FINGERPRINT) is None

    def test_entry_under_wrong_name_is_a_miss(self, cache):
        other = "ef" + "2" * 62
        cache.put(other, "x")
        path = cache._path(FINGERPRINT)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(cache._path(other).read_bytes())
        assert cache.get(FINGERPRINT) is None

    def test_rejects_non_hex_fingerprint(self, cache):
        with pytest.raises(ValueError):
            cache.get("../etc/passwd")

    def test_failed_rename_is_not_fatal(self, cache, mocker):
        mocker.patch("src.versuite.cache.os.replace", side_effect=OSError("read-only"))
        assert cache.put(FINGERPRINT, "x") is None
        assert cache.get(FINGERPRINT) is None
        assert not any(p.name.startswith(".tmp-") for p in cache.directory.rglob("*"))

    def test_concurrent_puts_leave_one_valid_entry(self, cache):
        values = [f'{{"value":"{i}"}}' for i in range(32)]
        with ThreadPoolExecutor(max_workers=8) as executor:
            list(executor.map(lambda v: cache.put(FINGERPRINT, v), values))
        raw = orjson.loads(cache._path(FINGERPRINT).read_bytes())
        assert raw["value"] in values
        assert cache.get(FINGERPRINT).value == raw["value"]
        leftovers = [p for p in cache.directory.rglob("*") if p.is_file() and p.name.startswith(".tmp-")]
        assert leftovers == []


class TestCacheFunctions:
    """Test suite for the settings-driven helpers"""

    def test_helpers_use_settings_directory(self, tmp_path):
        settings = EngineSettings(cache=tmp_path / "c")
        cache_put(FINGERPRINT, "v", settings)
        assert cache_get(FINGERPRINT, settings).value == "v"
        assert (tmp_path / "c" / "ab" / f"{FINGERPRINT}.json").exists()
