"""Content-addressed JSON cache for oracle results.

The key is a SHA-256 of the oracle name, its parameters and a version tag.
The directory is ``$GREENBLOCKS_CACHE_DIR`` when set, else the user cache
directory; caching is skipped entirely when disabled.
"""
from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path

__all__ = ["cache_dir", "cached", "set_cache_enabled", "cache_enabled", "ORACLE_VERSION"]

ORACLE_VERSION = "1"
_enabled = True


def set_cache_enabled(flag: bool) -> None:
    global _enabled
    _enabled = bool(flag)


def cache_enabled() -> bool:
    return _enabled and os.environ.get("GREENBLOCKS_NO_CACHE", "") == ""


def cache_dir() -> Path:
    env = os.environ.get("GREENBLOCKS_CACHE_DIR")
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "greenblocks"


def _key(name: str, params: dict) -> str:
    blob = json.dumps({"oracle": name, "params": params, "version": ORACLE_VERSION},
                      sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


def cached(name: str, params: dict, compute):
    """Return compute() (JSON-serializable), reading or writing the cache when enabled."""
    if not cache_enabled():
        return compute()
    path = cache_dir() / f"{name}-{_key(name, params)[:24]}.json"
    if path.exists():
        try:
            return json.loads(path.read_text())["result"]
        except (OSError, ValueError, KeyError):
            pass
    result = compute()
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps({"oracle": name, "params": params, "result": result}, sort_keys=True))
        tmp.replace(path)
    except OSError:
        pass
    return result
