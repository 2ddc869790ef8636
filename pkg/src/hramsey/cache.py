"""Content-addressed on-disk cache for computed reports.

Keys hash the full request (command, class key, parameters) together
with ENGINE_VERSION, so stale entries from older engine revisions are
never served.  All failures degrade to cache-off behaviour: a corrupted
or unreadable entry is recomputed, an unwritable directory only costs a
warning.
"""

from __future__ import annotations

import hashlib
import json
import os
import sys
import tempfile

ENGINE_VERSION = "0.1.0"

_ENV_VAR = "RAMSEY_CACHE"


def cache_key(*parts: object) -> str:
    """Stable hex digest of the request parts plus the engine version."""
    blob = json.dumps([ENGINE_VERSION, *parts], sort_keys=True, default=str)
    return hashlib.sha256(blob.encode()).hexdigest()


class ResultCache:
    """JSON store addressed by cache_key digests.

    root None disables the cache entirely; load always misses and store
    is a no-op.
    """

    def __init__(self, root: str | None):
        self.root = root
        self._broken = False

    @classmethod
    def from_options(cls, cache_dir: str | None) -> "ResultCache":
        root = cache_dir if cache_dir is not None else os.environ.get(_ENV_VAR)
        return cls(root or None)

    @property
    def enabled(self) -> bool:
        return self.root is not None and not self._broken

    def _path(self, key: str) -> str:
        assert self.root is not None
        return os.path.join(self.root, key + ".json")

    def load(self, key: str) -> dict | None:
        if not self.enabled:
            return None
        path = self._path(key)
        try:
            with open(path, encoding="utf-8") as fh:
                payload = json.load(fh)
        except FileNotFoundError:
            return None
        except (OSError, json.JSONDecodeError, UnicodeDecodeError) as exc:
            print(f"warning: discarding bad cache entry {path}: {exc}", file=sys.stderr)
            return None
        if not isinstance(payload, dict):
            print(f"warning: discarding bad cache entry {path}: not an object", file=sys.stderr)
            return None
        return payload

    def store(self, key: str, payload: dict) -> None:
        if not self.enabled:
            return
        assert self.root is not None
        try:
            os.makedirs(self.root, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.root, suffix=".tmp")
            try:
                with os.fdopen(fd, "w", encoding="utf-8") as fh:
                    json.dump(payload, fh, sort_keys=True)
                os.replace(tmp, self._path(key))
            except BaseException:
                os.unlink(tmp)
                raise
        except OSError as exc:
            print(f"warning: cache disabled, cannot write {self.root}: {exc}", file=sys.stderr)
            self._broken = True
