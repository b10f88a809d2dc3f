"""Content-addressed cache for command outputs.

Keys are sha256 digests over the format version, the command name, the
canonical form of the input document and the options that influence the
result.  A version bump therefore retires every old entry at once; stale
entries are never read and never migrated.  Entries store the exact output
bytes, so a cache hit is byte-identical to recomputation by construction.
"""

import hashlib
import json
import os

from .specio import FORMAT_VERSION

ENV_VAR = "RADHOM_CACHE_DIR"


def default_cache_dir():
    base = os.environ.get(ENV_VAR)
    if base:
        return base
    return os.path.join(os.path.expanduser("~"), ".cache", "radhom")


def cache_key(command, doc, options=None):
    """Digest of everything that determines a command's output."""
    payload = json.dumps([FORMAT_VERSION, command, doc, options or {}],
                         sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


class CacheStore:
    """One file per entry under a root directory, created lazily."""

    def __init__(self, root=None):
        self.root = root or default_cache_dir()

    def _path(self, key):
        return os.path.join(self.root, key + ".json")

    def get(self, key):
        try:
            with open(self._path(key), "r", encoding="utf-8") as fh:
                entry = json.load(fh)
        except (OSError, json.JSONDecodeError):
            return None
        if entry.get("version") != FORMAT_VERSION:
            return None
        text = entry.get("output")
        return text if isinstance(text, str) else None

    def put(self, key, text):
        try:
            os.makedirs(self.root, exist_ok=True)
            tmp = self._path(key) + ".tmp"
            with open(tmp, "w", encoding="utf-8") as fh:
                json.dump({"version": FORMAT_VERSION, "output": text}, fh)
            os.replace(tmp, self._path(key))
        except OSError:
            pass
