"""On-disk result cache: one JSON file per key hash."""
from __future__ import annotations

import hashlib
import json
import os
import tempfile
import time
from pathlib import Path
from typing import Any, Mapping

ENV_VAR = "ZONALKIT_CACHE"


def cache_key(command: str, args: Mapping[str, Any], version: str) -> str:
    canonical = json.dumps([command, dict(sorted(args.items())), version], sort_keys=True)
    return hashlib.sha256(canonical.encode()).hexdigest()


class ResultCache:
    def __init__(self, directory: str | os.PathLike | None):
        self.directory = Path(directory) if directory else None

    @classmethod
    def from_settings(cls, cache_dir: str | None, disabled: bool = False) -> "ResultCache":
        if disabled:
            return cls(None)
        return cls(cache_dir or os.environ.get(ENV_VAR) or None)

    @property
    def enabled(self) -> bool:
        return self.directory is not None

    def _path(self, key: str) -> Path:
        return self.directory / f"{key}.json"

    def get(self, key: str) -> Any | None:
        if not self.enabled:
            return None
        try:
            with open(self._path(key), encoding="utf-8") as fh:
                return json.load(fh)["value"]
        except (OSError, ValueError, KeyError):
            return None

    def put(self, key: str, value: Any) -> None:
        if not self.enabled:
            return
        self.directory.mkdir(parents=True, exist_ok=True)
        entry = {"key": key, "value": value, "created_at": time.time()}
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(entry, fh)
            os.replace(tmp, self._path(key))
        except BaseException:
            Path(tmp).unlink(missing_ok=True)
            raise
