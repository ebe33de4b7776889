"""Append-only JSONL store of report payloads, keyed by graph, weights, command and tolerance."""
from pathlib import Path
from threading import Lock
from typing import Dict, Optional
import hashlib
import json
import logging

from exclugraph.config import file_paths

logger = logging.getLogger(__name__)


def cache_key(graph6: str, weights: str, command: str, tol: float) -> str:
    # graph6 as given, no canonical relabelling
    digest = hashlib.sha256(weights.encode("utf-8")).hexdigest()
    return f"{graph6}|{digest}|{command}|{tol!r}"


class ResultCache():

    def __init__(self, path: Optional[str] = None):
        self.path = Path(path or file_paths.cache_path)
        self._lock = Lock()
        self._entries: Optional[Dict[str, str]] = None

    def _load(self) -> Dict[str, str]:
        if self._entries is not None:
            return self._entries
        self._entries = {}
        if self.path.exists():
            with self.path.open("r", encoding="utf-8") as f:
                for line_number, line in enumerate(f, start=1):
                    line = line.strip()
                    if not line:
                        continue
                    try:
                        record = json.loads(line)
                        self._entries[record["key"]] = record["payload"]
                    except (json.JSONDecodeError, KeyError) as e:
                        logger.warning(f"Skipping corrupt cache line {line_number} in {self.path}: {e}")
        logger.debug(f"Loaded {len(self._entries)} cached results from {self.path}")
        return self._entries

    def get(self, key: str) -> Optional[str]:
        with self._lock:
            payload = self._load().get(key)
        if payload is not None:
            logger.info(f"Cache hit for {key}")
        return payload

    def put(self, key: str, payload: str) -> None:
        """Stores the payload text verbatim so a hit returns exactly what was written."""
        with self._lock:
            entries = self._load()
            if key in entries:
                return
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with self.path.open("a", encoding="utf-8") as f:
                f.write(json.dumps({"key": key, "payload": payload}) + "\n")
            entries[key] = payload

    def __len__(self) -> int:
        with self._lock:
            return len(self._load())
