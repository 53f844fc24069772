"""
Filesystem cache for completed rewrite systems.

Each system is one JSON file at:
  {base_dir}/presentations/{name}-n{n}-d{degree}.json

The file holds a PresentationDocument. A stored system certified to a higher
degree also serves requests for lower degrees.
"""

import json
import logging
import re
import shutil
import threading
from pathlib import Path
from typing import Dict, Optional

from pydantic import ValidationError

from models.document_models import PresentationDocument
from presentations.base import Presentation
from services.codec_service import CodecService

logger = logging.getLogger(__name__)

_FILE_RE = re.compile(r"^(?P<name>.+)-n(?P<n>\d+)-d(?P<degree>\d+)\.json$")


class PresentationStore:
    """Reads and writes completed presentations under one cache directory."""

    def __init__(self, base_dir: str = "data/cache"):
        self.base_dir = Path(base_dir)
        self.store_dir = self.base_dir / "presentations"
        self._locks: Dict[str, threading.Lock] = {}
        self._locks_guard = threading.Lock()

    def _get_lock(self, key: str) -> threading.Lock:
        with self._locks_guard:
            if key not in self._locks:
                self._locks[key] = threading.Lock()
            return self._locks[key]

    def _path(self, name: str, n: int, degree: int) -> Path:
        return self.store_dir / f"{name}-n{n}-d{degree}.json"

    def _candidates(self, name: str, n: int, degree: int):
        """Stored files for (name, n) certified to at least `degree`, lowest first."""
        if not self.store_dir.exists():
            return []
        found = []
        for path in self.store_dir.glob(f"{name}-n{n}-d*.json"):
            m = _FILE_RE.match(path.name)
            if m and m.group("name") == name and int(m.group("degree")) >= degree:
                found.append((int(m.group("degree")), path))
        return [p for _, p in sorted(found)]

    def _read_raw(self, path: Path) -> Optional[PresentationDocument]:
        try:
            with open(path, "r") as f:
                return PresentationDocument.model_validate(json.load(f))
        except (OSError, json.JSONDecodeError, ValidationError) as e:
            logger.warning(f"Ignoring unreadable cache file {path}: {e}")
            return None

    def _write_raw(self, path: Path, doc: PresentationDocument) -> None:
        self.store_dir.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".json.tmp")
        with open(tmp, "w") as f:
            json.dump(doc.model_dump(), f, indent=2)
        tmp.replace(path)

    def load_presentation(self, name: str, n: int, degree: int) -> Optional[Presentation]:
        for path in self._candidates(name, n, degree):
            with self._get_lock(path.name):
                doc = self._read_raw(path)
            if doc is None:
                continue
            logger.info(f"Cache hit: {path.name}")
            return CodecService.document_to_presentation(doc)
        logger.info(f"Cache miss: {name} (n={n}) at degree {degree}")
        return None

    def save_presentation(self, presentation: Presentation) -> Path:
        doc = CodecService.presentation_to_document(presentation)
        path = self._path(presentation.name, presentation.n, presentation.certified_degree)
        with self._get_lock(path.name):
            self._write_raw(path, doc)
        logger.info(f"Stored {path.name} ({len(doc.rules)} rules)")
        return path

    def list_cached(self) -> list:
        if not self.store_dir.exists():
            return []
        return sorted(p.name for p in self.store_dir.glob("*.json"))

    def cleanup(self) -> None:
        """Remove the whole presentation cache."""
        if self.store_dir.exists():
            shutil.rmtree(self.store_dir)
