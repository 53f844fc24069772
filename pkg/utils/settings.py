"""Environment-driven settings. `.env` is loaded once on import."""

import logging
import os
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


class Settings:
    """Defaults < environment < explicit CLI flags (applied by the caller)."""

    def __init__(self):
        self.seed = int(os.getenv("QHOPF_SEED", "0"))
        self.cache_dir = Path(os.getenv("QHOPF_CACHE_DIR", "data/cache"))
        self.completion_bound = int(os.getenv("QHOPF_COMPLETION_BOUND", "8"))
        self.log_level = os.getenv("LOG_LEVEL", "INFO").upper()
        self.port = int(os.getenv("PORT", "8000"))
        self.environment = os.getenv("ENVIRONMENT", "development")
        # LRU bounds: normal forms per rewrite system, completed systems per process
        self.word_cache_size = int(os.getenv("QHOPF_WORD_CACHE_SIZE", "200000"))
        self.completed_cache_size = int(os.getenv("QHOPF_COMPLETED_CACHE_SIZE", "32"))


def get_settings() -> Settings:
    return Settings()


def configure_logging(level: str = "INFO") -> None:
    logging.basicConfig(level=getattr(logging, level.upper(), logging.INFO), format=LOG_FORMAT)
