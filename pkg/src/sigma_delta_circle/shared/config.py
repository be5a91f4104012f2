"""
Environment configuration for Sigma-Delta Circle

Values are read from the process environment after loading an optional
.env file with python-dotenv.
"""

import os
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


@dataclass(frozen=True)
class Settings:
    """Process-wide settings"""
    output_dir: Path
    log_level: str
    grid_factor: int
    host: str
    port: int


def load_settings(env_file: Optional[str] = None) -> Settings:
    """Load settings from the environment (and .env, if present)"""
    load_dotenv(env_file)
    return Settings(
        output_dir=Path(os.environ.get("SIGMA_DELTA_OUTPUT_DIR", "./results")),
        log_level=os.environ.get("SIGMA_DELTA_LOG_LEVEL", "INFO").upper(),
        grid_factor=int(os.environ.get("SIGMA_DELTA_GRID_FACTOR", 10)),
        host=os.environ.get("HOST", "0.0.0.0"),
        port=int(os.environ.get("PORT", 8000)),
    )


def configure_logging(level: str = "INFO") -> None:
    """Configure root logging the same way for every entry point"""
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.INFO),
        format=LOG_FORMAT,
    )
