# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""
Logging Setup
Called once by the CLI; library modules only call getLogger.
"""

import logging
from pathlib import Path
from typing import Optional, Union

from src.config import ENABLE_DEBUG_LOGS

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s %(message)s"


def setup_logging(level: Union[int, str, None] = None, log_path: Optional[str] = None) -> None:
    """
    Configure the root logger.

    Args:
        level: Logging level name or number (default INFO, DEBUG if ENABLE_DEBUG_LOGS)
        log_path: Optional file to append records to, in addition to stderr
    """
    if level is None:
        level = logging.DEBUG if ENABLE_DEBUG_LOGS else logging.INFO
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())

    handlers = [logging.StreamHandler()]
    if log_path:
        path = Path(log_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(path, encoding="utf-8"))

    logging.basicConfig(level=level, format=LOG_FORMAT, handlers=handlers, force=True)
