# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""
Run Manifest
JSON record of how an experiment output was produced, written next to it.
"""

import json
import platform
from dataclasses import dataclass, field, asdict
from datetime import datetime, timezone
from pathlib import Path
from typing import Dict, Any, List

from src.config import VERSION


@dataclass
class RunManifest:
    """
    Attributes:
        command: CLI subcommand that produced the outputs
        parameters: Effective arguments (seeds included)
        dataset: Dataset summary counts, if one was used
        outputs: Paths of files written by the run
        results: Small headline numbers worth keeping with the files
    """
    command: str
    parameters: Dict[str, Any] = field(default_factory=dict)
    dataset: Dict[str, Any] = field(default_factory=dict)
    outputs: List[str] = field(default_factory=list)
    results: Dict[str, Any] = field(default_factory=dict)
    version: str = VERSION
    python: str = field(default_factory=platform.python_version)
    created_at: str = field(default_factory=lambda: datetime.now(timezone.utc).isoformat())

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def write_manifest(manifest: RunManifest, output_path: str) -> str:
    """
    Write the manifest as indented JSON.

    Returns:
        Path to created file
    """
    path = Path(output_path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(manifest.to_dict(), f, indent=2, default=str)
    return str(path)
