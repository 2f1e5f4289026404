# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""
Server Settings
Config file (.json or .toml) for the cache server.

    dataset   = "data/manifest.json"    # required, relative to the config file
    host      = "127.0.0.1"
    port      = 8080
    blob_root = "data/blobs"            # optional image payloads
    log_path  = "logs/access.log"       # optional
    log_level = "INFO"
"""

import json
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Optional, Dict, Any

from src.config import DEFAULT_HOST, DEFAULT_PORT
from src.errors import ConfigError


@dataclass(frozen=True)
class ServerConfig:
    dataset: Path
    host: str = DEFAULT_HOST
    port: int = DEFAULT_PORT
    blob_root: Optional[Path] = None
    log_path: Optional[Path] = None
    log_level: str = "INFO"


def load_server_config(path: str) -> ServerConfig:
    """
    Parse a server config file; paths resolve relative to the file.

    Raises:
        ConfigError on unreadable files, unknown keys or bad values
    """
    config_path = Path(path)
    if not config_path.exists():
        raise ConfigError(f"config file not found: {config_path}")

    try:
        if config_path.suffix == ".toml":
            with open(config_path, "rb") as f:
                raw: Dict[str, Any] = tomllib.load(f)
        else:
            with open(config_path, "r", encoding="utf-8") as f:
                raw = json.load(f)
    except (json.JSONDecodeError, tomllib.TOMLDecodeError) as e:
        raise ConfigError(f"{config_path}: {e}") from e

    if not isinstance(raw, dict):
        raise ConfigError(f"{config_path}: expected a table of settings")

    known = {f.name for f in fields(ServerConfig)}
    unknown = sorted(set(raw) - known)
    if unknown:
        raise ConfigError(f"{config_path}: unknown keys {unknown}")
    if "dataset" not in raw:
        raise ConfigError(f"{config_path}: 'dataset' is required")

    base = config_path.parent

    def resolve_path(value: Optional[str]) -> Optional[Path]:
        return None if value in (None, "") else base / value

    port = raw.get("port", DEFAULT_PORT)
    if isinstance(port, bool) or not isinstance(port, int) or not 0 <= port <= 65535:
        raise ConfigError(f"{config_path}: bad port {port!r}")

    return ServerConfig(
        dataset=resolve_path(raw["dataset"]),
        host=str(raw.get("host", DEFAULT_HOST)),
        port=port,
        blob_root=resolve_path(raw.get("blob_root")),
        log_path=resolve_path(raw.get("log_path")),
        log_level=str(raw.get("log_level", "INFO")),
    )
