# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""
Server Module
Replaceability-matrix origin answering reuse_similar requests.
"""

from .resolver import ServerState, resolve, best_candidate
from .settings import ServerConfig, load_server_config
from .app import build_state, create_app, serve

__all__ = [
    'ServerState',
    'resolve',
    'best_candidate',
    'ServerConfig',
    'load_server_config',
    'build_state',
    'create_app',
    'serve',
]
