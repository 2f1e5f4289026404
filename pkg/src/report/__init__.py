# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""Run manifests for experiment outputs"""
from .manifest import RunManifest, write_manifest

__all__ = ['RunManifest', 'write_manifest']
