# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""
Client Module
Client-side caches and the pseudo-client simulator.
"""

from .cache import (
    ClientCache,
    CacheCounters,
    FetchMode,
    FetchSource,
    FetchOutcome,
    Origin,
    Unbounded,
    LruCapped,
)
from .origin import HttpOrigin
from .simulator import (
    SimConfig,
    SimResult,
    TrialRecord,
    relative_savings_pct,
    draw_requests,
    replay,
    run_simulation,
    run_grid,
    summarize,
)
from .exporter import export_trials_csv, export_summary_csv

__all__ = [
    'ClientCache',
    'CacheCounters',
    'FetchMode',
    'FetchSource',
    'FetchOutcome',
    'Origin',
    'Unbounded',
    'LruCapped',
    'HttpOrigin',
    'SimConfig',
    'SimResult',
    'TrialRecord',
    'relative_savings_pct',
    'draw_requests',
    'replay',
    'run_simulation',
    'run_grid',
    'summarize',
    'export_trials_csv',
    'export_summary_csv',
]
