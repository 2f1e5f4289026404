# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""
Simulation Exporter
Per-trial and per-cell CSV output for box plots.
"""

from pathlib import Path

import pandas as pd

from .simulator import SimResult, summarize, SUMMARY_COLUMNS

TRIAL_COLUMNS = ["fw", "ac", "trial", "exact_bytes", "semantic_bytes", "savings_pct"]


def _prepare(output_path: str) -> Path:
    path = Path(output_path)
    path.parent.mkdir(parents=True, exist_ok=True)
    return path


def export_trials_csv(result: SimResult, output_path: str) -> str:
    """
    One row per pseudo-client.

    Columns: fw, ac, trial, exact_bytes, semantic_bytes, savings_pct
    """
    path = _prepare(output_path)
    frame = pd.DataFrame([r.to_dict() for r in result.records], columns=TRIAL_COLUMNS)
    frame.to_csv(path, index=False)
    return str(path)


def export_summary_csv(result: SimResult, output_path: str) -> str:
    """One row of quartile statistics per (FW, AC) cell."""
    path = _prepare(output_path)
    pd.DataFrame(summarize(result), columns=SUMMARY_COLUMNS).to_csv(path, index=False)
    return str(path)
