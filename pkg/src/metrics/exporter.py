# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""
Metrics Exporter
Evaluation report JSON, confusion-matrix CSV and dataset label tables.
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Sequence

import pandas as pd

from .classification import ConfusionTable, LABELS


def _prepare(output_path: str) -> Path:
    path = Path(output_path)
    path.parent.mkdir(parents=True, exist_ok=True)
    return path


def export_report_json(report: Dict[str, Any], output_path: str) -> str:
    """
    Write an evaluate_series report as indented JSON.

    Returns:
        Path to created file
    """
    path = _prepare(output_path)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(report, f, indent=2)
    return str(path)


def export_confusion_csv(table: ConfusionTable, output_path: str) -> str:
    """
    5x5 count table: one row per truth label, one column per predicted label.

    Header: truth,0,1,2,3,4
    """
    path = _prepare(output_path)
    frame = pd.DataFrame(
        table.counts,
        index=pd.Index(LABELS, name="truth"),
        columns=[str(label) for label in LABELS],
    )
    frame.to_csv(path)
    return str(path)


def export_rows_csv(rows: List[Dict[str, Any]], columns: Sequence[str], output_path: str) -> str:
    """Plain table of dict rows in the given column order."""
    path = _prepare(output_path)
    pd.DataFrame(rows, columns=list(columns)).to_csv(path, index=False)
    return str(path)
