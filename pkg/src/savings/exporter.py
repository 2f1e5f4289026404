# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""
Savings Exporter
Write savings curves as plot-ready CSV.
"""

from pathlib import Path
from typing import List

import pandas as pd

from .model import CurvePoint

CURVE_COLUMNS = ["X", "p", "mu_bytes", "M_fraction"]


def export_curve_csv(curve: List[CurvePoint], output_path: str) -> str:
    """
    Export one threshold's curve.

    Columns: X, p, mu_bytes, M_fraction

    Returns:
        Path to created file
    """
    path = Path(output_path)
    path.parent.mkdir(parents=True, exist_ok=True)

    frame = pd.DataFrame([point.to_dict() for point in curve], columns=CURVE_COLUMNS)
    frame.to_csv(path, index=False)
    return str(path)
