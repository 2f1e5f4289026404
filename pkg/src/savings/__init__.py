# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""
Savings Module
Analytical byte-savings and page-weight model.
"""

from .model import (
    SavingsParams,
    CurvePoint,
    hit_probability,
    expected_savings,
    page_weight_reduction,
    savings_curve,
    overhead_crossover,
    plateau_x,
)
from .derive import derive_params
from .exporter import export_curve_csv

__all__ = [
    'SavingsParams',
    'CurvePoint',
    'hit_probability',
    'expected_savings',
    'page_weight_reduction',
    'savings_curve',
    'overhead_crossover',
    'plateau_x',
    'derive_params',
    'export_curve_csv',
]
