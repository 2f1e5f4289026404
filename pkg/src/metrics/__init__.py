# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""
Metrics Module
Ordinal agreement, classification metrics and dataset statistics.
"""

from .series import RatingSeries
from .classification import (
    WeightedPRF,
    ConfusionTable,
    nrmse,
    weighted_prf,
    confusion_matrix,
)
from .agreement import (
    weighted_kappa,
    kappa_band,
    krippendorff_alpha_ordinal,
    pooled_std,
    response_variability,
)
from .dataset_stats import useful_fraction, pooled_useful_fraction, useful_fraction_table
from .categories import (
    general_category,
    category_mapping,
    label_counts,
    replaceability_shares,
    COUNT_COLUMNS,
    SHARE_COLUMNS,
)
from .report import evaluate_series
from .exporter import export_report_json, export_confusion_csv, export_rows_csv

__all__ = [
    'RatingSeries',
    'WeightedPRF',
    'ConfusionTable',
    'nrmse',
    'weighted_prf',
    'confusion_matrix',
    'weighted_kappa',
    'kappa_band',
    'krippendorff_alpha_ordinal',
    'pooled_std',
    'response_variability',
    'useful_fraction',
    'pooled_useful_fraction',
    'useful_fraction_table',
    'general_category',
    'category_mapping',
    'label_counts',
    'replaceability_shares',
    'COUNT_COLUMNS',
    'SHARE_COLUMNS',
    'evaluate_series',
    'export_report_json',
    'export_confusion_csv',
    'export_rows_csv',
]
