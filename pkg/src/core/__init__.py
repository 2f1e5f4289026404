# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""
Core Module
Domain records, dataset ingestion and replaceability lookup.
"""

from .records import (
    ImageRecord,
    ReplaceabilityMatrix,
    LabeledPair,
    Dataset,
    replaceability,
    pair_id,
)
from .loader import load_dataset, save_dataset
from .synthetic import generate_synthetic_dataset

__all__ = [
    'ImageRecord',
    'ReplaceabilityMatrix',
    'LabeledPair',
    'Dataset',
    'replaceability',
    'pair_id',
    'load_dataset',
    'save_dataset',
    'generate_synthetic_dataset',
]
