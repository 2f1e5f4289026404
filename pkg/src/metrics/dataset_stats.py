# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""
Dataset Statistics
Useful-comparison fractions that feed the savings model.
"""

from typing import Dict, List

from src.config import THRESHOLDS
from src.core.records import ReplaceabilityMatrix, Dataset
from src.errors import ParameterDomainError


def _check_threshold(t: int) -> None:
    if t not in THRESHOLDS:
        raise ParameterDomainError(f"threshold {t} outside {THRESHOLDS}")


def useful_fraction(matrix: ReplaceabilityMatrix, t: int) -> float:
    """Fraction of inter-article unordered pairs scoring >= t (0 when there are none)."""
    _check_threshold(t)
    total = 0
    useful = 0
    for _, _, score in matrix.inter_article_pairs():
        total += 1
        useful += score >= t
    return useful / total if total else 0.0


def pooled_useful_fraction(dataset: Dataset, t: int) -> float:
    """useful_fraction over all categories' pairs taken together."""
    _check_threshold(t)
    total = 0
    useful = 0
    for matrix in dataset.matrices.values():
        for _, _, score in matrix.inter_article_pairs():
            total += 1
            useful += score >= t
    return useful / total if total else 0.0


def useful_fraction_table(dataset: Dataset, thresholds=THRESHOLDS) -> List[Dict]:
    """One row per category with u_t for each threshold."""
    rows = []
    for (website, category), matrix in sorted(dataset.matrices.items()):
        row = {"website": website, "category": category, "n_images": matrix.n}
        for t in thresholds:
            row[f"u_{t}"] = useful_fraction(matrix, t)
        rows.append(row)
    return rows
