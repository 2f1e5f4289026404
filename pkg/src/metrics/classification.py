# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""
Classification Metrics
Error and class-weighted accuracy measures for ordinal predictions.
"""

from dataclasses import dataclass, asdict
from typing import Dict, Any, Tuple

import numpy as np
from sklearn.metrics import confusion_matrix as sk_confusion_matrix
from sklearn.metrics import precision_recall_fscore_support

from src.config import MIN_SCORE, MAX_SCORE, SCORE_RANGE
from .series import RatingSeries

LABELS = list(range(MIN_SCORE, MAX_SCORE + 1))


@dataclass
class WeightedPRF:
    """Support-weighted precision, recall and F1."""
    precision: float
    recall: float
    f1: float

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class ConfusionTable:
    """
    5x5 table, rows = truth, columns = predicted.

    empty_rows lists true classes with zero support; their normalized rows
    are all zeros.
    """
    matrix: np.ndarray
    counts: np.ndarray
    normalized: bool
    empty_rows: Tuple[int, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "labels": LABELS,
            "normalized": self.normalized,
            "matrix": self.matrix.tolist(),
            "counts": self.counts.tolist(),
            "empty_rows": list(self.empty_rows),
        }


def nrmse(series: RatingSeries) -> float:
    """
    Root-mean-square error normalized by the scale range (4).

    Example:
        nrmse(RatingSeries.from_pairs([(0, 4)])) -> 1.0
    """
    predicted, truth = series.arrays()
    rmse = float(np.sqrt(np.mean((predicted - truth) ** 2)))
    return rmse / SCORE_RANGE


def weighted_prf(series: RatingSeries) -> WeightedPRF:
    """
    One-vs-rest precision/recall/F1 averaged with true-class frequency weights.

    Classes absent from the truth carry zero weight; a class whose
    denominator is zero scores 0.
    """
    predicted, truth = series.arrays()
    precision, recall, f1, _ = precision_recall_fscore_support(
        truth,
        predicted,
        labels=LABELS,
        average="weighted",
        zero_division=0,
    )
    return WeightedPRF(precision=float(precision), recall=float(recall), f1=float(f1))


def confusion_matrix(series: RatingSeries, normalize: str = "row") -> ConfusionTable:
    """
    Confusion matrix over the five classes.

    Args:
        series: Labels
        normalize: "row" to divide each row by its support, None for counts
    """
    predicted, truth = series.arrays()
    counts = sk_confusion_matrix(truth, predicted, labels=LABELS)
    support = counts.sum(axis=1)
    empty_rows = tuple(int(label) for label, s in zip(LABELS, support) if s == 0)

    if normalize is None:
        return ConfusionTable(counts.astype(float), counts, False, empty_rows)
    if normalize != "row":
        raise ValueError(f"unknown normalization {normalize!r}")

    table = np.zeros_like(counts, dtype=float)
    nonzero = support > 0
    table[nonzero] = counts[nonzero] / support[nonzero, None]
    return ConfusionTable(table, counts, True, empty_rows)
