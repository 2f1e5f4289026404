# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""
Agreement Metrics
Chance-corrected agreement between two raters on the 0-4 scale, plus the
pooled standard deviation used for repeat-prompt variability.
"""

import logging
from typing import Optional, Sequence, List, Mapping

import krippendorff
import numpy as np
from sklearn.metrics import cohen_kappa_score

from src.config import MIN_SCORE, MAX_SCORE
from src.errors import ParameterDomainError
from .series import RatingSeries

logger = logging.getLogger(__name__)

# Conventional agreement bands, checked top-down
KAPPA_BANDS = (
    (0.80, "almost perfect"),
    (0.60, "substantial"),
    (0.40, "moderate"),
    (0.20, "fair"),
    (0.0, "slight"),
)


def weighted_kappa(series: RatingSeries, weighting: str = "quadratic") -> Optional[float]:
    """
    Weighted Cohen's kappa.

    Weights are |i-j|/4 (linear) or ((i-j)/4)^2 (quadratic); the scale factor
    cancels, so sklearn's unscaled weights give the same value.

    Returns:
        kappa, or None when undefined (both raters constant and equal)
    """
    if weighting not in ("linear", "quadratic"):
        raise ParameterDomainError(f"weighting must be 'linear' or 'quadratic', got {weighting!r}")

    predicted, truth = series.arrays()
    if len(set(predicted.tolist()) | set(truth.tolist())) == 1:
        logger.debug("kappa undefined: both raters constant at %d", int(truth[0]))
        return None

    return float(cohen_kappa_score(
        truth,
        predicted,
        labels=list(range(MIN_SCORE, MAX_SCORE + 1)),
        weights=weighting,
    ))


def kappa_band(kappa: Optional[float]) -> str:
    """Agreement label for a kappa value."""
    if kappa is None:
        return "undefined"
    if kappa < 0:
        return "poor"
    for floor, label in KAPPA_BANDS:
        if kappa > floor:
            return label
    return "slight"


def krippendorff_alpha_ordinal(rater_a: Sequence[int], rater_b: Sequence[int]) -> float:
    """
    Krippendorff's alpha for two observers with ordinal data, fully paired.

    alpha = 1 - D_o / D_e over the 0-4 value domain. Returns 1.0 when one
    value is used throughout (no expected disagreement).
    """
    if len(rater_a) != len(rater_b):
        raise ParameterDomainError(f"misaligned raters: {len(rater_a)} vs {len(rater_b)}")
    if not len(rater_a):
        raise ParameterDomainError("empty ratings")
    series = RatingSeries.from_lists(rater_a, rater_b)
    a, b = series.arrays()

    if len(set(a.tolist()) | set(b.tolist())) == 1:
        return 1.0
    return float(krippendorff.alpha(
        reliability_data=np.vstack([a, b]).astype(float),
        level_of_measurement="ordinal",
        value_domain=list(range(MIN_SCORE, MAX_SCORE + 1)),
    ))


def pooled_std(groups: Sequence[Sequence[float]]) -> float:
    """
    Pooled standard deviation sqrt(sum((n_i - 1) s_i^2) / sum(n_i - 1)).

    Every group needs at least two samples.
    """
    if not groups:
        raise ParameterDomainError("no groups")
    numerator = 0.0
    dof = 0
    for pos, group in enumerate(groups):
        values = np.asarray(group, dtype=float)
        if values.size < 2:
            raise ParameterDomainError(f"group {pos} has {values.size} sample(s); need >= 2")
        numerator += (values.size - 1) * float(np.var(values, ddof=1))
        dof += values.size - 1
    return float(np.sqrt(numerator / dof))


def response_variability(repeats: Mapping[str, Sequence[int]]) -> Optional[float]:
    """Pooled std over pairs that were scored at least twice; None if there are none."""
    groups: List[Sequence[int]] = [v for v in repeats.values() if len(v) >= 2]
    if not groups:
        return None
    return pooled_std(groups)
