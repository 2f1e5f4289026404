# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""
Evaluation Report
All agreement metrics for one predicted-vs-truth series, as a dict.
"""

from typing import Dict, Any, Mapping, Optional, Sequence

from .series import RatingSeries
from .classification import nrmse, weighted_prf, confusion_matrix
from .agreement import weighted_kappa, kappa_band, response_variability


def evaluate_series(
    series: RatingSeries,
    repeats: Optional[Mapping[str, Sequence[int]]] = None,
) -> Dict[str, Any]:
    """
    Compute the full metric set.

    Args:
        series: One (predicted, truth) entry per scored pair
        repeats: Optional pair_id -> repeated predictions, for response variability
    """
    prf = weighted_prf(series)
    kappa_q = weighted_kappa(series, "quadratic")
    kappa_l = weighted_kappa(series, "linear")

    return {
        "n": len(series),
        "nrmse": nrmse(series),
        "precision_weighted": prf.precision,
        "recall_weighted": prf.recall,
        "f1_weighted": prf.f1,
        "kappa_quadratic": kappa_q,
        "kappa_linear": kappa_l,
        "agreement": kappa_band(kappa_q),
        "response_variability": response_variability(repeats) if repeats else None,
        "confusion_matrix": confusion_matrix(series, normalize="row").to_dict(),
    }
