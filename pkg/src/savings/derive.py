# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""
Parameter Derivation
Estimate savings-model inputs from a labeled dataset.
"""

from typing import Dict, Optional

import numpy as np

from src.config import THRESHOLDS, ID_OVERHEAD_BYTES, DEFAULT_PAGE_WEIGHT_BYTES
from src.core.records import Dataset
from src.errors import ParameterDomainError
from src.metrics.dataset_stats import pooled_useful_fraction
from .model import SavingsParams


def derive_params(
    dataset: Dataset,
    page_weight: float = DEFAULT_PAGE_WEIGHT_BYTES,
    images_per_article: Optional[float] = None,
    id_overhead: float = ID_OVERHEAD_BYTES,
) -> SavingsParams:
    """
    Build SavingsParams from a dataset.

    N is the mean number of inter-article comparisons per category, u_t the
    pooled fraction of useful comparisons, S the mean image size and I the
    mean images per article (unless given).
    """
    if not dataset.matrices:
        raise ParameterDomainError("dataset has no categories")

    comparisons = [sum(1 for _ in m.inter_article_pairs()) for m in dataset.matrices.values()]
    N = max(1, int(round(float(np.mean(comparisons)))))

    u: Dict[int, float] = {t: pooled_useful_fraction(dataset, t) for t in THRESHOLDS}

    sizes = [img.byte_size for img in dataset.images.values()]
    S = float(np.mean(sizes)) if sizes else 0.0
    if S <= 0:
        raise ParameterDomainError("dataset images have no bytes")

    if images_per_article is None:
        articles: Dict = {}
        for img in dataset.images.values():
            key = (img.website, img.category, img.article_id)
            articles[key] = articles.get(key, 0) + 1
        images_per_article = float(np.mean(list(articles.values())))

    return SavingsParams(
        N=N,
        u=u,
        S=S,
        X=0,
        P=page_weight,
        I=images_per_article,
        id_overhead=id_overhead,
    )
