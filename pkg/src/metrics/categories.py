# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""
Category Breakdown
Label counts and replaceability shares per general category.

Site categories ("Politics Congress", "nba", "Formula 1") are grouped under a
short list of general categories by token cosine, then every inter-article
comparison in the group is counted.
"""

import logging
from typing import Callable, Dict, List, Mapping, Optional

from src.config import (
    MIN_SCORE,
    MAX_SCORE,
    GENERAL_CATEGORIES,
    OTHER_CATEGORY,
    LOW_REPLACEABILITY,
    HIGH_REPLACEABILITY,
)
from src.core.records import Dataset
from src.scorer.few_shot import token_cosine

logger = logging.getLogger(__name__)

Similarity = Callable[[str, str], float]

COUNT_COLUMNS = ["general_category", "categories"] + [f"n_{s}" for s in range(MIN_SCORE, MAX_SCORE + 1)] + [
    "non_zero", "total",
]
SHARE_COLUMNS = ["general_category", "total", "somewhat_moderately", "highly_completely", "feasible"]


def general_category(
    category: str,
    vocabulary: Mapping[str, str] = GENERAL_CATEGORIES,
    similarity: Similarity = token_cosine,
) -> str:
    """
    Closest general category for a site category name.

    Returns OTHER_CATEGORY when no vocabulary shares a token with the name.
    """
    name = category.replace("_", " ")
    best, best_score = OTHER_CATEGORY, 0.0
    for general, words in vocabulary.items():
        score = similarity(name, f"{general} {words}")
        if score > best_score:
            best, best_score = general, score
    return best


def category_mapping(
    dataset: Dataset,
    vocabulary: Mapping[str, str] = GENERAL_CATEGORIES,
    similarity: Similarity = token_cosine,
) -> Dict[str, str]:
    """Site category name -> general category, for every category in the dataset."""
    names = sorted({category for _, category in dataset.matrices})
    mapping = {name: general_category(name, vocabulary, similarity) for name in names}
    unmatched = [n for n, g in mapping.items() if g == OTHER_CATEGORY]
    if unmatched:
        logger.info("%d categories map to %s: %s", len(unmatched), OTHER_CATEGORY, ", ".join(unmatched))
    return mapping


def label_counts(dataset: Dataset, mapping: Optional[Mapping[str, str]] = None) -> List[Dict]:
    """
    Inter-article label counts per general category.

    Rows follow GENERAL_CATEGORIES order (OTHER_CATEGORY last); groups with
    no comparisons are left out.
    """
    mapping = mapping if mapping is not None else category_mapping(dataset)
    groups: Dict[str, Dict] = {}
    for (website, category), matrix in sorted(dataset.matrices.items()):
        general = mapping.get(category, OTHER_CATEGORY)
        row = groups.setdefault(general, {
            "general_category": general,
            "categories": 0,
            **{f"n_{s}": 0 for s in range(MIN_SCORE, MAX_SCORE + 1)},
        })
        row["categories"] += 1
        for _, _, score in matrix.inter_article_pairs():
            row[f"n_{score}"] += 1

    order = list(GENERAL_CATEGORIES) + [OTHER_CATEGORY]
    rows = []
    for general in sorted(groups, key=lambda g: order.index(g) if g in order else len(order)):
        row = groups[general]
        row["total"] = sum(row[f"n_{s}"] for s in range(MIN_SCORE, MAX_SCORE + 1))
        row["non_zero"] = row["total"] - row[f"n_{MIN_SCORE}"]
        if row["total"]:
            rows.append({col: row[col] for col in COUNT_COLUMNS})
    return rows


def replaceability_shares(counts: List[Dict]) -> List[Dict]:
    """
    Share of comparisons that are somewhat/moderately and highly/completely
    replaceable, per label_counts row. feasible is their sum (score >= 1).
    """
    rows = []
    for row in counts:
        total = row["total"]
        low = sum(row[f"n_{s}"] for s in LOW_REPLACEABILITY) / total
        high = sum(row[f"n_{s}"] for s in HIGH_REPLACEABILITY) / total
        rows.append({
            "general_category": row["general_category"],
            "total": total,
            "somewhat_moderately": low,
            "highly_completely": high,
            "feasible": low + high,
        })
    return rows
