# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""
Synthetic Corpus
Seeded stand-in for a scraped news corpus, used by the simulator when no
labeled dataset is available.

Inter-article labels are drawn i.i.d. from a configurable distribution
(default: the heavy "not replaceable" skew seen in annotated news pairs).
"""

from typing import Sequence, Tuple, Dict, Optional

import numpy as np

from src.config import (
    SYNTHETIC_LABEL_DISTRIBUTION,
    SYNTHETIC_WEBSITES,
    SYNTHETIC_CATEGORIES,
    SYNTHETIC_ARTICLES,
    SYNTHETIC_IMAGES_PER_ARTICLE,
    SYNTHETIC_MEDIAN_BYTES,
    SYNTHETIC_SIZE_SIGMA,
    DEFAULT_SEED,
    MAX_SCORE,
)
from src.errors import ParameterDomainError
from .records import ImageRecord, ReplaceabilityMatrix, Dataset

CATEGORY_NAMES = (
    "politics", "sports", "health", "entertainment", "business",
    "world", "lifestyle", "technology", "gender", "automotive",
)

TOPIC_WORDS = (
    "election", "senate", "match", "final", "vaccine", "hospital", "festival",
    "premiere", "market", "stocks", "summit", "border", "fashion", "recipe",
    "launch", "robot", "pride", "rights", "engine", "race",
)


def generate_synthetic_dataset(
    n_websites: int = SYNTHETIC_WEBSITES,
    n_categories: int = SYNTHETIC_CATEGORIES,
    articles_per_category: int = SYNTHETIC_ARTICLES,
    images_per_article: Tuple[int, int] = SYNTHETIC_IMAGES_PER_ARTICLE,
    label_distribution: Sequence[float] = SYNTHETIC_LABEL_DISTRIBUTION,
    median_bytes: int = SYNTHETIC_MEDIAN_BYTES,
    seed: Optional[int] = DEFAULT_SEED,
) -> Dataset:
    """
    Build a seeded synthetic Dataset.

    Args:
        n_websites: Number of websites
        n_categories: Categories per website
        articles_per_category: Articles per category
        images_per_article: Inclusive (min, max) images per article
        label_distribution: Probabilities of scores 0..4 for inter-article pairs
        median_bytes: Median of the log-normal byte-size distribution
        seed: RNG seed

    Returns:
        A Dataset that satisfies every loader invariant
    """
    probs = np.asarray(label_distribution, dtype=float)
    if probs.shape != (MAX_SCORE + 1,) or np.any(probs < 0) or not np.isclose(probs.sum(), 1.0):
        raise ParameterDomainError("label_distribution must be 5 non-negative values summing to 1")
    lo, hi = images_per_article
    if not 1 <= lo <= hi:
        raise ParameterDomainError(f"bad images_per_article range {images_per_article}")
    if min(n_websites, n_categories, articles_per_category) < 1:
        raise ParameterDomainError("websites, categories and articles must be positive")

    rng = np.random.default_rng(seed)
    probs = probs / probs.sum()
    images: Dict = {}
    matrices: Dict = {}

    for w in range(n_websites):
        website = f"site{w:02d}.example"
        for c in range(n_categories):
            category = CATEGORY_NAMES[c % len(CATEGORY_NAMES)]
            if c >= len(CATEGORY_NAMES):
                category = f"{category}-{c // len(CATEGORY_NAMES)}"

            article_of: Dict[int, str] = {}
            next_id = 1
            for a in range(articles_per_category):
                article_id = f"{category}-{a:03d}"
                topic = TOPIC_WORDS[int(rng.integers(len(TOPIC_WORDS)))]
                for _ in range(int(rng.integers(lo, hi + 1))):
                    size = int(rng.lognormal(np.log(median_bytes), SYNTHETIC_SIZE_SIGMA))
                    images[(website, category, next_id)] = ImageRecord(
                        website=website,
                        category=category,
                        article_id=article_id,
                        image_id=next_id,
                        byte_size=max(size, 1),
                        heading=f"{category} {topic} story {a}",
                        alt_text=f"photo of {topic}",
                    )
                    article_of[next_id] = article_id
                    next_id += 1

            ids = sorted(article_of)
            n = len(ids)
            upper = rng.choice(MAX_SCORE + 1, size=(n, n), p=probs)
            scores = np.triu(upper, k=1)
            scores = scores + scores.T
            articles = np.array([article_of[i] for i in ids], dtype=object)
            scores[articles[:, None] == articles[None, :]] = 0

            matrices[(website, category)] = ReplaceabilityMatrix.build(
                website, category, ids, scores, article_of
            )

    return Dataset(images=images, matrices=matrices)
