# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""
Offline Scorers
Ground-truth lookup and a token-overlap heuristic; neither needs a model.
"""

from typing import FrozenSet

from sklearn.feature_extraction.text import CountVectorizer

from src.config import HEURISTIC_CUTS, MIN_SCORE
from src.core.records import ReplaceabilityMatrix
from .context import PairContext, Rating

TOKEN_PATTERN = r"(?u)\b\w+\b"

_analyzer = CountVectorizer(token_pattern=TOKEN_PATTERN, lowercase=True).build_analyzer()


def tokens(text: str) -> FrozenSet[str]:
    return frozenset(_analyzer(text or ""))


def jaccard(a: FrozenSet[str], b: FrozenSet[str]) -> float:
    """Jaccard index; two empty sets score 0."""
    union = a | b
    if not union:
        return 0.0
    return len(a & b) / len(union)


def bucket(similarity: float) -> int:
    for cut, score in HEURISTIC_CUTS:
        if similarity >= cut:
            return score
    return MIN_SCORE


def score_ground_truth(matrix: ReplaceabilityMatrix, pair: PairContext) -> Rating:
    """Read the labelled score straight from the matrix."""
    score = matrix.replaceability(pair.image_a.image_id, pair.image_b.image_id)
    return Rating(score=score, justification="ground-truth")


def score_heuristic(pair: PairContext) -> Rating:
    """
    Bucket the Jaccard overlap of heading + alt-text tokens:
    >=0.8 -> 4, >=0.6 -> 3, >=0.4 -> 2, >=0.2 -> 1, else 0.
    """
    similarity = jaccard(tokens(pair.text_a()), tokens(pair.text_b()))
    return Rating(score=bucket(similarity), justification=f"token jaccard {similarity:.3f}")
