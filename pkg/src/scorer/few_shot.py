# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""
Dynamic Few-Shot Selection
Picks labelled train comparisons that resemble the pair being judged.

1. Train category whose name is most similar to the test category.
2. Train image in that category closest to test image A.
3. The k comparisons involving that image whose partner is closest to
   test image B (ties by ascending pair id).
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple, TypeVar

from sklearn.feature_extraction.text import CountVectorizer
from sklearn.metrics.pairwise import cosine_similarity

from src.config import FEW_SHOT_K
from src.core.records import Dataset, ImageRecord, LabeledPair, Scope
from src.errors import ParameterDomainError
from .context import PairContext
from .scorers import TOKEN_PATTERN

logger = logging.getLogger(__name__)

Similarity = Callable[[str, str], float]
PairIndex = Dict[Tuple[Scope, int], List[LabeledPair]]
T = TypeVar("T")


def token_cosine(a: str, b: str) -> float:
    """Cosine similarity of token-count vectors; 0 when either text has no tokens."""
    try:
        vectors = CountVectorizer(token_pattern=TOKEN_PATTERN).fit_transform([a, b])
    except ValueError:  # empty vocabulary
        return 0.0
    return float(cosine_similarity(vectors[0], vectors[1])[0, 0])


def _image_text(image: ImageRecord) -> str:
    return " ".join(filter(None, [image.heading, image.alt_text]))


def index_pairs(train: Dataset) -> PairIndex:
    """(scope, image_id) -> labelled pairs involving that image."""
    index: PairIndex = {}
    for lp in train.labeled_pairs():
        for member in (lp.image_a, lp.image_b):
            index.setdefault((member.scope, member.image_id), []).append(lp)
    return index


@dataclass
class FewShotSelection:
    examples: List[LabeledPair] = field(default_factory=list)
    scope: Optional[Scope] = None
    anchor: Optional[ImageRecord] = None
    insufficient: bool = False


def select_few_shot(
    pair: PairContext,
    train: Dataset,
    k: int = FEW_SHOT_K,
    similarity: Similarity = token_cosine,
    pairs_index: Optional[PairIndex] = None,
) -> FewShotSelection:
    """
    Choose k labelled examples for one test pair.

    Returns fewer than k (with insufficient=True) when the chosen train image
    takes part in fewer comparisons. Pass a prebuilt index_pairs(train) when
    selecting for many pairs.

    Raises:
        ParameterDomainError on an empty train set or k < 1
    """
    if k < 1:
        raise ParameterDomainError(f"k must be >= 1, got {k}")
    if not train.matrices:
        raise ParameterDomainError("few-shot selection needs a non-empty train set")

    category = pair.image_a.category.replace("_", " ")
    scope = _first_best(sorted(train.matrices), lambda s: similarity(category, s[1].replace("_", " ")))

    text_a = pair.text_a()
    anchor = _first_best(train.images_in(*scope), lambda img: similarity(text_a, _image_text(img)))

    text_b = pair.text_b()
    if pairs_index is None:
        pairs_index = index_pairs(train)
    involving = pairs_index.get((scope, anchor.image_id), [])

    def partner(lp: LabeledPair) -> ImageRecord:
        return lp.image_b if lp.image_a.image_id == anchor.image_id else lp.image_a

    ranked = sorted(involving, key=lambda lp: (-similarity(text_b, _image_text(partner(lp))), lp.pair_id))
    chosen = ranked[:k]

    insufficient = len(chosen) < k
    if insufficient:
        logger.warning(
            "%s: only %d of %d few-shot examples available around %s",
            pair.pair_id, len(chosen), k, anchor.ref,
        )
    return FewShotSelection(examples=chosen, scope=scope, anchor=anchor, insufficient=insufficient)


class FewShotSelector:
    """
    select_few_shot bound to one train set, for LlmScorer.examples_for.

    The pair index is built once and only read afterwards, so one selector
    can serve a whole scoring pool.
    """

    def __init__(self, train: Dataset, k: int = FEW_SHOT_K, similarity: Similarity = token_cosine):
        self.train = train
        self.k = k
        self.similarity = similarity
        self.pairs_index = index_pairs(train)

    def select(self, pair: PairContext) -> FewShotSelection:
        return select_few_shot(pair, self.train, self.k, self.similarity, self.pairs_index)

    def __call__(self, pair: PairContext) -> List[LabeledPair]:
        return self.select(pair).examples


def _first_best(items: Sequence[T], score: Callable[[T], float]) -> T:
    """Highest-scoring item; the earliest one wins ties."""
    if not items:
        raise ParameterDomainError("nothing to choose few-shot examples from")
    best, best_score = items[0], score(items[0])
    for item in items[1:]:
        s = score(item)
        if s > best_score:
            best, best_score = item, s
    return best
