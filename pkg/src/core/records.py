# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""
Core Records
Image metadata, per-category replaceability matrices, and the dataset container.

Everything here is immutable after construction and safe to share across
threads.
"""

from dataclasses import dataclass, field, asdict
from typing import Dict, Any, Optional, List, Tuple, Iterator

import numpy as np

from src.config import MIN_SCORE, MAX_SCORE, MAX_IMAGE_ID
from src.errors import DatasetValidationError, UnknownImageError, IdentityLookupError

Scope = Tuple[str, str]  # (website, category)


@dataclass(frozen=True)
class ImageRecord:
    """
    One article image.

    image_id is a 16-bit value unique within (website, category); ids are
    assigned upstream by the publisher and treated as opaque here.
    """
    website: str
    category: str
    article_id: str
    image_id: int
    byte_size: int
    heading: str = ""
    alt_text: Optional[str] = None
    no_semantic_cache: bool = False

    def __post_init__(self):
        if not 0 <= self.image_id <= MAX_IMAGE_ID:
            raise DatasetValidationError(
                f"image_id {self.image_id} does not fit in 16 bits", self.ref
            )
        if self.byte_size < 0:
            raise DatasetValidationError(f"negative byte_size {self.byte_size}", self.ref)

    @property
    def scope(self) -> Scope:
        return (self.website, self.category)

    @property
    def ref(self) -> str:
        """Human-readable reference used in errors and logs."""
        return f"{self.website}/{self.category}/{self.image_id:04x}"

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True, eq=False)
class ReplaceabilityMatrix:
    """
    Symmetric N x N ordinal score table for one (website, category).

    Diagonal entries carry no meaning: asking an image against itself is an
    exact hit and never reaches the matrix.
    """
    website: str
    category: str
    scores: np.ndarray
    image_index: Dict[int, int]
    article_of: Dict[int, str]

    def __post_init__(self):
        self.scores.setflags(write=False)

    @classmethod
    def build(
        cls,
        website: str,
        category: str,
        image_ids: List[int],
        scores: Any,
        article_of: Dict[int, str],
    ) -> "ReplaceabilityMatrix":
        """
        Validate and freeze a matrix.

        Raises:
            DatasetValidationError naming the first offending cell.
        """
        ref = f"{website}/{category}"
        table = np.asarray(scores)
        n = len(image_ids)

        if table.shape != (n, n):
            raise DatasetValidationError(f"matrix shape {table.shape} != ({n}, {n})", ref)
        if len(set(image_ids)) != n:
            raise DatasetValidationError("duplicate image_id in matrix header", ref)
        if not np.issubdtype(table.dtype, np.integer):
            if not np.all(np.isfinite(table)) or not np.all(np.mod(table, 1) == 0):
                raise DatasetValidationError("matrix entries must be integers", ref)

        table = table.astype(np.int64)
        off_diag = ~np.eye(n, dtype=bool)

        bad = np.argwhere(((table < MIN_SCORE) | (table > MAX_SCORE)) & off_diag)
        if len(bad):
            i, j = bad[0]
            raise DatasetValidationError(
                f"entry {int(table[i, j])} at ({image_ids[i]}, {image_ids[j]}) outside "
                f"{{{MIN_SCORE}..{MAX_SCORE}}}",
                ref,
            )

        asym = np.argwhere((table != table.T) & off_diag)
        if len(asym):
            i, j = asym[0]
            raise DatasetValidationError(
                f"asymmetric entries at ({image_ids[i]}, {image_ids[j]}): "
                f"{int(table[i, j])} vs {int(table[j, i])}",
                ref,
            )

        for image_id in image_ids:
            if image_id not in article_of:
                raise DatasetValidationError(f"matrix references unknown image {image_id}", ref)

        articles = np.array([article_of[i] for i in image_ids], dtype=object)
        same_article = (articles[:, None] == articles[None, :]) & off_diag
        nonzero = np.argwhere(same_article & (table != 0))
        if len(nonzero):
            i, j = nonzero[0]
            raise DatasetValidationError(
                f"same-article pair must be 0 ({image_ids[i]}, {image_ids[j]} in "
                f"article {articles[i]} scored {int(table[i, j])})",
                ref,
            )

        table = table.astype(np.int8)
        np.fill_diagonal(table, MAX_SCORE)
        index = {image_id: pos for pos, image_id in enumerate(image_ids)}
        return cls(
            website=website,
            category=category,
            scores=table,
            image_index=index,
            article_of={i: article_of[i] for i in image_ids},
        )

    @property
    def n(self) -> int:
        return len(self.image_index)

    @property
    def scope(self) -> Scope:
        return (self.website, self.category)

    @property
    def image_ids(self) -> List[int]:
        """Ids in row order."""
        return sorted(self.image_index, key=self.image_index.get)

    def __contains__(self, image_id: int) -> bool:
        return image_id in self.image_index

    def replaceability(self, a: int, b: int) -> int:
        """Ordinal score 0-4 for two distinct images; symmetric in a, b."""
        if a == b:
            raise IdentityLookupError(
                f"{self.website}/{self.category}: {a:04x} against itself is an exact hit"
            )
        try:
            i = self.image_index[a]
            j = self.image_index[b]
        except KeyError as e:
            raise UnknownImageError(
                f"{self.website}/{self.category}: unknown image id {e.args[0]}"
            ) from None
        return int(self.scores[i, j])

    def inter_article_pairs(self) -> Iterator[Tuple[int, int, int]]:
        """Yield (a, b, score) for every unordered pair from different articles, a < b."""
        ids = sorted(self.image_index)
        for x, a in enumerate(ids):
            for b in ids[x + 1:]:
                if self.article_of[a] != self.article_of[b]:
                    yield a, b, int(self.scores[self.image_index[a], self.image_index[b]])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ReplaceabilityMatrix):
            return NotImplemented
        if self.scope != other.scope or self.article_of != other.article_of:
            return False
        if set(self.image_index) != set(other.image_index):
            return False
        return all(
            self.replaceability(a, b) == other.replaceability(a, b)
            for a in self.image_index for b in self.image_index if a != b
        )

    __hash__ = None


def replaceability(matrix: ReplaceabilityMatrix, a: int, b: int) -> int:
    """Look up the stored score for (a, b). See ReplaceabilityMatrix.replaceability."""
    return matrix.replaceability(a, b)


def pair_id(website: str, category: str, a: int, b: int) -> str:
    """Stable identifier for an unordered image pair."""
    lo, hi = sorted((a, b))
    return f"{website}/{category}/{lo:04x}-{hi:04x}"


@dataclass(frozen=True)
class LabeledPair:
    """An inter-article pair with its ground-truth score."""
    pair_id: str
    image_a: ImageRecord
    image_b: ImageRecord
    score: int


@dataclass(frozen=True)
class Dataset:
    """All images and matrices of a corpus, keyed by scope."""
    images: Dict[Tuple[str, str, int], ImageRecord] = field(default_factory=dict)
    matrices: Dict[Scope, ReplaceabilityMatrix] = field(default_factory=dict)

    def websites(self) -> List[str]:
        return sorted({w for w, _ in self.matrices})

    def categories(self, website: str) -> List[str]:
        return sorted(c for w, c in self.matrices if w == website)

    def matrix(self, website: str, category: str) -> ReplaceabilityMatrix:
        try:
            return self.matrices[(website, category)]
        except KeyError:
            raise UnknownImageError(f"unknown scope {website}/{category}") from None

    def image(self, website: str, category: str, image_id: int) -> ImageRecord:
        try:
            return self.images[(website, category, image_id)]
        except KeyError:
            raise UnknownImageError(
                f"unknown image {website}/{category}/{image_id:04x}"
            ) from None

    def images_in(self, website: str, category: Optional[str] = None) -> List[ImageRecord]:
        """Images of a website (optionally one category), in (category, id) order."""
        found = [
            img for (w, c, _), img in self.images.items()
            if w == website and (category is None or c == category)
        ]
        return sorted(found, key=lambda img: (img.category, img.image_id))

    def labeled_pairs(self) -> List[LabeledPair]:
        """Every inter-article pair with its score, ordered by pair id."""
        pairs = []
        for (website, category), matrix in self.matrices.items():
            for a, b, score in matrix.inter_article_pairs():
                pairs.append(LabeledPair(
                    pair_id=pair_id(website, category, a, b),
                    image_a=self.images[(website, category, a)],
                    image_b=self.images[(website, category, b)],
                    score=score,
                ))
        return sorted(pairs, key=lambda p: p.pair_id)

    def summary(self) -> Dict[str, Any]:
        return {
            "websites": len(self.websites()),
            "categories": len(self.matrices),
            "images": len(self.images),
            "pairs": sum(1 for m in self.matrices.values() for _ in m.inter_article_pairs()),
        }
