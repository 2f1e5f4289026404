# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""
Scoring Types
The pair under judgment and the rating a scorer returns.
"""

from dataclasses import dataclass, asdict, replace
from typing import Optional, Dict, Any, Tuple

from src.config import MIN_SCORE, MAX_SCORE
from src.core.records import ImageRecord, LabeledPair, pair_id
from src.errors import ParameterDomainError


@dataclass(frozen=True)
class PairContext:
    """
    Two images of one (website, category) from different articles, plus
    the text a scorer may look at.
    """
    image_a: ImageRecord
    image_b: ImageRecord
    heading_a: str = ""
    heading_b: str = ""
    alt_a: Optional[str] = None
    alt_b: Optional[str] = None
    description_a: Optional[str] = None
    description_b: Optional[str] = None

    def __post_init__(self):
        a, b = self.image_a, self.image_b
        if a.scope != b.scope:
            raise ParameterDomainError(f"pair spans scopes: {a.ref} vs {b.ref}")
        if a.image_id == b.image_id:
            raise ParameterDomainError(f"pair compares {a.ref} with itself")
        if a.article_id == b.article_id:
            raise ParameterDomainError(
                f"{a.ref} and {b.ref} share article {a.article_id!r}"
            )

    @classmethod
    def from_records(cls, a: ImageRecord, b: ImageRecord) -> "PairContext":
        return cls(
            image_a=a,
            image_b=b,
            heading_a=a.heading,
            heading_b=b.heading,
            alt_a=a.alt_text,
            alt_b=b.alt_text,
        )

    @classmethod
    def from_labeled(cls, pair: LabeledPair) -> "PairContext":
        return cls.from_records(pair.image_a, pair.image_b)

    @property
    def pair_id(self) -> str:
        a, b = self.image_a, self.image_b
        return pair_id(a.website, a.category, a.image_id, b.image_id)

    @property
    def has_descriptions(self) -> bool:
        return bool(self.description_a) and bool(self.description_b)

    def with_descriptions(self, description_a: str, description_b: str) -> "PairContext":
        return replace(self, description_a=description_a, description_b=description_b)

    def text_a(self) -> str:
        return " ".join(filter(None, [self.heading_a, self.alt_a]))

    def text_b(self) -> str:
        return " ".join(filter(None, [self.heading_b, self.alt_b]))


@dataclass(frozen=True)
class Rating:
    """
    One replaceability judgment.

    Attributes:
        score: 0-4
        justification: Free-text reason (may be empty)
        raw_response: Model output the score was parsed from
        audit: Every raw response received, failed attempts included
    """
    score: int
    justification: str = ""
    raw_response: str = ""
    audit: Tuple[str, ...] = ()

    def __post_init__(self):
        if isinstance(self.score, bool) or not MIN_SCORE <= self.score <= MAX_SCORE:
            raise ParameterDomainError(f"rating score must be 0-4, got {self.score!r}")

    @property
    def attempts(self) -> int:
        return max(1, len(self.audit))

    def to_dict(self) -> Dict[str, Any]:
        d = asdict(self)
        d["audit"] = list(self.audit)
        return d
