# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""
Protocol Messages
Semantic cache request and the three response shapes.
"""

from dataclasses import dataclass, asdict
from typing import Tuple, Optional, Union, Dict, Any

from src.config import THRESHOLDS, MAX_IMAGE_ID, MAX_SCORE
from src.errors import ProtocolError, ProtocolErrorToken


def _check_id(image_id: int) -> None:
    if isinstance(image_id, bool) or not isinstance(image_id, int) or not 0 <= image_id <= MAX_IMAGE_ID:
        raise ProtocolError(ProtocolErrorToken.MALFORMED_ID, f"{image_id!r} is not a 16-bit id")


@dataclass(frozen=True)
class SemanticRequest:
    """
    Image request carrying the client's cached ids for the same scope.

    cached_ids keeps the client's order; it holds no duplicates and never
    the requested id.
    """
    website: str
    category: str
    requested_id: int
    cached_ids: Tuple[int, ...] = ()
    threshold: int = 1

    def __post_init__(self):
        object.__setattr__(self, "cached_ids", tuple(self.cached_ids))
        _check_id(self.requested_id)
        for image_id in self.cached_ids:
            _check_id(image_id)
        if isinstance(self.threshold, bool) or self.threshold not in THRESHOLDS:
            raise ProtocolError(ProtocolErrorToken.THRESHOLD_RANGE, f"threshold {self.threshold!r}")
        if len(set(self.cached_ids)) != len(self.cached_ids):
            raise ProtocolError(ProtocolErrorToken.DUPLICATE_ID, "cached ids repeat")
        if self.requested_id in self.cached_ids:
            raise ProtocolError(
                ProtocolErrorToken.REQUESTED_IN_CACHE, f"{self.requested_id:04x} listed as cached"
            )
        if not self.website or not self.category:
            raise ProtocolError(ProtocolErrorToken.BAD_PATH, "empty website or category")

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class ReuseSimilar:
    """Semantic hit: display cached image `image_id` instead."""
    image_id: int
    score: int

    def __post_init__(self):
        _check_id(self.image_id)
        if not 1 <= self.score <= MAX_SCORE:
            raise ProtocolError(ProtocolErrorToken.THRESHOLD_RANGE, f"reuse score {self.score}")


@dataclass(frozen=True)
class FullImage:
    """Miss: the requested image body follows."""
    byte_size: int
    payload: Optional[bytes] = None


@dataclass(frozen=True)
class NotFound:
    """Requested image (or its scope) is unknown to the server."""
    reason: str = "image"


SemanticResponse = Union[ReuseSimilar, FullImage, NotFound]
