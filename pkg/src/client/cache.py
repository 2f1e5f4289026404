# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""
Client Cache
Browser-side image cache with exact and semantic lookup modes.

A semantic hit leaves the cache unchanged apart from recency: the client
holds the substitute, not the requested image, so the requested id is never
inserted.

NOTE: a ClientCache is not safe for concurrent mutation; give each
simulated client its own instance.
"""

from collections import OrderedDict
from dataclasses import dataclass, asdict
from enum import Enum
from typing import Dict, Any, Optional, Protocol, Tuple, Union, List

from src.core.records import ImageRecord, Scope
from src.errors import ParameterDomainError, ProtocolError, ProtocolErrorToken, UnknownImageError
from src.protocol.codec import request_overhead_bytes
from src.protocol.messages import SemanticRequest, SemanticResponse, ReuseSimilar, FullImage, NotFound


class Origin(Protocol):
    """Anything that answers semantic requests (in-process state or HTTP)."""

    def resolve(self, req: SemanticRequest) -> SemanticResponse:
        ...


class FetchMode(str, Enum):
    EXACT = "exact"
    SEMANTIC = "semantic"


class FetchSource(str, Enum):
    EXACT_HIT = "EXACT_HIT"
    SEMANTIC_HIT = "SEMANTIC_HIT"
    DOWNLOAD = "DOWNLOAD"


@dataclass(frozen=True)
class Unbounded:
    """Never evict."""


@dataclass(frozen=True)
class LruCapped:
    """Evict least-recently-used entries beyond max_entries (across all scopes)."""
    max_entries: int

    def __post_init__(self):
        if self.max_entries < 1:
            raise ParameterDomainError(f"max_entries must be positive, got {self.max_entries}")


CachePolicy = Union[Unbounded, LruCapped]


@dataclass
class FetchOutcome:
    """Result of one image fetch."""
    source: FetchSource
    bytes_charged: int
    overhead_bytes: int = 0
    reused_id: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class CacheCounters:
    bytes_downloaded: int = 0
    overhead_bytes: int = 0
    exact_hits: int = 0
    semantic_hits: int = 0
    misses: int = 0

    @property
    def total_bytes(self) -> int:
        return self.bytes_downloaded + self.overhead_bytes

    def to_dict(self) -> Dict[str, Any]:
        d = asdict(self)
        d["total_bytes"] = self.total_bytes
        return d


class ClientCache:
    """
    Per-client image cache keyed by (website, category) scope.

    Args:
        policy: Unbounded() or LruCapped(n)
        include_overhead: Charge 2 bytes per appended id on semantic requests
    """

    def __init__(self, policy: Optional[CachePolicy] = None, include_overhead: bool = False):
        self.policy: CachePolicy = policy or Unbounded()
        self.include_overhead = include_overhead
        self.entries: Dict[Scope, Dict[int, int]] = {}
        self._recency: "OrderedDict[Tuple[str, str, int], None]" = OrderedDict()
        self.counters = CacheCounters()

    def __len__(self) -> int:
        return len(self._recency)

    def __contains__(self, image: ImageRecord) -> bool:
        return image.image_id in self.entries.get(image.scope, {})

    def cached_ids(self, scope: Scope) -> List[int]:
        """Ids held for a scope, oldest insertion first."""
        return list(self.entries.get(scope, {}))

    def _touch(self, scope: Scope, image_id: int) -> None:
        self._recency.move_to_end((scope[0], scope[1], image_id))

    def _insert(self, image: ImageRecord) -> None:
        self.entries.setdefault(image.scope, {})[image.image_id] = image.byte_size
        self._recency[(image.website, image.category, image.image_id)] = None
        if isinstance(self.policy, LruCapped):
            while len(self._recency) > self.policy.max_entries:
                website, category, image_id = self._recency.popitem(last=False)[0]
                scope_entries = self.entries[(website, category)]
                del scope_entries[image_id]
                if not scope_entries:
                    del self.entries[(website, category)]

    def fetch(
        self,
        origin: Origin,
        image: ImageRecord,
        threshold: int,
        mode: FetchMode = FetchMode.SEMANTIC,
    ) -> FetchOutcome:
        """
        Fetch one image.

        Exact mode only hits on the same id. Semantic mode checks the exact
        cache first, then asks the origin with every cached id of the scope.

        Raises:
            UnknownImageError when the origin does not know the image
            ProtocolError when the origin names an image the client lacks
        """
        if image in self:
            self._touch(image.scope, image.image_id)
            self.counters.exact_hits += 1
            return FetchOutcome(FetchSource.EXACT_HIT, 0)

        cached = self.cached_ids(image.scope) if mode == FetchMode.SEMANTIC else []
        req = SemanticRequest(
            website=image.website,
            category=image.category,
            requested_id=image.image_id,
            cached_ids=tuple(cached),
            threshold=threshold,
        )
        overhead = request_overhead_bytes(req) if self.include_overhead else 0
        self.counters.overhead_bytes += overhead

        resp = origin.resolve(req)

        if isinstance(resp, ReuseSimilar):
            if resp.image_id not in cached:
                raise ProtocolError(
                    ProtocolErrorToken.MALFORMED_ID,
                    f"{image.ref}: origin reused {resp.image_id:04x}, which is not cached",
                )
            self._touch(image.scope, resp.image_id)
            self.counters.semantic_hits += 1
            return FetchOutcome(FetchSource.SEMANTIC_HIT, overhead, overhead, resp.image_id)

        if isinstance(resp, FullImage):
            self._insert(image)
            self.counters.misses += 1
            self.counters.bytes_downloaded += resp.byte_size
            return FetchOutcome(FetchSource.DOWNLOAD, resp.byte_size + overhead, overhead)

        if isinstance(resp, NotFound):
            raise UnknownImageError(f"{image.ref}: origin has no such {resp.reason}")
        raise TypeError(f"{image.ref}: unexpected response {resp!r}")
