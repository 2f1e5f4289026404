# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""
Request Resolver
Origin-side decision: reuse a cached image, send the full image, or 404.

IMPORTANT: ServerState is read-only after construction; handlers share it
without locks.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Tuple

from src.core.records import Dataset
from src.protocol.messages import SemanticRequest, SemanticResponse, ReuseSimilar, FullImage, NotFound


@dataclass(frozen=True)
class ServerState:
    """Immutable dataset plus an optional directory of image payloads."""
    dataset: Dataset
    blob_root: Optional[Path] = None

    def resolve(self, req: SemanticRequest) -> SemanticResponse:
        return resolve(self, req)

    def blob_path(self, website: str, category: str, image_id: int) -> Optional[Path]:
        """Payload file <blob_root>/<website>/<category>/<hex id>.*, if present."""
        if self.blob_root is None:
            return None
        folder = Path(self.blob_root) / website / category
        matches = sorted(folder.glob(f"{image_id:04x}.*")) if folder.is_dir() else []
        return matches[0] if matches else None


def best_candidate(state: ServerState, req: SemanticRequest) -> Optional[Tuple[int, int]]:
    """
    (image_id, score) of the best cached substitute, or None.

    Highest score wins; ties go to the lowest image id. Cached ids the
    matrix does not know are skipped. Images flagged no_semantic_cache never
    take part.
    """
    matrix = state.dataset.matrices[(req.website, req.category)]
    images = state.dataset.images
    best: Optional[Tuple[int, int]] = None

    for cached_id in req.cached_ids:
        if cached_id not in matrix:
            continue
        if images[(req.website, req.category, cached_id)].no_semantic_cache:
            continue
        score = matrix.replaceability(req.requested_id, cached_id)
        if best is None or (score, -cached_id) > (best[1], -best[0]):
            best = (cached_id, score)
    return best


def resolve(state: ServerState, req: SemanticRequest) -> SemanticResponse:
    """
    Answer a semantic request.

    Returns:
        ReuseSimilar(best, score) when the best cached score meets the
        threshold, FullImage(byte_size) otherwise, NotFound for an unknown
        scope ("category") or requested image ("image")
    """
    scope = (req.website, req.category)
    if scope not in state.dataset.matrices:
        return NotFound(reason="category")

    requested = state.dataset.images.get((req.website, req.category, req.requested_id))
    if requested is None:
        return NotFound(reason="image")

    if not requested.no_semantic_cache:
        best = best_candidate(state, req)
        if best is not None and best[1] >= req.threshold:
            return ReuseSimilar(image_id=best[0], score=best[1])

    return FullImage(byte_size=requested.byte_size)
