# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""
LLM Judge
Direct and two-step scoring pipelines, with retries on unparseable output.

Direct: both images and their context go to one multimodal call.
TwoStep: a describer turns each image into text, then a text-only judge
rates the pair from those descriptions.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Callable, List, Optional, Sequence, Dict, Any

from src.config import LLM_MAX_ATTEMPTS, LLM_MAX_WORKERS, DESCRIBE_PROMPT
from src.core.records import ImageRecord, LabeledPair
from src.errors import RatingParseError, TransportError, ParameterDomainError, ReuseCacheError
from .context import PairContext, Rating
from .parsing import parse_rating
from .prompts import Template, PromptMode, render_prompt
from .transport import Transport

logger = logging.getLogger(__name__)

ImageLoader = Callable[[ImageRecord], Optional[bytes]]


class Pipeline(str, Enum):
    DIRECT = "direct"
    TWO_STEP = "two_step"


def blob_loader(blob_root: Path) -> ImageLoader:
    """Loader reading <blob_root>/<website>/<category>/<hex id>.* (None when absent)."""
    root = Path(blob_root)

    def load(image: ImageRecord) -> Optional[bytes]:
        folder = root / image.website / image.category
        matches = sorted(folder.glob(f"{image.image_id:04x}.*")) if folder.is_dir() else []
        return matches[0].read_bytes() if matches else None

    return load


def _no_images(image: ImageRecord) -> Optional[bytes]:
    return None


def describe_image(
    describer: Transport,
    image: ImageRecord,
    loader: ImageLoader = _no_images,
    prompt: str = DESCRIBE_PROMPT,
) -> str:
    """
    First step of the two-step pipeline.

    Raises:
        TransportError if the describer returns nothing
    """
    payload = loader(image)
    text = describer.complete(prompt, [payload] if payload else [])
    text = (text or "").strip()
    if not text:
        raise TransportError(f"describer returned an empty description for {image.ref}")
    return text


def _ask(transport: Transport, prompt: str, images: Sequence[bytes], max_attempts: int, ref: str) -> Rating:
    audit: List[str] = []
    last_error: Optional[RatingParseError] = None

    for attempt in range(1, max_attempts + 1):
        raw = transport.complete(prompt, images)
        audit.append(raw)
        try:
            rating = parse_rating(raw)
        except RatingParseError as e:
            last_error = e
            logger.warning("%s: attempt %d/%d unparseable (%s)", ref, attempt, max_attempts, e.code.value)
            continue
        return Rating(rating.score, rating.justification, raw, tuple(audit))

    last_error.audit = tuple(audit)
    raise last_error


def score_llm(
    pipeline: Pipeline,
    transport: Transport,
    pair: PairContext,
    template: Template = Template.METRIC_DRIVEN,
    max_attempts: int = LLM_MAX_ATTEMPTS,
    describer: Optional[Transport] = None,
    loader: ImageLoader = _no_images,
    examples: Optional[Sequence[LabeledPair]] = None,
) -> Rating:
    """
    Render, send and parse, retrying the identical prompt on parse failures.

    Args:
        pipeline: DIRECT or TWO_STEP
        transport: Judge endpoint
        pair: Pair to rate
        template: Judge prompt
        max_attempts: Total tries before giving up
        describer: Vision endpoint for TWO_STEP (unless the pair already carries descriptions)
        loader: Image payload source
        examples: Labelled pairs for few-shot prompting

    Raises:
        RatingParseError when every attempt was unparseable (the last one's code)
        TransportError on endpoint failures
    """
    if max_attempts < 1:
        raise ParameterDomainError(f"max_attempts must be >= 1, got {max_attempts}")

    pipeline = Pipeline(pipeline)
    if pipeline == Pipeline.TWO_STEP:
        if not pair.has_descriptions:
            if describer is None:
                raise ParameterDomainError(f"{pair.pair_id}: two-step scoring needs a describer")
            pair = pair.with_descriptions(
                describe_image(describer, pair.image_a, loader),
                describe_image(describer, pair.image_b, loader),
            )
        prompt = render_prompt(template, pair, PromptMode.DESCRIPTIONS, examples)
        images: List[bytes] = []
    else:
        prompt = render_prompt(template, pair, PromptMode.DIRECT_IMAGES, examples)
        images = [p for p in (loader(pair.image_a), loader(pair.image_b)) if p]

    return _ask(transport, prompt, images, max_attempts, pair.pair_id)


@dataclass
class LlmScorer:
    """score_llm with its settings bound; callable on a PairContext."""
    transport: Transport
    pipeline: Pipeline = Pipeline.DIRECT
    template: Template = Template.METRIC_DRIVEN
    max_attempts: int = LLM_MAX_ATTEMPTS
    describer: Optional[Transport] = None
    loader: ImageLoader = _no_images
    examples_for: Optional[Callable[[PairContext], Sequence[LabeledPair]]] = None

    def __call__(self, pair: PairContext) -> Rating:
        examples = self.examples_for(pair) if self.examples_for else None
        return score_llm(
            self.pipeline, self.transport, pair, self.template,
            self.max_attempts, self.describer, self.loader, examples,
        )


@dataclass
class ScoredPair:
    pair_id: str
    repeat: int
    rating: Optional[Rating] = None
    error: str = ""

    @property
    def ok(self) -> bool:
        return self.rating is not None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "pair_id": self.pair_id,
            "repeat": self.repeat,
            "score": self.rating.score if self.rating else None,
            "justification": self.rating.justification if self.rating else "",
            "attempts": self.rating.attempts if self.rating else 0,
            "error": self.error,
        }


def score_batch(
    scorer: Callable[[PairContext], Rating],
    pairs: Sequence[PairContext],
    workers: int = LLM_MAX_WORKERS,
    repeat: int = 1,
) -> List[ScoredPair]:
    """
    Score every pair `repeat` times with at most `workers` calls in flight.

    A failing job is recorded with its error and does not stop the batch.
    Results come back in (pair, repeat) order.
    """
    if repeat < 1 or workers < 1:
        raise ParameterDomainError(f"repeat and workers must be >= 1 (got {repeat}, {workers})")

    jobs = [(pair, r) for pair in pairs for r in range(repeat)]

    def run(job) -> ScoredPair:
        pair, r = job
        try:
            return ScoredPair(pair.pair_id, r, rating=scorer(pair))
        except ReuseCacheError as e:
            logger.error("%s (repeat %d): %s", pair.pair_id, r, e)
            return ScoredPair(pair.pair_id, r, error=str(e))

    if workers == 1:
        return [run(job) for job in jobs]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(run, jobs))
