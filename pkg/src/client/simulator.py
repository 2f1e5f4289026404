# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""
Pseudo-Client Simulator
Replays random browsing sessions through an exact cache and a semantic
cache and compares the bytes each one transfers.

Each trial picks FW websites without replacement, then AC image requests
uniformly with replacement from those websites' images. The same request
sequence goes through both caches. Trial k uses the RNG stream seeded with
rng_seed ^ k, so cells and trials can run in any order.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, asdict, replace, field
from typing import List, Dict, Any, Optional, Sequence

import numpy as np
import pandas as pd

from src.config import DEFAULT_TRIALS, DEFAULT_SEED, MIN_SCORE, MAX_SCORE
from src.core.records import Dataset, ImageRecord
from src.errors import ParameterDomainError
from src.server.resolver import ServerState
from .cache import ClientCache, FetchMode, Origin, Unbounded, LruCapped

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SimConfig:
    """
    One (FW, AC) cell of the simulation grid.

    Attributes:
        fw: Frequented websites per pseudo-client
        ac: Image requests per pseudo-client
        trials: Pseudo-clients per cell
        threshold: Minimum score accepted as a substitute (1-4)
        include_overhead: Charge the appended-id bytes to the semantic cache
        rng_seed: Base seed; trial k uses rng_seed ^ k
        max_entries: LRU capacity per client, None for unbounded
    """
    fw: int
    ac: int
    trials: int = DEFAULT_TRIALS
    threshold: int = 1
    include_overhead: bool = False
    rng_seed: int = DEFAULT_SEED
    max_entries: Optional[int] = None

    def __post_init__(self):
        if self.fw < 1 or self.ac < 1 or self.trials < 1:
            raise ParameterDomainError(
                f"fw, ac and trials must be >= 1 (got fw={self.fw}, ac={self.ac}, trials={self.trials})"
            )
        if not MIN_SCORE < self.threshold <= MAX_SCORE:
            raise ParameterDomainError(f"threshold must be 1-4, got {self.threshold}")
        if not 0 <= self.rng_seed < 2 ** 64:
            raise ParameterDomainError(f"rng_seed must be a 64-bit unsigned integer, got {self.rng_seed}")
        if self.max_entries is not None and self.max_entries < 1:
            raise ParameterDomainError(f"max_entries must be positive, got {self.max_entries}")


@dataclass
class TrialRecord:
    fw: int
    ac: int
    trial: int
    exact_bytes: int
    semantic_bytes: int
    savings_pct: float
    threshold: int = 1
    overhead_bytes: int = 0
    semantic_hits: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class SimResult:
    """Per-trial records of one or more grid cells."""
    records: List[TrialRecord] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.records)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([r.to_dict() for r in self.records])

    def summary(self) -> List[Dict[str, Any]]:
        return summarize(self)


def relative_savings_pct(exact_bytes: int, semantic_bytes: int) -> float:
    """Percent fewer bytes than exact caching; 0 when nothing was transferred."""
    if exact_bytes <= 0:
        return 0.0
    return 100.0 * (exact_bytes - semantic_bytes) / exact_bytes


def _website_pools(dataset: Dataset) -> Dict[str, List[ImageRecord]]:
    return {w: dataset.images_in(w) for w in dataset.websites()}


def draw_requests(
    websites: Sequence[str],
    pools: Dict[str, List[ImageRecord]],
    fw: int,
    ac: int,
    rng: np.random.Generator,
) -> List[ImageRecord]:
    """FW websites without replacement, then AC images with replacement from their union."""
    chosen = sorted(rng.choice(len(websites), size=fw, replace=False))
    pool = [img for i in chosen for img in pools[websites[i]]]
    if not pool:
        raise ParameterDomainError(
            f"websites {[websites[i] for i in chosen]} have no images to request"
        )
    picks = rng.integers(0, len(pool), size=ac)
    return [pool[i] for i in picks]


def replay(
    requests: Sequence[ImageRecord],
    origin: Origin,
    mode: FetchMode,
    threshold: int,
    include_overhead: bool = False,
    max_entries: Optional[int] = None,
) -> ClientCache:
    """Push a request sequence through a fresh cache and return it."""
    policy = LruCapped(max_entries) if max_entries is not None else Unbounded()
    cache = ClientCache(policy=policy, include_overhead=include_overhead)
    for image in requests:
        cache.fetch(origin, image, threshold, mode)
    return cache


def run_simulation(dataset: Dataset, config: SimConfig, origin: Optional[Origin] = None) -> SimResult:
    """
    Simulate config.trials pseudo-clients for one (FW, AC) cell.

    Args:
        dataset: Corpus the clients browse
        config: Cell parameters
        origin: Where semantic requests go (defaults to an in-process server)

    Raises:
        ParameterDomainError if FW exceeds the number of websites
    """
    websites = dataset.websites()
    if config.fw > len(websites):
        raise ParameterDomainError(
            f"FW={config.fw} exceeds the {len(websites)} websites in the dataset"
        )

    origin = origin or ServerState(dataset=dataset)
    pools = _website_pools(dataset)
    result = SimResult()

    for trial in range(config.trials):
        rng = np.random.default_rng(config.rng_seed ^ trial)
        requests = draw_requests(websites, pools, config.fw, config.ac, rng)

        exact = replay(requests, origin, FetchMode.EXACT, config.threshold,
                       max_entries=config.max_entries)
        semantic = replay(requests, origin, FetchMode.SEMANTIC, config.threshold,
                          include_overhead=config.include_overhead,
                          max_entries=config.max_entries)

        exact_bytes = exact.counters.total_bytes
        semantic_bytes = semantic.counters.total_bytes
        result.records.append(TrialRecord(
            fw=config.fw,
            ac=config.ac,
            trial=trial,
            exact_bytes=exact_bytes,
            semantic_bytes=semantic_bytes,
            savings_pct=relative_savings_pct(exact_bytes, semantic_bytes),
            threshold=config.threshold,
            overhead_bytes=semantic.counters.overhead_bytes,
            semantic_hits=semantic.counters.semantic_hits,
        ))

    logger.debug(
        "fw=%d ac=%d t=%d: %d trials simulated",
        config.fw, config.ac, config.threshold, config.trials,
    )
    return result


def run_grid(
    dataset: Dataset,
    fws: Sequence[int],
    acs: Sequence[int],
    base: SimConfig,
    workers: int = 1,
) -> SimResult:
    """
    Run every (FW, AC) cell. Records come back in (fw, ac, trial) order
    whatever the worker count.
    """
    cells = [replace(base, fw=fw, ac=ac) for fw in fws for ac in acs]

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(lambda c: run_simulation(dataset, c), cells))
    else:
        results = [run_simulation(dataset, c) for c in cells]

    merged = SimResult()
    for res in results:
        merged.records.extend(res.records)
    return merged


SUMMARY_COLUMNS = ["fw", "ac", "trials", "mean", "median", "q1", "q3", "min", "max"]


def summarize(result: SimResult) -> List[Dict[str, Any]]:
    """
    Box-plot statistics of savings_pct per (FW, AC) cell.

    Raises:
        ParameterDomainError on an empty result
    """
    if not result.records:
        raise ParameterDomainError("cannot summarize an empty simulation result")

    df = result.to_frame()
    grouped = df.groupby(["fw", "ac"], sort=True)["savings_pct"]
    stats = pd.DataFrame({
        "trials": grouped.count(),
        "mean": grouped.mean(),
        "median": grouped.median(),
        "q1": grouped.quantile(0.25),
        "q3": grouped.quantile(0.75),
        "min": grouped.min(),
        "max": grouped.max(),
    }).reset_index()

    return [
        {col: (int(row[col]) if col in ("fw", "ac", "trials") else float(row[col])) for col in SUMMARY_COLUMNS}
        for _, row in stats.iterrows()
    ]
