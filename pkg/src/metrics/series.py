# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""
Rating Series
Aligned (predicted, truth) ordinal labels.
"""

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

import numpy as np

from src.config import MIN_SCORE, MAX_SCORE
from src.errors import ParameterDomainError


@dataclass(frozen=True)
class RatingSeries:
    """Paired ordinal labels; both sides share length and the 0-4 scale."""
    predicted: Tuple[int, ...]
    truth: Tuple[int, ...]

    def __post_init__(self):
        if len(self.predicted) != len(self.truth):
            raise ParameterDomainError(
                f"misaligned series: {len(self.predicted)} predictions vs {len(self.truth)} labels"
            )
        if not self.predicted:
            raise ParameterDomainError("empty series")
        for value in (*self.predicted, *self.truth):
            if isinstance(value, bool) or int(value) != value or not MIN_SCORE <= value <= MAX_SCORE:
                raise ParameterDomainError(f"label {value!r} outside {MIN_SCORE}..{MAX_SCORE}")

    @classmethod
    def from_lists(cls, predicted: Sequence[int], truth: Sequence[int]) -> "RatingSeries":
        return cls(tuple(int(v) for v in predicted), tuple(int(v) for v in truth))

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, int]]) -> "RatingSeries":
        """Build from (predicted, truth) tuples."""
        pairs = list(pairs)
        return cls.from_lists([p for p, _ in pairs], [t for _, t in pairs])

    def __len__(self) -> int:
        return len(self.truth)

    def arrays(self) -> Tuple[np.ndarray, np.ndarray]:
        """(predicted, truth) as int arrays."""
        return np.asarray(self.predicted, dtype=int), np.asarray(self.truth, dtype=int)
