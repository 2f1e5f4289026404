# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""
Savings Model
Closed-form expected byte savings for semantic image caching.

    p    = 1 - C(N - useful, X) / C(N, X)     hit probability with X cached images
    mu_t = S * p - overhead * X               expected bytes saved per request
    M_t  = mu_t * I / P                       saved fraction of page weight per article

useful = round(N * u_t), half rounded up. All arithmetic is in bytes; MB only
appears at the presentation layer.
"""

import math
from dataclasses import dataclass, field, asdict
from typing import Dict, Any, List, Optional

from src.config import (
    THRESHOLDS,
    ID_OVERHEAD_BYTES,
    DEFAULT_COMPARISONS,
    DEFAULT_USEFUL_FRACTIONS,
    HTTP_ARCHIVE_IMAGE_BYTES,
    DEFAULT_PAGE_WEIGHT_BYTES,
    DEFAULT_IMAGES_PER_ARTICLE,
)
from src.errors import ParameterDomainError


@dataclass(frozen=True)
class SavingsParams:
    """
    Inputs of the savings model.

    Attributes:
        N: Average comparisons per category
        u: Threshold -> fraction of useful comparisons (non-increasing in t)
        S: Average image size (bytes)
        X: Cached-image count
        P: Average page weight (bytes)
        I: Average images per article
        id_overhead: Bytes charged per appended image id
    """
    N: int = DEFAULT_COMPARISONS
    u: Dict[int, float] = field(default_factory=lambda: dict(DEFAULT_USEFUL_FRACTIONS))
    S: float = HTTP_ARCHIVE_IMAGE_BYTES
    X: int = 0
    P: float = DEFAULT_PAGE_WEIGHT_BYTES
    I: float = DEFAULT_IMAGES_PER_ARTICLE
    id_overhead: float = ID_OVERHEAD_BYTES

    def __post_init__(self):
        if not isinstance(self.N, int) or self.N < 1:
            raise ParameterDomainError(f"N must be a positive integer, got {self.N}")
        if not isinstance(self.X, int) or not 0 <= self.X <= self.N:
            raise ParameterDomainError(f"X must be an integer in [0, N={self.N}], got {self.X}")
        if self.S <= 0 or self.P <= 0 or self.I <= 0:
            raise ParameterDomainError("S, P and I must be positive")
        if self.id_overhead < 0:
            raise ParameterDomainError("id_overhead must be non-negative")
        previous = None
        for t in sorted(self.u):
            if t not in THRESHOLDS:
                raise ParameterDomainError(f"threshold {t} outside {THRESHOLDS}")
            value = self.u[t]
            if not 0.0 <= value <= 1.0:
                raise ParameterDomainError(f"u_{t}={value} outside [0, 1]")
            if previous is not None and value > previous:
                raise ParameterDomainError(
                    f"u must be non-increasing in t: u_{t}={value} > {previous}"
                )
            previous = value

    def useful(self, t: int) -> int:
        """Integer count of useful comparisons at threshold t."""
        if t not in self.u:
            raise ParameterDomainError(f"no useful fraction for threshold {t}")
        return int(math.floor(self.N * self.u[t] + 0.5))

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class CurvePoint:
    """One row of a savings curve."""
    X: int
    p: float
    mu_bytes: float
    M_fraction: float

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def hit_probability(N: int, useful: int, X: int) -> float:
    """
    Probability that at least one of X cached images (drawn without replacement
    from N comparisons) is useful.

    Uses exact integer binomials, so there is no overflow for N in the
    hundreds or thousands.

    Examples:
        hit_probability(4, 2, 1) -> 0.5
        hit_probability(10, 3, 8) -> 1.0
    """
    for name, value in (("N", N), ("useful", useful), ("X", X)):
        if not isinstance(value, int) or isinstance(value, bool):
            raise ParameterDomainError(f"{name} must be an integer, got {value!r}")
    if N < 0 or not 0 <= useful <= N or not 0 <= X <= N:
        raise ParameterDomainError(
            f"need 0 <= useful <= N and 0 <= X <= N, got N={N} useful={useful} X={X}"
        )

    if X == 0 or useful == 0:
        return 0.0
    if X > N - useful:
        return 1.0
    return 1.0 - math.comb(N - useful, X) / math.comb(N, X)


def expected_savings(params: SavingsParams, t: int, X: Optional[int] = None) -> float:
    """
    Expected bytes saved per image request at threshold t with X cached images.

    Negative when the id overhead outweighs the expected hit; the sign is kept.
    """
    X = params.X if X is None else X
    if t not in THRESHOLDS:
        raise ParameterDomainError(f"threshold {t} outside {THRESHOLDS}")
    if not isinstance(X, int) or not 0 <= X <= params.N:
        raise ParameterDomainError(f"X must be in [0, N={params.N}], got {X}")

    p = hit_probability(params.N, params.useful(t), X)
    return params.S * p - params.id_overhead * X


def page_weight_reduction(mu: float, I: float, P: float) -> float:
    """Savings per article access as a fraction of page weight."""
    if P <= 0 or I <= 0:
        raise ParameterDomainError(f"P and I must be positive, got P={P} I={I}")
    return mu * I / P


def savings_curve(params: SavingsParams, t: int, X_max: int) -> List[CurvePoint]:
    """
    Expected savings for X = 0..X_max.

    Returns:
        One CurvePoint per X, in order
    """
    if not isinstance(X_max, int) or not 0 <= X_max <= params.N:
        raise ParameterDomainError(f"X_max must be in [0, N={params.N}], got {X_max}")

    useful = params.useful(t)
    points = []
    for X in range(X_max + 1):
        p = hit_probability(params.N, useful, X)
        mu = params.S * p - params.id_overhead * X
        points.append(CurvePoint(
            X=X,
            p=p,
            mu_bytes=mu,
            M_fraction=page_weight_reduction(mu, params.I, params.P),
        ))
    return points


def overhead_crossover(params: SavingsParams, t: int, X_max: Optional[int] = None) -> Optional[int]:
    """First X > 0 where expected savings turn negative, or None within range."""
    X_max = params.N if X_max is None else X_max
    for point in savings_curve(params, t, X_max):
        if point.X > 0 and point.mu_bytes < 0:
            return point.X
    return None


def plateau_x(curve: List[CurvePoint], fraction: float = 0.95) -> int:
    """Smallest X whose savings reach `fraction` of the curve maximum."""
    if not curve:
        raise ParameterDomainError("empty curve")
    if not 0.0 < fraction <= 1.0:
        raise ParameterDomainError(f"fraction must be in (0, 1], got {fraction}")
    peak = max(point.mu_bytes for point in curve)
    for point in curve:
        if point.mu_bytes >= fraction * peak:
            return point.X
    return curve[-1].X
