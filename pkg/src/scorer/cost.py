# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""
Scoring Cost
Dollar cost of one LLM comparison from per-token prices.
"""

from dataclasses import dataclass, asdict
from typing import Dict, Any, List

from src.config import AVG_INPUT_TOKENS, AVG_OUTPUT_TOKENS, PRICE_TABLE
from src.errors import ParameterDomainError


@dataclass(frozen=True)
class CostModel:
    name: str
    input_price: float   # dollars per input token
    output_price: float  # dollars per output token
    in_tokens: int = AVG_INPUT_TOKENS
    out_tokens: int = AVG_OUTPUT_TOKENS

    def __post_init__(self):
        if self.input_price < 0 or self.output_price < 0:
            raise ParameterDomainError(f"{self.name}: prices must be >= 0")
        if self.in_tokens < 0 or self.out_tokens < 0:
            raise ParameterDomainError(f"{self.name}: token counts must be >= 0")

    @classmethod
    def from_table(cls, name: str) -> "CostModel":
        """
        Per-token rates derived from the per-comparison price table
        (which assumes AVG_INPUT_TOKENS in / AVG_OUTPUT_TOKENS out).
        """
        try:
            row = PRICE_TABLE[name]
        except KeyError:
            raise ParameterDomainError(
                f"no price for {name!r}; known models: {sorted(PRICE_TABLE)}"
            ) from None
        return cls(
            name=name,
            input_price=row["input"] / AVG_INPUT_TOKENS,
            output_price=row["output"] / AVG_OUTPUT_TOKENS,
        )

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def cost_per_comparison(model: CostModel) -> float:
    return model.in_tokens * model.input_price + model.out_tokens * model.output_price


def cost_table(n_comparisons: int = 1) -> List[Dict[str, Any]]:
    """Rows of the reference price table, scaled to n comparisons."""
    rows = []
    for name in PRICE_TABLE:
        model = CostModel.from_table(name)
        rows.append({
            "model": name,
            "input": model.in_tokens * model.input_price,
            "output": model.out_tokens * model.output_price,
            "per_comparison": cost_per_comparison(model),
            "total": n_comparisons * cost_per_comparison(model),
        })
    return rows
