# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""
Scorer Module
Ground-truth, heuristic and LLM replaceability scorers.
"""

from .context import PairContext, Rating
from .scorers import score_ground_truth, score_heuristic, jaccard, tokens
from .prompts import (
    Template,
    PromptMode,
    load_template,
    render_template,
    render_prompt,
    render_few_shot_block,
    format_context,
)
from .parsing import parse_rating
from .transport import (
    Transport,
    OllamaTransport,
    OpenAIChatTransport,
    ScriptedTransport,
    transport_from_env,
)
from .llm import (
    Pipeline,
    LlmScorer,
    ScoredPair,
    blob_loader,
    describe_image,
    score_llm,
    score_batch,
)
from .few_shot import FewShotSelection, FewShotSelector, select_few_shot, index_pairs, token_cosine
from .cost import CostModel, cost_per_comparison, cost_table
from .exporter import (
    parse_pair_id,
    load_pairs_csv,
    export_scores_csv,
    read_scores_csv,
    is_evaluation_csv,
    read_evaluation_csv,
)

__all__ = [
    'PairContext',
    'Rating',
    'score_ground_truth',
    'score_heuristic',
    'jaccard',
    'tokens',
    'Template',
    'PromptMode',
    'load_template',
    'render_template',
    'render_prompt',
    'render_few_shot_block',
    'format_context',
    'parse_rating',
    'Transport',
    'OllamaTransport',
    'OpenAIChatTransport',
    'ScriptedTransport',
    'transport_from_env',
    'Pipeline',
    'LlmScorer',
    'ScoredPair',
    'blob_loader',
    'describe_image',
    'score_llm',
    'score_batch',
    'FewShotSelection',
    'FewShotSelector',
    'index_pairs',
    'select_few_shot',
    'token_cosine',
    'CostModel',
    'cost_per_comparison',
    'cost_table',
    'parse_pair_id',
    'load_pairs_csv',
    'export_scores_csv',
    'read_scores_csv',
    'is_evaluation_csv',
    'read_evaluation_csv',
]
