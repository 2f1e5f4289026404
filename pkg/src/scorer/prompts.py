# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""
Prompt Rendering
Fills the stored judge templates with a pair's context.

Templates are plain text with four slots: {{ image_a }}, {{ image_a_context }},
{{ image_b }}, {{ image_b_context }}. Substitution is literal, so contexts
appear in the prompt exactly as given.
"""

import re
from enum import Enum
from pathlib import Path
from typing import Dict, Optional, Sequence

from src.config import TEMPLATES_DIR
from src.core.records import LabeledPair
from src.errors import ConfigError, ParameterDomainError
from .context import PairContext

SLOT_PATTERN = re.compile(r"\{\{ (image_a|image_a_context|image_b|image_b_context) \}\}")
SLOTS = ("image_a", "image_a_context", "image_b", "image_b_context")
CONTEXT_INDENT = "    "
FEW_SHOT_ANCHOR = "Using chain of thought prompting"


class Template(str, Enum):
    BASE = "base"
    METRIC_DRIVEN = "metric_driven"


class PromptMode(str, Enum):
    DIRECT_IMAGES = "direct"
    DESCRIPTIONS = "descriptions"


def load_template(template: Template, templates_dir: Optional[Path] = None) -> str:
    path = Path(templates_dir or TEMPLATES_DIR) / f"{Template(template).value}.txt"
    try:
        return path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"cannot read prompt template {path}: {e}") from e


def render_template(text: str, slots: Dict[str, str]) -> str:
    """Substitute every slot; a slot missing from `slots` is an error."""
    missing = [s for s in SLOTS if s not in slots]
    if missing:
        raise ParameterDomainError(f"template slots without values: {missing}")
    return SLOT_PATTERN.sub(lambda m: slots[m.group(1)], text)


def format_context(heading: str, alt_text: Optional[str]) -> str:
    """Heading and alt text as they appear inside an <image_x_context> block."""
    alt = alt_text if alt_text else "(not available)"
    return f"Article heading: {heading}\n{CONTEXT_INDENT}Alt text: {alt}"


def render_few_shot_block(examples: Sequence[LabeledPair]) -> str:
    """Labelled comparisons shown to the judge before its own task."""
    if not examples:
        return ""
    lines = ["Here are example comparisons that were already rated:", ""]
    for ex in examples:
        lines += [
            "<example>",
            "<image_a_context>",
            CONTEXT_INDENT + format_context(ex.image_a.heading, ex.image_a.alt_text),
            "</image_a_context>",
            "<image_b_context>",
            CONTEXT_INDENT + format_context(ex.image_b.heading, ex.image_b.alt_text),
            "</image_b_context>",
            f"<rating>{ex.score}</rating>",
            "</example>",
            "",
        ]
    return "\n".join(lines) + "\n"


def render_prompt(
    template: Template,
    pair: PairContext,
    mode: PromptMode = PromptMode.DIRECT_IMAGES,
    examples: Optional[Sequence[LabeledPair]] = None,
    templates_dir: Optional[Path] = None,
) -> str:
    """
    Build the judge prompt for one pair.

    Direct mode leaves the image slots as attachment markers (the transport
    sends the pictures). Descriptions mode puts the two descriptions there.

    Raises:
        ParameterDomainError if Descriptions mode lacks a description
    """
    mode = PromptMode(mode)
    if mode == PromptMode.DESCRIPTIONS:
        if not pair.has_descriptions:
            raise ParameterDomainError(
                f"{pair.pair_id}: descriptions mode needs description_a and description_b"
            )
        image_a, image_b = pair.description_a, pair.description_b
    else:
        image_a, image_b = "[Image A attached]", "[Image B attached]"

    text = render_template(load_template(template, templates_dir), {
        "image_a": image_a,
        "image_a_context": format_context(pair.heading_a, pair.alt_a),
        "image_b": image_b,
        "image_b_context": format_context(pair.heading_b, pair.alt_b),
    })

    block = render_few_shot_block(examples or [])
    if block:
        at = text.find(FEW_SHOT_ANCHOR)
        text = text[:at] + block + "\n" + text[at:] if at >= 0 else text + "\n" + block
    return text
