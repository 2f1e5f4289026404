# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""
Rating Parser
Pulls the score and justification out of a judge response.
"""

import re

from src.config import MIN_SCORE, MAX_SCORE
from src.errors import RatingParseError, ParseErrorCode
from .context import Rating

RATING_BLOCK = re.compile(r"<rating>(.*?)</rating>", re.DOTALL | re.IGNORECASE)
JUSTIFICATION_BLOCK = re.compile(r"<justification>(.*?)</justification>", re.DOTALL | re.IGNORECASE)
INTEGER = re.compile(r"\s*([-+]?\d+)\s*")
EXPLANATION_PREFIX = re.compile(r"^\s*explanation\s*:\s*", re.IGNORECASE)


def parse_rating(response_text: str) -> Rating:
    """
    Parse "<rating>n</rating>" (first block wins) and an optional
    "<justification>...</justification>".

    Raises:
        RatingParseError with MISSING_TAG, NON_INTEGER or OUT_OF_RANGE
    """
    text = response_text or ""
    block = RATING_BLOCK.search(text)
    if block is None:
        raise RatingParseError(ParseErrorCode.MISSING_TAG, text)

    # whole block must be one integer
    number = INTEGER.fullmatch(block.group(1))
    if number is None:
        raise RatingParseError(ParseErrorCode.NON_INTEGER, text)

    score = int(number.group(1))
    if not MIN_SCORE <= score <= MAX_SCORE:
        raise RatingParseError(ParseErrorCode.OUT_OF_RANGE, text)

    justification = ""
    found = JUSTIFICATION_BLOCK.search(text, block.end())
    if found:
        justification = EXPLANATION_PREFIX.sub("", found.group(1)).strip()

    return Rating(score=score, justification=justification, raw_response=text)
