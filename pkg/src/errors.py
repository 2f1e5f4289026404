# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""
Error Types
One root exception; every module raises a subclass of it.
"""

from enum import Enum
from typing import Any, Optional


class ReuseCacheError(Exception):
    """Base class for all toolkit errors."""


class DatasetValidationError(ReuseCacheError):
    """Manifest or matrix content violates a dataset invariant."""

    def __init__(self, message: str, record: Optional[str] = None):
        self.record = record
        super().__init__(f"{record}: {message}" if record else message)


class UnknownImageError(ReuseCacheError, KeyError):
    """An image id is not present in the scope it was looked up in."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown image"


class IdentityLookupError(ReuseCacheError, ValueError):
    """Replaceability asked for an image against itself (exact hit)."""


class ParameterDomainError(ReuseCacheError, ValueError):
    """A numeric argument lies outside its documented domain."""


class ConfigError(ReuseCacheError):
    """Bad server or CLI configuration."""


class TransportError(ReuseCacheError):
    """Inference endpoint could not be reached or answered badly."""


class ProtocolErrorToken(str, Enum):
    """Reason tokens sent in the X-Sem-Cache-Error header."""
    BAD_PATH = "BAD_PATH"
    MALFORMED_ID = "MALFORMED_ID"
    DUPLICATE_ID = "DUPLICATE_ID"
    THRESHOLD_RANGE = "THRESHOLD_RANGE"
    THRESHOLD_MISSING = "THRESHOLD_MISSING"
    REQUESTED_IN_CACHE = "REQUESTED_IN_CACHE"
    UNKNOWN_SCOPE = "UNKNOWN_SCOPE"


class ProtocolError(ReuseCacheError):
    """Wire request could not be decoded; maps to HTTP 400."""

    def __init__(self, token: ProtocolErrorToken, detail: str = ""):
        self.token = ProtocolErrorToken(token)
        self.detail = detail
        super().__init__(f"{self.token.value}: {detail}" if detail else self.token.value)


class ParseErrorCode(str, Enum):
    """Why an LLM response could not be turned into a rating."""
    MISSING_TAG = "MISSING_TAG"
    NON_INTEGER = "NON_INTEGER"
    OUT_OF_RANGE = "OUT_OF_RANGE"


class RatingParseError(ReuseCacheError):
    """LLM response lacks a usable <rating> block."""

    def __init__(self, code: ParseErrorCode, raw_response: Any = ""):
        self.code = ParseErrorCode(code)
        self.raw_response = raw_response
        super().__init__(self.code.value)
