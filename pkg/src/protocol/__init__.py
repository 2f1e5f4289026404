# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""
Protocol Module
reuse_similar request/response messages and their HTTP header codec.
"""

from .messages import (
    SemanticRequest,
    SemanticResponse,
    ReuseSimilar,
    FullImage,
    NotFound,
)
from .codec import (
    format_id,
    request_path,
    encode_request,
    decode_request,
    request_overhead_bytes,
    encode_response,
    encode_error,
    decode_response,
)

__all__ = [
    'SemanticRequest',
    'SemanticResponse',
    'ReuseSimilar',
    'FullImage',
    'NotFound',
    'format_id',
    'request_path',
    'encode_request',
    'decode_request',
    'request_overhead_bytes',
    'encode_response',
    'encode_error',
    'decode_response',
]
