# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""
Wire Codec
HTTP header encoding for semantic cache requests and responses.

Request:
    GET /img/{website}/{category}/{4-hex id}
    X-Sem-Cache-Ids: 0001,00ff        (omitted when empty)
    X-Sem-Cache-Threshold: 2

Response:
    200 + body, Content-Length = byte_size      full image
    204 + Reuse-Similar: 00ff; score=3          semantic hit
    404                                         unknown image or scope
    400 + X-Sem-Cache-Error: <token>            malformed request

Byte accounting always uses 2 bytes per cached id, independent of the
textual header size.
"""

import re
from typing import Dict, Mapping, Tuple, Optional
from urllib.parse import quote, unquote, urlsplit

from src.config import (
    ID_OVERHEAD_BYTES,
    HEADER_CACHE_IDS,
    HEADER_THRESHOLD,
    HEADER_REUSE,
    HEADER_ERROR,
)
from src.errors import ProtocolError, ProtocolErrorToken
from .messages import SemanticRequest, SemanticResponse, ReuseSimilar, FullImage, NotFound

HEX_ID = re.compile(r"^[0-9a-fA-F]{4}$")
THRESHOLD_VALUE = re.compile(r"^[1-4]$")
REUSE_VALUE = re.compile(r"^\s*([0-9a-fA-F]{4})\s*;\s*score\s*=\s*([0-4])\s*$")
PATH_PREFIX = "img"


def format_id(image_id: int) -> str:
    """Four lowercase hex digits, zero-padded."""
    return f"{image_id:04x}"


def _parse_id(text: str) -> int:
    if not HEX_ID.match(text):
        raise ProtocolError(ProtocolErrorToken.MALFORMED_ID, repr(text))
    return int(text, 16)


def request_path(req: SemanticRequest) -> str:
    """URL path for a request."""
    return "/".join((
        "",
        PATH_PREFIX,
        quote(req.website, safe=""),
        quote(req.category, safe=""),
        format_id(req.requested_id),
    ))


def encode_request(req: SemanticRequest) -> Dict[str, str]:
    """Header map for a request; the id list is omitted when empty."""
    headers = {HEADER_THRESHOLD: str(req.threshold)}
    if req.cached_ids:
        headers[HEADER_CACHE_IDS] = ",".join(format_id(i) for i in req.cached_ids)
    return headers


def decode_request(headers: Mapping[str, str], path: str) -> SemanticRequest:
    """
    Parse a wire request.

    Raises:
        ProtocolError with a reason token (BAD_PATH, MALFORMED_ID,
        DUPLICATE_ID, THRESHOLD_MISSING, THRESHOLD_RANGE, REQUESTED_IN_CACHE)
    """
    segments = urlsplit(path).path.split("/")
    if len(segments) != 5 or segments[0] != "" or segments[1] != PATH_PREFIX:
        raise ProtocolError(ProtocolErrorToken.BAD_PATH, path)
    website, category = unquote(segments[2]), unquote(segments[3])
    if not website or not category:
        raise ProtocolError(ProtocolErrorToken.BAD_PATH, path)
    requested_id = _parse_id(segments[4])

    lowered = {k.lower(): v for k, v in headers.items()}

    raw_threshold = lowered.get(HEADER_THRESHOLD.lower())
    if raw_threshold is None:
        raise ProtocolError(ProtocolErrorToken.THRESHOLD_MISSING)
    if not THRESHOLD_VALUE.match(raw_threshold.strip()):
        raise ProtocolError(ProtocolErrorToken.THRESHOLD_RANGE, repr(raw_threshold))
    threshold = int(raw_threshold.strip())

    raw_ids = lowered.get(HEADER_CACHE_IDS.lower(), "").strip()
    cached_ids = tuple(_parse_id(part.strip()) for part in raw_ids.split(",")) if raw_ids else ()

    return SemanticRequest(
        website=website,
        category=category,
        requested_id=requested_id,
        cached_ids=cached_ids,
        threshold=threshold,
    )


def request_overhead_bytes(req: SemanticRequest) -> int:
    """Accounting overhead: 2 bytes per appended cached id."""
    return ID_OVERHEAD_BYTES * len(req.cached_ids)


def encode_response(resp: SemanticResponse) -> Tuple[int, Dict[str, str]]:
    """Status code and headers for a response (body handled by the caller)."""
    if isinstance(resp, ReuseSimilar):
        return 204, {HEADER_REUSE: f"{format_id(resp.image_id)}; score={resp.score}"}
    if isinstance(resp, FullImage):
        return 200, {"Content-Length": str(resp.byte_size)}
    if isinstance(resp, NotFound):
        return 404, {}
    raise TypeError(f"not a semantic response: {resp!r}")


def encode_error(error: ProtocolError) -> Tuple[int, Dict[str, str]]:
    """400 with the reason token."""
    return 400, {HEADER_ERROR: error.token.value}


def decode_response(
    status: int,
    headers: Mapping[str, str],
    body: Optional[bytes] = None,
) -> SemanticResponse:
    """
    Turn an HTTP answer back into a SemanticResponse.

    Raises:
        ProtocolError for 400 answers (token from the error header) and for
        responses that fit none of the shapes
    """
    lowered = {k.lower(): v for k, v in headers.items()}

    if status == 204:
        match = REUSE_VALUE.match(lowered.get(HEADER_REUSE.lower(), ""))
        if not match:
            raise ProtocolError(ProtocolErrorToken.MALFORMED_ID, "bad Reuse-Similar header")
        return ReuseSimilar(image_id=int(match.group(1), 16), score=int(match.group(2)))
    if status == 200:
        length = lowered.get("content-length")
        byte_size = int(length) if length is not None else len(body or b"")
        return FullImage(byte_size=byte_size, payload=body)
    if status == 404:
        return NotFound()
    if status == 400:
        token = lowered.get(HEADER_ERROR.lower(), "")
        if token not in ProtocolErrorToken.__members__:
            raise ProtocolError(ProtocolErrorToken.BAD_PATH, f"unknown error token {token!r}")
        raise ProtocolError(ProtocolErrorToken(token))
    raise ProtocolError(ProtocolErrorToken.BAD_PATH, f"unexpected status {status}")
