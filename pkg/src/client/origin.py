# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""
HTTP Origin
Client side of the wire protocol, for caches talking to a running server.
"""

import logging
from typing import Optional

import requests

from src.errors import TransportError
from src.protocol.codec import encode_request, decode_response, request_path
from src.protocol.messages import SemanticRequest, SemanticResponse

logger = logging.getLogger(__name__)


class HttpOrigin:
    """
    Resolve requests against a cache server over HTTP.

    Args:
        base_url: Server root, e.g. http://127.0.0.1:8080
        timeout: Request timeout in seconds
    """

    def __init__(self, base_url: str, timeout: float = 10.0, session: Optional[requests.Session] = None):
        self.base_url = base_url.rstrip("/")
        self.timeout = timeout
        self.session = session or requests.Session()

    def resolve(self, req: SemanticRequest) -> SemanticResponse:
        url = self.base_url + request_path(req)
        try:
            response = self.session.get(url, headers=encode_request(req), timeout=self.timeout)
        except requests.RequestException as e:
            raise TransportError(f"GET {url} failed: {e}") from e

        logger.debug("GET %s -> %d", url, response.status_code)
        return decode_response(response.status_code, response.headers, response.content)
