# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""
Cache Server
HTTP front end: decode_request -> resolve -> encoded response, with one
access log line per request.
"""

import logging
from typing import Optional

import uvicorn
from fastapi import FastAPI, Request, Response

from src.config import VERSION, ACCESS_LOGGER
from src.core.loader import load_dataset
from src.errors import ProtocolError, ConfigError
from src.protocol.codec import (
    decode_request,
    encode_response,
    encode_error,
    request_overhead_bytes,
    format_id,
)
from src.protocol.messages import SemanticRequest, ReuseSimilar, FullImage, NotFound
from .resolver import ServerState
from .settings import ServerConfig

logger = logging.getLogger(__name__)
access_logger = logging.getLogger(ACCESS_LOGGER)


def build_state(config: ServerConfig) -> ServerState:
    """Load the dataset named by a config."""
    return ServerState(dataset=load_dataset(config.dataset), blob_root=config.blob_root)


def _log_access(
    decision: str,
    req: Optional[SemanticRequest],
    reused: str = "-",
    score: str = "-",
    body_bytes: int = 0,
    detail: str = "",
) -> None:
    site = req.website if req else "-"
    category = req.category if req else "-"
    requested = format_id(req.requested_id) if req else "-"
    overhead = request_overhead_bytes(req) if req else 0
    access_logger.info(
        "decision=%s site=%s category=%s requested=%s reused=%s score=%s bytes=%d overhead=%d%s",
        decision, site, category, requested, reused, score, body_bytes, overhead,
        f" error={detail}" if detail else "",
    )


def create_app(state: ServerState) -> FastAPI:
    """
    Build the ASGI app serving GET /img/{website}/{category}/{hex id}.

    Handlers are synchronous and share `state` read-only.
    """
    app = FastAPI(title="ReuseCache origin", version=VERSION)

    @app.get("/img/{rest:path}")
    def get_image(request: Request, rest: str) -> Response:
        raw_path = request.scope.get("raw_path", b"").decode("latin-1") or request.url.path
        try:
            req = decode_request(request.headers, raw_path)
        except ProtocolError as e:
            status, headers = encode_error(e)
            _log_access("bad_request", None, detail=e.token.value)
            return Response(status_code=status, headers=headers)

        resp = state.resolve(req)
        status, headers = encode_response(resp)

        if isinstance(resp, ReuseSimilar):
            _log_access("reuse_similar", req, format_id(resp.image_id), str(resp.score))
            return Response(status_code=status, headers=headers)

        if isinstance(resp, NotFound):
            _log_access("not_found", req, detail=resp.reason)
            return Response(status_code=status)

        body = _full_body(state, req, resp)
        _log_access("full_image", req, body_bytes=len(body))
        return Response(content=body, status_code=status, media_type="application/octet-stream")

    @app.get("/healthz")
    def healthz() -> dict:
        return {"status": "ok", "version": VERSION, **state.dataset.summary()}

    return app


def _full_body(state: ServerState, req: SemanticRequest, resp: FullImage) -> bytes:
    """Stored payload when a blob exists, else a zero-filled body of byte_size."""
    path = state.blob_path(req.website, req.category, req.requested_id)
    if path is None:
        return bytes(resp.byte_size)
    payload = path.read_bytes()
    if len(payload) != resp.byte_size:
        logger.warning(
            "blob %s is %d bytes, manifest says %d", path, len(payload), resp.byte_size
        )
    return payload


def serve(state: ServerState, host: str, port: int) -> None:
    """
    Run the server until interrupted.

    Raises:
        ConfigError if the address cannot be bound
    """
    logger.info("serving %d images on http://%s:%d", len(state.dataset.images), host, port)
    try:
        uvicorn.run(create_app(state), host=host, port=port, log_level="warning", access_log=False)
    except (OSError, SystemExit) as e:
        raise ConfigError(f"could not serve on {host}:{port}: {e}") from e
