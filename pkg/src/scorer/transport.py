# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""
Inference Transports
Send a prompt (plus optional images) to a model endpoint, get text back.

IMPORTANT: transports only carry text. Scores are always decided by
parse_rating on what comes back.
"""

import base64
import logging
import threading
import time
from typing import List, Optional, Sequence, Union, Callable, Protocol

import requests

from src.config import (
    LLM_BACKEND,
    LLM_URL,
    LLM_API_KEY,
    LLM_MODEL,
    LLM_TIMEOUT,
    LLM_TEMPERATURE,
)
from src.errors import TransportError, ConfigError

logger = logging.getLogger(__name__)


class Transport(Protocol):
    """Chat-inference endpoint contract."""

    def complete(self, prompt: str, images: Sequence[bytes] = ()) -> str:
        ...


def _b64(images: Sequence[bytes]) -> List[str]:
    return [base64.b64encode(img).decode("ascii") for img in images]


class OllamaTransport:
    """
    Ollama /api/generate endpoint.

    Args:
        host: Ollama API host URL
        model: Model name to use
        timeout: Request timeout in seconds
        temperature: Sampling temperature, None for the model default
    """

    def __init__(
        self,
        host: str = LLM_URL,
        model: str = LLM_MODEL,
        timeout: int = LLM_TIMEOUT,
        temperature: Optional[float] = LLM_TEMPERATURE,
    ):
        self.host = host.rstrip("/")
        self.model = model
        self.timeout = timeout
        self.temperature = temperature

    def is_available(self) -> bool:
        """Check if Ollama answers at all."""
        try:
            return requests.get(f"{self.host}/api/tags", timeout=5).status_code == 200
        except requests.RequestException:
            return False

    def complete(self, prompt: str, images: Sequence[bytes] = ()) -> str:
        body = {"model": self.model, "prompt": prompt, "stream": False}
        if images:
            body["images"] = _b64(images)
        if self.temperature is not None:
            body["options"] = {"temperature": self.temperature}

        started = time.perf_counter()
        try:
            response = requests.post(f"{self.host}/api/generate", json=body, timeout=self.timeout)
        except requests.RequestException as e:
            raise TransportError(f"Ollama request failed: {e}") from e
        logger.debug("ollama %s answered in %.2fs", self.model, time.perf_counter() - started)

        if response.status_code != 200:
            raise TransportError(f"Ollama returned HTTP {response.status_code}: {response.text[:200]}")
        try:
            return response.json().get("response", "").strip()
        except (AttributeError, TypeError, ValueError) as e:
            raise TransportError(f"unexpected Ollama payload: {e}") from e


class OpenAIChatTransport:
    """
    OpenAI-compatible /v1/chat/completions endpoint (also served by many
    proxies and hosted providers).
    """

    def __init__(
        self,
        base_url: str = LLM_URL,
        model: str = LLM_MODEL,
        api_key: str = LLM_API_KEY,
        timeout: int = LLM_TIMEOUT,
        temperature: Optional[float] = LLM_TEMPERATURE,
    ):
        self.base_url = base_url.rstrip("/")
        self.model = model
        self.api_key = api_key
        self.timeout = timeout
        self.temperature = temperature

    def complete(self, prompt: str, images: Sequence[bytes] = ()) -> str:
        content = [{"type": "text", "text": prompt}]
        for encoded in _b64(images):
            content.append({
                "type": "image_url",
                "image_url": {"url": f"data:image/jpeg;base64,{encoded}"},
            })
        body = {"model": self.model, "messages": [{"role": "user", "content": content}]}
        if self.temperature is not None:
            body["temperature"] = self.temperature
        headers = {"Authorization": f"Bearer {self.api_key}"} if self.api_key else {}

        started = time.perf_counter()
        try:
            response = requests.post(
                f"{self.base_url}/v1/chat/completions",
                json=body,
                headers=headers,
                timeout=self.timeout,
            )
        except requests.RequestException as e:
            raise TransportError(f"chat completion request failed: {e}") from e
        logger.debug("chat %s answered in %.2fs", self.model, time.perf_counter() - started)

        if response.status_code != 200:
            raise TransportError(f"chat endpoint returned HTTP {response.status_code}: {response.text[:200]}")
        try:
            return response.json()["choices"][0]["message"]["content"].strip()
        except (KeyError, IndexError, TypeError, ValueError) as e:
            raise TransportError(f"unexpected chat completion payload: {e}") from e


class ScriptedTransport:
    """
    Replays canned responses, for tests and dry runs.

    `script` is either a list consumed in order (the last entry repeats once
    exhausted) or a function of the prompt.
    """

    def __init__(self, script: Union[Sequence[str], Callable[[str], str]]):
        self._script = script if callable(script) else list(script)
        if not callable(script) and not self._script:
            raise ConfigError("ScriptedTransport needs at least one response")
        self._lock = threading.Lock()
        self._next = 0
        self.prompts: List[str] = []
        self.image_counts: List[int] = []

    def complete(self, prompt: str, images: Sequence[bytes] = ()) -> str:
        with self._lock:
            self.prompts.append(prompt)
            self.image_counts.append(len(images))
            if callable(self._script):
                return self._script(prompt)
            reply = self._script[min(self._next, len(self._script) - 1)]
            self._next += 1
            return reply


def transport_from_env(backend: str = LLM_BACKEND, model: str = LLM_MODEL) -> Transport:
    """Transport for the configured backend ("ollama" or "openai")."""
    if backend == "ollama":
        return OllamaTransport(model=model)
    if backend == "openai":
        return OpenAIChatTransport(model=model)
    raise ConfigError(f"unknown LLM backend {backend!r} (expected 'ollama' or 'openai')")
