# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""
Unit Tests for the Cache Server
Resolver decisions, the HTTP surface and config loading.
"""

import itertools
import json
import logging
import random

import numpy as np
import pytest
from fastapi.testclient import TestClient

from src.protocol import SemanticRequest, ReuseSimilar, FullImage, NotFound
from src.server import ServerState, resolve, best_candidate, create_app, load_server_config, build_state
from src.errors import ConfigError


def request(website, category, requested, cached=(), threshold=1):
    return SemanticRequest(website, category, requested, tuple(cached), threshold)


@pytest.fixture
def state(toy):
    return ServerState(dataset=toy)


@pytest.fixture
def tied_state(make_dataset):
    """Image 1 scores 2 against both 2 and 3, and 3 against 4."""
    table = np.array([
        [4, 2, 2, 3],
        [2, 4, 0, 0],
        [2, 0, 4, 0],
        [3, 0, 0, 4],
    ])
    records = [(1, "a", 100), (2, "b", 200), (3, "c", 300), (4, "d", 400)]
    return ServerState(dataset=make_dataset({("w", "c"): (records, table)}))


# ============================================================================
# Resolver
# ============================================================================

class TestResolve:
    """Tests for resolve on the toy dataset."""

    def test_reuse_best_score(self, state):
        resp = resolve(state, request("news.example", "politics", 3, (1, 2)))
        assert resp == ReuseSimilar(image_id=1, score=3)

    def test_threshold_met_exactly(self, state):
        resp = resolve(state, request("news.example", "politics", 3, (1, 2), threshold=3))
        assert resp == ReuseSimilar(image_id=1, score=3)

    def test_threshold_not_met(self, state):
        resp = resolve(state, request("news.example", "politics", 3, (1, 2), threshold=4))
        assert resp == FullImage(byte_size=120000)

    def test_empty_cache_downloads(self, state):
        assert resolve(state, request("news.example", "sports", 10)) == FullImage(byte_size=50000)

    def test_unknown_cached_ids_skipped(self, state):
        resp = resolve(state, request("news.example", "politics", 1, (99, 3)))
        assert resp == ReuseSimilar(image_id=3, score=3)

    def test_unknown_image(self, state):
        assert resolve(state, request("news.example", "politics", 77)) == NotFound(reason="image")

    def test_unknown_scope(self, state):
        assert resolve(state, request("news.example", "weather", 1)) == NotFound(reason="category")

    def test_same_article_never_reused(self, state):
        """1 and 2 share an article, so their score is 0."""
        resp = resolve(state, request("news.example", "politics", 2, (1,)))
        assert resp == FullImage(byte_size=80000)

    def test_opted_out_request_always_downloads(self, state):
        resp = resolve(state, request("daily.example", "politics", 5, (1,)))
        assert resp == FullImage(byte_size=70000)

    def test_opted_out_image_never_substitutes(self, state):
        assert resolve(state, request("daily.example", "politics", 1, (5,))) == FullImage(byte_size=110000)
        assert resolve(state, request("daily.example", "politics", 1, (5, 2))) == ReuseSimilar(2, 2)

    def test_state_method(self, state):
        req = request("news.example", "sports", 11, (10,))
        assert state.resolve(req) == resolve(state, req)


class TestTieBreaking:
    """Highest score wins; ties go to the lowest id; order does not matter."""

    def test_tie_lowest_id(self, tied_state):
        assert resolve(tied_state, request("w", "c", 1, (3, 2))) == ReuseSimilar(2, 2)

    def test_higher_score_beats_lower_id(self, tied_state):
        assert resolve(tied_state, request("w", "c", 1, (2, 3, 4))) == ReuseSimilar(4, 3)

    def test_permutation_invariant(self, tied_state):
        for cached in itertools.permutations((2, 3, 4)):
            for t in (1, 2, 3, 4):
                first = resolve(tied_state, request("w", "c", 1, (2, 3, 4), t))
                assert resolve(tied_state, request("w", "c", 1, cached, t)) == first

    def test_best_candidate_none_when_nothing_known(self, tied_state):
        assert best_candidate(tied_state, request("w", "c", 1, (50, 60))) is None


class TestResolveProperties:
    """Random requests against the synthetic corpus."""

    def test_never_violates_threshold(self, synthetic):
        state = ServerState(dataset=synthetic)
        rng = random.Random(3)
        scopes = sorted(synthetic.matrices)
        for _ in range(2000):
            website, category = rng.choice(scopes)
            matrix = synthetic.matrix(website, category)
            ids = matrix.image_ids
            requested = rng.choice(ids)
            others = [i for i in ids if i != requested]
            cached = rng.sample(others, rng.randint(0, min(8, len(others))))
            t = rng.randint(1, 4)
            resp = resolve(state, request(website, category, requested, cached, t))
            if isinstance(resp, ReuseSimilar):
                assert resp.image_id in cached
                assert resp.score >= t
                assert resp.score == matrix.replaceability(requested, resp.image_id)
            else:
                assert all(matrix.replaceability(requested, c) < t for c in cached)

            shuffled = list(cached)
            rng.shuffle(shuffled)
            assert resolve(state, request(website, category, requested, shuffled, t)) == resp


# ============================================================================
# HTTP surface
# ============================================================================

@pytest.fixture
def client(state):
    return TestClient(create_app(state))


class TestHttpApp:
    """Tests for the FastAPI app."""

    def test_reuse_is_204(self, client):
        r = client.get(
            "/img/news.example/politics/0003",
            headers={"X-Sem-Cache-Ids": "0001,0002", "X-Sem-Cache-Threshold": "1"},
        )
        assert r.status_code == 204
        assert r.headers["Reuse-Similar"] == "0001; score=3"
        assert r.content == b""

    def test_full_image_zero_filled(self, client):
        r = client.get("/img/news.example/sports/000c", headers={"X-Sem-Cache-Threshold": "1"})
        assert r.status_code == 200
        assert len(r.content) == 70000
        assert r.headers["content-length"] == "70000"

    def test_not_found(self, client):
        r = client.get("/img/news.example/politics/0063", headers={"X-Sem-Cache-Threshold": "1"})
        assert r.status_code == 404

    def test_missing_threshold_is_400(self, client):
        r = client.get("/img/news.example/politics/0001")
        assert r.status_code == 400
        assert r.headers["X-Sem-Cache-Error"] == "THRESHOLD_MISSING"

    def test_bad_id_is_400(self, client):
        r = client.get("/img/news.example/politics/xyz1", headers={"X-Sem-Cache-Threshold": "1"})
        assert r.status_code == 400
        assert r.headers["X-Sem-Cache-Error"] == "MALFORMED_ID"

    def test_blob_served(self, toy, tmp_path):
        folder = tmp_path / "news.example" / "politics"
        folder.mkdir(parents=True)
        (folder / "0004.jpg").write_bytes(b"jpeg-bytes")
        client = TestClient(create_app(ServerState(dataset=toy, blob_root=tmp_path)))
        r = client.get("/img/news.example/politics/0004", headers={"X-Sem-Cache-Threshold": "2"})
        assert r.status_code == 200
        assert r.content == b"jpeg-bytes"

    def test_access_log_line(self, client, caplog):
        with caplog.at_level(logging.INFO, logger="reusecache.access"):
            client.get(
                "/img/news.example/politics/0003",
                headers={"X-Sem-Cache-Ids": "0001", "X-Sem-Cache-Threshold": "1"},
            )
        lines = [r.getMessage() for r in caplog.records if r.name == "reusecache.access"]
        assert lines
        assert "decision=reuse_similar" in lines[-1]
        assert "requested=0003" in lines[-1]
        assert "overhead=2" in lines[-1]

    def test_healthz(self, client):
        body = client.get("/healthz").json()
        assert body["status"] == "ok"
        assert body["images"] == 10


# ============================================================================
# Config
# ============================================================================

class TestServerConfig:
    """Tests for load_server_config."""

    def test_toml(self, tmp_path):
        path = tmp_path / "server.toml"
        path.write_text('dataset = "data/manifest.json"\nport = 9000\nlog_level = "DEBUG"\n')
        config = load_server_config(path)
        assert config.dataset == tmp_path / "data" / "manifest.json"
        assert config.port == 9000
        assert config.host == "127.0.0.1"
        assert config.blob_root is None

    def test_json(self, tmp_path):
        path = tmp_path / "server.json"
        path.write_text(json.dumps({"dataset": "m.json", "blob_root": "blobs"}))
        config = load_server_config(path)
        assert config.blob_root == tmp_path / "blobs"

    def test_unknown_key(self, tmp_path):
        path = tmp_path / "server.json"
        path.write_text(json.dumps({"dataset": "m.json", "threads": 8}))
        with pytest.raises(ConfigError, match="threads"):
            load_server_config(path)

    def test_dataset_required(self, tmp_path):
        path = tmp_path / "server.json"
        path.write_text("{}")
        with pytest.raises(ConfigError, match="dataset"):
            load_server_config(path)

    def test_bad_port(self, tmp_path):
        path = tmp_path / "server.json"
        path.write_text(json.dumps({"dataset": "m.json", "port": 70000}))
        with pytest.raises(ConfigError):
            load_server_config(path)

    def test_build_state(self, toy_path, tmp_path):
        path = tmp_path / "server.json"
        path.write_text(json.dumps({"dataset": str(toy_path)}))
        state = build_state(load_server_config(path))
        assert state.dataset.summary()["images"] == 10
