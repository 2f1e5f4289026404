# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""Shared fixtures: the toy dataset on disk and small in-memory corpora."""

from pathlib import Path

import numpy as np
import pytest

from src.core import Dataset, ImageRecord, ReplaceabilityMatrix, load_dataset, generate_synthetic_dataset

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def toy_path() -> Path:
    return FIXTURES / "toy" / "manifest.json"


@pytest.fixture
def toy(toy_path) -> Dataset:
    return load_dataset(toy_path)


def build_dataset(scopes) -> Dataset:
    """
    scopes: {(website, category): (records, score table)} where records is a
    list of (image_id, article_id, byte_size) and the table is square.
    """
    images, matrices = {}, {}
    for (website, category), (records, table) in scopes.items():
        ids = [r[0] for r in records]
        for image_id, article_id, byte_size in records:
            images[(website, category, image_id)] = ImageRecord(
                website, category, article_id, image_id, byte_size,
                heading=f"{category} story {article_id}",
            )
        matrices[(website, category)] = ReplaceabilityMatrix.build(
            website, category, ids, np.array(table), {r[0]: r[1] for r in records},
        )
    return Dataset(images=images, matrices=matrices)


@pytest.fixture
def make_dataset():
    return build_dataset


@pytest.fixture
def uniform_dataset():
    """One website per entry, one category, n single-image articles, every pair scored `score`."""
    def make(score: int, n: int = 3, websites: int = 1, byte_size: int = 1000) -> Dataset:
        scopes = {}
        for w in range(websites):
            records = [(i + 1, f"art{i}", byte_size * (i + 1)) for i in range(n)]
            table = np.full((n, n), score)
            np.fill_diagonal(table, 4)
            scopes[(f"site{w}.example", "news")] = (records, table)
        return build_dataset(scopes)
    return make


@pytest.fixture(scope="session")
def synthetic() -> Dataset:
    return generate_synthetic_dataset(seed=2024)
