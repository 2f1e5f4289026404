# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""
Dataset Loader
Reads and writes the JSON manifest + per-category CSV matrix format.

Manifest schema:
{
    "websites": [
        {
            "name": "example.com",
            "categories": [
                {
                    "name": "sports",
                    "matrix_file": "example.com/sports.csv",
                    "images": [
                        {"image_id": 1, "article_id": "a1", "byte_size": 120000,
                         "alt_text": "...", "heading": "..."}
                    ]
                }
            ]
        }
    ]
}

Matrix CSV: first row and first column hold image ids, cells are integers
0-4. The diagonal is written as 4 and ignored on load.
"""

import json
import logging
from pathlib import Path
from typing import Dict, Any, List, Union

import numpy as np
import pandas as pd

from src.config import DIAGONAL_FILL
from src.errors import DatasetValidationError
from .records import ImageRecord, ReplaceabilityMatrix, Dataset

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def load_dataset(manifest_path: PathLike) -> Dataset:
    """
    Load and validate a dataset.

    Args:
        manifest_path: Path to the manifest JSON; matrix paths resolve relative to it

    Returns:
        Validated Dataset

    Raises:
        DatasetValidationError naming the offending record
    """
    path = Path(manifest_path)
    if not path.exists():
        raise DatasetValidationError("manifest not found", str(path))

    try:
        with open(path, "r", encoding="utf-8") as f:
            manifest = json.load(f)
    except json.JSONDecodeError as e:
        raise DatasetValidationError(f"malformed JSON ({e.msg} at line {e.lineno})", str(path))

    websites = _require(manifest, "websites", list, str(path))
    images: Dict = {}
    matrices: Dict = {}

    for site in websites:
        site_name = _require(site, "name", str, str(path))
        for cat in _require(site, "categories", list, site_name):
            cat_name = _require(cat, "name", str, site_name)
            scope_ref = f"{site_name}/{cat_name}"
            if (site_name, cat_name) in matrices:
                raise DatasetValidationError("category listed twice", scope_ref)

            scope_images = _parse_images(site_name, cat_name, _require(cat, "images", list, scope_ref))
            matrix_file = path.parent / _require(cat, "matrix_file", str, scope_ref)
            matrix = _read_matrix(site_name, cat_name, matrix_file, scope_images)

            for image in scope_images.values():
                images[(site_name, cat_name, image.image_id)] = image
            matrices[(site_name, cat_name)] = matrix

    dataset = Dataset(images=images, matrices=matrices)
    logger.info("loaded dataset %s: %s", path, dataset.summary())
    return dataset


def save_dataset(dataset: Dataset, manifest_path: PathLike) -> str:
    """
    Write a dataset as manifest + one CSV per category.

    Matrix files go to <manifest dir>/<website>/<category>.csv.

    Returns:
        Path to the manifest
    """
    path = Path(manifest_path)
    path.parent.mkdir(parents=True, exist_ok=True)

    websites: List[Dict[str, Any]] = []
    for website in dataset.websites():
        categories = []
        for category in dataset.categories(website):
            matrix = dataset.matrix(website, category)
            rel = Path(_safe_name(website)) / f"{_safe_name(category)}.csv"
            _write_matrix(matrix, path.parent / rel)
            categories.append({
                "name": category,
                "matrix_file": rel.as_posix(),
                "images": [
                    _image_entry(img) for img in dataset.images_in(website, category)
                ],
            })
        websites.append({"name": website, "categories": categories})

    with open(path, "w", encoding="utf-8") as f:
        json.dump({"websites": websites}, f, indent=2)

    return str(path)


def _require(obj: Any, key: str, kind: type, ref: str) -> Any:
    if not isinstance(obj, dict) or key not in obj:
        raise DatasetValidationError(f"missing field '{key}'", ref)
    value = obj[key]
    if not isinstance(value, kind) or (isinstance(value, bool) and kind is int):
        names = kind.__name__ if isinstance(kind, type) else " or ".join(k.__name__ for k in kind)
        raise DatasetValidationError(f"field '{key}' must be {names}", ref)
    return value


def _parse_images(website: str, category: str, entries: List[Any]) -> Dict[int, ImageRecord]:
    scope_ref = f"{website}/{category}"
    parsed: Dict[int, ImageRecord] = {}
    for pos, entry in enumerate(entries):
        ref = f"{scope_ref}[{pos}]"
        image_id = _require(entry, "image_id", int, ref)
        if image_id in parsed:
            raise DatasetValidationError(f"duplicate image_id {image_id}", scope_ref)
        byte_size = _require(entry, "byte_size", int, ref)
        alt_text = entry.get("alt_text")
        if alt_text is not None and not isinstance(alt_text, str):
            raise DatasetValidationError("field 'alt_text' must be str or null", ref)
        parsed[image_id] = ImageRecord(
            website=website,
            category=category,
            article_id=str(_require(entry, "article_id", (str, int), ref)),
            image_id=image_id,
            byte_size=byte_size,
            heading=str(entry.get("heading", "")),
            alt_text=alt_text,
            no_semantic_cache=bool(entry.get("no_semantic_cache", False)),
        )
    return parsed


def _read_matrix(
    website: str,
    category: str,
    matrix_file: Path,
    images: Dict[int, ImageRecord],
) -> ReplaceabilityMatrix:
    scope_ref = f"{website}/{category}"
    if not matrix_file.exists():
        raise DatasetValidationError(f"matrix file not found: {matrix_file}", scope_ref)

    try:
        frame = pd.read_csv(matrix_file, index_col=0, dtype=str)
        row_ids = [int(v) for v in frame.index]
        col_ids = [int(v) for v in frame.columns]
    except (ValueError, pd.errors.ParserError, pd.errors.EmptyDataError) as e:
        raise DatasetValidationError(f"malformed matrix CSV ({e})", scope_ref)

    if row_ids != col_ids:
        raise DatasetValidationError("matrix row ids differ from column ids", scope_ref)

    for image_id in row_ids:
        if image_id not in images:
            raise DatasetValidationError(f"matrix references unknown image {image_id}", scope_ref)
    for image_id in images:
        if image_id not in row_ids:
            raise DatasetValidationError(f"image {image_id} missing from matrix", scope_ref)

    values = frame.apply(lambda col: pd.to_numeric(col.str.strip(), errors="coerce")).to_numpy(dtype=float)
    np.fill_diagonal(values, DIAGONAL_FILL)
    blank = np.argwhere(np.isnan(values))
    if len(blank):
        i, j = blank[0]
        raise DatasetValidationError(
            f"non-numeric entry at ({row_ids[i]}, {col_ids[j]})", scope_ref
        )

    return ReplaceabilityMatrix.build(
        website=website,
        category=category,
        image_ids=row_ids,
        scores=values,
        article_of={i: img.article_id for i, img in images.items()},
    )


def _write_matrix(matrix: ReplaceabilityMatrix, path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    ids = matrix.image_ids
    table = np.array(matrix.scores, dtype=int)
    np.fill_diagonal(table, DIAGONAL_FILL)
    frame = pd.DataFrame(table, index=ids, columns=ids)
    frame.index.name = "image_id"
    frame.to_csv(path)


def _image_entry(image: ImageRecord) -> Dict[str, Any]:
    entry = {
        "image_id": image.image_id,
        "article_id": image.article_id,
        "byte_size": image.byte_size,
        "alt_text": image.alt_text,
        "heading": image.heading,
    }
    if image.no_semantic_cache:
        entry["no_semantic_cache"] = True
    return entry


def _safe_name(name: str) -> str:
    return "".join(ch if ch.isalnum() or ch in "-_." else "_" for ch in name)
