# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""
Score Files
Pairs in, scores out: the CSV contract between `score` and `evaluate`.

Pairs CSV:      pair_id                          (site/category/aaaa-bbbb)
Scores CSV:     pair_id, score, justification, repeat, attempts
Evaluation CSV: pair_id, predicted, truth
"""

from pathlib import Path
from typing import Dict, List, Sequence, Tuple

import pandas as pd

from src.core.records import Dataset
from src.errors import DatasetValidationError
from .context import PairContext
from .llm import ScoredPair

SCORE_COLUMNS = ["pair_id", "score", "justification", "repeat", "attempts"]
EVALUATION_COLUMNS = ["pair_id", "predicted", "truth"]


def parse_pair_id(value: str) -> Tuple[str, str, int, int]:
    """'site/category/000a-001f' -> (site, category, 10, 31)."""
    try:
        website, category, ids = str(value).strip().split("/")
        a, b = ids.split("-")
        return website, category, int(a, 16), int(b, 16)
    except ValueError:
        raise DatasetValidationError(f"malformed pair id {value!r}", record=str(value)) from None


def load_pairs_csv(dataset: Dataset, path: str) -> List[PairContext]:
    """Resolve every pair id of a pairs CSV against the dataset."""
    frame = pd.read_csv(path, dtype=str)
    if "pair_id" not in frame.columns:
        raise DatasetValidationError(f"{path}: missing 'pair_id' column")

    pairs = []
    for value in frame["pair_id"].dropna():
        website, category, a, b = parse_pair_id(value)
        pairs.append(PairContext.from_records(
            dataset.image(website, category, a),
            dataset.image(website, category, b),
        ))
    return pairs


def export_scores_csv(results: Sequence[ScoredPair], output_path: str) -> str:
    """
    Write scored pairs; failed jobs keep their row with an empty score.

    Returns:
        Path to created file
    """
    path = Path(output_path)
    path.parent.mkdir(parents=True, exist_ok=True)

    rows = [r.to_dict() for r in results]
    frame = pd.DataFrame(rows, columns=SCORE_COLUMNS)
    frame["score"] = frame["score"].astype("Int64")
    frame.to_csv(path, index=False)
    return str(path)


def _read_frame(path: str, columns: Sequence[str]) -> pd.DataFrame:
    try:
        frame = pd.read_csv(path, dtype={"pair_id": str})
    except (pd.errors.EmptyDataError, pd.errors.ParserError) as e:
        raise DatasetValidationError(f"{path}: unreadable CSV ({e})") from e
    for column in columns:
        if column not in frame.columns:
            raise DatasetValidationError(f"{path}: missing {column!r} column")
    return frame


def _labels_by_pair(frame: pd.DataFrame, column: str, path: str) -> Dict[str, List[int]]:
    labels: Dict[str, List[int]] = {}
    for pid, value in zip(frame["pair_id"], frame[column]):
        if pd.isna(value):
            continue
        try:
            number = float(value)
        except (TypeError, ValueError):
            raise DatasetValidationError(
                f"{path}: non-numeric {column} {value!r} for {pid}", record=str(pid)
            ) from None
        if not number.is_integer():
            raise DatasetValidationError(
                f"{path}: non-integer {column} {value!r} for {pid}", record=str(pid)
            )
        labels.setdefault(pid, []).append(int(number))
    return labels


def read_scores_csv(path: str, column: str = "score") -> Dict[str, List[int]]:
    """pair_id -> scores in file order (several when pairs were re-prompted)."""
    return _labels_by_pair(_read_frame(path, ("pair_id", column)), column, path)


def is_evaluation_csv(path: str) -> bool:
    """True when the file carries both predicted and truth columns."""
    try:
        columns = set(pd.read_csv(path, nrows=0).columns)
    except (pd.errors.EmptyDataError, pd.errors.ParserError) as e:
        raise DatasetValidationError(f"{path}: unreadable CSV ({e})") from e
    return set(EVALUATION_COLUMNS) <= columns


def read_evaluation_csv(path: str) -> Tuple[Dict[str, List[int]], Dict[str, int]]:
    """
    Read a pair_id, predicted, truth file.

    Returns:
        (pair_id -> predictions in file order, pair_id -> truth label)

    Raises:
        DatasetValidationError on missing columns, bad labels or a pair
        whose rows disagree on the truth label
    """
    frame = _read_frame(path, EVALUATION_COLUMNS)
    predicted = _labels_by_pair(frame, "predicted", path)

    truth: Dict[str, int] = {}
    for pid, values in _labels_by_pair(frame, "truth", path).items():
        if len(set(values)) > 1:
            raise DatasetValidationError(f"{path}: conflicting truth labels for {pid}", record=str(pid))
        truth[pid] = values[0]
    return predicted, truth
