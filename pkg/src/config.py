# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""
Configuration Module
Global settings and constants for the ReuseCache toolkit.
"""

import os
from pathlib import Path

# =============================================================================
# GLOBAL PATHS & SETTINGS
# =============================================================================
BASE_DIR = Path(__file__).parent.parent
OUTPUTS_DIR = BASE_DIR / "outputs"
TEMPLATES_DIR = Path(__file__).parent / "scorer" / "templates"

VERSION = "1.0.0"
ENABLE_DEBUG_LOGS = False

# =============================================================================
# REPLACEABILITY SCALE
# =============================================================================
MIN_SCORE = 0
MAX_SCORE = 4
SCORE_RANGE = MAX_SCORE - MIN_SCORE
SCORE_LABELS = {
    0: "Not replaceable",
    1: "Somewhat replaceable",
    2: "Moderately replaceable",
    3: "Very replaceable",
    4: "Completely replaceable",
}
THRESHOLDS = (1, 2, 3, 4)
DIAGONAL_FILL = 4  # written to CSV diagonals, ignored on load

# Share bands for per-category reporting
LOW_REPLACEABILITY = (1, 2)    # somewhat / moderately
HIGH_REPLACEABILITY = (3, 4)   # very / completely

# =============================================================================
# GENERAL CATEGORIES
# =============================================================================
# Site-specific category names are mapped to the closest entry by token cosine
# against "<name> <vocabulary>"; first entry wins ties
GENERAL_CATEGORIES = {
    "Business": "economy economics finance market stock crypto fintech real estate mutual funds executive personal",
    "Health": "medicare beauty food drink fitness sleep cancer",
    "Lifestyle": "fashion gardening life culture environment climate society style",
    "Science and Tech": "technology it space astronomy artificial intelligence cybersecurity energy",
    "World Affairs": "international foreign abroad asia europe latin america middle east israel royal",
    "Entertainment": "music festivals awards shows cinema pop buzz showbiz movies",
    "Gender": "relationships people abortion pride",
    "Sports": "sport football basketball hockey golf tennis cricket racing olympics nfl nba",
    "Politics": "elections election crime immigration law policy congress senate white house supreme court",
    "Automotive": "auto car cars engines motor motorization formula",
}
OTHER_CATEGORY = "Other"

# =============================================================================
# PROTOCOL
# =============================================================================
ID_BITS = 16
MAX_IMAGE_ID = (1 << ID_BITS) - 1
ID_OVERHEAD_BYTES = 2  # accounting size of one appended ID

HEADER_CACHE_IDS = "X-Sem-Cache-Ids"
HEADER_THRESHOLD = "X-Sem-Cache-Threshold"
HEADER_REUSE = "Reuse-Similar"
HEADER_ERROR = "X-Sem-Cache-Error"

# =============================================================================
# UNITS
# =============================================================================
BYTES_PER_MB = 1_000_000

# =============================================================================
# SAVINGS MODEL DEFAULTS (news corpus of 50 sites)
# =============================================================================
DEFAULT_COMPARISONS = 164           # N, average comparisons per category
DEFAULT_USEFUL_FRACTIONS = {        # u_t, non-increasing in t
    1: 0.095,
    2: 0.060,
    3: 0.032,
    4: 0.016,
}
HTTP_ARCHIVE_IMAGE_BYTES = 900_000  # median image size
CORPUS_IMAGE_BYTES = 199_000        # mean image size measured on the corpus
DEFAULT_PAGE_WEIGHT_BYTES = 4_770_000
DEFAULT_IMAGES_PER_ARTICLE = 1.794

# =============================================================================
# SIMULATION
# =============================================================================
DEFAULT_FW = (1, 2, 3, 4, 5)
DEFAULT_AC = (10, 20, 30, 40)
DEFAULT_TRIALS = 100
DEFAULT_SEED = 2024

# Synthetic corpus label skew: ~90.5% of inter-article pairs are "not replaceable"
SYNTHETIC_LABEL_DISTRIBUTION = (0.905, 0.030, 0.028, 0.018, 0.019)
SYNTHETIC_WEBSITES = 20
SYNTHETIC_CATEGORIES = 5
SYNTHETIC_ARTICLES = 10
SYNTHETIC_IMAGES_PER_ARTICLE = (1, 3)
SYNTHETIC_MEDIAN_BYTES = 199_000
SYNTHETIC_SIZE_SIGMA = 0.6

# =============================================================================
# HEURISTIC SCORER
# =============================================================================
# Jaccard cut points, checked top-down
HEURISTIC_CUTS = (
    (0.8, 4),
    (0.6, 3),
    (0.4, 2),
    (0.2, 1),
)

# =============================================================================
# LLM CONFIGURATION
# =============================================================================
LLM_BACKEND = os.environ.get("REUSECACHE_LLM_BACKEND", "ollama")  # or "openai"
LLM_URL = os.environ.get("REUSECACHE_LLM_URL", "http://localhost:11434")
LLM_API_KEY = os.environ.get("REUSECACHE_LLM_KEY", "")
LLM_MODEL = os.environ.get("REUSECACHE_LLM_MODEL", "llama3.1")
LLM_DESCRIBER_MODEL = os.environ.get("REUSECACHE_DESCRIBER_MODEL", "llava")
LLM_TIMEOUT = int(os.environ.get("REUSECACHE_LLM_TIMEOUT", "60"))  # seconds
LLM_TEMPERATURE = None  # provider default
LLM_MAX_ATTEMPTS = 3
LLM_MAX_WORKERS = 4
FEW_SHOT_K = 5
REPEAT_PROMPTS = 20  # re-prompts per class for variability studies

DESCRIBE_PROMPT = (
    "Describe this news image in detail: the people, objects, setting, "
    "symbols and overall mood it shows."
)

# =============================================================================
# COST MODEL
# =============================================================================
AVG_INPUT_TOKENS = 1300
AVG_OUTPUT_TOKENS = 300

# Per-comparison dollars at 1300 input / 300 output tokens
PRICE_TABLE = {
    "claude-3.5-sonnet": {"input": 0.0039, "output": 0.0045},
    "gpt-4o": {"input": 0.00325, "output": 0.003},
    "gemini-1.5-pro": {"input": 0.00114, "output": 0.00038},
    "llama-3.1": {"input": 0.0, "output": 0.0},  # runs locally
}

# =============================================================================
# SERVER
# =============================================================================
DEFAULT_HOST = "127.0.0.1"
DEFAULT_PORT = 8080
ACCESS_LOGGER = "reusecache.access"
