# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.

"""
Unit Tests for Scorers
Prompt golden files, response parsing, retries, few-shot selection and cost.
"""

import base64
from pathlib import Path
from unittest.mock import MagicMock, patch

import pytest
import requests

from src.core import Dataset, ImageRecord
from src.scorer import (
    PairContext,
    Rating,
    Template,
    PromptMode,
    Pipeline,
    LlmScorer,
    ScriptedTransport,
    OllamaTransport,
    OpenAIChatTransport,
    CostModel,
    load_template,
    render_template,
    render_prompt,
    parse_rating,
    score_ground_truth,
    score_heuristic,
    score_llm,
    score_batch,
    select_few_shot,
    token_cosine,
    blob_loader,
    cost_per_comparison,
    cost_table,
    transport_from_env,
    parse_pair_id,
    load_pairs_csv,
    export_scores_csv,
    read_scores_csv,
    is_evaluation_csv,
    read_evaluation_csv,
    FewShotSelector,
    index_pairs,
)
from src.scorer.prompts import SLOTS
from src.errors import (
    ConfigError,
    DatasetValidationError,
    ParameterDomainError,
    ParseErrorCode,
    RatingParseError,
    TransportError,
)

PROMPTS = Path(__file__).parent / "fixtures" / "prompts"
FACTORS = [
    "1. Similarity of topics",
    "2. Specificity of information conveyed (e.g., specific people, places, etc.)",
    "3. Emotional tone or impact",
    "4. Potential for misinterpretation if swapped",
]


def image(image_id, article_id, heading="", alt=None, website="test.example", category="world"):
    return ImageRecord(website, category, article_id, image_id, 1000, heading=heading, alt_text=alt)


def pair_of(text_a, text_b, alt_a=None, alt_b=None, category="world"):
    return PairContext.from_records(
        image(1, "x1", text_a, alt_a, category=category),
        image(2, "x2", text_b, alt_b, category=category),
    )


@pytest.fixture
def fixture_pair():
    return pair_of(
        "Storm floods coastal towns",
        "Heatwave grips the capital",
        alt_a="Flooded street at dawn",
    )


# ============================================================================
# Pair context
# ============================================================================

class TestPairContext:
    """Tests for PairContext and Rating validation."""

    def test_same_article_rejected(self):
        with pytest.raises(ParameterDomainError):
            PairContext.from_records(image(1, "a"), image(2, "a"))

    def test_cross_scope_rejected(self):
        with pytest.raises(ParameterDomainError):
            PairContext.from_records(image(1, "a"), image(2, "b", category="sport"))

    def test_pair_id_is_unordered(self):
        forward = PairContext.from_records(image(1, "a"), image(2, "b"))
        backward = PairContext.from_records(image(2, "b"), image(1, "a"))
        assert forward.pair_id == backward.pair_id == "test.example/world/0001-0002"

    def test_rating_range(self):
        with pytest.raises(ParameterDomainError):
            Rating(5)
        assert Rating(0).attempts == 1


# ============================================================================
# Prompt rendering
# ============================================================================

class TestPrompts:
    """Tests for template loading and rendering."""

    @pytest.mark.parametrize("template,golden", [
        (Template.BASE, "base_empty.txt"),
        (Template.METRIC_DRIVEN, "metric_driven_empty.txt"),
    ])
    def test_empty_slots_match_golden(self, template, golden):
        rendered = render_template(load_template(template), {s: "" for s in SLOTS})
        assert rendered == (PROMPTS / golden).read_text(encoding="utf-8")

    @pytest.mark.parametrize("template,golden", [
        (Template.BASE, "base_fixture.txt"),
        (Template.METRIC_DRIVEN, "metric_driven_fixture.txt"),
    ])
    def test_fixture_contexts_match_golden(self, fixture_pair, template, golden):
        rendered = render_prompt(template, fixture_pair)
        assert rendered == (PROMPTS / golden).read_text(encoding="utf-8")

    def test_metric_driven_factor_lines(self, fixture_pair):
        lines = render_prompt(Template.METRIC_DRIVEN, fixture_pair).splitlines()
        for factor in FACTORS:
            assert factor in lines

    def test_base_has_no_factor_list(self, fixture_pair):
        assert "Similarity of topics" not in render_prompt(Template.BASE, fixture_pair)

    def test_headings_appear_once(self, fixture_pair):
        rendered = render_prompt(Template.METRIC_DRIVEN, fixture_pair)
        assert rendered.count("Storm floods coastal towns") == 1
        assert rendered.count("Heatwave grips the capital") == 1

    def test_descriptions_mode(self, fixture_pair):
        pair = fixture_pair.with_descriptions("A flooded road.", "A hot city square.")
        rendered = render_prompt(Template.BASE, pair, PromptMode.DESCRIPTIONS)
        assert "A flooded road." in rendered
        assert "A hot city square." in rendered
        assert "[Image A attached]" not in rendered

    def test_descriptions_mode_requires_descriptions(self, fixture_pair):
        with pytest.raises(ParameterDomainError):
            render_prompt(Template.BASE, fixture_pair, PromptMode.DESCRIPTIONS)

    def test_missing_slot(self):
        with pytest.raises(ParameterDomainError):
            render_template("{{ image_a }}", {"image_a": "x"})

    def test_missing_template_dir(self, tmp_path):
        with pytest.raises(ConfigError):
            load_template(Template.BASE, tmp_path)

    def test_few_shot_block_before_instructions(self, fixture_pair, toy):
        examples = toy.labeled_pairs()[:2]
        rendered = render_prompt(Template.METRIC_DRIVEN, fixture_pair, examples=examples)
        assert rendered.count("<example>") == 2
        assert rendered.index("<example>") < rendered.index("Using chain of thought prompting")


# ============================================================================
# Response parsing
# ============================================================================

class TestParseRating:
    """Tests for parse_rating."""

    def test_whitespace_tolerant(self):
        rating = parse_rating("<rating>\n3\n</rating><justification>ok</justification>")
        assert (rating.score, rating.justification) == (3, "ok")

    def test_prose_before_tag(self):
        assert parse_rating("Let me think step by step.\n<rating>1</rating>").score == 1

    def test_first_block_wins(self):
        assert parse_rating("<rating>1</rating> later <rating>4</rating>").score == 1

    def test_explanation_prefix_stripped(self):
        text = "<rating>2</rating>\n<justification>\nExplanation: same event\n</justification>"
        assert parse_rating(text).justification == "same event"

    def test_missing_justification(self):
        assert parse_rating("<rating>0</rating>").justification == ""

    @pytest.mark.parametrize("text,code", [
        ("no tags here", ParseErrorCode.MISSING_TAG),
        ("<rating>three</rating>", ParseErrorCode.NON_INTEGER),
        ("<rating>5</rating>", ParseErrorCode.OUT_OF_RANGE),
        ("<rating>-1</rating>", ParseErrorCode.OUT_OF_RANGE),
        ("<rating>3.5</rating>", ParseErrorCode.NON_INTEGER),
        ("<rating>[Your rating (0-4)]</rating>", ParseErrorCode.NON_INTEGER),
        ("<rating>3 or 4</rating>", ParseErrorCode.NON_INTEGER),
        ("<rating></rating>", ParseErrorCode.NON_INTEGER),
    ])
    def test_error_codes(self, text, code):
        with pytest.raises(RatingParseError) as info:
            parse_rating(text)
        assert info.value.code == code


# ============================================================================
# Offline scorers
# ============================================================================

class TestOfflineScorers:
    """Tests for score_ground_truth and score_heuristic."""

    def test_ground_truth(self, toy):
        matrix = toy.matrix("news.example", "politics")
        a = toy.image("news.example", "politics", 2)
        b = toy.image("news.example", "politics", 3)
        forward = score_ground_truth(matrix, PairContext.from_records(a, b))
        backward = score_ground_truth(matrix, PairContext.from_records(b, a))
        assert forward.score == backward.score == 2
        assert forward.justification == "ground-truth"

    def test_identical_texts(self):
        assert score_heuristic(pair_of("Budget vote", "Budget vote")).score == 4

    def test_disjoint_texts(self):
        assert score_heuristic(pair_of("Budget vote", "Chess final")).score == 0

    def test_half_overlap(self):
        assert score_heuristic(pair_of("alpha beta gamma", "alpha beta delta")).score == 2

    def test_case_insensitive(self):
        assert score_heuristic(pair_of("BUDGET Vote", "budget vote")).score == 4

    def test_symmetric(self, toy):
        for lp in toy.labeled_pairs():
            forward = score_heuristic(PairContext.from_records(lp.image_a, lp.image_b))
            backward = score_heuristic(PairContext.from_records(lp.image_b, lp.image_a))
            assert forward == backward

    def test_empty_texts(self):
        assert score_heuristic(pair_of("", "")).score == 0


# ============================================================================
# LLM pipelines
# ============================================================================

class TestScoreLlm:
    """Tests for score_llm with scripted transports."""

    def test_valid_response(self, fixture_pair):
        transport = ScriptedTransport(["<rating>3</rating><justification>close</justification>"])
        rating = score_llm(Pipeline.DIRECT, transport, fixture_pair)
        assert (rating.score, rating.justification, rating.attempts) == (3, "close", 1)
        assert "Storm floods coastal towns" in transport.prompts[0]

    def test_retries_until_valid(self, fixture_pair):
        transport = ScriptedTransport(["garbage", "<rating>x</rating>", "<rating>3</rating>"])
        rating = score_llm(Pipeline.DIRECT, transport, fixture_pair, max_attempts=3)
        assert rating.score == 3
        assert rating.attempts == 3
        assert rating.audit[0] == "garbage"
        assert len(set(transport.prompts)) == 1

    def test_retries_exhausted(self, fixture_pair):
        transport = ScriptedTransport(["garbage"])
        with pytest.raises(RatingParseError) as info:
            score_llm(Pipeline.DIRECT, transport, fixture_pair, max_attempts=2)
        assert info.value.code == ParseErrorCode.MISSING_TAG
        assert len(info.value.audit) == 2
        assert len(transport.prompts) == 2

    def test_direct_sends_images(self, fixture_pair):
        transport = ScriptedTransport(["<rating>1</rating>"])
        score_llm(Pipeline.DIRECT, transport, fixture_pair, loader=lambda img: b"jpeg")
        assert transport.image_counts == [2]

    def test_two_step_injects_descriptions(self, fixture_pair):
        describer = ScriptedTransport(["Water covers a street.", "People shade under trees."])
        judge = ScriptedTransport(["<rating>0</rating>"])
        rating = score_llm(Pipeline.TWO_STEP, judge, fixture_pair, describer=describer)
        assert rating.score == 0
        assert "Water covers a street." in judge.prompts[0]
        assert "People shade under trees." in judge.prompts[0]
        assert judge.image_counts == [0]
        assert len(describer.prompts) == 2

    def test_two_step_needs_describer(self, fixture_pair):
        with pytest.raises(ParameterDomainError):
            score_llm(Pipeline.TWO_STEP, ScriptedTransport(["<rating>0</rating>"]), fixture_pair)

    def test_empty_description(self, fixture_pair):
        with pytest.raises(TransportError):
            score_llm(
                Pipeline.TWO_STEP,
                ScriptedTransport(["<rating>0</rating>"]),
                fixture_pair,
                describer=ScriptedTransport(["   "]),
            )

    def test_blob_loader(self, tmp_path):
        folder = tmp_path / "test.example" / "world"
        folder.mkdir(parents=True)
        (folder / "0001.jpg").write_bytes(b"abc")
        load = blob_loader(tmp_path)
        assert load(image(1, "x")) == b"abc"
        assert load(image(2, "y")) is None

    def test_scorer_with_examples(self, fixture_pair, toy):
        transport = ScriptedTransport(["<rating>2</rating>"])
        scorer = LlmScorer(transport, examples_for=lambda pair: toy.labeled_pairs()[:1])
        assert scorer(fixture_pair).score == 2
        assert "<example>" in transport.prompts[0]


class TestScoreBatch:
    """Tests for score_batch."""

    def test_order_and_repeat(self, toy):
        pairs = [PairContext.from_labeled(lp) for lp in toy.labeled_pairs()]
        results = score_batch(score_heuristic, pairs, workers=4, repeat=2)
        assert [(r.pair_id, r.repeat) for r in results] == [
            (p.pair_id, rep) for p in pairs for rep in range(2)
        ]
        assert all(r.ok for r in results)

    def test_failure_recorded(self, toy):
        pairs = [PairContext.from_labeled(lp) for lp in toy.labeled_pairs()[:3]]
        failing = pairs[1].pair_id

        def scorer(pair):
            if pair.pair_id == failing:
                raise TransportError("endpoint down")
            return Rating(1)

        results = score_batch(scorer, pairs, workers=2)
        assert [r.ok for r in results] == [True, False, True]
        assert "endpoint down" in results[1].error
        assert results[1].to_dict()["score"] is None

    def test_domain(self, toy):
        with pytest.raises(ParameterDomainError):
            score_batch(score_heuristic, [], repeat=0)


# ============================================================================
# Few-shot selection
# ============================================================================

class TestFewShot:
    """Tests for select_few_shot."""

    @pytest.fixture
    def sports_pair(self):
        return PairContext.from_records(
            image(1, "t1", "Local team wins final", "Players lift trophy", category="sports"),
            image(2, "t2", "Chess championship begins", None, category="sports"),
        )

    def test_matching_category_and_anchor(self, sports_pair, toy):
        selection = select_few_shot(sports_pair, toy, k=1)
        assert selection.scope == ("news.example", "sports")
        assert selection.anchor.image_id == 10
        assert [lp.pair_id for lp in selection.examples] == ["news.example/sports/000a-000c"]
        assert not selection.insufficient

    def test_partner_ranking(self, sports_pair, toy):
        selection = select_few_shot(sports_pair, toy, k=5)
        assert [lp.pair_id for lp in selection.examples] == [
            "news.example/sports/000a-000c",
            "news.example/sports/000a-000b",
        ]
        assert selection.insufficient

    def test_pluggable_similarity(self, sports_pair, toy):
        """A constant similarity falls back to the first scope, image and pair ids."""
        selection = select_few_shot(sports_pair, toy, k=5, similarity=lambda a, b: 0.0)
        assert selection.scope == ("daily.example", "politics")
        assert selection.anchor.image_id == 1
        assert [lp.pair_id for lp in selection.examples] == [
            "daily.example/politics/0001-0002",
            "daily.example/politics/0001-0005",
        ]

    def test_domain(self, sports_pair, toy):
        with pytest.raises(ParameterDomainError):
            select_few_shot(sports_pair, toy, k=0)

    def test_index_pairs(self, toy):
        index = index_pairs(toy)
        around_10 = index[(("news.example", "sports"), 10)]
        assert sorted(lp.pair_id for lp in around_10) == [
            "news.example/sports/000a-000b",
            "news.example/sports/000a-000c",
        ]
        assert sum(len(v) for v in index.values()) == 2 * len(toy.labeled_pairs())

    def test_selector_builds_index_once(self, sports_pair, toy):
        original = Dataset.labeled_pairs
        with patch.object(Dataset, "labeled_pairs", autospec=True, side_effect=original) as spy:
            selector = FewShotSelector(toy, k=5)
            picked = [selector(sports_pair) for _ in range(3)]
        assert spy.call_count == 1
        expected = select_few_shot(sports_pair, toy, k=5).examples
        assert all(p == expected for p in picked)

    def test_token_cosine(self):
        assert token_cosine("budget vote", "vote budget") == pytest.approx(1.0)
        assert token_cosine("", "budget") == 0.0


# ============================================================================
# Cost
# ============================================================================

class TestCost:
    """Tests for the cost model."""

    def test_direct_rates(self):
        model = CostModel("gpt-4o", input_price=0.00325 / 1300, output_price=0.003 / 300)
        assert cost_per_comparison(model) == pytest.approx(0.00625, abs=1e-12)

    @pytest.mark.parametrize("name,expected,tolerance", [
        ("claude-3.5-sonnet", 0.0084, 1e-12),
        ("gpt-4o", 0.00625, 1e-12),
        ("gemini-1.5-pro", 0.0015, 1e-4),
        ("llama-3.1", 0.0, 0.0),
    ])
    def test_price_table(self, name, expected, tolerance):
        assert cost_per_comparison(CostModel.from_table(name)) == pytest.approx(expected, abs=tolerance)

    def test_negative_price(self):
        with pytest.raises(ParameterDomainError):
            CostModel("bad", input_price=-1.0, output_price=0.0)

    def test_unknown_model(self):
        with pytest.raises(ParameterDomainError):
            CostModel.from_table("nonexistent")

    def test_table_scales(self):
        rows = {r["model"]: r for r in cost_table(1000)}
        assert rows["gpt-4o"]["total"] == pytest.approx(6.25)


# ============================================================================
# Transports
# ============================================================================

def _response(status=200, payload=None):
    response = MagicMock(status_code=status, text="error body")
    response.json.return_value = payload or {}
    return response


class TestTransports:
    """Tests for the HTTP transports with a mocked requests.post."""

    def test_ollama_body(self):
        with patch("src.scorer.transport.requests.post",
                   return_value=_response(payload={"response": " <rating>1</rating> "})) as post:
            text = OllamaTransport(host="http://llm:11434/", model="llava").complete("hi", [b"img"])
        assert text == "<rating>1</rating>"
        url = post.call_args.args[0]
        body = post.call_args.kwargs["json"]
        assert url == "http://llm:11434/api/generate"
        assert body["model"] == "llava"
        assert body["images"] == [base64.b64encode(b"img").decode("ascii")]
        assert body["stream"] is False

    def test_ollama_http_error(self):
        with patch("src.scorer.transport.requests.post", return_value=_response(status=500)):
            with pytest.raises(TransportError):
                OllamaTransport().complete("hi")

    def test_ollama_connection_error(self):
        with patch("src.scorer.transport.requests.post", side_effect=requests.ConnectionError("refused")):
            with pytest.raises(TransportError):
                OllamaTransport().complete("hi")

    def test_ollama_non_json_body(self):
        response = _response()
        response.json.side_effect = ValueError("not json")
        with patch("src.scorer.transport.requests.post", return_value=response):
            with pytest.raises(TransportError):
                OllamaTransport().complete("hi")

    def test_bad_payload_recorded_in_batch(self, toy):
        """A garbled reply fails its job; the rest of the batch still runs."""
        response = _response()
        response.json.side_effect = ValueError("not json")
        pairs = [PairContext.from_labeled(lp) for lp in toy.labeled_pairs()[:3]]
        scorer = LlmScorer(transport=OllamaTransport(), max_attempts=1)
        with patch("src.scorer.transport.requests.post", return_value=response):
            results = score_batch(scorer, pairs, workers=2)
        assert [r.pair_id for r in results] == [p.pair_id for p in pairs]
        assert not any(r.ok for r in results)
        assert all("unexpected Ollama payload" in r.error for r in results)

    def test_openai_body(self):
        payload = {"choices": [{"message": {"content": "<rating>4</rating>"}}]}
        with patch("src.scorer.transport.requests.post", return_value=_response(payload=payload)) as post:
            text = OpenAIChatTransport(base_url="http://api", model="m", api_key="k").complete("hi", [b"x"])
        assert text == "<rating>4</rating>"
        assert post.call_args.args[0] == "http://api/v1/chat/completions"
        assert post.call_args.kwargs["headers"] == {"Authorization": "Bearer k"}
        content = post.call_args.kwargs["json"]["messages"][0]["content"]
        assert content[0] == {"type": "text", "text": "hi"}
        assert content[1]["image_url"]["url"].startswith("data:image/jpeg;base64,")

    def test_openai_bad_payload(self):
        with patch("src.scorer.transport.requests.post", return_value=_response(payload={"choices": []})):
            with pytest.raises(TransportError):
                OpenAIChatTransport(base_url="http://api").complete("hi")

    def test_backend_selection(self):
        assert isinstance(transport_from_env("ollama"), OllamaTransport)
        assert isinstance(transport_from_env("openai"), OpenAIChatTransport)
        with pytest.raises(ConfigError):
            transport_from_env("carrier-pigeon")

    def test_scripted_needs_responses(self):
        with pytest.raises(ConfigError):
            ScriptedTransport([])


# ============================================================================
# Score files
# ============================================================================

class TestScoreFiles:
    """Tests for pairs and scores CSV handling."""

    def test_parse_pair_id(self):
        assert parse_pair_id("news.example/sports/000a-000b") == ("news.example", "sports", 10, 11)
        with pytest.raises(DatasetValidationError):
            parse_pair_id("not-a-pair")

    def test_load_pairs(self, toy):
        pairs = load_pairs_csv(toy, str(Path(__file__).parent / "fixtures" / "toy" / "pairs.csv"))
        assert [p.pair_id for p in pairs] == [
            "news.example/politics/0001-0003",
            "news.example/sports/000a-000b",
            "daily.example/politics/0001-0002",
        ]

    def test_scores_round_trip(self, toy, tmp_path):
        pairs = [PairContext.from_labeled(lp) for lp in toy.labeled_pairs()[:2]]

        def scorer(pair):
            if pair is pairs[1]:
                raise TransportError("down")
            return Rating(3, "because")

        results = score_batch(scorer, pairs, workers=1, repeat=2)
        path = export_scores_csv(results, str(tmp_path / "out" / "scores.csv"))
        assert read_scores_csv(path) == {pairs[0].pair_id: [3, 3]}

    def test_non_numeric_score(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("pair_id,score\np1,3\np2,abc\n", encoding="utf-8")
        with pytest.raises(DatasetValidationError) as info:
            read_scores_csv(str(path))
        assert info.value.record == "p2"

    def test_fractional_score(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("pair_id,score\np1,2.5\n", encoding="utf-8")
        with pytest.raises(DatasetValidationError):
            read_scores_csv(str(path))

    def test_empty_file(self, tmp_path):
        path = tmp_path / "empty.csv"
        path.write_text("", encoding="utf-8")
        with pytest.raises(DatasetValidationError):
            read_scores_csv(str(path))

    def test_evaluation_file(self, tmp_path):
        path = tmp_path / "eval.csv"
        path.write_text("pair_id,predicted,truth\np1,1,2\np2,3,3\np1,2,2\np3,,0\n", encoding="utf-8")
        assert is_evaluation_csv(str(path))
        predicted, truth = read_evaluation_csv(str(path))
        assert predicted == {"p1": [1, 2], "p2": [3]}
        assert truth == {"p1": 2, "p2": 3, "p3": 0}

    def test_evaluation_file_conflicting_truth(self, tmp_path):
        path = tmp_path / "eval.csv"
        path.write_text("pair_id,predicted,truth\np1,1,2\np1,1,3\n", encoding="utf-8")
        with pytest.raises(DatasetValidationError) as info:
            read_evaluation_csv(str(path))
        assert info.value.record == "p1"

    def test_scores_file_is_not_evaluation_file(self, tmp_path):
        path = tmp_path / "scores.csv"
        path.write_text("pair_id,score\np1,3\n", encoding="utf-8")
        assert not is_evaluation_csv(str(path))
        with pytest.raises(DatasetValidationError):
            read_evaluation_csv(str(path))
