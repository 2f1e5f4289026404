#!/usr/bin/env python3

# Copyright (c) 2026 Pl4yer-ONE
# This file is part of ReuseCache.
# Licensed under GPLv3 or commercial license.
"""
ReuseCache - Main Entry Point

Semantic image caching toolkit: dataset validation, analytical savings
model, pseudo-client simulation, cache server, replaceability scoring and
agreement metrics. Every subcommand writes figure-ready CSV/JSON.

Usage:
    python main.py validate data/manifest.json
    python main.py model --N 164 --u 0.095 --t 1 --xmax 164 --out outputs/curve_t1.csv
    python main.py simulate --synthetic --fw 1 --ac 10 --trials 100 --out outputs/sim.csv
    python main.py serve server.toml
    python main.py score --dataset data/manifest.json --scorer heuristic --out outputs/scores.csv
    python main.py evaluate --predictions outputs/scores.csv --truth data/manifest.json
    python main.py categories data/manifest.json --out outputs/label_counts.csv
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from src.config import (
    VERSION,
    THRESHOLDS,
    BYTES_PER_MB,
    DEFAULT_COMPARISONS,
    DEFAULT_USEFUL_FRACTIONS,
    HTTP_ARCHIVE_IMAGE_BYTES,
    DEFAULT_PAGE_WEIGHT_BYTES,
    DEFAULT_IMAGES_PER_ARTICLE,
    ID_OVERHEAD_BYTES,
    DEFAULT_FW,
    DEFAULT_AC,
    DEFAULT_TRIALS,
    DEFAULT_SEED,
    DEFAULT_HOST,
    DEFAULT_PORT,
    SYNTHETIC_WEBSITES,
    SYNTHETIC_CATEGORIES,
    SYNTHETIC_ARTICLES,
    LLM_BACKEND,
    LLM_MODEL,
    LLM_DESCRIBER_MODEL,
    LLM_MAX_ATTEMPTS,
    LLM_MAX_WORKERS,
    FEW_SHOT_K,
    PRICE_TABLE,
)
from src.errors import ReuseCacheError
from src.log import setup_logging
from src.core import load_dataset, save_dataset, generate_synthetic_dataset, Dataset
from src.savings import (
    SavingsParams,
    derive_params,
    savings_curve,
    overhead_crossover,
    plateau_x,
    export_curve_csv,
)
from src.client import SimConfig, run_grid, summarize, export_trials_csv, export_summary_csv
from src.server import ServerConfig, load_server_config, build_state, serve
from src.scorer import (
    PairContext,
    Template,
    Pipeline,
    LlmScorer,
    CostModel,
    score_ground_truth,
    score_heuristic,
    score_batch,
    FewShotSelector,
    blob_loader,
    transport_from_env,
    cost_per_comparison,
    cost_table,
    load_pairs_csv,
    export_scores_csv,
    read_scores_csv,
    is_evaluation_csv,
    read_evaluation_csv,
)
from src.metrics import (
    RatingSeries,
    evaluate_series,
    confusion_matrix,
    useful_fraction_table,
    pooled_useful_fraction,
    category_mapping,
    label_counts,
    replaceability_shares,
    COUNT_COLUMNS,
    SHARE_COLUMNS,
    export_report_json,
    export_confusion_csv,
    export_rows_csv,
)
from src.report import RunManifest, write_manifest

logger = logging.getLogger("reusecache")


def _sibling(path: str, suffix: str) -> str:
    """outputs/sim.csv + '_summary.csv' -> outputs/sim_summary.csv"""
    p = Path(path)
    return str(p.with_name(p.stem + suffix))


def _load_or_synthesize(args) -> Dataset:
    if getattr(args, "synthetic", False):
        return generate_synthetic_dataset(seed=args.seed)
    if not args.dataset:
        raise ReuseCacheError("either --dataset or --synthetic is required")
    return load_dataset(args.dataset)


# =============================================================================
# SUBCOMMANDS
# =============================================================================

def cmd_validate(args) -> int:
    dataset = load_dataset(args.dataset)
    summary = dataset.summary()
    print(
        f"✅ {args.dataset}: {summary['websites']} websites, {summary['categories']} categories, "
        f"{summary['images']} images, {summary['pairs']} labelled pairs"
    )
    return 0


def cmd_model(args) -> int:
    if args.u is not None and args.t is None:
        raise ReuseCacheError("--u sets the useful fraction of one threshold; give --t too")
    if args.dataset:
        base = derive_params(load_dataset(args.dataset))
    else:
        base = SavingsParams()

    u = dict(base.u)
    if args.u is not None:
        # --u applies to --t only
        u = {args.t: args.u}

    params = SavingsParams(
        N=args.N if args.N is not None else base.N,
        u=u,
        S=args.S * BYTES_PER_MB if args.S is not None else base.S,
        X=0,
        P=args.P * BYTES_PER_MB if args.P is not None else base.P,
        I=args.I if args.I is not None else base.I,
        id_overhead=0 if args.no_overhead else base.id_overhead,
    )
    x_max = args.xmax if args.xmax is not None else params.N

    # one file per threshold unless --t picks one
    thresholds = [args.t] if args.t is not None else list(THRESHOLDS)
    outputs, results = [], {}
    for t in thresholds:
        curve = savings_curve(params, t, x_max)
        out = args.out if len(thresholds) == 1 else _sibling(args.out, f"_t{t}.csv")
        path = export_curve_csv(curve, out)
        best = max(curve, key=lambda point: point.mu_bytes)
        crossover = overhead_crossover(params, t, x_max)

        print(f"✅ Curve (t={t}, N={params.N}, useful={params.useful(t)}) -> {path}")
        print(f"   peak mu = {best.mu_bytes / BYTES_PER_MB:.4f} MB at X={best.X} "
              f"({best.M_fraction * 100:.2f}% of page weight)")
        print(f"   95% plateau at X={plateau_x(curve)}; overhead crossover: {crossover if crossover is not None else 'none'}")

        outputs.append(path)
        results[f"t{t}"] = {"peak_mu_bytes": best.mu_bytes, "peak_X": best.X,
                            "plateau_x": plateau_x(curve), "overhead_crossover": crossover}

    write_manifest(RunManifest(
        command="model",
        parameters={**params.to_dict(), "t": thresholds, "xmax": x_max},
        outputs=outputs,
        results=results,
    ), _sibling(args.out, "_manifest.json"))
    return 0


def cmd_simulate(args) -> int:
    dataset = _load_or_synthesize(args)
    fws = args.fw or list(DEFAULT_FW)
    acs = args.ac or list(DEFAULT_AC)
    base = SimConfig(
        fw=fws[0],
        ac=acs[0],
        trials=args.trials,
        threshold=args.threshold,
        include_overhead=args.overhead,
        rng_seed=args.seed,
        max_entries=args.max_entries,
    )

    print(f"Simulating {len(fws) * len(acs)} cells x {args.trials} pseudo-clients (t={args.threshold})...")
    result = run_grid(dataset, fws, acs, base, workers=args.workers)

    trials_path = export_trials_csv(result, args.out)
    summary_path = export_summary_csv(result, _sibling(args.out, "_summary.csv"))
    rows = summarize(result)
    for row in rows:
        print(f"   FW={row['fw']} AC={row['ac']}: mean {row['mean']:.2f}%  median {row['median']:.2f}%  max {row['max']:.2f}%")
    print(f"✅ Trials -> {trials_path}")
    print(f"✅ Summary -> {summary_path}")

    write_manifest(RunManifest(
        command="simulate",
        parameters={"fw": fws, "ac": acs, "trials": args.trials, "threshold": args.threshold,
                    "include_overhead": args.overhead, "seed": args.seed,
                    "max_entries": args.max_entries,
                    "dataset": "synthetic" if args.synthetic else args.dataset},
        dataset=dataset.summary(),
        outputs=[trials_path, summary_path],
        results={"best_mean_pct": max(r["mean"] for r in rows)},
    ), _sibling(args.out, "_manifest.json"))
    return 0


def cmd_serve(args) -> int:
    if args.config:
        config = load_server_config(args.config)
    elif args.dataset:
        config = ServerConfig(dataset=Path(args.dataset), blob_root=Path(args.blob_root) if args.blob_root else None)
    else:
        raise ReuseCacheError("serve needs a config file or --dataset")

    host = args.host or config.host
    port = args.port if args.port is not None else config.port
    setup_logging(config.log_level, config.log_path)
    serve(build_state(config), host, port)
    return 0


def _build_scorer(args, dataset: Dataset):
    if args.scorer == "ground-truth":
        return lambda pair: score_ground_truth(
            dataset.matrix(pair.image_a.website, pair.image_a.category), pair
        )
    if args.scorer == "heuristic":
        return score_heuristic

    examples_for = None
    if args.few_shot:
        if not args.train:
            raise ReuseCacheError("--few-shot needs --train")
        examples_for = FewShotSelector(load_dataset(args.train), args.few_shot)

    return LlmScorer(
        transport=transport_from_env(args.backend, args.model),
        pipeline=Pipeline(args.pipeline),
        template=Template(args.template),
        max_attempts=args.attempts,
        describer=transport_from_env(args.backend, args.describer_model)
        if args.pipeline == Pipeline.TWO_STEP.value else None,
        loader=blob_loader(Path(args.blob_root)) if args.blob_root else (lambda image: None),
        examples_for=examples_for,
    )


def cmd_score(args) -> int:
    dataset = load_dataset(args.dataset)
    if args.pairs:
        pairs = load_pairs_csv(dataset, args.pairs)
    else:
        pairs = [PairContext.from_labeled(lp) for lp in dataset.labeled_pairs()]
    if args.limit:
        pairs = pairs[:args.limit]

    scorer = _build_scorer(args, dataset)
    print(f"Scoring {len(pairs)} pairs x {args.repeat} with {args.scorer} ({args.workers} workers)...")
    results = score_batch(scorer, pairs, workers=args.workers, repeat=args.repeat)

    failed = [r for r in results if not r.ok]
    path = export_scores_csv(results, args.out)
    print(f"✅ {len(results) - len(failed)} scores -> {path}")
    if failed:
        print(f"❌ {len(failed)} jobs failed (first: {failed[0].pair_id}: {failed[0].error})", file=sys.stderr)

    write_manifest(RunManifest(
        command="score",
        parameters={k: v for k, v in vars(args).items() if k != "func"},
        dataset=dataset.summary(),
        outputs=[path],
        results={"scored": len(results) - len(failed), "failed": len(failed)},
    ), _sibling(args.out, "_manifest.json"))
    return 1 if failed and len(failed) == len(results) else 0


def _truth_scores(path: str) -> dict:
    if path.endswith(".json"):
        return {lp.pair_id: lp.score for lp in load_dataset(path).labeled_pairs()}
    if is_evaluation_csv(path):
        return read_evaluation_csv(path)[1]
    return {pid: values[0] for pid, values in read_scores_csv(path).items()}


def _evaluation_inputs(args):
    """(pair_id -> predictions, pair_id -> truth) from one or two files."""
    if is_evaluation_csv(args.predictions):
        predicted, truth = read_evaluation_csv(args.predictions)
        if args.truth:
            truth = _truth_scores(args.truth)
        return predicted, truth
    if not args.truth:
        raise ReuseCacheError(
            f"{args.predictions}: no 'predicted'/'truth' columns; pass --truth with a dataset or CSV"
        )
    return read_scores_csv(args.predictions), _truth_scores(args.truth)


def cmd_evaluate(args) -> int:
    predicted, truth = _evaluation_inputs(args)
    if not predicted:
        raise ReuseCacheError(f"{args.predictions}: no scored pairs")

    missing = sorted(set(predicted) - set(truth))
    if missing:
        raise ReuseCacheError(f"{len(missing)} predicted pairs have no truth label (first: {missing[0]})")

    pairs = sorted(predicted)
    series = RatingSeries.from_lists([predicted[p][0] for p in pairs], [truth[p] for p in pairs])
    repeats = {p: v for p, v in predicted.items() if len(v) > 1}
    report = evaluate_series(series, repeats or None)

    kappa = report["kappa_quadratic"]
    print(f"✅ Evaluated {report['n']} pairs")
    print(f"   NRMSE {report['nrmse']:.4f}  F1(w) {report['f1_weighted']:.4f}  "
          f"kappa(q) {'undefined' if kappa is None else f'{kappa:.4f}'} ({report['agreement']})")
    if report["response_variability"] is not None:
        print(f"   response variability (pooled std) {report['response_variability']:.4f}")

    report_path = export_report_json(report, args.out)
    confusion_path = export_confusion_csv(
        confusion_matrix(series, normalize=None), _sibling(args.out, "_confusion.csv")
    )
    print(f"✅ Report -> {report_path}")
    print(f"✅ Confusion matrix -> {confusion_path}")

    write_manifest(RunManifest(
        command="evaluate",
        parameters={"predictions": args.predictions, "truth": args.truth},
        outputs=[report_path, confusion_path],
        results={"nrmse": report["nrmse"], "kappa_quadratic": kappa},
    ), _sibling(args.out, "_manifest.json"))
    return 0


def cmd_usefraction(args) -> int:
    dataset = load_dataset(args.dataset)
    thresholds = args.t or list(THRESHOLDS)
    rows = useful_fraction_table(dataset, thresholds)
    for row in rows:
        fractions = "  ".join(f"u_{t}={row[f'u_{t}']:.4f}" for t in thresholds)
        print(f"   {row['website']}/{row['category']} ({row['n_images']} images): {fractions}")

    if args.out:
        columns = ["website", "category", "n_images"] + [f"u_{t}" for t in thresholds]
        path = export_rows_csv(rows, columns, args.out)
        print(f"✅ Useful fractions -> {path}")
        write_manifest(RunManifest(
            command="usefraction",
            parameters={"dataset": args.dataset, "t": thresholds},
            dataset=dataset.summary(),
            outputs=[path],
            results={f"pooled_u_{t}": pooled_useful_fraction(dataset, t) for t in thresholds},
        ), _sibling(args.out, "_manifest.json"))
    return 0


def cmd_categories(args) -> int:
    dataset = load_dataset(args.dataset)
    mapping = category_mapping(dataset)
    counts = label_counts(dataset, mapping)
    shares = replaceability_shares(counts)

    print(f"{'general category':<18} {'pairs':>7} {'1-2':>8} {'3-4':>8} {'>=1':>8}")
    for row in shares:
        print(f"{row['general_category']:<18} {row['total']:>7} {row['somewhat_moderately'] * 100:>7.2f}% "
              f"{row['highly_completely'] * 100:>7.2f}% {row['feasible'] * 100:>7.2f}%")

    counts_path = export_rows_csv(counts, COUNT_COLUMNS, args.out)
    shares_path = export_rows_csv(shares, SHARE_COLUMNS, _sibling(args.out, "_shares.csv"))
    mapping_path = export_rows_csv(
        [{"category": c, "general_category": g} for c, g in mapping.items()],
        ["category", "general_category"],
        _sibling(args.out, "_mapping.csv"),
    )
    print(f"✅ Label counts -> {counts_path}")
    print(f"✅ Shares -> {shares_path}")
    print(f"✅ Category mapping -> {mapping_path}")

    write_manifest(RunManifest(
        command="categories",
        parameters={"dataset": args.dataset},
        dataset=dataset.summary(),
        outputs=[counts_path, shares_path, mapping_path],
        results={row["general_category"]: row["feasible"] for row in shares},
    ), _sibling(args.out, "_manifest.json"))
    return 0


def cmd_cost(args) -> int:
    if args.model:
        model = CostModel.from_table(args.model)
        per = cost_per_comparison(model)
        print(f"{args.model}: ${per:.5f} per comparison, ${per * args.comparisons:.2f} for {args.comparisons}")
        return 0

    print(f"{'model':<20} {'input':>10} {'output':>10} {'total':>10}")
    for row in cost_table(args.comparisons):
        print(f"{row['model']:<20} {row['input']:>10.5f} {row['output']:>10.5f} {row['total']:>10.5f}")
    return 0


def cmd_synth(args) -> int:
    dataset = generate_synthetic_dataset(
        n_websites=args.websites,
        n_categories=args.categories,
        articles_per_category=args.articles,
        seed=args.seed,
    )
    path = save_dataset(dataset, args.out)
    summary = dataset.summary()
    print(f"✅ Synthetic dataset ({summary['images']} images, {summary['pairs']} pairs) -> {path}")

    write_manifest(RunManifest(
        command="synth",
        parameters={"websites": args.websites, "categories": args.categories,
                    "articles": args.articles, "seed": args.seed},
        dataset=summary,
        outputs=[path],
        results={f"pooled_u_{t}": pooled_useful_fraction(dataset, t) for t in THRESHOLDS},
    ), _sibling(args.out, "_manifest.json"))
    return 0


# =============================================================================
# PARSER
# =============================================================================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="ReuseCache - semantic image caching toolkit",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Commands:
    validate     Load and check a dataset
    model        Analytical savings curves (one file per threshold)
    simulate     Pseudo-client exact vs semantic cache simulation
    serve        Run the semantic cache server
    score        Score image pairs (ground truth, heuristic or LLM)
    evaluate     Agreement metrics of predictions vs truth
    usefraction  Useful-comparison fractions per category
    categories   Label counts and shares per general category
    cost         LLM cost per comparison
    synth        Write a seeded synthetic dataset

For more information, see README.md
        """,
    )
    parser.add_argument("--version", action="version", version=f"ReuseCache {VERSION}")
    parser.add_argument("--log-level", default=None, help="Logging level (default INFO)")
    sub = parser.add_subparsers(dest="command", required=True, help="Command to run")

    # validate
    p = sub.add_parser("validate", help="Load and check a dataset")
    p.add_argument("dataset", help="Dataset manifest (JSON)")
    p.set_defaults(func=cmd_validate)

    # model
    p = sub.add_parser("model", help="Analytical savings curve")
    p.add_argument("--dataset", help="Derive N, u, S and I from a dataset")
    p.add_argument("--N", type=int, default=None, help=f"Comparisons per category (default {DEFAULT_COMPARISONS})")
    p.add_argument("--u", type=float, default=None, help=f"Useful fraction at --t (default {DEFAULT_USEFUL_FRACTIONS})")
    p.add_argument("--S", type=float, default=None, help=f"Image size in MB (default {HTTP_ARCHIVE_IMAGE_BYTES / BYTES_PER_MB})")
    p.add_argument("--P", type=float, default=None, help=f"Page weight in MB (default {DEFAULT_PAGE_WEIGHT_BYTES / BYTES_PER_MB})")
    p.add_argument("--I", type=float, default=None, help=f"Images per article (default {DEFAULT_IMAGES_PER_ARTICLE})")
    p.add_argument("--t", type=int, choices=THRESHOLDS, default=None, help="One threshold (default: all four, one file each)")
    p.add_argument("--xmax", type=int, default=None, help="Largest cached-image count (default N)")
    p.add_argument("--no-overhead", action="store_true", help=f"Ignore the {ID_OVERHEAD_BYTES}-byte id overhead")
    p.add_argument("--out", default="outputs/savings_curve.csv", help="Curve CSV")
    p.set_defaults(func=cmd_model)

    # simulate
    p = sub.add_parser("simulate", help="Pseudo-client simulation")
    source = p.add_mutually_exclusive_group()
    source.add_argument("--dataset", help="Dataset manifest (JSON)")
    source.add_argument("--synthetic", action="store_true", help="Use the seeded synthetic dataset")
    p.add_argument("--fw", type=int, action="append", help="Frequented websites (repeatable)")
    p.add_argument("--ac", type=int, action="append", help="Images requested (repeatable)")
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS, help="Pseudo-clients per cell")
    p.add_argument("--threshold", type=int, choices=THRESHOLDS, default=1, help="Reuse threshold")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="RNG seed")
    p.add_argument("--overhead", action="store_true", help="Charge appended-id bytes")
    p.add_argument("--max-entries", type=int, default=None, help="LRU capacity (default unbounded)")
    p.add_argument("--workers", type=int, default=1, help="Cells simulated in parallel")
    p.add_argument("--out", default="outputs/simulation.csv", help="Per-trial CSV")
    p.set_defaults(func=cmd_simulate)

    # serve
    p = sub.add_parser("serve", help="Run the cache server")
    p.add_argument("config", nargs="?", help="Server config (.json or .toml)")
    p.add_argument("--dataset", help="Dataset manifest when no config file is given")
    p.add_argument("--blob-root", help="Directory of image payloads")
    p.add_argument("--host", default=None, help=f"Bind address (default {DEFAULT_HOST})")
    p.add_argument("--port", type=int, default=None, help=f"Port (default {DEFAULT_PORT})")
    p.set_defaults(func=cmd_serve)

    # score
    p = sub.add_parser("score", help="Score image pairs")
    p.add_argument("--dataset", required=True, help="Dataset manifest the pairs refer to")
    p.add_argument("--pairs", help="Pairs CSV (pair_id column); default: every labelled pair")
    p.add_argument("--scorer", choices=["ground-truth", "heuristic", "llm"], default="heuristic")
    p.add_argument("--pipeline", choices=[m.value for m in Pipeline], default=Pipeline.DIRECT.value)
    p.add_argument("--template", choices=[t.value for t in Template], default=Template.METRIC_DRIVEN.value)
    p.add_argument("--backend", choices=["ollama", "openai"], default=LLM_BACKEND)
    p.add_argument("--model", default=LLM_MODEL, help="Judge model name")
    p.add_argument("--describer-model", default=LLM_DESCRIBER_MODEL, help="Vision model for two-step")
    p.add_argument("--blob-root", help="Directory of image payloads to attach")
    p.add_argument("--few-shot", type=int, nargs="?", const=FEW_SHOT_K, default=0,
                   help=f"Dynamic few-shot examples (default {FEW_SHOT_K} when given)")
    p.add_argument("--train", help="Labelled train dataset for few-shot selection")
    p.add_argument("--attempts", type=int, default=LLM_MAX_ATTEMPTS, help="Tries per pair on parse failure")
    p.add_argument("--workers", type=int, default=LLM_MAX_WORKERS, help="Concurrent scoring calls")
    p.add_argument("--repeat", type=int, default=1, help="Re-prompts per pair")
    p.add_argument("--limit", type=int, default=None, help="Score only the first N pairs")
    p.add_argument("--out", default="outputs/scores.csv", help="Scores CSV")
    p.set_defaults(func=cmd_score)

    # evaluate
    p = sub.add_parser("evaluate", help="Metrics of predictions vs truth")
    p.add_argument("--predictions", required=True, help="Scores CSV, or a pair_id,predicted,truth CSV")
    p.add_argument("--truth", help="Dataset manifest (.json) or CSV; optional when --predictions has a truth column")
    p.add_argument("--out", default="outputs/metrics.json", help="Metrics JSON (confusion CSV and manifest written beside it)")
    p.set_defaults(func=cmd_evaluate)

    # usefraction
    p = sub.add_parser("usefraction", help="Useful fractions per category")
    p.add_argument("dataset", help="Dataset manifest (JSON)")
    p.add_argument("--t", type=int, choices=THRESHOLDS, action="append", help="Threshold (repeatable)")
    p.add_argument("--out", help="CSV output")
    p.set_defaults(func=cmd_usefraction)

    # categories
    p = sub.add_parser("categories", help="Label counts per general category")
    p.add_argument("dataset", help="Dataset manifest (JSON)")
    p.add_argument("--out", default="outputs/label_counts.csv", help="Counts CSV (shares, mapping and manifest beside it)")
    p.set_defaults(func=cmd_categories)

    # cost
    p = sub.add_parser("cost", help="LLM cost per comparison")
    p.add_argument("--model", choices=sorted(PRICE_TABLE), help="One model (default: whole table)")
    p.add_argument("--comparisons", type=int, default=1, help="Scale to this many comparisons")
    p.set_defaults(func=cmd_cost)

    # synth
    p = sub.add_parser("synth", help="Write a synthetic dataset")
    p.add_argument("--out", default="outputs/synthetic/manifest.json", help="Manifest path")
    p.add_argument("--websites", type=int, default=SYNTHETIC_WEBSITES)
    p.add_argument("--categories", type=int, default=SYNTHETIC_CATEGORIES)
    p.add_argument("--articles", type=int, default=SYNTHETIC_ARTICLES, help="Articles per category")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_synth)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one subcommand; returns 0 on success, 1 on failure, 2 on usage errors."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 0

    setup_logging(args.log_level)
    try:
        return args.func(args)
    except ReuseCacheError as e:
        print(f"❌ {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"❌ {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
