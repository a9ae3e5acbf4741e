"""Command-line interface: mine, learn, generate, evaluate, report, experiment.

Exit codes: 0 success, 1 I/O or parse error, 2 usage or range error,
3 model degeneracy (nothing to learn at the requested support).
"""
from __future__ import annotations

import argparse
import csv
import glob
import io
import json
import logging
import os
import sys
import time
from importlib import resources

from . import __version__, rng as rng_mod
from .base import THREADS_ENV, default_n_jobs
from .characteristics import aggregate, characteristics
from .characteristics import to_csv as characteristics_csv
from .characteristics import to_json as characteristics_json
from .charts import bar_chart_svg, radar_data
from .dataset import DatasetFormatError, load_dataset, save_dataset
from .exceptions import ModelDegeneracyError
from .fidelity import (DEFAULT_GRID, combine_replicas, pattern_fidelity, privacy_score,
                       reports_to_csv)
from .fim import mine_frequent
from .iim import IIMGenerator
from .igm import IGMGenerator
from .lda import LDAGenerator
from .models import estimator_for, load_model, save_model
from .validation import check_minsup

logger = logging.getLogger("itemset_synth")

EXIT_OK, EXIT_IO, EXIT_USAGE, EXIT_DEGENERATE = 0, 1, 2, 3


class UsageError(Exception):
    pass


# ---------------------------------------------------------------- helpers

def parse_grid(text: str) -> list[float]:
    """``"0.1:0.9:0.1"`` (start:stop:step, inclusive) or ``"0.1,0.5"``."""
    text = text.strip()
    try:
        if ":" in text:
            start, stop, step = (float(x) for x in text.split(":"))
            if step <= 0:
                raise UsageError("grid step must be positive")
            n = int(round((stop - start) / step)) + 1
            values = [round(start + k * step, 10) for k in range(n)]
        else:
            values = [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad grid {text!r}") from None
    if not values:
        raise UsageError("grid is empty")
    for v in values:
        if not 0.0 < v < 1.0:
            raise UsageError(f"minsup out of range: grid value {v}")
    return values


def parse_minsups(text) -> list[float]:
    if text is None:
        return []
    values = []
    for tok in str(text).split(","):
        tok = tok.strip()
        if not tok:
            continue
        try:
            v = float(tok)
        except ValueError:
            raise UsageError(f"bad minsup {tok!r}") from None
        try:
            values.append(check_minsup(v))
        except ValueError:
            raise UsageError("minsup out of range") from None
    return values


def read_config(path) -> dict:
    """key=value lines; ``#`` starts a comment. Bare names resolve to shipped presets."""
    if not os.path.exists(path):
        preset = resources.files("itemset_synth") / "presets" / f"{path}.conf"
        if not preset.is_file():
            raise FileNotFoundError(path)
        text = preset.read_text(encoding="utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    out = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise UsageError(f"{path}:{lineno}: expected key=value")
        out[key.strip().replace("-", "_")] = value.strip()
    return out


def apply_config(args, parser) -> None:
    if not getattr(args, "config", None):
        return
    actions = {a.dest: a for a in parser._actions}
    for key, raw in read_config(args.config).items():
        if key not in actions:
            raise UsageError(f"unknown config key {key!r}")
        if getattr(args, key, None) is not None:
            continue  # command line wins
        action = actions[key]
        if action.type is not None:
            value = action.type(raw)
        elif isinstance(action, argparse._StoreConstAction):
            value = raw.lower() in ("1", "true", "yes", "on")
        else:
            value = raw
        setattr(args, key, value)


def write_text_atomic(path, text: str) -> None:
    tmp = f"{os.fspath(path)}.tmp"
    with open(tmp, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    os.replace(tmp, path)


def write_manifest(path, manifest: dict) -> None:
    write_text_atomic(path, json.dumps(manifest, indent=2, sort_keys=True) + "\n")


def resolve_threads(args) -> int:
    if getattr(args, "threads", None):
        return args.threads
    return default_n_jobs()


def pct(minsup) -> str:
    return f"{round(float(minsup) * 100):d}"


def _load(path, allow_empty=False):
    return load_dataset(path, allow_empty=allow_empty)


# ---------------------------------------------------------------- commands

def cmd_mine(args) -> int:
    minsups = parse_minsups(args.minsup)
    if len(minsups) != 1:
        raise UsageError("mine needs exactly one --minsup")
    d = _load(args.input, args.allow_empty)
    fi = mine_frequent(d, minsups[0])
    text = fi.to_json(indent=None) + "\n"
    if args.out:
        write_text_atomic(args.out, text)
    else:
        sys.stdout.write(text)
    print(f"{len(fi)} frequent itemsets", file=sys.stdout if args.out else sys.stderr)
    return EXIT_OK


def build_estimator(args, minsup):
    kind = args.model
    if kind == "igm":
        return IGMGenerator(minsup=minsup, noise_universe=args.noise_universe or "effective",
                            retry_empty=bool(args.retry_empty))
    if kind == "lda":
        return LDAGenerator(n_topics=args.topics, minsup=None if args.topics else minsup,
                            alpha=args.alpha, beta=args.beta if args.beta is not None else 0.01,
                            n_iter=args.iterations or 1000,
                            burn_in=args.burn_in if args.burn_in is not None else 200,
                            n_avg=args.n_avg or 10, doc_policy=args.doc_policy or "cycle",
                            random_state=args.seed)
    return IIMGenerator(rounds=args.rounds if args.rounds is not None else 10,
                        max_candidates_per_round=args.max_candidates or 100,
                        min_p=args.min_p if args.min_p is not None else 0.01,
                        penalty=args.penalty if args.penalty is not None else 2.0,
                        retry_empty=args.retry_empty is not False)


def model_paths(out: str, minsups: list[float]) -> list[str]:
    if len(minsups) <= 1:
        return [out]
    stem, ext = os.path.splitext(out)
    return [f"{stem}_{pct(m)}{ext or '.json'}" for m in minsups]


def cmd_learn(args) -> int:
    if not args.model:
        raise UsageError("--model is required")
    minsups = parse_minsups(args.minsup)
    if args.model == "iim" and minsups:
        raise UsageError("iim does not take --minsup")
    if args.model == "igm" and not minsups:
        raise UsageError("igm needs --minsup")
    if args.model == "lda" and not minsups and not args.topics:
        raise UsageError("lda needs --minsup (K = |FI(minsup)|) or --topics")
    if args.seed is None and args.model == "lda":
        args.seed = rng_mod.entropy_seed()
        logger.warning("no --seed given; using %d", args.seed)
    d = _load(args.input, args.allow_empty)
    for minsup, path in zip(minsups or [None], model_paths(args.out, minsups)):
        est = build_estimator(args, minsup)
        t0 = time.perf_counter()
        est.fit(d)
        learn_s = time.perf_counter() - t0
        model = est.model_
        model.provenance.update({"minsup": minsup, "input": os.path.basename(args.input)})
        if args.seed is not None:
            model.provenance["seed"] = args.seed
        save_model(model, path)
        write_manifest(path + ".manifest.json", {
            "command": "learn",
            "tool_version": __version__,
            "config": {"input": os.path.abspath(args.input), "model": args.model,
                       "minsup": minsup, "seed": args.seed, "params": est.get_params()},
            "timings": {"learn_s": learn_s},
            "outputs": [os.path.abspath(path)],
            "warnings": [],
            "status": "complete",
        })
        size = len(getattr(model, "components", [])) or getattr(model, "K", 0)
        print(f"{args.model} model written to {path} ({size} "
              f"{'topics' if args.model == 'lda' else 'components'}, {learn_s:.2f}s)")
    return EXIT_OK


def generate_replicas(model, n, replicas, seed, outdir, threads, learn_manifest=None,
                      model_path="", manifest_extra=None) -> dict:
    os.makedirs(outdir, exist_ok=True)
    est = estimator_for(model)
    manifest = {
        "command": "generate",
        "tool_version": __version__,
        "prng": rng_mod.PRNG_FAMILY,
        "config": {"model": os.path.abspath(model_path) if model_path else "",
                   "model_kind": model.kind, "n": n, "replicas": replicas, "seed": seed,
                   "minsup": model.provenance.get("minsup"),
                   "dataset": model.provenance.get("dataset", ""),
                   "input": (learn_manifest or {}).get("config", {}).get("input", "")},
        "timings": {"learn_s": (learn_manifest or {}).get("timings", {}).get("learn_s"),
                    "generate_s": [], "generate_mean_s": None},
        "outputs": [],
        "warnings": [],
        "status": "partial",
    }
    manifest.update(manifest_extra or {})
    width = max(2, len(str(replicas)))
    try:
        for r in range(1, replicas + 1):
            t0 = time.perf_counter()
            data = est.sample(n, random_state=rng_mod.stream_seed(seed, r), n_jobs=threads)
            manifest["timings"]["generate_s"].append(time.perf_counter() - t0)
            if est.n_warnings_:
                manifest["warnings"].append(
                    f"replica {r}: {est.n_warnings_} transactions hit the LDA attempt cap")
            path = os.path.join(outdir, f"replica_{r:0{width}d}.dat")
            save_dataset(data, path, allow_empty=True)
            manifest["outputs"].append(os.path.abspath(path))
        manifest["status"] = "complete"
    finally:
        times = manifest["timings"]["generate_s"]
        manifest["timings"]["generate_mean_s"] = sum(times) / len(times) if times else None
        write_manifest(os.path.join(outdir, "manifest.json"), manifest)
    return manifest


def cmd_generate(args) -> int:
    if not args.model_file:
        raise UsageError("--model is required")
    model = load_model(args.model_file)
    replicas = args.replicas if args.replicas is not None else 10
    if replicas < 1:
        raise UsageError("--replicas must be >= 1")
    if args.n is not None and args.n < 1:
        raise UsageError("--n must be >= 1")
    seed = args.seed
    if seed is None:
        seed = rng_mod.entropy_seed()
        logger.warning("no --seed given; using %d", seed)
    learn_manifest = None
    if os.path.exists(args.model_file + ".manifest.json"):
        with open(args.model_file + ".manifest.json", encoding="utf-8") as fh:
            learn_manifest = json.load(fh)
    manifest = generate_replicas(model, args.n, replicas, seed, args.out, resolve_threads(args),
                                 learn_manifest, args.model_file)
    print(f"{len(manifest['outputs'])} replicas written to {args.out}")
    for w in manifest["warnings"]:
        print(f"warning: {w}", file=sys.stderr)
    return EXIT_OK


def _expand(patterns) -> list[list[str]]:
    groups = []
    for pat in patterns:
        files = sorted(glob.glob(pat))
        if not files:
            raise FileNotFoundError(f"no files match {pat!r}")
        groups.append(files)
    return groups


def _group_name(files, k):
    parent = os.path.basename(os.path.dirname(os.path.abspath(files[0])))
    return parent or f"group{k + 1}"


def evaluate_groups(original, groups, suite, grid, names=None) -> dict:
    """Score groups of replica files against ``original``; returns report rows."""
    suites = {"characteristics", "patterns", "privacy"} if suite == "all" else {suite}
    names = names or [_group_name(g, k) for k, g in enumerate(groups)]
    result = {"characteristics": [], "patterns": [], "privacy": []}
    fi_ori = {s: mine_frequent(original, s) for s in grid} if "patterns" in suites else None
    if "characteristics" in suites:
        result["characteristics"].append((original.name or "original", characteristics(original)))
    group_means = []
    for name, files in zip(names, groups):
        datasets = [load_dataset(f, allow_empty=True) for f in files]
        if "characteristics" in suites:
            vecs = []
            for f, d in zip(files, datasets):
                v = characteristics(d)
                vecs.append(v)
                result["characteristics"].append((f"{name}/{os.path.basename(f)}", v))
            mean = aggregate(vecs)
            group_means.append(mean)
            result["characteristics"].append((f"{name}/mean", mean))
        if "patterns" in suites:
            reps = [pattern_fidelity(original, d, grid, original_itemsets=fi_ori) for d in datasets]
            result["patterns"] += [(f"{name}/{os.path.basename(f)}", r) for f, r in zip(files, reps)]
            result["patterns"].append((f"{name}/mean", combine_replicas(reps)))
        if "privacy" in suites:
            reps = [privacy_score(original, d) for d in datasets]
            result["privacy"] += [(f"{name}/{os.path.basename(f)}", r) for f, r in zip(files, reps)]
            result["privacy"].append((f"{name}/mean", combine_replicas(reps)))
    if len(group_means) > 1:
        result["characteristics"].append(("*", aggregate(group_means)))
    return result


def _write_fidelity(outdir, key, rows):
    write_text_atomic(os.path.join(outdir, f"{key}.csv"), reports_to_csv(rows))
    write_text_atomic(os.path.join(outdir, f"{key}.json"), json.dumps(
        [{"name": n, **r.to_dict()} for n, r in rows], indent=2) + "\n")


def cmd_evaluate(args) -> int:
    grid = parse_grid(args.grid) if args.grid else list(DEFAULT_GRID)
    original = _load(args.input, args.allow_empty)
    groups = _expand(args.synthetic)
    result = evaluate_groups(original, groups, args.suite, grid)
    os.makedirs(args.out, exist_ok=True)
    if result["characteristics"]:
        rows = result["characteristics"]
        write_text_atomic(os.path.join(args.out, "characteristics.csv"), characteristics_csv(rows))
        write_text_atomic(os.path.join(args.out, "characteristics.json"),
                          characteristics_json(rows) + "\n")
    for key in ("patterns", "privacy"):
        if result[key]:
            _write_fidelity(args.out, key, result[key])
            for name, rep in result[key]:
                if name.endswith("/mean"):
                    s = rep.replica_stats
                    print(f"{key:8s} {name}: f1 = {s['f1_mean']:.4f} +/- {s['f1_std']:.4f}")
    print(f"reports written to {args.out}")
    return EXIT_OK


def _run_label(cfg) -> str:
    label = f"{cfg.get('dataset') or 'data'}_{cfg['model_kind'].upper()}"
    if cfg.get("minsup") is not None:
        label += pct(cfg["minsup"])
    return label


def cmd_report(args) -> int:
    manifests = []
    for path in args.manifests:
        with open(path, encoding="utf-8") as fh:
            m = json.load(fh)
        if m.get("command") != "generate":
            raise UsageError(f"{path} is not a generate manifest")
        manifests.append(m)
    fmt = args.format or "csv"
    os.makedirs(args.out, exist_ok=True)

    # timings
    timing_rows = [{"model": _run_label(m["config"]), "learn_s": m["timings"].get("learn_s"),
                    "generate_s": m["timings"].get("generate_mean_s")} for m in manifests]

    # characteristics, star-averaged over the minsup variants of one (dataset, model)
    groups: dict[tuple, list] = {}
    originals: dict[str, str] = {}
    for m in manifests:
        cfg = m["config"]
        groups.setdefault((cfg.get("dataset") or "data", cfg["model_kind"]), []).append(m)
        if cfg.get("input"):
            originals.setdefault(cfg.get("dataset") or "data", cfg["input"])
    if args.original:
        d = load_dataset(args.original)
        originals = {d.name: args.original}
    rows = []
    for name, path in originals.items():
        if os.path.exists(path):
            rows.append((name, characteristics(load_dataset(path))))
    for (dataset, kind), runs in groups.items():
        per_run = [aggregate(characteristics(load_dataset(f, allow_empty=True))
                             for f in m["outputs"]) for m in runs]
        star = "*" if len(runs) > 1 else ""
        label = f"{dataset}_{kind.upper()}{star}"
        if not star and runs[0]["config"].get("minsup") is not None:
            label = _run_label(runs[0]["config"])
        rows.append((label, aggregate(per_run)))

    if fmt == "json":
        write_text_atomic(os.path.join(args.out, "characteristics.json"),
                          characteristics_json(rows) + "\n")
        write_text_atomic(os.path.join(args.out, "timing.json"),
                          json.dumps(timing_rows, indent=2) + "\n")
    else:
        write_text_atomic(os.path.join(args.out, "characteristics.csv"), characteristics_csv(rows))
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(("model", "learn_s", "generate_s"))
        for r in timing_rows:
            w.writerow([r["model"]] + ["" if r[k] is None else f"{r[k]:.4f}"
                                       for k in ("learn_s", "generate_s")])
        write_text_atomic(os.path.join(args.out, "timing.csv"), buf.getvalue())
    if rows:
        chart = radar_data(rows)
        write_text_atomic(os.path.join(args.out, "radar.csv"), chart.to_csv())
        write_text_atomic(os.path.join(args.out, "radar.svg"), chart.to_svg(title="characteristics"))

    suites = set()
    if args.suite in ("patterns", "all"):
        suites.add("patterns")
    if args.suite in ("privacy", "all"):
        suites.add("privacy")
    if suites:
        grid = parse_grid(args.grid) if args.grid else list(DEFAULT_GRID)
        for dataset, path in originals.items():
            original = load_dataset(path)
            runs = [m for m in manifests if (m["config"].get("dataset") or "data") == dataset]
            names = [_run_label(m["config"]) for m in runs]
            res = evaluate_groups(original, [m["outputs"] for m in runs],
                                  "patterns" if suites == {"patterns"} else
                                  "privacy" if suites == {"privacy"} else "all",
                                  grid, names=names)
            for key in suites:
                means = [(n[:-5], r) for n, r in res[key] if n.endswith("/mean")]
                _write_fidelity(args.out, f"{dataset}_{key}", means)
                write_text_atomic(os.path.join(args.out, f"{dataset}_{key}.svg"), bar_chart_svg(
                    [n for n, _ in means], [r.replica_stats["f1_mean"] for _, r in means],
                    [r.replica_stats["f1_std"] for _, r in means], title=f"{dataset} {key} F1"))
    print(f"report written to {args.out}")
    return EXIT_OK


def cmd_experiment(args) -> int:
    """learn + generate for every support level of a preset, one subdirectory per run."""
    if not args.model:
        raise UsageError("--model is required")
    minsups = parse_minsups(args.minsup)
    if args.seed is None:
        args.seed = rng_mod.entropy_seed()
        logger.warning("no --seed given; using %d", args.seed)
    os.makedirs(args.out, exist_ok=True)
    d = _load(args.input, args.allow_empty)
    manifests = []
    for minsup in (minsups or [None]):
        if args.model in ("igm", "lda") and minsup is None and not args.topics:
            raise UsageError(f"{args.model} needs --minsup")
        if args.model == "iim" and minsup is not None:
            raise UsageError("iim does not take --minsup")
        run = f"{d.name or 'data'}_{args.model.upper()}{pct(minsup) if minsup else ''}"
        rundir = os.path.join(args.out, run)
        os.makedirs(rundir, exist_ok=True)
        est = build_estimator(args, minsup)
        t0 = time.perf_counter()
        est.fit(d)
        learn_s = time.perf_counter() - t0
        model = est.model_
        model.provenance.update({"minsup": minsup, "input": os.path.basename(args.input),
                                 "seed": args.seed})
        model_path = os.path.join(rundir, "model.json")
        save_model(model, model_path)
        learn_manifest = {"config": {"input": os.path.abspath(args.input)},
                          "timings": {"learn_s": learn_s}}
        write_manifest(model_path + ".manifest.json", learn_manifest)
        generate_replicas(model, args.n, args.replicas or 10, args.seed, rundir,
                          resolve_threads(args), learn_manifest, model_path)
        manifests.append(os.path.join(rundir, "manifest.json"))
        print(f"{run}: learned in {learn_s:.2f}s, replicas in {rundir}")
    write_text_atomic(os.path.join(args.out, "manifests.txt"), "\n".join(manifests) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------- parser

def _add_model_flags(p):
    p.add_argument("--model", choices=("igm", "lda", "iim"))
    p.add_argument("--minsup", help="support fraction, or comma-separated list")
    p.add_argument("--seed", type=int)
    p.add_argument("--alpha", type=float, help="LDA doc-topic prior (default 50/K)")
    p.add_argument("--beta", type=float, help="LDA topic-word prior (default 0.01)")
    p.add_argument("--topics", type=int, help="LDA topic count instead of |FI(minsup)|")
    p.add_argument("--iterations", type=int, help="LDA Gibbs sweeps (default 1000)")
    p.add_argument("--burn-in", type=int, help="LDA burn-in sweeps (default 200)")
    p.add_argument("--n-avg", type=int, help="LDA posterior samples averaged (default 10)")
    p.add_argument("--doc-policy", choices=("cycle", "uniform"))
    p.add_argument("--rounds", type=int, help="IIM rounds (default 10)")
    p.add_argument("--max-candidates", type=int, help="IIM candidates per round (default 100)")
    p.add_argument("--min-p", type=float, help="IIM probability floor (default 0.01)")
    p.add_argument("--penalty", type=float, help="IIM uncovered-item cost (default 2)")
    p.add_argument("--noise-universe", choices=("effective", "full"))
    p.add_argument("--retry-empty", dest="retry_empty", action="store_const", const=True)
    p.add_argument("--no-retry-empty", dest="retry_empty", action="store_const", const=False)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="itemset-synth", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mine", help="mine frequent itemsets to JSON")
    p.add_argument("--input", required=True)
    p.add_argument("--minsup", required=True)
    p.add_argument("--out")
    p.add_argument("--allow-empty", action="store_true", default=None)
    p.add_argument("--config")
    p.set_defaults(func=cmd_mine)

    p = sub.add_parser("learn", help="learn a generative model")
    p.add_argument("--input", required=True)
    p.add_argument("--out", required=True, help="model JSON path")
    p.add_argument("--allow-empty", action="store_true", default=None)
    p.add_argument("--config")
    _add_model_flags(p)
    p.set_defaults(func=cmd_learn)

    p = sub.add_parser("generate", help="sample replica datasets from a model")
    p.add_argument("--model", dest="model_file", required=True)
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--n", type=int, help="transactions per replica (default: training size)")
    p.add_argument("--replicas", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--threads", type=int, help=f"worker threads (default ${THREADS_ENV} or 1)")
    p.add_argument("--config")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("evaluate", help="score replicas against the original")
    p.add_argument("--input", required=True, help="original dataset")
    p.add_argument("--synthetic", nargs="+", required=True,
                   help="one glob of replica files per run")
    p.add_argument("--suite", choices=("characteristics", "patterns", "privacy", "all"),
                   default="all")
    p.add_argument("--grid", help='support grid, "0.1:0.9:0.1" or "0.2,0.4"')
    p.add_argument("--out", required=True)
    p.add_argument("--allow-empty", action="store_true", default=None)
    p.add_argument("--config")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("report", help="summary tables and charts from generate manifests")
    p.add_argument("manifests", nargs="+")
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=("csv", "json"))
    p.add_argument("--original", help="original dataset (default: from the manifests)")
    p.add_argument("--suite", choices=("characteristics", "patterns", "privacy", "all"),
                   default="characteristics")
    p.add_argument("--grid")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("experiment", help="learn and generate for each support level")
    p.add_argument("--input", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--replicas", type=int)
    p.add_argument("--threads", type=int)
    p.add_argument("--allow-empty", action="store_true", default=None)
    p.add_argument("--config")
    _add_model_flags(p)
    p.set_defaults(func=cmd_experiment)
    parser._subparsers_map = sub.choices
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        apply_config(args, parser._subparsers_map[args.command])
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ModelDegeneracyError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (OSError, DatasetFormatError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
