"""Command-line entry point: generate, cluster, eval and sweep subcommands.

Exit codes are a stable scripting contract: 0 success, 1 I/O or input-file
problems, 2 usage/config errors, 3 pipeline stage errors.  All randomness
flows from the single --seed flag, so identical invocations produce identical
outputs (diagnostics runtime fields aside).  Angles are radians by default; a
``deg`` suffix (e.g. ``140deg``) is accepted everywhere an angle appears.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from dataclasses import dataclass, asdict

import numpy as np

from .cluster import StageError, pbc_pipeline
from .dataset import (
    LabeledPointSet,
    PointSet,
    load_csv,
    load_labels,
    pca_project,
    save_labels,
    save_points_csv,
)
from .datagen import benchmark_info, benchmark_names, make_benchmark
from .evaluation import accuracy, confusion
from .graph import build_knn_graph
from .pathfinder import compute_features, select_landmarks
from .cluster import group_features, linkage_with_trace, assign_labels

__all__ = ["main", "entry", "parse_alpha", "RunConfig"]

OUTDIR_ENV = "PATHCLUST_OUTDIR"

EXIT_OK = 0
EXIT_IO = 1
EXIT_USAGE = 2
EXIT_STAGE = 3


class UsageError(ValueError):
    """Bad flags or config values; maps to exit code 2."""


def parse_alpha(text: str) -> float:
    """Angle in radians, or degrees when suffixed with ``deg``."""
    raw = str(text).strip().lower()
    try:
        if raw.endswith("deg"):
            value = float(raw[:-3]) * math.pi / 180.0
        elif raw.endswith("rad"):
            value = float(raw[:-3])
        else:
            value = float(raw)
    except ValueError as exc:
        raise UsageError(f"cannot parse angle {text!r}") from exc
    if not 0.0 <= value <= math.pi:
        raise UsageError(f"alpha must lie in [0, pi] after unit normalization, got {value:g}")
    return value


@dataclass
class RunConfig:
    """Effective clustering-run configuration (echoed into diagnostics)."""

    input: str | None
    benchmark: str | None
    n: int
    noise: float
    q: int
    k: int
    m: int
    alpha: float
    seed: int
    mode: str
    pca_dims: int | None
    outdir: str

    def validate(self) -> None:
        if (self.input is None) == (self.benchmark is None):
            raise UsageError("exactly one of --input and --benchmark is required")
        if self.q < 1:
            raise UsageError("q must be >= 1")
        if self.k < 1:
            raise UsageError("K must be >= 1")
        if self.m < self.k:
            raise UsageError("M must be >= K")
        if self.mode not in ("union", "mutual"):
            raise UsageError(f"unknown symmetrization mode {self.mode!r}")
        if self.pca_dims is not None and self.pca_dims < 1:
            raise UsageError("pca-dims must be >= 1")
        if self.seed < 0:
            raise UsageError("seed must be nonnegative")


def _default_outdir() -> str:
    return os.environ.get(OUTDIR_ENV, ".")


def _merge_config(args: argparse.Namespace) -> RunConfig:
    """Build the effective config: JSON config file first, flags override."""
    file_values: dict = {}
    if args.config:
        try:
            with open(args.config, "r", encoding="utf-8") as fh:
                file_values = json.load(fh)
        except json.JSONDecodeError as exc:
            raise UsageError(f"config file {args.config}: {exc}") from exc
        if not isinstance(file_values, dict):
            raise UsageError(f"config file {args.config} must hold a JSON object")

    def pick(flag_name: str, file_key: str, default):
        flag = getattr(args, flag_name)
        if flag is not None:
            return flag
        if file_key in file_values:
            return file_values[file_key]
        return default

    alpha_raw = pick("alpha", "alpha", "120deg")
    cfg = RunConfig(
        input=pick("input", "input", None),
        benchmark=pick("benchmark", "benchmark", None),
        n=int(pick("n", "n", 1500)),
        noise=float(pick("noise", "noise", 0.01)),
        q=int(pick("q", "q", 8)),
        k=int(pick("k", "K", 2)),
        m=int(pick("m", "M", 0) or 0),
        alpha=parse_alpha(alpha_raw),
        seed=int(pick("seed", "seed", 0)),
        mode=str(pick("mode", "mode", "union")),
        pca_dims=(lambda v: int(v) if v is not None else None)(
            pick("pca_dims", "pca_dims", None)),
        outdir=str(pick("outdir", "outdir", _default_outdir())),
    )
    if cfg.m == 0:
        # landmarks only need to slightly outnumber the clusters
        cfg.m = max(2 * cfg.k, 10)
    cfg.validate()
    return cfg


def _json_dump(path, payload) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def cmd_generate(args: argparse.Namespace) -> int:
    try:
        data = make_benchmark(args.name, args.n, args.noise, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    save_points_csv(args.out, data)
    print(f"N={data.points.n} K={data.k} D={data.points.dim} -> {args.out}")
    return EXIT_OK


def cmd_cluster(args: argparse.Namespace) -> int:
    cfg = _merge_config(args)
    os.makedirs(cfg.outdir, exist_ok=True)

    if cfg.benchmark is not None:
        data = make_benchmark(cfg.benchmark, cfg.n, cfg.noise, cfg.seed)
        points = data.points
    else:
        loaded = load_csv(cfg.input, has_label_column=bool(args.labeled))
        points = loaded.points if isinstance(loaded, LabeledPointSet) else loaded

    started = time.perf_counter()
    if cfg.pca_dims is not None:
        if cfg.pca_dims > points.dim:
            raise UsageError(
                f"pca-dims {cfg.pca_dims} exceeds input dimension {points.dim}")
        points = pca_project(points, cfg.pca_dims)
    result = pbc_pipeline(points, cfg.q, cfg.k, cfg.m, cfg.alpha, cfg.seed, cfg.mode)
    runtime_ms = (time.perf_counter() - started) * 1000.0

    labels_path = os.path.join(cfg.outdir, "labels.csv")
    save_labels(labels_path, result)
    diag = result.diagnostics()
    diag["config"] = asdict(cfg)
    diag["runtime_ms"] = runtime_ms
    _json_dump(os.path.join(cfg.outdir, "diagnostics.json"), diag)
    plot = [
        {"coords": [float(x) for x in points.coords[i][:3]],
         "label": int(result.labels[i])}
        for i in range(points.n)
    ]
    _json_dump(os.path.join(cfg.outdir, "plot.json"), plot)
    print(f"K={result.k} F={result.f} zero_signatures={result.zero_signature_count} "
          f"-> {labels_path}")
    return EXIT_OK


def _read_any_labels(path) -> np.ndarray:
    """Accept either an ``index,label`` file or a dataset CSV with labels."""
    try:
        return load_labels(path)
    except ValueError:
        loaded = load_csv(path, has_label_column=True)
        return loaded.labels


def cmd_eval(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    pred = _read_any_labels(args.labels)
    truth = _read_any_labels(args.truth)
    if pred.size != truth.size:
        raise UsageError(
            f"label counts differ: {pred.size} predicted vs {truth.size} true")
    acc = accuracy(pred, truth)
    report = {
        "dataset": str(args.truth),
        "params": {"labels": str(args.labels), "truth": str(args.truth)},
        "accuracy": acc,
        "confusion": confusion(pred, truth).counts.tolist(),
        "runtime_ms": (time.perf_counter() - started) * 1000.0,
    }
    json.dump(report, sys.stdout, indent=2, sort_keys=True)
    print()
    print(f"accuracy: {100.0 * acc:.1f}%", file=sys.stderr)
    return EXIT_OK


def _parse_int_list(text: str) -> list[int]:
    if ":" in text:
        lo, hi = text.split(":", 1)
        return list(range(int(lo), int(hi)))
    return [int(tok) for tok in text.split(",") if tok.strip() != ""]


def cmd_sweep(args: argparse.Namespace) -> int:
    qs = _parse_int_list(args.q)
    alphas = [parse_alpha(tok) for tok in args.alpha.split(",") if tok.strip()]
    ms = _parse_int_list(args.m)
    seeds = _parse_int_list(args.seeds)
    if not (qs and alphas and ms and seeds):
        raise UsageError("empty sweep grid")

    loaded = load_csv(args.input, has_label_column=True)
    points, truth = loaded.points, loaded.labels
    k = args.k if args.k is not None else loaded.k

    rows = []
    for q in qs:
        graph = build_knn_graph(points, q, args.mode)
        if len(alphas) > 1:
            graph.enable_angle_cache()
        for alpha in alphas:
            for m in ms:
                for seed in seeds:
                    started = time.perf_counter()
                    record = {
                        "q": q, "alpha": alpha, "M": m, "seed": seed,
                        "accuracy": "", "runtime_ms": "",
                        "F": "", "zero_signatures": "", "error": "",
                    }
                    try:
                        landmarks = select_landmarks(points.n, m, seed)
                        feats = compute_features(
                            graph, landmarks, alpha, use_cache=len(alphas) > 1)
                        groups = group_features(feats)
                        group_labels, trace = linkage_with_trace(groups, k)
                        result = assign_labels(
                            groups, group_labels, points,
                            landmarks=landmarks, merge_trace=trace,
                            expansions=feats.expansions)
                        record["accuracy"] = f"{accuracy(result.labels, truth):.6f}"
                        record["F"] = result.f
                        record["zero_signatures"] = result.zero_signature_count
                    except Exception as exc:  # recorded per row, sweep continues
                        record["error"] = str(exc)
                    record["runtime_ms"] = f"{(time.perf_counter() - started) * 1e3:.3f}"
                    rows.append(record)

    header = ["q", "alpha", "M", "seed", "accuracy", "runtime_ms",
              "F", "zero_signatures", "error"]
    out = args.out or "-"
    lines = [",".join(header)]
    for record in rows:
        lines.append(",".join(str(record[h]) for h in header))
    text = "\n".join(lines) + "\n"
    if out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathclust",
        description="Multi-manifold clustering via angle-constrained landmark paths",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write a synthetic benchmark CSV")
    gen.add_argument("name", help=f"one of {', '.join(benchmark_names())}")
    gen.add_argument("--n", type=int, default=1500)
    gen.add_argument("--noise", type=float, default=None,
                     help="noise bound; default 0.01 * benchmark scale")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", default=None, help="output CSV path")
    gen.set_defaults(func=cmd_generate)

    clu = sub.add_parser("cluster", help="run the clustering pipeline")
    clu.add_argument("--input", default=None, help="points CSV")
    clu.add_argument("--labeled", action="store_true",
                     help="input CSV carries a trailing label column (ignored)")
    clu.add_argument("--benchmark", default=None,
                     help="generate this benchmark instead of reading a file")
    clu.add_argument("--n", type=int, default=None)
    clu.add_argument("--noise", type=float, default=None)
    clu.add_argument("--q", type=int, default=None)
    clu.add_argument("--K", dest="k", type=int, default=None)
    clu.add_argument("--M", dest="m", type=int, default=None)
    clu.add_argument("--alpha", default=None, help="radians, or degrees with `deg`")
    clu.add_argument("--seed", type=int, default=None)
    clu.add_argument("--mode", choices=("union", "mutual"), default=None)
    clu.add_argument("--pca-dims", dest="pca_dims", type=int, default=None)
    clu.add_argument("--outdir", default=None)
    clu.add_argument("--config", default=None, help="JSON config; flags override")
    clu.set_defaults(func=cmd_cluster)

    ev = sub.add_parser("eval", help="permutation-matched accuracy report")
    ev.add_argument("labels", help="predicted labels (index,label or labeled CSV)")
    ev.add_argument("truth", help="ground-truth labels")
    ev.set_defaults(func=cmd_eval)

    sw = sub.add_parser("sweep", help="grid-run the pipeline over parameters")
    sw.add_argument("--input", required=True, help="labeled CSV with ground truth")
    sw.add_argument("--K", dest="k", type=int, default=None)
    sw.add_argument("--q", required=True, help="comma list, e.g. 4,8")
    sw.add_argument("--alpha", required=True, help="comma list, e.g. 120deg,140deg")
    sw.add_argument("--M", dest="m", required=True, help="comma list")
    sw.add_argument("--seeds", required=True, help="comma list or lo:hi range")
    sw.add_argument("--mode", choices=("union", "mutual"), default="union")
    sw.add_argument("--out", default=None, help="output CSV; stdout when omitted")
    sw.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        if args.command == "generate":
            if args.noise is None:
                args.noise = 0.01 * benchmark_info(args.name).scale
            if args.out is None:
                args.out = os.path.join(_default_outdir(), f"{args.name.upper()}.csv")
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except StageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_STAGE
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
