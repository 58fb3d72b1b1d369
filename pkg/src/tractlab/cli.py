"""
Command-line entry point.

    tractlab vowels   --model generic
    tractlab space    --model fant
    tractlab mc       --model drm --condition C1 --n 5000 --seed 42
    tractlab analyze  out/mc_drm_C1.csv out/mc_drm_C2.csv
    tractlab spectrum --model drm --rho 1 --theta 3.14159

Every command accepts ``--config``, ``--out`` and ``--seed`` and writes a
``<stem>.manifest.json`` next to its outputs. The output directory defaults
to ``$TRACTLAB_OUT`` or ``./tractlab_out``.

Exit codes: 0 success, 2 usage, 3 input data, 4 numeric failure.
"""

import argparse
import json
import os
import sys
import time
from pathlib import Path

from . import __version__
from .acoustics import find_formants, formants, frequency_grid, transfer_spectrum
from .analysis import CALIBRATED_THRESHOLDS, functional_check
from .datasets import (load_config, model_options, read_dataset_csv, write_area_csv,
                       write_dataset_csv, write_spectrum_csv)
from .errors import (DatasetParseError, DegenerateHullError, FormantExtractionError,
                     InvalidConfigError, InvalidInputError, InvalidParamsError)
from .experiments import RNG_ALGORITHM, ExperimentConfig, run_condition
from .mixing import CyclePoint
from .models import MODEL_NAMES

EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_NUMERIC = 4

ASCII_LABELS = {"ɨ": "barred_i", "ɔ": "open_o", "ɛ": "open_e"}


class _Run:
    """Collects outputs and writes the manifest for one command."""

    def __init__(self, args, config):
        self.args = args
        self.config = config
        self.out = Path(args.out or os.environ.get("TRACTLAB_OUT") or "tractlab_out")
        self.out.mkdir(parents=True, exist_ok=True)
        self.files = []
        self.start = time.perf_counter()

    def path(self, name):
        p = self.out / name
        self.files.append(str(p))
        return p

    def finish(self, stem, extra=None):
        echo = {k: v for k, v in vars(self.args).items() if k != "func"}
        manifest = {
            "command": self.args.command,
            "arguments": echo,
            "config": self.config,
            "tool_version": __version__,
            "rng_seed": self.args.seed,
            "rng_algorithm": RNG_ALGORITHM,
            "outputs": list(self.files),
            "duration_s": time.perf_counter() - self.start,
        }
        if extra:
            manifest.update(extra)
        path = self.out / f"{stem}.manifest.json"
        path.write_text(json.dumps(manifest, indent=2, sort_keys=True, default=str) + "\n")
        return path


def _grid(config):
    return frequency_grid(**config.get("grid", {})) if "grid" in config else None


def _experiment(args, config, condition, sample_count=0):
    opts = model_options(config, args.model)
    return ExperimentConfig(model=args.model, condition=condition, sample_count=sample_count,
                            rng_seed=args.seed, theta_grid_size=args.theta_grid,
                            model_options=opts)


def _header(cfg, model, neutral):
    return {
        "tool": f"tractlab {__version__}",
        "model": model.describe(),
        "condition": cfg.condition,
        "sample_count": cfg.sample_count,
        "theta_grid_size": cfg.theta_grid_size,
        "seed": cfg.rng_seed,
        "rng": RNG_ALGORITHM,
        "neutral_hz": [neutral.f1, neutral.f2],
    }


def cmd_vowels(args, config):
    from .generic_model import VOWELS, fourier_amplitudes
    from .plotting import vowel_figure

    run = _Run(args, config)
    cfg = _experiment(args, config, "vowel_sweep")
    model = cfg.build_model()
    grid = _grid(config)
    neutral = formants(model.neutral_area(), model.constants, grid)
    records = run_condition(cfg, grid=grid, model=model, neutral=neutral)
    areas = [model.area_function(r.params) for r in records]
    for n, (rec, area) in enumerate(zip(records, areas), start=1):
        name = ASCII_LABELS.get(rec.label, rec.label)
        write_area_csv(run.path(f"vowel_{args.model}_{n}_{name}.csv"), area)
    write_dataset_csv(run.path(f"vowels_{args.model}.csv"), records, _header(cfg, model, neutral))
    coefficients = None
    if args.model == "generic":
        coefficients = {}
        for label, theta in VOWELS:
            pair = fourier_amplitudes(CyclePoint(1.0, theta))
            coefficients[label] = (round(pair.a1, 12), round(pair.a2, 12))
    vowel_figure(run.path(f"vowels_{args.model}.svg"), args.model, records, areas, coefficients)
    run.finish(f"vowels_{args.model}")
    for r in records:
        print(f"[{r.label}]  f1={r.f1:8.1f}  f2={r.f2:8.1f}")
    return 0


def cmd_space(args, config):
    from .plotting import space_figure

    run = _Run(args, config)
    cfg = _experiment(args, config, "ring_sweep")
    model = cfg.build_model()
    grid = _grid(config)
    neutral = formants(model.neutral_area(), model.constants, grid)
    ring = run_condition(cfg, grid=grid, model=model, neutral=neutral)
    write_dataset_csv(run.path(f"space_{args.model}.csv"), ring, _header(cfg, model, neutral))
    space_figure(run.path(f"space_{args.model}.svg"), args.model, ring, neutral=neutral,
                 references=args.model in ("generic", "drm"))
    run.finish(f"space_{args.model}")
    return 0


def cmd_mc(args, config):
    from .plotting import space_figure

    run = _Run(args, config)
    cfg = _experiment(args, config, args.condition, args.n)
    model = cfg.build_model()
    grid = _grid(config)
    neutral = formants(model.neutral_area(), model.constants, grid)
    records = run_condition(cfg, workers=args.workers, grid=grid, model=model, neutral=neutral)
    stem = f"mc_{args.model}_{args.condition}"
    write_dataset_csv(run.path(f"{stem}.csv"), records, _header(cfg, model, neutral))
    if args.condition == "C2":
        ring = records[:cfg.theta_grid_size]
        interior, c1 = records[cfg.theta_grid_size:], []
    else:
        ring_cfg = _experiment(args, config, "ring_sweep")
        ring = run_condition(ring_cfg, grid=grid, model=model, neutral=neutral)
        interior, c1 = [], records
    space_figure(run.path(f"{stem}.svg"), args.model, ring, interior, c1, neutral,
                 references=args.model in ("generic", "drm"))
    failed = sum(r.failed for r in records)
    run.finish(stem, {"failed_records": failed})
    print(f"{len(records)} records, {failed} failed extractions -> {run.out / (stem + '.csv')}")
    return 0


def cmd_analyze(args, config):
    from .plotting import deviation_figures

    run = _Run(args, config)
    datasets = {}
    reports = {}
    for path in args.datasets:
        header, records = read_dataset_csv(path)
        info = header.get("model")
        model = info.get("model") if isinstance(info, dict) else None
        threshold = args.threshold
        if threshold is None:
            threshold = CALIBRATED_THRESHOLDS.get(model, CALIBRATED_THRESHOLDS["drm"])
        name = Path(path).stem
        report = functional_check(records, args.bin_width, threshold)
        out = run.path(f"report_{name}.json")
        out.write_text(report.to_json(indent=2) + "\n")
        datasets[name] = records
        reports[name] = report
        print(f"{name}: p95 spread {report.spread_p95:.4f} (threshold {threshold}) "
              f"functional={report.functional}")
    stem = "analysis_" + "_".join(datasets)
    deviation_figures(run.path(f"{stem}_df1.svg"), run.path(f"{stem}_df2.svg"), datasets)
    run.finish(stem, {"functional": {k: r.functional for k, r in reports.items()}})
    return 0


def cmd_spectrum(args, config):
    from .plotting import spectrum_figure

    run = _Run(args, config)
    from .models import get_model

    model = get_model(args.model, **model_options(config, args.model))
    point = CyclePoint(args.rho, args.theta)
    params = model.params_at(point)
    area = model.area_function(params)
    spec = transfer_spectrum(area, _grid(config), model.constants)
    found = find_formants(spec)
    fine = formants(area, model.constants, _grid(config))
    stem = f"spectrum_{args.model}"
    write_spectrum_csv(run.path(f"{stem}.csv"), spec)
    write_area_csv(run.path(f"{stem}_area.csv"), area)
    spectrum_figure(run.path(f"{stem}.svg"), spec, fine,
                    title=f"{args.model} rho={point.rho:g} theta={point.theta:.4f}")
    run.finish(stem, {"formants_grid_hz": [found.f1, found.f2],
                      "formants_hz": [fine.f1, fine.f2]})
    print(f"f1={fine.f1:.2f} Hz  f2={fine.f2:.2f} Hz")
    return 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON config document")
    common.add_argument("--out", help="output directory (default $TRACTLAB_OUT or ./tractlab_out)")
    common.add_argument("--seed", type=int, default=0, help="RNG seed (unsigned 64-bit)")

    parser = argparse.ArgumentParser(prog="tractlab", description=__doc__.split("\n\n")[0].strip())
    parser.add_argument("--version", action="version", version=f"tractlab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def model_arg(p, default="generic"):
        p.add_argument("--model", choices=MODEL_NAMES, default=default)
        p.add_argument("--theta-grid", type=int, default=96, dest="theta_grid")

    p = sub.add_parser("vowels", parents=[common], help="the 8 vowels: area functions and chart")
    model_arg(p)
    p.set_defaults(func=cmd_vowels)

    p = sub.add_parser("space", parents=[common], help="vowel-space ring at rho = 1")
    model_arg(p)
    p.set_defaults(func=cmd_space)

    p = sub.add_parser("mc", parents=[common], help="Monte Carlo run in condition C1 or C2")
    model_arg(p, default="drm")
    p.add_argument("--condition", choices=("C1", "C2"), default="C2")
    p.add_argument("--n", type=int, default=5000, help="random draws")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_mc)

    p = sub.add_parser("analyze", parents=[common], help="functional check of datasets")
    p.add_argument("datasets", nargs="+")
    p.add_argument("--bin-width", type=float, default=0.05, dest="bin_width")
    p.add_argument("--threshold", type=float, default=None,
                   help="spread threshold (default: calibrated value for the dataset's model)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("spectrum", parents=[common], help="transfer function of one configuration")
    model_arg(p)
    p.add_argument("--rho", type=float, default=1.0)
    p.add_argument("--theta", type=float, default=0.0)
    p.set_defaults(func=cmd_spectrum)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.seed < 0 or args.seed >= 2**64:
        parser.error("--seed must be an unsigned 64-bit integer")
    if getattr(args, "n", 0) < 0:
        parser.error("--n must be >= 0")
    try:
        config = load_config(args.config) if args.config else {}
        return args.func(args, config)
    except (FileNotFoundError, IsADirectoryError, PermissionError) as exc:
        print(f"error: {exc.strerror}: {exc.filename}", file=sys.stderr)
        return EXIT_INPUT
    except (DatasetParseError, InvalidConfigError, InvalidInputError, InvalidParamsError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (FormantExtractionError, DegenerateHullError) as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
