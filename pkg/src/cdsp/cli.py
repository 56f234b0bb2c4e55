"""Command-line front end: decide, oracle sweeps, measure verification,
shift generation, and the acceptance corpus.

Outputs are deterministic: rationals are serialized as "p/q" strings,
witness orders and summation orders are fixed, and dictionaries are
emitted in construction order, so identical inputs give byte-identical
documents.  Exit codes: 0 tool ran (even if the tested property is
false), 2 a mathematical hypothesis was violated, 3 quadrature budget
exhausted, 1 malformed input or internal error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .corpus import run_corpus
from .deciders import BiDeg21Params, BiDeg22Params
from .errors import (CdspError, NumericalBudgetError, PreconditionError,
                     SchemaError)
from .measures import (sample_weight21_csv, sample_weight22_line_csv,
                       verify_moment_integral)
from .nets import Net2, check_complete_monotone
from .shifts import (MomentPolynomial, RhoSet, dual_moment_net, gamma_from_rho,
                     shift_bundle_json, shift_weights)
from .subnormality import decide_cdsp


@dataclass
class RunConfig:
    subcommand: str
    input: str | None = None
    output: str | None = None
    window: tuple[int, int] = (12, 12)
    max_order: int = 6
    rel_tol: float = 1e-9
    abs_tol: float = 1e-6
    jobs: int = 1
    seed: int = 0
    mode: str = "joint"
    density_csv: str | None = None
    density_samples: int = 50
    density_m: int | None = None
    csv_prefix: str | None = None


def _parse_window(text: str) -> tuple[int, int]:
    try:
        w, h = text.lower().split("x")
        w, h = int(w), int(h)
    except ValueError:
        raise argparse.ArgumentTypeError(f"window must look like 12x12, got {text!r}")
    if w < 1 or h < 1:
        raise argparse.ArgumentTypeError("window sides must be positive")
    return (w, h)


def _load_input(config: RunConfig) -> dict:
    if not config.input:
        raise SchemaError("this subcommand needs --input")
    try:
        with open(config.input, encoding="utf-8") as fh:
            doc = json.load(fh)
    except FileNotFoundError as exc:
        raise SchemaError(f"input file not found: {config.input}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"input is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise SchemaError("top-level JSON value must be an object", "")
    return doc


def _emit(config: RunConfig, doc: dict) -> None:
    text = json.dumps(doc, indent=2) + "\n"
    if config.output:
        Path(config.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _gamma_from_doc(doc: dict) -> MomentPolynomial:
    if "rho" in doc:
        return gamma_from_rho(RhoSet.from_json(doc["rho"], "/rho"))
    if "gamma" in doc:
        return MomentPolynomial.from_json(doc["gamma"], "/gamma")
    raise SchemaError("expected a 'rho' or 'gamma' object", "")


def _run_decide(config: RunConfig) -> int:
    doc = _load_input(config)
    try:
        gamma = _gamma_from_doc(doc)
    except PreconditionError as exc:
        _emit(config, {
            "verdict": "precondition-violated",
            "branch": None,
            "error": str(exc),
            "witness": list(exc.witness) if exc.witness else None,
        })
        return 2
    decision = decide_cdsp(gamma, *config.window)
    _emit(config, decision.to_json())
    return 2 if decision.verdict == "precondition-violated" else 0


def _run_oracle(config: RunConfig) -> int:
    doc = _load_input(config)
    if "width" in doc and "values" in doc:
        net = Net2.from_json(doc, "")
    elif "net" in doc:
        net = Net2.from_json(doc["net"], "/net")
    else:
        try:
            gamma = _gamma_from_doc(doc)
        except PreconditionError as exc:
            sys.stderr.write(f"precondition violated: {exc}\n")
            return 2
        net = dual_moment_net(gamma, *config.window)
    verdict = check_complete_monotone(net, config.max_order, config.mode)
    _emit(config, verdict.to_json())
    return 0


def _measure_family(doc: dict):
    family = doc.get("family")
    params_doc = doc.get("params")
    if family == "bideg21":
        return family, BiDeg21Params.from_json(params_doc, "/params")
    if family == "bideg22-line":
        return family, BiDeg22Params.from_json(params_doc, "/params")
    raise SchemaError("family must be 'bideg21' or 'bideg22-line'", "/family")


def _run_measure(config: RunConfig) -> int:
    doc = _load_input(config)
    family, params = _measure_family(doc)
    points = doc.get("points")
    if not isinstance(points, list) or not points:
        raise SchemaError("expected a nonempty list of [m, n] pairs", "/points")
    checks = []
    for k, pair in enumerate(points):
        try:
            m, n = int(pair[0]), int(pair[1])
        except (TypeError, ValueError, IndexError) as exc:
            raise SchemaError(f"not an [m, n] pair: {pair!r}", f"/points/{k}") from exc
        checks.append(verify_moment_integral(params, m, n, config.abs_tol))
    if config.density_csv:
        if family == "bideg21":
            text = sample_weight21_csv(params, config.density_samples)
        else:
            m = config.density_m if config.density_m is not None else int(points[0][0])
            text = sample_weight22_line_csv(params, m, config.density_samples)
        Path(config.density_csv).write_text(text, encoding="utf-8")
    _emit(config, {
        "family": family,
        "params": params.to_json(),
        "abs_tol": config.abs_tol,
        "checks": [c.to_json() for c in checks],
        "all_passed": all(c.passed for c in checks),
    })
    return 0


def _run_shift(config: RunConfig) -> int:
    doc = _load_input(config)
    try:
        gamma = _gamma_from_doc(doc)
    except PreconditionError as exc:
        sys.stderr.write(f"precondition violated: {exc}\n")
        return 2
    bundle = shift_bundle_json(gamma, *config.window)
    if config.csv_prefix:
        weights = shift_weights(gamma, *config.window)
        for j in (1, 2):
            Path(f"{config.csv_prefix}.w{j}sq.csv").write_text(
                weights.direction_csv(j), encoding="utf-8")
    _emit(config, bundle)
    return 0


def _run_corpus(config: RunConfig) -> int:
    results = run_corpus(config.seed, config.jobs)
    width = max(len(r.name) for r in results)
    for r in results:
        line = (f"criterion {r.index}  {r.name:<{width}}  "
                f"{'PASS' if r.passed else 'FAIL'}  {r.elapsed:7.2f}s / {r.limit:g}s")
        sys.stdout.write(line + "\n")
    if config.output:
        _emit(config, {"criteria": [r.to_json() for r in results],
                       "all_passed": all(r.passed for r in results)})
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cdsp",
        description="Exact Cauchy-dual subnormality decisions, complete-"
                    "monotonicity oracle sweeps, and representing-measure checks.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p: argparse.ArgumentParser, needs_input: bool = True):
        if needs_input:
            p.add_argument("--input", required=True, help="input JSON document")
        p.add_argument("--output", help="output path (default: stdout)")
        p.add_argument("--window", type=_parse_window, default=(12, 12),
                       metavar="WxH", help="grid window (default 12x12)")
        p.add_argument("--max-order", type=int, default=6, metavar="K",
                       help="maximum difference order (default 6)")
        p.add_argument("--rel-tol", type=float, default=1e-9)
        p.add_argument("--abs-tol", type=float, default=1e-6)
        p.add_argument("--jobs", type=int, default=1, metavar="N",
                       help="parallel workers (corpus subcommand)")
        p.add_argument("--seed", type=int, default=0, metavar="S",
                       help="seed for randomized sweeps")

    p = sub.add_parser("decide", help="decide subnormality of the Cauchy dual")
    common(p)

    p = sub.add_parser("oracle", help="run the complete-monotonicity oracle")
    common(p)
    p.add_argument("--mode", choices=("joint", "separate"), default="joint")

    p = sub.add_parser("measure", help="verify densities against reciprocal moments")
    common(p)
    p.add_argument("--density-csv", help="also sample the density to this CSV")
    p.add_argument("--density-samples", type=int, default=50)
    p.add_argument("--density-m", type=int,
                   help="column for line-density sampling (default: first point)")

    p = sub.add_parser("shift", help="emit the shift bundle for a rho set")
    common(p)
    p.add_argument("--csv-prefix", help="also write squared-weight CSV grids")

    p = sub.add_parser("corpus", help="run the acceptance corpus")
    common(p, needs_input=False)
    return parser


_RUNNERS = {
    "decide": _run_decide,
    "oracle": _run_oracle,
    "measure": _run_measure,
    "shift": _run_shift,
    "corpus": _run_corpus,
}


def run(config: RunConfig) -> int:
    try:
        return _RUNNERS[config.subcommand](config)
    except SchemaError as exc:
        sys.stderr.write(f"schema error: {exc}\n")
        return 1
    except NumericalBudgetError as exc:
        sys.stderr.write(
            f"numerical budget exhausted: {exc} "
            f"(best residual {exc.best_residual:g})\n")
        return 3
    except PreconditionError as exc:
        sys.stderr.write(f"precondition violated: {exc}\n")
        return 2
    except CdspError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    config = RunConfig(**{k.replace("-", "_"): v for k, v in vars(args).items()})
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
