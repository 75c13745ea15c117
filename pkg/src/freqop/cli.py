"""Command-line front end.

Every command emits machine-readable output (JSON by default, CSV where a
row schema exists) with an embedded metadata block: tool version, the
parsed configuration, and RNG details where sampling is involved. Output
contains no timestamps, so identical invocations produce byte-identical
files. Exit codes: 0 all checks pass, 1 tolerance breach, 2 usage or
scale errors.
"""

from __future__ import annotations

import argparse
import io
import json
import sys

from . import __version__, analysis, analytic, dense, sampler
from .analysis import CSV_COLUMNS, SamplingConfig
from .hilbert import EnsembleSpec, ScaleError, StateVector

EXIT_OK = 0
EXIT_TOLERANCE = 1
EXIT_USAGE = 2

CROSS_CHECK_TOL = 1e-11


def parse_state(text: str) -> StateVector:
    """Parse a state argument: 'two-level:p', 'uniform:d', or a JSON path."""
    if text.startswith("two-level:"):
        return StateVector.two_level(float(text.split(":", 1)[1]))
    if text.startswith("uniform:"):
        return StateVector.uniform(int(text.split(":", 1)[1]))
    with open(text, encoding="utf-8") as f:
        return StateVector.from_json(f.read())


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, (int,)):
        return str(x)
    return f"{x:.17g}"


def _meta(args, extra=None) -> dict:
    config = {
        k: v for k, v in vars(args).items() if k not in ("func", "out") and v is not None
    }
    meta = {"tool": "freqop", "version": __version__, "config": config}
    if extra:
        meta.update(extra)
    return meta


def _emit(args, payload: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(payload)
    else:
        sys.stdout.write(payload)


def _emit_json(args, result: dict, extra_meta=None) -> None:
    doc = {"meta": _meta(args, extra_meta), "result": result}
    _emit(args, json.dumps(doc, indent=2) + "\n")


def _emit_csv(args, header, rows, extra_meta=None) -> None:
    buf = io.StringIO()
    for key, value in _meta(args, extra_meta).items():
        buf.write(f"# {key}={json.dumps(value, sort_keys=True)}\n")
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(_fmt(v) for v in row) + "\n")
    _emit(args, buf.getvalue())


# -- commands ------------------------------------------------------------


def cmd_verify(args) -> int:
    d, n_max = args.dim, args.n_max
    tol_algebra = 1e-13
    tol_routes = 1e-14
    checks = []
    worst = 0.0
    ok = True
    for n in range(1, n_max + 1):
        report = dense.verify_operator_algebra(d, n)
        dev = max(
            report["sum_to_identity"],
            report["max_commutator"],
            report["hermiticity"],
            report["spectrum_membership"],
        )
        entry = {"n": n, **report, "max_deviation": dev}
        if report["dense_matrices"]:
            route_dev = max(
                dense.construction_route_deviation(
                    EnsembleSpec(StateVector.uniform(d), n, j)
                )
                for j in range(d)
            )
            entry["construction_route_deviation"] = route_dev
            if route_dev > tol_routes:
                ok = False
        if dev > tol_algebra or not report["multiplicity_ok"]:
            ok = False
        worst = max(worst, dev)
        checks.append(entry)
    result = {
        "status": "PASS" if ok else "FAIL",
        "max_deviation": worst,
        "checks": checks,
    }
    _emit_json(args, result)
    return EXIT_OK if ok else EXIT_TOLERANCE


def cmd_stats(args) -> int:
    state = parse_state(args.state)
    spec = EnsembleSpec(state, args.n, args.j)
    stats = analytic.statistics(spec)
    result = {
        "expectation": stats.expectation,
        "uncertainty": stats.uncertainty,
        "distance_sq": stats.distance_sq,
        "gram": stats.gram,
    }
    ok = True
    if args.cross_check:
        dense_vals = {
            "expectation": dense.expectation_dense(spec),
            "distance_sq": dense.distance_sq_dense(spec),
            "gram": dense.gram_dense(spec),
        }
        deviation = max(
            abs(dense_vals[k] - result[k]) for k in dense_vals
        )
        result["dense"] = dense_vals
        result["cross_check_deviation"] = deviation
        ok = deviation <= CROSS_CHECK_TOL
        result["cross_check"] = "PASS" if ok else "FAIL"
    _emit_json(args, result)
    return EXIT_OK if ok else EXIT_TOLERANCE


def _parse_n_list(text: str) -> list[int]:
    return [int(tok) for tok in text.split(",") if tok.strip()]


def cmd_converge(args) -> int:
    state = parse_state(args.state)
    sampling = None
    extra = None
    if args.sample:
        sampling = SamplingConfig(trials=args.trials, seed=args.seed)
        extra = {
            "seed": args.seed,
            "rng": sampler.RNG_ALGORITHM,
            "stream_rule": f"master ^ (trial_index * {sampler.STREAM_CONSTANT:#x})",
        }
    sweep = analysis.convergence_sweep(
        state, args.j, _parse_n_list(args.n_list), sampling
    )
    if args.format == "csv":
        rows = [
            (r.n, r.distance_sq, r.uncertainty, r.max_weight,
             r.sampled_mean, r.sampled_variance)
            for r in sweep.rows
        ]
        slope_meta = {"slope": "undefined" if sweep.slope is None else sweep.slope}
        _emit_csv(args, CSV_COLUMNS, rows, {**(extra or {}), **slope_meta})
    else:
        _emit_json(
            args,
            {
                "slope": "undefined" if sweep.slope is None else sweep.slope,
                "rows": [vars(r).copy() for r in sweep.rows],
            },
            extra,
        )
    return EXIT_OK


def cmd_noncollapse(args) -> int:
    state = parse_state(args.state)
    report = analysis.noncollapse_report(state, args.j, _parse_n_list(args.n_list))
    rows = [vars(r).copy() for r in report.rows]
    if args.format == "csv":
        header = ("n", "distance_sq", "max_weight", "off_peak_mass")
        _emit_csv(
            args,
            header,
            [tuple(r[k] for k in header) for r in rows],
            {"verdict": report.verdict},
        )
    else:
        _emit_json(args, {"rows": rows, "verdict": report.verdict})
    return EXIT_OK


def cmd_sample(args) -> int:
    state = parse_state(args.state)
    summary = sampler.run_trials(state, args.n, args.trials, args.seed, args.j)
    result = {
        "trials": summary.trials,
        "mean_frequency": summary.mean_frequency,
        "sample_variance": summary.sample_variance,
        "frequencies": list(summary.frequencies),
    }
    extra = {
        "seed": summary.seed,
        "rng": summary.rng_algorithm,
        "stream_rule": summary.stream_rule,
    }
    if args.format == "csv":
        _emit_csv(
            args,
            ("trial", "frequency"),
            list(enumerate(summary.frequencies)),
            {**extra,
             "mean_frequency": summary.mean_frequency,
             "sample_variance": summary.sample_variance},
        )
    else:
        _emit_json(args, result, extra)
    return EXIT_OK


def cmd_spectrum(args) -> int:
    state = parse_state(args.state)
    sw = analytic.spectral_weights(EnsembleSpec(state, args.n, args.j))
    if args.format == "csv":
        _emit_csv(args, ("k", "weight"), list(enumerate(sw.weights)))
    else:
        _emit_json(
            args,
            {
                "n": sw.n,
                "weights": list(sw.weights),
                "max_weight": sw.max_weight(),
                "argmax": sw.argmax(),
            },
        )
    return EXIT_OK


# -- argument parsing ----------------------------------------------------


def _add_common(p, *, state=True, j=True, fmt=True):
    if state:
        p.add_argument(
            "--state",
            required=True,
            help="state preset 'two-level:p' or 'uniform:d', or a JSON file path",
        )
    if j:
        p.add_argument("--j", type=int, default=0, help="target outcome index")
    if fmt:
        p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", default=None, help="output path (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="freqop",
        description="Frequency operators on N-fold product spaces: "
        "verification, statistics, and sampling.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="dense operator-algebra verification")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    _add_common(p, state=False, j=False, fmt=False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("stats", help="closed-form ensemble statistics")
    _add_common(p, fmt=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--cross-check",
        action="store_true",
        help="also compute the dense-oracle values (small N only)",
    )
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("converge", help="distance-law sweep over ensemble sizes")
    _add_common(p)
    p.add_argument("--n-list", required=True, help="comma-separated increasing N values")
    p.add_argument("--sample", action="store_true")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_converge)

    p = sub.add_parser("noncollapse", help="distance vs spectral spread report")
    _add_common(p)
    p.add_argument("--n-list", required=True)
    p.set_defaults(func=cmd_noncollapse)

    p = sub.add_parser("sample", help="Monte Carlo ensemble measurements")
    _add_common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("spectrum", help="spectral weights of the product state")
    _add_common(p)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_spectrum)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ScaleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
