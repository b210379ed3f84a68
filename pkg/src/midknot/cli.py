"""Command-line interface.

Subcommands: ``fit`` (sample a fitted curve), ``derivs`` (nodal derivative
estimates), ``eoc`` (convergence experiment), ``serve`` (HTTP service).
Exit codes: 0 on success, 1 for invalid input or I/O failures, 2 for usage
errors (including unknown test functions).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import convergence
from .datasets import DataSet, parse_dataset
from .errors import CurveError, InvalidRequest, ParseError, UnknownFunction
from .grid import KnotPlacement, default_placement, placement_from_knots
from .response import DEFAULT_SAMPLES, build_curve_response, dumps


def _read_dataset(path: str) -> DataSet:
    p = Path(path)
    suffix = p.suffix.lower()
    if suffix == ".csv":
        fmt = "csv"
    elif suffix == ".json":
        fmt = "json"
    else:
        raise ParseError(
            f"cannot infer dataset format from {path!r};"
            " use a .csv or .json file"
        )
    return parse_dataset(p.read_bytes(), fmt)


def _read_placement(args, grid) -> KnotPlacement:
    if args.knots:
        doc = json.loads(Path(args.knots).read_text())
        if isinstance(doc, dict):
            doc = doc.get("x")
        if not isinstance(doc, list):
            raise ParseError(
                f"{args.knots}: knots file must hold an array or an object"
                " with an 'x' array"
            )
        return placement_from_knots(grid, doc)
    if args.placement:
        doc = json.loads(Path(args.placement).read_text())
        if not isinstance(doc, dict) or "alpha2" not in doc or "beta" not in doc:
            raise ParseError(
                f"{args.placement}: placement file must hold an object"
                " with 'alpha2' and 'beta'"
            )
        return KnotPlacement(alpha2=doc["alpha2"], beta=doc["beta"])
    return default_placement(grid.N)


def _write_out(out: str, text: str) -> None:
    if out == "-":
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        # exact bytes, no newline normalization: file output is the wire format
        with open(out, "w", newline="") as fh:
            fh.write(text)


def _add_input_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument("--data", required=True, help="dataset file (.csv or .json)")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--knots", help="JSON file with secondary knots x_2..x_N")
    group.add_argument("--placement", help="JSON file with alpha2 and beta")
    p.add_argument("--out", default="-", help="output path, '-' for stdout")


def cmd_fit(args) -> int:
    grid = _read_dataset(args.data).grid()
    placement = _read_placement(args, grid)
    if args.samples < 2:
        raise InvalidRequest(f"samples must be at least 2, got {args.samples}")
    payload = build_curve_response(grid, placement, args.samples)
    if args.format == "json":
        _write_out(args.out, dumps(payload))
    else:
        lines = ["x,S,dS,d2S"]
        lines += [",".join(repr(v) for v in row) for row in payload["samples"]]
        _write_out(args.out, "\n".join(lines) + "\n")
    return 0


def cmd_derivs(args) -> int:
    from .curve import build_curve
    from .estimators import estimate_interior_knots

    grid = _read_dataset(args.data).grid()
    placement = _read_placement(args, grid)
    curve = build_curve(grid, placement)
    estimates = [e.to_dict() for e in estimate_interior_knots(curve)]
    if args.format == "json":
        _write_out(args.out, dumps({"knot_estimates": estimates}))
    else:
        cols = ["i", "tau", "C1", "C2", "f1_est", "f2_est",
                "delta1", "delta2_raw", "h_bar"]
        lines = [",".join(cols)]
        lines += [",".join(repr(e[c]) for c in cols) for e in estimates]
        _write_out(args.out, "\n".join(lines) + "\n")
    return 0


def _parse_j_range(text: str) -> range:
    try:
        lo, hi = text.split(":")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise InvalidRequest(
            f"--j-range must look like '5:9', got {text!r}"
        ) from None
    if hi < lo:
        raise InvalidRequest(f"--j-range is empty: {text!r}")
    return range(lo, hi + 1)


def cmd_eoc(args) -> int:
    fn = convergence.get_function(args.function)
    ratio = 1.0 if args.mode == "uniform" else args.ratio
    rows = convergence.run_experiment(
        fn, mode=args.mode, ratio=ratio, j_range=_parse_j_range(args.j_range)
    )
    if args.format == "table":
        _write_out(args.out, convergence.rows_to_table(rows))
    elif args.format == "csv":
        _write_out(args.out, convergence.rows_to_csv(rows))
    else:
        _write_out(args.out, dumps({
            "function": fn.name,
            "mode": args.mode,
            "ratio": ratio,
            "rows": convergence.rows_to_dicts(rows),
        }))
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    static = args.static
    if static is None:
        probe = Path("frontend") / "dist"
        static = probe if probe.is_dir() else None
    app = create_app(static_dir=static)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="midknot",
        description="Fit local C1 piecewise polynomial curves and estimate"
                    " nodal derivatives.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fit", help="fit a curve and write sampled values")
    _add_input_opts(p)
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES,
                   help="number of sample abscissas (default 201)")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("derivs", help="estimate F' and F'' at interior data sites")
    _add_input_opts(p)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_derivs)

    p = sub.add_parser("eoc", help="run a convergence experiment")
    p.add_argument("--function", default="quartic-sine",
                   help="registered test function name")
    p.add_argument("--mode", choices=("uniform", "ratio"), default="uniform")
    p.add_argument("--ratio", type=float, default=3.0,
                   help="right/left step ratio (ratio mode only)")
    p.add_argument("--j-range", default="5:9",
                   help="inclusive level range lo:hi; H = 2^-j (default 5:9)")
    p.add_argument("--format", choices=("table", "csv", "json"),
                   default="table")
    p.add_argument("--out", default="-", help="output path, '-' for stdout")
    p.set_defaults(func=cmd_eoc)

    p = sub.add_parser("serve", help="run the JSON-over-HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--static", default=None,
                   help="static UI directory (default: ./frontend/dist if present)")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UnknownFunction as exc:
        sys.stderr.write(json.dumps(exc.to_dict()) + "\n")
        return 2
    except CurveError as exc:
        sys.stderr.write(json.dumps(exc.to_dict()) + "\n")
        return 1
    except json.JSONDecodeError as exc:
        err = {"error": "ParseError", "detail": f"invalid JSON: {exc}"}
        sys.stderr.write(json.dumps(err) + "\n")
        return 1
    except OSError as exc:
        err = {"error": "IOError", "detail": str(exc)}
        sys.stderr.write(json.dumps(err) + "\n")
        return 1


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
