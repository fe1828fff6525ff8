"""Command-line front end: ``coptensor {check,coclique,vacuum,bench}``.

Exit codes: 0 copositive / Yes, 1 not copositive / No, 2 undecided,
64 usage error, 65 malformed input data, 66 unreadable input file.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from pathlib import Path

from . import __version__
from .bench import BenchSpec, format_report, run_bench, trial_tensors
from .cones import ConeKind
from .detector import DetectorConfig, Status, Verdict, detect
from .hypergraph import HypergraphError, brute_force_coclique, coclique_upper_bound, load_hypergraph
from .physics import QuarticCouplings, default_rho_grid, vacuum_stability
from .spectral import PowerConfig
from .tensor import TensorError, load_tensor, save_tensor

EX_OK, EX_NO, EX_UNDECIDED = 0, 1, 2
EX_USAGE, EX_DATAERR, EX_NOINPUT = 64, 65, 66

STATUS_CODE = {Status.COPOSITIVE: EX_OK, Status.NOT_COPOSITIVE: EX_NO, Status.UNDECIDED: EX_UNDECIDED}
COUPLINGS = ("l1", "l2", "ls", "l3", "l4", "ls1", "ls2", "ls12")


class UsageError(Exception):
    pass


class DataError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


_PI_EXPR = re.compile(r"^\s*([+-]?)\s*(\d*\.?\d*)\s*\*?\s*pi\s*(?:/\s*(\d+\.?\d*))?\s*$", re.IGNORECASE)


def parse_coupling(text) -> float:
    """Parse a number or a multiple of pi such as ``pi``, ``-pi/4``, ``2pi``, ``3*pi/2``."""
    if isinstance(text, (int, float)):
        return float(text)
    try:
        return float(text)
    except ValueError:
        pass
    mt = _PI_EXPR.match(str(text))
    if not mt:
        raise ValueError(f"cannot parse coupling value {text!r}")
    sign, coef, denom = mt.groups()
    val = (float(coef) if coef else 1.0) * math.pi / (float(denom) if denom else 1.0)
    return -val if sign == "-" else val


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    p.add_argument("--cone", choices=["nn", "zsplit"], default="zsplit")
    p.add_argument("--max-iter", type=int, default=100, help="detector iteration budget")
    p.add_argument("--vertex-tol", type=float, default=0.0)
    p.add_argument("--tol", type=float, default=1e-10, help="power-method tolerance")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--no-timing", action="store_true", help="omit wall-clock fields from reports")
    p.add_argument("--parallel", type=int, default=1, metavar="WORKERS",
                   help="run independent detections in a process pool")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="coptensor", description="Copositivity detection for symmetric tensors.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="decide copositivity of a tensor file")
    p.add_argument("--tensor", required=True, type=Path)
    _common(p)

    p = sub.add_parser("coclique", help="upper-bound the coclique number of a uniform hypergraph")
    p.add_argument("--graph", required=True, type=Path)
    p.add_argument("--brute-force", action="store_true", help="also report the exact coclique number")
    _common(p)

    p = sub.add_parser("vacuum", help="vacuum stability of the Z3 scalar potential")
    for name in COUPLINGS:
        p.add_argument(f"--{name}", type=str)
    p.add_argument("--table", type=Path, help="JSON array of coupling rows")
    p.add_argument("--rho-points", type=int, default=21)
    p.add_argument("--mode", choices=["paper", "monomial"], default="paper")
    _common(p)

    p = sub.add_parser("bench", help="seeded eta*I - B benchmark")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--eta-offset", type=float, required=True)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--dump", type=Path, help="directory to write the generated tensors to")
    _common(p)
    return parser


def _config(args) -> DetectorConfig:
    try:
        return DetectorConfig(
            cone=ConeKind.parse(args.cone),
            max_iterations=args.max_iter,
            power=PowerConfig(tol=args.tol),
            vertex_tol=args.vertex_tol,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _verdict_text(v: Verdict) -> str:
    s = f"{v.status.value}  iterations={v.iterations} simplices={v.stats.simplices} max_depth={v.stats.max_depth}"
    if v.witness is not None:
        s += "  witness=(" + ", ".join(f"{x:.6g}" for x in v.witness) + ")"
    return s


def cmd_check(args) -> int:
    cfg = _config(args)
    A = _load(load_tensor, args.tensor)
    v = detect(A, cfg)
    payload = {"schema": 1, **v.to_dict(timing=not args.no_timing)}
    _emit(args, payload, _verdict_text(v))
    return STATUS_CODE[v.status]


def cmd_coclique(args) -> int:
    cfg = _config(args)
    G = _load(load_hypergraph, args.graph)
    res = coclique_upper_bound(G, cfg, workers=args.parallel)
    payload = {"schema": 1, "n": G.n, "m": G.m, **res.to_dict(timing=not args.no_timing)}
    lines = [f"m={G.m} n={G.n} edges={len(G.edges)}"]
    for k, v in res.per_k:
        lines.append(f"  k={k} lambda={k ** (G.m - 1)}: {_verdict_text(v)}")
    lines.append(f"coclique number <= {res.bound}" + ("" if res.certified else " (trivial, nothing certified)"))
    if args.brute_force:
        omega = brute_force_coclique(G)
        payload["brute_force"] = omega
        lines.append(f"exact coclique number = {omega}")
    _emit(args, payload, "\n".join(lines))
    return EX_OK if res.certified else EX_UNDECIDED


def _couplings_from(values: dict, where: str) -> QuarticCouplings:
    missing = [k for k in COUPLINGS if values.get(k) is None]
    if missing:
        raise DataError(f"{where}: missing coupling(s) {', '.join(missing)}")
    try:
        return QuarticCouplings(**{k: parse_coupling(values[k]) for k in COUPLINGS})
    except ValueError as exc:
        raise DataError(f"{where}: {exc}") from None


def _vacuum_row_text(c: QuarticCouplings, rep) -> str:
    a = rep.analytic
    lam = " ".join(f"{getattr(c, k):7.3f}" for k in COUPLINGS)
    return (
        f"{lam} | {a.h1_sq:6.2f} {a.h2_sq:6.2f} {a.s_sq:6.2f} {a.format_rho():>6} {a.v_min:6.2f}"
        f" | IT={rep.max_iterations:<4d} {rep.result}"
    )


def cmd_vacuum(args) -> int:
    cfg = _config(args)
    if args.rho_points < 1:
        raise UsageError("--rho-points must be >= 1")
    grid = default_rho_grid(args.rho_points)
    timing = not args.no_timing
    header = " ".join(f"{k:>7}" for k in COUPLINGS) + " |   h1^2   h2^2    s^2    rho   Vmin | IT   Result"
    if args.table is not None:
        rows = _load(_read_json, args.table)
        if not isinstance(rows, list):
            raise DataError(f"{args.table}: expected a JSON array of coupling rows")
        reports, lines = [], [header]
        for i, row in enumerate(rows):
            if not isinstance(row, dict):
                raise DataError(f"{args.table}: row {i} is not an object")
            c = _couplings_from(row, f"{args.table}: row {i}")
            rep = vacuum_stability(c, cfg, grid, args.mode, workers=args.parallel)
            out = {"couplings": c.to_dict(), **rep.to_dict(timing)}
            if "expected" in row:
                out["expected"] = row["expected"]
            reports.append(out)
            lines.append(_vacuum_row_text(c, rep))
        _emit(args, {"schema": 1, "rows": reports}, "\n".join(lines))
        return EX_OK
    c = _couplings_from(vars(args), "command line")
    rep = vacuum_stability(c, cfg, grid, args.mode, workers=args.parallel)
    _emit(args, {"schema": 1, "couplings": c.to_dict(), **rep.to_dict(timing)}, header + "\n" + _vacuum_row_text(c, rep))
    return {"Yes": EX_OK, "No": EX_NO}.get(rep.result, EX_UNDECIDED)


def cmd_bench(args) -> int:
    cfg = _config(args)
    try:
        spec = BenchSpec(args.m, args.n, args.eta_offset, args.trials, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.m < 2 or args.n < 2:
        raise UsageError("--m and --n must be >= 2")
    report = run_bench(spec, cfg, timing=not args.no_timing, workers=args.parallel)
    if args.dump is not None:
        args.dump.mkdir(parents=True, exist_ok=True)
        for i, (_, _, A) in enumerate(trial_tensors(spec, cfg.power)):
            save_tensor(A, args.dump / f"trial_{i:03d}.json")
    _emit(args, report, format_report(report))
    return EX_OK


def _read_json(path):
    with open(path) as fh:
        return json.load(fh)


def _load(loader, path):
    try:
        return loader(path)
    except OSError as exc:
        raise FileNotFoundError(f"{path}: {exc.strerror or exc}") from None
    except json.JSONDecodeError as exc:
        raise DataError(f"{path}: invalid JSON ({exc})") from None
    except (TensorError, HypergraphError) as exc:
        raise DataError(f"{path}: {exc}") from None


COMMANDS = {"check": cmd_check, "coclique": cmd_coclique, "vacuum": cmd_vacuum, "bench": cmd_bench}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"coptensor: error: {exc}", file=sys.stderr)
        return EX_USAGE
    except FileNotFoundError as exc:
        print(f"coptensor: cannot read input: {exc}", file=sys.stderr)
        return EX_NOINPUT
    except DataError as exc:
        print(f"coptensor: bad input: {exc}", file=sys.stderr)
        return EX_DATAERR


if __name__ == "__main__":
    sys.exit(main())
