"""Command-line front end.

Exit codes: 0 success, 1 mathematical failure (incomplete family, scan
violation, no curve found), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .curves import search_instances
from .family import FamilyCandidate, brezing_weng, family_from_triple
from .known_families import PRESETS
from .polynomial import Polynomial
from .scanner import (
    DEFAULT_DK_MAX,
    DEFAULT_PMAX,
    DEFAULT_Q_MAX,
    ScanSpec,
    ScanSpecError,
    run_scan,
    theorem1_i_degrees,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

THEOREM_MODES = {"1i": "theorem1_i", "1ii": "theorem1_ii", "2": "theorem2"}


class UsageError(Exception):
    pass


def _poly(text: str) -> Polynomial:
    try:
        return Polynomial.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _int_list(text: str) -> list:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"malformed integer list {text!r}") from exc


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from exc
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--threads", type=_positive, default=None,
                        help="worker processes (default: $FORGE_THREADS or 1)")

    parser = argparse.ArgumentParser(prog="bwfamily", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build-family", parents=[common], help="Brezing-Weng family with r = Phi_l")
    p.add_argument("-k", type=_positive, required=True, help="embedding degree")
    p.add_argument("-D", type=_positive, required=True, help="CM discriminant (squarefree)")
    p.add_argument("-l", type=_positive, required=True, help="cyclotomic index, r = Phi_l")
    p.add_argument("-g", type=int, default=1, help="t - 1 maps to zeta_k^g")
    p.add_argument("--out", type=Path, help="write the family JSON here")

    p = sub.add_parser("verify", parents=[common], help="check the complete-family conditions")
    p.add_argument("--preset", choices=sorted(PRESETS), help="use a published triple")
    p.add_argument("--t", type=_poly, help="comma-separated ascending coefficients")
    p.add_argument("--r", type=_poly)
    p.add_argument("--q", type=_poly)
    p.add_argument("-k", type=_positive)
    p.add_argument("-D", type=_positive)
    p.add_argument("--out", type=Path, help="write the family JSON here")

    p = sub.add_parser("scan", parents=[common], help="exhaustive rho = 1 scans")
    p.add_argument("--theorem", choices=sorted(THEOREM_MODES), required=True)
    p.add_argument("--pmax", type=_positive, default=DEFAULT_PMAX, help="largest p for theorem 1i")
    p.add_argument("--k", dest="k_list", type=_int_list, help="explicit embedding degrees")
    p.add_argument("--p", dest="p_list", type=_int_list, default=[7, 11], help="primes for theorem 1ii")
    p.add_argument("--qmax", type=_positive, default=DEFAULT_Q_MAX, help="largest Q for theorem 1ii")
    p.add_argument("--d", dest="d_list", type=_int_list, help="explicit d values for theorem 2")
    p.add_argument("--dkmax", type=_positive, default=DEFAULT_DK_MAX, help="bound on d*k for theorem 2")
    p.add_argument("-D", dest="fixed_D", type=_positive, help="fix D instead of all admissible")
    p.add_argument("--tsv", type=Path, help="write the per-candidate TSV here")

    p = sub.add_parser("instantiate", parents=[common], help="concrete curves from a family file")
    p.add_argument("family_file", type=Path)
    p.add_argument("--x-from", type=int, default=0)
    p.add_argument("--x-to", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("show", parents=[common], help="print a family file")
    p.add_argument("family_file", type=Path)
    return parser


def _config(args) -> dict:
    cfg = {}
    for key, value in sorted(vars(args).items()):
        if isinstance(value, Polynomial):
            value = value.to_json()
        elif isinstance(value, Path):
            value = str(value)
        cfg[key] = value
    if cfg.get("threads") is None:
        cfg["threads"] = int(os.environ.get("FORGE_THREADS", "1") or 1)
    return cfg


def _emit(args, payload: dict, human_lines: list):
    if args.json:
        print(json.dumps({"config": _config(args), **payload}, indent=2, sort_keys=True))
    else:
        print("# config: " + json.dumps(_config(args), sort_keys=True))
        for line in human_lines:
            print(line)


def _family_lines(fam: FamilyCandidate) -> list:
    lines = [f"family k={fam.k} D={fam.D} l={fam.l} g={fam.g}"]
    for name in ("t", "r", "q", "y", "h"):
        value = getattr(fam, name)
        lines.append(f"  {name}(x) = {value if value is not None else '(none)'}")
    lines.append(f"  rho = {fam.rho}")
    rep = fam.conditions
    if rep is None:
        lines.append("  conditions: not evaluated (q constant)")
        return lines
    marks = [
        ("(i)   r represents primes", rep.condition_i),
        ("(ii)  q represents primes", rep.condition_ii),
        ("(iii) r | q + 1 - t", rep.divisibility_iii),
        ("(iv)  r | Phi_k(t - 1)", rep.divisibility_iv),
        ("(v)   D y^2 = 4q - t^2", rep.cm_equation_v),
    ]
    for label, ok in marks:
        lines.append(f"  {label}: {'pass' if ok else 'FAIL'}")
    if rep.is_complete:
        lines.append(f"complete family, rho = {fam.rho}")
    elif rep.is_sparse_candidate:
        lines.append(f"sparse candidate: (i)-(iv) hold, (v) fails; rho = {fam.rho}")
    else:
        lines.append("not a complete family: " + "; ".join(rep.reasons))
    return lines


def _write_family(path, fam: FamilyCandidate):
    if path is not None:
        path.write_text(json.dumps(fam.to_json(), indent=2, sort_keys=True) + "\n")


def _status(fam: FamilyCandidate) -> str:
    if fam.is_complete:
        return "complete"
    if fam.conditions is not None and fam.conditions.is_sparse_candidate:
        return "sparse"
    return "incomplete"


def cmd_build_family(args) -> int:
    try:
        fam = brezing_weng(args.k, args.D, args.l, args.g)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _write_family(args.out, fam)
    reason = "" if fam.is_complete else "; ".join(fam.conditions.reasons if fam.conditions else ["q(x) is constant"])
    _emit(args, {"family": fam.to_json(), "status": _status(fam), "reason": reason}, _family_lines(fam))
    return EXIT_OK if fam.is_complete else EXIT_FAIL


def cmd_verify(args) -> int:
    if args.preset:
        preset = PRESETS[args.preset]
        t, r, q = args.t or preset["t"], args.r or preset["r"], args.q or preset["q"]
        k, D = args.k or preset["k"], args.D or preset["D"]
    else:
        missing = [n for n in ("t", "r", "q", "k", "D") if getattr(args, n) is None]
        if missing:
            raise UsageError("verify needs --t --r --q -k -D (or --preset); missing: " + ", ".join(missing))
        t, r, q, k, D = args.t, args.r, args.q, args.k, args.D
    try:
        fam = family_from_triple(t, r, q, k, D)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _write_family(args.out, fam)
    _emit(args, {"family": fam.to_json(), "status": _status(fam)}, _family_lines(fam))
    return EXIT_OK if fam.is_complete else EXIT_FAIL


def cmd_scan(args) -> int:
    mode = THEOREM_MODES[args.theorem]
    D_policy = args.fixed_D if args.fixed_D else "all-admissible"
    if mode == "theorem1_i":
        spec = ScanSpec(mode, k_set=tuple(args.k_list or theorem1_i_degrees(args.pmax)), D_policy=D_policy)
    elif mode == "theorem1_ii":
        spec = ScanSpec(mode, p_set=tuple(args.p_list), q_max=args.qmax, D_policy=D_policy)
    else:
        spec = ScanSpec(
            mode,
            k_set=tuple(args.k_list or (3, 4, 6, 8, 9, 12, 16, 18)),
            d_set=tuple(args.d_list) if args.d_list else None,
            dk_max=args.dkmax,
            D_policy=D_policy,
        )
    try:
        report = run_scan(spec, threads=args.threads)
    except (ScanSpecError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    if args.tsv is not None:
        args.tsv.write_text(report.to_tsv())

    lines = [f"scan {mode}: {report.candidates_examined} candidates, violations = {len(report.violations)}"]
    lines.append(f"{'k':>5} {'examined':>9} {'min_rho':>9}")
    for k, entry in report.per_k().items():
        m = entry["min_rho"]
        lines.append(f"{k:>5} {entry['examined']:>9} {str(m) if m is not None else '-':>9}"
                     + (f"  ({entry['note']})" if "note" in entry else ""))
    lines.append("rho histogram:")
    for rho, count in report.rho_histogram.items():
        lines.append(f"  {str(rho):>7}  {count}")
    for item in report.rho_one_excluded:
        lines.append(f"rho = 1 but not complete (k={item['k']} d={item['d']} D={item['D']} g={item['g']}): "
                     + "; ".join(item["reasons"]))
    for cand in report.violations:
        lines.append(f"VIOLATION k={cand.k} D={cand.D} l={cand.l} g={cand.g}")
    _emit(args, {"report": report.to_json()}, lines)
    return EXIT_OK if report.confirmed else EXIT_FAIL


def _load_family(path: Path) -> FamilyCandidate:
    try:
        data = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read family file {path}: {exc}") from exc
    if "family" in data and isinstance(data["family"], dict):
        data = data["family"]
    try:
        return FamilyCandidate.from_json(data)
    except (KeyError, ValueError) as exc:
        raise UsageError(f"malformed family file {path}: {exc}") from exc


def cmd_instantiate(args) -> int:
    fam = _load_family(args.family_file)
    if args.x_to < args.x_from:
        raise UsageError("--x-to must be >= --x-from")
    result = search_instances(fam, args.x_from, args.x_to, seed=args.seed, threads=args.threads)
    lines = [f"{'x0':>8} {'q':>24} {'r':>24} {'t':>14} {'k':>4} {'rho':>8} {'pf':>5}"]
    for inst in result.instances:
        lines.append(f"{inst.x0:>8} {inst.q:>24} {inst.r:>24} {inst.t:>14} {inst.k_verified:>4} "
                     f"{inst.rho_numeric:>8.4f} {str(inst.pairing_friendly):>5}")
    lines.append(f"{len(result.instances)} instances; rejections: "
                 + ", ".join(f"{k}={v}" for k, v in sorted(result.rejections.items())))
    _emit(args, result.to_json(), lines)
    return EXIT_OK if result.instances else EXIT_FAIL


def cmd_show(args) -> int:
    fam = _load_family(args.family_file)
    _emit(args, {"family": fam.to_json(), "status": _status(fam)}, _family_lines(fam))
    return EXIT_OK


COMMANDS = {
    "build-family": cmd_build_family,
    "verify": cmd_verify,
    "scan": cmd_scan,
    "instantiate": cmd_instantiate,
    "show": cmd_show,
}


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())
