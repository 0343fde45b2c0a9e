"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 numerical convergence failure,
3 a verification suite reported violations.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from . import __version__
from . import gaussian as g
from .errors import ConvergenceError
from .experiments import (
    PROFILE_COLUMNS,
    SCAN_COLUMNS,
    LevelNotAttained,
    ScanGrid,
    contour_trajectory,
    gaussian_fuzz,
    grid_scan,
    identity_suite,
    monogamy_report,
    monotonicity_report,
    nonconverse_demo,
    opposing_segment,
    qubit_fuzz,
    trajectory_profiles,
)
from .qubit import Rank2Params, structure_cases, remote_activation_demo, structure_classify

EXIT_OK, EXIT_USAGE, EXIT_CONVERGENCE, EXIT_VIOLATION = 0, 1, 2, 3
FIX_CHOICES = {"pi": "pi_tangle", "neg_ac": "neg_ac"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def fmt(x) -> str:
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (float, np.floating, int, np.integer)):
        return format(float(x), ".12g")
    return str(x)


def _metadata(argv, seed=None, convention="oufan") -> str:
    cmd = " ".join(["discord-atlas", *argv])
    return f"# discord-atlas {__version__}; command: {cmd}; seed: {fmt(seed) if seed is not None else 'none'}; negativity: {convention}\n"


def write_csv(path, rows, columns, meta: str):
    buf = io.StringIO()
    buf.write(meta)
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([fmt(row[c]) for c in columns])
    if path in (None, "-"):
        sys.stdout.write(buf.getvalue())
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(buf.getvalue())


def _json_default(o):
    if isinstance(o, (np.floating, np.integer)):
        return o.item()
    if isinstance(o, np.bool_):
        return bool(o)
    if isinstance(o, complex):
        return [o.real, o.imag]
    if isinstance(o, np.ndarray):
        return o.tolist()
    raise TypeError(f"cannot serialize {type(o).__name__}")


def emit_json(obj, path=None):
    text = json.dumps(obj, indent=2, sort_keys=True, default=_json_default) + "\n"
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _angle(args, value: float) -> float:
    return float(np.deg2rad(value)) if args.deg else float(value)


def _parse_nu(text: str):
    try:
        parts = [float(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"--nu expects three comma-separated numbers, got {text!r}") from None
    if len(parts) != 3:
        raise UsageError(f"--nu expects three values, got {len(parts)}")
    return parts


# -- subcommands ----------------------------------------------------------------

def cmd_qubit_scan(args, argv):
    rows = grid_scan(ScanGrid(args.q, args.n_alpha, args.n_beta))
    write_csv(args.out, rows, SCAN_COLUMNS, _metadata(argv))
    bad = sum(not r["converged"] for r in rows)
    print(f"scanned {len(rows)} nodes at q={fmt(args.q)}; {bad} with unconverged discord", file=sys.stderr if args.out in (None, "-") else sys.stdout)
    return EXIT_OK


def cmd_qubit_trajectory(args, argv):
    quantity = FIX_CHOICES[args.fix]
    traj = contour_trajectory(quantity, args.level, args.q, args.samples, args.convention)
    profile = trajectory_profiles(traj)
    write_csv(args.out, profile, PROFILE_COLUMNS, _metadata(argv, convention=args.convention))
    lines = [
        f"{quantity} = {fmt(args.level)} at q = {fmt(args.q)}: {len(profile)} points, closed={traj.closed}",
        f"spearman(D_ab, neg_ac) = {fmt(monotonicity_report(profile, 'neg_ac', 'D_ab').spearman)}",
        f"spearman(D_ba, neg_bc) = {fmt(monotonicity_report(profile, 'neg_bc', 'D_ba').spearman)}",
        f"spearman(neg_ac, neg_bc) = {fmt(monogamy_report(profile))}",
        f"longest run with pi_tangle rising while D_ab falls: {opposing_segment(profile, 'pi_tangle', 'D_ab')[1]} points",
    ]
    print("\n".join(lines), file=sys.stderr if args.out in (None, "-") else sys.stdout)
    return EXIT_OK


def cmd_qubit_structure(args, argv):
    p = Rank2Params(args.q, _angle(args, args.alpha), _angle(args, args.beta))
    report = structure_classify(p)
    if args.json:
        emit_json(report.as_dict(), args.out)
        return EXIT_OK
    v = report.values
    print(f"q={fmt(p.q)} alpha={fmt(p.alpha)} beta={fmt(p.beta)}")
    for k, val in report.flags().items():
        pred = "" if report.predicted is None else f"  (closed form: {report.predicted[k]})"
        print(f"  {k:22s} {val}{pred}")
    print(f"  D(A,B) = {fmt(v.discord_ab)}   D(B,A) = {fmt(v.discord_ba)}")
    print(f"  N_AC = {fmt(v.neg_ac)}   N_BC = {fmt(v.neg_bc)}   pi_ABC = {fmt(v.pi_tangle)}")
    print(f"  agreement: {report.agreement}" + (f"   boundary: {', '.join(report.boundary)}" if report.boundary else ""))
    return EXIT_OK


def cmd_qubit_verify(args, argv):
    ident = identity_suite(args.seed, args.identity_samples)
    fuzz = qubit_fuzz(args.seed, args.samples)
    table = {name: structure_classify(p) for name, p in structure_cases().items()}
    result = {
        "identities": ident.as_dict(),
        "necessity_fuzz": fuzz.as_dict(),
        "structure_table": {k: {"agreement": r.agreement, **r.flags()} for k, r in table.items()},
    }
    ok = ident.ok and fuzz.ok and all(r.agreement for r in table.values())
    if args.json:
        emit_json(result, args.out)
    else:
        print(f"identities: {ident.samples} samples, worst residuals {ident.worst}, violations {len(ident.violations)}")
        print(f"necessity fuzz: {fuzz.samples} samples, violations {len(fuzz.violations)}")
        for k, r in table.items():
            print(f"structure {k:10s} agreement={r.agreement}")
    print("PASS" if ok else "FAIL", file=sys.stderr if args.json and args.out in (None, "-") else sys.stdout)
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_gauss_standard_form(args, argv):
    nu = _parse_nu(args.nu)
    problem = g.triple_violation(nu)
    if problem:
        raise UsageError(f"invalid triple {nu}: {problem}")
    cov = g.standard_form_pure(nu)
    pairs = {p: vars(g.pair_report(cov, p)) for p in g.PAIRS}
    vacua = all(r["product"] for r in pairs.values()) and np.allclose(nu, 1.0)
    if args.json:
        emit_json(
            {
                "nu": nu,
                "covariance": cov,
                "symplectic_eigenvalues": g.symplectic_eigenvalues(cov),
                "pairs": pairs,
                "product_of_vacua": bool(vacua),
            },
            args.out,
        )
        return EXIT_OK
    print(f"standard form for nu = ({', '.join(fmt(x) for x in nu)}):")
    for row in cov:
        print("  " + " ".join(f"{fmt(x):>14s}" for x in row))
    print("symplectic eigenvalues: " + ", ".join(fmt(x) for x in g.symplectic_eigenvalues(cov)))
    for p, r in pairs.items():
        state = "product" if r["product"] else ("separable" if r["separable"] else "entangled")
        print(f"  {p}: det gamma = {fmt(r['det_gamma'])}  -> {state}")
    if vacua:
        print("product of vacua")
    return EXIT_OK


def cmd_gauss_verify(args, argv):
    rep = gaussian_fuzz(args.seed, args.samples)
    if args.json:
        emit_json(rep.as_dict(), args.out)
    else:
        print(f"{rep.samples} triples, in-hypothesis (AB separable): {rep.premise_counts['equivalence_ac']}")
        print(f"violations: {len(rep.violations)}")
    print("PASS" if rep.ok else "FAIL", file=sys.stderr if args.json and args.out in (None, "-") else sys.stdout)
    return EXIT_OK if rep.ok else EXIT_VIOLATION


def cmd_activate(args, argv):
    res = remote_activation_demo()
    (_, v0), (_, v1) = res.before, res.after
    if args.json:
        emit_json(
            {"before": res.before[0].as_dict(), "after": res.after[0].as_dict(), "success_probability": res.success_probability},
            args.out,
        )
        return EXIT_OK
    print("GHZ, Bob filters |0>->|0>, |1>->(|0>+|1>)/sqrt2")
    print(f"{'':10s}{'D(A,B)':>16s}{'N_AC':>16s}{'pi_ABC':>16s}")
    for label, v in (("before", v0), ("after", v1)):
        print(f"{label:10s}{fmt(v.discord_ab):>16s}{fmt(v.neg_ac):>16s}{fmt(v.pi_tangle):>16s}")
    return EXIT_OK


def cmd_nonconverse(args, argv):
    rep = nonconverse_demo()
    if args.json:
        emit_json(rep.as_dict(), args.out)
        return EXIT_OK
    print("rho_A x rho_B, both maximally mixed, purified factor by factor")
    for k, v in rep.as_dict().items():
        print(f"  {k:24s} {fmt(v)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="discord-atlas", description="Discord and purified entanglement structure.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    top = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    qubit = top.add_parser("qubit", help="two-qubit rank-2 family").add_subparsers(dest="sub", required=True, parser_class=_Parser)

    p = qubit.add_parser("scan", help="measures over the (alpha, beta) grid")
    p.add_argument("--q", type=float, default=0.5, help="mixing weight (default 0.5)")
    p.add_argument("--n-alpha", type=int, default=16, help="alpha grid size (default 16)")
    p.add_argument("--n-beta", type=int, default=16, help="beta grid size (default 16)")
    p.add_argument("--out", default="-", help="CSV path (default stdout)")
    p.set_defaults(func=cmd_qubit_scan)

    p = qubit.add_parser("trajectory", help="profile along a constant-level contour")
    p.add_argument("--fix", choices=sorted(FIX_CHOICES), required=True, help="quantity held constant")
    p.add_argument("--level", type=float, required=True, help="level of the fixed quantity")
    p.add_argument("--q", type=float, default=0.5, help="mixing weight (default 0.5)")
    p.add_argument("--samples", type=int, default=400, help="trajectory points (default 400)")
    p.add_argument("--convention", choices=["oufan", "half"], default="oufan", help="negativity normalization (default oufan)")
    p.add_argument("--out", default="-", help="CSV path (default stdout)")
    p.set_defaults(func=cmd_qubit_trajectory)

    p = qubit.add_parser("structure", help="entanglement/discord structure of one state")
    p.add_argument("--q", type=float, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--deg", action="store_true", help="angles are in degrees (default radians)")
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.add_argument("--out", default="-", help="JSON path (default stdout)")
    p.set_defaults(func=cmd_qubit_structure)

    p = qubit.add_parser("verify", help="identity, structure-table and necessity suites")
    p.add_argument("--seed", type=int, default=0, help="seed (default 0)")
    p.add_argument("--samples", type=int, default=1000, help="necessity fuzz samples (default 1000)")
    p.add_argument("--identity-samples", type=int, default=200, help="identity samples (default 200)")
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.add_argument("--out", default="-", help="JSON path (default stdout)")
    p.set_defaults(func=cmd_qubit_verify)

    gauss = top.add_parser("gauss", help="pure three-mode Gaussian states").add_subparsers(dest="sub", required=True, parser_class=_Parser)

    p = gauss.add_parser("standard-form", help="standard-form covariance matrix")
    p.add_argument("--nu", required=True, help="local symplectic eigenvalues, e.g. 1,1,1")
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.add_argument("--out", default="-", help="JSON path (default stdout)")
    p.set_defaults(func=cmd_gauss_standard_form)

    p = gauss.add_parser("verify", help="identities and equivalences on random triples")
    p.add_argument("--seed", type=int, default=0, help="seed (default 0)")
    p.add_argument("--samples", type=int, default=1000, help="triples (default 1000)")
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.add_argument("--out", default="-", help="JSON path (default stdout)")
    p.set_defaults(func=cmd_gauss_verify)

    for name, func, text in (
        ("activate", cmd_activate, "remote activation of AC entanglement from GHZ"),
        ("nonconverse", cmd_nonconverse, "uncorrelated state with entangled purification"),
    ):
        p = top.add_parser(name, help=text)
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.add_argument("--out", default="-", help="JSON path (default stdout)")
        p.set_defaults(func=func)
    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args, argv)
    except SystemExit as e:  # --help / --version
        return int(e.code or 0)
    except UsageError as e:
        print(f"discord-atlas: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (LevelNotAttained, ValueError) as e:
        print(f"discord-atlas: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ConvergenceError as e:
        print(f"discord-atlas: convergence failure: {e}", file=sys.stderr)
        return EXIT_CONVERGENCE


if __name__ == "__main__":
    sys.exit(main())
