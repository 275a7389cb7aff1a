"""Command-line front end: build cloners, run sweeps, run the verification suites.

Three subcommands:

    cvcloner clone  --asym --gamma 0.3 --xi 1,0 --format json
    cvcloner sweep  --asym --gamma-range -1 1 41 --format csv
    cvcloner verify --oracle --cutoff 14

Exit codes: 0 success, 1 a physics invariant or verification suite failed,
2 usage error.  JSON output is deterministic (sorted keys, shortest
round-trip floats); CSV carries 10 significant digits.  The default
tolerance is 1e-10, overridable per run with --tolerance or globally with
the CVCLONER_TOLERANCE environment variable.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass

import numpy as np

from .analysis import CloneReport, clone_report
from .circuits import AsymSpec, ClonerSpec, SymSpec, asym_direct, asym_factorized, asym_params, build_cloner
from .fock import TruncationError
from .gaussian import DEFAULT_TOL, check_symplectic
from .verification import oracle_agreement, standard_suites

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class RunConfig:
    command: str
    spec: ClonerSpec | None
    xi: complex
    gamma_range: tuple[float, float, int] | None
    m_range: tuple[int, int] | None
    output_format: str
    output_path: str | None
    tolerance: float                    # resolved gate tolerance for clone/sweep
    tolerance_override: float | None    # explicit override, None = suite defaults
    oracle: bool
    cutoff: int


def _parse_xi(text: str) -> complex:
    try:
        re_part, im_part = text.split(",")
        return complex(float(re_part), float(im_part))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"amplitude must be 're,im', for example '1,0'; got {text!r}"
        ) from None


def _tolerance_override(args: argparse.Namespace,
                        parser: argparse.ArgumentParser) -> float | None:
    if args.tolerance is not None:
        return float(args.tolerance)
    env = os.environ.get("CVCLONER_TOLERANCE")
    if env is None:
        return None
    try:
        return float(env)
    except ValueError:
        parser.error(f"CVCLONER_TOLERANCE must be a float, got {env!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cvcloner",
        description="Gaussian cloning machines for coherent states: simulate, sweep, verify.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_spec_flags(p: argparse.ArgumentParser) -> None:
        family = p.add_mutually_exclusive_group(required=True)
        family.add_argument("--asym", action="store_true",
                            help="asymmetric 1->2 machine (requires --gamma)")
        family.add_argument("--sym", action="store_true",
                            help="symmetric N->M machine (requires --n and --m)")
        p.add_argument("--gamma", type=float, default=None,
                       help="noise-split parameter of the asymmetric machine")
        p.add_argument("--factorized", action="store_true",
                       help="build the asymmetric machine from BS/NOPA/BS instead of the closed form")
        p.add_argument("--n", type=int, default=None, help="number of input copies")
        p.add_argument("--m", type=int, default=None, help="number of output clones")

    def add_io_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("json", "csv"), default="json",
                       dest="output_format", help="report format (default json)")
        p.add_argument("--output", default=None,
                       help="write the report to this file instead of standard output")
        p.add_argument("--tolerance", type=float, default=None,
                       help="override the physics tolerance (default 1e-10 or CVCLONER_TOLERANCE)")

    p_clone = sub.add_parser("clone", help="run one machine and report every clone")
    add_spec_flags(p_clone)
    p_clone.add_argument("--xi", type=_parse_xi, default=complex(1.0, 0.0),
                         help="input coherent amplitude as 're,im' (default 1,0)")
    add_io_flags(p_clone)

    p_sweep = sub.add_parser("sweep", help="tabulate clone figures over gamma or M")
    add_spec_flags(p_sweep)
    p_sweep.add_argument("--gamma-range", nargs=3, metavar=("START", "STOP", "STEPS"),
                         default=None, help="asymmetric sweep: gamma grid")
    p_sweep.add_argument("--m-range", nargs=2, type=int, metavar=("START", "STOP"),
                         default=None, help="symmetric sweep: inclusive M range")
    p_sweep.add_argument("--xi", type=_parse_xi, default=complex(1.0, 0.0),
                         help="input coherent amplitude as 're,im' (default 1,0)")
    add_io_flags(p_sweep)

    p_verify = sub.add_parser("verify", help="run the verification suites")
    p_verify.add_argument("--oracle", action="store_true",
                          help="also run the truncated-Fock oracle cross-check")
    p_verify.add_argument("--cutoff", type=int, default=14,
                          help="largest Fock cutoff for the oracle ladder (default 14)")
    p_verify.add_argument("--tolerance", type=float, default=None,
                          help="override every suite tolerance (diagnostic use)")
    return parser


def _spec_from_args(parser: argparse.ArgumentParser, args: argparse.Namespace,
                    need_gamma: bool, need_m: bool) -> ClonerSpec | None:
    if args.asym:
        if need_gamma and args.gamma is None:
            parser.error("--asym requires --gamma")
        if args.n is not None or args.m is not None:
            parser.error("--n/--m only apply to --sym")
        try:
            return AsymSpec(args.gamma if args.gamma is not None else 0.0,
                            factorized=args.factorized)
        except ValueError as exc:
            parser.error(str(exc))
    if args.gamma is not None:
        parser.error("--gamma only applies to --asym")
    if args.n is None:
        parser.error("--sym requires --n")
    if need_m and args.m is None:
        parser.error("--sym requires --m")
    if need_m:
        try:
            return SymSpec(args.n, args.m)
        except ValueError as exc:
            parser.error(str(exc))
    return None


def _spec_echo(spec: ClonerSpec, xi: complex | None = None) -> dict:
    if isinstance(spec, AsymSpec):
        echo: dict = {"kind": "asym", "gamma": spec.gamma, "factorized": spec.factorized}
    else:
        echo = {"kind": "sym", "n": spec.n, "m": spec.m}
    if xi is not None:
        echo["xi"] = [xi.real, xi.imag]
    return echo


def _clone_rows(reports: list[CloneReport]) -> list[dict]:
    rows = []
    for r in reports:
        rows.append({
            "mode": r.clone_mode.index,
            "name": r.clone_mode.name,
            "n_chaotic": r.n_chaotic,
            "n_chaotic_formula": r.n_chaotic_formula,
            "fidelity": r.fidelity,
            "fidelity_formula": r.fidelity_formula,
            "q_peak": r.q_peak,
            "defect": abs(r.phase_covariance_defect),
        })
    return rows


def _factorization_dev(spec: ClonerSpec) -> float | None:
    if not isinstance(spec, AsymSpec):
        return None
    d, f = asym_direct(spec.gamma), asym_factorized(spec.gamma)
    return float(max(np.abs(d.A - f.A).max(), np.abs(d.B - f.B).max()))


def _physics_violations(reports: list[CloneReport], symplectic_dev: float,
                        tol: float) -> list[str]:
    problems = []
    if symplectic_dev > tol:
        problems.append(f"symplectic deviation {symplectic_dev:.3e} > {tol:.3e}")
    for r in reports:
        if abs(r.fidelity * (r.n_chaotic_state + 1.0) - 1.0) > tol:
            problems.append(f"{r.clone_mode.name}: F*(n+1) != 1 beyond {tol:.3e}")
        if abs(math.pi * r.q_peak - r.fidelity) > tol:
            problems.append(f"{r.clone_mode.name}: pi*Q(xi) != F beyond {tol:.3e}")
        if abs(r.fidelity - r.fidelity_formula) > tol:
            problems.append(
                f"{r.clone_mode.name}: fidelity {r.fidelity!r} vs closed form "
                f"{r.fidelity_formula!r} beyond {tol:.3e}"
            )
        if abs(r.phase_covariance_defect) > tol:
            problems.append(
                f"{r.clone_mode.name}: phase covariance defect "
                f"{abs(r.phase_covariance_defect):.3e} > {tol:.3e}"
            )
    return problems


def _emit(text: str, output_path: str | None) -> None:
    if output_path is None:
        sys.stdout.write(text)
    else:
        with open(output_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _csv_table(header: list[str], rows: list[list[object]]) -> str:
    lines = [",".join(header)]
    for row in rows:
        cells = [f"{v:.10g}" if isinstance(v, float) else str(v) for v in row]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def cmd_clone(config: RunConfig) -> int:
    assert config.spec is not None
    reports = clone_report(config.spec, config.xi)
    machine = build_cloner(config.spec)
    symplectic_dev = check_symplectic(machine.transform).max_dev
    document = {
        "schema_version": SCHEMA_VERSION,
        "spec": _spec_echo(config.spec, config.xi),
        "clones": _clone_rows(reports),
        "diagnostics": {
            "symplectic_dev": symplectic_dev,
            "factorization_dev": _factorization_dev(config.spec),
        },
    }
    if config.output_format == "json":
        _emit(json.dumps(document, sort_keys=True, indent=2) + "\n", config.output_path)
    else:
        header = ["mode", "name", "n_chaotic", "n_chaotic_formula",
                  "fidelity", "fidelity_formula", "q_peak", "defect"]
        rows = [[c[k] for k in header] for c in document["clones"]]
        _emit(_csv_table(header, rows), config.output_path)
    problems = _physics_violations(reports, symplectic_dev, config.tolerance)
    for p in problems:
        print(f"invariant violation: {p}", file=sys.stderr)
    return 1 if problems else 0


def _sweep_rows_asym(config: RunConfig) -> tuple[list[str], list[list[object]], list[str]]:
    start, stop, steps = config.gamma_range  # type: ignore[misc]
    header = ["gamma", "u", "v", "w", "n_chaotic_1", "n_chaotic_2",
              "fidelity_1", "fidelity_2", "noise_product"]
    rows: list[list[object]] = []
    problems: list[str] = []
    factorized = isinstance(config.spec, AsymSpec) and config.spec.factorized
    for g in np.linspace(start, stop, steps):
        spec = AsymSpec(float(g), factorized=factorized)
        reports = clone_report(spec, config.xi)
        params = asym_params(float(g))
        dev = check_symplectic(build_cloner(spec).transform).max_dev
        problems += [f"gamma={g}: {p}"
                     for p in _physics_violations(reports, dev, config.tolerance)]
        r1, r2 = reports
        rows.append([float(g), params.u, params.v, params.w,
                     r1.n_chaotic, r2.n_chaotic, r1.fidelity, r2.fidelity,
                     r1.n_chaotic * r2.n_chaotic])
    return header, rows, problems


def _sweep_rows_sym(config: RunConfig, n: int) -> tuple[list[str], list[list[object]], list[str]]:
    m_lo, m_hi = config.m_range  # type: ignore[misc]
    header = ["n", "m", "n_chaotic", "fidelity"]
    rows: list[list[object]] = []
    problems: list[str] = []
    for m in range(m_lo, m_hi + 1):
        spec = SymSpec(n, m)
        reports = clone_report(spec, config.xi)
        dev = check_symplectic(build_cloner(spec).transform).max_dev
        problems += [f"m={m}: {p}"
                     for p in _physics_violations(reports, dev, config.tolerance)]
        rows.append([n, m, reports[0].n_chaotic, reports[0].fidelity])
    return header, rows, problems


def cmd_sweep(config: RunConfig) -> int:
    if config.gamma_range is not None:
        header, rows, problems = _sweep_rows_asym(config)
        echo: dict = {"kind": "asym_sweep",
                      "gamma_range": list(config.gamma_range),
                      "xi": [config.xi.real, config.xi.imag]}
    else:
        n = config.spec.n if isinstance(config.spec, SymSpec) else 1
        header, rows, problems = _sweep_rows_sym(config, n)
        echo = {"kind": "sym_sweep", "n": n, "m_range": list(config.m_range or ()),
                "xi": [config.xi.real, config.xi.imag]}
    if config.output_format == "json":
        document = {
            "schema_version": SCHEMA_VERSION,
            "spec": echo,
            "rows": [dict(zip(header, row, strict=True)) for row in rows],
        }
        _emit(json.dumps(document, sort_keys=True, indent=2) + "\n", config.output_path)
    else:
        _emit(_csv_table(header, rows), config.output_path)
    for p in problems:
        print(f"invariant violation: {p}", file=sys.stderr)
    return 1 if problems else 0


def _oracle_ladder(top: int) -> tuple[int, ...]:
    # step down from the requested cutoff in 2s, but not below 10
    rungs = []
    c = top
    while c >= 10 and len(rungs) < 3:
        rungs.append(c)
        c -= 2
    return tuple(reversed(rungs)) or (top,)


def cmd_verify(config: RunConfig) -> int:
    tol = config.tolerance_override
    results = standard_suites(tol)
    if config.oracle:
        results.append(oracle_agreement(tol, cutoffs=_oracle_ladder(config.cutoff)))
    width = max(len(r.name) for r in results)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        line = f"{r.name:<{width}}  max_dev={r.max_dev:.3e}  tol={r.tolerance:.1e}  {status}"
        if r.details:
            extras = ", ".join(f"{k}={v:.3e}" for k, v in r.details.items())
            line += f"  [{extras}]"
        print(line)
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} suites passed")
    return 1 if failed else 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    override = _tolerance_override(args, parser)
    tolerance = override if override is not None else DEFAULT_TOL

    if args.command == "verify":
        config = RunConfig(command="verify", spec=None, xi=0j, gamma_range=None,
                           m_range=None, output_format="json", output_path=None,
                           tolerance=tolerance, tolerance_override=override,
                           oracle=args.oracle, cutoff=args.cutoff)
        return cmd_verify(config)

    if args.command == "sweep":
        gamma_range = None
        m_range = None
        spec = _spec_from_args(parser, args, need_gamma=False, need_m=False)
        if args.asym:
            if args.gamma_range is None:
                parser.error("--asym sweep requires --gamma-range START STOP STEPS")
            try:
                start, stop = float(args.gamma_range[0]), float(args.gamma_range[1])
                steps = int(args.gamma_range[2])
            except ValueError:
                parser.error("--gamma-range takes two floats and an integer step count")
            if steps < 1:
                parser.error("--gamma-range needs at least one step")
            if stop < start:
                parser.error("--gamma-range needs STOP >= START")
            gamma_range = (start, stop, steps)
        else:
            if args.m_range is None:
                parser.error("--sym sweep requires --m-range START STOP")
            m_lo, m_hi = args.m_range
            if m_lo < args.n:
                parser.error(f"--m-range START must be >= n ({args.n})")
            if m_hi < m_lo:
                parser.error("--m-range needs STOP >= START")
            m_range = (m_lo, m_hi)
            spec = SymSpec(args.n, m_lo)
        config = RunConfig(command="sweep", spec=spec, xi=args.xi,
                           gamma_range=gamma_range, m_range=m_range,
                           output_format=args.output_format, output_path=args.output,
                           tolerance=tolerance, tolerance_override=override,
                           oracle=False, cutoff=0)
        try:
            return cmd_sweep(config)
        except (ValueError, TruncationError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1

    spec = _spec_from_args(parser, args, need_gamma=True, need_m=True)
    config = RunConfig(command="clone", spec=spec, xi=args.xi, gamma_range=None,
                       m_range=None, output_format=args.output_format,
                       output_path=args.output, tolerance=tolerance,
                       tolerance_override=override, oracle=False, cutoff=0)
    try:
        return cmd_clone(config)
    except (ValueError, TruncationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
