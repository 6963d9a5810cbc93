"""Command-line interface: inspect ideals, run the oracle, sweep and report.

Subcommands:
  gens     minimal generators of I_t(L_n)^s
  power    compositions of s labelling those generators
  betti    brute-force Betti table of I_t(L_n)^s over GF(p)
  reg      closed-form regularity next to the oracle value
  check    linear-quotient / quasi-linearity certificates and witnesses
  formula  closed-form evaluators (reg, betti, pd, gamma)
  verify   full sweep; nonzero exit iff any cell failed
  table    re-emit a stored verification report as csv or json
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from ._version import __version__
from .cache import BettiCache, cached_betti_table
from .errors import PathIdealError
from .formulas import (
    betti_closed_form,
    gamma,
    pd_closed_form,
    reg_power,
)
from .linearity import (
    QuotientCertificate,
    linear_quotients_check,
    quasi_linear_check,
    quasi_linear_witness,
)
from .monomials import MonomialIdeal, format_monomial, ideal_power
from .oracle import FieldSpec
from .path_ideals import PathIdealSpec, path_ideal, power_generators
from .verify import SweepConfig, emit_table, run_sweep, sweep_cells

__all__ = ["main", "build_parser"]

_SWEEP_KEYS = (
    "t_min",
    "t_max",
    "n_min",
    "n_max",
    "s_min",
    "s_max",
    "deep_n_max",
    "chars",
    "power_cap",
    "lattice_cap",
    "augmented_s_max",
    "jobs",
    "cache_dir",
)


def _parse_config_value(raw: str):
    raw = raw.strip()
    if len(raw) >= 2 and raw[0] == raw[-1] and raw[0] in "\"'":
        return raw[1:-1]
    low = raw.lower()
    if low in ("true", "false"):
        return low == "true"
    if "," in raw:
        return tuple(int(part.strip()) for part in raw.split(",") if part.strip())
    try:
        return int(raw)
    except ValueError:
        return raw


def load_config_file(path: str) -> dict:
    """Read key = value lines; # starts a comment, unknown keys are errors."""
    values: dict = {}
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise PathIdealError(f"cannot read config {path}: {exc}") from exc
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, raw = line.partition("=")
        key = key.strip()
        if not sep or not key:
            raise PathIdealError(f"{path}:{lineno}: expected key = value")
        if key not in _SWEEP_KEYS:
            raise PathIdealError(f"{path}:{lineno}: unknown key {key!r}")
        values[key] = _parse_config_value(raw)
    return values


def _common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--char",
        type=int,
        default=None,
        metavar="P",
        help="field characteristic for oracle runs (default 2)",
    )
    parser.add_argument(
        "--cache",
        default=None,
        metavar="DIR",
        help="Betti cache directory (default $PATHIDEAL_CACHE or .pathideal-cache)",
    )
    parser.add_argument(
        "--jobs",
        type=int,
        default=None,
        metavar="W",
        help="parallel workers for sweeps (default 1)",
    )
    parser.add_argument(
        "--json",
        nargs="?",
        const="-",
        default=None,
        metavar="PATH",
        help="emit JSON instead of text; to stdout when no path is given",
    )
    parser.add_argument(
        "--config",
        default=None,
        metavar="FILE",
        help="key = value config file; command-line flags override it",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathideal",
        description="Path-ideal invariants and their brute-force verification.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def cell_args(p, power_default=None):
        p.add_argument("--n", type=int, required=True, help="vertex count")
        p.add_argument("--t", type=int, required=True, help="path length")
        if power_default is not None:
            p.add_argument(
                "--power", "-s", type=int, default=power_default, help="power s"
            )
        else:
            p.add_argument("--power", "-s", type=int, required=True, help="power s")

    p_gens = sub.add_parser("gens", help="minimal generators of I_t(L_n)^s")
    cell_args(p_gens, power_default=1)
    _common_flags(p_gens)
    p_gens.set_defaults(func=_cmd_gens)

    p_power = sub.add_parser(
        "power", help="compositions labelling the power generators"
    )
    cell_args(p_power)
    _common_flags(p_power)
    p_power.set_defaults(func=_cmd_power)

    p_betti = sub.add_parser("betti", help="brute-force Betti table over GF(p)")
    cell_args(p_betti, power_default=1)
    _common_flags(p_betti)
    p_betti.set_defaults(func=_cmd_betti)

    p_reg = sub.add_parser("reg", help="closed-form vs oracle regularity")
    cell_args(p_reg, power_default=1)
    _common_flags(p_reg)
    p_reg.set_defaults(func=_cmd_reg)

    p_check = sub.add_parser(
        "check", help="linear-quotient and quasi-linearity checks"
    )
    cell_args(p_check, power_default=1)
    p_check.add_argument(
        "--mode",
        choices=("quotients", "quasi", "both"),
        default="both",
        help="which check to run",
    )
    _common_flags(p_check)
    p_check.set_defaults(func=_cmd_check)

    p_formula = sub.add_parser("formula", help="closed-form evaluators")
    p_formula.add_argument(
        "which", choices=("reg", "betti", "pd", "gamma"), help="formula to evaluate"
    )
    p_formula.add_argument("--n", type=int, required=True)
    p_formula.add_argument("--t", type=int, required=True)
    p_formula.add_argument("--power", "-s", type=int, default=None)
    p_formula.add_argument("--i", type=int, default=None, help="homological index")
    _common_flags(p_formula)
    p_formula.set_defaults(func=_cmd_formula)

    p_verify = sub.add_parser("verify", help="run the verification sweep")
    p_verify.add_argument("--t-min", dest="t_min", type=int, default=None)
    p_verify.add_argument("--t-max", dest="t_max", type=int, default=None)
    p_verify.add_argument("--n-min", dest="n_min", type=int, default=None)
    p_verify.add_argument("--n-max", dest="n_max", type=int, default=None)
    p_verify.add_argument("--s-min", dest="s_min", type=int, default=None)
    p_verify.add_argument("--s-max", dest="s_max", type=int, default=None)
    p_verify.add_argument(
        "--deep-n-max",
        dest="deep_n_max",
        type=int,
        default=None,
        help="largest n for cells with s >= 3",
    )
    p_verify.add_argument(
        "--augmented-s-max", dest="augmented_s_max", type=int, default=None
    )
    p_verify.add_argument("--power-cap", dest="power_cap", type=int, default=None)
    p_verify.add_argument(
        "--lattice-cap", dest="lattice_cap", type=int, default=None
    )
    p_verify.add_argument(
        "--out", default=None, metavar="PATH", help="write the JSON report here"
    )
    p_verify.add_argument(
        "--csv", default=None, metavar="PATH", help="write the CSV table here"
    )
    _common_flags(p_verify)
    p_verify.set_defaults(func=_cmd_verify)

    p_table = sub.add_parser("table", help="re-emit a stored report")
    p_table.add_argument("--report", required=True, metavar="PATH")
    p_table.add_argument("--format", choices=("csv", "json"), default="csv")
    p_table.add_argument("--out", default=None, metavar="PATH")
    _common_flags(p_table)
    p_table.set_defaults(func=_cmd_table)

    return parser


def _emit_json(obj, dest: str) -> None:
    text = json.dumps(obj, indent=2, sort_keys=True)
    if dest == "-":
        print(text)
    else:
        try:
            Path(dest).write_text(text + "\n", encoding="utf-8")
        except OSError as exc:
            raise PathIdealError(f"cannot write {dest}: {exc}") from exc


def _field(args) -> FieldSpec:
    return FieldSpec(args.char if args.char is not None else 2)


def _build_power(args) -> MonomialIdeal:
    spec = PathIdealSpec(args.n, args.t)
    base = path_ideal(spec)
    if base.is_zero() or args.power == 1:
        return base
    return ideal_power(base, args.power)


def _cmd_gens(args) -> int:
    ideal = _build_power(args)
    if args.json:
        _emit_json(
            {
                "n": args.n,
                "t": args.t,
                "power": args.power,
                "ambient": ideal.ambient,
                "generators": [list(g.exponents) for g in ideal.generators],
            },
            args.json,
        )
        return 0
    if ideal.is_zero():
        print("(0)")
        return 0
    if args.n >= args.t:
        ordered = [m for _, m in power_generators(PathIdealSpec(args.n, args.t), args.power)]
    else:
        ordered = list(ideal.generators)
    for g in ordered:
        print(format_monomial(g))
    return 0


def _cmd_power(args) -> int:
    spec = PathIdealSpec(args.n, args.t)
    if spec.num_generators == 0:
        if args.json:
            _emit_json({"n": args.n, "t": args.t, "power": args.power,
                        "generators": []}, args.json)
        else:
            print("(0)")
        return 0
    pairs = power_generators(spec, args.power)
    if args.json:
        _emit_json(
            {
                "n": args.n,
                "t": args.t,
                "power": args.power,
                "generators": [
                    {"parts": list(c.parts), "monomial": list(m.exponents)}
                    for c, m in pairs
                ],
            },
            args.json,
        )
        return 0
    for c, m in pairs:
        print(f"{c} -> {format_monomial(m)}")
    return 0


def _cmd_betti(args) -> int:
    ideal = _build_power(args)
    fieldspec = _field(args)
    cache = BettiCache(args.cache)
    table = cached_betti_table(ideal, fieldspec, cache)
    if args.json:
        _emit_json(table.to_dict(), args.json)
        return 0
    if table.is_empty():
        print("zero ideal; empty Betti table")
        return 0
    print(table)
    print(f"reg R/I = {table.quotient_regularity()}")
    print(f"pd  R/I = {table.quotient_projective_dimension()}")
    print(f"linear resolution: {'yes' if table.is_linear() else 'no'}")
    return 0


def _cmd_reg(args) -> int:
    formula = reg_power(args.n, args.t, args.power)
    ideal = _build_power(args)
    cache = BettiCache(args.cache)
    table = cached_betti_table(ideal, _field(args), cache)
    oracle = table.quotient_regularity()
    match = formula == oracle
    if args.json:
        _emit_json(
            {
                "n": args.n,
                "t": args.t,
                "power": args.power,
                "char": _field(args).characteristic,
                "formula": formula,
                "oracle": oracle,
                "match": match,
            },
            args.json,
        )
    else:
        print(f"formula reg R/I^{args.power} = {formula}")
        print(f"oracle  reg R/I^{args.power} = {oracle}")
        print(f"match: {'yes' if match else 'NO'}")
    return 0 if match else 1


def _check_quotients(args) -> tuple[dict, bool]:
    spec = PathIdealSpec(args.n, args.t)
    try:
        outcome = linear_quotients_check(spec, args.power)
    except PathIdealError as exc:
        return {"mode": "quotients", "ok": False, "error": str(exc)}, False
    if isinstance(outcome, QuotientCertificate):
        payload = {
            "mode": "quotients",
            "ok": True,
            "order": [list(c.parts) for c in outcome.order],
            "colon_variables": [sorted(v) for v in outcome.colon_variables],
            "census": {str(k): v for k, v in outcome.census().items()},
        }
        return payload, True
    payload = {
        "mode": "quotients",
        "ok": False,
        "position": outcome.position,
        "composition": list(outcome.composition.parts),
        "offender": format_monomial(outcome.offender),
    }
    return payload, False


def _check_quasi(args) -> tuple[dict, bool]:
    ideal = _build_power(args)
    result = quasi_linear_check(ideal)
    payload: dict = {"mode": "quasi", "quasi_linear": result.is_quasi_linear}
    if result.witness is not None:
        payload["witness"] = {
            "generator": format_monomial(result.witness[0]),
            "colon_generator": format_monomial(result.witness[1]),
        }
    if args.n >= 2 * args.t + 1:
        w = quasi_linear_witness(PathIdealSpec(args.n, args.t), args.power)
        payload["break"] = {
            "excluded": format_monomial(w.excluded),
            "colon": [format_monomial(g) for g in w.colon_generators],
            "variable": f"x{w.variable}",
            "facts_ok": w.valid,
        }
    return payload, True


def _cmd_check(args) -> int:
    sections = []
    ok = True
    if args.mode in ("quotients", "both"):
        payload, good = _check_quotients(args)
        sections.append(payload)
        ok = ok and good
    if args.mode in ("quasi", "both"):
        payload, good = _check_quasi(args)
        sections.append(payload)
        ok = ok and good
    if args.json:
        _emit_json(sections if len(sections) > 1 else sections[0], args.json)
        return 0
    for payload in sections:
        if payload["mode"] == "quotients":
            if payload.get("ok"):
                print(f"linear quotients: yes (census {payload['census']})")
            elif "error" in payload:
                print(f"linear quotients: ERROR ({payload['error']})")
            else:
                print(
                    "linear quotients: no "
                    f"(position {payload['position']}, offender {payload['offender']})"
                )
        else:
            verdict = "yes" if payload["quasi_linear"] else "no"
            print(f"quasi-linear: {verdict}")
            if "witness" in payload:
                w = payload["witness"]
                print(
                    f"  witness: colon into {w['generator']} "
                    f"has non-variable generator {w['colon_generator']}"
                )
            if "break" in payload:
                b = payload["break"]
                print(
                    f"  top-generator break: J : {b['excluded']} = "
                    f"({', '.join(b['colon'])}); unique variable {b['variable']}; "
                    f"facts {'hold' if b['facts_ok'] else 'VIOLATED'}"
                )
    return 0


def _cmd_formula(args) -> int:
    which = args.which
    inputs: dict = {"n": args.n, "t": args.t}
    if which == "gamma":
        value = gamma(args.n, args.t)
    elif which == "reg":
        if args.power is None:
            raise PathIdealError("formula reg needs --power")
        value = reg_power(args.n, args.t, args.power)
        inputs["power"] = args.power
    elif which == "pd":
        if args.power is None:
            raise PathIdealError("formula pd needs --power")
        value = pd_closed_form(args.n, args.t, args.power)
        inputs["power"] = args.power
    else:  # betti
        if args.power is None or args.i is None:
            raise PathIdealError("formula betti needs --power and --i")
        value = betti_closed_form(args.n, args.t, args.power, args.i)
        inputs["power"] = args.power
        inputs["i"] = args.i
    if args.json:
        _emit_json({"formula": which, "inputs": inputs, "value": value}, args.json)
    else:
        print(value)
    return 0


def _sweep_config(args) -> SweepConfig:
    values: dict = {}
    if args.config:
        values.update(load_config_file(args.config))
    for key in _SWEEP_KEYS:
        flag = getattr(args, key, None)
        if flag is not None:
            values[key] = flag
    if args.char is not None:
        values["chars"] = (args.char,)
    if args.jobs is not None:
        values["jobs"] = args.jobs
    if args.cache is not None:
        values["cache_dir"] = args.cache
    if "chars" in values and isinstance(values["chars"], int):
        values["chars"] = (values["chars"],)
    if "chars" in values:
        values["chars"] = tuple(values["chars"])
    try:
        return SweepConfig(**values)
    except (TypeError, ValueError) as exc:
        raise PathIdealError(f"bad sweep configuration: {exc}") from exc


def _cmd_verify(args) -> int:
    cfg = _sweep_config(args)
    report = run_sweep(cfg)
    if args.out:
        emit_table(report, "json", args.out)
    if args.csv:
        emit_table(report, "csv", args.csv)
    if args.json:
        text = report.to_json()
        if args.json == "-":
            print(text)
        else:
            Path(args.json).write_text(text + "\n", encoding="utf-8")
    else:
        summary = report.summary
        print(
            f"cells: {len(sweep_cells(cfg))}  rows: {summary['total']}  "
            f"pass: {summary['pass']}  fail: {summary['fail']}  "
            f"skipped: {summary['skipped']}  info: {summary['info']}"
        )
        for row in report.failures():
            print(
                f"FAIL n={row.n} t={row.t} s={row.s} {row.quantity}: "
                f"formula {row.formula!r}, oracle {row.oracle!r}"
                + (f"  [{row.repro}]" if row.repro else "")
            )
    return 1 if report.failures() else 0


def _cmd_table(args) -> int:
    try:
        text = Path(args.report).read_text(encoding="utf-8")
    except OSError as exc:
        raise PathIdealError(f"cannot read report {args.report}: {exc}") from exc
    from .verify import VerificationReport

    report = VerificationReport.from_json(text)
    rendered = emit_table(report, args.format, args.out)
    if args.out is None:
        sys.stdout.write(rendered)
    return 0


def main(argv: list[str] | None = None) -> int:
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8", line_buffering=True)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PathIdealError as exc:
        print(f"pathideal: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"pathideal: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        # downstream reader (e.g. `| head`) closed stdout; detach so the
        # interpreter's shutdown flush cannot raise again
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return 0


if __name__ == "__main__":
    sys.exit(main())
