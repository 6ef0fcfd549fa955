"""Command-line interface.

Subcommands:
  analyze     full stability report for a weight datum
  verify      randomized / exhaustive consistency suites
  fan-svg     render the weight fan as SVG
  hilbert     graded dimension table
  biquotient  derive weights from a biquotient action, then analyze
  moment      evaluate the moment map at a point from the config

Configs are single JSON documents with integer-array fields "A" (3x2),
"B" (3x2), "C" (2); "wL"/"wR" (3x2) for biquotient mode; "z"/"w"
(3 x [re, im]) for moment mode.  Integers may be given as decimal strings
when they exceed safe double range.

Exit codes: 0 success, 1 internal invariant breach (including failed
verification suites), 2 input error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import NamedTuple

from conestab.cones import Cone2
from conestab.graded import find_invariant_monomial, hilbert_table
from conestab.stability import (
    ALL_PATTERNS,
    SupportPattern,
    WeightDatum,
    classify_by_cone,
    classify_by_one_ps,
    fan_condition,
    fan_condition_membership,
    r0_is_trivial,
    weights_from_biquotient,
)
from conestab.svg import fan_svg
from conestab.verify import VERIFY_SUITES, TrialConfig, moment_map

SUITE_NAMES = ("main-theorem", "star-equivalence", "intcone", "hm-reduction", "r0")


class InputError(Exception):
    """Bad config or arguments; maps to exit code 2."""


class InternalError(Exception):
    """A cross-check the tool guarantees has failed; maps to exit code 1."""


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


# ---------------------------------------------------------------- config


def _to_int(value, name: str) -> int:
    if isinstance(value, bool):
        raise InputError(f"{name}: expected an integer, got a boolean")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value, 10)
        except ValueError:
            raise InputError(f"{name}: {value!r} is not a decimal integer") from None
    raise InputError(f"{name}: expected an integer or decimal string, got {value!r}")


def _to_vec2(value, name: str) -> tuple[int, int]:
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise InputError(f"{name}: expected a pair of integers")
    return (_to_int(value[0], name), _to_int(value[1], name))


def _to_vec2_triple(value, name: str) -> tuple[tuple[int, int], ...]:
    if not isinstance(value, (list, tuple)) or len(value) != 3:
        raise InputError(f"{name}: expected three pairs of integers")
    return tuple(_to_vec2(v, f"{name}[{i}]") for i, v in enumerate(value))


def load_config(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as e:
        raise InputError(f"cannot read config {path}: {e}") from None
    except json.JSONDecodeError as e:
        raise InputError(f"config {path} is not valid JSON: {e}") from None
    if not isinstance(doc, dict):
        raise InputError(f"config {path} must be a JSON object")
    return doc


def datum_from_config(doc: dict, enforce_constraint: bool) -> WeightDatum:
    for key in ("A", "B", "C"):
        if key not in doc:
            raise InputError(f"config is missing required field {key!r}")
    a = _to_vec2_triple(doc["A"], "A")
    b = _to_vec2_triple(doc["B"], "B")
    c = _to_vec2(doc["C"], "C")
    try:
        return WeightDatum(a=a, b=b, c=c, constrained=enforce_constraint)
    except ValueError as e:
        raise InputError(str(e)) from None


def complex3_from_config(doc: dict, key: str) -> tuple[complex, complex, complex]:
    if key not in doc:
        raise InputError(f"config is missing required field {key!r}")
    value = doc[key]
    if not isinstance(value, (list, tuple)) or len(value) != 3:
        raise InputError(f"{key}: expected three [re, im] pairs")
    out = []
    for i, entry in enumerate(value):
        if not isinstance(entry, (list, tuple)) or len(entry) != 2:
            raise InputError(f"{key}[{i}]: expected an [re, im] pair")
        try:
            out.append(complex(float(entry[0]), float(entry[1])))
        except (TypeError, ValueError):
            raise InputError(f"{key}[{i}]: entries must be numbers") from None
    return tuple(out)


# ---------------------------------------------------------------- report


class PatternRow(NamedTuple):
    pattern: SupportPattern
    realizable: bool
    in_m: bool
    class_hm: str
    class_cone: str


@dataclass
class AnalysisReport:
    datum: WeightDatum
    apex: bool
    star: bool
    star_prime: bool
    r0_trivial: bool
    pattern_table: list[PatternRow]
    hilbert: list[int] | None = None

    def as_dict(self) -> dict:
        d = self.datum
        return {
            "datum": {
                "A": [list(v) for v in d.a],
                "B": [list(v) for v in d.b],
                "C": list(d.c),
                "constrained": d.constrained,
            },
            "apex": self.apex,
            "star": self.star,
            "star_prime": self.star_prime,
            "r0_trivial": self.r0_trivial,
            "pattern_table": [
                {
                    "z_support": sorted(row.pattern.z_support),
                    "w_support": sorted(row.pattern.w_support),
                    "realizable": row.realizable,
                    "in_M": row.in_m,
                    "class_hm": row.class_hm,
                    "class_cone": row.class_cone,
                }
                for row in self.pattern_table
            ],
            "hilbert": self.hilbert,
        }


def build_analysis_report(datum: WeightDatum, nmax: int | None = None) -> AnalysisReport:
    """Run both classifiers over all 64 patterns and cross-check everything
    the emitted report promises."""
    star = fan_condition(datum)
    star_prime = fan_condition_membership(datum)
    if star != star_prime:
        raise InternalError(
            f"fan condition forms disagree: interior={star} membership={star_prime} "
            f"for {datum!r}"
        )
    rows = []
    for p in ALL_PATTERNS:
        hm = classify_by_one_ps(datum, p)
        cone = classify_by_cone(datum, p)
        if hm is not cone:
            raise InternalError(
                f"classifiers disagree on pattern {p}: {hm} vs {cone} for {datum!r}"
            )
        rows.append(
            PatternRow(
                pattern=p,
                realizable=p.is_realizable(),
                in_m=p.is_open_pattern(),
                class_hm=str(hm),
                class_cone=str(cone),
            )
        )
    trivial = r0_is_trivial(datum)
    hilbert = None
    if nmax is not None:
        if not trivial:
            witness = find_invariant_monomial(datum)
            raise InputError(
                "graded dimensions are infinite: degree-0 invariants are "
                f"nontrivial, witness {witness}"
            )
        hilbert = hilbert_table(datum, nmax)
    return AnalysisReport(
        datum=datum,
        apex=Cone2(datum.weights()).has_apex(),
        star=star,
        star_prime=star_prime,
        r0_trivial=trivial,
        pattern_table=rows,
        hilbert=hilbert,
    )


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def render_report_text(report: AnalysisReport, extra_lines: list[str] | None = None) -> str:
    d = report.datum
    lines = ["datum:"]
    for i, v in enumerate(d.a, start=1):
        lines.append(f"  A{i} = {v}")
    for j, v in enumerate(d.b, start=1):
        lines.append(f"  B{j} = {v}")
    lines.append(f"  C  = {d.c}")
    lines.append(
        "  constraint A_i + B_i constant: "
        + ("enforced" if d.constrained else "not enforced")
    )
    lines.append(f"apex: {_yesno(report.apex)}")
    lines.append(f"fan condition (interior form): {_yesno(report.star)}")
    lines.append(f"fan condition (membership form): {_yesno(report.star_prime)}")
    lines.append(f"degree-0 invariants trivial: {_yesno(report.r0_trivial)}")
    if extra_lines:
        lines.extend(extra_lines)
    lines.append("pattern table:")
    for row in report.pattern_table:
        lines.append(
            f"  {str(row.pattern):12s} realizable={_yesno(row.realizable):3s} "
            f"in_M={_yesno(row.in_m):3s} hm={row.class_hm:20s} "
            f"cone={row.class_cone}"
        )
    if report.hilbert is not None:
        lines.append(f"graded dimensions 0..{len(report.hilbert) - 1}: {report.hilbert}")
    return "\n".join(lines) + "\n"


def _emit(text: str, out_path: str | None) -> None:
    sys.stdout.write(text)
    if out_path is not None:
        try:
            with open(out_path, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as e:
            raise IOError(f"cannot write {out_path}: {e}") from None


# ---------------------------------------------------------------- commands


def _check_nmax(nmax) -> None:
    if nmax is not None and nmax < 0:
        raise InputError("nmax must be nonnegative")


def cmd_analyze(args) -> int:
    _check_nmax(args.nmax)
    doc = load_config(args.config)
    datum = datum_from_config(doc, enforce_constraint=not args.no_constraint)
    report = build_analysis_report(datum, nmax=args.nmax)
    if args.json:
        _emit(canonical_json(report.as_dict()), args.out)
    else:
        _emit(render_report_text(report), args.out)
    return 0


def cmd_verify(args) -> int:
    cfg = TrialConfig(
        seed=args.seed,
        trials=args.trials,
        coord_bound=args.bound,
        enforce_constraint=not args.no_constraint,
    )
    report = VERIFY_SUITES[args.suite](cfg)
    if args.json:
        sys.stdout.write(canonical_json(report.as_dict()))
    else:
        lines = [
            f"suite: {report.suite}",
            f"seed: {cfg.seed}  trials: {cfg.trials}  bound: {cfg.coord_bound}  "
            f"constraint: {'on' if cfg.enforce_constraint else 'off'}",
            f"checked: {report.checked}  disagreements: {report.disagreements}",
        ]
        for key, value in sorted(report.details.items()):
            lines.append(f"{key}: {value}")
        if report.passed:
            lines.append("PASS")
        else:
            lines.append(f"first failure: {report.first_failure}")
            lines.append("FAIL")
        sys.stdout.write("\n".join(lines) + "\n")
    return 0 if report.passed else 1


def cmd_fan_svg(args) -> int:
    doc = load_config(args.config)
    datum = datum_from_config(doc, enforce_constraint=not args.no_constraint)
    svg = fan_svg(datum, shade=args.shade)
    if args.out is None:
        sys.stdout.write(svg)
    else:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(svg)
        except OSError as e:
            raise IOError(f"cannot write {args.out}: {e}") from None
    return 0


def cmd_hilbert(args) -> int:
    _check_nmax(args.nmax)
    doc = load_config(args.config)
    datum = datum_from_config(doc, enforce_constraint=not args.no_constraint)
    if not r0_is_trivial(datum):
        witness = find_invariant_monomial(datum)
        raise InputError(
            "graded dimensions are infinite: degree-0 invariants are "
            f"nontrivial, witness {witness}"
        )
    dims = hilbert_table(datum, args.nmax)
    if args.json:
        sys.stdout.write(
            canonical_json({"nmax": args.nmax, "dims": dims})
        )
    else:
        lines = ["   n  dim"] + [f"{n:4d}  {dim}" for n, dim in enumerate(dims)]
        sys.stdout.write("\n".join(lines) + "\n")
    return 0


def cmd_biquotient(args) -> int:
    _check_nmax(args.nmax)
    doc = load_config(args.config)
    for key in ("wL", "wR"):
        if key not in doc:
            raise InputError(f"config is missing required field {key!r}")
    w_left = _to_vec2_triple(doc["wL"], "wL")
    w_right = _to_vec2_triple(doc["wR"], "wR")
    try:
        datum = weights_from_biquotient(w_left, w_right)
    except ValueError as e:
        raise InputError(str(e)) from None
    report = build_analysis_report(datum, nmax=args.nmax)
    if args.json:
        payload = report.as_dict()
        payload["biquotient"] = {
            "wL": [list(v) for v in w_left],
            "wR": [list(v) for v in w_right],
            "star_hypothesis": report.star,
        }
        _emit(canonical_json(payload), args.out)
    else:
        extra = [
            f"derived from biquotient weights wL={list(w_left)} wR={list(w_right)}",
            f"fan condition for the derived weights: {_yesno(report.star)}",
        ]
        _emit(render_report_text(report, extra_lines=extra), args.out)
    return 0


def cmd_moment(args) -> int:
    doc = load_config(args.config)
    datum = datum_from_config(doc, enforce_constraint=not args.no_constraint)
    z = complex3_from_config(doc, "z")
    w = complex3_from_config(doc, "w")
    value = moment_map(datum, z, w)
    if args.json:
        sys.stdout.write(
            canonical_json(
                {"phi": [value.phi[0], value.phi[1]], "residual": value.residual}
            )
        )
    else:
        sys.stdout.write(
            f"phi = ({value.phi[0]!r}, {value.phi[1]!r})\n"
            f"residual = {value.residual!r}\n"
        )
    return 0


# ---------------------------------------------------------------- parser


def _add_config_arg(p) -> None:
    p.add_argument("config", help="path to a JSON config")


def _add_common_flags(p) -> None:
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument(
        "--no-constraint",
        action="store_true",
        help="do not require A_i + B_i to be constant",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conestab",
        description="Stability analysis for two-torus actions on the rank-one quadric",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full stability report for a weight datum")
    _add_config_arg(p)
    _add_common_flags(p)
    p.add_argument("--nmax", type=int, default=None, help="also tabulate graded dimensions")
    p.add_argument("--out", default=None, help="also write the report to this file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="run a consistency suite")
    p.add_argument("suite", choices=SUITE_NAMES)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--bound", type=int, default=20, help="coordinate box bound")
    _add_common_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fan-svg", help="render the weight fan as SVG")
    _add_config_arg(p)
    _add_common_flags(p)
    p.add_argument("--shade", action="store_true", help="shade the mixed-pair sectors")
    p.add_argument("--out", default=None, help="output SVG path (default stdout)")
    p.set_defaults(func=cmd_fan_svg)

    p = sub.add_parser("hilbert", help="graded dimension table")
    _add_config_arg(p)
    _add_common_flags(p)
    p.add_argument("--nmax", type=int, default=6, help="largest degree to tabulate")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("biquotient", help="derive weights from a biquotient action")
    _add_config_arg(p)
    _add_common_flags(p)
    p.add_argument("--nmax", type=int, default=None, help="also tabulate graded dimensions")
    p.add_argument("--out", default=None, help="also write the report to this file")
    p.set_defaults(func=cmd_biquotient)

    p = sub.add_parser("moment", help="evaluate the moment map at a config point")
    _add_config_arg(p)
    _add_common_flags(p)
    p.set_defaults(func=cmd_moment)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except InternalError as e:
        print(f"internal error: {e}", file=sys.stderr)
        return 1
    except IOError as e:
        print(f"i/o error: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
