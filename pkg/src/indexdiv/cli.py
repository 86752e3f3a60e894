"""Command-line entry point.

Exit codes: 0 success, 1 usage error, 2 invalid input data (bad field file,
non-prime conductor, capacity guard), 3 internal inconsistency (the two
criteria disagree or the discriminant identity fails).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .arith import is_prime
from .criteria import DEFAULT_WITNESS_BOUND, analyze, gbar_table
from .errors import CapacityError, DomainError, IndexDivError, InternalInconsistency, InvalidFieldData
from .fieldfile import (
    FieldFile,
    bundled_field_names,
    load_bundled,
    load_field_file,
    report_to_dict,
    supplementary_to_dict,
)
from .fp_poly import enumerate_irreducibles, format_poly
from .number_field import index_form
from .periods import PeriodFieldSpec, cubic_survey, period_order
from .supplementary import supplementary_report


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _load(path_or_name):
    path = Path(path_or_name)
    if not path.exists():
        name = path_or_name[:-5] if path_or_name.endswith(".json") else path_or_name
        if name in bundled_field_names():
            return load_bundled(name)
    return load_field_file(path)


def _require_prime(p):
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")


def _bool(b):
    return "true" if b else "false"


def _ints(xs):
    return " ".join(str(x) for x in xs) if xs else "-"


def supplementary_lines(s):
    lines = [
        f"membership_ks: {_ints(s.membership_ks)}",
        f"minimal_ks: {_ints(s.minimal_ks)}",
        f"F_p: {s.F_p}",
    ]
    if s.nu is None:
        lines.append("supplementary: rationals")
    else:
        lines.append(f"supplementary: nu={s.nu} mu={s.mu} lambda={s.lam}")
        lines.append(f"supplementary_field: {s.description}")
        lines.append(f"supplementary_poly: {format_poly(s.defining_poly)}")
    v = s.verification
    if v is not None:
        line = f"verification: {v.status} (residue degree {v.residue_degree})"
        if v.point is not None:
            pt = ", ".join(format_poly(c, "t") for c in v.point)
            line += f" at ({pt}) mod {format_poly(v.modulus, 't')}"
        lines.append(line)
    return lines


def report_lines(r):
    lines = [
        f"field: {r.label}",
        f"degree: {r.degree}",
        f"disc: {r.disc}",
        f"prime: {r.p}",
        f"lambda_profile: {_ints(r.lambda_profile)}",
        f"gbar: {_ints(r.gbar_table)}",
        f"verdict_counts: {_bool(r.verdict_counts)}",
        f"verdict_form: {_bool(r.verdict_form)}",
        f"common_index_divisor: {_bool(r.verdict)}",
        f"failing_degrees: {_ints(r.failing_degrees)}",
    ]
    if r.witness is None:
        lines.append("witness: none")
    else:
        coords, idx = r.witness
        lines.append(f"witness: ({', '.join(map(str, coords))}) index {idx}")
        shape = " ".join(f"{d}^{e}" for d, e in r.factor_shape_of_witness)
        lines.append(f"witness_factor_shape: {shape}")
    if r.supplementary is not None:
        lines.extend(supplementary_lines(r.supplementary))
    return lines


def _emit(obj_dict, lines, fmt):
    if fmt == "json":
        print(json.dumps(obj_dict, indent=2))
    else:
        print("\n".join(lines))


def cmd_analyze(args):
    _require_prime(args.prime)
    O = _load(args.field).to_order()
    r = analyze(O, args.prime, args.witness_bound)
    _emit(report_to_dict(r), report_lines(r), args.format)
    return 0


def cmd_supplementary(args):
    _require_prime(args.prime)
    O = _load(args.field).to_order()
    s = supplementary_report(O, args.prime)
    d = {"schema_version": 1, "field": O.label, "p": args.prime, **supplementary_to_dict(s)}
    _emit(d, [f"field: {O.label}", f"prime: {args.prime}", *supplementary_lines(s)], args.format)
    return 0


def cmd_period_field(args):
    spec = PeriodFieldSpec(args.conductor, args.degree)
    O = period_order(spec)
    ff = FieldFile.from_order(O)
    print(f"field: {O.label}")
    print(f"min_poly: {format_poly(ff.min_poly)}")
    print(f"disc: {O.disc}")
    if args.emit:
        ff.dump(args.emit)
        print(f"written: {args.emit}")
    return 0


def cmd_cubic_survey(args):
    survey = cubic_survey(args.max)
    print(" ".join(map(str, survey.members)))
    if args.verbose:
        for row in survey.rows:
            print(
                f"nu={row['nu']} A={row['A']} B={row['B']} parity={_bool(row['parity'])} "
                f"counts={_bool(row['counts'])} form={_bool(row['form'])}"
            )
    if survey.note:
        print(f"note: {survey.note}")
    return 0


def cmd_gbar(args):
    _require_prime(args.prime)
    print(" ".join(map(str, gbar_table(args.prime, args.max_degree))))
    return 0


def cmd_irreducibles(args):
    for f in enumerate_irreducibles(args.prime, args.degree):
        print(f)
    return 0


def cmd_index_form(args):
    O = _load(args.field).to_order()
    print(index_form(O))
    return 0


def build_parser():
    parser = _Parser(prog="indexdiv", description="Common index divisors of number fields.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="decide whether p is a common index divisor")
    p.add_argument("field", help="field file (or the name of a bundled field)")
    p.add_argument("--prime", "-p", type=int, required=True)
    p.add_argument("--witness-bound", type=int, default=DEFAULT_WITNESS_BOUND)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("supplementary", help="smallest period field removing the index divisor")
    p.add_argument("field")
    p.add_argument("--prime", "-p", type=int, required=True)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_supplementary)

    p = sub.add_parser("period-field", help="build a Gaussian-period field")
    p.add_argument("--conductor", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--emit", metavar="PATH", help="write a field file")
    p.set_defaults(func=cmd_period_field)

    p = sub.add_parser("cubic-survey", help="primes nu whose cubic period field has 2 as index divisor")
    p.add_argument("--max", type=int, default=200)
    p.add_argument("--verbose", "-v", action="store_true")
    p.set_defaults(func=cmd_cubic_survey)

    p = sub.add_parser("gbar", help="counts of monic irreducibles per degree")
    p.add_argument("--prime", "-p", type=int, required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.set_defaults(func=cmd_gbar)

    p = sub.add_parser("irreducibles", help="list monic irreducibles of one degree")
    p.add_argument("--prime", "-p", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=cmd_irreducibles)

    p = sub.add_parser("index-form", help="print the index form of a field")
    p.add_argument("field")
    p.set_defaults(func=cmd_index_form)

    p = sub.add_parser("list-bundled", help="names of the bundled field files")
    p.set_defaults(func=lambda args: print("\n".join(bundled_field_names())) or 0)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InternalInconsistency as exc:
        print(f"InternalInconsistency: {exc}", file=sys.stderr)
        return 3
    except (InvalidFieldData, DomainError, CapacityError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except IndexDivError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
