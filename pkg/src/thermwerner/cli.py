"""Command-line front end.

Exit codes: 0 success, 2 usage or validation error, 3 domain error, 4 I/O error.
"""

from __future__ import annotations

import argparse
import sys

from .exceptions import ConvergenceError, DomainError, ValidationError
from .mapping import classify_werner, critical_constants, map_temperature, temperature_of_x
from .states import BellChoice, ModelParams
from .sweep import (
    Axis,
    Spacing,
    SweepSpec,
    emit_csv,
    emit_svg,
    evaluate_point,
    evaluate_werner,
    figure,
    format_value,
    run_sweep,
)

EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_IO = 4

BELL_CHOICES = [b.value for b in BellChoice]


def _add_model(parser, *, field: bool = True, field_required: bool = False):
    parser.add_argument("--j", type=float, default=1.0, help="coupling J_H (default 1)")
    if field:
        parser.add_argument("--b", type=float, default=None if field_required else 0.0, required=field_required,
                            help="magnetic field B")
    parser.add_argument("--kb", type=float, default=1.0, help="Boltzmann constant (default 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thermwerner",
        description="Two-qubit Heisenberg thermal states, Werner states and the x <-> T map.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("point", help="measures of the thermal state at (J, B, T) and of its Werner image")
    _add_model(p)
    p.add_argument("--t", type=float, required=True, help="temperature")
    p.add_argument("--bell", choices=BELL_CHOICES, default="phi+", help="Bell state of the Werner image")
    p.add_argument("--check", action="store_true", help="cross-check concurrence against the analytic formula")

    p = sub.add_parser("werner", help="measures of a Werner state")
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--bell", choices=BELL_CHOICES, default="phi+")

    p = sub.add_parser("map", help="forward map x(T, B), or its inverse with --invert")
    _add_model(p, field_required=True)
    p.add_argument("--t", type=float)
    p.add_argument("--x", type=float)
    p.add_argument("--invert", action="store_true")

    p = sub.add_parser("critical", help="critical temperature and field")
    p.add_argument("--j", type=float, required=True)
    p.add_argument("--kb", type=float, default=1.0)

    p = sub.add_parser("classify", help="regime of a Werner state")
    p.add_argument("--x", type=float, required=True)

    p = sub.add_parser("sweep", help="one-dimensional parameter sweep written as CSV")
    p.add_argument("--axis", choices=[a.value for a in Axis], required=True)
    p.add_argument("--lo", type=float, required=True)
    p.add_argument("--hi", type=float, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--log", action="store_true", help="log-spaced grid")
    _add_model(p)
    p.add_argument("--t", type=float, help="fixed temperature for a field sweep")
    p.add_argument("--bell", choices=BELL_CHOICES, default="phi+")
    p.add_argument("--out", help="CSV destination (default stdout)")
    p.add_argument("--svg", help="also write an SVG line plot here")
    p.add_argument("--x-col", default=None, help="SVG x column")
    p.add_argument("--y-col", default="c_js", help="SVG y column")

    p = sub.add_parser("figure", help="write the data behind one of the five figures")
    p.add_argument("id", type=int, choices=range(1, 6), metavar="{1..5}")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--svg", action="store_true", help="also write SVG plots")
    return parser


def _params(args) -> ModelParams:
    return ModelParams(j_h=args.j, b=getattr(args, "b", 0.0), k_b=args.kb)


def _run(args, out) -> None:
    cmd = args.command
    if cmd == "point":
        p = _params(args)
        rec = evaluate_point(p, args.t, check=args.check)
        image = evaluate_werner(min(max(rec.x_eff, 0.0), 1.0), args.bell)
        emit_csv([rec, image], out)
    elif cmd == "werner":
        emit_csv([evaluate_werner(args.x, args.bell)], out)
    elif cmd == "map":
        p = _params(args)
        if args.invert:
            if args.x is None:
                raise ValidationError("map --invert needs --x")
            print(f"t={format_value(temperature_of_x(p, args.x))}", file=out)
        else:
            if args.t is None:
                raise ValidationError("map needs --t (or --invert --x)")
            res = map_temperature(p, args.t)
            print(f"x={format_value(res.x)}", file=out)
            print(f"in_domain={str(res.in_domain).lower()}", file=out)
    elif cmd == "critical":
        cc = critical_constants(ModelParams(j_h=args.j, k_b=args.kb))
        print(f"t_c={format_value(cc.t_c)}", file=out)
        print(f"b_c={format_value(cc.b_c)}", file=out)
    elif cmd == "classify":
        print(classify_werner(args.x).value, file=out)
    elif cmd == "sweep":
        spec = SweepSpec(
            axis=Axis(args.axis),
            lo=args.lo,
            hi=args.hi,
            n=args.n,
            spacing=Spacing.LOG if args.log else Spacing.LINEAR,
            params=_params(args),
            t=args.t,
            bell=BellChoice(args.bell),
        )
        records = run_sweep(spec)
        if args.svg:
            x_col = args.x_col or {"t": "t", "invt": "inv_t", "b": "b", "x": "x_eff"}[args.axis]
            emit_svg(records, x_col, args.y_col, args.svg)
        emit_csv(records, args.out if args.out else out)
    elif cmd == "figure":
        for path in figure(args.id, args.out, svg=args.svg):
            print(path, file=out)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _run(args, sys.stdout)
    except (DomainError, ConvergenceError) as exc:
        print(f"thermwerner: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValidationError as exc:
        print(f"thermwerner: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"thermwerner: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return 0


if __name__ == "__main__":
    sys.exit(main())
