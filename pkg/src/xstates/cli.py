"""Command-line front end.

Every command writes one table to stdout, as CSV (default) or JSON.
Floats are printed with 17 significant digits so values round-trip
exactly; unphysical grid nodes are ``nan`` in CSV and ``null`` in JSON.

Exit codes: 0 success, 1 usage error, 2 invalid or unphysical state,
3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Sequence

import numpy as np

from . import geometry, verification
from .channels import Channel
from .dynamics import trajectory
from .measures import coherence, discord, discord_region, entanglement
from .relations import relation_D_of_C, relation_E_of_C, verify_relations
from .state import CorrelationVector, DomainError, XStateParams, is_physical

EXIT_USAGE, EXIT_STATE, EXIT_VERIFY = 1, 2, 3

EPILOG = """\
figure data (one invocation each):
  E vs C, bit flip             xstates relate --state -0.3,0.6,0.4 --channel bf --which EC
  D vs C, bit flip             xstates relate --state -0.3,0.6,0.4 --channel bf --which DC
  E vs C, phase damping        xstates relate --state -0.7,0.5,0.3 --channel pd --which EC
  D vs C, phase damping        xstates relate --state -0.7,0.5,0.3 --channel pd --which DC
  E vs C, depolarizing         xstates relate --state -0.7,0.5,0.3 --channel dep --which EC
  D vs C, depolarizing         xstates relate --state -0.7,0.5,0.3 --channel dep --which DC
  deformed tetrahedron         xstates geometry exist --s 0.3 --c 0.2 --n 41   (also --s 0.5 --c 0.7)
  deformed octahedron          xstates geometry separable --s 0.3 --c 0.2 --n 41   (also --s 0.5 --c 0.7)
  discord regions at s=0.2     xstates geometry regions --s 0.2 --c 0 --n 41
  E over the s-c plane         xstates geometry scmap --r -0.9,-0.08,0 --measure E --n 201
                               (r2 = -0.04, 0, 0.04 for the other panels)
  D over the s-c plane         xstates geometry scmap --r -0.9,-0.08,0 --measure D --n 201
  region paths, phase damping  xstates sweep --state -0.6,0.4,0.3 --s 0.2 --c 0.3 --channel pd --steps 1001
                               (also 0.5,-0.2,0.3 and -0.6,0.4,0.7 with the same s, c)

exit codes: 0 success, 1 usage error, 2 invalid or unphysical state, 3 verification failure
"""


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# Formatting


def _cell(value):
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        v = float(value)
        if math.isnan(v):
            return "nan"
        if math.isinf(v):
            return "inf" if v > 0 else "-inf"
        return format(v, ".17g")
    return str(value)


def _json_cell(value):
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        v = float(value)
        return format(v, ".17g") if math.isfinite(v) else "null"
    return json.dumps(str(value), ensure_ascii=False)


def render(schema: str, columns: Sequence[str], rows, fmt: str) -> str:
    rows = list(rows)
    if fmt == "json":
        body = ",\n".join("    [" + ", ".join(_json_cell(v) for v in row) + "]" for row in rows)
        cols = ", ".join(json.dumps(c) for c in columns)
        inner = f"\n{body}\n  " if rows else ""
        return f'{{\n  "schema": {json.dumps(schema)},\n  "columns": [{cols}],\n  "rows": [{inner}]\n}}\n'
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(v) for v in row])
    return buf.getvalue()


# Argument parsing


def _floats(text: str, count: int, what: str) -> list[float]:
    try:
        vals = [float(v) for v in text.split(",")]
    except ValueError:
        raise UsageError(f"{what} must be {count} comma-separated numbers, got {text!r}") from None
    if len(vals) != count:
        raise UsageError(f"{what} must be {count} comma-separated numbers, got {text!r}")
    return vals


def _state(args) -> XStateParams:
    r = _floats(args.state, 3, "--state")
    return XStateParams.of(*r, args.s, args.c)


def _discord_scale(args) -> float:
    return 2.0 if args.discord_norm == "full" else 1.0


def _glue_negative_values(argv: list[str]) -> list[str]:
    # "--state -0.3,0.6,0.4" would otherwise be read as an option
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--state", "--r") and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


GLOBAL_DEFAULTS = {"format": "csv", "discord_norm": "half", "seed": 7}


def _add_global(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=["csv", "json"], default=argparse.SUPPRESS)
    parser.add_argument("--discord-norm", choices=["half", "full"], default=argparse.SUPPRESS,
                        help="full doubles every discord value")
    parser.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for randomized suites")


def _add_state(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument("--state", "--r", dest="state", required=required, metavar="R1,R2,R3")
    parser.add_argument("--s", type=float, default=0.0)
    parser.add_argument("--c", type=float, default=0.0)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="xstates",
        description="Entanglement, discord and coherence of two-qubit X states under local noise.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    _add_global(parser)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("measure", help="E, D, C and discord region of one state")
    _add_global(p)
    _add_state(p)

    p = sub.add_parser("sweep", help="measures along a noise channel")
    _add_global(p)
    _add_state(p)
    p.add_argument("--channel", choices=[c.value for c in Channel], required=True)
    p.add_argument("--steps", type=int, default=101)

    p = sub.add_parser("relate", help="E(C) or D(C) relation segments")
    _add_global(p)
    _add_state(p)
    p.add_argument("--channel", choices=[c.value for c in Channel], required=True)
    p.add_argument("--which", choices=["EC", "DC"], required=True)
    p.add_argument("--samples", type=int, default=11, help="samples per segment")

    p = sub.add_parser("geometry", help="grids over state space")
    _add_global(p)
    gsub = p.add_subparsers(dest="mode", required=True, parser_class=_Parser)
    for mode in ("exist", "separable", "regions"):
        g = gsub.add_parser(mode)
        _add_global(g)
        g.add_argument("--s", type=float, default=0.0)
        g.add_argument("--c", type=float, default=0.0)
        g.add_argument("--n", type=int, default=101)
    g = gsub.add_parser("scmap")
    _add_global(g)
    g.add_argument("--r", "--state", dest="state", required=True, metavar="R1,R2,R3")
    g.add_argument("--measure", choices=["E", "D", "C"], required=True)
    g.add_argument("--n", type=int, default=201)

    p = sub.add_parser("verify", help="run verification suites")
    _add_global(p)
    p.add_argument("scope", choices=["all", "oracles", "relations", "channels"])
    p.add_argument("--count", type=int, default=None,
                   help="random states (default 10000 for oracles, 100 for channels)")
    p.add_argument("--points", type=int, default=1000, help="p grid size for relations")
    p.add_argument("--tol", type=float, default=1e-12, help="tolerance for relation checks")
    _add_state(p, required=False)
    p.add_argument("--channel", choices=[c.value for c in Channel], default=None)
    return parser


# Commands


def cmd_measure(args) -> tuple[str, list[str], list]:
    xp = _state(args)
    report = is_physical(xp)
    if not report.physical:
        raise DomainError(f"unphysical state {xp.as_tuple()} (min eigenvalue {report.min_eigenvalue:.3g})")
    row = [*xp.as_tuple(), entanglement(xp), discord(xp) * _discord_scale(args), coherence(xp),
           discord_region(xp).value, True]
    return "xstates.measure/1", ["r1", "r2", "r3", "s", "c", "E", "D", "C", "region", "physical"], [row]


def cmd_sweep(args):
    if args.steps < 2:
        raise UsageError("--steps must be at least 2")
    xp = _state(args)
    scale = _discord_scale(args)
    rows = [
        [pt.p, *pt.params.as_tuple(), pt.E, pt.D * scale, pt.C, pt.region.value]
        for pt in trajectory(xp, args.channel, np.linspace(0.0, 1.0, args.steps))
    ]
    return "xstates.sweep/1", ["p", "r1", "r2", "r3", "s", "c", "E", "D", "C", "region"], rows


def cmd_relate(args):
    if args.samples < 2:
        raise UsageError("--samples must be at least 2")
    xp = _state(args)
    build = relation_E_of_C if args.which == "EC" else relation_D_of_C
    curve = build(xp, args.channel)
    scale = _discord_scale(args) if args.which == "DC" else 1.0
    rows = []
    for idx, seg in enumerate(curve.segments):
        for p in np.linspace(seg.p_lo, seg.p_hi, args.samples):
            pt = trajectory(xp, args.channel, [p])[0]
            if seg.is_relation:
                value = float(seg.evaluate(pt.C))
            else:
                value = pt.E if args.which == "EC" else pt.D
            rows.append([idx, seg.kind.value, seg.c_lo, seg.c_hi, seg.p_lo, seg.p_hi, pt.C, value * scale])
    cols = ["segment", "kind", "c_lo", "c_hi", "p_lo", "p_hi", "C", "E" if args.which == "EC" else "D"]
    return f"xstates.relate.{args.which}/1", cols, rows


def cmd_geometry(args):
    if args.n < 2:
        raise UsageError("--n must be at least 2")
    if args.mode == "scmap":
        r = CorrelationVector(*_floats(args.state, 3, "--r"))
        field = geometry.sc_map(r, args.measure, args.n)
        scale = _discord_scale(args) if args.measure == "D" else 1.0
        rows = [[s, c, v * scale] for s, c, v in field.rows()]
        return f"xstates.geometry.scmap.{args.measure}/1", ["s", "c", "value"], rows
    build = {"exist": geometry.existence_grid, "separable": geometry.separable_grid,
             "regions": geometry.regions_grid}[args.mode]
    field = build(args.s, args.c, args.n)
    if field.values.dtype == bool:
        rows = [[a, b, c, int(v)] for a, b, c, v in field.rows()]
    else:
        rows = [[a, b, c, v if math.isnan(v) else int(v)] for a, b, c, v in field.rows()]
    return f"xstates.geometry.{args.mode}/1", ["r1", "r2", "r3", "value"], rows


def cmd_verify(args):
    seed = args.seed
    if args.scope == "oracles":
        report = verification.check_oracles(seed, args.count or 10_000)
    elif args.scope == "channels":
        report = verification.check_channels(seed, args.count or 100)
    elif args.scope == "relations":
        if args.state is not None:
            if args.channel is None:
                raise UsageError("--channel is required with --state")
            report = verify_relations(_state(args), args.channel, args.points, args.tol)
        else:
            report = verification.check_relations(n_points=args.points, tol=args.tol)
    else:
        report = verification.run_all(seed, args.count or 10_000)
    rows = [[r.name, r.samples, r.max_deviation, r.tol, r.status, r.note] for r in report.rows]
    return "xstates.verify/1", ["name", "samples", "max_deviation", "tol", "status", "note"], rows, report.ok


COMMANDS = {"measure": cmd_measure, "sweep": cmd_sweep, "relate": cmd_relate,
            "geometry": cmd_geometry, "verify": cmd_verify}


def main(argv: Sequence[str] | None = None) -> int:
    argv = _glue_negative_values(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    args = parser.parse_args(argv)
    for key, value in GLOBAL_DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, value)
    try:
        result = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"xstates: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        # DomainError and the other state errors derive from ValueError
        print(f"xstates: invalid state: {exc}", file=sys.stderr)
        return EXIT_STATE
    ok = True
    if len(result) == 4:
        *result, ok = result
    schema, columns, rows = result
    sys.stdout.write(render(schema, columns, rows, args.format))
    return 0 if ok else EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
