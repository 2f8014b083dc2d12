"""Command-line interface: ``toric2fano <command> [options]`` or ``python -m toric2fano``.

Exit codes: 0 success, 1 usage error, 2 invalid input (malformed JSON or a
fan that is not smooth and complete).
"""

import argparse
import os
import sys

from . import __version__
from .chow import chern_degrees, class_polynomial, curve_class, n2_rank, wall_relation, walls
from .constructions import BundleSpec, del_pezzo_database, kleinschmidt_bundle
from .errors import ToricError
from .fano import analyze, fraction_str, scan
from .fano import rank2_sweep as _rank2_sweep
from .io import (cycle_class_to_dict, database_to_jsonl, dumps, parse_database,
                 parse_fan, scan_report)
from .surfaces import ch2_pair, classify_surface, surface_class

JOBS_ENV = "TORIC2FANO_JOBS"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _read(path):
    if path in (None, "-"):
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _fan(args):
    return parse_fan(_read(args.file).decode())


def _cone(text):
    if text is None or text.strip() == "":
        return ()
    try:
        return tuple(sorted(int(x) for x in text.split(",")))
    except ValueError:
        raise UsageError(f"cannot parse cone {text!r}; expected e.g. 0,2,3") from None


def render_text(obj, prefix=""):
    """Aligned ``key  value`` lines for --pretty."""
    rows = []

    def walk(o, path):
        if isinstance(o, dict) and o:
            for k in sorted(o, key=str):
                walk(o[k], f"{path}.{k}" if path else str(k))
        elif isinstance(o, list) and o and any(isinstance(x, (dict, list)) for x in o):
            for k, x in enumerate(o):
                walk(x, f"{path}[{k}]")
        else:
            rows.append((path, o))

    walk(obj, prefix)
    width = max((len(k) for k, _ in rows), default=0)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in rows)


def _curve_record(fan, wall):
    rel = wall_relation(fan, wall)
    return {"wall": list(rel.wall), "opposite": list(rel.opposite),
            "relation": {str(k): v for k, v in sorted(rel.coefficients.items())},
            "anticanonical_degree": rel.degree(),
            "class": cycle_class_to_dict(curve_class(fan, wall))}


def _surface_record(fan, tau):
    kind, cls = surface_class(fan, tau)
    out = {"cone": list(kind.cone), "kind": kind.kind, "ch2_pair": fraction_str(ch2_pair(cls)),
           "class": cycle_class_to_dict(cls)}
    if kind.alpha is not None:
        out["alpha"] = kind.alpha
    return out


def cmd_check(args):
    fan = _fan(args)
    return {"smooth": True, "complete": True, "picard": fan.picard}


def cmd_class(args):
    fan = _fan(args)
    cone = fan.require(_cone(args.cone))
    out = cycle_class_to_dict(class_polynomial(fan, cone))
    out["cone"] = list(cone)
    return out


def cmd_curve(args):
    fan = _fan(args)
    if args.wall is not None:
        return _curve_record(fan, _cone(args.wall))
    return {"curves": [_curve_record(fan, w) for w, _ in walls(fan)]}


def cmd_surface(args):
    fan = _fan(args)
    if fan.dim < 2:
        raise UsageError("surfaces need a fan of dimension >= 2")
    if args.cone is not None:
        return _surface_record(fan, _cone(args.cone))
    cones = sorted(c for c in fan.cones if len(c) == fan.dim - 2)
    return {"surfaces": [_surface_record(fan, c) for c in cones]}


def cmd_chern(args):
    fan = _fan(args)
    ch = chern_degrees(fan)
    return {"dim": fan.dim, "c1_top": ch.c1_top, "c1sq_c2": ch.c1sq_c2,
            "ch2_c1": None if ch.ch2_c1 is None else fraction_str(ch.ch2_c1),
            "lemma_value": ch.lemma_value, "euler": ch.euler}


def cmd_two_fano(args):
    return analyze(_fan(args), fast=args.fast).to_dict()


def cmd_scan(args):
    raw = _read(args.file)
    database = parse_database(raw.decode())
    result = scan(database, fast=args.fast, jobs=args.jobs)
    report = scan_report(result, raw, fast=args.fast)
    return report, (2 if result.errors else 0)


def cmd_bundle(args):
    try:
        twists = tuple(int(x) for x in args.twists.split(",")) if args.twists else ()
        spec = BundleSpec(args.m, args.n, twists)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return kleinschmidt_bundle(spec).to_dict()


def cmd_delpezzo(args):
    return database_to_jsonl(del_pezzo_database())


def cmd_sweep_rank2(args):
    res = _rank2_sweep(args.dim, args.budget)
    return {"dim": res.dim, "budget": res.budget, "checked": res.checked,
            "discrepancies": res.discrepancies, "two_fano_count": res.two_fano_count,
            "two_fano_specs": [{"m": s.m, "n": s.n, "twists": list(s.twists)}
                               for s in res.members]}


def cmd_ne2_rank(args):
    return {"n2_rank": n2_rank(_fan(args))}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="aligned text instead of JSON")
    fan_in = argparse.ArgumentParser(add_help=False)
    fan_in.add_argument("file", nargs="?", default="-", help="fan JSON file (default: stdin)")

    parser = _Parser(prog="toric2fano", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"toric2fano {__version__}")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, func, parents, help_):
        p = sub.add_parser(name, parents=parents, help=help_)
        p.set_defaults(func=func)
        return p

    add("check", cmd_check, [common, fan_in], "validate a fan")
    p = add("class", cmd_class, [common, fan_in], "class polynomial of an orbit closure")
    p.add_argument("--cone", default="", help="comma-separated ray ids (default: zero cone)")
    p = add("curve", cmd_curve, [common, fan_in], "wall relations and curve classes")
    p.add_argument("--wall", help="comma-separated ray ids of one wall")
    p = add("surface", cmd_surface, [common, fan_in], "surface kinds, classes, ch2 pairings")
    p.add_argument("--cone", help="one (d-2)-cone; default: all")
    add("chern", cmd_chern, [common, fan_in], "Chern degrees")
    p = add("two-fano", cmd_two_fano, [common, fan_in], "Fano / 2-Fano report")
    p.add_argument("--fast", action="store_true", help="stop early on cheap failures")
    p = add("scan", cmd_scan, [common], "scan a JSON-lines fan database")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--fast", action="store_true", help="degree filter before the surface sweep")
    p.add_argument("--jobs", type=int, default=int(os.environ.get(JOBS_ENV, "1")))
    p = add("bundle", cmd_bundle, [common], "fan of P_{P^(n-1)}(O+O(a_1)+...)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--twists", default="", help="a_1,...,a_(m-1), non-increasing")
    add("delpezzo", cmd_delpezzo, [common], "the five toric del Pezzo fans as JSON lines")
    p = add("sweep-rank2", cmd_sweep_rank2, [common], "check the Picard-rank-2 classification")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--budget", type=int, required=True)
    add("ne2-rank", cmd_ne2_rank, [common, fan_in], "dimension of N_2")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 1
    if getattr(args, "jobs", 1) < 1:
        print("toric2fano: error: --jobs must be >= 1", file=sys.stderr)
        return 1
    try:
        out = args.func(args)
    except UsageError as exc:
        print(f"toric2fano: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"toric2fano: error: {exc}", file=sys.stderr)
        return 1
    except ToricError as exc:
        print(dumps({"error": type(exc).__name__, "message": str(exc)}), end="",
              file=sys.stderr)
        return 2
    code = 0
    if isinstance(out, tuple):
        out, code = out
    if isinstance(out, str):
        sys.stdout.write(out)
    elif args.pretty:
        sys.stdout.write(render_text(out))
    else:
        sys.stdout.write(dumps(out))
    return code


if __name__ == "__main__":
    sys.exit(main())
