"""Command-line entry point: ``wpi <subcommand> ...``.

Exit codes: 0 pass, 1 verification failure, 2 usage or domain error.
Options can come from a TOML file (``--config``); explicit flags win.  Keys are
flag names (``n-max`` or ``n_max``) at top level or under a table named after
the subcommand.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys

try:
    import tomllib
except ModuleNotFoundError:  # python < 3.11
    import tomli as tomllib

from . import group_analysis as ga
from . import hl, lattice, numerology, polyalg
from .lattice import DomainError
from .presentation import (
    FIXTURES,
    build_elliptic,
    build_presentation,
    build_zariski,
    from_json,
    serialize,
    special_fixture,
)
from .suites import SUITES, SuiteOptions, run_suite

log = logging.getLogger("wpi")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("WPI_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"WPI_SEED must be an integer, got {env!r}") from None


def _load_presentation(args):
    variant = args.variant
    if variant == "elliptic":
        return build_elliptic()
    if variant == "zariski":
        return build_zariski(args.l)
    if variant == "fixture":
        return special_fixture(args.case)
    if args.n is None or args.d is None:
        raise UsageError(f"variant {variant!r} needs --n and --d")
    return build_presentation(args.n, args.d, variant, args.pact_exponent, args.allow_odd_d)


# -- subcommands ---------------------------------------------------------------

def cmd_present(args) -> int:
    p = _load_presentation(args)
    _emit(serialize(p, args.format))
    return EXIT_OK


def cmd_verify(args) -> int:
    opt = SuiteOptions(n=args.n, d=args.d, n_max=args.n_max, d_max=args.d_max,
                       seed=_seed(args), seeds=args.seeds, samples=args.samples, tol=args.tol)
    checks = run_suite(args.suite, opt)
    ok = all(c["ok"] for c in checks)
    if args.format == "json":
        _emit(_dump({"suite": args.suite, "ok": ok, "checks": checks}))
    else:
        for c in checks:
            _emit(f"{'PASS' if c['ok'] else 'FAIL'}  {c['check']}")
        _emit(f"{args.suite}: {'pass' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_graph(args) -> int:
    g = lattice.build_graph(args.n, args.d)
    if args.format == "dot":
        _emit(g.to_dot())
    else:
        _emit(g.to_json())
    return EXIT_OK


def cmd_abelianize(args) -> int:
    inv = ga.abelianization(_load_presentation(args))
    _emit(inv.to_json() if args.format == "json" else str(list(inv.factors)))
    return EXIT_OK


def cmd_todd_coxeter(args) -> int:
    with open(args.file) as fh:
        p = from_json(fh.read())
    subgroup = []
    for text in args.subgroup or []:
        letters = []
        for tok in text.split():
            label, _, exp = tok.partition("^")
            e = int(exp) if exp else 1
            letters.extend([(p.gid(label), 1 if e > 0 else -1)] * abs(e))
        subgroup.append(tuple(letters))
    enum = ga.todd_coxeter(p, subgroup, args.max_cosets)
    if args.format == "json":
        _emit(enum.to_json())
    else:
        _emit("exceeded" if enum.exceeded else f"index {enum.index}")
    return EXIT_OK


def cmd_hl(args) -> int:
    if args.v:
        p = hl.HLParams(args.n, args.d, tuple(args.v))
    else:
        p = hl.HLParams.canonical(args.n, args.d)
    table = hl.closed_form_values(p)
    rows = [(".".join(map(str, k)), z.real, z.imag) for k, z in table.items()]
    if args.format == "json":
        _emit(hl.table_json(p))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", "re", "im"])
        w.writerows(rows)
        _emit(buf.getvalue())
    else:
        _emit("\n".join(f"{k:>10}  {re: .12g} {im:+.12g}i" for k, re, im in rows))
    return EXIT_OK


def cmd_slice(args) -> int:
    r = polyalg.weierstrass_slice_zdegree(args.d, _seed(args), allow_large=args.allow_large)
    if args.format == "json":
        _emit(_dump(r.to_dict()))
    else:
        _emit(f"z-degree {r.z_degree} (expected {r.expected}, raw {r.raw_degree}, "
              f"cusp factor degree {r.cusp_degree} x{r.cusp_multiplicity})")
    return EXIT_OK


def _range(text: str) -> range:
    lo, sep, hi = text.partition(":")
    try:
        return range(int(lo), int(hi if sep else lo) + 1)
    except ValueError:
        raise UsageError(f"bad range {text!r}; use A:B") from None


def cmd_formulas(args) -> int:
    table = numerology.formula_table(_range(args.n_range), _range(args.d_range))
    fields = ["n", "d", "deg_p", "deg_z_p", "deg_q", "wdeg_p", "wdeg_q", "deg_v_q", "deg_c"]
    if args.format == "json":
        _emit(_dump([{f: getattr(r, f) for f in fields} for r in table]))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(fields)
        w.writerows([[getattr(r, f) for f in fields] for r in table])
        _emit(buf.getvalue())
    else:
        _emit("  ".join(f"{f:>8}" for f in fields))
        for r in table:
            _emit("  ".join(f"{getattr(r, f):>8}" for f in fields))
    return EXIT_OK


# -- parser --------------------------------------------------------------------

def _presentation_args(sp) -> None:
    sp.add_argument("--n", type=int)
    sp.add_argument("--d", type=int)
    sp.add_argument("--variant", default="discriminant",
                    choices=["singularity", "discriminant", "moduli", "zariski", "elliptic", "fixture"])
    sp.add_argument("--pact-exponent", type=int)
    sp.add_argument("--allow-odd-d", action="store_true")
    sp.add_argument("--l", type=int, default=3, help="degree for the zariski variant")
    sp.add_argument("--case", default="n1d1", choices=FIXTURES)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="TOML file with option defaults")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="wpi", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("present", parents=[common], help="emit a presentation")
    _presentation_args(sp)
    sp.add_argument("--format", default="text", choices=["json", "gap", "magma", "text"])
    sp.set_defaults(func=cmd_present)

    sp = sub.add_parser("verify", parents=[common], help="run a verification suite")
    sp.add_argument("suite", choices=SUITES)
    sp.add_argument("--n", type=int)
    sp.add_argument("--d", type=int)
    sp.add_argument("--n-max", type=int, default=6)
    sp.add_argument("--d-max", type=int, default=6)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--seeds", type=int, default=10)
    sp.add_argument("--samples", type=int, default=5)
    sp.add_argument("--tol", type=float, default=1e-9)
    sp.add_argument("--format", default="json", choices=["json", "text"])
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("graph", parents=[common], help="emit the lattice graph")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--format", default="dot", choices=["dot", "json"])
    sp.set_defaults(func=cmd_graph)

    sp = sub.add_parser("abelianize", parents=[common], help="abelian invariants")
    _presentation_args(sp)
    sp.add_argument("--format", default="json", choices=["json", "text"])
    sp.set_defaults(func=cmd_abelianize)

    sp = sub.add_parser("todd-coxeter", parents=[common], help="coset enumeration")
    sp.add_argument("file", help="presentation JSON (as written by present --format json)")
    sp.add_argument("--subgroup", action="append",
                    help="subgroup generator as space-separated labels, e.g. 's_1 s_2^-1'")
    sp.add_argument("--max-cosets", type=int, default=100_000)
    sp.add_argument("--format", default="json", choices=["json", "text"])
    sp.set_defaults(func=cmd_todd_coxeter)

    sp = sub.add_parser("hl", parents=[common], help="closed-form critical value table")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--v", type=float, nargs="+", help="v0..vn (default: canonical)")
    sp.add_argument("--format", default="json", choices=["json", "text", "csv"])
    sp.set_defaults(func=cmd_hl)

    sp = sub.add_parser("slice", parents=[common], help="Weierstrass slice discriminant degree")
    sp.add_argument("--d", type=int, default=2)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--allow-large", action="store_true")
    sp.add_argument("--format", default="json", choices=["json", "text"])
    sp.set_defaults(func=cmd_slice)

    sp = sub.add_parser("formulas", parents=[common], help="degree formula table")
    sp.add_argument("--n-range", default="1:3")
    sp.add_argument("--d-range", default="1:3")
    sp.add_argument("--format", default="text", choices=["json", "text", "csv"])
    sp.set_defaults(func=cmd_formulas)
    return parser


def _config_defaults(path: str, command: str) -> dict:
    with open(path, "rb") as fh:
        data = tomllib.load(fh)
    merged = {k: v for k, v in data.items() if not isinstance(v, dict)}
    merged.update(data.get(command, {}))
    return {k.replace("-", "_"): v for k, v in merged.items()}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(message)s")
    try:
        if args.config:
            defaults = _config_defaults(args.config, args.command)
            sub = parser._subparsers._group_actions[0].choices[args.command]
            known = {a.dest for a in sub._actions}
            unknown = sorted(set(defaults) - known)
            if unknown:
                raise UsageError(f"unknown config keys: {', '.join(unknown)}")
            sub.set_defaults(**defaults)
            args = parser.parse_args(argv)
        log.debug("args %s", vars(args))
        return args.func(args)
    except (UsageError, DomainError, ValueError, KeyError, OSError, tomllib.TOMLDecodeError) as e:
        print(f"wpi: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
