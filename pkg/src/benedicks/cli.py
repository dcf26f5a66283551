"""Command-line front end.

JSON reports go to stdout, diagnostics to stderr and grids to files.

Exit codes
----------
0  success
1  self-check failure or numerical failure
2  input matrix is not symplectic
3  malformed input or invalid arguments
4  free factorization requested for a non-free matrix
5  witness requested although the uncertainty principle holds
6  grid error
"""

import argparse
import json
import sys

import numpy as np

from . import grid
from .decision import decide_quadratic, decide_sesquilinear, witness_recipe
from .decompositions import free_factorize, joint_svd, pre_iwasawa
from .errors import (
    BadK,
    BadParam,
    BenedicksError,
    DimensionMismatch,
    GridMismatch,
    HalfDimOdd,
    NotCriticallySampled,
    NotFree,
    NotSymplectic,
    OddDimension,
    UnknownName,
    VerdictHolds,
    WitnessMismatch,
)
from .selfcheck import format_table, run_all
from .symplectic import CATALOG_NAMES, catalog, from_json, to_json

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_NOT_SYMPLECTIC = 2
EXIT_PARSE = 3
EXIT_NOT_FREE = 4
EXIT_VERDICT_HOLDS = 5
EXIT_GRID = 6

MODES = ("pre-iwasawa", "free", "joint-svd")


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage, which is reserved here
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_PARSE)


def _complex_json(m):
    m = np.asarray(m)
    return {"re": np.real(m).tolist(), "im": np.imag(m).tolist()}


def _emit(obj):
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _load_matrix(args):
    if args.catalog is not None:
        return catalog(args.catalog, d=args.d, tau=args.tau)
    if args.input is None:
        raise BadParam("one of --catalog or --input is required")
    try:
        with open(args.input) as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise BadParam(f"cannot read {args.input}: {exc}") from exc
    return from_json(obj)


def _validate(args):
    if args.tol <= 0:
        raise BadParam("--tol must be positive")
    if args.grid < 2 or args.grid & (args.grid - 1):
        raise BadParam("--grid must be a power of two")
    if not 0 < args.eps < 1:
        raise BadParam("--eps must lie in (0, 1)")


def _shape(name, spec):
    """Parse ``gauss``, ``rect``, ``sinc``, ``bump`` or ``hermite_K``."""
    if name.startswith("hermite"):
        order = name[len("hermite"):].lstrip("_") or "0"
        if not order.isdigit():
            raise BadParam(f"bad hermite order in {name!r}")
        return grid.sample("hermite", spec, k=int(order))
    return grid.sample(name, spec)


def run_catalog(args):
    _emit(to_json(_load_matrix(args)))
    return EXIT_OK


def run_decide(args):
    a = _load_matrix(args)
    out = {}
    if not args.quadratic:
        out["sesquilinear"] = decide_sesquilinear(a, args.tol).to_json()
    out["quadratic"] = decide_quadratic(a, args.tol).to_json()
    _emit(out)
    return EXIT_OK


def run_decompose(args):
    a = _load_matrix(args)
    mode = args.mode or "pre-iwasawa"
    if mode == "pre-iwasawa":
        f = pre_iwasawa(a)
        out = {"q": f.q.tolist(), "l": f.l.tolist(), "u": _complex_json(f.u)}
    elif mode == "free":
        f = free_factorize(a)
        out = {"q": f.q_out.tolist(), "b": f.b.tolist(), "p": f.p.tolist()}
    elif mode == "joint-svd":
        u = pre_iwasawa(a).u
        sv = joint_svd(u)
        out = {"w": sv.w.tolist(), "sigma": _complex_json(sv.sigma), "v": sv.v.tolist()}
        residual = float(np.linalg.norm(sv.reconstruct() - u))
        out.update(mode=mode, residual=residual)
        _emit(out)
        return EXIT_OK
    else:
        raise BadParam(f"unknown mode {mode!r}; expected one of {MODES}")
    out.update(mode=mode, residual=float(np.linalg.norm(f.reconstruct() - a)))
    _emit(out)
    return EXIT_OK


def _grid_setup(args, a):
    if a.shape != (4, 4):
        raise GridMismatch("grid commands support d = 1 (4x4 matrices) only")
    return grid.GridSpec.critical(1, args.grid)


def _write(fn, args):
    if args.out:
        grid.write_grid(fn.abs() if args.modulus else fn, args.out)
        print(f"wrote {args.out}", file=sys.stderr)


def run_wigner(args):
    a = _load_matrix(args)
    spec = _grid_setup(args, a)
    f = _shape(args.f, spec)
    g = _shape(args.g, spec)
    w = grid.wigner(a, f, g)
    _write(w, args)
    _emit({"support": grid.support_report(w, args.eps).to_json(), "grid": w.spec.to_json()})
    return EXIT_OK


def run_witness(args):
    a = _load_matrix(args)
    mode = "quadratic" if args.quadratic else "sesquilinear"
    recipe = witness_recipe(a, mode, args.tol)
    spec = _grid_setup(args, a)
    f0 = _shape(args.f, spec)
    g0 = f0 if mode == "quadratic" else _shape(args.g, spec)
    _, _, w = grid.witness_build(recipe, f0, g0, a=a)
    _write(w, args)
    _emit({
        "mode": mode,
        "recipe": {
            "q": recipe.q.tolist(),
            "l": recipe.l.tolist(),
            "w": recipe.w.tolist(),
            "delta1": _complex_json(recipe.delta1),
            "delta2": _complex_json(recipe.delta2),
        },
        "support": grid.support_report(w, args.eps).to_json(),
        "grid": w.spec.to_json(),
    })
    return EXIT_OK


def run_selfcheck(args):
    results = run_all(args.seed)
    print(format_table(results))
    return EXIT_OK if all(ok for _, ok, _ in results) else EXIT_FAILURE


COMMANDS = {
    "catalog": run_catalog,
    "decide": run_decide,
    "decompose": run_decompose,
    "wigner": run_wigner,
    "witness": run_witness,
    "selfcheck": run_selfcheck,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--catalog", choices=CATALOG_NAMES, help="named symplectic matrix")
    src.add_argument("--input", help="JSON file {'half_dim': n, 'entries': [[...]]}")
    common.add_argument("--tau", type=float, default=None, help="tau for tau_wigner")
    common.add_argument("--d", type=int, default=1, help="dimension d of the catalog matrix")
    common.add_argument("--tol", type=float, default=1e-8, help="relative decision tolerance")
    common.add_argument("--grid", type=int, default=256, help="grid points per axis")
    common.add_argument("--eps", type=float, default=1e-3, help="support threshold")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", help="output file for grids")
    common.add_argument("--mode", choices=MODES, help="factorization for 'decompose'")
    common.add_argument("--quadratic", action="store_true", help="quadratic case only")
    common.add_argument("--f", default="gauss", help="first signal (gauss, rect, sinc, bump, hermite_K)")
    common.add_argument("--g", default="gauss", help="second signal")
    common.add_argument("--modulus", action="store_true", help="write |W| instead of W")

    parser = _Parser(prog="benedicks", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    helps = {
        "catalog": "print a catalog matrix as JSON",
        "decide": "uncertainty principle verdicts",
        "decompose": "pre-Iwasawa, free or joint SVD factorization",
        "wigner": "Wigner-type distribution on a grid",
        "witness": "compactly supported counterexample",
        "selfcheck": "run the property suites",
    }
    for name, text in helps.items():
        sub.add_parser(name, parents=[common], help=text)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        _validate(args)
        return COMMANDS[args.command](args)
    except NotSymplectic as exc:
        code, msg = EXIT_NOT_SYMPLECTIC, f"not symplectic: {exc}"
    except NotFree as exc:
        code, msg = EXIT_NOT_FREE, f"{exc} (try --mode pre-iwasawa)"
    except VerdictHolds as exc:
        code, msg = EXIT_VERDICT_HOLDS, str(exc)
    except (GridMismatch, NotCriticallySampled, WitnessMismatch, BadK) as exc:
        code, msg = EXIT_GRID, f"grid error: {exc}"
    except (BadParam, UnknownName, HalfDimOdd, OddDimension, DimensionMismatch) as exc:
        code, msg = EXIT_PARSE, f"invalid input: {exc}"
    except BenedicksError as exc:
        code, msg = EXIT_FAILURE, f"{type(exc).__name__}: {exc}"
    print(f"benedicks: {msg}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
