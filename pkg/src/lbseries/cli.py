"""Command-line front end.

Exit status: 0 on success, 1 on a usage error, 2 on a domain error such as a
malformed forest or a non-tree where a tree is required.
"""
from __future__ import annotations

import argparse
import random
import sys
import warnings
from typing import Callable, Sequence, TextIO

from . import forest as fo
from .checks import SelftestConfig, run_selftest
from .cuts import _dn_cuts, admissible_cuts, elementary_cuts, left_admissible_cuts
from .errors import LBError
from .flows import FlowRepresentation, backward_error, builtin_method, convert, METHODS
from .hopf import (
    HopfStructure,
    TensorSeries,
    antipode_generic,
    antipode_shuffle,
    apply_coproduct_series,
    render_tensor,
)
from .idempotents import bell, bell_part, dynkin, dynkin_projection, eulerian, q_part, q_polynomial, render_bell
from .serialize import bell_to_json, dumps, load_series, series_to_json, tensor_to_json
from .series import PRODUCTS, Series, render_series
from .substitution import NotInfinitesimalWarning, substitute, substitute_dual

COPRODUCTS = {
    "dn": HopfStructure.H_N.coproduct,
    "dn-cuts": _dn_cuts,
    "deconcat": HopfStructure.H_SH.coproduct,
    "deshuffle": HopfStructure.CONCAT_DESH.coproduct,
}
IDEMPOTENTS = {"eulerian": eulerian, "dynkin": dynkin, "dynkin-projection": dynkin_projection}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--order", "-n", type=int, default=4, help="truncation order (default 4)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--seed", type=int, default=0, help="seed for random operands and checks")
    p.add_argument("--strict", action="store_true", help="reject substitution data that are not Lie series")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lbseries", description="Exact Lie-Butcher series computations.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        _common(p)
        return p

    p = add("product", "multiply two series")
    p.add_argument("--kind", choices=sorted(PRODUCTS), default="concat")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)

    p = add("coproduct", "coproduct of a forest or series")
    p.add_argument("--kind", choices=sorted(COPRODUCTS), default="dn")
    p.add_argument("--forest", required=True, help="forest literal, JSON series or JSON file")

    p = add("cuts", "cuts of a tree or forest")
    p.add_argument("--kind", choices=("admissible", "elementary", "left", "full"), default="left",
                   help="admissible/elementary need a tree; left/full cut the planted forest")
    p.add_argument("--forest", required=True)

    p = add("antipode", "antipode of a forest")
    p.add_argument("--hopf", choices=[h.value for h in HopfStructure], default="sh")
    p.add_argument("--forest", required=True)

    p = add("idempotent", "apply the Eulerian or Dynkin operator")
    p.add_argument("--kind", choices=sorted(IDEMPOTENTS), default="eulerian")
    p.add_argument("--forest", required=True)

    p = add("bell", "non-commutative Bell polynomials")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, help="only words of this length")
    p.add_argument("--q", action="store_true", help="rescaled polynomials Q_n instead of B_n")

    p = add("subst", "substitute a Lie series into a series")
    p.add_argument("--a", required=True, help="substitution datum (series) or 'random'")
    p.add_argument("--target", required=True, help=f"series, or one of {sorted(METHODS)}")

    p = add("subst-dual", "adjoint substitution applied to a forest")
    p.add_argument("--a", required=True)
    p.add_argument("--forest", required=True)

    p = add("flow", "series of a built-in flow")
    p.add_argument("--method", choices=sorted(METHODS), required=True)
    p.add_argument("--repr", choices=("1", "2", "3"), default="1")

    p = add("bea", "modified field of a built-in method")
    p.add_argument("--method", choices=sorted(METHODS), required=True)

    p = add("convert", "change flow representation")
    p.add_argument("--series", required=True)
    p.add_argument("--from", dest="source", choices=("1", "2", "3"), required=True)
    p.add_argument("--to", dest="target", choices=("1", "2", "3"), required=True)

    p = add("enumerate", "list forests of one order")
    p.add_argument("--trees", action="store_true", help="trees only")
    p.add_argument("--count", action="store_true", help="print counts for orders 0..N")

    add("selftest", "run golden-value and invariant checks")
    return parser


# ---------------------------------------------------------------------------

def _emit_series(s: Series, args, out: TextIO) -> None:
    print(dumps(series_to_json(s)) if args.format == "json" else render_series(s), file=out)


def _emit_tensor(t: TensorSeries, args, out: TextIO) -> None:
    print(dumps(tensor_to_json(t)) if args.format == "json" else render_tensor(t), file=out)


def _rng(args) -> random.Random:
    return random.Random(args.seed)


def _operand(text: str, args, rng: random.Random | None = None) -> Series:
    return load_series(text, args.order, rng)


def _forest(text: str) -> str:
    return fo.parse(text)


def cmd_product(args, out):
    rng = _rng(args)
    left, right = _operand(args.left, args, rng), _operand(args.right, args, rng)
    n = max(left.order, right.order)
    _emit_series(PRODUCTS[args.kind](left.with_order(n), right.with_order(n)), args, out)


def cmd_coproduct(args, out):
    s = _operand(args.forest, args)
    _emit_tensor(apply_coproduct_series(s, COPRODUCTS[args.kind]), args, out)


def cmd_cuts(args, out):
    w = _forest(args.forest)
    rows: list[tuple[Series, str]] = []
    n = fo.order(w)
    if args.kind == "admissible":
        for cut in admissible_cuts(w):
            rows.append((Series(n, cut.pruned), cut.remainder))
    elif args.kind == "elementary":
        rows = [(Series.basis(p, n), r) for p, r in elementary_cuts(w)]
    else:
        rows = left_admissible_cuts(w, include_full=args.kind == "full")
    if args.format == "json":
        print(dumps({"forest": fo.render(w), "cuts": [
            {"pruned": series_to_json(p)["terms"], "remainder": fo.render(r)} for p, r in rows
        ]}), file=out)
    else:
        for p, r in rows:
            print(f"{render_series(p)} | {fo.render(r)}", file=out)


def cmd_antipode(args, out):
    w = _forest(args.forest)
    H = HopfStructure(args.hopf)
    n = max(args.order, fo.order(w))
    s = antipode_shuffle(w, n) if H is not HopfStructure.H_N else antipode_generic(w, H, n)
    _emit_series(s, args, out)


def cmd_idempotent(args, out):
    w = _forest(args.forest)
    _emit_series(IDEMPOTENTS[args.kind](max(args.order, fo.order(w))).image(w), args, out)


def cmd_bell(args, out):
    if args.n < 0:
        raise UsageError("--n must be non-negative")
    if args.q:
        b = q_polynomial(args.n) if args.k is None else q_part(args.n, args.k)
    else:
        b = bell(args.n) if args.k is None else bell_part(args.n, args.k)
    if args.format == "json":
        print(dumps({"n": args.n, **bell_to_json(b)}), file=out)
    else:
        print(render_bell(b), file=out)


def cmd_subst(args, out):
    rng = _rng(args)
    a = _operand(args.a, args, rng)
    if args.target in METHODS:
        target = builtin_method(args.target, a.order)
    else:
        target = _operand(args.target, args, rng).with_order(a.order)
    _emit_series(substitute(a, target, strict=args.strict), args, out)


def cmd_subst_dual(args, out):
    a = _operand(args.a, args, _rng(args))
    _emit_series(substitute_dual(a, _forest(args.forest), strict=args.strict), args, out)


def cmd_flow(args, out):
    alpha = builtin_method(args.method, args.order)
    _emit_series(convert(alpha, 1, int(args.repr)), args, out)


def cmd_bea(args, out):
    _emit_series(backward_error(builtin_method(args.method, args.order)), args, out)


def cmd_convert(args, out):
    s = _operand(args.series, args)
    _emit_series(convert(s, FlowRepresentation(int(args.source)), FlowRepresentation(int(args.target))), args, out)


def cmd_enumerate(args, out):
    pick = fo.trees_of_order if args.trees else fo.forests_of_order
    if args.count:
        counts = {n: len(pick(n)) for n in range(args.order + 1)}
        if args.format == "json":
            print(dumps({"counts": [counts[n] for n in range(args.order + 1)]}), file=out)
        else:
            for n, c in counts.items():
                print(f"{n} {c}", file=out)
        return
    words = [fo.render(w) for w in pick(args.order)]
    if args.format == "json":
        print(dumps({"order": args.order, "forests": words}), file=out)
    else:
        for w in words:
            print(w, file=out)


def cmd_selftest(args, out):
    results = run_selftest(SelftestConfig(order=args.order, seed=args.seed, stream=out))
    return 0 if all(r.passed for r in results) else 1


COMMANDS: dict[str, Callable] = {
    "product": cmd_product,
    "coproduct": cmd_coproduct,
    "cuts": cmd_cuts,
    "antipode": cmd_antipode,
    "idempotent": cmd_idempotent,
    "bell": cmd_bell,
    "subst": cmd_subst,
    "subst-dual": cmd_subst_dual,
    "flow": cmd_flow,
    "bea": cmd_bea,
    "convert": cmd_convert,
    "enumerate": cmd_enumerate,
    "selftest": cmd_selftest,
}


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        if args.order < 0:
            raise UsageError("--order must be non-negative")
        with warnings.catch_warnings():
            warnings.simplefilter("always", NotInfinitesimalWarning)
            warnings.showwarning = lambda msg, *rest, **kw: print(f"warning: {msg}", file=err)
            status = COMMANDS[args.command](args, out)
        return status or 0
    except UsageError as exc:
        print(exc, file=err)
        return 1
    except LBError as exc:
        print(f"error: {exc}", file=err)
        return 2
    except (OSError, KeyError, ValueError) as exc:  # unreadable or malformed input files
        print(f"error: bad input: {exc}", file=err)
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


def main() -> None:
    sys.exit(run())
