"""Command-line surface for the library.

Verbs: star|tll|tlr|compose|inverse|compare|ess|inv|render|rankgrid|validate|oracle.
Results go to standard output, diagnostics to standard error.  Exit codes:
0 success (or a true comparison), 1 false comparison / failed validation,
2 parse error, 3 domain error, 4 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import demazure, oracle, order
from .errors import (
    DemazError,
    InvalidPermutation,
    NotASlipface,
    ParseError,
    ResourceLimit,
)
from .grammar import format_perm, parse_perm
from .perm import (
    Permutation,
    get_max_window,
    inv_count,
    inverse,
    is_finitary,
    compose,
    set_max_window,
)
from .render import RenderSpec, render
from .slipface import (
    ess_set,
    read_slipface,
    sf_from_perm,
    sf_leq_grid,
    sf_star,
    sf_to_perm,
    sf_validate,
    write_slipface,
)

_EXTENDED = False


def _perm_json(p: Permutation) -> dict:
    return {
        "schema": "demaz.perm/1",
        "period": p.period,
        "lo": p.lo,
        "vals": list(p.vals),
        "chi": p.chi,
        "diff_bound": p.diff_bound,
    }


def _emit(text: str) -> None:
    sys.stdout.write(text + "\n")


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _emit_perm(p: Permutation, as_json: bool) -> None:
    if as_json:
        _emit_json(_perm_json(p))
    else:
        _emit(format_perm(p))
    if _EXTENDED:
        if parse_perm(format_perm(p)) != p:
            raise DemazError("extended check failed: format round trip")
        bad = sf_validate(sf_from_perm(p))
        if bad:
            raise DemazError("extended check failed: " + bad[0])


def _load_slipface_arg(arg: str):
    """A slipface from either a permutation expression or a grid file."""
    if os.path.exists(arg):
        with open(arg, "r", encoding="utf-8") as fh:
            return read_slipface(fh.read())
    return sf_from_perm(parse_perm(arg))


def _parse_range(text: str) -> tuple[int, int]:
    try:
        lo, _, hi = text.partition(":")
        return int(lo), int(hi)
    except ValueError:
        raise ParseError("range must look like LO:HI", text, 0)


# ---------------------------------------------------------------------------
# verb handlers


def _cmd_compute(args) -> int:
    ops = {
        "star": demazure.star,
        "tll": demazure.tll,
        "tlr": demazure.tlr,
        "compose": compose,
    }
    a = parse_perm(args.a)
    if args.verb == "inverse":
        _emit_perm(inverse(a), args.json)
        return 0
    b = parse_perm(args.b)
    _emit_perm(ops[args.verb](a, b), args.json)
    return 0


def _cmd_compare(args) -> int:
    a, b = parse_perm(args.a), parse_perm(args.b)
    rels = {
        "leq": order.bruhat_leq_witness,
        "wleft": order.weak_left_leq_witness,
        "wright": order.weak_right_leq_witness,
    }
    if args.rel == "leq_chi":
        if a.chi != b.chi:
            ok, wit = False, None
        else:
            ok, wit = order.bruhat_leq_witness(a, b)
    else:
        ok, wit = rels[args.rel](a, b)
    if _EXTENDED and args.rel == "leq":
        grid_ok = sf_leq_grid(sf_from_perm(a), sf_from_perm(b))[0]
        if grid_ok != ok:
            raise DemazError("extended check failed: comparators disagree")
    if args.json:
        _emit_json(
            {
                "schema": "demaz.compare/1",
                "relation": args.rel,
                "result": ok,
                "witness": list(wit) if wit else None,
            }
        )
    elif ok:
        _emit("true")
    elif wit:
        _emit(f"false witness=({wit[0]},{wit[1]})")
    else:
        _emit("false")
    return 0 if ok else 1


def _cmd_ess(args) -> int:
    e = ess_set(sf_from_perm(parse_perm(args.a)))
    if args.json:
        _emit_json(
            {
                "schema": "demaz.ess/1",
                "points": [[p.a, p.b, p.value] for p in e.points],
                "periodic": e.periodic,
                "period": e.period,
            }
        )
        return 0
    for p in e.points:
        _emit(f"({p.a},{p.b}) value={p.value}")
    if e.periodic:
        _emit(f"periodic (repeats with period {e.period})")
    return 0


def _cmd_inv(args) -> int:
    p = parse_perm(args.a)
    if not is_finitary(p):
        if args.json:
            _emit_json({"schema": "demaz.inv/1", "count": None, "infinite": True})
        else:
            _emit("infinite")
        return 0
    n = inv_count(p)
    if args.json:
        _emit_json({"schema": "demaz.inv/1", "count": n, "infinite": False})
    else:
        _emit(str(n))
    return 0


def _cmd_render(args) -> int:
    s = _load_slipface_arg(args.a)
    a_lo, a_hi = _parse_range(args.arange)
    b_lo, b_hi = _parse_range(args.brange)
    try:
        spec = RenderSpec(a_lo, a_hi, b_lo, b_hi, args.format, args.mode)
    except ValueError as e:
        raise ParseError(str(e), args.arange, 0)
    text = render(s, spec)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_rankgrid(args) -> int:
    if args.action == "to-perm":
        s = _load_slipface_arg(args.file)
        _emit_perm(sf_to_perm(s), args.json)
        return 0
    if args.action == "glue":
        s = _load_slipface_arg(args.file)
        t = _load_slipface_arg(args.file2)
        sys.stdout.write(write_slipface(sf_star(s, t)))
        return 0
    # dim: transmission-permutation dimension count g - #Inv
    s = _load_slipface_arg(args.file)
    tau = sf_to_perm(s)
    dim = args.genus - inv_count(tau)
    if args.json:
        _emit_json(
            {
                "schema": "demaz.dim/1",
                "genus": args.genus,
                "inversions": inv_count(tau),
                "dim": dim,
            }
        )
    else:
        _emit(str(dim))
    return 0


def _cmd_validate(args) -> int:
    if os.path.exists(args.a):
        try:
            with open(args.a, "r", encoding="utf-8") as fh:
                read_slipface(fh.read())
        except (NotASlipface, DemazError) as e:
            if isinstance(e, (ParseError, ResourceLimit)):
                raise
            print(f"invalid: {e}", file=sys.stderr)
            _emit("invalid")
            return 1
        _emit("valid")
        return 0
    try:
        p = parse_perm(args.a)
    except InvalidPermutation as e:
        for v in e.violations:
            print(f"invalid: {v.kind}: {v.detail}", file=sys.stderr)
        _emit("invalid")
        return 1
    _emit(f"valid {format_perm(p)}")
    return 0


def _cmd_oracle(args) -> int:
    if args.action == "eval":
        p = parse_perm(args.a)
        from .perm import eval_s

        got = eval_s(p, args.x, args.y)
        want = oracle.oracle_eval_s(p, args.x, args.y, args.radius)
        _emit(f"engine={got} oracle={want}")
        return 0 if got == want else 1
    # star: brute S_d product
    p, q = parse_perm(args.a), parse_perm(args.b)
    _emit_perm(oracle.oracle_star_sd(p, q, args.d), args.json)
    return 0


# ---------------------------------------------------------------------------
# parser


def _global_flags(default) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument(
        "--json", action="store_true", default=default, help="structured output"
    )
    p.add_argument(
        "--max-window",
        type=int,
        default=default,
        metavar="N",
        help="resource cap on window sizes",
    )
    p.add_argument(
        "--extended-checks",
        action="store_true",
        default=default,
        help="re-verify results through independent paths",
    )
    return p


def _build_parser() -> argparse.ArgumentParser:
    # subparsers must not re-apply defaults over flags parsed at top level,
    # so their copy of the shared flags defaults to SUPPRESS
    shared = _global_flags(argparse.SUPPRESS)
    ap = argparse.ArgumentParser(
        prog="demaz",
        parents=[_global_flags(None)],
        description="Demazure products and stingy adjoints on eventually "
        "periodic permutations of the integers.",
    )
    sub = ap.add_subparsers(dest="verb", required=True)

    for v in ("star", "tll", "tlr", "compose"):
        sp = sub.add_parser(v, parents=[shared])
        sp.add_argument("a")
        sp.add_argument("b")
        sp.set_defaults(fn=_cmd_compute)
    sp = sub.add_parser("inverse", parents=[shared])
    sp.add_argument("a")
    sp.set_defaults(fn=_cmd_compute)

    sp = sub.add_parser("compare", parents=[shared])
    sp.add_argument("rel", choices=("leq", "leq_chi", "wleft", "wright"))
    sp.add_argument("a")
    sp.add_argument("b")
    sp.set_defaults(fn=_cmd_compare)

    sp = sub.add_parser("ess", parents=[shared])
    sp.add_argument("a")
    sp.set_defaults(fn=_cmd_ess)

    sp = sub.add_parser("inv", parents=[shared])
    sp.add_argument("a")
    sp.set_defaults(fn=_cmd_inv)

    sp = sub.add_parser("render", parents=[shared])
    sp.add_argument("a", help="permutation expression or slipface file")
    sp.add_argument("--format", choices=("ascii", "svg", "pgm"), default="ascii")
    sp.add_argument("--mode", choices=("heatmap", "profiles"), default="heatmap")
    sp.add_argument("--arange", required=True, metavar="LO:HI")
    sp.add_argument("--brange", required=True, metavar="LO:HI")
    sp.add_argument("-o", "--output", metavar="FILE")
    sp.set_defaults(fn=_cmd_render)

    sp = sub.add_parser("rankgrid", parents=[shared])
    rg = sp.add_subparsers(dest="action", required=True)
    g1 = rg.add_parser("to-perm", parents=[shared])
    g1.add_argument("file")
    g1.set_defaults(fn=_cmd_rankgrid)
    g2 = rg.add_parser("glue", parents=[shared])
    g2.add_argument("file")
    g2.add_argument("file2")
    g2.set_defaults(fn=_cmd_rankgrid)
    g3 = rg.add_parser("dim", parents=[shared])
    g3.add_argument("file", help="rank grid file or permutation expression")
    g3.add_argument("--genus", type=int, required=True)
    g3.set_defaults(fn=_cmd_rankgrid)

    sp = sub.add_parser("validate", parents=[shared])
    sp.add_argument("a", help="permutation expression or slipface file")
    sp.set_defaults(fn=_cmd_validate)

    sp = sub.add_parser("oracle", parents=[shared])
    oc = sp.add_subparsers(dest="action", required=True)
    o1 = oc.add_parser("eval", parents=[shared])
    o1.add_argument("a")
    o1.add_argument("x", type=int)
    o1.add_argument("y", type=int)
    o1.add_argument("--radius", type=int, default=256)
    o1.set_defaults(fn=_cmd_oracle)
    o2 = oc.add_parser("star", parents=[shared])
    o2.add_argument("a")
    o2.add_argument("b")
    o2.add_argument("--d", type=int, default=4)
    o2.set_defaults(fn=_cmd_oracle)

    return ap


def main(argv=None) -> int:
    global _EXTENDED
    args = _build_parser().parse_args(argv)
    args.json = bool(getattr(args, "json", None))
    args.max_window = getattr(args, "max_window", None)
    args.extended_checks = bool(getattr(args, "extended_checks", None))
    old_cap = get_max_window()
    if args.max_window:
        set_max_window(args.max_window)
    _EXTENDED = args.extended_checks
    try:
        return args.fn(args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 2
    except ResourceLimit as e:
        print(f"resource limit: {e}", file=sys.stderr)
        return 4
    except DemazError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    finally:
        # the cap is process-global; scope it to this invocation so
        # embedded callers are not left with a stale limit
        set_max_window(old_cap)


def entry() -> None:
    sys.exit(main())
