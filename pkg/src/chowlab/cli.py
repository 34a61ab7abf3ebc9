"""Command-line front end: poincare, presentation, decompose, annihilate, count, verify.

Structured output is JSON on stdout (UTF-8, newline-terminated, sorted
keys); human summaries go to stderr.  Exit codes: 0 all passed, 1 check
failure or resource error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import grassmann, motives, suites
from .algebra import F2, Z
from .errors import BudgetError, ChowlabError, UsageError
from .finitefields import (
    count_isotropic,
    count_singular,
    hermitian_space,
    orth_count_polynomial,
    trace_quadratic,
    witt_index_hermitian,
)
from .weil import build as build_weil


def _emit(data) -> None:
    sys.stdout.write(json.dumps(data, sort_keys=True) + "\n")


def _parse_element(ring, expr: str):
    """Parse a product expression like 'e2*e4^2' into a ring element."""
    elt = ring.one()
    expr = expr.strip()
    if expr in ("1", ""):
        return elt
    for factor in expr.split("*"):
        factor = factor.strip()
        if "^" in factor:
            name, _, power = factor.partition("^")
            e = int(power)
        else:
            name, e = factor, 1
        elt = elt * ring.monomial({name.strip(): e})
    return elt


def _cmd_poincare(args) -> int:
    kind = args.kind
    if kind == "essential":
        poly = motives.essential_poincare(args.a, args.b)
    elif kind == "maxorth":
        poly = grassmann.max_orth_ring(args.a).ring.poincare()
    elif kind == "quadric":
        poly = motives.split_quadric_poincare(args.a)
    elif kind == "orthcount":
        poly = orth_count_polynomial(args.a, args.b)
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown polynomial kind {kind!r}")
    _emit(poly.to_list())
    return 0


def _cmd_presentation(args) -> int:
    kind = args.kind
    if kind == "maxorth":
        ring = grassmann.max_orth_ring(args.a).ring
    elif kind == "prevmax":
        ring = grassmann.prev_max_orth_ring(args.a).ring
    elif kind == "oddquot":
        ring = grassmann.odd_quotient_ring(args.a)
    elif kind == "weil":
        if args.b is None:
            raise UsageError("weil presentation needs rank and truncation: weil R D")
        ring = build_weil(args.a, args.coefficients, args.b).ring
    else:  # pragma: no cover
        raise UsageError(f"unknown presentation kind {kind!r}")
    _emit(ring.to_json())
    return 0


def _cmd_decompose(args) -> int:
    n, r = args.n, args.r
    if args.witt is not None:
        motive = motives.witt_decompose_whole(n, r, args.witt)
    else:
        motive = motives.decompose_step(n, r)
    out = {
        "n": n,
        "r": r,
        "dim": motives.dim_unitary(n, r),
        "poincare": motives.essential_poincare(n, r).to_list(),
    }
    out.update(motive.to_json())
    _emit(out)
    return 0


def _cmd_annihilate(args) -> int:
    if args.ring == "maxorth":
        ring = grassmann.max_orth_ring(args.param).ring
    else:
        ring = grassmann.odd_quotient_ring(args.param)
    if args.element is not None:
        elt = _parse_element(ring, args.element)
    elif args.ring == "maxorth":
        if args.param % 2:
            raise UsageError("the canonical class needs an even rank; pass --element")
        top = args.param - 2
        elt = _parse_element(ring, "*".join(f"e{i}" for i in range(2, top + 1, 2)))
    else:
        elt = _parse_element(ring, "*".join(f"e{i}" for i in range(2, 2 * args.param + 1, 2)))
    ann = grassmann.annihilator(elt, ring)
    quotient = grassmann._quotient_poincare(ring, elt)
    _emit(
        {
            "ring": {"kind": args.ring, "param": args.param},
            "element": elt.to_pairs(),
            "annihilator_dims": [len(ann[d]) for d in range(ring.max_degree + 1)],
            "quotient_poincare": quotient.to_list(),
        }
    )
    return 0


def _load_form(args):
    if args.form is not None:
        raw = args.form
        if os.path.exists(raw):
            with open(raw, "r", encoding="utf-8") as fh:
                spec = json.load(fh)
        else:
            spec = json.loads(raw)
        p, diag = spec["p"], spec["diag"]
        if "n" in spec and spec["n"] != len(diag):
            raise UsageError("form spec n does not match the diagonal length")
        return p, diag
    if args.p is None or args.diag is None:
        raise UsageError("either --form or both --p and --diag are required")
    diag = [int(x) for x in args.diag.split(",") if x.strip() != ""]
    if args.n is not None and args.n != len(diag):
        raise UsageError("--n does not match the diagonal length")
    return args.p, diag


def _cmd_count(args) -> int:
    from .finitefields import _WITT_HERMITIAN_BUDGET, _WITT_QUADRATIC_BUDGET

    p, diag = _load_form(args)
    H = hermitian_space(p, diag)
    n = H.n
    if (args.r is None) == (args.m is None):
        raise UsageError("exactly one of --r and --m is required")
    if args.r is not None:
        budget = {"max_n": _WITT_HERMITIAN_BUDGET["n"], "p": list(_WITT_HERMITIAN_BUDGET["p"])}
        count = count_isotropic(H, args.r)
        predicted = (
            motives.essential_poincare(n, args.r)(p) if args.r <= n // 2 else 0
        )
        _emit(
            {
                "p": p,
                "n": n,
                "diag": list(H.diag),
                "r": args.r,
                "count": count,
                "predicted": predicted,
                "budget": budget,
            }
        )
    else:
        budget = {"max_dim": _WITT_QUADRATIC_BUDGET["dim"], "p": list(_WITT_QUADRATIC_BUDGET["p"])}
        Q = trace_quadratic(H)
        count = count_singular(Q, args.m)
        predicted = None
        if witt_index_hermitian(H) == n // 2 and n % 2 == 0:
            predicted = orth_count_polynomial(n, args.m)(p)
        _emit(
            {
                "p": p,
                "n": n,
                "diag": list(H.diag),
                "m": args.m,
                "count": count,
                "predicted": predicted,
                "budget": budget,
            }
        )
    return 0


def _cmd_verify(args) -> int:
    options = suites.SuiteOptions(
        max_n=args.max_n,
        max_p=args.max_p,
        max_degree=args.max_degree,
        max_r=args.max_r,
        parity=args.parity,
    )
    result = suites.run_suite(args.suite, options)
    _emit(result.to_json())
    failed = [c for c in result.cases if not c.passed]
    informational = [c for c in result.cases if c.informational]
    summary = (
        f"suite {result.suite}: {len(result.cases)} cases, "
        f"{len(result.cases) - len(failed)} passed, {len(failed)} failed"
    )
    if informational:
        summary += f" ({len(informational)} informational)"
    summary += f", {result.elapsed:.2f}s"
    print(summary, file=sys.stderr)
    for c in failed:
        print(f"  FAIL {c.id}: {c.details}", file=sys.stderr)
    return 0 if result.passed else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chowlab",
        description="Exact graded-ring, invariant-theory and finite-geometry workbench.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poincare", help="print a Poincare polynomial as a coefficient list")
    p.add_argument("kind", choices=("essential", "maxorth", "quadric", "orthcount"))
    p.add_argument("a", type=int, help="n (essential/quadric), N (maxorth/orthcount)")
    p.add_argument("b", type=int, nargs="?", help="r (essential) or m (orthcount)")
    p.set_defaults(func=_cmd_poincare, needs_b=("essential", "orthcount"))

    p = sub.add_parser("presentation", help="emit a ring presentation as JSON")
    p.add_argument("kind", choices=("maxorth", "prevmax", "oddquot", "weil"))
    p.add_argument("a", type=int, help="N (maxorth) or r (prevmax/oddquot/weil)")
    p.add_argument("b", type=int, nargs="?", help="truncation D (weil only)")
    p.add_argument("--coefficients", choices=(F2, Z), default=F2)
    p.set_defaults(func=_cmd_presentation)

    p = sub.add_parser("decompose", help="motive decomposition data for (n, r)")
    p.add_argument("n", type=int)
    p.add_argument("r", type=int)
    p.add_argument("--witt", type=int, default=None, help="apply the whole-motive recursion this many times")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("annihilate", help="annihilator dimensions and quotient Poincare polynomial")
    p.add_argument("ring", choices=("maxorth", "oddquot"))
    p.add_argument("param", type=int, help="N (maxorth) or r (oddquot)")
    p.add_argument("--element", default=None, help="product expression, e.g. 'e2*e4'")
    p.set_defaults(func=_cmd_annihilate)

    p = sub.add_parser("count", help="count isotropic/singular subspaces of a diagonal form")
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--diag", default=None, help="comma-separated diagonal entries")
    p.add_argument("--form", default=None, help="form-spec JSON (inline or a file path)")
    p.add_argument("--r", type=int, default=None, help="hermitian isotropic dimension")
    p.add_argument("--m", type=int, default=None, help="trace-form singular dimension")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("verify", help="run a named acceptance suite")
    p.add_argument("suite", choices=suites.SUITE_NAMES + ("all",))
    p.add_argument("--max-n", dest="max_n", type=int, default=4)
    p.add_argument("--max-p", dest="max_p", type=int, default=3)
    p.add_argument("--max-degree", dest="max_degree", type=int, default=6)
    p.add_argument("--max-r", dest="max_r", type=int, default=3)
    p.add_argument("--parity", choices=("even", "odd", "both"), default="both")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "poincare" and args.kind in ("essential", "orthcount") and args.b is None:
        parser.error(f"poincare {args.kind} needs two integer arguments")
    try:
        return args.func(args)
    except BudgetError as exc:
        print(f"resource error: {exc}", file=sys.stderr)
        return 1
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except ChowlabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
