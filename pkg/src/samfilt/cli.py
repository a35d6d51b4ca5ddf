"""Command-line front end.

One binary with subcommands; filtrations come in as JSON files per the
grammar in the filtration module, results go out as exact scalars (and
as machine-readable JSON under --json; see the schemas module).

Exit codes: 0 ok, 2 parse error, 3 precondition violated, 4 an internal
limit (table horizon / witness bound) prevented any answer.  Undecided
*parts* of an otherwise computed answer (e.g. inconclusive monomials in
an integral closure level) are reported in-band and exit 0.
"""

from __future__ import annotations

import argparse
import json
import sys

from .equivalence import (
    OmegaOracle,
    projectively_equivalent,
    recover_valuations,
)
from .errors import (
    HorizonExceededError,
    ParseError,
    PreconditionError,
    SamfiltError,
)
from .exactnum import PlusInfinity, format_scalar, parse_scalar
from .filtration import (
    AtLeast,
    DiscreteValued,
    Filtration,
    bracket_twist,
    filtration_from_json,
    twist,
)
from .monomial import SupportPoly, monomial_str
from .multiplicity import (
    filtration_value,
    multiplicity_estimate,
    multiplicity_exact,
    saturation_check,
)
from .samuel import (
    ic_filtration,
    k_filtration,
    nubar,
    nubar_estimate,
    rees_graded_integral_1var,
    rees_integral_witness_1var,
)
from .valuation import MonomialValuation


def _load_filtration(path: str) -> Filtration:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError("cannot read %s: %s" % (path, exc)) from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            "%s: invalid JSON at line %d column %d: %s"
            % (path, exc.lineno, exc.colno, exc.msg)
        ) from exc
    return filtration_from_json(data)


def _parse_exponent(text: str):
    try:
        parts = [int(p) for p in text.split(",")]
    except ValueError as exc:
        raise ParseError("bad exponent list %r" % text) from exc
    if not parts or any(p < 0 for p in parts):
        raise ParseError("exponents must be nonnegative integers: %r" % text)
    return tuple(parts)


def _parse_alpha(text: str):
    val = parse_scalar(text)
    if isinstance(val, PlusInfinity) or val.sign() <= 0:
        raise ParseError("alpha must be a positive finite scalar: %r" % text)
    return val


def _monomial_arg(args, F: Filtration) -> SupportPoly:
    if args.monomial is None:
        raise ParseError("--monomial is required for this command")
    e = _parse_exponent(args.monomial)
    if len(e) != F.n:
        raise PreconditionError(
            "monomial has %d coordinates, filtration lives in %d variables"
            % (len(e), F.n)
        )
    return SupportPoly.monomial(e)


def _emit(args, text_lines, doc):
    if args.json:
        print(json.dumps(doc, sort_keys=True))
    else:
        for line in text_lines:
            print(line)
    return 0


def _levels_json(table):
    return [[m, table.level(m).to_json()] for m in range(1, table.horizon + 1)]


def _cmd_nu(args):
    F = _load_filtration(args.filtration)
    f = _monomial_arg(args, F)
    order = F.order(f)
    if isinstance(order, PlusInfinity):
        return _emit(args, ["inf"], {"command": "nu", "kind": "infinite", "value": None})
    if isinstance(order, AtLeast):
        return _emit(
            args,
            [">= %d" % order.bound],
            {"command": "nu", "kind": "at_least", "value": order.bound},
        )
    return _emit(args, [str(order)], {"command": "nu", "kind": "finite", "value": order})


def _cmd_nubar(args):
    F = _load_filtration(args.filtration)
    f = _monomial_arg(args, F)
    if args.n_max is not None:
        res = nubar_estimate(F, f, args.n_max)
    else:
        res = nubar(F, f)
    return _emit(args, [str(res)], {"command": "nubar", "result": res.to_json()})


def _twistlike(args, name, build):
    F = _load_filtration(args.filtration)
    alpha = _parse_alpha(args.alpha)
    G = build(F, alpha)
    lines = [json.dumps(G.to_json(), sort_keys=True)]
    doc = {"command": name, "filtration": G.to_json()}
    if args.m_max is not None:
        doc["levels"] = [[m, G.level(m).to_json()] for m in range(1, args.m_max + 1)]
        lines += ["I_%d = %s" % (m, G.level(m)) for m in range(1, args.m_max + 1)]
    return _emit(args, lines, doc)


def _cmd_twist(args):
    return _twistlike(args, "twist", twist)


def _cmd_bracket(args):
    def build(F, alpha):
        if not isinstance(F, DiscreteValued):
            raise PreconditionError(
                "bracket twist is defined for discrete valued filtrations"
            )
        return bracket_twist(F, alpha)

    return _twistlike(args, "bracket", build)


def _cmd_k(args):
    F = _load_filtration(args.filtration)
    if args.m_max is None:
        raise ParseError("--m-max is required for k")
    K = k_filtration(F, args.m_max)
    lines = ["K_%d = %s" % (m, K.level(m)) for m in range(1, args.m_max + 1)]
    doc = {
        "command": "k",
        "m_max": args.m_max,
        "levels": _levels_json(K),
        "filtration": K.to_json(),
    }
    return _emit(args, lines, doc)


def _cmd_ic(args):
    F = _load_filtration(args.filtration)
    if args.m_max is None:
        raise ParseError("--m-max is required for ic")
    res = ic_filtration(F, args.m_max, r_max=args.r_max)
    table = res.filtration
    lines = ["J_%d = %s" % (m, table.level(m)) for m in range(1, args.m_max + 1)]
    for m in sorted(res.inconclusive):
        monos = ", ".join(monomial_str(e) for e in res.inconclusive[m])
        lines.append(
            "inconclusive at m=%d: %s (in the saturation, no witness r <= %d)"
            % (m, monos, res.r_max)
        )
    doc = {
        "command": "ic",
        "m_max": args.m_max,
        "r_max": res.r_max,
        "levels": _levels_json(table),
        "filtration": table.to_json(),
        "inconclusive": [
            [m, [list(e) for e in res.inconclusive[m]]]
            for m in sorted(res.inconclusive)
        ],
    }
    return _emit(args, lines, doc)


def _cmd_equiv(args):
    F = _load_filtration(args.left)
    G = _load_filtration(args.right)
    if not isinstance(F, DiscreteValued) or not isinstance(G, DiscreteValued):
        raise PreconditionError("equiv expects two discrete valued filtrations")
    res = projectively_equivalent(F, G)
    if res.equivalent:
        lines = ["equivalent, alpha = %s" % format_scalar(res.alpha)]
    else:
        lines = [
            "not equivalent, counterexample monomial = %s"
            % monomial_str(res.counterexample)
        ]
    doc = {
        "command": "equiv",
        "equivalent": res.equivalent,
        "alpha": format_scalar(res.alpha) if res.equivalent else None,
        "counterexample": list(res.counterexample) if res.counterexample else None,
    }
    return _emit(args, lines, doc)


def _cmd_recover(args):
    F = _load_filtration(args.filtration)
    if not isinstance(F, DiscreteValued):
        raise PreconditionError("recover expects a discrete valued filtration")
    if args.degree_bound is None:
        raise ParseError("--degree-bound is required for recover")
    oracle = OmegaOracle.from_pairs(F.pairs)
    rep = recover_valuations(oracle, args.degree_bound)
    lines = [
        "w=%s a=%s" % (",".join(map(str, v.w)), format_scalar(a)) for v, a in rep
    ]
    return _emit(args, lines, {"command": "recover", "pairs": rep.to_json()})


def _cmd_mult(args):
    F = _load_filtration(args.filtration)
    exact = None
    if isinstance(F, DiscreteValued) and F.n <= 3:
        exact = multiplicity_exact(F)
    estimate = None
    series = None
    if args.n_max is not None:
        estimate, series = multiplicity_estimate(F, args.n_max)
    if exact is None and estimate is None:
        raise PreconditionError(
            "no exact path for this engine/dimension; pass --n-max for an estimate"
        )
    lines = []
    if exact is not None:
        lines.append("exact = %s" % format_scalar(exact))
    if estimate is not None:
        lines.append("estimate(n=%d) = %s" % (args.n_max, estimate))
    if series is not None and args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(series.to_csv())
        lines.append("series written to %s" % args.csv)
    doc = {
        "command": "mult",
        "exact": None if exact is None else format_scalar(exact),
        "estimate": None if estimate is None else str(estimate),
        "n_max": args.n_max,
        "series": None if series is None else series.to_json(),
    }
    return _emit(args, lines, doc)


def _cmd_val(args):
    F = _load_filtration(args.filtration)
    if args.valuation is None:
        raise ParseError("--valuation is required for val")
    v = MonomialValuation(_parse_exponent(args.valuation))
    n_max = args.n_max if args.n_max is not None else 20
    res = filtration_value(v, F, n_max)
    return _emit(args, [str(res)], {"command": "val", "result": res.to_json()})


def _cmd_sat(args):
    F = _load_filtration(args.filtration)
    n_max = args.n_max if args.n_max is not None else 10
    test_vals = []
    if args.test_vals:
        for chunk in args.test_vals.split(";"):
            test_vals.append(MonomialValuation(_parse_exponent(chunk)))
    report = saturation_check(F, test_vals, n_max)
    lines = [
        "valuations: "
        + "; ".join(
            "w=%s value=%s" % (",".join(map(str, v.w)), format_scalar(a))
            for v, a in zip(report.valuations, report.values)
        )
    ]
    for row in report.rows:
        lines.append(
            "n=%-4d contained=%-5s equal=%-5s Sat_n = %s"
            % (row.n, row.contained, row.equal, row.sat)
        )
    lines.append(
        "all levels equal to the saturation bound"
        if report.all_equal()
        else "strict at some level (see rows)"
    )
    return _emit(args, lines, {"command": "sat", "report": report.to_json()})


def _cmd_rees1(args):
    alpha = _parse_alpha(args.alpha)
    ok = rees_graded_integral_1var(alpha, args.c, args.ord, args.n)
    witness = rees_integral_witness_1var(alpha, args.c, args.ord, args.n)
    lines = ["integral (witness d=%d)" % witness if ok else "not integral"]
    doc = {"command": "rees1", "integral": ok, "witness": witness}
    return _emit(args, lines, doc)


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument(
        "--seed", type=int, default=None, help="accepted for reproducibility; "
        "all subcommands here are deterministic"
    )

    filt = argparse.ArgumentParser(add_help=False)
    filt.add_argument("--filtration", "-f", required=True, metavar="FILE",
                      help="filtration JSON file")

    p = argparse.ArgumentParser(
        prog="samfilt",
        description="Exact computations with filtrations of monomial ideals.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("nu", parents=[common, filt], help="order of a monomial")
    s.add_argument("--monomial", metavar="E1,E2,...")
    s.set_defaults(fn=_cmd_nu)

    s = sub.add_parser("nubar", parents=[common, filt],
                       help="asymptotic order of a monomial")
    s.add_argument("--monomial", metavar="E1,E2,...")
    s.add_argument("--n-max", type=int, default=None,
                   help="force the estimator with this power bound")
    s.set_defaults(fn=_cmd_nubar)

    s = sub.add_parser("twist", parents=[common, filt],
                       help="reindex levels by ceil(alpha * m)")
    s.add_argument("--alpha", required=True)
    s.add_argument("--m-max", type=int, default=None, help="also print levels")
    s.set_defaults(fn=_cmd_twist)

    s = sub.add_parser("bracket", parents=[common, filt],
                       help="scale the defining values by alpha (discrete valued)")
    s.add_argument("--alpha", required=True)
    s.add_argument("--m-max", type=int, default=None, help="also print levels")
    s.set_defaults(fn=_cmd_bracket)

    s = sub.add_parser("k", parents=[common, filt],
                       help="saturated filtration levels {nubar >= m}")
    s.add_argument("--m-max", type=int, required=True)
    s.set_defaults(fn=_cmd_k)

    s = sub.add_parser("ic", parents=[common, filt],
                       help="graded integral closure levels")
    s.add_argument("--m-max", type=int, required=True)
    s.add_argument("--r-max", type=int, default=12,
                   help="integrality witness search bound (default 12)")
    s.set_defaults(fn=_cmd_ic)

    s = sub.add_parser("equiv", parents=[common],
                       help="projective equivalence of two filtrations")
    s.add_argument("--left", required=True, metavar="FILE")
    s.add_argument("--right", required=True, metavar="FILE")
    s.set_defaults(fn=_cmd_equiv)

    s = sub.add_parser("recover", parents=[common, filt],
                       help="recover the canonical valuations from order data")
    s.add_argument("--degree-bound", type=int, required=True)
    s.set_defaults(fn=_cmd_recover)

    s = sub.add_parser("mult", parents=[common, filt],
                       help="multiplicity (exact and/or estimated)")
    s.add_argument("--n-max", type=int, default=None)
    s.add_argument("--csv", metavar="FILE", default=None,
                   help="write the colength series as CSV")
    s.set_defaults(fn=_cmd_mult)

    s = sub.add_parser("val", parents=[common, filt],
                       help="value of a monomial valuation along the filtration")
    s.add_argument("--valuation", metavar="W1,W2,...")
    s.add_argument("--n-max", type=int, default=None)
    s.set_defaults(fn=_cmd_val)

    s = sub.add_parser("sat", parents=[common, filt],
                       help="compare levels with the valuation saturation bound")
    s.add_argument("--test-vals", metavar="W1,W2;W1,W2", default=None)
    s.add_argument("--n-max", type=int, default=None)
    s.set_defaults(fn=_cmd_sat)

    s = sub.add_parser("rees1", parents=[common],
                       help="one-variable graded integrality test")
    s.add_argument("--alpha", required=True)
    s.add_argument("--c", type=int, required=True)
    s.add_argument("--ord", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(fn=_cmd_rees1)

    return p


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return 2
    except HorizonExceededError as exc:
        print("limit reached: %s" % exc, file=sys.stderr)
        return 4
    except PreconditionError as exc:
        print("precondition error: %s" % exc, file=sys.stderr)
        return 3
    except SamfiltError as exc:  # pragma: no cover - catch-all for new errors
        print("error: %s" % exc, file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
