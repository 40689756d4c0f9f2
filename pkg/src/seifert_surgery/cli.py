"""
Command line front end.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 the case analysis
found a surviving Seifert candidate, 4 internal cross-check failure.

Values that start with '-' must be attached with '=', e.g. ``--surgery=-3,-3``.
"""

import argparse
import csv
import io
import json
import os
import sys

from .algebra import LaurentPoly1, format_rational, parse_rational
from .dedekind import dedekind_S, dedekind_sum
from .errors import DomainError, InvariantViolation
from .lescop import DSequence, lescop_seifert_X, seifert_base_term, two_bridge_components
from .norms import diagonal_torsion_norm, fig8_alexander_2var, norm_d
from .presentations import (
    MPresentation,
    SeifertParams,
    XPresentation,
    coefficient_equation,
    euler_e,
    h1_group_from_linking,
    h1_order_M_alpha_beta_1,
    h1_order_X,
    lift_double_cover,
)
from .verifier import (
    KnotGateInput,
    _jsonable,
    check_inequality_24,
    run_case_analysis,
    survivors,
    sweep_parameters,
)

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_SURVIVOR, EXIT_INTERNAL = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _ints(text):
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}")


# -- commands --------------------------------------------------------------


def cmd_norm(args):
    if args.fig8_q is not None:
        F = fig8_alexander_2var(args.fig8_q)
        return {"poly": F.to_json(), "d": args.d, "norm": str(diagonal_torsion_norm(F, args.d))}
    if args.poly is None:
        raise UsageError("norm needs --poly or --fig8-q")
    f = LaurentPoly1.from_list(_ints(args.poly), args.offset)
    return {"poly": f.to_json(), "d": args.d, "norm": str(norm_d(f, args.d))}


def cmd_dedekind(args):
    return {"q": args.q, "p": args.p, "s": format_rational(dedekind_sum(args.q, args.p))}


def cmd_lescop_2bridge(args):
    D = DSequence(tuple(_ints(args.dseq)))
    parts = args.surgery.split(",")
    if len(parts) != 2:
        raise UsageError("--surgery needs two coefficients p1/q1,p2/q2")
    coeffs = []
    for part in parts:
        if "/" in part:
            p, q = part.split("/")
            coeffs.append((int(p), int(q)))
        else:
            coeffs.append((int(part), 1))
    comp = two_bridge_components(D, coeffs[0], coeffs[1])
    out = {"dseq": list(D.entries), "surgery": [f"{p}/{q}" for p, q in coeffs]}
    out.update(comp)
    return out


def _params(args):
    missing = [n for n in ("alpha", "beta", "q1", "q2", "q3") if getattr(args, n) is None]
    if missing:
        raise UsageError("missing " + ", ".join("--" + n for n in missing))
    return SeifertParams(args.alpha, args.beta, args.q1, args.q2, args.q3, args.esign)


def cmd_lescop_seifert(args):
    params = _params(args)
    if params.e_sign not in (1, -1):
        raise DomainError("--esign must be 1 or -1")
    return {
        **params.to_json(),
        "base": seifert_base_term(params.alpha, params.beta),
        "S": dedekind_S(params),
        "lambda": lescop_seifert_X(params),
    }


def cmd_h1(args):
    if args.matrix is not None:
        rows = [_ints(r) for r in args.matrix.split(";")]
        return {"matrix": rows, "invariant_factors": h1_group_from_linking(rows)}
    p = _params(args)
    x = XPresentation(p.alpha, p.beta, p.q1, p.q2, p.q3)
    order = h1_order_X(x)
    out = {
        **x.to_json(),
        "e": euler_e(x),
        "coefficient_equation": coefficient_equation(x),
        "h1_order_X": "infinite" if order == float("inf") else order,
    }
    if p.alpha == p.beta == 1:
        out["h1_order_M"] = h1_order_M_alpha_beta_1(p.q1, p.q2, p.q3)
    return out


def cmd_lift(args):
    p = _params(args)
    m = MPresentation(p.alpha, p.beta, p.q1, p.q2, p.q3)
    x = lift_double_cover(m)
    return {
        "M": m.to_json(),
        "M_coefficients": [f"{2 * m.alpha}/{m.q1}", f"{2 * m.beta}/{m.q2}", f"5/{m.q3}"],
        "X": x.to_json(),
        "X_coefficients": [f"{x.alpha}/{x.q1}", f"{x.beta}/{x.q2}", f"5/{x.q3}", f"5/{x.q3}"],
        "coefficient_equation": coefficient_equation(x),
        "homology_consistent": x.homology_consistent,
    }


def cmd_verify(args):
    if args.q is None or args.lambda_q is None or args.norm5 is None:
        raise UsageError("verify needs --q, --lambda and --norm5")
    try:
        norm5 = int(args.norm5)
    except ValueError:
        raise UsageError(f"--norm5 must be an integer, got {args.norm5!r}")
    inp = KnotGateInput(
        args.q,
        parse_rational(args.lambda_q),
        norm5,
        lescop_sigma_zero=not args.sigma_nonzero,
        alexander_ok=not args.alexander_mismatch,
    )
    traces = run_case_analysis(inp, max_beta=args.max_beta)
    surv = survivors(traces)
    report = {
        "q": inp.q,
        "lambda_q": inp.lambda_q,
        "norm5": str(inp.norm5),
        "ineq_24_holds": check_inequality_24(inp.norm5, inp.lambda_q),
        "candidates": len(traces),
        "verdict": "not Seifert-realizable" if not surv else "survivors found",
        "survivors": [t.to_json() for t in surv],
    }
    if args.traces:
        report["traces"] = [t.to_json() for t in traces]
    return report, (EXIT_SURVIVOR if surv else EXIT_OK)


def cmd_sweep(args):
    report = sweep_parameters(args.max_beta, workers=args.workers)
    if args.format == "csv":
        return [_trace_row(t) for t in report.traces]
    return report.to_json(include_traces=args.traces)


def _trace_row(t):
    row = {**t.candidate.to_json(), "verdict": t.verdict.value, "rule": t.rule.value}
    for key in ("lambda_X", "exact_lhs", "exact_rhs", "coarse_eliminates"):
        if key in t.witnesses:
            row[key] = t.witnesses[key]
    return row


def cmd_fig8_table(args):
    if args.q_min > args.q_max:
        raise UsageError("--q-min must not exceed --q-max")
    rows = []
    for q in range(args.q_min, args.q_max + 1):
        inp = KnotGateInput.figure_eight(q)
        rows.append(
            {
                "q": q,
                "lambda_q": inp.lambda_q,
                "norm5": str(inp.norm5),
                "ineq_24_holds": check_inequality_24(inp.norm5, inp.lambda_q),
            }
        )
    return rows


# -- output ----------------------------------------------------------------


def _flat(v):
    v = _jsonable(v)
    if isinstance(v, (dict, list)):
        return json.dumps(v, separators=(",", ":"))
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def render(result, fmt):
    data = _jsonable(result)
    if fmt == "json":
        return json.dumps(data, indent=2) + "\n"
    rows = data if isinstance(data, list) else [data]
    if fmt == "csv":
        buf = io.StringIO()
        fields = list(dict.fromkeys(k for r in rows for k in r))
        w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: _flat(r.get(k, "")) for k in fields})
        return buf.getvalue()
    lines = []
    for r in rows:
        lines.extend(f"{k}: {_flat(v)}" for k, v in r.items())
        if len(rows) > 1:
            lines.append("")
    return "\n".join(lines).rstrip("\n") + "\n"


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", metavar="FILE", help="write the report here instead of stdout")
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")

    pres = argparse.ArgumentParser(add_help=False)
    for name in ("alpha", "beta", "q1", "q2", "q3"):
        pres.add_argument(f"--{name}", type=int)
    pres.add_argument("--esign", type=int, default=1, help="sign of e, 1 or -1")

    parser = _Parser(prog="seifert-surgery", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("norm", parents=[common], help="cyclotomic norm |f|_d")
    p.add_argument("--poly", help="ascending coefficients, e.g. 1,-3,1")
    p.add_argument("--offset", type=int, default=0, help="exponent of the first coefficient")
    p.add_argument("--fig8-q", type=int, help="use the two-variable polynomial of D(1,-q,1) on the diagonal")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_norm)

    p = sub.add_parser("dedekind", parents=[common], help="Dedekind sum s(q, p)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(func=cmd_dedekind)

    p = sub.add_parser("lescop-2bridge", parents=[common], help="lambda of surgery on a 2-bridge link")
    p.add_argument("--dseq", required=True, help="a1,b1,...,an")
    p.add_argument("--surgery", required=True, help="p1/q1,p2/q2")
    p.set_defaults(func=cmd_lescop_2bridge)

    p = sub.add_parser("lescop-seifert", parents=[common, pres], help="lambda(X) of a Seifert candidate")
    p.set_defaults(func=cmd_lescop_seifert)

    p = sub.add_parser("h1", parents=[common, pres], help="first homology from a matrix or a presentation")
    p.add_argument("--matrix", help="rows separated by ';', e.g. -3,-2;-2,-3")
    p.set_defaults(func=cmd_h1)

    p = sub.add_parser("lift", parents=[common, pres], help="coefficients of the double cover X")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("verify", parents=[common], help="run the case analysis for one knot")
    p.add_argument("--q", type=int)
    p.add_argument("--lambda", dest="lambda_q", help="lambda_q(K) as num/den")
    p.add_argument("--norm5", help="|K|_(q,5) as a decimal integer")
    p.add_argument("--max-beta", type=int, default=50)
    p.add_argument("--sigma-nonzero", action="store_true", help="lambda(Sigma) != 0")
    p.add_argument("--alexander-mismatch", action="store_true", help="Delta_K is not t^2-3t+1")
    p.add_argument("--traces", action="store_true", help="include every candidate trace")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", parents=[common], help="evaluate every candidate up to --max-beta")
    p.add_argument("--max-beta", type=int, default=50)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--traces", action="store_true", help="include every candidate trace in JSON")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("fig8-table", parents=[common], help="lambda_q and |K|_(q,5) for the figure-eight")
    p.add_argument("--q-min", type=int, default=-10)
    p.add_argument("--q-max", type=int, default=10)
    p.set_defaults(func=cmd_fig8_table)
    return parser


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        result = args.func(args)
        code = EXIT_OK
        if isinstance(result, tuple):
            result, code = result
        text = render(result, args.format)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"malformed input: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolation as exc:
        print(f"internal cross-check failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        try:
            sys.stdout.write(text)
            sys.stdout.flush()
        except BrokenPipeError:
            # reader went away (e.g. piped into head)
            os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
    return code


if __name__ == "__main__":
    sys.exit(main())
