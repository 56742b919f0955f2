"""Command-line front end.

Subcommands: bound-solve, fekete, graph-case, graph-family, search-pairs,
refine-pair, polytope, datasets, reproduce-all.  Reports go to stdout or
--out, in text, json or csv form, and are byte-identical across runs and
worker counts for the same configuration.

Exit codes: 0 success, 1 reproduction mismatch, 2 undecidable at the
precision cap, 3 usage error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import balls
from .balls import Const, E, Expr, ExpNode, Ln, PI, Pow, Sin, Sqrt
from .bounds import BoundProblem, solve
from .errors import GroundboundError, UndecidableError
from .fields import RealCyclotomicField
from .report import Record, Report, case_table_csv, pair_table_lines
from .reproduce import RunConfig, reproduce_all

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_UNDECIDABLE = 2
EXIT_USAGE = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# -- tiny expression parser ---------------------------------------------------
#
# grammar: expr := term (('+'|'-') term)* ; term := factor (('*'|'/') factor)*
#          factor := atom ['^' '(' rational ')' | '^' integer]
#          atom := number | 'pi' | 'e' | func '(' expr ')' | '(' expr ')'


def parse_expr(text: str) -> Expr:
    tokens = _tokenize(text)
    expr, pos = _parse_sum(tokens, 0)
    if pos != len(tokens):
        raise UsageError(f"trailing input in expression: {tokens[pos:]}")
    return expr


def _tokenize(text: str) -> list[str]:
    out, i = [], 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "+-*/^()":
            out.append(ch)
            i += 1
        elif ch.isdigit() or ch == ".":
            j = i
            while j < len(text) and (text[j].isdigit() or text[j] == "."):
                j += 1
            out.append(text[i:j])
            i = j
        elif ch.isalpha():
            j = i
            while j < len(text) and text[j].isalpha():
                j += 1
            out.append(text[i:j])
            i = j
        else:
            raise UsageError(f"bad character {ch!r} in expression")
    return out


def _parse_sum(tokens, pos):
    expr, pos = _parse_term(tokens, pos)
    while pos < len(tokens) and tokens[pos] in "+-":
        op = tokens[pos]
        rhs, pos = _parse_term(tokens, pos + 1)
        expr = expr + rhs if op == "+" else expr - rhs
    return expr, pos


def _parse_term(tokens, pos):
    expr, pos = _parse_factor(tokens, pos)
    while pos < len(tokens) and tokens[pos] in "*/":
        op = tokens[pos]
        rhs, pos = _parse_factor(tokens, pos + 1)
        expr = expr * rhs if op == "*" else expr / rhs
    return expr, pos


def _parse_factor(tokens, pos):
    expr, pos = _parse_atom(tokens, pos)
    if pos < len(tokens) and tokens[pos] == "^":
        pos += 1
        if tokens[pos] == "(":
            num, pos = _expect_number(tokens, pos + 1)
            exponent = Fraction(num)
            if pos < len(tokens) and tokens[pos] == "/":
                den, pos = _expect_number(tokens, pos + 1)
                exponent /= Fraction(den)
            if tokens[pos] != ")":
                raise UsageError("expected ')' after exponent")
            pos += 1
        else:
            num, pos = _expect_number(tokens, pos)
            exponent = Fraction(num)
        expr = Pow(expr, exponent)
    return expr, pos


def _expect_number(tokens, pos):
    tok = tokens[pos]
    neg = False
    if tok == "-":
        neg = True
        pos += 1
        tok = tokens[pos]
    if not (tok[0].isdigit() or tok[0] == "."):
        raise UsageError(f"expected a number, got {tok!r}")
    value = Fraction(tok)
    return (-value if neg else value), pos + 1


_FUNCS = {"sqrt": Sqrt, "ln": Ln, "exp": ExpNode, "sin": Sin}


def _parse_atom(tokens, pos):
    tok = tokens[pos]
    if tok == "(":
        expr, pos = _parse_sum(tokens, pos + 1)
        if pos >= len(tokens) or tokens[pos] != ")":
            raise UsageError("unbalanced parentheses")
        return expr, pos + 1
    if tok == "-":
        expr, pos = _parse_atom(tokens, pos + 1)
        return -expr, pos
    if tok == "pi":
        return PI, pos + 1
    if tok == "e":
        return E, pos + 1
    if tok in _FUNCS:
        if tokens[pos + 1] != "(":
            raise UsageError(f"{tok} needs parentheses")
        inner, newpos = _parse_sum(tokens, pos + 2)
        if tokens[newpos] != ")":
            raise UsageError("unbalanced parentheses")
        return _FUNCS[tok](inner), newpos + 1
    if tok[0].isdigit() or tok[0] == ".":
        return Const(Fraction(tok)), pos + 1
    raise UsageError(f"unexpected token {tok!r}")


# -- field names ----------------------------------------------------------------

_FIELD_NAMES = {
    "Q": (), "sqrt2": (8,), "sqrt3": (12,), "sqrt5": (5,),
}


def _field_from_name(name: str) -> RealCyclotomicField:
    if name not in _FIELD_NAMES:
        raise UsageError(f"unknown field {name!r}; choose from {sorted(_FIELD_NAMES)}")
    return RealCyclotomicField(_FIELD_NAMES[name])


# -- subcommand implementations ---------------------------------------------------


def _cmd_bound_solve(args) -> Report:
    problem = BoundProblem(
        m_field_degree=args.M,
        b_disc_root=parse_expr(args.B),
        r_ratio=parse_expr(args.R),
        s_factor=parse_expr(args.S),
        exceptional_count=args.m,
    )
    result = solve(problem, precision_cap=args.precision_cap)
    report = Report(title="least-N bound solve")
    report.add_section("solve", [Record(
        pipeline="bound-solve", case=f"M={args.M}, m={args.m}",
        inputs={"B": problem.b_disc_root, "R": problem.r_ratio, "S": problem.s_factor},
        result=result.least_n, paper_expected=None, match=None,
        note=f"degree bound N*M/m = {result.degree_bound}; "
             "inequality: N ln(1/R) - M ln(2N+2) - ln B >= ln S",
    )])
    return report


def _cmd_fekete(args) -> Report:
    from .fekete import find_small_polynomial

    field = _field_from_name(args.field)
    embeddings = field.embeddings()
    raw = [tuple(Fraction(x) for x in item.split(",")) for item in args.interval]
    if len(raw) != len(embeddings):
        raise UsageError(f"field {args.field} needs {len(embeddings)} interval(s)")
    intervals = dict(zip(embeddings, raw))
    cert = find_small_polynomial(field, intervals, args.degree)
    report = Report(title="small-polynomial certificate")
    rows = []
    for emb, sup in zip(embeddings, cert.sup_bounds):
        rows.append(Record(
            pipeline="fekete", case=f"embedding {emb.representative} mod {field.n}",
            inputs={"sup_bound": balls.AlgConst(sup),
                    "theoretical_bound": cert.theoretical_bound},
            result="certified", paper_expected=None, match=None))
    rows.append(Record(pipeline="fekete", case="coefficients (integral basis coords)",
                       inputs={}, result=str(cert.alpha), paper_expected=None, match=None,
                       note="sup bound = sum_k |A_k| over the exact Chebyshev expansion"))
    report.add_section("certificate", rows)
    return report


def _cmd_graph_case(args) -> Report:
    from .graphs import EdgeGraphCase, Family, Variant, case_bound

    family = Family[args.family.upper()]
    case = EdgeGraphCase(family, s=args.s, k=args.k, r=args.r, p=args.p)
    variant = Variant(args.variant) if args.variant else None
    row = case_bound(case, variant, m=args.m)
    report = Report(title=f"graph case {case.label()}")
    inputs = {}
    if row.problem is not None:
        inputs = {"M": row.problem.m_field_degree, "B": row.problem.b_disc_root,
                  "R": row.problem.r_ratio, "S": row.problem.s_factor}
    report.add_section("case", [Record(
        pipeline="graph-case", case=case.label(), inputs=inputs,
        result=row.bound, paper_expected=row.published_bound, match=row.match,
        note=f"mechanism={row.mechanism}, least N={row.least_n}")])
    return report


def _cmd_graph_family(args) -> Report:
    from .graphs import Family, family_bound
    from .reproduce import family_records

    family = Family[args.family.upper()]
    k_range = None
    if args.kmin is not None or args.kmax_family is not None:
        k_range = range(args.kmin or 2, (args.kmax_family or 6) + 1)
    table = family_bound(family, k_range)
    report = Report(title=f"family table {family.value}")
    report.add_section(f"family {family.value}", family_records(table))
    if args.case_csv:
        with open(args.case_csv, "w") as fh:
            fh.write(case_table_csv(table.rows))
    return report


def _cmd_search_pairs(args) -> Report:
    from .pairs import PairKind, search

    kind = PairKind[args.kind.upper()]
    result = search(kind, k_max=args.kmax, jobs=args.jobs)
    report = Report(title=f"pair search {kind.value}, k <= {args.kmax}")
    rows = [Record(pipeline="search-pairs", case="survivors", inputs={},
                   result=len(result.survivors), paper_expected=None, match=None),
            Record(pipeline="search-pairs", case="max surviving k", inputs={},
                   result=max((r.k for r in result.survivors), default=0),
                   paper_expected=None, match=None)]
    report.add_section("search", rows)
    if args.pairs_out:
        with open(args.pairs_out, "w") as fh:
            fh.write("\n".join(pair_table_lines(result.survivors)) + "\n")
    else:
        report.add_section("surviving pairs", [
            Record(pipeline="search-pairs", case=f"(k={r.k}, s={r.s})",
                   inputs={"bound_KF": r.bound_kf, "bound_K": r.bound_k,
                           "refined_KF": r.refined_kf},
                   result=r.final_bound, paper_expected=r.published_final,
                   match=None if r.published_final is None else r.final_bound == r.published_final)
            for r in result.survivors])
    return report


def _cmd_refine_pair(args) -> Report:
    from .pairs import PairKind, pair_report

    kind = PairKind[args.kind.upper()]
    r = pair_report(args.k, args.s, kind, refine_above=0)
    report = Report(title=f"pair refinement ({args.k}, {args.s})")
    note = ""
    if r.published_bound_kf is not None and not r.intermediates_match:
        note = (f"formula intermediates ({r.bound_kf}, {r.bound_k}) diverge from "
                f"printed ({r.published_bound_kf}, {r.published_bound_k})")
    report.add_section("refine", [Record(
        pipeline="refine-pair", case=f"(k={r.k}, s={r.s})",
        inputs={"field_degree": r.field_degree, "bound_KF": r.bound_kf,
                "bound_K": r.bound_k, "refined_KF": r.refined_kf},
        result=r.final_bound, paper_expected=r.published_final,
        match=None if r.published_final is None else r.final_bound == r.published_final,
        note=note)])
    return report


def _cmd_polytope(args) -> Report:
    from .reproduce import fuchsian_records, polytope_records

    report = Report(title="polytope and Fuchsian bounds")
    report.add_section("dimension elimination", polytope_records(args.nmax))
    report.add_section("Fuchsian bounds", fuchsian_records())
    if args.verbose:
        from .polytopes import counting_chain

        rows = []
        for n in range(8, 13):
            chain = counting_chain(n)
            rows.append(Record(
                pipeline="polytope", case=f"counting chain at n={n}",
                inputs={k: v for k, v in chain.items() if k != "holds"},
                result="holds" if chain["holds"] else "fails",
                paper_expected=None, match=None))
        report.add_section("counting-argument intermediates", rows)
    return report


def _cmd_datasets(args) -> Report:
    from .reproduce import dataset_records

    report = Report(title="static datasets")
    report.add_section("datasets", dataset_records())
    return report


def _cmd_reproduce_all(args) -> Report:
    config = RunConfig(k_max=args.kmax, jobs=args.jobs,
                       precision_cap_bits=args.precision_cap)
    return reproduce_all(config)


# -- driver --------------------------------------------------------------------


def build_parser() -> _Parser:
    parser = _Parser(prog="groundbound",
                     description="certified degree bounds for reflection-group ground fields")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--out", default=None, help="write the report to PATH")
    common.add_argument("--precision-cap", type=int, default=4096)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("bound-solve", help="solve the least-N inequality", parents=[common])
    p.add_argument("--M", type=int, required=True)
    p.add_argument("--B", required=True)
    p.add_argument("--R", required=True)
    p.add_argument("--S", required=True)
    p.add_argument("--m", type=int, default=1)
    p.set_defaults(func=_cmd_bound_solve)

    p = sub.add_parser("fekete", help="construct a small-sup-norm integer polynomial", parents=[common])
    p.add_argument("--field", default="Q")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--interval", action="append", required=True,
                   help="a,b (repeat once per embedding)")
    p.set_defaults(func=_cmd_fekete)

    p = sub.add_parser("graph-case", help="bound one edge-graph case", parents=[common])
    p.add_argument("--family", required=True, choices=("g1", "g2", "g3", "g4", "g5"))
    p.add_argument("--s", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--variant", choices=("u", "u_squared", "u_tilde"))
    p.add_argument("--m", type=int, default=1)
    p.set_defaults(func=_cmd_graph_case)

    p = sub.add_parser("graph-family", help="bound table for one family", parents=[common])
    p.add_argument("--family", required=True, choices=("g1", "g2", "g3", "g4", "g5"))
    p.add_argument("--kmin", type=int)
    p.add_argument("--kmax-family", type=int)
    p.add_argument("--case-csv", help="also write the per-case CSV table to PATH")
    p.set_defaults(func=_cmd_graph_family)

    p = sub.add_parser("search-pairs", help="global Method-B pair search", parents=[common])
    p.add_argument("--kind", required=True, choices=("gamma4", "gamma5"))
    p.add_argument("--kmax", type=int, default=10**7)
    p.add_argument("--pairs-out", help="write the machine-readable pair report to PATH")
    p.set_defaults(func=_cmd_search_pairs)

    p = sub.add_parser("refine-pair", help="Method-A refinement for one pair", parents=[common])
    p.add_argument("--kind", required=True, choices=("gamma4", "gamma5"))
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.set_defaults(func=_cmd_refine_pair)

    p = sub.add_parser("polytope", help="dimension elimination and Fuchsian bounds", parents=[common])
    p.add_argument("--nmax", type=int, default=10**4)
    p.set_defaults(func=_cmd_polytope)

    p = sub.add_parser("datasets", help="verify the static datasets", parents=[common])
    p.set_defaults(func=_cmd_datasets)

    p = sub.add_parser("reproduce-all", help="run the full reproduction suite", parents=[common])
    p.add_argument("--kmax", type=int, default=10**7)
    p.set_defaults(func=_cmd_reproduce_all)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        print("run with --help for usage", file=sys.stderr)
        return EXIT_USAGE
    try:
        report = args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UndecidableError as exc:
        print(f"undecidable at the precision cap: {exc}", file=sys.stderr)
        return EXIT_UNDECIDABLE
    except GroundboundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = report.render(args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_MISMATCH if report.mismatch_count else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
