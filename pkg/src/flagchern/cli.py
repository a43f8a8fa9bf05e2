"""Command-line interface.

Subcommands: roots, decompose, acs, chern, table, groebner, cohomology,
verify.  Output formats: markdown (default), CSV, JSON (big integers as
decimal strings).  Exit codes: 0 ok, 1 usage error, 2 verification mismatch,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import cohomology, tables
from .chern import (chern_number_nf, chern_numbers, format_cmonomial,
                    parse_cmonomial, todd_genus, todd_polynomial)
from .flagmodel import (InvariantACS, classify_acs, enumerate_acs,
                        is_integrable, make_flag, parse_manifold)
from .groebner import MonomialOrder, buchberger, borel_generators, quotient_dimension
from .polyring import Polynomial
from .rootsys import build_root_system, weyl_group

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_INTERNAL = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 on usage errors (argparse default is 2)
        raise UsageError(message)


# -- output helpers -----------------------------------------------------------

def _emit_table(fmt: str, title: str, headers: list[str],
                rows: list[list[str]], out) -> None:
    if fmt == "md":
        if title:
            out.write(f"## {title}\n")
        out.write("| " + " | ".join(headers) + " |\n")
        out.write("|" + "---|" * len(headers) + "\n")
        for r in rows:
            out.write("| " + " | ".join(r) + " |\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(headers)
        w.writerows(rows)
    else:
        json.dump({"title": title, "headers": headers, "rows": rows},
                  out, indent=1, sort_keys=True)
        out.write("\n")


def _dump_json(obj, out) -> None:
    json.dump(obj, out, indent=1, sort_keys=True)
    out.write("\n")


def _vec_str(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def _parse_signs(text: str, expected: int) -> InvariantACS:
    parts = [p.strip() for p in text.split(",")]
    signs = []
    for p in parts:
        if p in ("+", "+1", "1"):
            signs.append(1)
        elif p in ("-", "-1"):
            signs.append(-1)
        else:
            raise UsageError(f"bad sign {p!r} in --acs (use +/-)")
    if len(signs) != expected:
        raise UsageError(f"--acs has {len(signs)} signs; the manifold has "
                         f"{expected} isotropy summands")
    return InvariantACS(tuple(signs))


def _flag_from_args(args) -> "FlagManifold":
    if getattr(args, "manifold", None):
        return parse_manifold(args.manifold)
    if not args.family or args.rank is None:
        raise UsageError("give a manifold name or --family/--rank")
    rs = build_root_system(args.family, args.rank)
    theta_spec = getattr(args, "theta", None)
    if theta_spec is None:
        theta = []
    else:
        mode, _, items = theta_spec.partition("=")
        idx = [int(i) for i in items.split(",")] if items else []
        for i in idx:
            if not 1 <= i <= args.rank:
                raise UsageError(f"simple-root index {i} out of range 1..{args.rank}")
        if mode == "keep":
            theta = [rs.simples[i - 1] for i in range(1, args.rank + 1)
                     if i in idx]
        elif mode == "remove":
            theta = [rs.simples[i - 1] for i in range(1, args.rank + 1)
                     if i not in idx]
        else:
            raise UsageError("--theta must look like keep=1,2 or remove=1,3")
    return make_flag(rs, theta)


# -- subcommands --------------------------------------------------------------

def cmd_roots(args, out) -> int:
    rs = build_root_system(args.family, args.rank)
    if args.format == "json":
        data = rs.to_json()
        data["weyl_order"] = len(weyl_group(rs))
        _dump_json(data, out)
        return EXIT_OK
    rows = [[f"alpha_{i+1}", _vec_str(a)] for i, a in enumerate(rs.simples)]
    _emit_table(args.format, f"Simple roots of {rs.family}{rs.rank}",
                ["simple root", "coordinates"], rows, out)
    rows = [[str(i + 1), _vec_str(a), str(rs.height(a))]
            for i, a in enumerate(rs.positives)]
    _emit_table(args.format, "Positive roots",
                ["#", "coordinates", "height"], rows, out)
    if args.format == "md":
        out.write(f"\nWeyl group order: {len(weyl_group(rs))}\n")
    return EXIT_OK


def cmd_decompose(args, out) -> int:
    flag = _flag_from_args(args)
    summands = flag.summands()
    s = len(summands)
    meta = {
        "manifold": flag.name(),
        "complex_dim": flag.complex_dim,
        "euler_characteristic": flag.euler_characteristic(),
        "n_summands": s,
        "n_acs_up_to_conjugation": 2 ** (s - 1),
    }
    rows = [[str(i + 1), _vec_str(m.t_root), str(m.dim_complex),
             str(m.height)] for i, m in enumerate(summands)]
    if args.format == "json":
        meta["summands"] = [
            {"index": i + 1, "t_root": [str(x) for x in m.t_root],
             "dim_complex": m.dim_complex, "height": str(m.height),
             "roots": [[str(x) for x in r] for r in m.roots]}
            for i, m in enumerate(summands)]
        _dump_json(meta, out)
        return EXIT_OK
    if args.format == "md":
        out.write(f"## Isotropy decomposition of {flag.name()}\n")
        for k, v in meta.items():
            out.write(f"- {k}: {v}\n")
    _emit_table(args.format, "", ["summand", "T-root", "dim_C", "height"],
                rows, out)
    return EXIT_OK


def cmd_acs(args, out) -> int:
    flag = parse_manifold(args.manifold)
    if args.action == "list":
        rows = []
        for acs in enumerate_acs(flag):
            rows.append([acs.label(),
                         "yes" if is_integrable(flag, acs) else "no"])
        if args.format == "json":
            _dump_json({"manifold": flag.name(),
                        "structures": [{"signs": r[0], "integrable": r[1] == "yes"}
                                       for r in rows]}, out)
        else:
            _emit_table(args.format,
                        f"Invariant structures on {flag.name()} "
                        f"(up to conjugation)",
                        ["signs", "integrable"], rows, out)
        return EXIT_OK
    # classify
    classes = classify_acs(flag)
    rows = []
    for i, cls in enumerate(classes):
        rows.append([str(i + 1), cls.representative.label(),
                     str(cls.size), "yes" if cls.integrable else "no",
                     " ".join(m.label() for m in cls.members)])
    if args.format == "json":
        _dump_json({"manifold": flag.name(), "n_classes": len(classes),
                    "classes": [{"representative": c.representative.label(),
                                 "size": c.size,
                                 "integrable": c.integrable,
                                 "members": [m.label() for m in c.members]}
                                for c in classes]}, out)
    else:
        _emit_table(args.format,
                    f"Equivalence classes of invariant structures on "
                    f"{flag.name()}",
                    ["class", "representative", "size", "integrable",
                     "members"], rows, out)
    return EXIT_OK


def cmd_chern(args, out) -> int:
    flag = parse_manifold(args.manifold)
    s = len(flag.summands())
    acs = _parse_signs(args.acs, s) if args.acs else InvariantACS((1,) * s)
    results = {}
    if args.numbers:
        monos = [parse_cmonomial(m.strip(), flag.complex_dim)
                 for m in args.numbers.split(",")]
    else:
        top = [0] * (flag.complex_dim - 1) + [1]
        monos = [tuple(top)]
    if args.oracle in ("weyl", "both"):
        nums = chern_numbers(flag, acs, monos, jobs=args.jobs)
        results = {m: nums[m] for m in monos}
    if args.oracle in ("groebner", "both"):
        nf = {m: chern_number_nf(flag, acs, m) for m in monos}
        if args.oracle == "groebner":
            results = nf
        elif nf != results:
            raise ArithmeticError(
                f"oracle disagreement on {flag.name()} {acs.label()}: "
                f"{results} vs {nf}")
    rows = [[format_cmonomial(m), str(results[m])] for m in monos]
    genus = todd_genus(flag, acs, jobs=args.jobs) if args.todd else None
    if args.format == "json":
        data = {"manifold": flag.name(), "acs": acs.label(),
                "oracle": args.oracle,
                "numbers": {format_cmonomial(m): str(v)
                            for m, v in results.items()}}
        if genus is not None:
            data["todd_genus"] = str(genus)
        _dump_json(data, out)
        return EXIT_OK
    _emit_table(args.format,
                f"Chern numbers on {flag.name()}, structure {acs.label()}",
                ["monomial", "value"], rows, out)
    if genus is not None and args.format == "md":
        out.write(f"\nTodd genus: {genus}\n")
    return EXIT_OK


def cmd_table(args, out) -> int:
    if args.action == "list":
        for tid in tables.table_ids():
            out.write(tid + "\n")
        return EXIT_OK
    results = tables.reproduce(args.table_id, jobs=args.jobs,
                               oracle=args.oracle, slow=args.slow)
    if args.format == "json":
        _dump_json(tables.to_json_obj(results), out)
    elif args.format == "csv":
        out.write(tables.to_csv(results))
    else:
        out.write(tables.to_markdown(results))
    if not all(r.ok for r in results):
        return EXIT_MISMATCH
    return EXIT_OK


_GB_PRESETS = ("borel:<family>:<rank> (e.g. borel:A:3, borel:D:3), so6, "
               "proj-tangent:<n>, or a JSON file")


def _load_ideal(spec: str):
    kind, _, rest = spec.partition(":")
    if kind == "borel":
        fam, _, rk = rest.partition(":")
        if not fam or not rk:
            raise UsageError(f"--ideal borel needs family:rank; got {spec!r}")
        return borel_generators(fam.upper(), int(rk))
    if spec == "so6":
        return borel_generators("D", 3)
    if kind == "proj-tangent":
        case = cohomology.projectivized_tangent_presentation(int(rest))
        return list(case.generators)
    try:
        with open(spec) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"--ideal: not a preset ({_GB_PRESETS}) and not a "
                         f"readable file: {exc}")
    nvars = data["nvars"]
    return [Polynomial.from_json(nvars, g) for g in data["generators"]]


def cmd_groebner(args, out) -> int:
    gens = _load_ideal(args.ideal)
    nvars = gens[0].nvars
    order = MonomialOrder(args.order, tuple(range(nvars)))
    gb = buchberger(gens, order)
    try:
        qdim = quotient_dimension(gb, nvars)
    except ValueError:
        qdim = None
    if args.format == "json":
        _dump_json({"ideal": args.ideal, "order": args.order,
                    "basis": [g.to_json() for g in gb.generators],
                    "basis_strings": [str(g) for g in gb.generators],
                    "quotient_dimension": qdim}, out)
        return EXIT_OK
    rows = [[str(i + 1), str(g)] for i, g in enumerate(gb.generators)]
    _emit_table(args.format,
                f"Reduced Groebner basis of {args.ideal} ({args.order})",
                ["#", "polynomial"], rows, out)
    if args.format == "md" and qdim is not None:
        out.write(f"\nQuotient dimension: {qdim}\n")
    return EXIT_OK


def cmd_cohomology(args, out) -> int:
    case = cohomology.presentation_case(args.case)
    summary = cohomology.verify_case(case)
    status = "PASS" if summary["ok"] else "FAIL"
    if args.format == "json":
        data = {k: (str(v) if isinstance(v, Fraction) else v)
                for k, v in summary.items()}
        data["status"] = status
        _dump_json(data, out)
    else:
        out.write(f"{status} {case.name}\n")
        for k, v in summary.items():
            if k != "case":
                out.write(f"  {k}: {v}\n")
    return EXIT_OK if summary["ok"] else EXIT_MISMATCH


def cmd_verify(args, out) -> int:
    """Run the end-to-end verification sweep (non-slow tables by default)."""
    failures = []

    def check(name, ok):
        out.write(f"{'PASS' if ok else 'FAIL'} {name}\n")
        if not ok:
            failures.append(name)

    scope = args.scope
    if scope not in ("all", "quick"):
        raise UsageError("verify scope must be 'all' or 'quick'")
    quick_tables = ["tab5", "tabso1", "tabg21", "tabg22", "so5t", "sp2t",
                    "g2t", "so8u4", "so7u3"]
    table_list = tables.table_ids() if scope == "all" else quick_tables
    # drop aliases/groups so each table runs once
    reg = tables.load_registry()
    table_list = [t for t in table_list if t in reg["tables"]]
    for tid in sorted(table_list):
        res = tables.reproduce(tid, jobs=args.jobs, oracle=args.oracle,
                               slow=args.slow)
        for r in res:
            ann = r.n_annotated
            check(f"table {r.table_id} (annotated cells: {ann})", r.ok)
    for tag in cohomology.CASE_EXAMPLES:
        summary = cohomology.verify_case(cohomology.presentation_case(tag))
        check(f"cohomology {tag}", summary["ok"])
    # Todd genus = 1 on canonical structures of the small manifolds
    genus_list = (["F(3;1,1,1)", "FD(3;1,2)", "G2-short"] if scope == "quick"
                  else ["F(3;1,1,1)", "F(4)", "FD(3;1,2)", "FD(4;1,3)",
                        "G2-long", "G2-short", "SO(5)/T", "Sp(2)/T"])
    for name in genus_list:
        flag = parse_manifold(name)
        g = todd_genus(flag, InvariantACS((1,) * len(flag.summands())),
                       jobs=args.jobs)
        check(f"todd genus 1 on {name}", g == 1)
    # projective-space sanity oracle
    for n in range(1, 5):
        rs = build_root_system("A", n)
        flag = make_flag(rs, rs.simples[1:])
        v = chern_numbers(flag, InvariantACS((1,)), [(n,) + (0,) * (n - 1)],
                          jobs=args.jobs)
        ok = (list(v.values())[0] == (n + 1) ** n
              and flag.euler_characteristic() == n + 1)
        check(f"projective space CP^{n}: c1^{n} = {(n + 1) ** n}, "
              f"chi = {n + 1}", ok)
    out.write(f"\n{len(failures)} failure(s)\n")
    return EXIT_MISMATCH if failures else EXIT_OK


# -- parser -------------------------------------------------------------------

def build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["md", "csv", "json"],
                        default="md", help="output format (default md)")
    common.add_argument("--jobs", type=int, default=1, metavar="N",
                        help="worker processes for Weyl sums")
    common.add_argument("--order", choices=["lex", "grlex", "grevlex"],
                        default="lex", help="monomial order (default lex)")
    common.add_argument("--oracle", choices=["weyl", "groebner", "both"],
                        default="both",
                        help="integration oracle (default both, asserting "
                             "agreement)")
    common.add_argument("--slow", action="store_true",
                        help="include slow computations (F(8) sweeps)")

    p = _Parser(prog="flagchern",
                description="Exact Chern-number computations on generalized "
                            "flag manifolds")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("roots", parents=[common],
                       help="print a root system")
    q.add_argument("--family", required=True,
                   choices=["A", "B", "C", "D", "G2"], help="Cartan family")
    q.add_argument("--rank", type=int, required=True)
    q.set_defaults(func=cmd_roots)

    q = sub.add_parser("decompose", parents=[common],
                       help="isotropy decomposition of a flag manifold")
    q.add_argument("manifold", nargs="?",
                   help="manifold name, e.g. F(7;1,2,4) or FD(3;1,2)")
    q.add_argument("--manifold", dest="manifold_flag", default=None,
                   help=argparse.SUPPRESS)
    q.add_argument("--family", choices=["A", "B", "C", "D", "G2"])
    q.add_argument("--rank", type=int)
    q.add_argument("--theta", metavar="keep=I,J|remove=I,J",
                   help="simple roots kept in (or removed from) the isotropy")
    q.set_defaults(func=cmd_decompose)

    q = sub.add_parser("acs", parents=[common],
                       help="enumerate or classify invariant almost complex "
                            "structures")
    q.add_argument("action", choices=["list", "classify"])
    q.add_argument("manifold")
    q.set_defaults(func=cmd_acs)

    q = sub.add_parser("chern", parents=[common],
                       help="Chern numbers of one structure")
    q.add_argument("--manifold", required=True)
    q.add_argument("--acs", default=None, metavar="+,-,+",
                   help="summand signs (default all +)")
    q.add_argument("--numbers", default=None, metavar="c1^14,c1^12c2",
                   help="comma-separated c-monomials (default: top class)")
    q.add_argument("--todd", action="store_true",
                   help="also compute the Todd genus")
    q.set_defaults(func=cmd_chern)

    q = sub.add_parser("table", parents=[common],
                       help="reproduce a reference table and diff it")
    q.add_argument("action", choices=["reproduce", "list"])
    q.add_argument("table_id", nargs="?")
    q.set_defaults(func=cmd_table)

    q = sub.add_parser("groebner", parents=[common],
                       help="reduced Groebner basis of a named or file ideal")
    q.add_argument("--ideal", required=True, help=_GB_PRESETS)
    q.set_defaults(func=cmd_groebner)

    q = sub.add_parser("cohomology", parents=[common],
                       help="verify a cohomology presentation case")
    q.add_argument("action", choices=["verify"])
    q.add_argument("--case", required=True,
                   help="e.g. a-full:4, b-full:3, so6-groebner, "
                        "proj-tangent:2")
    q.set_defaults(func=cmd_cohomology)

    q = sub.add_parser("verify", parents=[common],
                       help="run the verification sweep")
    q.add_argument("scope", nargs="?", default="all",
                   choices=["all", "quick"])
    q.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "command", None) == "decompose":
            if args.manifold is None and args.manifold_flag is not None:
                args.manifold = args.manifold_flag
        if getattr(args, "command", None) == "table":
            if args.action == "reproduce" and not args.table_id:
                raise UsageError("table reproduce needs a table id "
                                 f"(one of: {', '.join(tables.table_ids())})")
        return args.func(args, sys.stdout)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (KeyError, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ArithmeticError, AssertionError) as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
