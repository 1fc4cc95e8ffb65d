"""Command-line interface.

Exit codes: 0 success, 1 domain error, 2 usage error, 3 internal invariant
violation (including any failed ``verify`` check).
"""
import argparse
import csv
import json
import sys

from . import census, cycles, d6p, dihedral, oracle, verify
from .errors import DomainError, InvariantViolation

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_INVARIANT = 0, 1, 2, 3

CENSUS_COLUMNS = ["n", "p_or_empty", "aut_order", "orbit_count", "dci", "method"]


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _emit_csv(out, columns, rows):
    writer = csv.DictWriter(out, fieldnames=columns, lineterminator="\n", extrasaction="ignore")
    writer.writeheader()
    writer.writerows(rows)


def _census_row(result):
    p = result.p
    return {
        "n": result.n,
        "p_or_empty": "" if p is None else p,
        "aut_order": result.aut_order,
        "orbit_count": result.orbit_count,
        "dci": result.dci.tag.value,
        "method": result.method,
    }


def cmd_order(args, out):
    a = dihedral.make_aut(args.n, args.r, args.t)
    k = dihedral.aut_order(a)
    record = {"n": a.n, "r": a.r, "t": a.t, "order": k}
    if args.format == "json":
        print(json.dumps(record), file=out)
    elif args.format == "csv":
        _emit_csv(out, list(record), [record])
    else:
        print(k, file=out)


def cmd_cycles(args, out):
    a = dihedral.make_aut(args.n, args.r, args.t)
    if args.method == "formula":
        data = cycles.c_total(a.n, a.r, a.t)
    else:
        if a.n < 2:
            raise DomainError("the permutation method needs n >= 2")
        u_parts, c_v = oracle.cycle_data_from_permutation(a)
        data = cycles.CycleData(a.n, u_parts, c_v)
    record = {"r": a.r, "t": a.t, **data.to_dict(), "method": args.method}
    if args.format == "json":
        print(json.dumps(record), file=out)
    elif args.format == "csv":
        flat = dict(record, u_parts=";".join(f"{d}:{c}" for d, c in record["u_parts"].items()))
        _emit_csv(out, list(flat), [flat])
    else:
        parts = [f"U({d})={c}" for d, c in record["u_parts"].items()]
        parts += [f"V={data.c_v}", f"total={data.total}"]
        print(f"{a}: " + " ".join(parts), file=out)


def _print_census(results, fmt, out):
    if fmt == "json":
        payload = [r.to_dict() for r in results]
        print(json.dumps(payload[0] if len(payload) == 1 else payload), file=out)
    elif fmt == "csv":
        _emit_csv(out, CENSUS_COLUMNS, [_census_row(r) for r in results])
    else:
        for r in results:
            print(f"n={r.n} |Aut|={r.aut_order} count={r.orbit_count} dci={r.dci.tag.value} method={r.method}",
                  file=out)


def cmd_count(args, out):
    result = census.METHODS[args.method](args.n)
    if result.dci.tag is not census.DciTag.KNOWN_DCI:
        print(f"note: D_{2 * args.n} is not known to be DCI; the value counts CI-classes",
              file=sys.stderr)
    _print_census([result], args.format, out)


def cmd_d6p(args, out):
    count = d6p.d6p_count(args.p)
    n = 3 * args.p
    order = dihedral.aut_group_order(n)
    result = census.CensusResult(n, order, count * order, count, census.dci_status(n), "d6p")
    _print_census([result], args.format, out)


def cmd_table(args, out):
    if args.p_list is not None:
        n_values = [3 * p for p in args.p_list]
        method = args.method or "d6p"
    else:
        n_values = args.n_list
        method = args.method or "theorem"
    rows = census.census_table(n_values, method)
    if args.format == "json":
        print(json.dumps([
            row.result.to_dict() if row.result else {"n": row.n, "method": row.method, "error": row.error}
            for row in rows
        ]), file=out)
    elif args.format == "csv":
        records = []
        for row in rows:
            if row.result:
                records.append(dict(_census_row(row.result), error=""))
            else:
                records.append({"n": row.n, "method": row.method, "error": row.error})
        _emit_csv(out, CENSUS_COLUMNS + ["error"], records)
    else:
        for row in rows:
            if row.result:
                _print_census([row.result], "text", out)
            else:
                print(f"n={row.n} method={row.method} error={row.error}", file=out)
    failed = [row for row in rows if row.error]
    for row in failed:
        print(f"n={row.n}: {row.error}", file=sys.stderr)
    return EXIT_DOMAIN if failed else EXIT_OK


def cmd_verify(args, out):
    results = verify.run_checks(args.n_max)
    if args.format == "json":
        print(json.dumps({"n_max": args.n_max, "checks": [r.to_dict() for r in results]}), file=out)
    elif args.format == "csv":
        _emit_csv(out, ["name", "passed", "cases", "seconds"], [r.to_dict() for r in results])
    else:
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            print(f"{status} {r.name} cases={r.cases} time={r.seconds:.2f}s", file=out)
            for failure in r.failures[:5]:
                print(f"    {failure}", file=out)
        passed = sum(r.passed for r in results)
        print(f"{passed}/{len(results)} invariants passed (n_max={args.n_max})", file=out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_INVARIANT


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "csv", "json"], default="text")

    parser = argparse.ArgumentParser(
        prog="dihedral-census",
        description="Count Cayley digraphs on dihedral groups up to CI-isomorphism.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("order", parents=[common], help="order of a_{n,r,t}")
    p.add_argument("n", type=int)
    p.add_argument("r", type=int)
    p.add_argument("t", type=int)
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("cycles", parents=[common], help="cycle number of a_{n,r,t} by block")
    p.add_argument("n", type=int)
    p.add_argument("r", type=int)
    p.add_argument("t", type=int)
    p.add_argument("--method", choices=["formula", "perm"], default="formula")
    p.set_defaults(func=cmd_cycles)

    p = sub.add_parser("count", parents=[common], help="number of CI-classes of digraphs on D_2n")
    p.add_argument("n", type=int)
    p.add_argument("--method", choices=sorted(census.METHODS), default="theorem")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("d6p", parents=[common], help="closed-form count for D_6p")
    p.add_argument("p", type=int)
    p.set_defaults(func=cmd_d6p)

    p = sub.add_parser("table", parents=[common], help="census rows for several n or p")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--p-list", type=_int_list)
    group.add_argument("--n-list", type=_int_list)
    p.add_argument("--method", choices=sorted(census.METHODS))
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", parents=[common], help="run the invariant suite")
    p.add_argument("--n-max", type=int, default=35)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        code = args.func(args, out)
    except InvariantViolation as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK if code is None else code


def main_entry():
    sys.exit(main())
