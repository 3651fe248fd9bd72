"""Batch front end: compute vertex coefficients, build and solve
tables, run the verification suites, and export series and jets."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .qscalar import QScalar
from . import partitions as pt
from . import vertexcore as vc
from . import recursion as rec
from . import skeinops as sk
from . import abelian as ab
from . import fillings as fl

CACHE_ENV = "VERTEXSKEIN_CACHE_DIR"

TEXT_HEADER = "# scalars are rational functions of s = q^(1/2)"


class CliError(Exception):
    pass


def _parse_partition(text):
    try:
        data = json.loads(text)
    except ValueError:
        raise CliError("bad partition syntax: %r" % text)
    if not isinstance(data, list) or \
            not all(isinstance(x, int) and x > 0 for x in data) or \
            list(data) != sorted(data, reverse=True):
        raise CliError("not a partition (weakly decreasing positive "
                       "integers): %r" % text)
    return tuple(data)


def _emit(args, payload, text_lines, csv_rows=None):
    if args.format == "json":
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if args.format == "csv":
        if csv_rows is None:
            raise CliError("csv output is not available for this command")
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for row in csv_rows:
            writer.writerow(row)
        return buf.getvalue()
    return "\n".join([TEXT_HEADER] + text_lines) + "\n"


def _cmd_vertex(args):
    triple = tuple(_parse_partition(p) for p in
                   (args.l1, args.l2, args.l3))
    fn = vc._FORMULAS[args.formula]
    value = fn(*triple)
    payload = {"l1": list(triple[0]), "l2": list(triple[1]),
               "l3": list(triple[2]), "formula": args.formula,
               "value": value.to_json(), "text": value.text()}
    rows = [["l1", "l2", "l3", "formula", "value"],
            [json.dumps(list(triple[0])), json.dumps(list(triple[1])),
             json.dumps(list(triple[2])), args.formula, value.text()]]
    return 0, _emit(args, payload, [value.text()], rows)


def _table_rows(table):
    rows = [["l1", "l2", "l3", "value"]]
    for triple, value in table.items_sorted():
        rows.append([json.dumps(list(triple[0])),
                     json.dumps(list(triple[1])),
                     json.dumps(list(triple[2])), value.text()])
    return rows


def _cache_dir(args):
    return args.cache_dir or os.environ.get(CACHE_ENV)


def _load_or_build_table(args):
    cache = _cache_dir(args)
    path = None
    if cache:
        path = os.path.join(
            cache, "table-%s-%d.json" % (args.formula, args.max_size))
        if os.path.exists(path):
            try:
                with open(path) as fh:
                    rows = json.load(fh)
                table = vc.CoefficientTable.from_json(
                    rows, max_size=args.max_size, formula=args.formula)
            except (ValueError, KeyError, TypeError) as ex:
                raise CliError("corrupt cache file %s: %s" % (path, ex))
            fresh = vc.build_table(args.max_size, args.formula,
                                   parallel=args.jobs)
            if table != fresh:
                raise CliError(
                    "cache file %s disagrees with a fresh build" % path)
            return table, path
    table = vc.build_table(args.max_size, args.formula,
                           parallel=args.jobs)
    if path:
        os.makedirs(cache, exist_ok=True)
        with open(path, "w") as fh:
            json.dump(table.to_json(), fh, sort_keys=True, indent=2)
    return table, path


def _cmd_table(args):
    table, path = _load_or_build_table(args)
    payload = {"maxSize": table.max_size, "formula": table.formula,
               "entries": len(table), "rows": table.to_json()}
    if path:
        payload["cachePath"] = path
    lines = ["%r %r %r  %s" % (t[0], t[1], t[2], v.text())
             for t, v in table.items_sorted()]
    return 0, _emit(args, payload, lines, _table_rows(table))


def _cmd_solve(args):
    solved = rec.solve_recursion(args.max_size)
    closed = vc.build_table(args.max_size, "T", parallel=args.jobs)
    mismatches = []
    for triple, value in solved.items_sorted():
        if closed[triple] != value:
            mismatches.append({
                "triple": [list(l) for l in triple],
                "solved": value.text(),
                "closedForm": closed[triple].text()})
    payload = {"maxSize": args.max_size, "entries": len(solved),
               "mismatches": mismatches,
               "matchesClosedForm": not mismatches}
    lines = ["entries: %d" % len(solved),
             "matches closed form: %s" % (not mismatches)]
    rows = [["triple", "solved", "closedForm"]] + \
        [[json.dumps(m["triple"]), m["solved"], m["closedForm"]]
         for m in mismatches]
    return (1 if mismatches else 0), _emit(args, payload, lines, rows)


def _cmd_series(args):
    if args.family == "main":
        table = vc.build_table(args.degree, "T", parallel=args.jobs)
        series = ab.specialize_z(table.values, args.degree)
    else:
        series = fl.build_filling_z_u1(args.family, args.degree)
    if args.sign == "minus":
        series = series.substitute_signs(-1)
    payload = {"family": args.family, "degree": args.degree,
               "lower": list(series.lower), "terms": series.to_json()}
    lines = ["x^%r  %s" % (list(e), c.text())
             for e, c in series.items_sorted()]
    rows = [["x1", "x2", "x3", "coef"]] + \
        [[e[0], e[1], e[2], c.text()] for e, c in series.items_sorted()]
    return 0, _emit(args, payload, lines, rows)


def _cmd_augmentation(args):
    jets = ab.solve_augmentation_branch(args.order)
    payload = {"order": args.order, "jets": [
        {"component": i + 1,
         "terms": [{"exp": list(e), "coef": c.to_json(),
                    "text": c.text()}
                   for e, c in sorted(jet.items(),
                                      key=lambda kv: (sum(kv[0]), kv[0]))]}
        for i, jet in enumerate(jets)]}
    lines = []
    rows = [["component", "x1", "x2", "x3", "coef"]]
    for i, jet in enumerate(jets):
        for e, c in sorted(jet.items(), key=lambda kv: (sum(kv[0]), kv[0])):
            lines.append("y%d x^%r  %s" % (i + 1, list(e), c.text()))
            rows.append([i + 1, e[0], e[1], e[2], c.text()])
    return 0, _emit(args, payload, lines, rows)


def _check(name, violations):
    return {"name": name, "passed": not violations,
            "violations": violations}


def _checks_skein(args):
    table = vc.build_table(args.max_size, "T", parallel=args.jobs)
    state = sk.build_z(args.max_size, table)
    out = []
    for k in (1, 2, 3):
        rep = sk.verify_annihilation(sk.operator_a(k), state,
                                     args.max_size - 1)
        out.append(_check("skein.A%d.annihilates" % k,
                          rep["violations"]))
    return out


def _checks_recursion(args):
    solved = rec.solve_recursion(args.max_size)
    closed = vc.build_table(args.max_size, "T", parallel=args.jobs)
    mismatches = [{"triple": [list(l) for l in t]}
                  for t, v in solved.items_sorted() if closed[t] != v]
    out = [_check("recursion.solve.matchesClosedForm", mismatches)]
    bad = [{"n": n} for n in range(1, args.max_size + 2)
           if rec.two_by_two_determinant(n).is_zero()]
    out.append(_check("recursion.uniqueness.determinantNonzero", bad))
    return out


def _checks_abelian(args):
    degree = args.degree
    table = vc.build_table(degree + 1, "T", parallel=args.jobs)
    series = ab.specialize_z(table.values, degree + 1)
    if args.sign == "minus":
        series = series.substitute_signs(-1)
    out = []
    for i in (1, 2, 3):
        rep = ab.verify_abelian_annihilation("main", i, series, degree)
        out.append(_check("abelian.A%d.annihilates" % i,
                          rep["violations"]))
    direct = ab.abelian_z_direct(degree)
    column = ab.LaurentSeries3(degree, lower=(0, 0, 0))
    for e in list(direct.terms):
        t = tuple((1,) * k for k in e)
        v = table.get(t) if sum(e) <= table.max_size else None
        if v is None:
            v = vc.vertex_t(*t)
        if not v.is_zero():
            column.terms[e] = v
    diffs = [{"exp": list(e), "coef": c.text()}
             for e, c in (direct.substitute_signs(-1) -
                          column).items_sorted()]
    out.append(_check("abelian.directSum.matchesColumnSpecialization",
                      diffs))
    jets = ab.solve_augmentation_branch(3)
    bad = []
    for i, jet in enumerate(jets):
        for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
            want = -ab.ONE if e[i] == 1 else ab.ZERO
            if jet.get(e, ab.ZERO) != want:
                bad.append({"component": i + 1, "exp": list(e)})
    out.append(_check("abelian.augmentation.firstOrderJets", bad))
    return out


def _checks_fillings(args, fid):
    degree = args.degree
    out = []
    bad = []
    for a in pt.partitions_up_to(3):
        for b in pt.partitions_up_to(3):
            if fl.hopf_h(a, b) != fl.hopf_h(b, a):
                bad.append({"alpha": list(a), "beta": list(b)})
    out.append(_check("fillings.hopf.symmetric", bad))
    bad = []
    for a in pt.partitions_up_to(3):
        for b in pt.partitions_up_to(3 - pt.size(a)):
            want = QScalar.s_power(-pt.kappa(b)) * \
                fl.hopf_h(a, pt.transpose(b))
            if vc.vertex_t(a, b, ()) != want:
                bad.append({"l1": list(a), "l2": list(b)})
    out.append(_check("fillings.twoBrane.reduction", bad))
    fids = (fid,) if fid else fl.FILLING_IDS
    for f in fids:
        series = fl.build_filling_z_u1(f, degree + 1)
        if args.sign == "minus":
            series = series.substitute_signs(-1)
        for i in (1, 2, 3):
            rep = fl.verify_filling_annihilation(f, i, series, degree)
            out.append(_check("fillings.%s.A%d.annihilates" % (f, i),
                              rep["violations"]))
        rep = fl.verify_ansatz(f, fl.build_filling_z(f, degree))
        out.append(_check("fillings.%s.ansatz" % f, rep["violations"]))
    return out


def _cmd_verify(args):
    checks = []
    if args.suite in ("skein", "all"):
        checks.extend(_checks_skein(args))
    if args.suite in ("recursion", "all"):
        checks.extend(_checks_recursion(args))
    if args.suite in ("abelian", "all"):
        checks.extend(_checks_abelian(args))
    if args.suite in ("fillings", "all"):
        checks.extend(_checks_fillings(args, args.filling))
    failed = [c for c in checks if not c["passed"]]
    payload = {"suite": args.suite, "maxSize": args.max_size,
               "degree": args.degree, "checks": checks,
               "passed": not failed}
    lines = ["%s: %s" % (c["name"], "ok" if c["passed"] else
                         "FAIL (%d violations)" % len(c["violations"]))
             for c in checks]
    lines.append("result: %s" % ("ok" if not failed else "FAIL"))
    rows = [["check", "passed", "violations"]] + \
        [[c["name"], c["passed"], len(c["violations"])] for c in checks]
    return (1 if failed else 0), _emit(args, payload, lines, rows)


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="vertexskein",
        description="Exact topological vertex computations and the "
                    "verification suite around them.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "csv", "text"),
                       default="text")
        p.add_argument("--jobs", type=int, default=1,
                       help="parallel workers; output is identical "
                            "for every width")

    p = sub.add_parser("vertex", help="one vertex coefficient")
    p.add_argument("l1")
    p.add_argument("l2")
    p.add_argument("l3")
    p.add_argument("--formula", choices=sorted(vc._FORMULAS),
                   default="C")
    common(p)
    p.set_defaults(fn=_cmd_vertex)

    p = sub.add_parser("table", help="closed-form coefficient table")
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--formula", choices=sorted(vc._FORMULAS),
                   default="T")
    p.add_argument("--cache-dir", default=None,
                   help="defaults to $%s" % CACHE_ENV)
    common(p)
    p.set_defaults(fn=_cmd_table)

    p = sub.add_parser("solve",
                       help="solve the recursion and compare against "
                            "the closed form")
    p.add_argument("--max-size", type=int, required=True)
    common(p)
    p.set_defaults(fn=_cmd_solve)

    p = sub.add_parser("verify", help="run the invariant checks")
    p.add_argument("--suite",
                   choices=("skein", "recursion", "abelian",
                            "fillings", "all"),
                   default="all")
    p.add_argument("--filling", choices=fl.FILLING_IDS, default=None)
    p.add_argument("--max-size", type=int, default=4)
    p.add_argument("--degree", type=int, default=4)
    p.add_argument("--sign", choices=("auto", "plus", "minus"),
                   default="auto")
    common(p)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("series", help="one-variable series")
    p.add_argument("--family", choices=("main",) + fl.FILLING_IDS,
                   required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--sign", choices=("auto", "plus", "minus"),
                   default="auto")
    common(p)
    p.set_defaults(fn=_cmd_series)

    p = sub.add_parser("augmentation",
                       help="power-series jets of the dequantized "
                            "branch")
    p.add_argument("--order", type=int, required=True)
    common(p)
    p.set_defaults(fn=_cmd_augmentation)
    return parser


def run(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    for bound in ("max_size", "degree", "order"):
        value = getattr(args, bound, None)
        if value is not None and value < 0:
            parser.error("%s must be nonnegative" % bound.replace("_", "-"))
    if getattr(args, "order", None) == 0:
        parser.error("order must be positive")
    try:
        status, output = args.fn(args)
    except CliError as ex:
        sys.stderr.write("error: %s\n" % ex)
        return 2
    sys.stdout.write(output)
    return status


def main(argv=None):
    return run(argv)
