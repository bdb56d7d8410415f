"""Command-line front end.

Batch only, deterministic output; exit code 0 on success, 1 on domain
errors, 2 on usage errors (argparse's convention).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import chartab, gl2fq, linalg, permgroup, quiverrep, rootsys, symgrp
from .exact import Cyclotomic, cyc, cyclotomic_from_json, cyclotomic_to_json


def _fmt_value(v, numeric=False):
    if numeric:
        z = v.numeric()
        if abs(z.imag) < 1e-12:
            return f"{z.real:.10g}"
        return f"{z.real:.10g}{z.imag:+.10g}i"
    return str(v)


def _parse_partition(s):
    s = s.strip()
    if not s:
        return ()
    return tuple(int(x) for x in s.split(","))


def _parse_perm(s):
    return tuple(int(x) for x in s.strip().split(","))


def _load_json(path):
    with open(path) as fh:
        return json.load(fh)


def _print_json(obj):
    print(json.dumps(obj, indent=2, sort_keys=False))


# -- chartab ---------------------------------------------------------------

def _get_table(name):
    key = name.strip().upper()
    if key in chartab.BUILTIN_TABLE_NAMES:
        return chartab.builtin_table(key)
    if key.startswith("S") and key[1:].isdigit():
        return symgrp.sn_table(int(key[1:]))
    if key.startswith("Z") or key.startswith("D"):
        group = permgroup.builtin_group(key)
        if group.is_abelian():
            table = chartab.abelian_dual_table(group)
            table.name = key
            return table
        if key.startswith("D"):
            table = chartab.semidirect_table(chartab.dihedral_semidirect(int(key[1:])))
            table.name = key
            return table
    raise ValueError(f"no table construction for {name!r}; use a builtin name or a file")


def cmd_chartab_show(args):
    table = chartab.table_from_json(_load_json(args.file)) if args.file else _get_table(args.name)
    if args.json:
        _print_json(chartab.table_to_json(table, group_name=args.name if not args.file else None))
    elif args.numeric:
        head = [table.name or "G"] + list(table.class_labels)
        sizes = ["#"] + [str(table.group.classes[c].size) for c in table.display_classes]
        body = [[row.name] + [_fmt_value(row.function.values[c], numeric=True)
                              for c in table.display_classes] for row in table.rows]
        grid = [head, sizes] + body
        widths = [max(len(r[j]) for r in grid) for j in range(len(head))]
        for r in grid:
            print("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip())
    else:
        print(chartab.render_table(table))
    return 0


def cmd_chartab_verify(args):
    table = chartab.table_from_json(_load_json(args.file)) if args.file else _get_table(args.name)
    report = chartab.verify_table(table)
    for check, detail in report.failures():
        print(f"FAIL {check}: {detail}")
    print(f"{'ok' if report.ok else 'FAILED'}: {len(report.entries)} checks, "
          f"{len(report.failures())} failures")
    return 0 if report.ok else 1


def cmd_chartab_tensor(args):
    table = _get_table(args.name)
    i, j = table.row_index(args.row1), table.row_index(args.row2)
    mults = chartab.tensor_multiplicities(table, i, j)
    parts = []
    for k, m in enumerate(mults):
        if m == 1:
            parts.append(table.rows[k].name)
        elif m > 1:
            parts.append(f"{m}*{table.rows[k].name}")
    print(f"{args.row1} (x) {args.row2} = " + " + ".join(parts))
    return 0


def cmd_chartab_decompose(args):
    table = _get_table(args.name)
    g = table.group
    if args.regular:
        f = chartab.regular_character(g)
    elif args.permutation:
        f = chartab.permutation_character(g)
    else:
        vals = [Fraction(x) for x in args.values.split(",")]
        if len(vals) != len(g.classes):
            raise ValueError(f"need {len(g.classes)} values (class order: "
                             f"{', '.join(table.class_labels)})")
        canonical = [None] * len(g.classes)
        for ci, v in zip(table.display_classes, vals):
            canonical[ci] = cyc(v)
        f = chartab.ClassFunction(g, canonical)
    mults = chartab.decompose(f, table)
    for row, m in zip(table.rows, mults):
        print(f"{row.name}: {m}")
    if chartab.integer_multiplicities(mults) is None:
        print("warning: multiplicities are not nonnegative integers (virtual input)")
    return 0


def _subgroup_table(sub, name):
    if name:
        src = _get_table(name)
        rows = []
        for row in src.rows:
            vals = [None] * len(sub.group.classes)
            for ci, cl in enumerate(sub.group.classes):
                key = (cl.element_order, cl.size)
                match = [i for i, c in enumerate(src.group.classes)
                         if (c.element_order, c.size) == key]
                if len(match) != 1:
                    raise ValueError("ambiguous class matching; supply a table file instead")
                vals[ci] = row.function.values[match[0]]
            rows.append(chartab.TableRow(row.name, row.degree,
                                         chartab.ClassFunction(sub.group, vals)))
        return chartab.CharacterTable(sub.group, rows, name=name)
    if sub.group.is_abelian():
        return chartab.abelian_dual_table(sub.group)
    raise ValueError("non-abelian subgroup: pass --sub-name for its table")


def cmd_chartab_induce(args):
    table = _get_table(args.name)
    gens = [_parse_perm(s) for s in args.sub.split(";")]
    sub = table.group.subgroup(gens)
    sub_table = _subgroup_table(sub, args.sub_name)
    row = sub_table.row_by_name(args.row) if not args.row.isdigit() \
        else sub_table.rows[int(args.row)]
    ind = chartab.induce(sub, row.function)
    mults = chartab.decompose(ind, table)
    parts = []
    for k, m in enumerate(mults):
        if m == 0:
            continue
        mi = int(m.as_fraction())
        parts.append(table.rows[k].name if mi == 1 else f"{mi}*{table.rows[k].name}")
    print(f"Ind {row.name} = " + " + ".join(parts))
    return 0


def cmd_chartab_restrict(args):
    table = _get_table(args.name)
    gens = [_parse_perm(s) for s in args.sub.split(";")]
    sub = table.group.subgroup(gens)
    row = table.row_by_name(args.row)
    res = chartab.restrict(sub, row.function)
    labels = [permgroup.cycle_notation(c.representative) for c in sub.group.classes]
    for lab, v in zip(labels, res.values):
        print(f"{lab}: {v}")
    return 0


def cmd_chartab_fs(args):
    table = _get_table(args.name)
    for row in table.rows:
        print(f"{row.name}: {chartab.frobenius_schur(row.function)}")
    return 0


# -- group ------------------------------------------------------------------

def cmd_group_classes(args):
    group = (permgroup.group_from_json(_load_json(args.file)) if args.file
             else permgroup.builtin_group(args.name))
    print(f"|G| = {group.order}, {len(group.classes)} classes, exponent {group.exponent}")
    for i, cl in enumerate(group.classes):
        print(f"{i}: rep {permgroup.cycle_notation(cl.representative)} "
              f"size {cl.size} order {cl.element_order} centralizer {cl.centralizer_order}")
    return 0


# -- sn ----------------------------------------------------------------------

def cmd_sn_table(args):
    table = symgrp.sn_table(args.n)
    if args.json:
        _print_json(chartab.table_to_json(table, group_name=f"S{args.n}"))
    else:
        print(chartab.render_table(table))
    return 0


def cmd_sn_char(args):
    lam = _parse_partition(getattr(args, "lambda"))
    t = _parse_partition(args.cls)
    print(symgrp.frobenius_character(lam, t))
    return 0


def cmd_sn_dim(args):
    lam = _parse_partition(getattr(args, "lambda"))
    print(symgrp.hook_dim(lam))
    return 0


def cmd_sn_kostka(args):
    mu = _parse_partition(args.mu)
    lam = _parse_partition(getattr(args, "lambda"))
    print(symgrp.kostka(mu, lam))
    return 0


# -- schur --------------------------------------------------------------------

def cmd_schur_eval(args):
    lam = _parse_partition(getattr(args, "lambda"))
    points = [Fraction(x) for x in args.points.split(",")]
    print(symgrp.schur_eval(lam, points))
    return 0


def cmd_schur_dim(args):
    lam = _parse_partition(getattr(args, "lambda"))
    if args.z is not None:
        print(symgrp.schur_special(lam, args.vars, z=Fraction(args.z)))
    else:
        print(symgrp.schur_special(lam, args.vars))
    return 0


# -- quiver --------------------------------------------------------------------

def _get_graph(args):
    if args.graph:
        return rootsys.graph_from_json(_load_json(args.graph))
    if args.type:
        return rootsys.dynkin_graph(args.type)
    raise ValueError("pass --type or --graph")


def _parse_arrows(s):
    arrows = []
    for part in s.split(","):
        a, b = part.split(">")
        arrows.append((int(a), int(b)))
    return arrows


def _get_quiver(args):
    if args.rep:
        return quiverrep.rep_from_json(_load_json(args.rep)).quiver
    if args.arrows:
        arrows = _parse_arrows(args.arrows)
        n = max(max(a, b) for a, b in arrows) + 1
        return quiverrep.Quiver(n, arrows)
    if args.type:
        g = rootsys.dynkin_graph(args.type)
        return quiverrep.Quiver(g.n, [(i, j) for i, j, _ in g.edges()])
    raise ValueError("pass --type, --arrows or --rep")


def cmd_quiver_classify(args):
    g = _get_graph(args)
    result = rootsys.classify(g)
    print(result.name if result.kind == "dynkin" else result.kind)
    if args.verbose:
        print(f"det = {result.determinant}; kind = {result.kind}; name = {result.name}")
    return 0


def cmd_quiver_roots(args):
    g = _get_graph(args)
    a = rootsys.cartan_matrix(g)
    pos, neg = rootsys.enumerate_roots(a)
    if args.count:
        print(f"positive: {len(pos)}, total: {len(pos) + len(neg)}")
    else:
        for v in pos:
            print(" ".join(str(c) for c in v))
    return 0


def cmd_quiver_coxeter(args):
    g = _get_graph(args)
    a = rootsys.cartan_matrix(g)
    c, order, d = rootsys.coxeter_element(a)
    print(f"order: {order}, det(c - Id) = {d}")
    return 0


def cmd_quiver_indecomposables(args):
    q = _get_quiver(args)
    objs = quiverrep.enumerate_indecomposables(q)
    print(f"{len(objs)} indecomposable representations")
    for root, rep in objs:
        print("d = (" + ",".join(str(c) for c in root) + ")")
    return 0


def cmd_quiver_decompose(args):
    rep = quiverrep.rep_from_json(_load_json(args.rep))
    for root, mult in quiverrep.decompose(rep):
        print(f"(" + ",".join(str(c) for c in root) + f") x {mult}")
    return 0


# -- gl2 --------------------------------------------------------------------

def cmd_gl2_classes(args):
    classes = gl2fq.gl2_classes(args.q)
    order = (args.q ** 2 - 1) * (args.q ** 2 - args.q)
    print(f"|GL2(F_{args.q})| = {order}, {len(classes)} classes")
    for c in classes:
        print(f"{c.family} params={','.join(str(p) for p in c.params)} size={c.size}")
    return 0


def cmd_gl2_table(args):
    table = gl2fq.gl2_table(args.q)
    if args.json:
        _print_json(gl2fq.gl2_table_to_json(table))
    else:
        labels = [f"{c.family[:4]}({','.join(str(p) for p in c.params)})"
                  for c in table.classes]
        head = [f"GL2(F_{args.q})"] + labels
        sizes = ["#"] + [str(c.size) for c in table.classes]
        body = [[r.name] + [_fmt_value(v, numeric=args.numeric) for v in r.values]
                for r in table.rows]
        grid = [head, sizes] + body
        widths = [max(len(row[j]) for row in grid) for j in range(len(head))]
        for row in grid:
            print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return 0


def cmd_gl2_verify(args):
    table = gl2fq.gl2_table(args.q)
    report = gl2fq.gl2_verify(table)
    for check, detail in report.failures():
        print(f"FAIL {check}: {detail}")
    print(f"{'ok' if report.ok else 'FAILED'}: {len(report.entries)} checks, "
          f"{len(report.failures())} failures")
    return 0 if report.ok else 1


# -- semidirect ----------------------------------------------------------------

def cmd_semidirect_table(args):
    if args.construction == "dn":
        sd = chartab.dihedral_semidirect(args.n)
    elif args.construction == "heisenberg":
        sd = chartab.heisenberg_semidirect()
    else:
        raise ValueError(f"unknown construction {args.construction!r}")
    table = chartab.semidirect_table(sd)
    if args.json:
        _print_json(chartab.table_to_json(table))
    else:
        print(chartab.render_table(table))
    return 0


# -- roundtrip -----------------------------------------------------------------

def cmd_roundtrip(args):
    obj = _load_json(args.file)
    if "rows" in obj and "classes" in obj and "q" not in obj:
        table = chartab.table_from_json(obj)
        again = chartab.table_to_json(table, group_name=obj.get("group")
                                      if isinstance(obj.get("group"), str) else None)
        ok = chartab.table_from_json(again).rows[0].function.values == table.rows[0].function.values
        ok = ok and len(again["rows"]) == len(obj["rows"])
    elif "quiver" in obj:
        rep = quiverrep.rep_from_json(obj)
        ok = quiverrep.rep_from_json(quiverrep.rep_to_json(rep)).maps == rep.maps
    elif "vertices" in obj:
        g = rootsys.graph_from_json(obj)
        ok = rootsys.graph_from_json(rootsys.graph_to_json(g)).adjacency == g.adjacency
    elif "degree" in obj:
        g = permgroup.group_from_json(obj)
        ok = permgroup.group_from_json(permgroup.group_to_json(g)).elements == g.elements
    elif "order" in obj and "coeffs" in obj:
        v = cyclotomic_from_json(obj)
        ok = cyclotomic_from_json(cyclotomic_to_json(v)) == v
    elif "entries" in obj:
        m = linalg.matrix_from_json(obj)
        ok = linalg.matrix_from_json(linalg.matrix_to_json(m)) == m
    else:
        raise ValueError("unrecognized artifact shape")
    print("roundtrip ok" if ok else "roundtrip FAILED")
    return 0 if ok else 1


def cmd_selftest(args):
    from . import selftest
    results = selftest.run_all(seed=args.seed, only=args.criterion)
    worst = 0
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        print(f"[{status}] criterion {r.number:2d}: {r.title} ({r.elapsed:.2f}s)"
              + ("" if r.ok else f" -- {r.detail}"))
        worst = max(worst, 0 if r.ok else 1)
    return worst


# -- parser --------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="reptheory",
                                description="exact character tables and quiver representations")
    sub = p.add_subparsers(dest="command", required=True)

    ct = sub.add_parser("chartab", help="character table operations").add_subparsers(
        dest="sub", required=True)
    s = ct.add_parser("show")
    s.add_argument("name", nargs="?", default="")
    s.add_argument("--file")
    s.add_argument("--json", action="store_true")
    s.add_argument("--numeric", action="store_true")
    s.set_defaults(func=cmd_chartab_show)
    s = ct.add_parser("verify")
    s.add_argument("name", nargs="?", default="")
    s.add_argument("--file")
    s.set_defaults(func=cmd_chartab_verify)
    s = ct.add_parser("tensor")
    s.add_argument("name")
    s.add_argument("row1")
    s.add_argument("row2")
    s.set_defaults(func=cmd_chartab_tensor)
    s = ct.add_parser("decompose")
    s.add_argument("name")
    s.add_argument("--values")
    s.add_argument("--regular", action="store_true")
    s.add_argument("--permutation", action="store_true")
    s.set_defaults(func=cmd_chartab_decompose)
    s = ct.add_parser("induce")
    s.add_argument("name")
    s.add_argument("--sub", required=True, help="subgroup generators 'i,j,k;...' (images)")
    s.add_argument("--sub-name", default=None)
    s.add_argument("--row", required=True)
    s.set_defaults(func=cmd_chartab_induce)
    s = ct.add_parser("restrict")
    s.add_argument("name")
    s.add_argument("--sub", required=True)
    s.add_argument("--row", required=True)
    s.set_defaults(func=cmd_chartab_restrict)
    s = ct.add_parser("fs")
    s.add_argument("name")
    s.set_defaults(func=cmd_chartab_fs)

    gr = sub.add_parser("group", help="permutation group data").add_subparsers(
        dest="sub", required=True)
    s = gr.add_parser("classes")
    s.add_argument("name", nargs="?", default="")
    s.add_argument("--file")
    s.set_defaults(func=cmd_group_classes)

    sn = sub.add_parser("sn", help="symmetric group characters").add_subparsers(
        dest="sub", required=True)
    s = sn.add_parser("table")
    s.add_argument("n", type=int)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_sn_table)
    s = sn.add_parser("char")
    s.add_argument("--lambda", required=True)
    s.add_argument("--class", dest="cls", required=True)
    s.set_defaults(func=cmd_sn_char)
    s = sn.add_parser("dim")
    s.add_argument("--lambda", required=True)
    s.set_defaults(func=cmd_sn_dim)
    s = sn.add_parser("kostka")
    s.add_argument("--mu", required=True)
    s.add_argument("--lambda", required=True)
    s.set_defaults(func=cmd_sn_kostka)

    sc = sub.add_parser("schur", help="Schur polynomials").add_subparsers(
        dest="sub", required=True)
    s = sc.add_parser("eval")
    s.add_argument("--lambda", required=True)
    s.add_argument("--points", required=True)
    s.set_defaults(func=cmd_schur_eval)
    s = sc.add_parser("dim")
    s.add_argument("--lambda", required=True)
    s.add_argument("--vars", type=int, required=True)
    s.add_argument("--z", default=None)
    s.set_defaults(func=cmd_schur_dim)

    qv = sub.add_parser("quiver", help="Dynkin graphs and quiver representations"
                        ).add_subparsers(dest="sub", required=True)
    s = qv.add_parser("classify")
    s.add_argument("--type")
    s.add_argument("--graph")
    s.add_argument("--verbose", action="store_true")
    s.set_defaults(func=cmd_quiver_classify)
    s = qv.add_parser("roots")
    s.add_argument("--type")
    s.add_argument("--graph")
    s.add_argument("--count", action="store_true")
    s.set_defaults(func=cmd_quiver_roots)
    s = qv.add_parser("coxeter")
    s.add_argument("--type")
    s.add_argument("--graph")
    s.set_defaults(func=cmd_quiver_coxeter)
    s = qv.add_parser("indecomposables")
    s.add_argument("--type")
    s.add_argument("--arrows")
    s.add_argument("--rep")
    s.set_defaults(func=cmd_quiver_indecomposables)
    s = qv.add_parser("decompose")
    s.add_argument("--rep", required=True)
    s.set_defaults(func=cmd_quiver_decompose)

    gl = sub.add_parser("gl2", help="GL2 over a prime field").add_subparsers(
        dest="sub", required=True)
    s = gl.add_parser("classes")
    s.add_argument("--q", type=int, required=True)
    s.set_defaults(func=cmd_gl2_classes)
    s = gl.add_parser("table")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--json", action="store_true")
    s.add_argument("--numeric", action="store_true")
    s.set_defaults(func=cmd_gl2_table)
    s = gl.add_parser("verify")
    s.add_argument("--q", type=int, required=True)
    s.set_defaults(func=cmd_gl2_verify)

    sd = sub.add_parser("semidirect", help="semidirect product tables").add_subparsers(
        dest="sub", required=True)
    s = sd.add_parser("table")
    s.add_argument("construction", choices=["dn", "heisenberg"])
    s.add_argument("--n", type=int, default=3)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_semidirect_table)

    s = sub.add_parser("roundtrip", help="parse -> serialize -> parse a JSON artifact")
    s.add_argument("file")
    s.set_defaults(func=cmd_roundtrip)

    s = sub.add_parser("selftest", help="run the acceptance suite")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--criterion", type=int, default=None)
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError, ZeroDivisionError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
