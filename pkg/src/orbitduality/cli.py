"""Command-line front end.

One verb per library operation, line-oriented output by default and a single
JSON document with --json.  The verify verbs run the exhaustive suites and
exit nonzero when any check fails.
"""

import argparse
import json
import os
import sys

from .partitions import collapse, format_partition, parse_partition, transpose
from .orbits import (
    Orbit,
    bvls_dual,
    format_orbit,
    induce,
    parse_levi,
    parse_orbit,
    saturate,
)
from .compgroups import (
    abar_rank,
    group_data,
    markable_parts,
    parse_marked,
)
from .sommers import sommers_dual, sat_inverse
from .infchar import format_weight, gamma_la, gamma_rigid_cover
from .covers import abar_r_rank, d_map, gamma_group_rank, ms_lift
from . import exceptional, verify


def _parse_orbits_arg(text):
    return [parse_partition(p) for p in text.split(";")]


def _orbit_doc(o):
    doc = {"kind": o.kind, "ambient": o.ambient, "partition": list(o.parts),
           "text": format_orbit(o)}
    if o.decoration:
        doc["decoration"] = o.decoration
    return doc


def _emit(args, doc, lines):
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _cmd_collapse(args):
    p = parse_partition(args.partition)
    out = collapse(p, args.kind)
    _emit(args, {"input": list(p), "kind": args.kind, "collapse": list(out)},
          [format_partition(out)])


def _cmd_transpose(args):
    out = transpose(parse_partition(args.partition))
    _emit(args, {"transpose": list(out)}, [format_partition(out)])


def _split_levi_orbits(args):
    levi, res_kind = parse_levi(args.levi)
    kind = args.kind or res_kind
    if kind is None:
        raise ValueError("a gl-only Levi needs --kind")
    orbits = _parse_orbits_arg(args.orbits)
    if len(orbits) != len(levi.gl) + 1:
        raise ValueError("need %d gl orbits plus a core (semicolon-separated)"
                         % len(levi.gl))
    core_parts = orbits[-1]
    core = Orbit(kind, sum(core_parts), core_parts)
    return levi, orbits[:-1], core, kind


def _cmd_induce(args):
    levi, gl_orbits, core, kind = _split_levi_orbits(args)
    res = induce(levi, gl_orbits, core, kind=kind)
    doc = {"orbit": _orbit_doc(res.orbit), "birational": res.birational,
           "collapsed": res.collapsed, "decoration_unknown": res.decoration_unknown}
    _emit(args, doc, ["%s birational=%s" % (format_orbit(res.orbit), res.birational)])


def _cmd_saturate(args):
    levi, gl_orbits, core, kind = _split_levi_orbits(args)
    out = saturate(levi, gl_orbits, core, kind=kind)
    _emit(args, {"orbit": _orbit_doc(out)}, [format_orbit(out)])


def _cmd_bvls_dual(args):
    out = bvls_dual(parse_orbit(args.orbit))
    _emit(args, {"dual": _orbit_doc(out)}, [format_orbit(out)])


def _cmd_sommers_dual(args):
    from .sommers import block_decompose
    m = parse_marked(args.marked)
    out = sommers_dual(m, route=args.route)
    gl, core = sat_inverse(m)
    doc = {"input": str(m), "route": args.route, "dual": _orbit_doc(out),
           "witness": {"gl": list(gl), "core": str(core),
                       "blocks": [str(b) for b in block_decompose(m)]}}
    _emit(args, doc, [format_orbit(out)])


def _cmd_group(args):
    o = parse_orbit(args.orbit)
    gd = group_data(o)
    doc = {"orbit": format_orbit(o), "a_rank": gd.a_rank, "a_ad_rank": gd.a_ad_rank,
           "eps_values": list(gd.eps_values), "s1_nonempty": gd.s1_nonempty,
           "abar_rank": abar_rank(o.parts, o.kind)}
    _emit(args, doc, ["A rank %d, adjoint rank %d, quotient rank %d"
                      % (gd.a_rank, gd.a_ad_rank, doc["abar_rank"])])


def _cmd_markable(args):
    o = parse_orbit(args.orbit)
    marks = markable_parts(o.parts, o.kind)
    doc = {"orbit": format_orbit(o), "markable": list(marks),
           "abar_rank": abar_rank(o.parts, o.kind)}
    _emit(args, doc, ["%s quotient rank %d" % (format_partition(marks), doc["abar_rank"])])


def _cmd_gamma(args):
    m = parse_marked(args.marked)
    w = gamma_la(m)
    _emit(args, {"marked": str(m), "gamma": str(w)}, [format_weight(w)])


def _cmd_gamma_cover(args):
    o = parse_orbit(args.orbit)
    w = gamma_rigid_cover(o)
    _emit(args, {"orbit": format_orbit(o), "gamma": str(w)}, [format_weight(w)])


def _cmd_gamma_group(args):
    m = parse_marked(args.marked)
    doc = {"marked": str(m), "gamma_group_rank": gamma_group_rank(m),
           "abar_r_rank": abar_r_rank(m)}
    _emit(args, doc, ["galois rank %(gamma_group_rank)d, quotient rank %(abar_r_rank)d" % doc])


def _cmd_ms_lift(args):
    m = parse_marked(args.marked)
    lift = ms_lift(m)
    doc = {"marked": str(m), "factor1": _orbit_doc(lift.factor1),
           "factor2": _orbit_doc(lift.factor2)}
    _emit(args, doc, ["%s x %s" % (format_orbit(lift.factor1),
                                   format_orbit(lift.factor2))])


def _cmd_d_map(args):
    m = parse_marked(args.marked)
    cover = d_map(m)
    doc = {"marked": str(m), "base": _orbit_doc(cover.base), "degree": cover.degree,
           "subgroup": sorted(sorted(g) for g in cover.subgroup) if cover.subgroup is not None else None}
    _emit(args, doc, ["degree %d cover of %s" % (cover.degree, format_orbit(cover.base))])


def _cmd_table(args):
    group = args.group.upper().replace("GAMMA-", "")
    if args.group.lower().startswith("gamma-"):
        data = exceptional.load_gamma_table(group)
    else:
        data = exceptional.load_table(group)
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        for row in data["rows"]:
            print(json.dumps(row, sort_keys=True))


def _cmd_verify(args):
    suites = dict(verify.ALL_SUITES)
    if args.suite == "all":
        reports = verify.verify_all(max_rank=args.max_rank, jobs=args.jobs)
    elif args.suite in suites:
        fn = suites[args.suite]
        if args.suite == "minimality":
            reports = [fn(max_rank=args.max_rank, jobs=args.jobs)]
        elif args.suite in ("duality", "kernel", "tables"):
            reports = [fn()]
        else:
            reports = [fn(max_rank=args.max_rank)]
    else:
        raise ValueError("unknown suite %r" % args.suite)
    ok = all(r["passed"] for r in reports)
    if args.json:
        print(json.dumps(reports, indent=2, sort_keys=True, default=str))
    else:
        for r in reports:
            print("%s %s: %s checks" % ("PASS" if r["passed"] else "FAIL",
                                        r["name"], r["checked"]))
            for f in r["failures"][:10]:
                print("  failure:", f)
    return 0 if ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="orbitduality",
        description="exact nilpotent-orbit combinatorics for classical types")
    parser.add_argument("--json", action="store_true", help="emit one JSON document")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("collapse", help="type collapse of a partition")
    p.add_argument("--kind", required=True, choices=["B", "C", "D"])
    p.add_argument("partition")
    p.set_defaults(fn=_cmd_collapse)

    p = sub.add_parser("transpose", help="transpose a partition")
    p.add_argument("partition")
    p.set_defaults(fn=_cmd_transpose)

    for verb, fn, help_text in (
            ("induce", _cmd_induce, "induce an orbit from a Levi"),
            ("saturate", _cmd_saturate, "saturate an orbit from a Levi")):
        p = sub.add_parser(verb, help=help_text)
        p.add_argument("levi", help="e.g. gl(4)+sp(8) or gl(2)+gl(2)'")
        p.add_argument("orbits", help="semicolon list: one per gl factor, then the core")
        p.add_argument("--kind", choices=["B", "C", "D"])
        p.set_defaults(fn=fn)

    p = sub.add_parser("bvls-dual", help="duality on orbits")
    p.add_argument("orbit", help="e.g. B:[5,3,1] or D:[2,2]I")
    p.set_defaults(fn=_cmd_bvls_dual)

    p = sub.add_parser("sommers-dual", help="duality on marked partitions")
    p.add_argument("marked", help="e.g. B:<[5,1]>[5,3,1]")
    p.add_argument("--route", default="general",
                   choices=["general", "distinguished", "blocks"])
    p.set_defaults(fn=_cmd_sommers_dual)

    p = sub.add_parser("group", help="component group data of an orbit")
    p.add_argument("orbit")
    p.set_defaults(fn=_cmd_group)

    p = sub.add_parser("markable", help="markable parts and quotient rank")
    p.add_argument("orbit")
    p.set_defaults(fn=_cmd_markable)

    p = sub.add_parser("gamma", help="weight of a marked datum")
    p.add_argument("marked")
    p.set_defaults(fn=_cmd_gamma)

    p = sub.add_parser("gamma-cover", help="weight of a rigid cover of an orbit")
    p.add_argument("orbit")
    p.set_defaults(fn=_cmd_gamma_cover)

    p = sub.add_parser("gamma-group", help="both Galois-group rank computations")
    p.add_argument("marked")
    p.set_defaults(fn=_cmd_gamma_group)

    p = sub.add_parser("ms-lift", help="pseudo-Levi orbit pair of a marked datum")
    p.add_argument("marked")
    p.set_defaults(fn=_cmd_ms_lift)

    p = sub.add_parser("d-map", help="dual cover of a marked datum")
    p.add_argument("marked")
    p.set_defaults(fn=_cmd_d_map)

    p = sub.add_parser("table", help="print an exceptional table")
    p.add_argument("group", help="g2, f4, e6, e7, e8, gamma-g2, ..., gamma-e8")
    p.set_defaults(fn=_cmd_table)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=[name for name, _ in verify.ALL_SUITES] + ["all"])
    p.add_argument("--max-rank", type=int, default=5)
    p.add_argument("--jobs", type=int, default=os.cpu_count())
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.fn(args)
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    return result or 0


if __name__ == "__main__":
    sys.exit(main())
