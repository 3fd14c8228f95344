"""Command-line front end.

Maps compose left to right: ``x(ab) = (xa)b``.  The dual map reverses
products, ``(ab)* = b* a*``.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace

from . import classification, lsections, oracle, rsections as phimod, trees
from .errors import BudgetExceeded, ConfigurationError, DomainError
from .formats import (
    cross_section_from_json, cross_section_to_json, dumps, load_json,
    respectful_from_json, respectful_to_json, transformation_to_json,
    tree_from_json, tree_to_json,
)
from .limits import DEFAULT_LIMITS
from .transformations import (
    ConvexPartition, GreenRelation, cross_section_defects, fixed_points, two_row,
)


class UsageError(Exception):
    pass


def _limits(args):
    lim = DEFAULT_LIMITS.unlocked() if getattr(args, "force", False) else DEFAULT_LIMITS
    budget = getattr(args, "budget", None)
    if budget is not None:
        lim = replace(lim, budget=budget)
    return lim


def _tree(path):
    return tree_from_json(load_json(path), where=path)


def _one_tree(args):
    if not args.tree:
        raise UsageError("--tree FILE is required")
    if len(args.tree) > 1:
        raise UsageError("expected a single --tree")
    return _tree(args.tree[0])


def _respectful(args):
    if args.respectful:
        g = respectful_from_json(load_json(args.respectful), where=args.respectful)
    elif args.shape:
        g = lsections.RespectfulTree(trees.parse_shape_text(args.shape))
    else:
        raise UsageError("give --respectful FILE or --shape TEXT")
    if args.order:
        g = lsections.faithful_marking(g, [int(x) for x in args.order.split(",")])
    return g


def _emit_tree(t, fmt, out):
    if fmt == "ascii":
        out.write(trees.render_diagram(t))
    elif fmt == "dot":
        out.write(trees.render_dot(t))
    else:
        out.write(dumps(tree_to_json(t)))


# -- subcommands ----------------------------------------------------------------

def cmd_enumerate_trees(args, out):
    lim = _limits(args)
    ts = trees.enumerate_trees(args.n, lim) if args.all else trees.enumerate_decreasing(args.n, lim)
    if args.format == "json":
        out.write(dumps([tree_to_json(t) for t in ts]))
    else:
        for i, t in enumerate(ts):
            if args.format == "ascii":
                out.write(f"# tree {i + 1}\n")
            _emit_tree(t, args.format, out)
    return 0


def cmd_phi(args, out):
    t = _one_tree(args)
    if args.partition:
        k = ConvexPartition.parse(args.partition)
        a = phimod.phi(t, k)
        if args.format == "json":
            out.write(dumps(transformation_to_json(a)))
        else:
            out.write(two_row(a) + "\n")
        return 0
    sg = phimod.phi_semigroup(t)
    if args.table:
        if args.format == "json":
            out.write(dumps(phimod.phi_table_json(sg)))
        else:
            out.write(phimod.phi_table_text(sg))
    else:
        out.write(dumps(cross_section_to_json(sg.cross_section())))
    return 0


def cmd_theta(args, out):
    t = _one_tree(args)
    sg = phimod.phi_semigroup(t)
    vs = [args.vertex] if args.vertex else list(range(1, t.n + 1))
    rows = []
    for v in vs:
        th = phimod.theta_set(t, v, sg)
        row = {"vertex": v, "path": list(th.path), "size": len(th),
               "members": [list(a.images) for a in sorted(th.members)]}
        if v in trees.skeleton(t):
            row["formula"] = phimod.theta_cardinality(t, v)
        rows.append(row)
    out.write(dumps(rows))
    return 0


def cmd_verify(args, out):
    lim = _limits(args)
    if args.cross_section:
        S = cross_section_from_json(load_json(args.cross_section), where=args.cross_section)
        defects = cross_section_defects(S, limits=lim)
        doc = {"valid": not defects, "defects": defects}
        if not defects and S.relation is GreenRelation.R:
            doc["fixed_points"] = sorted(fixed_points(S))
            doc["tree"] = tree_to_json(phimod.reconstruct_tree(S))
        out.write(dumps(doc))
        return 0 if not defects else 1
    if args.theorem is None or args.n is None:
        raise UsageError("verify needs --theorem and --n, or --cross-section FILE")
    fn = {"description": oracle.verify_description_theorem,
          "l-sections": oracle.verify_l_theorem,
          "dual": oracle.verify_dual_theorem}[args.theorem]
    res = fn(args.n, lim)
    out.write(dumps({"theorem": args.theorem, "n": args.n, "ok": res.ok,
                     "details": res.details, "discrepancies": res.discrepancies}))
    return 0 if res.ok else 1


def cmd_brute_force(args, out):
    rep = oracle.brute_force_cross_sections(args.n, GreenRelation(args.relation), _limits(args))
    doc = rep.to_json()
    if args.list:
        doc["found"] = [cross_section_to_json(S) for S in rep.found]
    out.write(dumps(doc))
    return 0


def cmd_classify(args, out):
    if not args.tree or len(args.tree) != 2:
        raise UsageError("classify needs exactly two --tree FILE arguments")
    t1, t2 = (_tree(p) for p in args.tree)
    verdict = classification.classify(t1, t2)
    if args.oracle:
        S1 = phimod.phi_semigroup(t1).element_set()
        S2 = phimod.phi_semigroup(t2).element_set()
        w = classification.oracle_semigroup_iso(S1, S2, _limits(args))
        verdict.witness = None if w is None else {a.images: b.images for a, b in sorted(w.items())}
        doc = verdict.to_json()
        doc["oracle_isomorphic"] = w is not None
        out.write(dumps(doc))
        return 0 if (w is not None) == verdict.isomorphic else 1
    out.write(dumps(verdict.to_json()))
    return 0


def cmd_dual(args, out):
    if args.l_section:
        L = cross_section_from_json(load_json(args.l_section), where=args.l_section)
    else:
        L = lsections.l_cross_section(_respectful(args))
    fix = _parse_fix(args.fix, L.n)
    S = lsections.dual_r_cross_section(L, fix)
    if args.format == "text":
        out.write(lsections.render_dual_listing(L))
        out.write(f"plus const_{fix}\n")
    else:
        out.write(dumps(cross_section_to_json(S)))
    return 0


def _parse_fix(text, n):
    if text in ("1",):
        return 1
    if text in ("n+1", str(n + 1)):
        return n + 1
    raise UsageError(f"--fix must be 1 or n+1 (= {n + 1})")


def cmd_l_section(args, out):
    g = _respectful(args)
    L = lsections.l_cross_section(g, validate=True)
    if args.format == "text":
        for a in L.sorted():
            out.write("(" + ",".join(map(str, a.images)) + ")\n")
    else:
        doc = cross_section_to_json(L)
        doc["tree"] = respectful_to_json(g)
        out.write(dumps(doc))
    return 0


def cmd_count(args, out):
    rows = oracle.count_summary(args.n, _limits(args))
    if args.format == "json":
        out.write(dumps(rows))
    else:
        out.write(oracle.format_count_table(rows))
    return 0 if all(r["consistent"] for r in rows) else 1


def cmd_render(args, out):
    t = _one_tree(args)
    _emit_tree(t, args.format, out)
    return 0


# -- parser ---------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(
        prog="ordcross",
        description="Cross-sections of the monoid of order-preserving maps of a chain. "
                    "Maps compose left to right.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt=("json",), default="json"):
        sp.add_argument("--format", choices=fmt, default=default)
        sp.add_argument("--force", action="store_true", help="lift size guards")
        sp.add_argument("--budget", type=float, help="wall-clock limit in seconds")

    def respectful_opts(sp):
        sp.add_argument("--respectful", metavar="FILE", help="respectful tree JSON")
        sp.add_argument("--shape", help="respectful tree in bracket text, e.g. '(o(oo))'")
        sp.add_argument("--order", help="linear order for the marking, e.g. '2,1,3'")

    sp = sub.add_parser("enumerate-trees", help="list decreasing trees")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--all", action="store_true", help="all order-preserving trees")
    common(sp, ("json", "ascii", "dot"))
    sp.set_defaults(func=cmd_enumerate_trees)

    sp = sub.add_parser("phi", help="cross-section of a decreasing tree")
    sp.add_argument("--tree", action="append", metavar="FILE")
    sp.add_argument("--partition", help='one kernel, e.g. "1,2|3,4|5"')
    sp.add_argument("--table", action="store_true", help="partition -> map table")
    common(sp, ("json", "text"), "text")
    sp.set_defaults(func=cmd_phi)

    sp = sub.add_parser("theta", help="idempotent sets attached to root paths")
    sp.add_argument("--tree", action="append", metavar="FILE")
    sp.add_argument("--vertex", type=int)
    common(sp)
    sp.set_defaults(func=cmd_theta)

    sp = sub.add_parser("verify", help="check a theorem against the oracle, or a cross-section file")
    sp.add_argument("--theorem", choices=["description", "l-sections", "dual"])
    sp.add_argument("--n", type=int)
    sp.add_argument("--cross-section", metavar="FILE")
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("brute-force", help="exhaustive cross-section search")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--relation", choices=["R", "L"], default="R")
    sp.add_argument("--list", action="store_true", help="include every cross-section found")
    common(sp)
    sp.set_defaults(func=cmd_brute_force)

    sp = sub.add_parser("classify", help="are two cross-sections isomorphic")
    sp.add_argument("--tree", action="append", metavar="FILE")
    sp.add_argument("--oracle", action="store_true", help="confirm with brute-force search")
    common(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("dual", help="R-cross-section of O_{n+1} from an L-cross-section")
    sp.add_argument("--l-section", metavar="FILE")
    respectful_opts(sp)
    sp.add_argument("--fix", default="1", help="1 or n+1")
    common(sp, ("json", "text"))
    sp.set_defaults(func=cmd_dual)

    sp = sub.add_parser("l-section", help="L-cross-section of a respectful tree")
    respectful_opts(sp)
    common(sp, ("json", "text"))
    sp.set_defaults(func=cmd_l_section)

    sp = sub.add_parser("count", help="summary counts for n = 1..N")
    sp.add_argument("--n", type=int, required=True)
    common(sp, ("json", "text"), "text")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("render", help="draw an ordered tree")
    sp.add_argument("--tree", action="append", metavar="FILE")
    common(sp, ("ascii", "dot", "json"), "ascii")
    sp.set_defaults(func=cmd_render)
    return p


def run(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return 2
    except ConfigurationError as exc:
        err.write(f"configuration error: {exc}\n")
        return 2
    except DomainError as exc:
        err.write(f"error ({type(exc).__name__}): {exc}\n")
        return 2
    except BudgetExceeded as exc:
        err.write(f"budget exceeded: {exc}\n")
        return 1


def main():
    sys.exit(run())
