"""Exhaustive ground truth for small n.

The search here knows nothing about trees: it walks Green classes of O_n in a
fixed order, picks one representative per class and prunes as soon as a
product of chosen maps lands in a class whose representative differs.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .errors import BudgetExceeded
from .limits import DEFAULT_LIMITS, check
from .transformations import (
    CrossSection, GreenRelation, Transformation, enumerate_convex_partitions,
    enumerate_on,
)


@dataclass
class SearchReport:
    n: int
    relation: GreenRelation
    found: list = field(default_factory=list)
    nodes_explored: int = 0
    wall_time: float = 0.0

    def element_sets(self):
        return {frozenset(S) for S in self.found}

    def to_json(self):
        return {
            "n": self.n,
            "relation": self.relation.value,
            "count": len(self.found),
            "nodes_explored": self.nodes_explored,
            "wall_time": round(self.wall_time, 4),
        }


def _r_key(a):
    n = len(a)
    return tuple(i + 1 for i in range(n - 1) if a[i] != a[i + 1]) + (n,)


def _l_key(a):
    return tuple(sorted(set(a)))


def _compose(a, b):
    return tuple(b[x - 1] for x in a)


def _class_layout(n, relation, limits):
    maps = [a.images for a in enumerate_on(n, limits)]
    key = _r_key if relation is GreenRelation.R else _l_key
    if relation is GreenRelation.R:
        order = [k.right_ends for k in enumerate_convex_partitions(n)]
    else:
        order = sorted({_l_key(a) for a in maps}, key=lambda s: (len(s), s))
    cands = {k: [] for k in order}
    for a in maps:
        cands[key(a)].append(a)
    return order, cands, key


def brute_force_cross_sections(n, relation=GreenRelation.R, limits=DEFAULT_LIMITS):
    relation = GreenRelation(relation)
    if relation not in (GreenRelation.R, GreenRelation.L):
        raise ValueError("only R and L cross-sections are searched")
    cap = limits.brute_r_max if relation is GreenRelation.R else limits.brute_l_max
    check(n, cap, f"brute_force_cross_sections({relation.value})")
    order, cands, key = _class_layout(n, relation, limits)
    report = SearchReport(n, relation)
    start = time.perf_counter()
    deadline = None if limits.budget is None else start + limits.budget

    def assign(chosen, k, a):
        """Add a as the representative of class k and close up; None on conflict."""
        chosen = dict(chosen)
        chosen[k] = a
        pending = [a]
        while pending:
            b = pending.pop()
            reps = list(chosen.values())
            for c in reps:
                for p in (_compose(b, c), _compose(c, b)):
                    pk = key(p)
                    have = chosen.get(pk)
                    if have is None:
                        chosen[pk] = p
                        pending.append(p)
                    elif have != p:
                        return None
        return chosen

    def search(i, chosen):
        report.nodes_explored += 1
        if deadline is not None and time.perf_counter() > deadline:
            raise BudgetExceeded(f"search exceeded {limits.budget} s")
        while i < len(order) and order[i] in chosen:
            i += 1
        if i == len(order):
            elems = [Transformation(a) for a in chosen.values()]
            report.found.append(CrossSection(n, elems, relation))
            return
        k = order[i]
        for a in cands[k]:
            nxt = assign(chosen, k, a)
            if nxt is not None:
                search(i + 1, nxt)

    search(0, {})
    report.found.sort(key=lambda S: [a.images for a in S.sorted()])
    report.wall_time = time.perf_counter() - start
    return report


def two_fixed_point_sections(report):
    from .transformations import fixed_points
    n = report.n
    return [S for S in report.found if n >= 2 and fixed_points(S) == {1, n}]


# -- theorem checks -------------------------------------------------------------

@dataclass
class Verification:
    ok: bool
    discrepancies: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return self.ok


def verify_description_theorem(n, limits=DEFAULT_LIMITS, report=None):
    """Decreasing-tree cross-sections coincide with the exhaustive search."""
    from .rsections import phi_semigroup
    from .trees import enumerate_decreasing

    report = report or brute_force_cross_sections(n, GreenRelation.R, limits)
    trees = enumerate_decreasing(n, limits)
    from_trees = {}
    for t in trees:
        from_trees.setdefault(phi_semigroup(t).element_set(), []).append(t)
    brute = report.element_sets()
    bad = []
    for s, ts in from_trees.items():
        if len(ts) > 1:
            bad.append(f"{len(ts)} trees share one cross-section")
        if s not in brute:
            bad.append(f"tree {ts[0]} gives a set missed by the search")
    for s in brute - set(from_trees):
        bad.append(f"searched cross-section {sorted(a.images for a in s)} has no tree")
    if len(trees) != len(report.found):
        bad.append(f"{len(trees)} decreasing trees vs {len(report.found)} cross-sections")
    return Verification(not bad, bad, {"trees": len(trees), "cross_sections": len(report.found),
                                       "nodes_explored": report.nodes_explored})


def verify_l_theorem(n, limits=DEFAULT_LIMITS, report=None):
    """Respectful-tree L-cross-sections coincide with the exhaustive search."""
    from .lsections import enumerate_respectful, l_cross_section

    report = report or brute_force_cross_sections(n, GreenRelation.L, limits)
    gammas = enumerate_respectful(n)
    built = {}
    for g in gammas:
        built.setdefault(frozenset(l_cross_section(g)), []).append(g)
    brute = report.element_sets()
    bad = []
    for s, gs in built.items():
        if len(gs) > 1:
            bad.append(f"{len(gs)} respectful trees share one L-cross-section")
        if s not in brute:
            bad.append(f"respectful tree {gs[0]} gives a set missed by the search")
    for s in brute - set(built):
        bad.append(f"searched L-cross-section {sorted(a.images for a in s)} has no tree")
    return Verification(not bad, bad, {"respectful": len(gammas), "cross_sections": len(report.found)})


def verify_dual_theorem(n, limits=DEFAULT_LIMITS, r_report=None, l_report=None):
    """Two-fixed-point R-cross-sections of O_{n+1} versus duals of L-cross-sections of O_n.

    Checks, for every searched R-cross-section of O_{n+1}: two fixed points
    iff its rebuilt tree is elementary iff it is a dual of a searched
    L-cross-section.  Also checks the dual identity for each respectful tree.
    """
    from .lsections import (
        dual_identity_holds, dual_r_cross_section, enumerate_respectful,
    )
    from .rsections import reconstruct_tree
    from .transformations import fixed_points
    from .trees import is_elementary

    r_report = r_report or brute_force_cross_sections(n + 1, GreenRelation.R, limits)
    l_report = l_report or brute_force_cross_sections(n, GreenRelation.L, limits)
    duals = set()
    for L in l_report.found:
        for fix in (1, n + 1):
            duals.add(frozenset(dual_r_cross_section(L, fix)))
    bad = []
    two_fixed = 0
    for S in r_report.found:
        two = fixed_points(S) == {1, n + 1}
        elem = is_elementary(reconstruct_tree(S, check_cross_section=False))
        dual = frozenset(S) in duals
        two_fixed += two
        if not (two == elem == dual):
            bad.append(f"{sorted(a.images for a in S)}: two fixed={two}, "
                       f"elementary={elem}, dual={dual}")
    gammas = enumerate_respectful(n)
    for g in gammas:
        for root in (1, n + 1):
            if not dual_identity_holds(g, root):
                bad.append(f"dual identity fails for {g} with root {root}")
    if two_fixed != 2 * len(gammas):
        bad.append(f"{two_fixed} two-fixed-point sections vs 2 x {len(gammas)} respectful trees")
    return Verification(not bad, bad, {"two_fixed": two_fixed, "respectful": len(gammas)})


def count_summary(n_max, limits=DEFAULT_LIMITS):
    """Per-n counts tying the constructions to the exhaustive search."""
    from .lsections import enumerate_respectful
    from .trees import enumerate_decreasing

    rows = []
    for n in range(1, n_max + 1):
        r = brute_force_cross_sections(n, GreenRelation.R, limits)
        row = {
            "n": n,
            "O_n": sum(1 for _ in enumerate_on(n, limits)),
            "convex_partitions": 2 ** (n - 1),
            "decreasing_trees": len(enumerate_decreasing(n, limits)),
            "R_cross_sections": len(r.found),
            "respectful_trees": len(enumerate_respectful(n)),
            "two_fixed_R": len(two_fixed_point_sections(r)),
            "respectful_trees_n_minus_1": len(enumerate_respectful(n - 1)) if n > 1 else 0,
        }
        if n <= limits.brute_l_max:
            row["L_cross_sections"] = len(brute_force_cross_sections(n, GreenRelation.L, limits).found)
        else:
            row["L_cross_sections"] = None
        if n >= 2:
            row["consistent"] = (row["decreasing_trees"] == row["R_cross_sections"]
                                 and row["two_fixed_R"] == 2 * row["respectful_trees_n_minus_1"])
        else:
            row["consistent"] = row["decreasing_trees"] == row["R_cross_sections"]
        rows.append(row)
    return rows


def format_count_table(rows):
    cols = ["n", "O_n", "convex_partitions", "decreasing_trees", "R_cross_sections",
            "respectful_trees", "L_cross_sections", "two_fixed_R"]
    widths = [max(len(c), 6) for c in cols]
    out = ["  ".join(c.rjust(w) for c, w in zip(cols, widths))]
    for row in rows:
        cells = ["-" if row[c] is None else str(row[c]) for c in cols]
        out.append("  ".join(s.rjust(w) for s, w in zip(cells, widths)))
    return "\n".join(out) + "\n"
