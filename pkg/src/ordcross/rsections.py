"""R-cross-sections of O_n built from decreasing trees, and the way back."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, NotCrossSectionError, NotDecreasingError
from .transformations import (
    ConvexPartition, CrossSection, GreenRelation, Transformation,
    cross_section_defects, enumerate_convex_partitions,
)
from .trees import decreasing_violations, omega, tree_from_levels, skeleton


@dataclass(frozen=True)
class PartitionTree:
    """Tree on the blocks of a convex partition.

    Blocks are referred to by index into ``partition.blocks()``.  ``lead``
    holds the leading point of each block: the tree root for the root block,
    otherwise the highest point of the gap the block was chosen from.
    """

    partition: ConvexPartition
    root: int
    son: tuple
    daughter: tuple
    lead: tuple

    def blocks(self):
        return self.partition.blocks()


def _highest(level, lo, hi):
    return min(range(lo, hi + 1), key=lambda v: level[v])


def partition_tree(t, k):
    if k.n != t.n:
        raise DomainError("tree and partition sizes differ")
    level = t.levels()
    intervals = k.intervals()
    m = len(intervals)
    son = [None] * m
    dau = [None] * m
    lead = [None] * m
    root = k.block_index(t.root)
    lead[root] = t.root
    # each node carries the bounds of the gap it was picked from
    stack = [(root, 1, t.n)]
    while stack:
        b, lo, hi = stack.pop()
        left, right = intervals[b]
        if lo <= left - 1:
            x = _highest(level, lo, left - 1)
            c = k.block_index(x)
            son[b], lead[c] = c, x
            stack.append((c, lo, left - 1))
        if right + 1 <= hi:
            x = _highest(level, right + 1, hi)
            c = k.block_index(x)
            dau[b], lead[c] = c, x
            stack.append((c, right + 1, hi))
    return PartitionTree(k, root, tuple(son), tuple(dau), tuple(lead))


def _block_values(t, pt):
    values = [None] * len(pt.son)
    values[pt.root] = t.root
    stack = [pt.root]
    while stack:
        b = stack.pop()
        x = values[b]
        for child, table, gender in ((pt.son[b], t.son, "son"),
                                     (pt.daughter[b], t.daughter, "daughter")):
            if child is None:
                continue
            y = table[x]
            if y is None:
                raise NotDecreasingError(
                    f"vertex {x} has no {gender} for block {pt.blocks()[child]}")
            values[child] = y
            stack.append(child)
    return values


def _require_decreasing(t):
    bad = decreasing_violations(t)
    if bad:
        x, y, cond = bad[0]
        raise NotDecreasingError(
            f"tree is not decreasing: pair x={x}, y={y} fails condition {cond}")


def phi(t, k, checked=False):
    """The member of the cross-section of ``t`` with kernel ``k``."""
    if not checked:
        _require_decreasing(t)
    pt = partition_tree(t, k)
    return Transformation.from_blocks(pt.blocks(), _block_values(t, pt))


@dataclass(frozen=True)
class PhiSemigroup:
    tree: object
    elements: dict  # ConvexPartition -> Transformation

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, k):
        return self.elements[k]

    def __iter__(self):
        return iter(self.elements.items())

    def cross_section(self):
        return CrossSection(self.tree.n, self.elements.values(), GreenRelation.R)

    def element_set(self):
        return frozenset(self.elements.values())


def phi_semigroup(t):
    _require_decreasing(t)
    elems = {k: phi(t, k, checked=True) for k in enumerate_convex_partitions(t.n)}
    return PhiSemigroup(t, elems)


@dataclass(frozen=True)
class ThetaSet:
    vertex: int
    path: tuple
    members: frozenset

    def __len__(self):
        return len(self.members)


def is_transversal(points, k):
    """Each block of the partition holds exactly one of the points."""
    seen = set()
    for p in points:
        b = k.block_index(p)
        if b in seen:
            return False
        seen.add(b)
    return len(seen) == k.size


def theta_set(t, v, semigroup=None):
    sg = semigroup or phi_semigroup(t)
    path = tuple(omega(t, v))
    members = frozenset(a for k, a in sg if is_transversal(path, k))
    return ThetaSet(v, path, members)


def theta_cardinality(t, x):
    """|Theta^x| from the product of gaps along the skeleton path to the root."""
    if x not in skeleton(t):
        raise DomainError(f"{x} is not on the skeleton")
    out = 1
    while t.parent[x] is not None:
        p = t.parent[x]
        out *= abs(p - x)
        x = p
    return out


# -- reconstruction ------------------------------------------------------------

@dataclass(frozen=True)
class WChain:
    sets: tuple    # W_0 within W_1 within ... within W_t
    levels: tuple  # W'_0, W'_1, ...


def w_chain(S):
    """Image filtration of an R-cross-section by rank."""
    elems = list(S)
    n = S.n
    consts = [a for a in elems if a.rank == 1]
    if len(consts) != 1:
        raise NotCrossSectionError(
            f"step W0: expected one constant map, found {len(consts)}")
    current = set(consts[0].images[:1])
    sets, levels = [frozenset(current)], [frozenset(current)]
    for r in range(2, n + 1):
        new = set()
        for a in elems:
            if a.rank == r:
                new |= set(a.images)
        new -= current
        current |= new
        if not new:
            break
        sets.append(frozenset(current))
        levels.append(frozenset(new))
    if current != set(range(1, n + 1)):
        raise NotCrossSectionError(
            f"step W-chain: images never cover 1..{n}, stuck at {sorted(current)}")
    return WChain(tuple(sets), tuple(levels))


def reconstruct_tree(S, check_cross_section=True):
    """Recover the decreasing tree whose cross-section is ``S``."""
    if check_cross_section:
        defects = cross_section_defects(S)
        if defects:
            raise NotCrossSectionError("step validate: " + "; ".join(defects[:3]))
    chain = w_chain(S)
    level = {}
    for i, layer in enumerate(chain.levels):
        if len(layer) > 2 ** i:
            raise NotCrossSectionError(
                f"step levels: level {i} has {len(layer)} points, more than {2 ** i}")
        for v in layer:
            level[v] = i
    try:
        t = tree_from_levels(S.n, level)
    except DomainError as exc:
        raise NotCrossSectionError(f"step tree: {exc}") from None
    try:
        sg = phi_semigroup(t)
    except NotDecreasingError as exc:
        raise NotCrossSectionError(f"step decreasing: {exc}") from None
    if sg.element_set() != frozenset(S):
        raise NotCrossSectionError("step round trip: rebuilt tree gives another set")
    return t


# -- table output --------------------------------------------------------------

def phi_table_rows(sg):
    """Rows (partition text, images per block) in convex-partition order."""
    rows = []
    for k in enumerate_convex_partitions(sg.tree.n):
        a = sg[k]
        values = [a(r) for r in k.right_ends]
        rows.append((k, values))
    return rows


def phi_table_text(sg):
    rows = phi_table_rows(sg)
    pad = max(len(str(k)) for k, _ in rows)
    lines = []
    for k, values in rows:
        blocks = ["{" + "".join(map(str, b)) + "}" for b in k.blocks()]
        widths = [max(len(b), len(str(v))) for b, v in zip(blocks, values)]
        top = " ".join(b.ljust(w) for b, w in zip(blocks, widths))
        bottom = " ".join(str(v).ljust(w) for v, w in zip(values, widths))
        lines.append(f"{str(k):<{pad}}  {top.rstrip()}")
        lines.append(f"{'':<{pad}}  {bottom.rstrip()}")
    return "\n".join(lines) + "\n"


def phi_table_json(sg):
    return {
        "n": sg.tree.n,
        "rows": [
            {"partition": k.to_text(), "blocks": [list(b) for b in k.blocks()],
             "values": values, "images": list(sg[k].images)}
            for k, values in phi_table_rows(sg)
        ],
    }
