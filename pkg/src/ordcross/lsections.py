"""Respectful trees and the L-cross-sections they describe."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, NotCrossSectionError
from .transformations import (
    CrossSection, GreenRelation, Transformation, cross_section_defects,
    higgins_dual,
)
from .trees import (
    LEAF, OrderedTree, enumerate_full_shapes, inner_tree, is_elementary,
    is_full, leaf_count, marking, mirror_shape, subordinates, subtree_at,
    vertex_paths,
)


# -- respectfulness -------------------------------------------------------------

def _require_full(shape):
    if shape is None or not is_full(shape):
        raise DomainError("respectful trees must be nonempty full binary trees")


def is_respectful(shape, slow=False):
    """Every non-root vertex subordinates its parent.

    With ``slow=True`` the uncle/nephew and aunt/niece conditions are checked
    directly instead; the two answers always agree.
    """
    shape = getattr(shape, "shape", shape)
    _require_full(shape)
    if slow:
        return _respectful_slow(shape)
    return _respectful(shape)


def _respectful(s):
    if s == LEAF:
        return True
    left, right = s
    return (subordinates(left, s) and subordinates(right, s)
            and _respectful(left) and _respectful(right))


def _respectful_slow(s):
    for path in vertex_paths(s):
        v = subtree_at(s, path)
        if v == LEAF:
            continue
        son, dau = v
        # the son of a male vertex's sister is his nephew, and symmetrically
        if dau != LEAF and not subordinates(dau[0], son):
            return False
        if son != LEAF and not subordinates(son[1], dau):
            return False
    return True


def enumerate_respectful(leaves):
    if leaves < 1:
        return []
    return [s for s in enumerate_full_shapes(leaves) if _respectful(s)]


# -- marked trees ---------------------------------------------------------------

@dataclass(frozen=True)
class RespectfulTree:
    """A full binary tree together with the linear order used to mark it."""

    shape: tuple
    order: tuple = None

    def __post_init__(self):
        _require_full(self.shape)
        k = leaf_count(self.shape)
        order = tuple(range(1, k + 1)) if self.order is None else tuple(self.order)
        if sorted(order) != list(range(1, k + 1)):
            raise DomainError(f"order must be a permutation of 1..{k}")
        object.__setattr__(self, "order", order)

    @property
    def n(self):
        return len(self.order)

    def is_respectful(self):
        return _respectful(self.shape)

    def marking(self):
        """Vertex path -> the marked point set, as a tuple in marking order."""
        return {p: self.order[i - 1:j] for p, (i, j) in marking(self.shape).items()}

    def positions(self):
        """Vertex path -> (i, j), the marked interval as order positions."""
        return marking(self.shape)


def faithful_marking(g, order=None):
    """Mark ``g`` with intervals of ``order`` (natural order by default)."""
    shape = getattr(g, "shape", g)
    return RespectfulTree(shape, order)


def _as_marked(g):
    return g if isinstance(g, RespectfulTree) else RespectfulTree(g)


def hull(g, M):
    """Path of the smallest marked vertex containing every point of M."""
    g = _as_marked(g)
    M = set(M)
    if not M or not M <= set(g.order):
        raise DomainError("M must be a nonempty set of points")
    mark = g.marking()
    path = ""
    while True:
        v = subtree_at(g.shape, path)
        if v == LEAF:
            return path
        for step in "sd":
            if M <= set(mark[path + step]):
                path += step
                break
        else:
            return path


def alpha(g, M):
    """The member of the L-cross-section of ``g`` with image M."""
    g = _as_marked(g)
    M = frozenset(M)
    if not M:
        raise DomainError("M must be nonempty")
    mark = g.marking()
    out = {}

    def rec(a_path, target):
        if a_path is None:
            return
        if not target:
            raise DomainError(
                f"vertex {mark[a_path]} has no target points; the tree is not respectful")
        if len(target) == 1:
            (m,) = target
            for x in mark[a_path]:
                out[x] = m
            return
        b_path = hull(g, target)
        a_vertex = subtree_at(g.shape, a_path)
        kids = (None, None) if a_vertex == LEAF else (a_path + "s", a_path + "d")
        if a_vertex == LEAF:
            raise DomainError(
                f"leaf {mark[a_path]} meets the multi-point target {sorted(target)}")
        rec(kids[0], target & set(mark[b_path + "s"]))
        rec(kids[1], target & set(mark[b_path + "d"]))

    rec("", M)
    return Transformation(tuple(out[x] for x in range(1, g.n + 1)))


def _subsets(n):
    for mask in range(1, 2 ** n):
        yield frozenset(x + 1 for x in range(n) if mask >> x & 1)


def l_cross_section(g, validate=False):
    g = _as_marked(g)
    if not g.is_respectful():
        raise DomainError("the tree is not respectful")
    S = CrossSection(g.n, [alpha(g, M) for M in _subsets(g.n)], GreenRelation.L)
    if validate:
        natural = g.order == tuple(range(1, g.n + 1))
        defects = cross_section_defects(S, monoid="O" if natural else "T")
        if defects:
            raise NotCrossSectionError("; ".join(defects[:3]))
    return S


# -- similarity -----------------------------------------------------------------

@dataclass(frozen=True)
class Similarity:
    verdict: str                 # "none", "iso", "anti" or "both"
    witness: dict | None = None  # vertex path of g1 -> vertex path of g2

    @property
    def iso(self):
        return self.verdict in ("iso", "both")

    @property
    def anti(self):
        return self.verdict in ("anti", "both")

    def __bool__(self):
        return self.verdict != "none"


def _flip(path):
    return path.translate(str.maketrans("sd", "ds"))


def similar(g1, g2):
    s1 = getattr(g1, "shape", g1)
    s2 = getattr(g2, "shape", g2)
    iso = s1 == s2
    anti = s1 == mirror_shape(s2)
    if iso and anti:
        verdict = "both"
    elif iso:
        verdict = "iso"
    elif anti:
        verdict = "anti"
    else:
        return Similarity("none")
    paths = vertex_paths(s1)
    witness = {p: p for p in paths} if iso else {p: _flip(p) for p in paths}
    return Similarity(verdict, witness)


# -- bridge to R-cross-sections -------------------------------------------------

def dual_r_cross_section(L, fix):
    """Images under the dual map plus one constant; an R-cross-section of O_{n+1}."""
    n = L.n
    if fix not in (1, n + 1):
        raise DomainError(f"fix must be 1 or {n + 1}")
    elems = [higgins_dual(a) for a in L] + [Transformation.const(n + 1, fix)]
    S = CrossSection(n + 1, elems, GreenRelation.R)
    defects = cross_section_defects(S)
    if defects:
        raise NotCrossSectionError("; ".join(defects[:3]))
    return S


def elementary_from_respectful(g, root_choice):
    """Elementary tree on k+1 points with the given root whose inner tree is g."""
    shape = getattr(g, "shape", g)
    _require_full(shape)
    if not _respectful(shape):
        raise DomainError("the tree is not respectful")
    k = leaf_count(shape)
    n = k + 1
    if root_choice not in (1, n):
        raise DomainError(f"root must be 1 or {n}")
    other = n + 1 - root_choice
    sons, daughters = {}, {}
    (daughters if root_choice == 1 else sons)[root_choice] = other
    level = {root_choice: 0, other: 1}

    def place(s, i, j):
        # s covers cells i'..j', i.e. the points strictly between i and j+1
        if s == LEAF:
            return
        x = i + leaf_count(s[0])
        lo, hi = i, j + 1
        if level[lo] > level[hi]:
            daughters[lo] = x
            level[x] = level[lo] + 1
        else:
            sons[hi] = x
            level[x] = level[hi] + 1
        place(s[0], i, x - 1)
        place(s[1], x, j)

    place(shape, 1, k)
    return OrderedTree.from_children(n, root_choice, sons, daughters)


def respectful_from_elementary(t):
    if not is_elementary(t):
        raise DomainError("the tree is not elementary")
    shape = inner_tree(t).shape
    if not _respectful(shape):
        raise AssertionError("inner tree of an elementary tree is not respectful")
    return RespectfulTree(shape)


def dual_identity_holds(g, root_choice):
    from .rsections import phi_semigroup

    t = elementary_from_respectful(g, root_choice)
    lhs = {higgins_dual(a) for a in l_cross_section(g)}
    rhs = set(phi_semigroup(t).element_set()) - {Transformation.const(t.n, t.root)}
    return lhs == rhs


def render_dual_listing(L):
    """Two columns: each map of L and its dual image."""
    def flat(a):
        return "(" + ",".join(map(str, a.images)) + ")"
    rows = [(flat(a), flat(higgins_dual(a))) for a in L.sorted()]
    w = max(len(r[0]) for r in rows)
    head = ["map".ljust(w) + "  dual", "-" * w + "  " + "-" * max(len(r[1]) for r in rows)]
    return "\n".join(head + [a.ljust(w) + "  " + b for a, b in rows]) + "\n"
