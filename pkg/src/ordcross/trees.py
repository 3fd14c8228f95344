"""Order-preserving binary trees on 1..n and their inner trees.

Two representations live here.

* ``OrderedTree`` is a strict binary search tree whose vertex set is 1..n,
  stored label-indexed (parent/son/daughter arrays).  The son is the left
  child, the daughter the right child.
* A *shape* is an unlabeled binary tree written as nested pairs:
  ``None`` is the empty tree and ``(left, right)`` a vertex.  A full binary
  tree is a shape in which every vertex has zero or two children, so a leaf
  is ``(None, None)``.  Inner trees and respectful trees are shapes.

Vertices of a shape are addressed by paths, strings over ``"s"`` (son) and
``"d"`` (daughter) read from the root.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError
from .limits import DEFAULT_LIMITS, check

LEAF = (None, None)


# -- shapes ---------------------------------------------------------------------

def shape_size(shape):
    if shape is None:
        return 0
    return 1 + shape_size(shape[0]) + shape_size(shape[1])


def leaf_count(shape):
    if shape is None:
        return 0
    if shape == LEAF:
        return 1
    return leaf_count(shape[0]) + leaf_count(shape[1])


def is_full(shape):
    if shape is None or shape == LEAF:
        return True
    left, right = shape
    return left is not None and right is not None and is_full(left) and is_full(right)


def mirror_shape(shape):
    if shape is None:
        return None
    return (mirror_shape(shape[1]), mirror_shape(shape[0]))


def subtree_at(shape, path):
    for step in path:
        if shape is None:
            break
        shape = shape[0] if step == "s" else shape[1]
    if shape is None:
        raise DomainError(f"no vertex at path {path!r}")
    return shape


def vertex_paths(shape, prefix=""):
    """Vertex paths in preorder."""
    if shape is None:
        return []
    out = [prefix]
    out += vertex_paths(shape[0], prefix + "s")
    out += vertex_paths(shape[1], prefix + "d")
    return out


def _as_shape(tree):
    if isinstance(tree, OrderedTree):
        return tree.shape()
    if isinstance(tree, InnerTree):
        return tree.shape
    return tree


def subordinates(t1, t2):
    """True when t1 maps into t2 root-to-root keeping sons and daughters.

    Such a homomorphism is unique when it exists, so this is a shape-prefix
    test.  The empty tree subordinates everything.
    """
    return _subordinates(_as_shape(t1), _as_shape(t2))


@lru_cache(maxsize=None)
def _subordinates(s1, s2):
    if s1 is None:
        return True
    if s2 is None:
        return False
    return _subordinates(s1[0], s2[0]) and _subordinates(s1[1], s2[1])


@lru_cache(maxsize=None)
def enumerate_shapes(n):
    """All binary shapes with n vertices (Catalan many), in a fixed order."""
    if n == 0:
        return (None,)
    out = []
    for k in range(n):
        for left in enumerate_shapes(k):
            for right in enumerate_shapes(n - 1 - k):
                out.append((left, right))
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_full_shapes(leaves):
    """All full binary shapes with the given number of leaves."""
    if leaves < 1:
        return ()
    if leaves == 1:
        return (LEAF,)
    out = []
    for k in range(1, leaves):
        for left in enumerate_full_shapes(k):
            for right in enumerate_full_shapes(leaves - k):
                out.append((left, right))
    return tuple(out)


def shape_to_text(shape):
    """Compact bracket notation: ``.`` is empty, ``(LR)`` a vertex."""
    if shape is None:
        return "."
    if shape == LEAF:
        return "o"
    return "(" + shape_to_text(shape[0]) + shape_to_text(shape[1]) + ")"


# -- ordered trees -------------------------------------------------------------

@dataclass(frozen=True)
class OrderedTree:
    n: int
    root: int
    parent: tuple
    son: tuple
    daughter: tuple

    def __post_init__(self):
        n = self.n
        for name in ("parent", "son", "daughter"):
            arr = tuple(getattr(self, name))
            if len(arr) != n + 1:
                raise DomainError(f"{name} table must have n+1 entries")
            object.__setattr__(self, name, arr)
        if not 1 <= self.root <= n:
            raise DomainError(f"root {self.root} outside 1..{n}")
        self._validate()

    def _validate(self):
        n = self.n
        if self.parent[self.root] is not None:
            raise DomainError("the root cannot have a parent")
        seen = set()
        stack = [(self.root, 0, n + 1)]
        while stack:
            v, lo, hi = stack.pop()
            if v in seen:
                raise DomainError(f"vertex {v} reached twice")
            if not lo < v < hi:
                raise DomainError(f"vertex {v} breaks the search-tree order")
            seen.add(v)
            s, d = self.son[v], self.daughter[v]
            if s is not None:
                if self.parent[s] != v:
                    raise DomainError(f"parent of {s} should be {v}")
                stack.append((s, lo, v))
            if d is not None:
                if self.parent[d] != v:
                    raise DomainError(f"parent of {d} should be {v}")
                stack.append((d, v, hi))
        if len(seen) != n:
            raise DomainError("tree is not connected on 1..n")

    @classmethod
    def from_children(cls, n, root, sons=None, daughters=None):
        """Build from dicts ``{vertex: son}`` and ``{vertex: daughter}``."""
        sons = sons or {}
        daughters = daughters or {}
        parent = [None] * (n + 1)
        son = [None] * (n + 1)
        dau = [None] * (n + 1)
        for table, arr in ((sons, son), (daughters, dau)):
            for v, c in table.items():
                if not (1 <= v <= n and 1 <= c <= n):
                    raise DomainError(f"edge {v}->{c} outside 1..{n}")
                if parent[c] is not None:
                    raise DomainError(f"vertex {c} has two parents")
                arr[v] = c
                parent[c] = v
        return cls(n, root, tuple(parent), tuple(son), tuple(dau))

    def children(self, v):
        return [c for c in (self.son[v], self.daughter[v]) if c is not None]

    def shape(self):
        return _shape_from(self, self.root)

    def levels(self):
        lev = [None] * (self.n + 1)
        lev[self.root] = 0
        stack = [self.root]
        while stack:
            v = stack.pop()
            for c in self.children(v):
                lev[c] = lev[v] + 1
                stack.append(c)
        return tuple(lev)

    def depth(self):
        return max(self.levels()[1:])

    def __str__(self):
        parts = []
        for v in range(1, self.n + 1):
            kids = []
            if self.son[v] is not None:
                kids.append(f"s={self.son[v]}")
            if self.daughter[v] is not None:
                kids.append(f"d={self.daughter[v]}")
            if kids:
                parts.append(f"{v}({','.join(kids)})")
        return f"OrderedTree(n={self.n}, root={self.root}: {' '.join(parts)})"


def _shape_from(t, v):
    if v is None:
        return None
    return (_shape_from(t, t.son[v]), _shape_from(t, t.daughter[v]))


def from_shape(shape):
    """Label a shape in-order with 1..n; the only order-preserving labeling."""
    if shape is None:
        raise DomainError("the empty shape has no labeling")
    sons, daughters = {}, {}
    counter = [0]

    def label(s):
        if s is None:
            return None
        left = label(s[0])
        counter[0] += 1
        v = counter[0]
        right = label(s[1])
        if left is not None:
            sons[v] = left
        if right is not None:
            daughters[v] = right
        return v

    root = label(shape)
    return OrderedTree.from_children(counter[0], root, sons, daughters)


def enumerate_trees(n, limits=DEFAULT_LIMITS):
    check(n, limits.tree_max, "enumerate_trees")
    return [from_shape(s) for s in enumerate_shapes(n)]


def omega(t, v):
    """Path v, p(v), ..., root."""
    out = [v]
    while t.parent[v] is not None:
        v = t.parent[v]
        out.append(v)
    return out


def is_strict_descendant(t, x, y):
    """x is below y (the order written x < y in the tree sense)."""
    if x == y:
        return False
    v = t.parent[x]
    while v is not None:
        if v == y:
            return True
        v = t.parent[v]
    return False


@dataclass(frozen=True)
class Bounds:
    low: int
    high: int


def canonical_bounds(t, v):
    if not 1 <= v <= t.n:
        raise DomainError(f"vertex {v} outside 1..{t.n}")
    lo, hi = 1, t.n
    path = omega(t, v)[::-1]
    for parent, child in zip(path, path[1:]):
        if child == t.son[parent]:
            hi = parent
        else:
            lo = parent
    return Bounds(lo, hi)


def mirror_tree(t):
    """Relabel x -> n+1-x and swap genders."""
    n = t.n
    f = lambda v: None if v is None else n + 1 - v
    sons = {f(v): f(t.daughter[v]) for v in range(1, n + 1) if t.daughter[v] is not None}
    daughters = {f(v): f(t.son[v]) for v in range(1, n + 1) if t.son[v] is not None}
    return OrderedTree.from_children(n, f(t.root), sons, daughters)


# -- diagrams -------------------------------------------------------------------

@dataclass(frozen=True)
class Diagram:
    n: int
    level: tuple  # level[v] for v in 1..n, index 0 unused

    def as_dict(self):
        return {v: self.level[v] for v in range(1, self.n + 1)}


def diagram(t):
    return Diagram(t.n, t.levels())


def tree_from_levels(n, level):
    """Rebuild the order-preserving tree whose vertex levels are ``level``.

    ``level`` maps each of 1..n to a level.  Vertices are inserted by level
    into a search tree; the insertion position is forced, so the result is
    unique, and it exists only if every vertex lands at its stated level.
    """
    level = dict(level) if not isinstance(level, dict) else level
    if sorted(level) != list(range(1, n + 1)):
        raise DomainError("levels must be given for exactly 1..n")
    roots = [v for v in level if level[v] == 0]
    if len(roots) != 1:
        raise DomainError(f"expected one vertex at level 0, got {sorted(roots)}")
    root = roots[0]
    sons, daughters = {}, {}
    for v in sorted(level, key=lambda u: (level[u], u)):
        if v == root:
            continue
        cur, depth = root, 0
        while True:
            table = sons if v < cur else daughters
            nxt = table.get(cur)
            if nxt is None:
                table[cur] = v
                break
            cur, depth = nxt, depth + 1
        if depth + 1 != level[v]:
            raise DomainError(
                f"vertex {v} would sit at level {depth + 1}, not {level[v]}")
    return OrderedTree.from_children(n, root, sons, daughters)


def render_diagram(t):
    """ASCII grid: one column per label, one row per level.

    ``*`` marks a vertex, ``|`` the segment hanging below it, and ``-``
    joins a vertex to its parent on the vertex's own row (``+`` at the
    parent's column).
    """
    lev = t.levels()
    n = t.n
    w = max(3, len(str(n)) + 2)
    rows = max(lev[1:]) + 1
    col = lambda x: (x - 1) * w
    lw = len(str(rows - 1)) + 2
    header = " " * lw + "".join(str(x).ljust(w) for x in range(1, n + 1))
    lines = [header.rstrip()]
    for q in range(rows):
        row = [" "] * (n * w)
        for x in range(1, n + 1):
            if lev[x] < q:
                row[col(x)] = "|"
        for x in range(1, n + 1):
            if lev[x] == q:
                p = t.parent[x]
                if p is not None:
                    a, b = sorted((col(p), col(x)))
                    for i in range(a + 1, b):
                        row[i] = "-"
                    row[col(p)] = "+"
                row[col(x)] = "*"
        lines.append((str(q).ljust(lw) + "".join(row)).rstrip())
    return "\n".join(lines) + "\n"


def render_dot(t, name="T"):
    lines = [f"digraph {name} {{", "  node [shape=circle];"]
    for v in range(1, t.n + 1):
        lines.append(f"  {v};")
    for v in range(1, t.n + 1):
        if t.son[v] is not None:
            lines.append(f'  {v} -> {t.son[v]} [label="son"];')
        if t.daughter[v] is not None:
            lines.append(f'  {v} -> {t.daughter[v]} [label="daughter"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- inner trees ----------------------------------------------------------------

@dataclass(frozen=True)
class InnerTree:
    """Full binary tree of gap cells; cell i' sits between points i and i+1.

    ``shape`` is ``None`` for the empty inner tree.  The vertex intervals are
    determined by the shape and the first cell: each vertex covers as many
    consecutive cells as it has leaves, the son taking the lower cells.
    """

    shape: tuple | None
    first_cell: int = 1

    @property
    def empty(self):
        return self.shape is None

    @property
    def leaves(self):
        return leaf_count(self.shape)

    def intervals(self):
        """Map vertex path -> (i, j) meaning the cells [i', j']."""
        return marking(self.shape, self.first_cell) if self.shape is not None else {}

    def root_interval(self):
        if self.empty:
            return None
        return (self.first_cell, self.first_cell + self.leaves - 1)

    def leaves_in_order(self):
        iv = self.intervals()
        return sorted(i for (i, j) in iv.values() if i == j)


def marking(shape, first=1):
    """Interval of each vertex of a full shape when leaves are first, first+1, ..."""
    out = {}

    def rec(s, path, lo):
        k = leaf_count(s)
        out[path] = (lo, lo + k - 1)
        if s != LEAF:
            rec(s[0], path + "s", lo)
            rec(s[1], path + "d", lo + leaf_count(s[0]))

    if shape is not None:
        rec(shape, "", first)
    return out


def _cells_shape(lev, i, j):
    """Inner-tree shape over cells i'..j' using vertex levels ``lev``."""
    if i == j:
        return LEAF
    x = min(range(i + 1, j + 1), key=lambda v: lev[v])
    return (_cells_shape(lev, i, x - 1), _cells_shape(lev, x, j))


def inner_tree(t):
    if t.n == 1:
        return InnerTree(None, 1)
    return InnerTree(_cells_shape(t.levels(), 1, t.n - 1), 1)


def left_inner(t, x, lev=None):
    if x == 1:
        return InnerTree(None, 1)
    lev = lev or t.levels()
    a = canonical_bounds(t, x).low
    return InnerTree(_cells_shape(lev, a, x - 1), a)


def right_inner(t, x, lev=None):
    if x == t.n:
        return InnerTree(None, x)
    lev = lev or t.levels()
    b = canonical_bounds(t, x).high
    return InnerTree(_cells_shape(lev, x, b - 1), x)


# -- decreasing trees -----------------------------------------------------------

def decreasing_violations(t):
    """Pairs (x, y, condition) breaking the decreasing-tree conditions.

    Only comparable pairs are examined: x a strict descendant of y, neither
    of them the root.  Pairs with one vertex on a boundary path and the other
    off both paths carry no condition.
    """
    lev = t.levels()
    left_path = set(omega(t, 1))
    right_path = set(omega(t, t.n))
    gl = {x: left_inner(t, x, lev).shape for x in range(1, t.n + 1) if x != t.root}
    gr = {x: right_inner(t, x, lev).shape for x in range(1, t.n + 1) if x != t.root}
    bad = []
    for x in range(1, t.n + 1):
        if x == t.root:
            continue
        y = t.parent[x]
        while y is not None and y != t.root:
            if x in left_path and y in left_path:
                if not _subordinates(gr[x], gr[y]):
                    bad.append((x, y, 1))
            if x in right_path and y in right_path:
                if not _subordinates(gl[x], gl[y]):
                    bad.append((x, y, 2))
            outside = left_path | right_path
            if x not in outside and y not in outside:
                if not (_subordinates(gl[x], gl[y]) and _subordinates(gr[x], gr[y])):
                    bad.append((x, y, 3))
            y = t.parent[y]
    return bad


def is_decreasing(t):
    return not decreasing_violations(t)


def enumerate_decreasing(n, limits=DEFAULT_LIMITS):
    check(n, limits.tree_max, "enumerate_decreasing")
    return [t for t in (from_shape(s) for s in enumerate_shapes(n)) if is_decreasing(t)]


# -- skeleton and elementary components -----------------------------------------

def skeleton(t):
    """The union of the root paths of 1 and n, sorted by value."""
    return sorted(set(omega(t, 1)) | set(omega(t, t.n)))


def is_elementary(t):
    """Top two levels are exactly {1, n}; every other vertex lies between them."""
    if t.n < 2 or t.root not in (1, t.n):
        return False
    kids = t.children(t.root)
    return kids == [t.n + 1 - t.root]


@dataclass(frozen=True)
class Component:
    """Elementary piece T^a of a tree: a, its parent, and everything between."""

    a: int
    parent: int
    tree: OrderedTree   # relabeled onto 1..k+1

    @property
    def lo(self):
        return min(self.a, self.parent)

    @property
    def hi(self):
        return max(self.a, self.parent)

    @property
    def offset(self):
        return self.lo - 1

    @property
    def vertices(self):
        return tuple(range(self.lo, self.hi + 1))

    @property
    def gap(self):
        return self.hi - self.lo

    def inner(self):
        return inner_tree(self.tree)


def component(t, a):
    p = t.parent[a]
    if p is None:
        raise DomainError("the root has no component")
    lo, hi = min(a, p), max(a, p)
    off = lo - 1
    sons, daughters = {}, {}
    for v in range(lo, hi + 1):
        if v == p:
            # inside the piece, p only keeps its child a
            (sons if a < p else daughters)[v - off] = a - off
            continue
        for c, table in ((t.son[v], sons), (t.daughter[v], daughters)):
            if c is not None and lo <= c <= hi:
                table[v - off] = c - off
    sub = OrderedTree.from_children(hi - lo + 1, p - off, sons, daughters)
    return Component(a, p, sub)


def elementary_decomposition(t):
    """Components T^a for every skeleton vertex a except the root, ascending in a."""
    return [component(t, a) for a in skeleton(t) if a != t.root]


def parse_shape_text(text):
    """Inverse of ``shape_to_text``; whitespace is ignored."""
    s = "".join(text.split())
    pos = 0

    def rec():
        nonlocal pos
        if pos >= len(s):
            raise DomainError(f"shape text ends early at column {pos + 1}")
        c = s[pos]
        pos += 1
        if c == ".":
            return None
        if c == "o":
            return LEAF
        if c == "(":
            left = rec()
            right = rec()
            if pos >= len(s) or s[pos] != ")":
                raise DomainError(f"expected ')' at column {pos + 1}")
            pos += 1
            return (left, right)
        raise DomainError(f"unexpected {c!r} at column {pos}")

    shape = rec()
    if pos != len(s):
        raise DomainError(f"trailing text at column {pos + 1}")
    return shape
