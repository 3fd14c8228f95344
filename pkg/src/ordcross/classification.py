"""When do two decreasing trees give isomorphic cross-sections?

``classify`` decides it from tree data: the skeletons must match either
directly or after mirroring, and the elementary components paired by that
match must have similar inner trees.  ``oracle_semigroup_iso`` answers the
same question by brute force on the multiplication tables.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .errors import DomainError
from .limits import DEFAULT_LIMITS, check
from .lsections import similar
from .trees import (
    component, inner_tree, is_decreasing, mirror_tree, omega, skeleton,
    LEAF, leaf_count,
)


@dataclass(frozen=True)
class SkeletonVertex:
    label: int
    parent: int | None
    gender: str | None   # "son", "daughter" or None for the root
    gap: int             # |p(a) - a|, 0 for the root


@dataclass(frozen=True)
class SkeletonSignature:
    n: int
    root: int
    vertices: tuple  # SkeletonVertex, ascending by label

    def mirror(self):
        n = self.n
        f = lambda v: None if v is None else n + 1 - v
        swap = {"son": "daughter", "daughter": "son", None: None}
        vs = tuple(sorted((SkeletonVertex(f(v.label), f(v.parent), swap[v.gender], v.gap)
                           for v in self.vertices), key=lambda v: v.label))
        return SkeletonSignature(n, f(self.root), vs)

    def labels(self):
        return [v.label for v in self.vertices]


def skeleton_signature(t):
    out = []
    for a in skeleton(t):
        p = t.parent[a]
        if p is None:
            out.append(SkeletonVertex(a, None, None, 0))
        else:
            gender = "son" if t.son[p] == a else "daughter"
            out.append(SkeletonVertex(a, p, gender, abs(p - a)))
    return SkeletonSignature(t.n, t.root, tuple(out))


@dataclass
class IsoVerdict:
    isomorphic: bool
    orientation: str                  # alignment of skeletons: iso, anti or none
    component_orientation: str = "none"
    components: list = field(default_factory=list)  # (a, a#, similarity verdict)
    witness: dict | None = None        # filled in by the oracle when asked

    def to_json(self):
        out = {
            "isomorphic": self.isomorphic,
            "orientation": self.orientation,
            "component_orientation": self.component_orientation,
            "components": [{"a": a, "b": b, "similarity": s} for a, b, s in self.components],
        }
        if self.witness is not None:
            out["witness"] = [[list(k), list(v)] for k, v in self.witness.items()]
        return out


COUPLINGS = ("free", "tied")


def classify(t1, t2, coupling="free"):
    """Decide isomorphism of the cross-sections of two decreasing trees.

    ``coupling`` says how the orientation of the component similarities
    relates to the skeleton alignment.  With ``"free"`` any single global
    orientation is accepted; with ``"tied"`` it must equal the alignment.
    """
    if t1.n != t2.n:
        raise DomainError("trees have different sizes")
    if coupling not in COUPLINGS:
        raise DomainError(f"coupling must be one of {COUPLINGS}")
    for t in (t1, t2):
        if not is_decreasing(t):
            raise DomainError(f"{t} is not decreasing")
    n = t1.n
    sig1, sig2 = skeleton_signature(t1), skeleton_signature(t2)
    for eta, target in (("iso", sig2), ("anti", sig2.mirror())):
        if sig1 != target:
            continue
        flip = (lambda a: a) if eta == "iso" else (lambda a: n + 1 - a)
        pairs = []
        for a in sig1.labels():
            if a == t1.root:
                continue
            s = similar(inner_tree(component(t1, a).tree),
                        inner_tree(component(t2, flip(a)).tree))
            pairs.append((a, flip(a), s.verdict))
        allowed = ("iso", "anti") if coupling == "free" else (eta,)
        for psi in allowed:
            if all(v in (psi, "both") for _, _, v in pairs):
                return IsoVerdict(True, eta, psi, pairs)
    return IsoVerdict(False, "none", "none", [])


# -- component maps -------------------------------------------------------------

@dataclass(frozen=True)
class PiMap:
    """Vertex bijection between components T^a of t1 and T^b of t2."""

    a: int
    b: int
    orientation: str
    mapping: dict  # label in t1 -> label in t2

    def __call__(self, x):
        return self.mapping[x]


def _split_points(shape, first):
    """Inner-tree vertex path -> the point its split stands for."""
    out = {}

    def rec(s, path, lo):
        if s == LEAF:
            return
        k = leaf_count(s[0])
        out[path] = lo + k
        rec(s[0], path + "s", lo)
        rec(s[1], path + "d", lo + k)

    rec(shape, "", first)
    return out


def pi_map(t1, a, t2, b, orientation):
    """Map T^a onto T^b: endpoints to endpoints, interior points via the inner trees."""
    c1, c2 = component(t1, a), component(t2, b)
    g1, g2 = inner_tree(c1.tree), inner_tree(c2.tree)
    s = similar(g1, g2)
    if orientation not in ("iso", "anti") or not (s.iso if orientation == "iso" else s.anti):
        raise DomainError(f"inner trees are not {orientation}-similar")
    mapping = {a: b, t1.parent[a]: t2.parent[b]}
    if g1.shape is not None:
        p1 = _split_points(g1.shape, 1)
        p2 = _split_points(g2.shape, 1)
        flip = str.maketrans("sd", "ds")
        for path, x in p1.items():
            target = path if orientation == "iso" else path.translate(flip)
            mapping[x + c1.offset] = p2[target] + c2.offset
    return PiMap(a, b, orientation, mapping)


def pi_property_holds(t1, t2, pm):
    """omega of the image is the image of omega, inside the components."""
    c1, c2 = component(t1, pm.a), component(t2, pm.b)
    for x, y in pm.mapping.items():
        w1 = [v + c1.offset for v in omega(c1.tree, x - c1.offset)]
        w2 = [v + c2.offset for v in omega(c2.tree, y - c2.offset)]
        if [pm(v) for v in w1] != w2:
            return False
    return True


# -- brute-force oracle ---------------------------------------------------------

def _table(elems):
    index = {a: i for i, a in enumerate(elems)}
    return [[index[a * b] for b in elems] for a in elems]


def _invariants(tab):
    m = len(tab)
    out = []
    for a in range(m):
        row = tab[a]
        col = [tab[x][a] for x in range(m)]
        out.append((
            tab[a][a] == a,
            len(set(row)),
            len(set(col)),
            sum(1 for x in range(m) if col[x] == a),
            sum(1 for x in range(m) if row[x] == a),
            sum(1 for x in range(m) if tab[x][a] == x),
            sum(1 for x in range(m) if tab[a][x] == x),
            tab[tab[a][a]][a] == a,
        ))
    return out


def oracle_semigroup_iso(S1, S2, limits=DEFAULT_LIMITS):
    """A multiplication-preserving bijection S1 -> S2, or None."""
    e1, e2 = sorted(S1), sorted(S2)
    check(max(len(e1), len(e2)), limits.oracle_size_max, "oracle_semigroup_iso")
    if len(e1) != len(e2):
        return None
    m = len(e1)
    t1, t2 = _table(e1), _table(e2)
    inv1, inv2 = _invariants(t1), _invariants(t2)
    if Counter(inv1) != Counter(inv2):
        return None
    by_inv = {}
    for j, v in enumerate(inv2):
        by_inv.setdefault(v, []).append(j)
    freq = Counter(inv1)
    order = sorted(range(m), key=lambda i: (not inv1[i][0], freq[inv1[i]], i))

    def extend(f, used, i, j):
        """Set f[i]=j and propagate products; returns the new pairs or None."""
        f = dict(f)
        used = set(used)
        pending = [(i, j)]
        while pending:
            x, y = pending.pop()
            if x in f:
                if f[x] != y:
                    return None
                continue
            if y in used or inv1[x] != inv2[y]:
                return None
            f[x] = y
            used.add(y)
            for u, v in list(f.items()):
                pending.append((t1[x][u], t2[y][v]))
                pending.append((t1[u][x], t2[v][y]))
        return f, used

    def search(f, used):
        for i in order:
            if i not in f:
                break
        else:
            return f
        for j in by_inv[inv1[i]]:
            if j in used:
                continue
            res = extend(f, used, i, j)
            if res is not None:
                out = search(*res)
                if out is not None:
                    return out
        return None

    f = search({}, frozenset())
    if f is None:
        return None
    for x in range(m):
        for y in range(m):
            if f[t1[x][y]] != t2[f[x]][f[y]]:
                raise AssertionError("oracle produced a non-homomorphism")
    return {e1[i]: e2[j] for i, j in f.items()}


def mirror_pair_verdict(t):
    """classify against the mirrored tree, used as a sanity probe."""
    return classify(t, mirror_tree(t))
