"""Transformations of the chain 1 < 2 < ... < n.

Maps act on the right and compose left to right: ``x(ab) = (xa)b``.  A
transformation is stored as its image sequence, so ``images[x - 1]`` is the
image of the point ``x``.  Points are 1-based everywhere in the public API.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, product

from .errors import DomainError
from .limits import DEFAULT_LIMITS, check


@dataclass(frozen=True, order=True)
class Transformation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        n = len(images)
        if n == 0:
            raise DomainError("a transformation needs at least one point")
        for y in images:
            if not 1 <= y <= n:
                raise DomainError(f"image {y} outside 1..{n}")

    @property
    def n(self):
        return len(self.images)

    def __call__(self, x):
        return self.images[x - 1]

    def __mul__(self, other):
        return compose(self, other)

    def __repr__(self):
        return f"Transformation({list(self.images)})"

    def __str__(self):
        return two_row(self)

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def const(cls, n, r):
        return cls((r,) * n)

    @classmethod
    def from_blocks(cls, blocks, values):
        """Build the map sending the i-th block to ``values[i]``."""
        pairs = {}
        for block, v in zip(blocks, values, strict=True):
            for x in block:
                pairs[x] = v
        n = len(pairs)
        if sorted(pairs) != list(range(1, n + 1)):
            raise DomainError("blocks must tile 1..n")
        return cls(tuple(pairs[x] for x in range(1, n + 1)))

    @property
    def rank(self):
        return len(set(self.images))


def compose(a, b):
    if a.n != b.n:
        raise DomainError(f"cannot compose maps on {a.n} and {b.n} points")
    bi = b.images
    return Transformation(tuple(bi[y - 1] for y in a.images))


def is_order_preserving(a):
    im = a.images
    return all(im[i] <= im[i + 1] for i in range(len(im) - 1))


def is_idempotent(a):
    return compose(a, a) == a


def image(a):
    return frozenset(a.images)


# -- partitions ---------------------------------------------------------------

@dataclass(frozen=True, order=True)
class ConvexPartition:
    """Decomposition of 1..n into consecutive blocks, stored by right ends."""

    n: int
    right_ends: tuple[int, ...]

    def __post_init__(self):
        ends = tuple(self.right_ends)
        object.__setattr__(self, "right_ends", ends)
        if self.n < 1:
            raise DomainError("n must be positive")
        if not ends or ends[-1] != self.n:
            raise DomainError(f"right ends {ends} must finish at n={self.n}")
        if any(e2 <= e1 for e1, e2 in zip(ends, ends[1:])) or ends[0] < 1:
            raise DomainError(f"right ends {ends} must strictly increase from 1")

    @classmethod
    def from_blocks(cls, blocks):
        blocks = [sorted(b) for b in blocks]
        blocks.sort()
        n = sum(len(b) for b in blocks)
        pos = 1
        for b in blocks:
            if b != list(range(pos, pos + len(b))):
                raise DomainError(f"blocks {blocks} are not a convex partition")
            pos += len(b)
        return cls(n, tuple(b[-1] for b in blocks))

    @classmethod
    def parse(cls, text):
        """Parse ``"1,2|3,4|5"``."""
        try:
            blocks = [[int(x) for x in part.split(",") if x.strip()]
                      for part in text.split("|")]
        except ValueError as exc:
            raise DomainError(f"malformed partition {text!r}") from exc
        if any(not b for b in blocks):
            raise DomainError(f"empty block in {text!r}")
        return cls.from_blocks(blocks)

    @classmethod
    def singletons(cls, n):
        return cls(n, tuple(range(1, n + 1)))

    @classmethod
    def whole(cls, n):
        return cls(n, (n,))

    @property
    def size(self):
        return len(self.right_ends)

    def blocks(self):
        out = []
        lo = 1
        for e in self.right_ends:
            out.append(tuple(range(lo, e + 1)))
            lo = e + 1
        return out

    def intervals(self):
        """Blocks as (first, last) pairs."""
        starts = (1,) + tuple(e + 1 for e in self.right_ends[:-1])
        return list(zip(starts, self.right_ends))

    def block_index(self, a):
        for i, e in enumerate(self.right_ends):
            if a <= e:
                return i
        raise DomainError(f"point {a} outside 1..{self.n}")

    def block_of(self, a):
        return self.intervals()[self.block_index(a)]

    def __str__(self):
        sep = "" if self.n < 10 else ","
        return "".join("{" + sep.join(map(str, b)) + "}" for b in self.blocks())

    def to_text(self):
        return "|".join(",".join(map(str, b)) for b in self.blocks())


@dataclass(frozen=True, order=True)
class SetPartition:
    """Kernel of an arbitrary map: blocks sorted by their least element."""

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(sorted(tuple(sorted(b)) for b in self.blocks))
        object.__setattr__(self, "blocks", blocks)
        if sorted(x for b in blocks for x in b) != list(range(1, self.n + 1)):
            raise DomainError("blocks must tile 1..n")

    @property
    def size(self):
        return len(self.blocks)

    def is_convex(self):
        return all(b[-1] - b[0] + 1 == len(b) for b in self.blocks)

    def __str__(self):
        sep = "" if self.n < 10 else ","
        return "".join("{" + sep.join(map(str, b)) + "}" for b in self.blocks)


def kernel(a):
    """Kernel of ``a``: a ConvexPartition for monotone maps, else a SetPartition."""
    if is_order_preserving(a):
        return convex_kernel(a)
    return kernel_classes(a)


def convex_kernel(a):
    if not is_order_preserving(a):
        raise DomainError(f"{a!r} is not order-preserving; its kernel need not be convex")
    im = a.images
    ends = [x for x in range(1, a.n) if im[x - 1] != im[x]]
    ends.append(a.n)
    return ConvexPartition(a.n, tuple(ends))


def enumerate_convex_partitions(n):
    """All 2^(n-1) convex partitions: by block count, then lexicographic right ends."""
    out = []
    for m in range(1, n + 1):
        for cuts in combinations(range(1, n), m - 1):
            out.append(ConvexPartition(n, cuts + (n,)))
    return out


def enumerate_set_partitions(n, limits=DEFAULT_LIMITS):
    check(n, limits.tn_partition_max, "set partitions")

    def rec(x, blocks):
        if x > n:
            yield SetPartition(n, tuple(tuple(b) for b in blocks))
            return
        for b in blocks:
            b.append(x)
            yield from rec(x + 1, blocks)
            b.pop()
        blocks.append([x])
        yield from rec(x + 1, blocks)
        blocks.pop()

    return list(rec(1, []))


def enumerate_on(n, limits=DEFAULT_LIMITS):
    """Every order-preserving map of the n-chain, lexicographic by images."""
    if n < 1:
        raise DomainError("n must be positive")
    check(n, limits.on_max, "enumerate_on")
    for seq in combinations_with_replacement(range(1, n + 1), n):
        yield Transformation(seq)


def enumerate_tn(n, limits=DEFAULT_LIMITS):
    check(n, limits.tn_partition_max, "enumerate_tn")
    for seq in product(range(1, n + 1), repeat=n):
        yield Transformation(seq)


def two_row(a):
    """Two-row notation: kernel classes over their images."""
    k = kernel(a)
    blocks = k.blocks() if isinstance(k, ConvexPartition) else list(k.blocks)
    sep = "" if a.n < 10 else ","
    tops = ["{" + sep.join(map(str, b)) + "}" for b in blocks]
    bottoms = [str(a(b[0])) for b in blocks]
    widths = [max(len(t), len(b)) for t, b in zip(tops, bottoms)]
    top = " ".join(t.center(w) for t, w in zip(tops, widths))
    bottom = " ".join(b.center(w) for b, w in zip(bottoms, widths))
    return top.rstrip() + "\n" + bottom.rstrip()


# -- Green's relations ----------------------------------------------------------

class GreenRelation(enum.Enum):
    R = "R"
    L = "L"
    H = "H"
    D = "D"


def green_related(a, b, rel):
    rel = GreenRelation(rel)
    if a.n != b.n:
        raise DomainError("maps act on different chains")
    if rel is GreenRelation.R:
        return kernel_classes(a) == kernel_classes(b)
    if rel is GreenRelation.L:
        return image(a) == image(b)
    if rel is GreenRelation.H:
        return kernel_classes(a) == kernel_classes(b) and image(a) == image(b)
    return a.rank == b.rank


def class_key(a, rel):
    rel = GreenRelation(rel)
    if rel is GreenRelation.R:
        return kernel_classes(a)
    if rel is GreenRelation.L:
        return image(a)
    raise DomainError(f"cross-sections are supported for R and L only, not {rel.value}")


def kernel_classes(a):
    """Kernel as a SetPartition whether or not ``a`` is monotone."""
    classes = {}
    for x, y in enumerate(a.images, start=1):
        classes.setdefault(y, []).append(x)
    return SetPartition(a.n, tuple(tuple(b) for b in classes.values()))


def all_class_keys(n, rel, monoid="O", limits=DEFAULT_LIMITS):
    rel = GreenRelation(rel)
    if rel is GreenRelation.L:
        pts = range(1, n + 1)
        return {frozenset(c) for m in range(1, n + 1) for c in combinations(pts, m)}
    if rel is GreenRelation.R:
        if monoid == "O":
            return {SetPartition(n, tuple(k.blocks())) for k in enumerate_convex_partitions(n)}
        return set(enumerate_set_partitions(n, limits))
    raise DomainError(f"cross-sections are supported for R and L only, not {rel.value}")


# -- cross-sections -------------------------------------------------------------

@dataclass(frozen=True)
class CrossSection:
    n: int
    elements: frozenset
    relation: GreenRelation = GreenRelation.R

    def __post_init__(self):
        object.__setattr__(self, "elements", frozenset(self.elements))
        object.__setattr__(self, "relation", GreenRelation(self.relation))
        for a in self.elements:
            if a.n != self.n:
                raise DomainError(f"element {a!r} does not act on {self.n} points")

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(sorted(self.elements))

    def __contains__(self, a):
        return a in self.elements

    def sorted(self):
        return sorted(self.elements)

    def by_key(self):
        return {class_key(a, self.relation): a for a in self.elements}


def cross_section_defects(S, monoid="O", limits=DEFAULT_LIMITS):
    """Reasons why ``S`` is not a cross-section; empty when it is one."""
    defects = []
    elems = list(S.elements)
    if monoid == "O":
        bad = [a for a in elems if not is_order_preserving(a)]
        if bad:
            defects.append(f"not order-preserving: {bad[0]!r}")
            return defects
    keys = [class_key(a, S.relation) for a in elems]
    if len(set(keys)) != len(keys):
        defects.append("two elements share a class")
    missing = all_class_keys(S.n, S.relation, monoid, limits) - set(keys)
    if missing:
        defects.append(f"{len(missing)} classes without a representative, e.g. {min(map(str, missing))}")
    members = S.elements
    for a in elems:
        for b in elems:
            if compose(a, b) not in members:
                defects.append(f"not closed: {a!r} * {b!r} = {compose(a, b)!r}")
                return defects
    return defects


def is_cross_section(S, monoid="O", limits=DEFAULT_LIMITS):
    return not cross_section_defects(S, monoid, limits)


def fixed_points(S):
    """Points fixed by every non-constant element of an R-cross-section."""
    pts = set(range(1, S.n + 1))
    for a in S.elements:
        if a.rank > 1:
            pts = {x for x in pts if a(x) == x}
    return frozenset(pts)


# -- constructions --------------------------------------------------------------

def higgins_dual(a):
    """The dual map of ``a`` in O_{n+1}; reverses composition: (ab)* = b* a*."""
    if not is_order_preserving(a):
        raise DomainError(f"{a!r} is not order-preserving")
    n = a.n
    maxima = [b[-1] for b in convex_kernel(a).blocks()]
    r = [a(k) for k in maxima]
    out = []
    for x in range(1, n + 2):
        if x <= r[0]:
            out.append(1)
        elif x > r[-1]:
            out.append(n + 1)
        else:
            i = next(i for i in range(len(r) - 1) if r[i] < x <= r[i + 1])
            out.append(maxima[i] + 1)
    return Transformation(tuple(out))


def pekhterev_r_section(order, limits=DEFAULT_LIMITS):
    """R-cross-section of T_n: blocks sorted by their order-least point go to u_1, u_2, ..."""
    order = tuple(order)
    n = len(order)
    if sorted(order) != list(range(1, n + 1)):
        raise DomainError(f"{order} is not a permutation of 1..{n}")
    rank = {u: i for i, u in enumerate(order)}
    elems = set()
    for p in enumerate_set_partitions(n, limits):
        blocks = sorted(p.blocks, key=lambda b: min(rank[x] for x in b))
        elems.add(Transformation.from_blocks(blocks, order[:len(blocks)]))
    return CrossSection(n, elems, GreenRelation.R)


def dense_cross_section(n, direction="ascending"):
    if n < 1:
        raise DomainError("n must be positive")
    if direction not in ("ascending", "descending"):
        raise DomainError(f"unknown direction {direction!r}")
    elems = set()
    for k in enumerate_convex_partitions(n):
        m = k.size
        values = range(1, m + 1) if direction == "ascending" else range(n - m + 1, n + 1)
        elems.add(Transformation.from_blocks(k.blocks(), tuple(values)))
    return CrossSection(n, elems, GreenRelation.R)
