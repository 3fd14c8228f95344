from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from ordcross.errors import ConfigurationError, DomainError
from ordcross.limits import Limits
from ordcross.transformations import (
    ConvexPartition, CrossSection, GreenRelation, SetPartition, Transformation,
    compose, convex_kernel, cross_section_defects, dense_cross_section,
    enumerate_convex_partitions, enumerate_on, enumerate_set_partitions,
    fixed_points, green_related, higgins_dual, image, is_cross_section,
    is_idempotent, is_order_preserving, kernel, pekhterev_r_section, two_row,
)
from worked_examples import L_STAR, R1, R2, R5, T


def maps(n):
    return st.lists(st.integers(1, n), min_size=n, max_size=n).map(lambda xs: Transformation(tuple(xs)))


def monotone(n):
    return st.lists(st.integers(1, n), min_size=n, max_size=n).map(
        lambda xs: Transformation(tuple(sorted(xs))))


# -- basics ---------------------------------------------------------------------

def test_rejects_out_of_range_images():
    with pytest.raises(DomainError):
        Transformation((1, 3))
    with pytest.raises(DomainError):
        Transformation(())


def test_compose_acts_on_the_right():
    a = T(1, 1, 2, 3)
    b = T(1, 2, 2, 2)
    # pointwise: 3 -> 2 -> 2 and 4 -> 3 -> 2
    assert compose(a, b) == T(1, 1, 2, 2)
    assert compose(b, a) == T(1, 1, 1, 1)
    assert compose(Transformation.const(4, 1), Transformation.identity(4)) == Transformation.const(4, 1)
    c, d = T(2, 3, 1), T(1, 1, 3)
    assert compose(c, d) == T(1, 3, 1)
    assert compose(d, c) == T(2, 2, 1)


def test_compose_size_mismatch():
    with pytest.raises(DomainError):
        compose(T(1, 2), T(1, 2, 3))


def test_constant_then_anything():
    for a in enumerate_on(4):
        for r in range(1, 5):
            assert compose(Transformation.const(4, r), a) == Transformation.const(4, a(r))


def test_order_preserving_examples():
    assert is_order_preserving(Transformation.identity(5))
    assert not is_order_preserving(T(2, 1))
    assert is_order_preserving(T(1, 2, 2))


def test_image_and_kernel():
    a = T(1, 1, 2, 2)
    assert image(a) == frozenset({1, 2})
    assert kernel(a) == ConvexPartition(4, (2, 4))
    c = Transformation.const(5, 3)
    assert image(c) == frozenset({3}) and kernel(c).size == 1
    assert kernel(Transformation.identity(4)) == ConvexPartition.singletons(4)


def test_kernel_of_non_monotone_map():
    a = T(1, 2, 1)
    k = kernel(a)
    assert isinstance(k, SetPartition) and not k.is_convex()
    with pytest.raises(DomainError):
        convex_kernel(a)


def test_green_relations_examples():
    a, b, c = T(1, 1, 3), T(2, 2, 3), T(1, 3, 3)
    assert green_related(a, b, GreenRelation.R)
    assert green_related(a, c, GreenRelation.L)
    assert not green_related(Transformation.identity(3), Transformation.const(3, 1), GreenRelation.D)
    assert green_related(a, a, GreenRelation.H)


def test_green_relations_exhaustive_small():
    elems = list(enumerate_on(4))
    for a in elems:
        for b in elems:
            assert green_related(a, b, "R") == (kernel(a) == kernel(b))
            assert green_related(a, b, "L") == (image(a) == image(b))
            assert green_related(a, b, "D") == (len(image(a)) == len(image(b)))


# -- partitions -----------------------------------------------------------------

def test_convex_partition_parse_and_text():
    k = ConvexPartition.parse("1,2|3,4|5")
    assert k.right_ends == (2, 4, 5)
    assert str(k) == "{12}{34}{5}"
    assert k.to_text() == "1,2|3,4|5"
    assert k.block_of(3) == (3, 4)
    with pytest.raises(DomainError):
        ConvexPartition.parse("1,3|2")
    with pytest.raises(DomainError):
        ConvexPartition.parse("1,x")
    with pytest.raises(DomainError):
        ConvexPartition(4, (2, 2, 4))


def test_convex_partition_enumeration_order():
    ks = enumerate_convex_partitions(4)
    assert len(ks) == 8
    assert [k.right_ends for k in ks[:4]] == [(4,), (1, 4), (2, 4), (3, 4)]
    sizes = [k.size for k in ks]
    assert sizes == sorted(sizes)


def test_set_partitions_are_bell_numbers():
    assert [len(enumerate_set_partitions(n)) for n in range(1, 6)] == [1, 2, 5, 15, 52]


# -- enumeration ----------------------------------------------------------------

def _count_monotone_sequences(n):
    # direct filter over all n^n sequences
    return sum(1 for s in product(range(1, n + 1), repeat=n)
               if all(s[i] <= s[i + 1] for i in range(n - 1)))


@pytest.mark.parametrize("n", range(1, 8))
def test_enumerate_on_matches_direct_count(n):
    got = list(enumerate_on(n))
    assert len(got) == _count_monotone_sequences(n)
    assert got == sorted(got)
    assert len(set(got)) == len(got)


def test_enumerate_on_frozen_counts():
    assert [sum(1 for _ in enumerate_on(n)) for n in (1, 3, 4)] == [1, 10, 35]


def test_enumerate_on_guard():
    with pytest.raises(ConfigurationError):
        list(enumerate_on(11))
    assert sum(1 for _ in enumerate_on(11, Limits().unlocked())) == 352716


# -- cross-sections -------------------------------------------------------------

def test_dense_sections_reproduce_worked_example():
    assert set(dense_cross_section(4, "ascending").elements) == set(R1.elements)
    assert set(dense_cross_section(4, "descending").elements) == set(R2.elements)
    assert dense_cross_section(1).elements == {Transformation.const(1, 1)}


def test_cross_section_predicate():
    assert is_cross_section(R1)
    assert is_cross_section(R2)
    assert is_cross_section(R5)
    broken = CrossSection(4, R1.elements - {Transformation.identity(4)})
    defects = cross_section_defects(broken)
    assert defects and "without a representative" in defects[0]
    assert not is_cross_section(broken)


def test_cross_section_rejects_non_closed_set():
    S = CrossSection(3, [T(1, 1, 1), T(1, 1, 2), T(1, 3, 3), T(1, 2, 3)])
    assert any("not closed" in d for d in cross_section_defects(S))
    assert is_cross_section(CrossSection(2, [T(1, 2), T(2, 2)]))


def test_fixed_points_examples():
    assert fixed_points(R1) == {1}
    assert fixed_points(R2) == {4}
    assert fixed_points(R5) == {1}
    with_const_1 = CrossSection(4, L_STAR | {Transformation.const(4, 1)})
    assert is_cross_section(with_const_1)
    assert fixed_points(with_const_1) == {1, 4}


# -- constructions --------------------------------------------------------------

def test_higgins_dual_examples():
    assert higgins_dual(T(1, 2, 2)) == T(1, 2, 4, 4)
    assert higgins_dual(Transformation.identity(3)) == Transformation.identity(4)
    assert higgins_dual(Transformation.const(3, 3)) == T(1, 1, 1, 4)
    with pytest.raises(DomainError):
        higgins_dual(T(2, 1))


@pytest.mark.parametrize("n", range(1, 5))
def test_higgins_dual_reverses_products(n):
    elems = list(enumerate_on(n))
    for a in elems:
        for b in elems:
            assert higgins_dual(compose(a, b)) == compose(higgins_dual(b), higgins_dual(a))


@pytest.mark.parametrize("n", range(1, 6))
def test_higgins_dual_is_injective_and_monotone(n):
    duals = [higgins_dual(a) for a in enumerate_on(n)]
    assert len(set(duals)) == len(duals)
    for d in duals:
        assert is_order_preserving(d)
        assert d(1) == 1 and d(n + 1) == n + 1


def test_pekhterev_small():
    S = pekhterev_r_section((1, 2))
    assert len(S) == 2
    S3 = pekhterev_r_section((1, 2, 3))
    a = next(a for a in S3 if kernel(a) == SetPartition(3, ((1, 3), (2,))))
    assert a == T(1, 2, 1)
    assert is_cross_section(S3, monoid="T")


@pytest.mark.parametrize("order", [(1, 2, 3, 4), (3, 1, 4, 2), (4, 3, 2, 1)])
def test_pekhterev_is_cross_section_of_full_monoid(order):
    assert is_cross_section(pekhterev_r_section(order), monoid="T")


@pytest.mark.parametrize("n", range(1, 6))
def test_pekhterev_natural_order_meets_on_in_dense_section(n):
    S = pekhterev_r_section(tuple(range(1, n + 1)))
    restricted = {a for a in S if is_order_preserving(a)}
    assert restricted == set(dense_cross_section(n, "ascending").elements)


def test_two_row_text():
    assert two_row(T(1, 1, 3, 3, 4)) == "{12} {34} {5}\n 1    3    4"


# -- properties -----------------------------------------------------------------

@settings(max_examples=200, deadline=None)
@given(st.integers(1, 8).flatmap(lambda n: st.tuples(maps(n), maps(n), maps(n))))
def test_composition_is_associative(triple):
    a, b, c = triple
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 8).flatmap(lambda n: st.tuples(monotone(n), monotone(n))))
def test_monotone_maps_are_closed(pair):
    a, b = pair
    assert is_order_preserving(compose(a, b))


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 8).flatmap(monotone))
def test_kernel_blocks_are_preimages(a):
    k = kernel(a)
    for block in k.blocks():
        assert len({a(x) for x in block}) == 1
    assert len({a(b[0]) for b in k.blocks()}) == k.size
    assert is_idempotent(a) == (compose(a, a) == a)
