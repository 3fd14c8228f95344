"""End-to-end acceptance checks, one test per criterion.

Run with ``pytest tests/test_acceptance.py`` or ``python tests/test_acceptance.py``;
either way one PASS/FAIL line per criterion is printed at the end.
"""

import time

import pytest

from ordcross.classification import classify, oracle_semigroup_iso
from ordcross.lsections import (
    RespectfulTree, dual_identity_holds, enumerate_respectful, l_cross_section,
)
from ordcross.oracle import (
    brute_force_cross_sections, verify_description_theorem, verify_dual_theorem,
    verify_l_theorem,
)
from ordcross.rsections import (
    phi_semigroup, reconstruct_tree, theta_cardinality, theta_set,
)
from ordcross.transformations import (
    ConvexPartition, Transformation, compose, dense_cross_section, fixed_points,
    higgins_dual, image, is_cross_section, kernel,
)
from ordcross.trees import (
    enumerate_decreasing, enumerate_full_shapes, enumerate_shapes,
    is_decreasing, leaf_count, mirror_tree, omega, skeleton, subordinates,
)
from worked_examples import (
    L_THREE, L_SOLID_TO_DASHED, L_STAR, R1, R2, R5, T, T3_5, TABLE_MISPRINTS,
    TABLE_PRINTED,
)


class Clock:
    def __init__(self, limit):
        self.limit = limit
        self.start = time.perf_counter()

    def check(self):
        elapsed = time.perf_counter() - self.start
        assert elapsed < self.limit, f"took {elapsed:.1f} s, limit {self.limit} s"


def _partition(text):
    return ConvexPartition.from_blocks([[int(c) for c in b] for b in text.strip("{}").split("}{")])


@pytest.mark.criterion(1, "dense sections of O_4 reproduced")
def test_criterion_01_dense():
    clock = Clock(1)
    asc = dense_cross_section(4, "ascending")
    desc = dense_cross_section(4, "descending")
    assert asc.elements == R1.elements and len(asc) == 8
    assert desc.elements == R2.elements and len(desc) == 8
    clock.check()


@pytest.mark.criterion(2, "partition table of the five-point tree reproduced")
def test_criterion_02_table():
    clock = Clock(1)
    sg = phi_semigroup(T3_5)
    assert len(sg) == 16 == len(TABLE_PRINTED)
    for text, printed in TABLE_PRINTED.items():
        k = _partition(text)
        ours = sg[k]
        assert kernel(ours) == k
        if text in TABLE_MISPRINTS:
            continue
        assert [ours(r) for r in k.right_ends] == printed, text
    # cell 1: the printed map has a different kernel from its row label
    assert sg[_partition("{12}{345}")] == T(1, 1, 3, 3, 3)
    assert kernel(Transformation(TABLE_MISPRINTS["{12}{345}"])) != _partition("{12}{345}")
    # cell 2: the printed map times the printed {1}{2}{3}{45} row lands in the
    # same class but is a different map, so the printed table is not closed
    bad = Transformation(TABLE_MISPRINTS["{1}{2}{34}{5}"])
    prod = compose(bad, T(1, 2, 3, 4, 4))
    assert kernel(prod) == kernel(bad) and prod != bad
    assert sg[_partition("{1}{2}{34}{5}")] == prod
    clock.check()


@pytest.mark.criterion(3, "single-fixed-point section round trip")
def test_criterion_03_r5():
    clock = Clock(1)
    assert is_cross_section(R5)
    assert fixed_points(R5) == {1}
    t = reconstruct_tree(R5)
    assert is_decreasing(t)
    assert phi_semigroup(t).element_set() == R5.elements
    clock.check()


@pytest.mark.criterion(4, "decreasing trees match exhaustive R search, n = 3..5")
def test_criterion_04_description():
    clock = Clock(600)
    for n in (3, 4, 5):
        res = verify_description_theorem(n)
        assert res.ok, res.discrepancies
    clock.check()


@pytest.mark.criterion(5, "respectful trees match exhaustive L search, n = 2..4")
def test_criterion_05_l_sections():
    clock = Clock(60)
    for n in (2, 3, 4):
        res = verify_l_theorem(n)
        assert res.ok, res.discrepancies
    assert any(l_cross_section(g).elements == L_THREE.elements for g in enumerate_respectful(3))
    clock.check()


@pytest.mark.criterion(6, "dual identity and two-fixed-point equivalence, n = 3, 4")
def test_criterion_06_dual_bridge():
    clock = Clock(60)
    for n in (3, 4):
        for g in enumerate_respectful(n):
            assert dual_identity_holds(g, 1) and dual_identity_holds(g, n + 1)
        res = verify_dual_theorem(n)
        assert res.ok, res.discrepancies
    clock.check()


@pytest.mark.criterion(7, "dual of the three-point L-section")
def test_criterion_07_worked_dual():
    clock = Clock(1)
    for a, dashed in L_SOLID_TO_DASHED:
        assert higgins_dual(T(*a)) == T(*dashed)
    assert {higgins_dual(a) for a in L_THREE} == L_STAR
    clock.check()


@pytest.mark.criterion(8, "classification agrees with isomorphism search, n = 3..5")
def test_criterion_08_classification():
    clock = Clock(900)
    for n in (3, 4, 5):
        data = [(t, phi_semigroup(t).element_set()) for t in enumerate_decreasing(n)]
        wrong = []
        for t1, s1 in data:
            for t2, s2 in data:
                if classify(t1, t2).isomorphic != (oracle_semigroup_iso(s1, s2) is not None):
                    wrong.append((t1, t2))
        assert not wrong, f"n={n}: {len(wrong)} disagreements"
    clock.check()


@pytest.mark.criterion(9, "theta cardinality law, n <= 7")
def test_criterion_09_theta():
    clock = Clock(120)
    for n in range(1, 8):
        for t in enumerate_decreasing(n):
            sg = phi_semigroup(t)
            for x in skeleton(t):
                assert len(theta_set(t, x, sg)) == theta_cardinality(t, x)
    clock.check()


def _markings(shape, lo, hi):
    """Count interval markings by backtracking over every split point."""
    if shape == (None, None):
        return 1 if lo == hi else 0
    total = 0
    for m in range(lo, hi):
        left, right = shape
        if m - lo + 1 != leaf_count(left):
            continue
        total += _markings(left, lo, m) * _markings(right, m + 1, hi)
    return total


@pytest.mark.criterion(10, "structural invariants")
def test_criterion_10_invariants():
    clock = Clock(300)
    for n in range(1, 7):
        for t in enumerate_decreasing(n):
            sg = phi_semigroup(t)
            assert len(sg) == 2 ** (n - 1)
            # one or two fixed points, and two only as the pair {1, n}
            fp = fixed_points(sg.cross_section())
            assert t.root in fp and 1 <= len(fp) <= 2
            assert len(fp) == 1 or fp == {1, n}
            for _, a in sg:
                im = image(a)
                for v in im:
                    assert set(omega(t, v)) <= im
    for n in range(1, 8):
        ds = enumerate_decreasing(n)
        assert {mirror_tree(t) for t in ds} == set(ds)
    shapes = [s for k in range(6) for s in enumerate_shapes(k)]
    for a in shapes:
        assert subordinates(a, a)
        ups = [b for b in shapes if subordinates(a, b)]
        for b in ups:
            assert all(subordinates(a, c) for c in shapes if subordinates(b, c))
    for k in range(1, 8):
        for s in enumerate_full_shapes(k):
            assert _markings(s, 1, k) == 1
        for s in enumerate_respectful(k):
            assert RespectfulTree(s).positions()[""] == (1, k)
    clock.check()


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
