import pytest

from ordcross.errors import BudgetExceeded, ConfigurationError
from ordcross.limits import Limits
from ordcross.oracle import (
    brute_force_cross_sections, count_summary, format_count_table,
    two_fixed_point_sections, verify_description_theorem, verify_dual_theorem,
    verify_l_theorem,
)
from ordcross.transformations import GreenRelation, is_cross_section
from worked_examples import L_THREE, R1, R2, R5


def test_small_searches():
    assert len(brute_force_cross_sections(1).found) == 1
    r2 = brute_force_cross_sections(2)
    assert len(r2.found) == 2 and all(is_cross_section(S) for S in r2.found)
    assert [len(brute_force_cross_sections(n, "L").found) for n in (1, 2, 3, 4)] == [1, 1, 2, 3]


def test_worked_sections_are_found():
    found = brute_force_cross_sections(4).element_sets()
    assert len(found) == 12
    for S in (R1, R2, R5):
        assert frozenset(S) in found
    assert frozenset(L_THREE) in brute_force_cross_sections(3, "L").element_sets()


def test_search_is_deterministic():
    a = brute_force_cross_sections(4)
    b = brute_force_cross_sections(4)
    assert [sorted(S) for S in a.found] == [sorted(S) for S in b.found]
    assert a.nodes_explored == b.nodes_explored


@pytest.mark.parametrize("n", range(1, 5))
def test_every_result_is_a_cross_section(n):
    for rel in (GreenRelation.R, GreenRelation.L):
        for S in brute_force_cross_sections(n, rel).found:
            assert is_cross_section(S)


def test_only_r_and_l():
    with pytest.raises(ValueError):
        brute_force_cross_sections(3, "H")


def test_guards_and_budget():
    with pytest.raises(ConfigurationError):
        brute_force_cross_sections(6)
    with pytest.raises(ConfigurationError):
        brute_force_cross_sections(5, "L")
    with pytest.raises(BudgetExceeded):
        brute_force_cross_sections(5, limits=Limits(budget=0.0))


def test_two_fixed_points():
    assert len(two_fixed_point_sections(brute_force_cross_sections(4))) == 4
    assert two_fixed_point_sections(brute_force_cross_sections(1)) == []


@pytest.mark.parametrize("n", range(1, 6))
def test_description_theorem(n):
    res = verify_description_theorem(n)
    assert res.ok, res.discrepancies


@pytest.mark.parametrize("n", range(1, 5))
def test_l_theorem(n):
    res = verify_l_theorem(n)
    assert res.ok, res.discrepancies


@pytest.mark.parametrize("n", range(1, 5))
def test_dual_theorem(n):
    res = verify_dual_theorem(n)
    assert res.ok, res.discrepancies


def test_count_summary():
    rows = count_summary(5)
    assert [r["O_n"] for r in rows] == [1, 3, 10, 35, 126]
    assert [r["decreasing_trees"] for r in rows] == [1, 2, 5, 12, 28]
    assert [r["R_cross_sections"] for r in rows] == [1, 2, 5, 12, 28]
    assert [r["respectful_trees"] for r in rows] == [1, 1, 2, 3, 6]
    assert [r["L_cross_sections"] for r in rows] == [1, 1, 2, 3, None]
    assert [r["two_fixed_R"] for r in rows] == [0, 2, 2, 4, 6]
    assert all(r["consistent"] for r in rows)
    table = format_count_table(rows)
    assert table.splitlines()[-1].split()[-2:] == ["-", "6"]


def _violations_with_root(t):
    """Decreasing conditions with the root allowed as the upper vertex."""
    from ordcross.trees import left_inner, omega, right_inner, subordinates
    lp, rp = set(omega(t, 1)), set(omega(t, t.n))
    gl = {x: left_inner(t, x).shape for x in range(1, t.n + 1)}
    gr = {x: right_inner(t, x).shape for x in range(1, t.n + 1)}
    bad = 0
    for x in range(1, t.n + 1):
        y = t.parent[x]
        while y is not None:
            if x in lp and y in lp and not subordinates(gr[x], gr[y]):
                bad += 1
            if x in rp and y in rp and not subordinates(gl[x], gl[y]):
                bad += 1
            y = t.parent[y]
    return bad


def test_root_must_stay_out_of_the_decreasing_conditions():
    from ordcross.trees import enumerate_trees
    counts = [sum(1 for t in enumerate_trees(n) if not _violations_with_root(t)) for n in range(2, 6)]
    searched = [len(brute_force_cross_sections(n).found) for n in range(2, 6)]
    assert counts == [0, 1, 2, 6] and searched == [2, 5, 12, 28]


@pytest.mark.parametrize("n", range(1, 6))
def test_searched_sections_have_tree_structure(n):
    from ordcross.rsections import reconstruct_tree
    from ordcross.transformations import fixed_points, image
    from ordcross.trees import omega
    for S in brute_force_cross_sections(n).found:
        fp = fixed_points(S)
        assert 1 <= len(fp) <= 2 and (len(fp) == 1 or fp == {1, n})
        t = reconstruct_tree(S, check_cross_section=False)
        for a in S:
            im = image(a)
            assert all(set(omega(t, v)) <= im for v in im)
