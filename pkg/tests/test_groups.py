"""Group arithmetic: generalized quaternion structure against brute force."""

import random

import pytest

from gqcensus.groups import (QElement, q_element, q_multiply, q_inverse,
                             quaternion_group, cyclic_group, dihedral_group,
                             klein_four_group, normal_subgroups, quotient_group,
                             all_subgroups, groups_isomorphic, divisors,
                             element_order_qe)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_closed_form_matches_table(n):
    g = quaternion_group(n)
    for x in range(g.order):
        for y in range(g.order):
            prod = q_multiply(q_element(x, n), q_element(y, n), n)
            assert prod.index(n) == g.mult(x, y)


@pytest.mark.parametrize("n", [2, 3, 4, 6])
def test_inverses_and_associativity(n):
    g = quaternion_group(n)
    for x in range(g.order):
        inv = q_inverse(q_element(x, n), n).index(n)
        assert g.mult(x, inv) == 0
        assert g.mult(inv, x) == 0
        assert g.inv(x) == inv
    rng = random.Random(5)
    for _ in range(200):
        x, y, z = (rng.randrange(g.order) for _ in range(3))
        assert g.mult(g.mult(x, y), z) == g.mult(x, g.mult(y, z))


@pytest.mark.parametrize("n", range(2, 9))
def test_unique_involution_is_central_half_turn(n):
    g = quaternion_group(n)
    involutions = [x for x in range(1, g.order) if g.element_order(x) == 2]
    assert involutions == [n]  # a^n and nothing else
    center = g.center()
    assert set(center.elements) == {0, n}


@pytest.mark.parametrize("n", range(2, 9))
def test_elements_outside_cyclic_part_have_order_four(n):
    g = quaternion_group(n)
    for i in range(2 * n):
        x = g.element(i, 1)
        assert g.element_order(x) == 4
        assert element_order_qe(QElement(i, 1), n) == 4
    for i in range(2 * n):
        assert g.element_order(i) == element_order_qe(QElement(i, 0), n)


@pytest.mark.parametrize("n", range(2, 9))
def test_normal_subgroups_match_bruteforce_oracle(n):
    g = quaternion_group(n)
    expected = sorted(elems for elems in all_subgroups(g) if g.is_normal(elems))
    got = sorted(s.elements for s in normal_subgroups(g))
    assert got == expected
    for s in normal_subgroups(g):
        assert s.is_normal


@pytest.mark.parametrize("n", range(2, 9))
def test_index_two_normal_subgroup_count(n):
    g = quaternion_group(n)
    count = sum(1 for s in normal_subgroups(g) if s.order == 2 * n)
    assert count == (3 if n % 2 == 0 else 1)


@pytest.mark.parametrize("n", range(2, 9))
def test_quotient_by_center_is_dihedral(n):
    g = quaternion_group(n)
    sub = g.subgroup([n])  # <a^n>, order 2
    assert sub.order == 2
    quot = quotient_group(g, sub)
    assert groups_isomorphic(quot, dihedral_group(n))


def test_quotient_q8_by_squares_is_klein_four():
    g = quaternion_group(2)
    quot = quotient_group(g, g.subgroup([2]))
    assert groups_isomorphic(quot, klein_four_group())
    assert not groups_isomorphic(quot, cyclic_group(4))


def test_quotient_rejects_non_normal():
    g = quaternion_group(3)
    sub = g.subgroup([g.b])  # <b> has order 4, not normal in Q_12
    assert not sub.is_normal
    with pytest.raises(ValueError):
        quotient_group(g, sub)


def test_groups_isomorphic_distinguishes_q8_and_d8():
    assert not groups_isomorphic(quaternion_group(2), dihedral_group(4))
    assert groups_isomorphic(quaternion_group(2), quaternion_group(2))
    assert groups_isomorphic(cyclic_group(6), cyclic_group(6))
    assert not groups_isomorphic(cyclic_group(4), klein_four_group())


def test_divisors():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(1) == [1]


def test_subgroup_generated_and_descriptor():
    g = quaternion_group(2)
    sub = g.subgroup([1])  # <a> in Q_8
    assert sub.order == 4
    assert sub.is_normal
    full = g.subgroup([1, g.b])
    assert full.order == 8
