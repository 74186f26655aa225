"""Finite fields, subspaces and designs against first-principles oracles."""

import random
from itertools import combinations, product

import pytest

from gqcensus.fields import (is_prime, prime_power, field_of_order, make_field,
                             squares_and_nonsquares, gaussian_binomial,
                             enumerate_subspaces, subspace_points,
                             subspace_contains, subspace_from_vectors, rref,
                             biplane_h11, gdd_points_blocks, vec_add, vec_scale)

SMALL_FIELDS = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27]


def test_prime_power_detection():
    assert prime_power(8) == (2, 3)
    assert prime_power(9) == (3, 2)
    assert prime_power(7) == (7, 1)
    assert prime_power(12) is None
    assert prime_power(1) is None
    assert is_prime(31)
    assert not is_prime(33)


@pytest.mark.parametrize("q", SMALL_FIELDS)
def test_field_axioms(q):
    f = field_of_order(q)
    rng = random.Random(q)
    elts = list(range(q))
    for _ in range(150):
        x, y, z = (rng.choice(elts) for _ in range(3))
        assert f.add(x, y) == f.add(y, x)
        assert f.mul(x, y) == f.mul(y, x)
        assert f.add(f.add(x, y), z) == f.add(x, f.add(y, z))
        assert f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z))
        assert f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z))
    for x in elts:
        assert f.add(x, f.neg(x)) == 0
        if x:
            assert f.mul(x, f.inv(x)) == 1


@pytest.mark.parametrize("q", SMALL_FIELDS)
def test_primitive_element_generates(q):
    f = field_of_order(q)
    powers = {f.power(f.theta, e) for e in range(q - 1)}
    assert powers == set(range(1, q))
    for x in range(1, q):
        assert f.power(f.theta, f.discrete_log(x)) == x


def test_discrete_log_rejects_zero():
    f = field_of_order(7)
    with pytest.raises(ValueError):
        f.discrete_log(0)


@pytest.mark.parametrize("q", [3, 5, 7, 9, 11, 13, 27])
def test_squares_split_evenly(q):
    f = field_of_order(q)
    sq, nsq = squares_and_nonsquares(f)
    assert len(sq) == len(nsq) == (q - 1) // 2
    assert sq == frozenset(f.mul(x, x) for x in range(1, q))
    # -1 is a square exactly when q = 1 (mod 4)
    assert (f.neg(1) in sq) == (q % 4 == 1)


def test_squares_rejects_even_characteristic():
    with pytest.raises(ValueError):
        squares_and_nonsquares(field_of_order(4))


@pytest.mark.parametrize("q,d", [(2, 3), (2, 4), (3, 3), (4, 3), (5, 2)])
def test_subspace_counts_match_gaussian_binomial(q, d):
    f = field_of_order(q)
    for k in range(d + 1):
        subs = enumerate_subspaces(f, d, k)
        assert len(subs) == gaussian_binomial(d, k, q)
        assert len({s.basis for s in subs}) == len(subs)
        if k == 0:
            continue
        for s in subs[:5]:
            pts = subspace_points(f, s)
            assert len(pts) == q ** k
            for v in pts:
                assert subspace_contains(f, s, v)


def test_rref_canonical_under_row_mixing():
    f = field_of_order(5)
    rng = random.Random(1)
    vecs = [(1, 2, 3), (0, 1, 4)]
    base = rref(f, vecs)
    for _ in range(20):
        c = rng.randrange(1, 5)
        scale = rng.randrange(1, 5)
        mixed = [tuple(f.add(a, f.mul(c, b)) for a, b in zip(vecs[0], vecs[1])),
                 tuple(f.mul(scale, b) for b in vecs[1])]
        assert rref(f, mixed) == base
    sub = subspace_from_vectors(f, vecs)
    assert sub.dimension == 2


def test_biplane_is_11_5_2_design():
    points, blocks = biplane_h11()
    assert len(points) == 11 and len(blocks) == 11
    assert all(len(b) == 5 for b in blocks)
    for x, y in combinations(points, 2):
        assert sum(1 for b in blocks if x in b and y in b) == 2


@pytest.mark.parametrize("q,d", [(2, 2), (3, 2), (2, 3), (5, 2)])
def test_affine_hyperplane_design_parameters(q, d):
    f = field_of_order(q)
    points, blocks = gdd_points_blocks(f, d)
    assert len(points) == q ** d - 1
    assert len(blocks) == q ** d - 1
    for b in blocks:
        assert len(b.points) == q ** (d - 1)
        zero = tuple([0] * d)
        assert zero not in b.points
    # each point lies on q^(d-1) blocks
    v = points[0]
    assert sum(1 for b in blocks if v in b.points) == q ** (d - 1)


def test_vector_helpers():
    f = field_of_order(3)
    assert vec_add(f, (1, 2), (2, 2)) == (0, 1)
    assert vec_scale(f, 2, (1, 2)) == (2, 1)


def test_field_cache_returns_same_object():
    assert make_field(3, 2) is make_field(3, 2)
    assert field_of_order(9) is make_field(3, 2)
    with pytest.raises(ValueError):
        field_of_order(6)
