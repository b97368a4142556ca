import itertools
import random
from math import factorial

import pytest

from app.errors import PermutationError
from app.utils.permutation_utils import (
    Partition,
    Permutation,
    canonical_class_rep,
    centralizer_elements,
    centralizer_order,
    compose,
    conjugate,
    cycle_type,
    inverse,
    partitions_of,
)


def cyc(degree, *cycles):
    return Permutation.from_cycles(cycles, degree)


def random_perm(rng, degree):
    images = list(range(degree))
    rng.shuffle(images)
    return Permutation(tuple(images))


def test_partition_is_normalized():
    pi = Partition((1, 3, 1, 2))
    assert pi.parts == (3, 2, 1, 1)
    assert pi.total == 7
    assert pi.length == 4
    assert not pi.is_trivial
    assert Partition((1, 1)).is_trivial


def test_partition_rejects_bad_parts():
    with pytest.raises(PermutationError):
        Partition((2, 0))
    with pytest.raises(PermutationError):
        Partition(())


def test_permutation_rejects_non_bijection():
    with pytest.raises(PermutationError):
        Permutation((0, 0, 1))


def test_compose_applies_right_factor_first():
    p = cyc(3, (0, 1, 2))
    q = cyc(3, (0, 1))
    pq = compose(p, q)
    assert pq.images == (2, 1, 0)
    assert all(pq(x) == p(q(x)) for x in range(3))
    assert cycle_type(pq) == Partition((2, 1))


def test_compose_identity_and_inverse():
    rng = random.Random(3)
    p = random_perm(rng, 6)
    identity = Permutation.identity(6)
    assert compose(identity, p) == p
    assert compose(p, inverse(p)) == identity
    assert compose(inverse(p), p) == identity


def test_compose_degree_mismatch():
    with pytest.raises(PermutationError):
        compose(Permutation.identity(2), Permutation.identity(3))


def test_inverse_examples():
    assert inverse(Permutation.identity(4)) == Permutation.identity(4)
    assert inverse(cyc(2, (0, 1))) == cyc(2, (0, 1))
    assert inverse(cyc(3, (0, 1, 2))) == cyc(3, (0, 2, 1))


def test_cycle_type_examples():
    assert cycle_type(Permutation.identity(4)) == Partition((1, 1, 1, 1))
    assert cycle_type(cyc(5, (0, 1, 2), (3, 4))) == Partition((3, 2))
    assert cycle_type(cyc(7, (0, 1, 2), (3, 4))) == Partition((3, 2, 1, 1))


def test_conjugate_examples():
    p = cyc(3, (0, 1))
    assert conjugate(p, Permutation.identity(3)) == p
    assert conjugate(p, cyc(3, (0, 1, 2))) == cyc(3, (1, 2))


def test_conjugation_preserves_cycle_type():
    rng = random.Random(11)
    for _ in range(50):
        p, g = random_perm(rng, 8), random_perm(rng, 8)
        assert cycle_type(conjugate(p, g)) == cycle_type(p)
        assert cycle_type(compose(g, compose(p, inverse(g)))) == cycle_type(p)


def test_compose_is_associative():
    rng = random.Random(5)
    for _ in range(50):
        p, q, r = (random_perm(rng, 7) for _ in range(3))
        assert compose(p, compose(q, r)) == compose(compose(p, q), r)


def test_canonical_class_rep_examples():
    assert canonical_class_rep(Partition((3, 2, 1, 1))) == cyc(7, (0, 1, 2), (3, 4))
    assert canonical_class_rep(Partition((7,))) == cyc(7, (0, 1, 2, 3, 4, 5, 6))
    assert canonical_class_rep(Partition((1, 1))) == Permutation.identity(2)


def test_canonical_class_rep_is_conjugate_to_any_member():
    rng = random.Random(7)
    for _ in range(30):
        p = random_perm(rng, 7)
        rep = canonical_class_rep(cycle_type(p))
        assert cycle_type(rep) == cycle_type(p)


@pytest.mark.parametrize("parts, size", [((7,), 7), ((3, 2, 1, 1), 12), ((2, 2, 2), 48)])
def test_centralizer_sizes(parts, size):
    rep = canonical_class_rep(Partition(parts))
    elements = list(centralizer_elements(rep))
    assert len(elements) == size == centralizer_order(Partition(parts))
    assert len(set(elements)) == size


def test_centralizer_of_identity_is_everything():
    elements = set(centralizer_elements(Permutation.identity(4)))
    assert len(elements) == factorial(4)


@pytest.mark.parametrize("degree", range(1, 7))
def test_centralizer_matches_brute_force(degree):
    group = [Permutation(images) for images in itertools.permutations(range(degree))]
    for pi in partitions_of(degree):
        rep = canonical_class_rep(pi)
        expected = {g for g in group if conjugate(rep, g) == rep}
        found = set(centralizer_elements(rep))
        assert found == expected
        assert len(found) == centralizer_order(pi)


def test_centralizer_rejects_non_canonical_input():
    with pytest.raises(PermutationError):
        list(centralizer_elements(cyc(3, (1, 2))))


def test_partitions_of_order():
    parts = [pi.parts for pi in partitions_of(5)]
    assert parts == [(5,), (4, 1), (3, 2), (3, 1, 1), (2, 2, 1), (2, 1, 1, 1), (1, 1, 1, 1, 1)]
    assert len(list(partitions_of(7))) == 15


def test_centralizer_elements_are_produced_one_at_a_time():
    rep = canonical_class_rep(Partition((2,) + (1,) * 10))
    first = list(itertools.islice(centralizer_elements(rep), 1000))
    assert len(set(first)) == 1000
    assert first[0] == Permutation.identity(12)
    assert all(conjugate(rep, g) == rep for g in first)
