import itertools
import random

import pytest

from app.errors import DatumError, InvariantError
from app.services.datum_service import parse_datum
from app.services.rigid_service import (
    BetaSearch,
    ConstellationPair,
    class_key,
    enumerate_rigid_classes,
    is_transitive,
    search_shift,
)
from app.utils.permutation_utils import (
    Permutation,
    canonical_class_rep,
    conjugate,
    cycle_type,
)
from app.utils.text_utils import format_datum_text
from tests.conftest import small_data


def random_perm(rng, degree):
    images = list(range(degree))
    rng.shuffle(images)
    return Permutation(tuple(images))


def test_rigid_counts_of_worked_data(worked_case):
    datum, (rigid, _, _) = worked_case
    assert len(enumerate_rigid_classes(datum)) == rigid


@pytest.mark.parametrize("text, expected", [
    ("2; 2; 2; 1,1", 1),
    ("4; 2,2; 2,2; 3,1", 0),
    ("3; 3; 3; 3", 1),
    ("3; 3; 2,1; 2,1", 1),
])
def test_rigid_counts_of_small_data(text, expected):
    assert len(enumerate_rigid_classes(parse_datum(text))) == expected


def test_representatives_satisfy_the_datum(census_datum):
    reps = enumerate_rigid_classes(census_datum)
    alpha = canonical_class_rep(census_datum.partitions[0])
    for pair in reps:
        assert pair.alpha == alpha
        assert pair.cycle_types() == tuple(census_datum.partitions)
        assert is_transitive(pair)
        cycles = sum(len(p.cycles()) for p in (pair.alpha, pair.beta, pair.gamma))
        assert cycles == census_datum.degree + 2 - 2 * census_datum.cover_genus


def test_keys_are_distinct_and_sorted(census_datum):
    keys = [class_key(pair) for pair in enumerate_rigid_classes(census_datum)]
    assert len(set(keys)) == 9
    assert keys == sorted(keys)


def test_class_key_is_conjugation_invariant(census_datum):
    rng = random.Random(2024)
    for pair in enumerate_rigid_classes(census_datum):
        key = class_key(pair)
        for _ in range(100):
            g = random_perm(rng, census_datum.degree)
            moved = ConstellationPair(conjugate(pair.alpha, g), conjugate(pair.beta, g))
            assert class_key(moved) == key


def test_enumeration_does_not_depend_on_jobs(census_datum):
    sequential = enumerate_rigid_classes(census_datum, jobs=1)
    assert enumerate_rigid_classes(census_datum, jobs=2) == sequential
    assert enumerate_rigid_classes(census_datum, jobs=8) == sequential


def test_enumeration_requires_three_points():
    with pytest.raises(DatumError):
        enumerate_rigid_classes(parse_datum("2; 2; 2"))


def test_is_transitive():
    alpha = Permutation.from_cycles([(0, 1)], 4)
    beta = Permutation.from_cycles([(2, 3)], 4)
    assert not is_transitive(ConstellationPair(alpha, beta))
    beta = Permutation.from_cycles([(1, 2, 3)], 4)
    assert is_transitive(ConstellationPair(alpha, beta))


def test_validate_rejects_wrong_types(census_datum):
    alpha = Permutation.from_cycles([(0, 1)], 4)
    beta = Permutation.from_cycles([(1, 2, 3)], 4)
    pair = ConstellationPair(alpha, beta)
    assert pair.validate() is pair
    with pytest.raises(InvariantError):
        pair.validate(census_datum)
    with pytest.raises(InvariantError):
        ConstellationPair(alpha, Permutation.from_cycles([(2, 3)], 4)).validate()


def test_beta_search_matches_filtering():
    datum = parse_datum("5; 3,1,1; 3,1,1; 5")
    pi1, pi2, pi3 = datum.partitions
    alpha = canonical_class_rep(pi1)
    found = set(BetaSearch(alpha.images, pi2, pi3).search())

    expected = set()
    for images in itertools.permutations(range(5)):
        pair = ConstellationPair(alpha, Permutation(images))
        if (cycle_type(pair.beta) == pi2 and cycle_type(pair.gamma) == pi3
                and is_transitive(pair)):
            expected.add(images)
    assert found == expected
    assert len(found) > 0


LONG_CYCLE_DATUM = "12; 2,1,1,1,1,1,1,1,1,1,1; 12; 11,1"


def test_long_cycle_datum_has_one_class():
    datum = parse_datum(LONG_CYCLE_DATUM)
    assert search_shift(datum) == 2
    (pair,) = enumerate_rigid_classes(datum)
    assert pair.alpha == canonical_class_rep(datum.partitions[0])
    assert pair.cycle_types() == tuple(datum.partitions)
    assert len(enumerate_rigid_classes(parse_datum("11; 2,1,1,1,1,1,1,1,1,1; 11; 10,1"))) == 1


@pytest.mark.parametrize("text, shift", [
    ("7; 3,2,1,1; 3,2,1,1; 7", 2),
    ("7; 7; 4,1,1,1; 3,2,1,1", 0),
    ("3; 1,1,1; 3; 3", 1),
    ("3; 3; 3; 3", 0),
])
def test_search_shift(text, shift):
    assert search_shift(parse_datum(text)) == shift


def test_counts_do_not_depend_on_partition_order(worked_case):
    datum, (rigid, _, _) = worked_case
    for order in itertools.permutations(datum.partitions):
        reordered = parse_datum(format_datum_text(datum.degree, order))
        reps = enumerate_rigid_classes(reordered)
        assert len(reps) == rigid
        assert all(pair.cycle_types() == order for pair in reps)


def test_class_key_separates_non_conjugate_pairs():
    datum = parse_datum("5; 3,1,1; 3,1,1; 5")
    pi1, pi2, pi3 = datum.partitions
    alpha = canonical_class_rep(pi1)
    pairs = [ConstellationPair(alpha, Permutation(beta))
             for beta in BetaSearch(alpha.images, pi2, pi3).search()]
    group = [Permutation(images) for images in itertools.permutations(range(5))]
    for p in pairs:
        orbit = {ConstellationPair(conjugate(p.alpha, g), conjugate(p.beta, g)) for g in group}
        for q in pairs:
            assert (class_key(p) == class_key(q)) == (q in orbit)


@pytest.mark.parametrize("datum", small_data(), ids=str)
def test_class_key_is_conjugation_invariant_on_small_data(datum):
    rng = random.Random(str(datum))
    for pair in enumerate_rigid_classes(datum):
        key = class_key(pair)
        for _ in range(100):
            g = random_perm(rng, datum.degree)
            moved = ConstellationPair(conjugate(pair.alpha, g), conjugate(pair.beta, g))
            assert class_key(moved) == key
