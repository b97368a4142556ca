import pytest

from app.errors import DatumError
from app.services.datum_service import (
    check_compatibility,
    enumerate_compatible_data,
    parse_datum,
)
from app.utils.permutation_utils import Partition

from tests.conftest import WORKED_DATA


def parts(*items):
    return [Partition(p) for p in items]


@pytest.mark.parametrize("text", sorted(WORKED_DATA))
def test_worked_data_are_planar(text):
    datum = parse_datum(text)
    assert datum.cover_genus == 0
    assert datum.euler_characteristic == 2
    assert datum.n == 3


def test_torus_datum():
    datum = check_compatibility(3, parts((3,), (3,), (3,)))
    assert datum.cover_genus == 1
    assert datum.euler_characteristic == 0


def test_degenerate_datum():
    datum = parse_datum("2; 2; 2; 1,1")
    assert datum.cover_genus == 0
    assert datum.is_degenerate
    assert datum.branching_points == [0, 1]


@pytest.mark.parametrize("degree, items", [
    (4, [(3, 1), (2, 2)]),        # genre négatif
    (3, [(3,), (3,), (2, 1)]),    # parité
    (4, [(3, 1), (2, 1)]),        # somme
])
def test_incompatible_data(degree, items):
    with pytest.raises(DatumError):
        check_compatibility(degree, parts(*items))


def test_expected_genus_is_checked():
    assert parse_datum("3; 3; 3; 3", expected_genus=1).cover_genus == 1
    with pytest.raises(DatumError):
        parse_datum("3; 3; 3; 3", expected_genus=0)


def test_partition_order_does_not_matter():
    a = check_compatibility(7, parts((3, 2, 1, 1), (3, 2, 1, 1), (7,)))
    b = check_compatibility(7, parts((7,), (1, 2, 1, 3), (3, 2, 1, 1)))
    assert a.cover_genus == b.cover_genus
    assert a.canonical() == b.canonical()


def test_canonical_and_text():
    datum = parse_datum("7; 7; 4,1,1,1; 3,2,1,1")
    assert datum.to_text() == "7; 7; 4,1,1,1; 3,2,1,1"
    assert str(parse_datum("7; 3,2,1,1; 7; 3,2,1,1").canonical()) == "7; 7; 3,2,1,1; 3,2,1,1"


def test_enumerate_degree_two_is_empty():
    assert enumerate_compatible_data(2) == []


def test_enumerate_degree_three():
    found = {d.to_text(): d.cover_genus for d in enumerate_compatible_data(3)}
    assert found == {"3; 3; 3; 3": 1, "3; 3; 2,1; 2,1": 0}


def test_enumerate_rejects_small_degree():
    with pytest.raises(DatumError):
        enumerate_compatible_data(1)


def test_enumerate_degree_seven():
    data = enumerate_compatible_data(7)
    texts = {d.to_text() for d in data}
    assert "7; 7; 3,2,1,1; 3,2,1,1" in texts
    assert "7; 7; 4,1,1,1; 3,2,1,1" in texts
    assert "7; 4,2,1; 3,3,1; 3,3,1" in texts
    for datum in data:
        assert datum.partitions == tuple(sorted(datum.partitions, reverse=True))
        assert not datum.is_degenerate
        assert sum(pi.length for pi in datum.partitions) == 7 + 2 - 2 * datum.cover_genus
        recheck = check_compatibility(datum.degree, datum.partitions)
        assert recheck == datum
    assert len(texts) == len(data)
