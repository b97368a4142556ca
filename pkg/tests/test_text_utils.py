import pytest

from app.errors import ParseError
from app.utils.permutation_utils import Partition, Permutation
from app.utils.text_utils import (
    format_datum_text,
    format_partition,
    format_permutation,
    parse_datum_text,
    parse_partition,
    parse_permutation,
)


def test_parse_partition_sorts_parts():
    assert parse_partition("1, 3,2,1") == Partition((3, 2, 1, 1))
    assert format_partition(parse_partition("1,1,2,3")) == "3,2,1,1"


@pytest.mark.parametrize("text", ["", "3,,1", "3,a", "2,0", "2,-1"])
def test_parse_partition_errors(text):
    with pytest.raises(ParseError):
        parse_partition(text)


def test_parse_permutation_is_one_indexed():
    p = parse_permutation("(1 2 3)(4 5)", 7)
    assert p == Permutation.from_cycles([(0, 1, 2), (3, 4)], 7)
    assert format_permutation(p) == "(1 2 3)(4 5)"


def test_identity_notation():
    assert parse_permutation("()", 3) == Permutation.identity(3)
    assert parse_permutation("", 3) == Permutation.identity(3)
    assert format_permutation(Permutation.identity(3)) == "()"


def test_format_starts_cycles_at_their_minimum():
    assert format_permutation(parse_permutation("(3 1 2)", 3)) == "(1 2 3)"


@pytest.mark.parametrize("text", ["(1 2", "1 2", "(1 x)", "(1 9)", "(1 2)(2 3)"])
def test_parse_permutation_errors(text):
    with pytest.raises(ParseError):
        parse_permutation(text, 5)


def test_datum_text():
    degree, partitions = parse_datum_text("7; 3,2,1,1; 3,2,1,1; 7")
    assert degree == 7
    assert partitions == [Partition((3, 2, 1, 1)), Partition((3, 2, 1, 1)), Partition((7,))]
    assert format_datum_text(degree, partitions) == "7; 3,2,1,1; 3,2,1,1; 7"


@pytest.mark.parametrize("text", ["7", "x; 7; 7; 7", "7; 3,2,1,1; ; 7"])
def test_datum_text_errors(text):
    with pytest.raises(ParseError):
        parse_datum_text(text)
