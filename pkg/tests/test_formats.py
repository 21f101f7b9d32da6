from fractions import Fraction

import pytest
from hypothesis import given

from conftest import complexes
from unavoidable.catalog import rp2_6
from unavoidable.complex import GroundMap, SimplicialComplex
from unavoidable.exceptions import InvalidInputError
from unavoidable.formats import (
    format_facets,
    format_generators,
    format_map,
    format_wh,
    parse_facets,
    parse_generators,
    parse_map,
    parse_wh,
    read_facets,
    write_facets,
)
from unavoidable.symmetry import Permutation
from unavoidable.wh import WeightedHypergraph


def test_facet_list_parsing():
    K = parse_facets("# a comment\nn 4\n\n1 2   # trailing\n3 4\n2\n")
    assert K.n == 4
    assert K.facets == (0b0011, 0b1100)


def test_empty_token_and_full_simplex():
    K = parse_facets("n 4\nempty\n")
    assert K == SimplicialComplex.empty(4)
    assert format_facets(K) == "n 4\nempty\n"
    assert parse_facets("n 2\n1 2\n").is_full()


@pytest.mark.parametrize("text", [
    "", "1 2\n", "n x\n", "n 3\n1 4\n", "n 3\n0 1\n", "n 3\n", "n 3\nempty\n1 2\n", "n 3\na\n",
])
def test_facet_list_errors(text):
    with pytest.raises(InvalidInputError):
        parse_facets(text)


@given(complexes(max_n=8))
def test_facet_list_round_trip(K):
    text = format_facets(K)
    assert parse_facets(text) == K
    assert format_facets(parse_facets(text)) == text


def test_canonical_writer_is_sorted(tmp_path):
    K = rp2_6()
    path = tmp_path / "rp2.facets"
    write_facets(K, path, comment="rp2")
    lines = path.read_text().splitlines()
    assert lines[0] == "# rp2" and lines[1] == "n 6"
    assert lines[2:5] == ["1 2 3", "1 2 4", "1 3 5"]
    assert read_facets(path) == K


def test_missing_file():
    with pytest.raises(InvalidInputError):
        read_facets("/nonexistent/file.facets")


def test_generators_round_trip():
    gens = [Permutation.from_cycles("(1 2 3)(4 5)", 6), Permutation.from_cycles("(1 6)", 6)]
    text = format_generators(gens)
    assert text == "(1 2 3)(4 5)\n(1 6)\n"
    assert parse_generators("# c\n" + text, 6) == gens


def test_map_round_trip():
    f = GroundMap(4, 2, (0, 0, 1, 1))
    assert format_map(f) == "map 4 2\n1 1 2 2\n"
    assert parse_map(format_map(f)) == f
    with pytest.raises(InvalidInputError):
        parse_map("map 2 2\n1\n")
    with pytest.raises(InvalidInputError):
        parse_map("2 2\n1 1\n")


def test_wh_round_trip():
    W = WeightedHypergraph(3, {0: 0, 0b011: Fraction(1, 2), 0b100: 2})
    text = format_wh(W)
    assert text == "n 3\nempty w 0\n1 2 w 1/2\n3 w 2\n"
    V = parse_wh(text)
    assert V.weights == W.weights
    with pytest.raises(InvalidInputError):
        parse_wh("n 3\n1 2\n")
    with pytest.raises(InvalidInputError):
        parse_wh("n 3\n1 w x\n")
    with pytest.raises(InvalidInputError):
        parse_wh("n 3\n1 w 1\n1 w 2\n")
