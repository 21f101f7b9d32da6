import itertools
from fractions import Fraction

import pytest

from oracles import colorings_admissible
from unavoidable.exceptions import CapacityError, InvalidInputError
from unavoidable.partition import bad_partition, is_r_unavoidable, pi
from unavoidable.ramsey import (
    GraphProperty,
    clique,
    edge_index,
    induced_edge_group,
    is_pr_admissible,
    ramsey_complex,
)
from unavoidable.symmetry import check_automorphisms
from unavoidable.threshold import epsilon, rho, rho_symmetrized


def test_edge_indexing_is_lexicographic():
    assert edge_index(4) == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def test_property_parsing():
    assert GraphProperty.parse("clique:3") == clique(3)
    assert str(clique(4)) == "clique:4"
    with pytest.raises(InvalidInputError):
        GraphProperty.parse("cycle:3")
    with pytest.raises(InvalidInputError):
        GraphProperty.parse("clique:x")


def test_clique_property_is_monotone():
    has = clique(3).evaluator(5)
    rng = __import__("random").Random(3)
    for _ in range(300):
        g = rng.randrange(1 << 10)
        h = g | rng.randrange(1 << 10)
        assert not has(g) or has(h)


def test_r33_complex():
    L = ramsey_complex(6, clique(3))
    assert L.n == 15
    assert pi(L) == 2
    assert rho(L) == Fraction(2, 5)
    assert epsilon(L) == 1
    G = induced_edge_group(6)
    check_automorphisms(L, G.generators)
    assert G.is_transitive()
    assert G.order() == 720
    assert rho_symmetrized(L, G) == Fraction(6, 15)


def test_r33_smallest_nonfaces_have_six_edges():
    L = ramsey_complex(6, clique(3))
    sizes = sorted({c.bit_count() for c in L.minimal_nonfaces()})
    assert sizes[0] == 6
    # complements of K_{3,3}, K_{2,4}, blown-up pentagons and the star K_{1,5}
    assert sizes == [6, 7, 8, 10]


def test_five_vertices_not_2_unavoidable():
    L = ramsey_complex(5, clique(3))
    assert not is_r_unavoidable(L, 2)
    w = bad_partition(L, 2)
    assert w is not None and w.is_valid_for(L)
    # the pentagon and pentagram coloring defeats the property
    pos = {e: i for i, e in enumerate(edge_index(5))}
    pentagon = sum(1 << pos[tuple(sorted((i, (i + 1) % 5)))] for i in range(5))
    has = clique(3).evaluator(5)
    assert not has(pentagon) and not has(L.ground & ~pentagon)


def test_edge_property_complex():
    L = ramsey_complex(5, clique(2))
    assert L.minimal_nonfaces() == (L.ground,)


def test_admissibility():
    assert is_pr_admissible(6, clique(3), 2)
    assert not is_pr_admissible(5, clique(3), 2)


def test_admissibility_matches_brute_force_and_unavoidability():
    for n in range(2, 6):
        for k in (2, 3):
            for r in (1, 2, 3):
                if r ** len(edge_index(n)) > 60000:
                    continue
                prop = clique(k)
                ok = is_pr_admissible(n, prop, r)
                assert ok == colorings_admissible(n, prop.evaluator(n), r)
                if k <= n:
                    assert ok == is_r_unavoidable(ramsey_complex(n, prop), r)


def test_capacity():
    with pytest.raises(CapacityError):
        ramsey_complex(12, clique(3))
    with pytest.raises(CapacityError):
        is_pr_admissible(8, clique(3), 2)
    with pytest.raises(InvalidInputError):
        ramsey_complex(3, clique(4))


def test_minimal_graphs():
    assert clique(1).minimal_graphs(3) == [0]
    assert len(clique(3).minimal_graphs(5)) == 10
    assert all(g.bit_count() == 3 for g in clique(3).minimal_graphs(5))
    assert list(itertools.islice(clique(2).minimal_graphs(3), 3)) == [1, 2, 4]
