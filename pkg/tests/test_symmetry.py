import itertools
import math
import random
from fractions import Fraction

import pytest

from conftest import random_complex
from oracles import automorphism_order_brute
from unavoidable.catalog import cross_polytope, key_iv, key_iv_parameters, skeleton
from unavoidable.complex import join
from unavoidable.exceptions import CapacityError, InvalidInputError
from unavoidable.symmetry import (
    PermGroup,
    Permutation,
    automorphism_group,
    check_automorphisms,
    direct_product,
    is_automorphism,
    is_vertex_transitive,
    symmetric_group,
    wreath_power,
)
from unavoidable.threshold import rho, rho_symmetrized


def test_permutation_cycles_round_trip():
    g = Permutation.from_cycles("(1 2 3)(4 5)", 6)
    assert g.image == (1, 2, 0, 4, 3, 5)
    assert g.to_cycles() == "(1 2 3)(4 5)"
    assert (g * g.inverse()).is_identity()
    assert g.apply(0b000011) == 0b000110
    with pytest.raises(InvalidInputError):
        Permutation.from_cycles("(1 2)(2 3)", 3)
    with pytest.raises(InvalidInputError):
        Permutation((0, 0))


def test_identity_and_six_cycle_on_rp2(rp2):
    assert is_automorphism(rp2, Permutation.identity(6))
    six = Permutation.from_cycles("(1 2 3 4 5 6)", 6)
    facets = set(rp2.facets)
    assert is_automorphism(rp2, six) == all(six.apply(f) in facets for f in facets)


def test_transpositions_preserve_skeletons():
    K = skeleton(6, 2)
    for a, b in itertools.combinations(range(6), 2):
        assert is_automorphism(K, Permutation.cycle(6, [a, b]))


def test_rp2_group_order_and_transitivity(rp2):
    G = automorphism_group(rp2)
    assert G.order() == 60 == automorphism_order_brute(rp2)
    assert is_vertex_transitive(rp2, G)
    assert len(G.orbits_of_sets(rp2.minimal_nonfaces())) == 1


def test_skeleton_and_three_point_groups():
    assert automorphism_group(skeleton(5, 2)).order() == 120
    assert automorphism_group(skeleton(3, 1)).order() == 6


def test_automorphism_group_against_brute_force():
    rng = random.Random(31)
    for _ in range(25):
        K = random_complex(rng, rng.randint(1, 6), max_facets=4)
        G = automorphism_group(K)
        assert G.order() == automorphism_order_brute(K)
        assert math.factorial(K.n) % G.order() == 0


def test_order_invariant_under_generator_order(rp2):
    G = automorphism_group(rp2)
    H = PermGroup(6, list(reversed(G.generators)))
    assert H.order() == G.order()


def test_automorphism_search_capacity():
    with pytest.raises(CapacityError):
        automorphism_group(skeleton(17, 1))


def test_key_example_orbits():
    n, p, q = key_iv_parameters(6, 2, 3, 1)
    G = direct_product(symmetric_group(p), symmetric_group(q))
    K = key_iv(6, 2, 3, 1)
    check_automorphisms(K, G.generators)
    assert [len(o) for o in G.orbits()] == [p, q]
    assert not is_vertex_transitive(K, G)


def test_wreath_power_on_joins(rp2):
    G = automorphism_group(rp2)
    W = wreath_power(G, 2)
    J = join(rp2, rp2)
    check_automorphisms(J, W.generators)
    assert W.is_transitive()
    assert W.order() == 60 * 60 * 2
    assert rho_symmetrized(J, W) == rho(J)


def test_orbits_of_sets_rejects_non_invariant_family():
    G = symmetric_group(3)
    with pytest.raises(InvalidInputError):
        G.orbits_of_sets([0b001])


def test_cross_polytope_symmetry():
    K = cross_polytope(3)
    G = automorphism_group(K)
    assert G.order() == 48
    assert rho_symmetrized(K, G) == rho(K)


def test_transitive_complexes_rho_is_min_nonface_ratio(rp2):
    for K in (rp2, skeleton(6, 3), cross_polytope(4)):
        G = automorphism_group(K)
        assert G.is_transitive()
        smallest = min(c.bit_count() for c in K.minimal_nonfaces())
        assert rho(K) == Fraction(smallest, K.n)
