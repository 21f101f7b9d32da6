import random

import pytest
from hypothesis import given, strategies as st

from conftest import complexes, random_complex
from oracles import face_set, pi_brute
from unavoidable.catalog import skeleton
from unavoidable.complex import (
    GroundMap,
    SimplicialComplex,
    delete_facet,
    join,
    join_power,
    pushforward,
    submasks,
)
from unavoidable.exceptions import CapacityError, InvalidInputError
from unavoidable.partition import (
    Hypergraph,
    PartitionWitness,
    bad_partition,
    is_minimal_r_unavoidable,
    is_r_unavoidable,
    is_rsj_unavoidable,
    max_disjoint_family,
    pi,
    pi_extended,
    pi_join_bound,
    pi_oracle,
    pi_relative,
    sarkaria_bound,
)


def test_max_disjoint_family_basic():
    assert max_disjoint_family([0b0011, 0b0110, 0b1100]) == [0b0011, 0b1100]
    assert max_disjoint_family([]) == []
    with pytest.raises(InvalidInputError):
        max_disjoint_family([0, 1])


def test_max_disjoint_family_brute():
    rng = random.Random(1)
    for _ in range(100):
        sets = list({rng.randrange(1, 1 << 9) for _ in range(rng.randint(1, 12))})
        best = max_disjoint_family(sets)
        assert all(not a & b for i, a in enumerate(best) for b in best[i + 1:])
        brute = 0
        for mask in range(1 << len(sets)):
            chosen = [s for i, s in enumerate(sets) if mask >> i & 1]
            used, ok = 0, True
            for s in chosen:
                if s & used:
                    ok = False
                    break
                used |= s
            if ok:
                brute = max(brute, len(chosen))
        assert len(best) == brute


def test_pi_of_empty_complex_is_m_plus_one():
    for m in range(0, 7):
        assert pi(SimplicialComplex.empty(m)) == m + 1
        assert pi_oracle(SimplicialComplex.empty(m)) == m + 1


def test_pi_of_simplex_is_one():
    assert pi(SimplicialComplex.simplex(5)) == 1


def test_pi_rp2(rp2):
    assert pi(rp2) == pi_oracle(rp2) == pi_brute(rp2) == 2


@given(complexes(max_n=7))
def test_pi_matches_definition(K):
    assert pi(K) == pi_oracle(K) == pi_brute(K)


def test_pi_oracle_random_suite():
    rng = random.Random(2024)
    for _ in range(200):
        K = random_complex(rng, rng.randint(1, 10), max_facets=8)
        assert pi(K) == pi_oracle(K)


def test_pi_oracle_capacity():
    with pytest.raises(CapacityError):
        pi_oracle(SimplicialComplex.empty(15))


@given(complexes(max_n=7), st.integers(1, 5))
def test_bad_partition_witness(K, r):
    w = bad_partition(K, r)
    if pi(K) <= r:
        assert w is None
    else:
        assert isinstance(w, PartitionWitness)
        assert len(w.parts) == r
        assert w.is_valid_for(K)


@given(complexes(max_n=6), st.lists(st.integers(0, 63), max_size=3))
def test_monotone_under_inclusion(K, extra):
    L = SimplicialComplex.from_facets(K.n, list(K.facets) + [e & K.ground for e in extra])
    assert K.is_subcomplex_of(L)
    assert pi(L) <= pi(K)


def test_pushforward_does_not_increase_pi():
    rng = random.Random(9)
    for _ in range(60):
        n = rng.randint(1, 8)
        K = random_complex(rng, n)
        m = rng.randint(1, 6)
        f = GroundMap(n, m, tuple(rng.randrange(m) for _ in range(n)))
        assert pi(pushforward(K, f)) <= pi(K)


def test_join_bound_and_equality_for_minimal_factors(rp2):
    rng = random.Random(3)
    for _ in range(40):
        A = random_complex(rng, rng.randint(1, 5))
        B = random_complex(rng, rng.randint(1, 5))
        assert pi(join(A, B)) <= pi_join_bound(A, B)
    three = skeleton(3, 1)
    for factors in ([rp2, rp2], [rp2, three], [three, three, three]):
        assert all(is_minimal_r_unavoidable(F, pi(F)) for F in factors)
        assert pi(join(*factors)) == pi_join_bound(*factors)


def test_minimality_rp2_and_joins(rp2):
    assert is_minimal_r_unavoidable(rp2, 2)
    assert not is_minimal_r_unavoidable(rp2, 3)
    J = join(rp2, rp2)
    assert is_minimal_r_unavoidable(J, 3)


def test_minimality_matches_proper_subcomplex_definition():
    # minimal r-unavoidable: every facet deletion breaks r-unavoidability
    rng = random.Random(11)
    for _ in range(80):
        K = random_complex(rng, rng.randint(1, 6))
        r = pi(K)
        by_deletion = all(pi_oracle(delete_facet(K, a)) > r for a in K.facets)
        assert is_minimal_r_unavoidable(K, r) == by_deletion


@given(complexes(max_n=7), st.integers(1, 6))
def test_minimality_implies_pi_equality(K, r):
    if is_minimal_r_unavoidable(K, r):
        assert pi(K) == r


def _union_closure(n, sets):
    fam = {0}
    for s in sets:
        fam |= {s | f for f in fam} | {s}
    changed = True
    while changed:
        changed = False
        for a in list(fam):
            for b in list(fam):
                if a | b not in fam:
                    fam.add(a | b)
                    changed = True
    return Hypergraph(n, fam)


def test_pi_relative_power_set_equals_pi():
    rng = random.Random(6)
    for _ in range(30):
        K = random_complex(rng, rng.randint(1, 6))
        assert pi_relative(K, Hypergraph.power_set(K.n)) == pi(K)


def test_pi_relative_degenerate_family_is_one(rp2):
    assert pi_relative(rp2, Hypergraph(6, [0, 1, 3])) == 1


def test_hypergraph_union_closed():
    assert Hypergraph(3, [0, 1, 2, 3]).is_union_closed()
    assert not Hypergraph(3, [0, 1, 2]).is_union_closed()
    assert _union_closure(4, [1, 6]).is_union_closed()


def test_rs_unavoidability_reduces_to_r_on_union_closed_families():
    rng = random.Random(7)
    checked = 0
    for _ in range(12):
        n = rng.randint(2, 6)
        K = random_complex(rng, n, max_facets=4)
        H = _union_closure(n, [rng.randrange(1, 1 << n) for _ in range(rng.randint(1, 3))])
        for r in range(2, 5):
            base = pi_relative(K, H) <= r
            assert is_rsj_unavoidable(K, H, r, 1) == base
            for s in range(2, 5):
                assert is_rsj_unavoidable(K, H, r + s - 1, s) == base
                checked += 1
    assert checked >= 100


def test_pi_extended_semantics():
    K = SimplicialComplex.empty(3)
    P = Hypergraph.power_set(3)
    # j = 1, s = 1 is pi_H itself
    assert pi_extended(K, P, 1, 1) == pi_relative(K, P) == 4
    # with multiplicity 2 the three singletons can be used twice
    assert pi_extended(K, P, 1, 2) == 7
    assert pi_extended(K, P, 1, 3, max_nu=8) is None
    with pytest.raises(CapacityError):
        pi_extended(SimplicialComplex.empty(13), Hypergraph(13, [1]), 1, 1)


def test_pi_extended_s_counts_faces(rp2):
    P = Hypergraph.power_set(6)
    # every disjoint family of 3 sets in P contains at least 2 faces of rp2
    assert is_rsj_unavoidable(rp2, P, 3, 2)
    assert not is_rsj_unavoidable(rp2, P, 3, 3)


def test_sarkaria_bound_on_rp2_joins(rp2):
    for r in (2, 3, 5):
        J = join_power(rp2, r - 1)
        assert is_r_unavoidable(J, r)
        assert sarkaria_bound(J, r) == 5 * r - 6
    with pytest.raises(InvalidInputError):
        sarkaria_bound(join_power(rp2, 3), 4)
    with pytest.raises(InvalidInputError):
        sarkaria_bound(SimplicialComplex.empty(4), 3)


def test_face_table_oracle_sees_only_faces():
    K = SimplicialComplex.from_facets(4, [0b0011, 0b1100])
    assert face_set(K) == set(submasks(0b0011)) | set(submasks(0b1100))
    assert pi_oracle(K) == pi(K) == 3
