"""Acceptance criteria, one test per criterion.

Outcomes are listed in the "acceptance criteria" section of the pytest
summary (no ``-s`` needed).
"""
import itertools
import math
import random
import time
from fractions import Fraction

import pytest

from conftest import random_complex
from unavoidable import catalog
from unavoidable.catalog import builtin, cross_polytope, key_iv, key_iv_parameters, skeleton
from unavoidable.complex import SimplicialComplex, join, join_power
from unavoidable.exceptions import InvalidInputError
from unavoidable.partition import (
    Hypergraph,
    is_minimal_r_unavoidable,
    is_rsj_unavoidable,
    pi,
    pi_join_bound,
    pi_oracle,
    pi_relative,
    sarkaria_bound,
)
from unavoidable.ramsey import clique, is_pr_admissible, ramsey_complex
from unavoidable.symmetry import direct_product, symmetric_group
from unavoidable.threshold import (
    collapsed_lp,
    epsilon,
    floor_inverse_rho,
    rho,
    rho_symmetrized,
    threshold_solution,
)
from unavoidable.wh import nu_table, selfdual_realization, wh_sublevel

# every complex built here; the last criterion checks pi <= floor(1/rho) + 1 on all of them
SEEN: list[SimplicialComplex] = []


def seen(K):
    SEEN.append(K)
    return K


SMALL_CATALOG = ("three_point", "rp2_6", "skeleton(6,2)", "skeleton(8,3)", "cross_polytope(3)",
                 "cross_polytope(5)", "key_iv(6,2,3,1)", "key_iv(7,2,3,0)", "simplex(4)",
                 "empty(5)", "join_power(three_point,2)", "join_power(three_point,4)",
                 "join_power(rp2_6,2)")


def catalog_entries(max_n=64):
    names = list(SMALL_CATALOG) + ["ramsey(6,3)"] + catalog.available_data()
    entries = [builtin(name) for name in names]
    return [e for e in entries if e.complex.n <= max_n]


def key_iv_grid():
    """Valid small parameter tuples with ``k q <= p``."""
    for N, k, r in itertools.product(range(2, 9), range(1, 4), range(2, 5)):
        for s in range(0, r):
            try:
                n, p, q = key_iv_parameters(N, k, r, s)
            except InvalidInputError:
                continue
            if k * q <= p and n <= 9:
                yield N, k, r, s


@pytest.mark.criterion("1 join-power table for [3] and rp2_6")
def test_table_reproduction():
    start = time.perf_counter()
    three, rp2 = catalog.TABLE_FAMILIES[0], catalog.TABLE_FAMILIES[1]
    cells = [catalog.table_cell(three, n) for n in range(1, 5)]
    cells += [catalog.table_cell(rp2, n) for n in range(1, 4)]
    for c in cells:
        assert c.status == "ok", c
        assert c.computed["pi"] == c.n + 1
        assert isinstance(c.computed["rho"], Fraction)
    assert [c.computed["rho"] for c in cells[:4]] == [Fraction(2, 3 * n) for n in range(1, 5)]
    assert [c.computed["epsilon"] for c in cells[:4]] == [n // 2 for n in range(1, 5)]
    assert [c.computed["rho"] for c in cells[4:]] == [Fraction(1, 2 * n) for n in range(1, 4)]
    assert [c.computed["epsilon"] for c in cells[4:]] == [1, 2, 3]
    for base, m in (("three_point", 4), ("rp2_6", 3)):
        for n in range(1, m + 1):
            seen(join_power(builtin(base).complex, n))
    assert time.perf_counter() - start < 60


@pytest.mark.criterion("2 cp2_9 and hp2_15 rows from data files")
def test_conditional_rows():
    present = catalog.available_data()
    if not present:
        pytest.skip(f"no data files in {catalog.data_dir()}")
    expected = {"cp2_9": (Fraction(4, 9), 4), "hp2_15": (Fraction(6, 15), 6)}
    for name in present:
        entry = builtin(name)
        rho_value, min_nf = expected[name]
        prof = entry.expected
        assert prof.rho == rho_value
        assert prof.self_dual
        assert prof.min_nonface_size == min_nf
        assert prof.pi == 2
        fam = next(f for f in catalog.TABLE_FAMILIES if f.name == name)
        assert catalog.table_cell(fam, 1, entry).status == "ok"
        seen(entry.complex)


@pytest.mark.criterion("3 closed forms for skeleta, cross-polytopes and point joins")
def test_rho_closed_forms():
    for n in range(2, 11):
        for k in range(1, n):
            assert rho(seen(skeleton(n, k))) == Fraction(k + 1, n)
    for n in range(2, 7):
        assert rho(seen(cross_polytope(n))) == Fraction(1, n)
    for k in range(2, 5):
        for m in range(1, 4):
            K = seen(join_power(skeleton(k, 1), m))
            assert rho(K) == Fraction(2, k * m)


@pytest.mark.criterion("4 pi agrees with the subset-DP oracle")
def test_oracle_equivalence():
    mismatches = []
    for entry in catalog_entries(max_n=12):
        K = seen(entry.complex)
        if pi(K) != pi_oracle(K):
            mismatches.append(entry.name)
    rng = random.Random(2024)
    for _ in range(200):
        K = seen(random_complex(rng, rng.randint(1, 10), max_facets=8))
        if pi(K) != pi_oracle(K):
            mismatches.append(repr(K))
    assert mismatches == []


@pytest.mark.criterion("5 every rho carries a validated duality certificate")
def test_lp_certificates():
    rng = random.Random(5)
    corpus = [e.complex for e in catalog_entries()]
    corpus += [seen(random_complex(rng, rng.randint(1, 9))) for _ in range(100)]
    for K in corpus:
        sol = threshold_solution(K)
        res = sol.result
        assert res.verify(sol.program)
        assert sum(res.primal) == sum(res.dual) == res.optimum
        assert sol.rho == (math.inf if res.optimum == 0 else 1 / res.optimum)


@pytest.mark.criterion("6 symmetrized LP equals rho; two-orbit key_iv grid")
def test_symmetry_reduction():
    for entry in catalog_entries():
        if entry.generators is not None:
            assert rho_symmetrized(entry.complex, entry.generators) == rho(entry.complex), entry.name
    grid = list(key_iv_grid())
    assert len(grid) >= 10
    for N, k, r, s in grid:
        n, p, q = key_iv_parameters(N, k, r, s)
        K = seen(key_iv(N, k, r, s))
        G = direct_product(symmetric_group(p), symmetric_group(q))
        program, orbits = collapsed_lp(K, G)
        assert program.num_vars == 2 and orbits[0][0] == 0 and len(orbits[1]) == q
        point = (Fraction(1, k + 2), Fraction(2, k + 2))
        assert all(sum(a * x for a, x in zip(row, point)) >= 1 for row in program.rows)
        assert sum(c * x for c, x in zip(program.costs, point)) == Fraction(n + q, k + 2)
        value = rho_symmetrized(K, G)
        assert value == rho(K)
        assert value >= Fraction(k + 2, n + q)


@pytest.mark.criterion("7 Ramsey complex of triangles on six vertices")
def test_ramsey_instance():
    start = time.perf_counter()
    L = seen(ramsey_complex(6, clique(3)))
    assert (pi(L), rho(L), epsilon(L)) == (2, Fraction(2, 5), 1)
    assert not is_pr_admissible(5, clique(3), 2)
    assert is_pr_admissible(6, clique(3), 2)
    assert time.perf_counter() - start < 60


@pytest.mark.criterion("8 minimality of joins, join inequalities, block equality")
def test_minimality_and_joins():
    factors = {name: seen(builtin(name).complex)
               for name in ("three_point", "rp2_6", "skeleton(5,2)")}
    assert is_minimal_r_unavoidable(factors["rp2_6"], 2)
    for F in factors.values():
        assert is_minimal_r_unavoidable(F, pi(F))
    for a, b in itertools.combinations_with_replacement(factors, 2):
        A, B = factors[a], factors[b]
        J = seen(join(A, B))
        r = pi(A) + pi(B) - 1
        assert is_minimal_r_unavoidable(J, r), (a, b)
        assert pi(J) <= pi_join_bound(A, B)
        assert rho(J) <= max(rho(A), rho(B)) / 2
    for F in factors.values():
        for m in (2, 3):
            assert rho(seen(join_power(F, m))) <= rho(F) / m

    rng = random.Random(8)
    checked = 0
    while checked < 60:
        A = seen(random_complex(rng, rng.randint(1, 5)))
        B = seen(random_complex(rng, rng.randint(1, 5)))
        J = seen(join(A, B))
        assert pi(J) <= pi_join_bound(A, B)
        ra, rb = rho(A), rho(B)
        inverse = sum(0 if v == math.inf else 1 / v for v in (ra, rb))
        assert rho(J) == (math.inf if inverse == 0 else 1 / inverse)
        if math.inf not in (ra, rb):
            assert rho(J) <= max(ra, rb) / 2
        checked += 1


def _union_closure(n, sets):
    fam = {0}
    for s in sets:
        fam |= {s | f for f in fam}
    return Hypergraph(n, fam)


@pytest.mark.criterion("9 (r+s-1,s) reduction, pi <= floor(1/rho)+1, epsilon growth, WH round trip")
def test_property_suites():
    rng = random.Random(9)
    for _ in range(15):
        n = rng.randint(2, 6)
        K = seen(random_complex(rng, n, max_facets=4))
        H = _union_closure(n, [rng.randrange(1, 1 << n) for _ in range(rng.randint(1, 3))])
        assert H.is_union_closed()
        for r in range(1, 5):
            base = pi_relative(K, H) <= r
            for s in range(1, 5):
                assert is_rsj_unavoidable(K, H, r + s - 1, s) == base

    for base in ("three_point", "rp2_6", "skeleton(4,1)", "cross_polytope(2)", "key_iv(6,2,3,1)"):
        K = builtin(base).complex
        p, r = pi(K), rho(K)
        for m in range(1, 4):
            J = seen(join_power(K, m))
            assert epsilon(J) >= math.floor(m / r) - m * p + m
            assert math.floor(m / r) - m * p + m >= m * epsilon(K) - (m / r - math.floor(m / r))

    for name in ("three_point", "rp2_6"):
        K = builtin(name).complex
        W = selfdual_realization(K)
        table = nu_table(W)
        assert all(table[a] == (0 if K.is_face(a) else 1) for a in range(1 << K.n))
        assert seen(wh_sublevel(W, 2)) == K

    assert SEEN
    for K in SEEN:
        assert pi(K) <= floor_inverse_rho(rho(K)) + 1


@pytest.mark.criterion("10 index bound arithmetic for joins of rp2_6")
def test_sarkaria_bound():
    for r in (2, 3, 5):
        J = join_power(builtin("rp2_6").complex, r - 1)
        assert sarkaria_bound(J, r) == 5 * r - 6
