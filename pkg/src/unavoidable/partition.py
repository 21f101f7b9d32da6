"""Partition numbers and unavoidability.

``pi(K)`` is the least ``ν`` such that every partition of the ground set into
``ν`` parts has a part that is a face.  Non-faces are closed upwards, so a
partition into ``ν`` non-faces exists exactly when ``ν`` pairwise disjoint
minimal non-faces exist (pack them, then pour the leftover vertices into any
part).  Hence ``pi(K) = 1 + (maximum number of pairwise disjoint minimal
non-faces)``, which turns the problem into maximum set packing.
:func:`pi_oracle` evaluates the definition directly and is kept as the
independent check.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .complex import (
    SimplicialComplex,
    full_set,
    members,
    restriction,
    submasks,
    _downward_closure,
)
from .exceptions import CapacityError, InvalidInputError

ORACLE_LIMIT = 14
EXTENDED_N_LIMIT = 12
EXTENDED_NU_LIMIT = 8


@dataclass(frozen=True)
class Hypergraph:
    """An arbitrary family of subsets of ``[n]`` (not necessarily closed)."""

    n: int
    members: tuple[int, ...]

    def __init__(self, n: int, members_: Iterable[int]):
        ground = full_set(n)
        fam = sorted(set(members_))
        if any(m < 0 or m & ~ground for m in fam):
            raise InvalidInputError(f"hypergraph member outside [{n}]")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "members", tuple(fam))

    @classmethod
    def power_set(cls, n: int) -> "Hypergraph":
        if n > 20:
            raise CapacityError("power set hypergraph needs n <= 20")
        return cls(n, range(1 << n))

    @classmethod
    def of_faces(cls, K: SimplicialComplex) -> "Hypergraph":
        return cls(K.n, K.faces())

    def is_union_closed(self) -> bool:
        fam = set(self.members)
        if 0 not in fam:
            return False
        ms = self.members
        return all((a | b) in fam for i, a in enumerate(ms) for b in ms[i + 1:])


@dataclass(frozen=True)
class PartitionWitness:
    """Pairwise disjoint parts, none of which is a face of the complex."""

    parts: tuple[int, ...]

    def is_valid_for(self, K: SimplicialComplex, covering: bool = True) -> bool:
        seen = 0
        for p in self.parts:
            if p & seen or K.is_face(p):
                return False
            seen |= p
        return seen == K.ground if covering else True


# -- set packing --------------------------------------------------------------

def _components(sets: Sequence[int]) -> list[list[int]]:
    groups: list[tuple[int, list[int]]] = []
    for s in sets:
        merged_support, merged = s, [s]
        rest = []
        for support, group in groups:
            if support & merged_support:
                merged_support |= support
                merged.extend(group)
            else:
                rest.append((support, group))
        rest.append((merged_support, merged))
        groups = rest
    return [sorted(g) for _, g in sorted(groups, key=lambda sg: min(sg[1]))]


def _pack_component(sets: list[int]) -> list[int]:
    best: list[int] = []

    def bound(cands: list[int]) -> int:
        if not cands:
            return 0
        union = 0
        for c in cands:
            union |= c
        smallest = min(c.bit_count() for c in cands)
        return min(len(cands), union.bit_count() // smallest)

    def search(cands: list[int], chosen: list[int]) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if not cands or len(chosen) + bound(cands) <= len(best):
            return
        union = 0
        for c in cands:
            union |= c
        v = union & -union
        for c in cands:
            if c & v:
                chosen.append(c)
                search([d for d in cands if not d & c], chosen)
                chosen.pop()
        search([d for d in cands if not d & v], chosen)

    search(sorted(sets), [])
    return best


def max_disjoint_family(sets: Iterable[int]) -> list[int]:
    """A maximum family of pairwise disjoint non-empty sets, canonically sorted.

    Exact branch and bound, run separately on each connected component of
    the intersection graph; the search order is canonical so the returned
    family is deterministic.
    """
    sets = sorted(set(sets))
    if sets and sets[0] == 0:
        raise InvalidInputError("empty set in packing input")
    out: list[int] = []
    for comp in _components(sets):
        out.extend(_pack_component(comp))
    return sorted(out)


# -- partition numbers --------------------------------------------------------

def pi(K: SimplicialComplex) -> int:
    """The partition number ``π(K)``."""
    return 1 + len(max_disjoint_family(K.minimal_nonfaces()))


def _face_table(K: SimplicialComplex) -> list[bool]:
    table = [False] * (1 << K.n)
    for f in _downward_closure(K.maximal_faces()):
        table[f] = True
    return table


def pi_oracle(K: SimplicialComplex) -> int:
    """``π(K)`` straight from the definition, by dynamic programming.

    ``g(S)`` is the largest number of parts in a partition of ``S`` into
    non-faces (``-1`` when none exists).  Runs in ``O(3^n)``; the only input
    taken from ``K`` is its face set.
    """
    n = K.n
    if n > ORACLE_LIMIT:
        raise CapacityError(f"pi_oracle needs n <= {ORACLE_LIMIT}, got {n}")
    face = _face_table(K)
    g = [-1] * (1 << n)
    g[0] = 0
    for s in range(1, 1 << n):
        low = s & -s
        rest = s ^ low
        best = -1
        for sub in submasks(rest):
            t = sub | low
            if face[t]:
                continue
            prev = g[s ^ t]
            if prev >= 0 and prev + 1 > best:
                best = prev + 1
        g[s] = best
    top = g[full_set(n)]
    return top + 1 if top > 0 else 1


def bad_partition(K: SimplicialComplex, r: int) -> PartitionWitness | None:
    """A partition of ``[n]`` into ``r`` non-faces, or ``None`` if none exists."""
    if r < 1:
        raise InvalidInputError("r must be >= 1")
    packing = max_disjoint_family(K.minimal_nonfaces())
    if len(packing) < r:
        return None
    parts = packing[:r]
    used = 0
    for p in parts:
        used |= p
    parts[0] |= K.ground & ~used
    return PartitionWitness(tuple(parts))


def is_r_unavoidable(K: SimplicialComplex, r: int) -> bool:
    """Whether every partition of ``[n]`` into ``r`` parts has a face part."""
    if r < 1:
        return False
    return pi(K) <= r


def pi_relative(K: SimplicialComplex, H: Hypergraph) -> int:
    """``π_H(K)``: subpartitions drawn from ``H`` must hit ``K``.

    Equals 1 + the largest number of pairwise disjoint members of ``H ∖ K``;
    when ``H ∖ K`` is empty every family hits ``K`` and the value is 1.
    """
    if H.n != K.n:
        raise InvalidInputError("hypergraph and complex live on different ground sets")
    outside = [m for m in H.members if not K.is_face(m)]
    return 1 + len(max_disjoint_family(outside))


def _bad_family_exists(K: SimplicialComplex, H: Hypergraph, nu: int,
                       s: int, j: int) -> bool:
    """Is there an indexed family of ``nu`` members of ``H`` (repetition
    allowed) with covering multiplicity ``<= j`` and fewer than ``s`` members
    in ``K``?"""
    fam = [(m, K.is_face(m)) for m in H.members]
    # non-faces first: they are what a bad family is made of
    fam.sort(key=lambda mf: (mf[1], mf[0]))
    cover = [0] * H.n
    fam_members = [members(m) for m, _ in fam]

    def search(start: int, size: int, in_k: int) -> bool:
        if size == nu:
            return True
        for idx in range(start, len(fam)):
            m, face = fam[idx]
            if face and in_k + 1 >= s:
                continue
            verts = fam_members[idx]
            if any(cover[v] >= j for v in verts):
                continue
            for v in verts:
                cover[v] += 1
            found = search(idx, size + 1, in_k + face)
            for v in verts:
                cover[v] -= 1
            if found:
                return True
        return False

    return search(0, 0, 0)


def _check_extended(K: SimplicialComplex, H: Hypergraph, s: int, j: int) -> None:
    if H.n != K.n:
        raise InvalidInputError("hypergraph and complex live on different ground sets")
    if K.n > EXTENDED_N_LIMIT:
        raise CapacityError(f"extended partition number needs n <= {EXTENDED_N_LIMIT}")
    if s < 1 or j < 1:
        raise InvalidInputError("s and j must be >= 1")


def pi_extended(K: SimplicialComplex, H: Hypergraph, s: int, j: int,
                max_nu: int = EXTENDED_NU_LIMIT) -> int | None:
    """``π^{s;j}_H(K)`` by exhaustive family enumeration.

    Families are indexed (a member may repeat); the covering multiplicity is
    the largest number of members sharing a ground element, so repeated
    empty sets never raise it.  Returns ``None`` when no ``ν <= max_nu``
    qualifies.
    """
    _check_extended(K, H, s, j)
    if max_nu > EXTENDED_NU_LIMIT:
        raise CapacityError(f"family size cap is {EXTENDED_NU_LIMIT}")
    for nu in range(1, max_nu + 1):
        if not _bad_family_exists(K, H, nu, s, j):
            return nu
    return None


def is_rsj_unavoidable(K: SimplicialComplex, H: Hypergraph, r: int, s: int,
                       j: int = 1) -> bool:
    """Every ``r``-member family from ``H`` with covering multiplicity
    ``<= j`` has at least ``s`` members in ``K``."""
    _check_extended(K, H, s, j)
    if r > EXTENDED_NU_LIMIT:
        raise CapacityError(f"family size cap is {EXTENDED_NU_LIMIT}")
    return not _bad_family_exists(K, H, r, s, j)


def is_minimal_r_unavoidable(K: SimplicialComplex, r: int) -> bool:
    """Facet-deletion criterion: ``K`` is ``r``-unavoidable and, for every
    facet ``A``, ``K`` restricted to ``[n]∖A`` is not ``(r-1)``-unavoidable.
    """
    if not is_r_unavoidable(K, r):
        return False
    ground = K.ground
    for a in K.maximal_faces():
        if is_r_unavoidable(restriction(K, ground & ~a), r - 1):
            return False
    return True


def pi_join_bound(*complexes: SimplicialComplex) -> int:
    """Upper bound ``π(K_1) + ... + π(K_n) - n + 1`` for the join."""
    return sum(pi(K) for K in complexes) - len(complexes) + 1


def _is_prime(r: int) -> bool:
    return r >= 2 and all(r % d for d in range(2, int(r ** 0.5) + 1))


def sarkaria_bound(K: SimplicialComplex, r: int) -> int:
    """Lower bound ``n - r`` on the ``Z/r``-index of the ``r``-fold deleted
    join of an ``r``-unavoidable ``K`` (``r`` prime)."""
    if not _is_prime(r):
        raise InvalidInputError(f"r = {r} is not prime")
    if not is_r_unavoidable(K, r):
        raise InvalidInputError(f"complex is not {r}-unavoidable")
    return K.n - r
