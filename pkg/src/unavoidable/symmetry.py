"""Permutation groups acting on ground sets.

Groups are handled through their generators.  Orbits on vertices and on
families of vertex sets come from closure under the generators, so no group
element list is ever needed for the LP reduction.  Explicit enumeration is
only used to report the order of a group given by arbitrary generators.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .complex import SimplicialComplex, members, _downward_closure
from .exceptions import CapacityError, InvalidInputError

AUTOMORPHISM_SEARCH_LIMIT = 16
ENUMERATION_LIMIT = 10**6


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``[n]`` given by its image list (0-based)."""

    image: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(len(self.image))):
            raise InvalidInputError(f"not a permutation: {self.image}")

    @property
    def n(self) -> int:
        return len(self.image)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, text: str, n: int) -> "Permutation":
        """Parse 1-based cycle notation such as ``(1 2 3)(4 5)``."""
        image = list(range(n))
        body = text.strip()
        if body and not re.fullmatch(r"(\(\s*\d+(?:[\s,]+\d+)*\s*\)\s*)*", body):
            raise InvalidInputError(f"malformed cycle notation: {text!r}")
        seen = set()
        for cyc in re.findall(r"\(([^)]*)\)", body):
            pts = [int(t) - 1 for t in re.split(r"[\s,]+", cyc.strip()) if t]
            for p in pts:
                if not 0 <= p < n or p in seen:
                    raise InvalidInputError(f"bad point {p + 1} in {text!r}")
                seen.add(p)
            for a, b in zip(pts, pts[1:] + pts[:1]):
                image[a] = b
        return cls(tuple(image))

    @classmethod
    def cycle(cls, n: int, points: Sequence[int]) -> "Permutation":
        image = list(range(n))
        for a, b in zip(points, list(points[1:]) + list(points[:1])):
            image[a] = b
        return cls(tuple(image))

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(self.n):
            if start in seen or self.image[start] == start:
                continue
            cyc, p = [], start
            while p not in seen:
                seen.add(p)
                cyc.append(p)
                p = self.image[p]
            out.append(tuple(cyc))
        return out

    def to_cycles(self) -> str:
        """1-based cycle notation; the identity prints as ``()``."""
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(str(p + 1) for p in c) + ")" for c in cyc)

    def __call__(self, v: int) -> int:
        return self.image[v]

    def apply(self, mask: int) -> int:
        """Image of a vertex set."""
        out = 0
        img = self.image
        while mask:
            low = mask & -mask
            out |= 1 << img[low.bit_length() - 1]
            mask ^= low
        return out

    def __mul__(self, other: "Permutation") -> "Permutation":
        """``(self * other)(v) = self(other(v))``."""
        return Permutation(tuple(self.image[i] for i in other.image))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.image):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.image))

    def shifted(self, offset: int, n: int) -> "Permutation":
        """This permutation acting on ``[offset, offset + self.n)`` inside ``[n]``."""
        image = list(range(n))
        for i, j in enumerate(self.image):
            image[offset + i] = offset + j
        return Permutation(tuple(image))


class PermGroup:
    """The group generated by ``generators`` acting on ``[n]``."""

    def __init__(self, n: int, generators: Iterable[Permutation] = (),
                 order: int | None = None):
        gens = []
        for g in generators:
            if g.n != n:
                raise InvalidInputError(f"generator acts on {g.n} points, expected {n}")
            if not g.is_identity() and g not in gens:
                gens.append(g)
        self.n = n
        self.generators: tuple[Permutation, ...] = tuple(gens)
        self._order = order

    def __repr__(self):
        return f"PermGroup(n={self.n}, {len(self.generators)} generators)"

    def orbits(self) -> list[list[int]]:
        """Vertex orbits, each sorted, ordered by least element."""
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.generators:
            for i, j in enumerate(g.image):
                a, b = find(i), find(j)
                if a != b:
                    parent[max(a, b)] = min(a, b)
        groups: dict[int, list[int]] = {}
        for v in range(self.n):
            groups.setdefault(find(v), []).append(v)
        return [groups[k] for k in sorted(groups)]

    def orbit_of_set(self, mask: int) -> list[int]:
        seen = {mask}
        frontier = [mask]
        while frontier:
            nxt = []
            for s in frontier:
                for g in self.generators:
                    t = g.apply(s)
                    if t not in seen:
                        seen.add(t)
                        nxt.append(t)
            frontier = nxt
        return sorted(seen)

    def orbits_of_sets(self, sets: Iterable[int]) -> list[list[int]]:
        """Partition a family of vertex sets into orbits.

        Raises if the family is not closed under the group.
        """
        remaining = set(sets)
        out = []
        for s in sorted(remaining):
            if s not in remaining:
                continue
            orb = self.orbit_of_set(s)
            if not remaining.issuperset(orb):
                raise InvalidInputError("set family is not invariant under the group")
            remaining.difference_update(orb)
            out.append(orb)
        return out

    def is_transitive(self) -> bool:
        return len(self.orbits()) <= 1

    def elements(self, limit: int = ENUMERATION_LIMIT) -> list[Permutation]:
        """All group elements by closure under the generators."""
        ident = Permutation.identity(self.n)
        seen = {ident.image}
        frontier = [ident]
        while frontier:
            nxt = []
            for h in frontier:
                for g in self.generators:
                    k = g * h
                    if k.image not in seen:
                        seen.add(k.image)
                        nxt.append(k)
                        if len(seen) > limit:
                            raise CapacityError(f"group has more than {limit} elements")
            frontier = nxt
        return [Permutation(p) for p in sorted(seen)]

    def order(self, limit: int = ENUMERATION_LIMIT) -> int:
        if self._order is None:
            self._order = len(self.elements(limit))
        return self._order


# -- automorphisms ------------------------------------------------------------

def is_automorphism(K: SimplicialComplex, g: Permutation) -> bool:
    """Whether ``g`` maps the facet set of ``K`` onto itself."""
    if g.n != K.n:
        return False
    if K.has_facets:
        facets = K.facets
        return sorted(g.apply(f) for f in facets) == list(facets)
    mnf = K.minimal_nonfaces()
    return sorted(g.apply(c) for c in mnf) == list(mnf)


def check_automorphisms(K: SimplicialComplex, gens: Iterable[Permutation]) -> None:
    for g in gens:
        if not is_automorphism(K, g):
            raise InvalidInputError(f"{g.to_cycles()} is not an automorphism")


def _vertex_invariants(K: SimplicialComplex) -> list[tuple]:
    facets = K.facets
    mnf = K.minimal_nonfaces()
    inv = []
    for v in range(K.n):
        bit = 1 << v
        fsizes = sorted(f.bit_count() for f in facets if f & bit)
        nsizes = sorted(c.bit_count() for c in mnf if c & bit)
        inv.append((tuple(fsizes), tuple(nsizes)))
    return inv


class _AutSearch:
    def __init__(self, K: SimplicialComplex):
        self.K = K
        self.n = K.n
        self.faces = _downward_closure(K.maximal_faces())
        self.facets_of = [[f for f in K.maximal_faces() if f >> v & 1] for v in range(K.n)]
        self.inv = _vertex_invariants(K)

    def _consistent(self, img: list[int], u: int) -> bool:
        # image and preimage of every facet through u, cut down to the
        # assigned part, must stay faces
        assigned = 0
        image_assigned = 0
        for v, w in enumerate(img):
            if w >= 0:
                assigned |= 1 << v
                image_assigned |= 1 << w
        for f in self.facets_of[u]:
            part = f & assigned
            out = 0
            for v in members(part):
                out |= 1 << img[v]
            if out not in self.faces:
                return False
        pre = {w: v for v, w in enumerate(img) if w >= 0}
        for f in self.facets_of[img[u]]:
            part = f & image_assigned
            out = 0
            for w in members(part):
                out |= 1 << pre[w]
            if out not in self.faces:
                return False
        return True

    def find(self, level: int, target: int) -> Permutation | None:
        """An automorphism fixing ``0..level-1`` and sending ``level`` to ``target``."""
        n = self.n
        if self.inv[level] != self.inv[target]:
            return None
        img = [-1] * n
        used = [False] * n
        for v in range(level):
            img[v] = v
            used[v] = True
        if used[target]:
            return None
        img[level] = target
        used[target] = True
        if not self._consistent(img, level):
            return None

        def extend(v: int) -> bool:
            if v == n:
                return is_automorphism(self.K, Permutation(tuple(img)))
            for w in range(n):
                if used[w] or self.inv[v] != self.inv[w]:
                    continue
                img[v] = w
                used[w] = True
                if self._consistent(img, v) and extend(v + 1):
                    return True
                used[w] = False
                img[v] = -1
            return False

        if extend(level + 1):
            return Permutation(tuple(img))
        return None


def automorphism_group(K: SimplicialComplex) -> PermGroup:
    """Generators and order of ``Aut(K)`` by backtracking.

    Works down the stabilizer chain of the base ``0, 1, ..., n-1``: at level
    ``i`` one automorphism fixing ``0..i-1`` is searched for each candidate
    image of ``i`` not yet reached by the generators found so far.  The
    order is the product of the basic orbit lengths.
    """
    if K.n > AUTOMORPHISM_SEARCH_LIMIT:
        raise CapacityError(
            f"automorphism search needs n <= {AUTOMORPHISM_SEARCH_LIMIT}; "
            "supply generators instead")
    n = K.n
    search = _AutSearch(K)
    gens: list[Permutation] = []
    order = 1
    for level in range(n - 1, -1, -1):
        orbit = {level}
        for c in range(level + 1, n):
            if c in orbit:
                continue
            g = search.find(level, c)
            if g is None:
                continue
            gens.append(g)
            orbit = set(PermGroup(n, gens).orbit_of_set(1 << level))
            orbit = {members(m)[0] for m in orbit}
        order *= len(orbit)
    return PermGroup(n, gens, order=order)


def is_vertex_transitive(K: SimplicialComplex, G: PermGroup) -> bool:
    check_automorphisms(K, G.generators)
    return G.n == K.n and G.is_transitive()


# -- standard groups ------------------------------------------------------------

def symmetric_group(n: int, points: Sequence[int] | None = None, degree: int | None = None) -> PermGroup:
    """``Σ`` on ``points`` (default all of ``[n]``), acting inside ``[degree]``."""
    degree = n if degree is None else degree
    pts = list(range(n)) if points is None else list(points)
    gens = []
    if len(pts) >= 2:
        gens.append(Permutation.cycle(degree, pts[:2]))
        gens.append(Permutation.cycle(degree, pts))
    order = 1
    for k in range(2, len(pts) + 1):
        order *= k
    return PermGroup(degree, gens, order=order)


def direct_product(*groups: PermGroup) -> PermGroup:
    """Product acting on the disjoint union of the ground sets (join order)."""
    n = sum(G.n for G in groups)
    gens, offset, order = [], 0, 1
    for G in groups:
        gens.extend(g.shifted(offset, n) for g in G.generators)
        offset += G.n
        order = None if order is None or G._order is None else order * G._order
    return PermGroup(n, gens, order=order)


def wreath_power(G: PermGroup, m: int) -> PermGroup:
    """``G ≀ S_m`` acting on ``m`` consecutive copies of ``G``'s ground set.

    Generated by ``G`` on the first block plus a block transposition and a
    block cycle.
    """
    k = G.n
    n = k * m
    gens = [g.shifted(0, n) for g in G.generators]

    def block_perm(blocks: Sequence[int]) -> Permutation:
        image = list(range(n))
        for a, b in zip(blocks, list(blocks[1:]) + list(blocks[:1])):
            for i in range(k):
                image[a * k + i] = b * k + i
        return Permutation(tuple(image))

    if m >= 2 and k:
        gens.append(block_perm([0, 1]))
        gens.append(block_perm(list(range(m))))
    order = None
    if G._order is not None:
        fact = 1
        for i in range(2, m + 1):
            fact *= i
        order = G._order ** m * fact
    return PermGroup(n, gens, order=order)
