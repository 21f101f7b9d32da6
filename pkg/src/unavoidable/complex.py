"""Simplicial complexes on an explicit ground set ``[n] = {0, ..., n-1}``.

Vertex sets are plain ``int`` bitmasks: bit ``i`` set means vertex ``i`` is
in the set.  The canonical order on vertex sets is the numeric value of the
mask, and every list this module returns is sorted that way.

A complex is determined either by its facets (inclusion-maximal faces) or by
its minimal non-faces; a :class:`SimplicialComplex` keeps whichever it was
built from and derives the other on demand.  Joins of large complexes are
built from minimal non-faces only, since their facet lists grow
multiplicatively.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Iterator, Sequence

from .exceptions import CapacityError, InvalidInputError

MAX_VERTICES = 64
#: Largest ground set for which exhaustive ``2^n`` subset scans are allowed.
SCAN_LIMIT = 20
#: Largest number of faces a downward closure may enumerate.
FACE_LIMIT = 1 << 22
#: Largest facet / minimal non-face family produced by dualization.
FAMILY_LIMIT = 500_000


# -- vertex sets ------------------------------------------------------------

def vset(vertices: Iterable[int]) -> int:
    """Bitmask of an iterable of 0-based vertex indices."""
    mask = 0
    for v in vertices:
        if v < 0:
            raise InvalidInputError(f"negative vertex index {v}")
        mask |= 1 << v
    return mask


def members(mask: int) -> list[int]:
    """Sorted 0-based vertices of a bitmask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def full_set(n: int) -> int:
    return (1 << n) - 1


def format_set(mask: int, one_based: bool = True) -> str:
    shift = 1 if one_based else 0
    return "{" + ",".join(str(v + shift) for v in members(mask)) + "}"


def submasks(mask: int) -> Iterator[int]:
    """All subsets of ``mask``, including ``mask`` itself and 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def minimal_sets(sets: Iterable[int]) -> list[int]:
    """Inclusion-minimal members of a family, canonically sorted."""
    kept: list[int] = []
    for s in sorted(set(sets), key=lambda m: (m.bit_count(), m)):
        if not any(k & s == k for k in kept):
            kept.append(s)
    return sorted(kept)


def maximal_sets(sets: Iterable[int]) -> list[int]:
    """Inclusion-maximal members of a family, canonically sorted."""
    kept: list[int] = []
    for s in sorted(set(sets), key=lambda m: (-m.bit_count(), m)):
        if not any(k & s == s for k in kept):
            kept.append(s)
    return sorted(kept)


def minimal_transversals(edges: Sequence[int], limit: int = FAMILY_LIMIT) -> list[int]:
    """Minimal hitting sets of a family of sets (Berge's incremental method).

    An empty member makes the family unhittable and the result is ``[]``;
    an empty family has the single transversal ``0``.
    """
    edges = minimal_sets(edges)
    if edges and edges[0] == 0:
        return []
    trans = [0]
    for edge in sorted(edges, key=lambda m: (m.bit_count(), m)):
        hit = [t for t in trans if t & edge]
        missed = [t for t in trans if not t & edge]
        if not missed:
            continue
        grown = {t | (1 << v) for t in missed for v in members(edge)}
        # ``hit`` is already an antichain; only grown sets can be redundant.
        hit_sorted = sorted(hit, key=lambda m: m.bit_count())
        new = list(hit)
        for g in grown:
            if not any(h & g == h for h in hit_sorted):
                new.append(g)
        trans = minimal_sets(new)
        if len(trans) > limit:
            raise CapacityError(
                f"transversal family exceeds {limit} sets during dualization")
    return trans


def _check_ground(n: int) -> None:
    if not 0 <= n <= MAX_VERTICES:
        raise CapacityError(f"ground set size {n} outside 0..{MAX_VERTICES}")


# -- complexes --------------------------------------------------------------

class SimplicialComplex:
    """A simplicial complex ``K`` on the ground set ``[n]``.

    ``Vert(K)`` may be a proper subset of ``[n]``; the ground set is never
    shrunk implicitly.  An empty facet list means ``K = {∅}``; ``2^[n]`` has
    the single facet ``[n]``.

    Instances are immutable.  The derived family (facets or minimal
    non-faces) is memoized on first use; filling the memo is idempotent, so
    sharing an instance between threads is safe.
    """

    __slots__ = ("n", "_facets", "_mnf")

    def __init__(self, n: int, facets: Sequence[int] | None = None,
                 min_nonfaces: Sequence[int] | None = None):
        # Trusted constructor: arguments must already be canonical.  Use
        # from_facets / from_min_nonfaces for arbitrary input.
        if facets is None and min_nonfaces is None:
            raise InvalidInputError("need facets or minimal non-faces")
        self.n = n
        self._facets = None if facets is None else tuple(facets)
        self._mnf = None if min_nonfaces is None else tuple(min_nonfaces)

    # construction
    @classmethod
    def from_facets(cls, n: int, candidate_faces: Iterable[int]) -> "SimplicialComplex":
        """The complex generated by ``candidate_faces`` (downward closure)."""
        _check_ground(n)
        ground = full_set(n)
        cands = list(candidate_faces)
        for c in cands:
            if c < 0 or c & ~ground:
                raise InvalidInputError(
                    f"face {format_set(c)} not contained in [{n}]")
        facets = [f for f in maximal_sets(cands) if f]
        return cls(n, facets)

    @classmethod
    def from_sets(cls, n: int, faces: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Like :meth:`from_facets` with faces given as vertex iterables."""
        return cls.from_facets(n, [vset(f) for f in faces])

    @classmethod
    def from_min_nonfaces(cls, n: int, nonfaces: Iterable[int]) -> "SimplicialComplex":
        """The complex of all sets containing none of ``nonfaces``."""
        _check_ground(n)
        ground = full_set(n)
        nf = list(nonfaces)
        for c in nf:
            if c < 0 or c & ~ground:
                raise InvalidInputError(
                    f"non-face {format_set(c)} not contained in [{n}]")
        mnf = minimal_sets(nf)
        if mnf and mnf[0] == 0:
            raise InvalidInputError("the empty set is always a face")
        return cls(n, None, mnf)

    @classmethod
    def simplex(cls, n: int) -> "SimplicialComplex":
        """The full complex ``2^[n]``."""
        _check_ground(n)
        return cls(n, [full_set(n)] if n else [], [])

    @classmethod
    def empty(cls, n: int) -> "SimplicialComplex":
        """The complex ``{∅}`` on ``[n]``."""
        _check_ground(n)
        return cls(n, [], [1 << i for i in range(n)])

    # derived families
    @property
    def facets(self) -> tuple[int, ...]:
        if self._facets is None:
            ground = full_set(self.n)
            trans = minimal_transversals(self._mnf)
            self._facets = tuple(sorted(f for f in (ground ^ t for t in trans) if f))
        return self._facets

    def minimal_nonfaces(self) -> tuple[int, ...]:
        """Inclusion-minimal non-faces, canonically sorted (memoized)."""
        if self._mnf is None:
            self._mnf = tuple(_mnf_from_facets(self.n, self._facets))
        return self._mnf

    @property
    def has_facets(self) -> bool:
        return self._facets is not None

    @property
    def has_min_nonfaces(self) -> bool:
        return self._mnf is not None

    def maximal_faces(self) -> tuple[int, ...]:
        """Facets, with ``{∅}`` reporting the empty set as its only facet."""
        return self.facets or (0,)

    # queries
    @property
    def ground(self) -> int:
        return full_set(self.n)

    def is_face(self, a: int) -> bool:
        if a & ~self.ground:
            raise InvalidInputError(f"{format_set(a)} not contained in [{self.n}]")
        if a == 0:
            return True
        if self._facets is not None:
            return any(a & f == a for f in self._facets)
        return not any(c & a == c for c in self._mnf)

    __contains__ = is_face

    def vertices(self) -> int:
        """``Vert(K)`` as a bitmask."""
        if self._facets is not None:
            out = 0
            for f in self._facets:
                out |= f
            return out
        return self.ground & ~sum(c for c in self._mnf if c.bit_count() == 1)

    @property
    def dim(self) -> int:
        return max((f.bit_count() for f in self.maximal_faces()), default=0) - 1

    def is_full(self) -> bool:
        return self.is_face(self.ground)

    def faces(self) -> list[int]:
        """All faces (including ∅), canonically sorted."""
        return sorted(_downward_closure(self.maximal_faces()))

    def f_vector(self) -> list[int]:
        """``f[i]`` = number of faces with ``i`` vertices (``f[0] = 1``)."""
        counts = [0] * (self.n + 1)
        for f in _downward_closure(self.maximal_faces()):
            counts[f.bit_count()] += 1
        while len(counts) > 1 and counts[-1] == 0:
            counts.pop()
        return counts

    def is_subcomplex_of(self, other: "SimplicialComplex") -> bool:
        if self.n != other.n:
            return False
        if self._facets is not None or other._mnf is None:
            return all(other.is_face(f) for f in self.facets)
        # K ⊆ L iff every minimal non-face of L is a non-face of K.
        return all(not self.is_face(c) for c in other._mnf)

    def _key(self, other: "SimplicialComplex"):
        if self._facets is not None and other._facets is not None:
            return self._facets, other._facets
        return self.minimal_nonfaces(), other.minimal_nonfaces()

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        if self.n != other.n:
            return False
        a, b = self._key(other)
        return a == b

    def __hash__(self):
        return hash((self.n, self.minimal_nonfaces()))

    def __repr__(self):
        if self._facets is not None and len(self._facets) <= 12:
            body = " ".join(format_set(f) for f in self._facets) or "{}"
            return f"SimplicialComplex(n={self.n}, facets=[{body}])"
        if self._facets is not None:
            return f"SimplicialComplex(n={self.n}, {len(self._facets)} facets)"
        return f"SimplicialComplex(n={self.n}, {len(self._mnf)} minimal non-faces)"


def _downward_closure(facets: Iterable[int], limit: int = FACE_LIMIT) -> set[int]:
    facets = list(facets)
    if sum(1 << f.bit_count() for f in facets) > limit * 4:
        raise CapacityError("face enumeration exceeds the configured limit")
    faces: set[int] = set()
    for f in facets:
        if f in faces:
            continue
        faces.update(submasks(f))
        if len(faces) > limit:
            raise CapacityError(f"more than {limit} faces")
    return faces


def _mnf_from_facets(n: int, facets: Sequence[int]) -> list[int]:
    ground = full_set(n)
    facets = list(facets) or [0]
    cost = sum(1 << f.bit_count() for f in facets)
    if cost > FACE_LIMIT:
        return minimal_transversals([ground ^ f for f in facets])
    faces = _downward_closure(facets)
    out = set()
    for f in faces:
        rest = ground & ~f
        while rest:
            low = rest & -rest
            rest ^= low
            c = f | low
            if c in faces or c in out:
                continue
            if all((c ^ (1 << v)) in faces for v in members(f)):
                out.add(c)
    return sorted(out)


def minimal_nonfaces_scan(K: SimplicialComplex) -> list[int]:
    """Minimal non-faces by ascending-cardinality scan over ``2^[n]``.

    Slow reference implementation; supersets of non-faces already found are
    skipped, so every non-face reached is minimal.
    """
    if K.n > SCAN_LIMIT:
        raise CapacityError(f"scan over 2^{K.n} subsets exceeds limit {SCAN_LIMIT}")
    found: list[int] = []
    for k in range(K.n + 1):
        for combo in combinations(range(K.n), k):
            c = vset(combo)
            if any(m & c == m for m in found):
                continue
            if not K.is_face(c):
                found.append(c)
    return sorted(found)


def complex_from_predicate(n: int, is_face: Callable[[int], bool]) -> SimplicialComplex:
    """Build a complex from a downward-closed face predicate on ``2^[n]``.

    The predicate is only queried on sets all of whose one-smaller subsets
    reachable by the search are faces, so monotone pruning keeps the scan
    proportional to the number of faces.
    """
    if n > SCAN_LIMIT:
        raise CapacityError(f"scan over 2^{n} subsets exceeds limit {SCAN_LIMIT}")
    _check_ground(n)
    faces = {0}
    stack = [0]
    while stack:
        a = stack.pop()
        top = a.bit_length()
        for v in range(top, n):
            b = a | (1 << v)
            if is_face(b):
                faces.add(b)
                stack.append(b)
    if not is_face(0):
        raise InvalidInputError("predicate rejects the empty set")
    facets = [f for f in faces
              if f and all((f | (1 << v)) not in faces for v in range(n) if not f >> v & 1)]
    return SimplicialComplex(n, sorted(facets))


# -- constructions ----------------------------------------------------------

@dataclass(frozen=True)
class GroundMap:
    """A total function ``[n_src] -> [n_dst]`` (no surjectivity required)."""

    n_src: int
    n_dst: int
    image: tuple[int, ...]

    def __post_init__(self):
        if len(self.image) != self.n_src:
            raise InvalidInputError("image length differs from n_src")
        if any(not 0 <= y < self.n_dst for y in self.image):
            raise InvalidInputError(f"image values must lie in [{self.n_dst}]")

    @classmethod
    def identity(cls, n: int) -> "GroundMap":
        return cls(n, n, tuple(range(n)))

    @classmethod
    def inclusion(cls, n_src: int, n_dst: int) -> "GroundMap":
        return cls(n_src, n_dst, tuple(range(n_src)))

    def preimage(self, b: int) -> int:
        out = 0
        for x, y in enumerate(self.image):
            if b >> y & 1:
                out |= 1 << x
        return out

    def image_of(self, a: int) -> int:
        return vset(self.image[x] for x in members(a))

    def then(self, g: "GroundMap") -> "GroundMap":
        """The composite ``g ∘ self``."""
        if g.n_src != self.n_dst:
            raise InvalidInputError("maps are not composable")
        return GroundMap(self.n_src, g.n_dst, tuple(g.image[y] for y in self.image))


def join(*complexes: SimplicialComplex) -> SimplicialComplex:
    """Join on the disjoint union of the ground sets.

    The ``i``-th factor occupies the positions after those of the earlier
    factors.  Minimal non-faces of a join are exactly the shifted minimal
    non-faces of the factors; facets are products of factor facets and are
    only materialized when the product is small.
    """
    if not complexes:
        raise InvalidInputError("join of zero complexes")
    n = sum(K.n for K in complexes)
    if n > MAX_VERTICES:
        raise CapacityError(f"join has {n} > {MAX_VERTICES} vertices")
    mnf: list[int] = []
    offset = 0
    n_facets = 1
    for K in complexes:
        mnf.extend(c << offset for c in K.minimal_nonfaces())
        offset += K.n
        n_facets *= len(K.maximal_faces()) if K.has_facets else FAMILY_LIMIT + 1
    facets = None
    if n_facets <= FAMILY_LIMIT:
        facets = [0]
        offset = 0
        for K in complexes:
            facets = [f | (g << offset) for f in facets for g in K.maximal_faces()]
            offset += K.n
        facets = sorted(f for f in facets if f)
    return SimplicialComplex(n, facets, sorted(mnf))


def join_power(K: SimplicialComplex, m: int) -> SimplicialComplex:
    """``K^{*m}``, the join of ``m`` copies of ``K``."""
    if m < 1:
        raise InvalidInputError("join power needs m >= 1")
    return join(*([K] * m))


def pushforward(K: SimplicialComplex, f: GroundMap,
                scan_limit: int | None = None) -> SimplicialComplex:
    """``f_*(K) = {B ⊆ [n_dst] : f^{-1}(B) ∈ K}``."""
    if f.n_src != K.n:
        raise InvalidInputError(f"map source size {f.n_src} != ground size {K.n}")
    limit = SCAN_LIMIT if scan_limit is None else scan_limit
    if f.n_dst > limit:
        raise CapacityError(f"pushforward target {f.n_dst} exceeds scan limit {limit}")
    pre = [0] * f.n_dst
    for x, y in enumerate(f.image):
        pre[y] |= 1 << x

    def is_face(b):
        a = 0
        for y in members(b):
            a |= pre[y]
        return K.is_face(a)

    return complex_from_predicate(f.n_dst, is_face)


def _compress(mask: int, positions: Sequence[int]) -> int:
    return vset(i for i, p in enumerate(positions) if mask >> p & 1)


def restriction(K: SimplicialComplex, w: int) -> SimplicialComplex:
    """``K|_W``: faces of ``K`` inside ``W``, re-indexed onto ``[|W|]``."""
    if w & ~K.ground:
        raise InvalidInputError(f"{format_set(w)} not contained in [{K.n}]")
    positions = members(w)
    mnf = None
    if K.has_min_nonfaces:
        mnf = sorted(_compress(c, positions) for c in K.minimal_nonfaces() if c & w == c)
    facets = None
    if K.has_facets or mnf is None:
        facets = [f for f in maximal_sets(_compress(f & w, positions) for f in K.facets) if f]
    return SimplicialComplex(len(positions), facets, mnf)


def delete_facet(K: SimplicialComplex, a: int) -> SimplicialComplex:
    """``K ∖ {A}`` for a facet ``A`` of ``K``."""
    facets = K.facets
    if a not in facets:
        raise InvalidInputError(f"{format_set(a)} is not a facet")
    rest = [f for f in facets if f != a]
    extra = []
    for v in members(a):
        sub = a ^ (1 << v)
        if sub and not any(sub & f == sub for f in rest):
            extra.append(sub)
    return SimplicialComplex(K.n, sorted(rest + extra))


def is_self_dual(K: SimplicialComplex) -> bool:
    """Whether exactly one of ``A``, ``[n]∖A`` is a face for every ``A``.

    Equivalent to: the minimal non-faces are exactly the complements of the
    facets.
    """
    ground = K.ground
    if K.is_full():
        return False
    mnf = K.minimal_nonfaces()
    # two disjoint non-faces A ⊆ B^c rule it out without touching facets
    for i, a in enumerate(mnf):
        for b in mnf[i + 1:]:
            if not a & b:
                return False
    return sorted(ground ^ f for f in K.maximal_faces()) == list(K.minimal_nonfaces())

