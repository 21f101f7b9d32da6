"""Complexes from monotone graph properties.

The ground set is the edge set of ``K_n``, indexed lexicographically:
``{1,2}, {1,3}, ..., {1,n}, {2,3}, ...`` are vertices ``1, 2, ...`` of the
complex.  A set ``S`` of edges is a face iff the complementary edge set has
the property ``P``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .complex import MAX_VERTICES, SimplicialComplex, full_set
from .exceptions import CapacityError, InvalidInputError
from .symmetry import PermGroup, Permutation

COLORING_LIMIT = 1 << 20


def edge_index(n: int) -> list[tuple[int, int]]:
    """Edges of ``K_n`` as 0-based vertex pairs, in lexicographic order."""
    return list(itertools.combinations(range(n), 2))


def _edge_position(n: int) -> dict[tuple[int, int], int]:
    return {e: i for i, e in enumerate(edge_index(n))}


@dataclass(frozen=True)
class GraphProperty:
    """A monotone graph property; only ``has a k-clique`` is built in."""

    kind: str
    k: int

    def __post_init__(self):
        if self.kind != "clique":
            raise InvalidInputError(f"unsupported graph property {self.kind!r}")
        if self.k < 1:
            raise InvalidInputError("clique size must be >= 1")

    @classmethod
    def parse(cls, text: str) -> "GraphProperty":
        kind, _, arg = text.partition(":")
        try:
            return cls(kind.strip(), int(arg))
        except ValueError:
            raise InvalidInputError(f"bad property {text!r}; expected clique:k") from None

    def __str__(self):
        return f"{self.kind}:{self.k}"

    def minimal_graphs(self, n: int) -> list[int]:
        """Edge masks of the inclusion-minimal graphs on ``[n]`` with the property."""
        if self.k == 1:
            return [0] if n >= 1 else []
        pos = _edge_position(n)
        out = []
        for clique in itertools.combinations(range(n), self.k):
            out.append(sum(1 << pos[e] for e in itertools.combinations(clique, 2)))
        return sorted(out)

    def evaluator(self, n: int):
        """``edge mask -> bool`` for graphs on ``[n]``."""
        targets = self.minimal_graphs(n)
        return lambda edges: any(t & ~edges == 0 for t in targets)


def clique(k: int) -> GraphProperty:
    return GraphProperty("clique", k)


def ramsey_complex(n: int, prop: GraphProperty) -> SimplicialComplex:
    """Faces are edge sets whose complement in ``K_n`` has ``prop``.

    The facets are the complements of the minimal graphs with ``prop``.
    """
    edges = comb(n, 2)
    if edges > MAX_VERTICES:
        raise CapacityError(f"K_{n} has {edges} edges; at most {MAX_VERTICES} supported")
    minimal = prop.minimal_graphs(n)
    if not minimal:
        raise InvalidInputError(f"K_{n} itself lacks {prop}; the empty set is not a face")
    ground = full_set(edges)
    return SimplicialComplex.from_facets(edges, [ground & ~g for g in minimal])


def induced_edge_group(n: int) -> PermGroup:
    """``S_n`` acting on the edges of ``K_n`` (transposition and ``n``-cycle)."""
    edges = edge_index(n)
    pos = _edge_position(n)
    m = len(edges)
    gens = []
    if n >= 2:
        for sigma in ([1, 0] + list(range(2, n)), list(range(1, n)) + [0]):
            image = [pos[tuple(sorted((sigma[a], sigma[b])))] for a, b in edges]
            g = Permutation(tuple(image))
            if not g.is_identity():
                gens.append(g)
    return PermGroup(m, gens)


def is_pr_admissible(n: int, prop: GraphProperty, r: int,
                     limit: int = COLORING_LIMIT) -> bool:
    """Whether every ``r``-coloring of the edges of ``K_n`` has a color class
    whose complement has ``prop``.  Empty color classes are allowed.

    Colors are interchangeable, so the first edge is pinned to color 0.
    """
    if r < 1:
        raise InvalidInputError("r must be >= 1")
    m = comb(n, 2)
    if m == 0:
        return prop.evaluator(n)(0)
    if r ** (m - 1) > limit:
        raise CapacityError(f"{r}^{m - 1} colorings exceed the enumeration cap {limit}")
    has = prop.evaluator(n)
    ground = full_set(m)
    for tail in itertools.product(range(r), repeat=m - 1):
        classes = [0] * r
        classes[0] = 1
        for i, c in enumerate(tail, start=1):
            classes[c] |= 1 << i
        if not any(has(ground & ~cls) for cls in classes):
            return False
    return True
