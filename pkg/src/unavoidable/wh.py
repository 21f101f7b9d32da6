"""Superadditive measures generated by weighted hypergraphs.

A weighted hypergraph ``W = (F, ω)`` on ``[n]`` induces

    ν_ω(A) = max { ω(A_1) + ... + ω(A_k) : A_1, ..., A_k ∈ F disjoint, ⊆ A }

with ``ν_ω(A) = 0`` when no member of ``F`` fits inside ``A``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .complex import SimplicialComplex, complex_from_predicate, full_set, is_self_dual, submasks
from .exceptions import CapacityError, InvalidInputError

EVAL_LIMIT = 20
TABLE_LIMIT = 14


class WeightedHypergraph:
    """A nonempty family of subsets of ``[n]`` with nonnegative rational weights.

    ``nu`` values are memoized per instance; the memo only ever grows and
    every entry is a pure function of the immutable data.
    """

    __slots__ = ("n", "members", "weights", "_by_low", "_memo")

    def __init__(self, n: int, weights: Mapping[int, object] | Iterable[tuple[int, object]]):
        items = dict(weights.items() if isinstance(weights, Mapping) else weights)
        if not items:
            raise InvalidInputError("weighted hypergraph needs at least one member")
        ground = full_set(n)
        table: dict[int, Fraction] = {}
        for m, w in items.items():
            if m < 0 or m & ~ground:
                raise InvalidInputError(f"member outside [{n}]")
            w = Fraction(w)
            if w < 0:
                raise InvalidInputError("weights must be nonnegative")
            table[m] = w
        self.n = n
        self.members = tuple(sorted(table))
        self.weights = table
        by_low: dict[int, list[tuple[int, Fraction]]] = {}
        for m in self.members:
            # the empty member adds weight without using vertices; it can
            # be repeated at will, so a positive weight there is unbounded
            if m == 0:
                if table[m] > 0:
                    raise InvalidInputError("the empty member must have weight 0")
                continue
            by_low.setdefault(m & -m, []).append((m, table[m]))
        self._by_low = by_low
        self._memo: dict[int, Fraction] = {0: Fraction(0)}

    def __repr__(self):
        return f"WeightedHypergraph(n={self.n}, members={len(self.members)})"

    def __call__(self, mask: int) -> Fraction:
        return nu_omega(self, mask)

    def _nu(self, s: int) -> Fraction:
        memo = self._memo
        if s in memo:
            return memo[s]
        # iterative post-order to avoid deep recursion on wide sets
        stack = [s]
        while stack:
            t = stack[-1]
            if t in memo:
                stack.pop()
                continue
            low = t & -t
            deps = [t ^ low] + [t & ~m for m, _ in self._by_low.get(low, ()) if m & ~t == 0]
            missing = [d for d in deps if d not in memo]
            if missing:
                stack.extend(missing)
                continue
            best = memo[t ^ low]
            for m, w in self._by_low.get(low, ()):
                if m & ~t == 0:
                    cand = w + memo[t & ~m]
                    if cand > best:
                        best = cand
            memo[t] = best
            stack.pop()
        return memo[s]


def nu_omega(W: WeightedHypergraph, a: int) -> Fraction:
    """``ν_ω(A)``: best total weight of a subpartition of ``A`` by members.

    DP on the lowest vertex ``v`` of ``A``: either ``v`` stays uncovered, or
    it is covered by a member whose lowest vertex is ``v``.
    """
    if a & ~full_set(W.n):
        raise InvalidInputError("set outside the ground set")
    if a.bit_count() > EVAL_LIMIT:
        raise CapacityError(f"nu_omega evaluates sets of size <= {EVAL_LIMIT}")
    return W._nu(a)


def nu_table(W: WeightedHypergraph) -> list[Fraction]:
    """``ν_ω`` on all of ``2^[n]`` (``n <= 14``), bottom-up."""
    if W.n > TABLE_LIMIT:
        raise CapacityError(f"nu table needs n <= {TABLE_LIMIT}")
    table = [Fraction(0)] * (1 << W.n)
    for s in range(1, 1 << W.n):
        low = s & -s
        best = table[s ^ low]
        for m, w in W._by_low.get(low, ()):
            if m & ~s == 0 and w + table[s & ~m] > best:
                best = w + table[s & ~m]
        table[s] = best
    return table


def is_superadditive_table(values, m: int | None = None) -> bool:
    """``ν(∅) = 0``, monotone, and ``ν(A ∪ B) >= ν(A) + ν(B)`` for disjoint ``A, B``."""
    values = [Fraction(v) for v in values]
    size = len(values)
    if m is None:
        m = size.bit_length() - 1
    if size != 1 << m:
        raise InvalidInputError(f"table over 2^[{m}] needs {1 << m} entries")
    if m > TABLE_LIMIT:
        raise CapacityError(f"superadditivity check needs m <= {TABLE_LIMIT}")
    if values[0] != 0:
        return False
    for s in range(1, size):
        t = s
        while t:
            v = t & -t
            if values[s ^ v] > values[s]:
                return False
            t ^= v
        low = s & -s
        # pairs {A, S∖A} with the lowest vertex of S in A
        for sub in submasks(s ^ low):
            a = sub | low
            if a != s and values[a] + values[s ^ a] > values[s]:
                return False
    return True


def wh_sublevel(W: WeightedHypergraph, r: int) -> SimplicialComplex:
    """``K_{ν_ω <= α/r}`` with ``α = ν_ω([n])``."""
    if r < 1:
        raise InvalidInputError("r must be >= 1")
    if W.n > EVAL_LIMIT:
        raise CapacityError(f"wh_sublevel needs n <= {EVAL_LIMIT}")
    bound = nu_omega(W, full_set(W.n)) / r
    return complex_from_predicate(W.n, lambda a: W._nu(a) <= bound)


def selfdual_realization(K: SimplicialComplex) -> WeightedHypergraph:
    """``F = 2^[n]`` with ``ω = 0`` on faces and ``1`` on non-faces.

    For self-dual ``K`` no two non-faces are disjoint, so ``ν_ω = ω`` and
    ``K`` is recovered as ``K_{ν_ω <= 1/2}``.  Both facts are re-checked.
    """
    if K.n > TABLE_LIMIT:
        raise CapacityError(f"self-dual realization needs n <= {TABLE_LIMIT}")
    if not is_self_dual(K):
        raise InvalidInputError("complex is not self-dual")
    omega = {a: (0 if K.is_face(a) else 1) for a in range(1 << K.n)}
    W = WeightedHypergraph(K.n, omega)
    table = nu_table(W)
    if any(table[a] != omega[a] for a in range(1 << K.n)):
        raise ArithmeticError("realization check failed: nu_omega differs from omega")
    if wh_sublevel(W, 2) != K:
        raise ArithmeticError("realization check failed: sublevel complex differs")
    return W


def prune_zero_weights(W: WeightedHypergraph) -> WeightedHypergraph:
    """Drop zero-weight members; they never change ``ν_ω``.

    If every weight is zero the first member is kept so the family stays
    nonempty.
    """
    kept = {m: w for m, w in W.weights.items() if w != 0}
    if not kept:
        first = W.members[0]
        kept = {first: W.weights[first]}
    return WeightedHypergraph(W.n, kept)
