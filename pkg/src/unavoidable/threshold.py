"""Measures, threshold complexes and the threshold characteristic ``ρ(K)``.

``ρ(K)`` is ``1/𝔪`` where ``𝔪`` is the minimum of ``x_1 + ... + x_n`` over
the anti-dual polyhedron ``{x >= 0 : Σ_{i∈C} x_i >= 1 for every non-face C}``.
Only minimal non-faces give constraints: the coefficients are 0/1 and
``x >= 0``, so a superset's row is implied by its minimal non-face.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import lp as _lp
from .complex import SimplicialComplex, complex_from_predicate, members
from .exceptions import InvalidInputError
from .partition import is_minimal_r_unavoidable, pi
from .symmetry import PermGroup, Permutation, check_automorphisms

INF = math.inf


@dataclass(frozen=True)
class Measure:
    """Nonnegative weights on ``[n]``; ``μ(A)`` is the sum over ``A``."""

    weights: tuple[Fraction, ...]

    def __post_init__(self):
        w = tuple(Fraction(x) for x in self.weights)
        if any(x < 0 for x in w):
            raise InvalidInputError("measure weights must be nonnegative")
        object.__setattr__(self, "weights", w)

    @classmethod
    def uniform(cls, n: int) -> "Measure":
        return cls((Fraction(1, n),) * n)

    @classmethod
    def point_mass(cls, n: int, v: int) -> "Measure":
        return cls(tuple(Fraction(int(i == v)) for i in range(n)))

    @classmethod
    def parse(cls, text: str) -> "Measure":
        """Whitespace- or comma-separated fractions, e.g. ``"1/2 1/4 1/4"``."""
        try:
            return cls(tuple(Fraction(t) for t in text.replace(",", " ").split()))
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidInputError(f"bad measure {text!r}: {exc}") from None

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def total(self) -> Fraction:
        return sum(self.weights, Fraction(0))

    def is_probability(self) -> bool:
        return self.total == 1

    def normalized(self) -> "Measure":
        t = self.total
        if t == 0:
            raise InvalidInputError("cannot normalize the zero measure")
        return Measure(tuple(w / t for w in self.weights))

    def __call__(self, mask: int) -> Fraction:
        return sum((self.weights[v] for v in members(mask)), Fraction(0))

    def __str__(self):
        return " ".join(str(w) for w in self.weights)


class GeometricMeasure:
    """``ν(A) = min_t μ_t(A)`` for finitely many measures (superadditive)."""

    def __init__(self, measures: Sequence[Measure]):
        if not measures:
            raise InvalidInputError("need at least one measure")
        sizes = {m.n for m in measures}
        if len(sizes) != 1:
            raise InvalidInputError("measures live on different ground sets")
        self.measures = tuple(measures)
        self.n = sizes.pop()

    def __call__(self, mask: int) -> Fraction:
        return min(m(mask) for m in self.measures)


class TableMeasure:
    """A set function given by its full table over ``2^[n]``."""

    def __init__(self, n: int, values: Sequence):
        if len(values) != 1 << n:
            raise InvalidInputError(f"table needs {1 << n} entries")
        self.n = n
        self.values = tuple(Fraction(v) for v in values)

    def __call__(self, mask: int) -> Fraction:
        return self.values[mask]


def sublevel_complex(mu, beta, strict: bool = False) -> SimplicialComplex:
    """``K_{μ≤β}`` (or ``K_{μ<β}``) for a monotone set function ``mu``.

    ``mu`` is anything with an ``n`` attribute that can be called on a
    bitmask: :class:`Measure`, :class:`GeometricMeasure`,
    :class:`TableMeasure`, or a weighted-hypergraph measure.
    """
    beta = Fraction(beta)
    if strict:
        return complex_from_predicate(mu.n, lambda a: mu(a) < beta)
    return complex_from_predicate(mu.n, lambda a: mu(a) <= beta)


sublevel_superadditive = sublevel_complex


# -- the covering LP ------------------------------------------------------------

def anti_dual_lp(K: SimplicialComplex) -> _lp.LinearProgram:
    """One row ``Σ_{i∈C} x_i >= 1`` per minimal non-face ``C``; unit costs."""
    rows = [[1 if c >> i & 1 else 0 for i in range(K.n)] for c in K.minimal_nonfaces()]
    if not rows:
        return _lp.LinearProgram.build([1] * K.n, [], [])
    return _lp.covering_lp(rows, [1] * K.n)


def solve_covering_lp(program: _lp.LinearProgram) -> _lp.LPResult:
    result = _lp.solve(program)
    if not result.verify(program):
        raise ArithmeticError("LP certificate failed re-validation")
    return result


@dataclass(frozen=True)
class ThresholdSolution:
    """``ρ(K)`` together with the LP and its certified solution."""

    rho: Fraction | float
    program: _lp.LinearProgram
    result: _lp.LPResult

    @property
    def optimum(self) -> Fraction:
        return self.result.optimum


def threshold_solution(K: SimplicialComplex) -> ThresholdSolution:
    program = anti_dual_lp(K)
    result = solve_covering_lp(program)
    rho_value = INF if result.optimum == 0 else 1 / result.optimum
    return ThresholdSolution(rho_value, program, result)


def rho(K: SimplicialComplex) -> Fraction | float:
    """Threshold characteristic; ``math.inf`` exactly when ``K = 2^[n]``."""
    return threshold_solution(K).rho


def collapsed_lp(K: SimplicialComplex, G: PermGroup):
    """The orbit-collapsed covering LP for a group of automorphisms.

    One variable per vertex orbit (cost = orbit size) and one row per orbit
    of minimal non-faces, with coefficient ``|C ∩ orbit|``.  Returns the
    program together with the vertex orbits.
    """
    check_automorphisms(K, G.generators)
    vorbits = G.orbits()
    reps = [orb[0] for orb in G.orbits_of_sets(K.minimal_nonfaces())]
    masks = [sum(1 << v for v in orb) for orb in vorbits]
    costs = [len(orb) for orb in vorbits]
    rows = [[(c & m).bit_count() for m in masks] for c in reps]
    if not rows:
        return _lp.LinearProgram.build(costs, [], []), vorbits
    return _lp.covering_lp(rows, costs), vorbits


def rho_symmetrized(K: SimplicialComplex, G: PermGroup | Iterable[Permutation]) -> Fraction | float:
    """``ρ(K)`` computed on the subspace of group-invariant vectors."""
    if not isinstance(G, PermGroup):
        G = PermGroup(K.n, G)
    program, _ = collapsed_lp(K, G)
    result = solve_covering_lp(program)
    return INF if result.optimum == 0 else 1 / result.optimum


def optimal_measure(K: SimplicialComplex) -> Measure:
    """Probability measure ``x*/𝔪`` from an optimal LP point.

    Every non-face ``C`` gets ``μ(C) >= ρ(K)``, so ``K_{μ≤α} ⊆ K`` for
    every ``α < ρ(K)``.
    """
    sol = threshold_solution(K)
    if sol.optimum == 0:
        raise InvalidInputError("the full simplex has no optimal measure")
    return Measure(tuple(x / sol.optimum for x in sol.result.primal))


def dominates(K: SimplicialComplex, mu: Measure, r: int) -> bool:
    """Whether ``K_{μ≤1/r} ⊆ K`` (``μ`` is dominated by ``K``).

    Checked on minimal non-faces: the containment fails iff some non-face
    has measure at most ``1/r``, and non-faces are closed upwards.
    """
    if mu.n != K.n:
        raise InvalidInputError("measure and complex have different ground sets")
    if not mu.is_probability():
        raise InvalidInputError("dominates() expects a probability measure")
    bound = Fraction(1, r)
    return all(mu(c) > bound for c in K.minimal_nonfaces())


def symmetrize_measure(mu: Measure, G: PermGroup | Iterable[Permutation]) -> Measure:
    """Group average ``(1/|G|) Σ_g μ∘g``.

    On each orbit the average is the plain mean of the weights on that
    orbit, so no element enumeration is needed.
    """
    if not isinstance(G, PermGroup):
        G = PermGroup(mu.n, G)
    if G.n != mu.n:
        raise InvalidInputError("group and measure act on different ground sets")
    w = list(mu.weights)
    for orb in G.orbits():
        avg = sum((w[v] for v in orb), Fraction(0)) / len(orb)
        for v in orb:
            w[v] = avg
    return Measure(tuple(w))


def find_dominated_linear(K: SimplicialComplex, r: int) -> Measure | None:
    """A probability measure with ``K_{μ≤1/r} ⊆ K``, if one exists.

    One exists iff ``1/r < ρ(K)``; the LP optimum measure is then a witness.
    """
    sol = threshold_solution(K)
    if sol.optimum == 0:
        return Measure.uniform(K.n) if K.n else None
    if Fraction(1, r) >= sol.rho:
        return None
    return Measure(tuple(x / sol.optimum for x in sol.result.primal))


# -- linear threshold complexes -------------------------------------------------

def separation_lp(K: SimplicialComplex) -> _lp.LinearProgram:
    """Feasibility LP in ``(w_1..w_n, β) >= 0``: ``w(F) <= β`` on facets,
    ``w(C) >= β + 1`` on minimal non-faces."""
    n = K.n
    rows, rhs = [], []
    for f in K.maximal_faces():
        rows.append([-(f >> i & 1) for i in range(n)] + [1])
        rhs.append(0)
    for c in K.minimal_nonfaces():
        rows.append([c >> i & 1 for i in range(n)] + [-1])
        rhs.append(1)
    return _lp.LinearProgram.build([0] * (n + 1), rows, rhs)


def is_linear_threshold(K: SimplicialComplex):
    """Decide whether ``K = K_{μ≤β}`` for some measure ``μ`` and ``β``.

    Returns ``(True, (μ, β))`` with ``μ`` a probability measure, or
    ``(False, None)``; the infeasible case carries a Farkas certificate
    internally (see :func:`separation_lp`).  Finite point sets that can be
    strictly separated can be separated with gap 1 after scaling.
    """
    if K.is_full():
        return True, (Measure.uniform(K.n) if K.n else Measure(()), Fraction(1))
    program = separation_lp(K)
    result = _lp.solve(program)
    if not result.verify(program):
        raise ArithmeticError("separation LP certificate failed re-validation")
    if result.status == _lp.INFEASIBLE:
        return False, None
    w, beta = result.primal[:-1], result.primal[-1]
    total = sum(w, Fraction(0))
    return True, (Measure(tuple(x / total for x in w)), beta / total)


# -- linearity classification ---------------------------------------------------

class Linearity(enum.Enum):
    INTRINSICALLY_LINEAR = "IntrinsicallyLinear"
    INTRINSICALLY_NON_LINEAR = "IntrinsicallyNonLinear"
    STRONGLY_NON_LINEAR = "StronglyNonLinear"

    def __str__(self):
        return self.value


def floor_inverse_rho(value) -> int:
    """``⌊1/ρ⌋`` with the convention ``⌊1/∞⌋ = 0``."""
    if value == INF:
        return 0
    return math.floor(1 / Fraction(value))


def epsilon_from(pi_value: int, rho_value) -> int:
    return floor_inverse_rho(rho_value) + 1 - pi_value


def epsilon(K: SimplicialComplex) -> int:
    """Non-linearity gap ``⌊1/ρ(K)⌋ + 1 - π(K)`` (always >= 0)."""
    return epsilon_from(pi(K), rho(K))


def classify(K: SimplicialComplex, pi_value: int | None = None,
             rho_value=None, minimal: bool | None = None) -> Linearity:
    """Linearity class; ``minimal`` may be supplied when it is already known
    (e.g. for joins of minimal complexes, which are again minimal)."""
    p = pi(K) if pi_value is None else pi_value
    r = rho(K) if rho_value is None else rho_value
    if epsilon_from(p, r) == 0:
        return Linearity.INTRINSICALLY_LINEAR
    if minimal is None:
        minimal = is_minimal_r_unavoidable(K, p)
    if minimal:
        return Linearity.STRONGLY_NON_LINEAR
    return Linearity.INTRINSICALLY_NON_LINEAR


def format_rho(value) -> str:
    return "inf" if value == INF else str(value)
