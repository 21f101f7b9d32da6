"""Exact rational simplex for LPs of the form

    minimize  c·x   subject to  A x >= b,  x >= 0,   with c >= 0.

Because ``c >= 0``, the dual ``maximize b·y s.t. Aᵀy <= c, y >= 0`` is
feasible at ``y = 0``.  The solver runs the primal simplex on that dual from
the slack basis (no phase 1) with Bland's rule, so it always terminates and
its output is fully determined by the input order.  The primal solution is
read off the reduced costs of the slack columns.  An unbounded dual yields a
Farkas ray, which certifies that the primal is infeasible.

All arithmetic is in :class:`fractions.Fraction`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exceptions import InvalidInputError

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class LinearProgram:
    costs: tuple[Fraction, ...]
    rows: tuple[tuple[Fraction, ...], ...]
    rhs: tuple[Fraction, ...]

    def __post_init__(self):
        n = len(self.costs)
        if any(c < 0 for c in self.costs):
            raise InvalidInputError("costs must be nonnegative")
        if len(self.rows) != len(self.rhs):
            raise InvalidInputError("row count differs from rhs length")
        if any(len(r) != n for r in self.rows):
            raise InvalidInputError("row length differs from number of variables")

    @classmethod
    def build(cls, costs: Sequence, rows: Sequence[Sequence], rhs: Sequence) -> "LinearProgram":
        return cls(tuple(Fraction(c) for c in costs),
                   tuple(tuple(Fraction(a) for a in r) for r in rows),
                   tuple(Fraction(b) for b in rhs))

    @property
    def num_vars(self) -> int:
        return len(self.costs)


def covering_lp(rows: Sequence[Sequence], costs: Sequence | None = None) -> LinearProgram:
    """``min costs·x`` over ``rows·x >= 1``, ``x >= 0`` (unit costs by default).

    Every row needs a nonzero coefficient, otherwise the program would be
    infeasible.
    """
    if not rows and costs is None:
        raise InvalidInputError("cannot infer the number of variables")
    n = len(rows[0]) if costs is None else len(costs)
    if costs is None:
        costs = [1] * n
    for r in rows:
        if not any(r):
            raise InvalidInputError("covering row without a nonzero coefficient")
        if any(a < 0 for a in r):
            raise InvalidInputError("covering rows must be nonnegative")
    return LinearProgram.build(costs, rows, [1] * len(rows))


@dataclass(frozen=True)
class LPResult:
    status: str
    optimum: Fraction | None = None
    primal: tuple[Fraction, ...] = ()
    dual: tuple[Fraction, ...] = ()
    #: Farkas ray ``y >= 0`` with ``Aᵀy <= 0`` and ``b·y > 0`` (infeasible case).
    ray: tuple[Fraction, ...] = ()
    pivots: int = field(default=0, compare=False)

    def verify(self, lp: LinearProgram) -> bool:
        """Re-check the certificate by substitution."""
        A, b, c = lp.rows, lp.rhs, lp.costs
        if self.status == INFEASIBLE:
            y = self.ray
            if len(y) != len(A) or any(v < 0 for v in y):
                return False
            for i in range(lp.num_vars):
                if sum(y[k] * A[k][i] for k in range(len(A))) > 0:
                    return False
            return sum(bk * yk for bk, yk in zip(b, y)) > 0
        x, y = self.primal, self.dual
        if len(x) != lp.num_vars or len(y) != len(A):
            return False
        if any(v < 0 for v in x) or any(v < 0 for v in y):
            return False
        for row, bk in zip(A, b):
            if sum(a * xi for a, xi in zip(row, x)) < bk:
                return False
        for i in range(lp.num_vars):
            if sum(y[k] * A[k][i] for k in range(len(A))) > c[i]:
                return False
        primal_obj = sum(ci * xi for ci, xi in zip(c, x))
        dual_obj = sum(bk * yk for bk, yk in zip(b, y))
        return primal_obj == dual_obj == self.optimum


def solve(lp: LinearProgram) -> LPResult:
    """Solve ``lp`` exactly; see the module docstring for the method."""
    n = lp.num_vars          # dual constraints / tableau rows
    m = len(lp.rows)         # dual variables
    zero = Fraction(0)
    # Tableau rows: one per primal variable i, columns y_0..y_{m-1}, s_0..s_{n-1}.
    T = [[lp.rows[k][i] for k in range(m)] + [zero] * n for i in range(n)]
    for i in range(n):
        T[i][m + i] = Fraction(1)
    rhs = list(lp.costs)
    # reduced[j] = c_B B^{-1} A_j - obj_j for the dual objective max b·y
    reduced = [-bk for bk in lp.rhs] + [zero] * n
    basis = [m + i for i in range(n)]
    value = zero
    pivots = 0
    while True:
        enter = next((j for j in range(m + n) if reduced[j] < 0), None)
        if enter is None:
            break
        leave, best = None, None
        for i in range(n):
            a = T[i][enter]
            if a > 0:
                ratio = rhs[i] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    leave, best = i, ratio
        if leave is None:
            ray = [zero] * (m + n)
            ray[enter] = Fraction(1)
            for i in range(n):
                ray[basis[i]] = -T[i][enter]
            return LPResult(INFEASIBLE, ray=tuple(ray[:m]), pivots=pivots)
        piv = T[leave][enter]
        row = [a / piv for a in T[leave]]
        T[leave] = row
        rhs[leave] = rhs[leave] / piv
        for i in range(n):
            if i != leave:
                f = T[i][enter]
                if f:
                    Ti = T[i]
                    T[i] = [a - f * r if r else a for a, r in zip(Ti, row)]
                    rhs[i] -= f * rhs[leave]
        f = reduced[enter]
        reduced = [a - f * r if r else a for a, r in zip(reduced, row)]
        value -= f * rhs[leave]
        basis[leave] = enter
        pivots += 1
    y = [zero] * m
    for i, bvar in enumerate(basis):
        if bvar < m:
            y[bvar] = rhs[i]
    x = tuple(reduced[m:])
    return LPResult(OPTIMAL, optimum=value, primal=x, dual=tuple(y), pivots=pivots)


def format_certificate(result: LPResult) -> str:
    """Plain ``var = p/q`` dump of a result, one value per line."""
    lines = [f"status = {result.status}"]
    if result.status == OPTIMAL:
        lines.append(f"optimum = {result.optimum}")
        lines += [f"x{i + 1} = {v}" for i, v in enumerate(result.primal)]
        lines += [f"y{k + 1} = {v}" for k, v in enumerate(result.dual)]
    else:
        lines += [f"ray{k + 1} = {v}" for k, v in enumerate(result.ray)]
    return "\n".join(lines) + "\n"
