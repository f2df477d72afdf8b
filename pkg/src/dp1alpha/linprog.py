"""Exact linear programming over the rationals.

A small two-phase simplex working entirely in exact arithmetic.  Problems
are stated as  minimize c.x  subject to  A x = b  with a per-variable
nonnegativity flag (free variables are split internally).  Infeasible
problems come back with a Farkas certificate: a row multiplier vector y
with y.A <= 0 componentwise and y.b > 0, verified exactly before it is
returned.  Bland's rule keeps the pivoting finite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

try:  # pragma: no cover - exercised implicitly by the whole suite
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover
    _Q = Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


def _to_fraction(value) -> Fraction:
    # plain-int components; Fraction(mpq) would smuggle mpz internals along
    return Fraction(int(value.numerator), int(value.denominator))


@dataclass(frozen=True)
class LPProblem:
    """minimize objective.x  subject to  rows[i].x == rhs[i]  for all i.

    ``nonneg[j]`` marks variable j as constrained to x_j >= 0; variables
    flagged False are free.
    """

    objective: tuple[Fraction, ...]
    rows: tuple[tuple[Fraction, ...], ...]
    rhs: tuple[Fraction, ...]
    nonneg: tuple[bool, ...]

    def __post_init__(self) -> None:
        n = len(self.objective)
        if len(self.nonneg) != n:
            raise ValueError("nonneg flags must match the variable count")
        if len(self.rows) != len(self.rhs):
            raise ValueError("row/rhs count mismatch")
        for row in self.rows:
            if len(row) != n:
                raise ValueError("constraint row has wrong arity")


@dataclass(frozen=True)
class LPResult:
    status: str
    objective_value: Fraction | None = None
    point: tuple[Fraction, ...] | None = None
    farkas: tuple[Fraction, ...] | None = None


def _pivot(tableau: list[list], z_row: list, basis: list[int], row: int, col: int) -> None:
    pivot = tableau[row][col]
    inv = 1 / pivot
    tableau[row] = [entry * inv for entry in tableau[row]]
    pivot_row = tableau[row]
    for i, other in enumerate(tableau):
        if i == row:
            continue
        factor = other[col]
        if factor:
            tableau[i] = [a - factor * p for a, p in zip(other, pivot_row)]
    factor = z_row[col]
    if factor:
        z_row[:] = [a - factor * p for a, p in zip(z_row, pivot_row)]
    basis[row] = col


def _run_simplex(tableau: list[list], z_row: list, basis: list[int], banned: int) -> bool:
    """Minimize until no negative reduced cost remains.

    ``banned`` is the first column index that may never enter the basis
    (used to freeze artificial columns in phase 2).  Returns False when an
    improving column has no blocking row, i.e. the LP is unbounded.
    """
    ncols = len(z_row) - 1
    while True:
        entering = -1
        for j in range(min(ncols, banned)):
            if z_row[j] < 0:
                entering = j
                break
        if entering < 0:
            return True
        leaving = -1
        best_ratio = None
        for i, row in enumerate(tableau):
            coeff = row[entering]
            if coeff <= 0:
                continue
            ratio = row[-1] / coeff
            if (
                best_ratio is None
                or ratio < best_ratio
                or (ratio == best_ratio and basis[i] < basis[leaving])
            ):
                best_ratio = ratio
                leaving = i
        if leaving < 0:
            return False
        _pivot(tableau, z_row, basis, leaving, entering)


def _reduced_costs(tableau: list[list], basis: list[int], cost: list) -> list:
    z_row = list(cost) + [_Q(0)]
    for i, b in enumerate(basis):
        cb = cost[b] if b < len(cost) else _Q(0)
        if cb:
            row = tableau[i]
            z_row = [a - cb * p for a, p in zip(z_row, row)]
    return z_row


def solve(problem: LPProblem) -> LPResult:
    """Solve an exact LP, returning an optimum, a Farkas certificate, or unbounded."""
    n = len(problem.objective)
    m = len(problem.rows)

    # Split free variables into positive and negative parts.
    col_of: list[tuple[int, int]] = []  # (positive column, negative column or -1)
    cost: list = []
    columns = 0
    for j in range(n):
        cj = _Q(problem.objective[j])
        if problem.nonneg[j]:
            col_of.append((columns, -1))
            cost.append(cj)
            columns += 1
        else:
            col_of.append((columns, columns + 1))
            cost.extend([cj, -cj])
            columns += 2

    # Signed rows with nonnegative right-hand sides, plus artificial columns.
    row_sign: list[int] = []
    tableau: list[list] = []
    for i in range(m):
        rhs = _Q(problem.rhs[i])
        sign = -1 if rhs < 0 else 1
        row_sign.append(sign)
        expanded = [_Q(0)] * columns
        for j in range(n):
            a = _Q(problem.rows[i][j]) * sign
            if not a:
                continue
            pos, neg = col_of[j]
            expanded[pos] = a
            if neg >= 0:
                expanded[neg] = -a
        art = [_Q(0)] * m
        art[i] = _Q(1)
        tableau.append(expanded + art + [rhs * sign])

    basis = [columns + i for i in range(m)]
    phase1_cost = [_Q(0)] * columns + [_Q(1)] * m
    z_row = _reduced_costs(tableau, basis, phase1_cost)
    if not _run_simplex(tableau, z_row, basis, columns + m):
        raise AssertionError("phase 1 objective is bounded below by zero")

    if -z_row[-1] > 0:  # leftover artificial mass: infeasible
        y_signed = [1 - z_row[columns + i] for i in range(m)]
        mults = [row_sign[i] * y_signed[i] for i in range(m)]
        rows_q = [[_Q(v) for v in row] for row in problem.rows]
        for j in range(n):
            against = sum(mults[i] * rows_q[i][j] for i in range(m))
            if against > 0:
                raise AssertionError("invalid Farkas certificate")
        gain = sum(mults[i] * _Q(problem.rhs[i]) for i in range(m))
        if not gain > 0:
            raise AssertionError("invalid Farkas certificate")
        return LPResult(status=INFEASIBLE, farkas=tuple(_to_fraction(v) for v in mults))

    # Drive leftover artificial variables out of the basis.
    keep_rows: list[int] = []
    for i in range(m):
        if basis[i] < columns:
            keep_rows.append(i)
            continue
        entering = next((j for j in range(columns) if tableau[i][j]), -1)
        if entering >= 0:
            _pivot(tableau, z_row, basis, i, entering)
            keep_rows.append(i)
        # else: the row reduced to 0 == 0 and is dropped as redundant
    tableau = [tableau[i][:columns] + [tableau[i][-1]] for i in keep_rows]
    basis = [basis[i] for i in keep_rows]

    z_row = _reduced_costs(tableau, basis, cost)
    if not _run_simplex(tableau, z_row, basis, columns):
        return LPResult(status=UNBOUNDED)

    values = [_Q(0)] * columns
    for i, b in enumerate(basis):
        values[b] = tableau[i][-1]
    point_q = []
    for j in range(n):
        pos, neg = col_of[j]
        point_q.append(values[pos] - (values[neg] if neg >= 0 else 0))

    for i in range(m):
        achieved = _Q(0)
        row = problem.rows[i]
        for j in range(n):
            if row[j]:
                achieved += _Q(row[j]) * point_q[j]
        if achieved != _Q(problem.rhs[i]):
            raise AssertionError("optimal point violates an equality row")
    for j in range(n):
        if problem.nonneg[j] and point_q[j] < 0:
            raise AssertionError("optimal point violates a sign constraint")

    objective = sum((_Q(c) * x for c, x in zip(problem.objective, point_q)), _Q(0))
    return LPResult(
        status=OPTIMAL,
        objective_value=_to_fraction(objective),
        point=tuple(_to_fraction(x) for x in point_q),
    )
