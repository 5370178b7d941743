"""Exact linear feasibility over the rationals.

Gaussian elimination brings the equality system to reduced row echelon
form (dropping redundant rows and detecting inconsistency), then a phase-1
simplex with Bland's rule looks for a nonnegative solution.  Bland's rule
(lowest entering index, lowest leaving index on ties) cannot cycle, so the
search always terminates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

__all__ = ["rref", "rank", "Feasibility", "find_nonnegative_solution"]


def _matrix(rows) -> list[list[Fraction]]:
    return [[Fraction(v) for v in row] for row in rows]


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns; zero rows are dropped."""
    M = _matrix(rows)
    if not M:
        return [], []
    width = len(M[0])
    pivots = []
    r = 0
    for c in range(width):
        pivot = next((i for i in range(r, len(M)) if M[i][c]), None)
        if pivot is None:
            continue
        M[r], M[pivot] = M[pivot], M[r]
        inv = 1 / M[r][c]
        M[r] = [v * inv for v in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


@dataclass(frozen=True)
class Feasibility:
    """Outcome of ``find nonnegative x with A x = b``.

    ``point`` is a vertex of the feasible polyhedron when ``feasible``;
    ``rank`` is the rank of ``A`` so the affine solution space of the
    equalities has dimension ``n - rank``.
    """

    feasible: bool
    point: tuple[Fraction, ...] | None
    rank: int
    pivots: int


def _pivot(T: list[list[Fraction]], r: int, c: int) -> None:
    inv = 1 / T[r][c]
    T[r] = [v * inv for v in T[r]]
    for i in range(len(T)):
        if i != r and T[i][c]:
            f = T[i][c]
            T[i] = [a - f * b for a, b in zip(T[i], T[r])]


def find_nonnegative_solution(A: Sequence[Sequence], b: Sequence) -> Feasibility:
    n = len(A[0]) if A else 0
    aug = [list(row) + [rhs] for row, rhs in zip(A, b)]
    R, piv = rref(aug)
    if piv and piv[-1] == n:
        return Feasibility(False, None, len(piv) - 1, 0)
    m = len(R)
    if m == 0:
        return Feasibility(True, tuple(Fraction(0) for _ in range(n)), 0, 0)

    # Tableau columns: n originals, m artificials, rhs.  Rows with a
    # negative right-hand side are negated so artificials start feasible.
    T = []
    for i, row in enumerate(R):
        sign = -1 if row[n] < 0 else 1
        art = [Fraction(int(j == i)) for j in range(m)]
        T.append([sign * v for v in row[:n]] + art + [sign * row[n]])
    basis = [n + i for i in range(m)]
    # Phase-1 cost row: reduced costs of minimizing the artificial sum.
    cost = [Fraction(0)] * (n + m + 1)
    for row in T:
        for j in range(n):
            cost[j] -= row[j]
        cost[-1] -= row[-1]

    steps = 0
    while True:
        enter = next((j for j in range(n + m) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        for i, row in enumerate(T):
            if row[enter] > 0:
                ratio = row[-1] / row[enter]
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            # Cannot happen in phase 1 (objective bounded below by 0).
            raise ArithmeticError("phase-1 simplex reported an unbounded ray")
        leave = best[1]
        _pivot(T, leave, enter)
        f = cost[enter]
        cost = [a - f * bb for a, bb in zip(cost, T[leave])]
        basis[leave] = enter
        steps += 1

    if cost[-1] != 0:
        return Feasibility(False, None, len(piv), steps)
    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            x[j] = T[i][-1]
    return Feasibility(True, tuple(x), len(piv), steps)
