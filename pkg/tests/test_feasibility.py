from fractions import Fraction

import sympy
from hypothesis import given, strategies as st

from semihyper.feasibility import find_nonnegative_solution, rank, rref

from strategies import rationals


def matrices(max_rows=4, max_cols=4):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(
                st.lists(rationals(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r
            )
        )
    )


def test_rref_small():
    rows, pivots = rref([[2, 4], [1, 3]])
    assert rows == [[1, 0], [0, 1]] and pivots == [0, 1]
    assert rank([[1, 2], [2, 4]]) == 1


def test_infeasible_inconsistent():
    assert not find_nonnegative_solution([[1, 1], [1, 1]], [1, 2]).feasible


def test_infeasible_sign():
    # x - y = -1 and x + y = 0 forces y = 1/2, x = -1/2
    assert not find_nonnegative_solution([[1, -1], [1, 1]], [-1, 0]).feasible


def test_feasible_point():
    result = find_nonnegative_solution([[1, 1, 1]], [1])
    assert result.feasible
    assert sum(result.point) == 1 and all(v >= 0 for v in result.point)


@given(matrices())
def test_rank_matches_sympy(rows):
    assert rank(rows) == sympy.Matrix(rows).rank()


@given(matrices(), st.data())
def test_solution_checks_out(rows, data):
    n = len(rows[0])
    x = data.draw(st.lists(st.integers(0, 3), min_size=n, max_size=n))
    b = [sum(Fraction(a) * v for a, v in zip(row, x)) for row in rows]
    result = find_nonnegative_solution(rows, b)
    assert result.feasible
    assert all(v >= 0 for v in result.point)
    assert [sum(a * v for a, v in zip(row, result.point)) for row in rows] == b


@given(matrices(3, 3), st.lists(rationals(-3, 3), min_size=3, max_size=3))
def test_feasibility_matches_vertex_search(rows, rhs):
    """A nonnegative solution exists iff some column subset gives one."""
    b = rhs[: len(rows)]
    A = sympy.Matrix(rows)
    B = sympy.Matrix(b)
    n = A.shape[1]
    exists = all(v == 0 for v in b)
    for mask in range(1, 2**n):
        cols = [j for j in range(n) if mask >> j & 1]
        sub = A[:, cols]
        if sub.rank() != len(cols) or sub.rank() != sub.row_join(B).rank():
            continue
        sol, _ = sub.gauss_jordan_solve(B)
        if all(v >= 0 for v in sol):
            exists = True
            break
    assert find_nonnegative_solution(rows, b).feasible == exists
