import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toricnccr.errors import BudgetExceeded
from toricnccr.intprog import find_integer_solution, integer_feasibility


def brute(A, t, mask, box):
    ranges = [range(0, box + 1) if m else range(-box, box + 1) for m in mask]
    for x in itertools.product(*ranges):
        if all(sum(a * v for a, v in zip(row, x)) == ti for row, ti in zip(A, t)):
            return True
    return False


def test_examples():
    assert integer_feasibility([[2, 3]], [7], [True, True])
    assert not brute([[2, 3]], [1], [True, True], 5)
    assert not integer_feasibility([[2, 3]], [1], [True, True])
    assert not integer_feasibility([[2], [0]], [1, 0], [True])


def test_free_columns():
    # 2z = 3 has no integer solution; 2z + 3y = 1 with y >= 0 does (y=1, z=-1)
    assert not integer_feasibility([[2]], [3], [False])
    x = find_integer_solution([[2, 3]], [1], [False, True])
    assert x is not None and 2 * x[0] + 3 * x[1] == 1 and x[1] >= 0


def test_congruence_branching():
    # x >= 0, y free: 3x - 6y = 4 impossible (gcd 3), 3x + 4y = 5 with x - y in 2Z
    assert not integer_feasibility([[3, -6]], [4], [True, False])
    assert integer_feasibility([[3, 4, 0], [1, -1, 2]], [5, 1], [True, True, False]) == brute(
        [[3, 4, 0], [1, -1, 2]], [5, 1], [True, True, False], 8)


def test_dimension_errors():
    with pytest.raises(ValueError):
        integer_feasibility([[1, 2]], [1, 2], [True, True])
    with pytest.raises(ValueError):
        integer_feasibility([[1, 2]], [1], [True])


def test_budget_is_surfaced():
    # 6x + 10y + 15z = 7 is lattice-feasible but needs several nodes to refute
    with pytest.raises(BudgetExceeded):
        integer_feasibility([[6, 10, 15]], [7], [True, True, True], budget=1)


def test_budget_default_verdict():
    assert not integer_feasibility([[6, 10, 15]], [7], [True, True, True])


coef = st.integers(-4, 4)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 2), st.integers(1, 3), st.data())
def test_agrees_with_bounded_brute_force_when_bounded(m, n, data):
    """On systems whose nonnegative part is bounded, compare with a box search.

    A row with all-positive coefficients on the masked columns and no free
    columns bounds every masked variable by its target.
    """
    A = [data.draw(st.lists(st.integers(1, 4), min_size=n, max_size=n))]
    for _ in range(m - 1):
        A.append(data.draw(st.lists(coef, min_size=n, max_size=n)))
    t = [data.draw(st.integers(0, 12))] + [data.draw(coef) for _ in range(m - 1)]
    mask = [True] * n
    got = find_integer_solution(A, t, mask)
    assert (got is not None) == brute(A, t, mask, 12)
    if got is not None:
        assert all(sum(a * v for a, v in zip(row, got)) == ti for row, ti in zip(A, t))
        assert all(v >= 0 for v in got)


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_soundness_with_free_columns(data):
    # random instances built from a known solution are always feasible
    n = data.draw(st.integers(1, 4))
    m = data.draw(st.integers(1, 2))
    A = [data.draw(st.lists(coef, min_size=n, max_size=n)) for _ in range(m)]
    mask = data.draw(st.lists(st.booleans(), min_size=n, max_size=n))
    x0 = [data.draw(st.integers(0, 3)) if mk else data.draw(st.integers(-3, 3)) for mk in mask]
    t = [sum(a * v for a, v in zip(row, x0)) for row in A]
    # negative masked coefficients can make the polyhedron unbounded; the
    # search then either finds a point or runs out of budget, never "no"
    try:
        x = find_integer_solution(A, t, mask, budget=20000)
    except BudgetExceeded:
        return
    assert x is not None
    assert [sum(a * v for a, v in zip(row, x)) for row in A] == t
    assert all(v >= 0 for v, mk in zip(x, mask) if mk)
