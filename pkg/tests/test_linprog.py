from fractions import Fraction

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import linprog

from toricnccr.linprog import constraint, find_feasible


def satisfies(x, cons, lower=None, upper=None):
    for c in cons:
        v = sum(a * b for a, b in zip(c.coeffs, x))
        if c.sense == "==" and v != c.rhs:
            return False
        if c.sense == "<=" and v > c.rhs:
            return False
        if c.sense == ">=" and v < c.rhs:
            return False
    for j, v in enumerate(x):
        if lower and lower[j] is not None and v < lower[j]:
            return False
        if upper and upper[j] is not None and v > upper[j]:
            return False
    return True


def test_simple_feasible():
    cons = [constraint([1, 1], "==", 3), constraint([1, -1], ">=", 1)]
    x = find_feasible(2, cons, [0, 0])
    assert x is not None and satisfies(x, cons, [0, 0])


def test_simple_infeasible():
    cons = [constraint([1, 1], "<=", -1)]
    assert find_feasible(2, cons, [0, 0]) is None
    assert find_feasible(1, [], [Fraction(2)], [Fraction(1)]) is None


def test_free_variables_and_strictness_by_scaling():
    # x > 0, y < 0, x + y = 0 homogenised as x >= 1, y <= -1
    cons = [constraint([1, 0], ">=", 1), constraint([0, 1], "<=", -1), constraint([1, 1], "==", 0)]
    x = find_feasible(2, cons)
    assert satisfies(x, cons)


def test_result_is_exact():
    cons = [constraint([3], "==", 1)]
    assert find_feasible(1, cons) == [Fraction(1, 3)]


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 3), st.integers(1, 4), st.data())
def test_agrees_with_scipy(n, m, data):
    coef = st.integers(-4, 4)
    A = [data.draw(st.lists(coef, min_size=n, max_size=n)) for _ in range(m)]
    b = data.draw(st.lists(coef, min_size=m, max_size=m))
    senses = data.draw(st.lists(st.sampled_from(["<=", ">=", "=="]), min_size=m, max_size=m))
    cons = [constraint(a, s, r) for a, s, r in zip(A, senses, b)]
    x = find_feasible(n, cons, [-10] * n, [10] * n)
    A_ub, b_ub, A_eq, b_eq = [], [], [], []
    for a, s, r in zip(A, senses, b):
        if s == "<=":
            A_ub.append(a); b_ub.append(r)
        elif s == ">=":
            A_ub.append([-v for v in a]); b_ub.append(-r)
        else:
            A_eq.append(a); b_eq.append(r)
    res = linprog(np.zeros(n), A_ub=A_ub or None, b_ub=b_ub or None, A_eq=A_eq or None,
                  b_eq=b_eq or None, bounds=[(-10, 10)] * n, method="highs")
    if x is not None:
        assert satisfies(x, cons, [-10] * n, [10] * n)
    assert (x is not None) == (res.status == 0)
