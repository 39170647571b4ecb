from fractions import Fraction

import numpy as np
from hypothesis import given
from hypothesis import strategies as st
from scipy.optimize import linprog

from troplink.fm import Constraint, feasible


def test_simple_systems():
    assert feasible(1, [Constraint.ge([1], 1), Constraint.le([1], 2)])
    assert not feasible(1, [Constraint.ge([1], 2), Constraint.le([1], 1)])
    assert not feasible(1, [Constraint.gt([1], 0), Constraint.le([1], 0)])
    assert feasible(1, [Constraint.ge([1], 0), Constraint.le([1], 0)])


def test_equations_are_substituted():
    # x + y = 1, x >= 1, y > 0 is infeasible
    assert not feasible(2, [Constraint.ge([1, 0], 1), Constraint.gt([0, 1], 0)], [([1, 1], 1)])
    assert feasible(2, [Constraint.ge([1, 0], 1), Constraint.ge([0, 1], 0)], [([1, 1], 1)])


def test_fractional_data():
    assert feasible(1, [Constraint.ge([Fraction(1, 3)], Fraction(1, 2)), Constraint.le([1], Fraction(3, 2))])
    assert not feasible(1, [Constraint.ge([Fraction(1, 3)], Fraction(1, 2)), Constraint.lt([1], Fraction(3, 2))])


systems = st.integers(1, 4).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.tuples(st.lists(st.integers(-4, 4), min_size=n, max_size=n), st.integers(-4, 4)), min_size=1, max_size=7),
    )
)


@given(systems)
def test_agrees_with_linear_programming(system):
    n, rows = system
    ok = feasible(n, [Constraint.ge(a, b) for a, b in rows])
    res = linprog(
        np.zeros(n),
        A_ub=-np.array([a for a, _ in rows], dtype=float),
        b_ub=-np.array([b for _, b in rows], dtype=float),
        bounds=[(None, None)] * n,
        method="highs",
    )
    assert ok == (res.status == 0)
