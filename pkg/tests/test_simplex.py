import itertools
import random
from fractions import Fraction as F

import numpy as np
import pytest
from scipy.optimize import linprog as scipy_linprog

from beliefcat.simplex import INFEASIBLE, OPTIMAL, UNBOUNDED, feasible_point, linprog


def test_small_optimum():
    res = linprog([1, 1, 0, 0], [[1, 2, 1, 0], [3, 1, 0, 1]], [4, 6])
    assert res.status == OPTIMAL
    assert res.x == (F(8, 5), F(6, 5), 0, 0)
    assert res.value == F(14, 5)


def test_infeasible_and_unbounded():
    assert linprog([1, 1], [[1, 1], [1, 1]], [1, 2]).status == INFEASIBLE
    assert linprog([1, 0], [[1, -1]], [0]).status == UNBOUNDED
    assert feasible_point([[1, 1]], [-1]) is None


def test_redundant_rows_and_minimize():
    res = linprog([1, 1], [[1, 1], [2, 2]], [1, 2], maximize=False)
    assert res.status == OPTIMAL and res.value == 1


def test_degenerate_cycling_example():
    # Beale's classic cycling problem in equality form; Bland's rule must terminate.
    c = [F(3, 4), -150, F(1, 50), -6, 0, 0, 0]
    a = [
        [F(1, 4), -60, F(-1, 25), 9, 1, 0, 0],
        [F(1, 2), -90, F(-1, 50), 3, 0, 1, 0],
        [0, 0, 1, 0, 0, 0, 1],
    ]
    res = linprog(c, a, [0, 0, 1])
    assert res.status == OPTIMAL
    assert res.value == F(1, 20)


def _brute_force(c, a, b):
    """Best basic feasible solution by enumerating column bases."""
    m, n = len(a), len(c)
    best = None
    for cols in itertools.combinations(range(n), m):
        sub = np.array([[float(a[i][j]) for j in cols] for i in range(m)])
        if abs(np.linalg.det(sub)) < 1e-12:
            continue
        xs = np.linalg.solve(sub, np.array([float(v) for v in b]))
        if (xs < -1e-9).any():
            continue
        val = sum(float(c[j]) * x for j, x in zip(cols, xs))
        best = val if best is None else max(best, val)
    return best


@pytest.mark.parametrize("seed", range(40))
def test_random_against_independent_solvers(seed):
    rng = random.Random(seed)
    m, n = rng.randint(1, 3), rng.randint(3, 6)
    a = [[F(rng.randint(-3, 4)) for _ in range(n)] for _ in range(m)]
    b = [F(rng.randint(0, 5)) for _ in range(m)]
    a.append([F(1)] * n)
    b.append(F(rng.randint(1, 4)))  # bounded feasible region or empty
    c = [F(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(n)]
    ours = linprog(c, a, b)
    ref = scipy_linprog([-float(v) for v in c], A_eq=[[float(v) for v in r] for r in a], b_eq=[float(v) for v in b],
                        bounds=[(0, None)] * n, method="highs")
    if ref.status == 2:
        assert ours.status == INFEASIBLE
        return
    assert ours.status == OPTIMAL
    assert float(ours.value) == pytest.approx(-ref.fun, abs=1e-9)
    assert all(v >= 0 for v in ours.x)
    for row, rhs in zip(a, b):
        assert sum(r * x for r, x in zip(row, ours.x)) == rhs
    if np.linalg.matrix_rank(np.array([[float(v) for v in r] for r in a])) == len(a):
        assert float(ours.value) == pytest.approx(_brute_force(c, a, b), abs=1e-9)
