from fractions import Fraction

from shd.simplex import INFEASIBLE, OPTIMAL, UNBOUNDED, solve_lp


def test_simple_optimum():
    # min -x - y  s.t. x + y + s = 4, x - y + t = 2
    res = solve_lp([[1, 1, 1, 0], [1, -1, 0, 1]], [4, 2], [-1, -1, 0, 0])
    assert res.status == OPTIMAL
    assert res.value == -4


def test_exact_fractional_vertex():
    res = solve_lp([[3, 1]], [1], [1, 1])
    assert res.status == OPTIMAL
    assert list(res.x) == [Fraction(1, 3), 0]


def test_infeasible():
    assert solve_lp([[1, 1]], [-1], [0, 0]).status == INFEASIBLE


def test_unbounded():
    assert solve_lp([[1, -1]], [0], [-1, 0]).status == UNBOUNDED


def test_degenerate_cycling_example_terminates():
    # classic cycling instance; Bland's rule must still terminate
    A = [[Fraction(1, 4), -8, -1, 9, 1, 0, 0],
         [Fraction(1, 2), -12, Fraction(-1, 2), 3, 0, 1, 0],
         [0, 0, 1, 0, 0, 0, 1]]
    c = [Fraction(-3, 4), 20, Fraction(-1, 2), 6, 0, 0, 0]
    res = solve_lp(A, [0, 0, 1], c)
    assert res.status == OPTIMAL
    assert res.value == Fraction(-5, 4)
