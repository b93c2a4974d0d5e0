from fractions import Fraction

import pytest

from epigame.core import (
    DimensionMismatch,
    LPInfeasible,
    LPUnbounded,
)
from epigame.equilibrium import (
    ExactSimplex,
    maximize,
)

F = Fraction


class TestMaximize:
    """Test suite for the exact simplex."""

    def test_two_variable_vertex(self):
        solution = maximize(c=[1, 1], a_ub=[[1, 2], [3, 1]], b_ub=[4, 6])
        assert solution.x == (F(8, 5), F(6, 5))
        assert solution.objective == F(14, 5)

    def test_equality_constraint(self):
        solution = maximize(c=[-1, -2], a_eq=[[1, 1]], b_eq=[1])
        assert solution.x == (1, 0)
        assert solution.objective == -1

    def test_negative_bound_needs_phase_one(self):
        """Test a ``>=`` row written as ``-x <= -b``."""
        solution = maximize(c=[-1], a_ub=[[-1]], b_ub=[F(-3, 2)])
        assert solution.x == (F(3, 2),)

    def test_redundant_equalities(self):
        """Test that linearly dependent equality rows are dropped after phase one."""
        solution = maximize(c=[1, 0], a_eq=[[1, 1], [2, 2]], b_eq=[1, 2])
        assert solution.objective == 1

    def test_degenerate_problem_terminates(self):
        """Test a classic cycling-prone problem under Bland's rule."""
        solution = maximize(
            c=[F(3, 4), -20, F(1, 2), -6],
            a_ub=[
                [F(1, 4), -8, -1, 9],
                [F(1, 2), -12, F(-1, 2), 3],
                [0, 0, 1, 0],
            ],
            b_ub=[0, 0, 1],
        )
        assert solution.objective == F(5, 4)

    def test_infeasible(self):
        with pytest.raises(LPInfeasible) as exc_info:
            maximize(c=[1], a_ub=[[1]], b_ub=[-1])
        assert exc_info.value.details["phase_one_residual"] == "1"

    def test_unbounded(self):
        with pytest.raises(LPUnbounded):
            maximize(c=[1, 0], a_ub=[[-1, 1]], b_ub=[0])

    def test_row_width(self):
        with pytest.raises(DimensionMismatch, match="wrong width"):
            maximize(c=[1, 1], a_ub=[[1]], b_ub=[1])

    def test_row_count(self):
        with pytest.raises(DimensionMismatch, match="different row counts"):
            maximize(c=[1], a_eq=[[1]], b_eq=[1, 2])


class TestExactSimplex:
    """Test suite for the tableau."""

    def test_pivot_count_is_reported(self):
        solution = ExactSimplex(c=[1, 1], a_ub=[[1, 2], [3, 1]], b_ub=[4, 6]).solve()
        assert solution.pivots >= 1

    def test_no_constraints_at_origin(self):
        """Test that a nonpositive objective stays at the origin."""
        solution = ExactSimplex(c=[-1, -1]).solve()
        assert solution.x == (0, 0)
        assert solution.pivots == 0
