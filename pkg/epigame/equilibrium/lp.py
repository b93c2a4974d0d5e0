"""
Exact linear programming over the rationals.

Solves ``maximize c·x  s.t.  A_ub x <= b_ub,  A_eq x = b_eq,  x >= 0`` with a
two-phase tableau simplex and Bland's pivoting rule. Every entry is a
``Fraction``; there is no tolerance anywhere.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import (
    List,
    Optional,
    Sequence,
    Tuple,
)

from ..core import (
    DimensionMismatch,
    LPInfeasible,
    LPUnbounded,
    get_logger,
)

Matrix = Sequence[Sequence[Fraction]]
Vector = Sequence[Fraction]


@dataclass(frozen=True)
class LPSolution:
    x: Tuple[Fraction, ...]
    objective: Fraction
    pivots: int


class ExactSimplex:
    """
    Dense tableau in canonical form with respect to ``basis``.

    Column layout: original variables, then one slack per inequality row,
    then artificials. Artificials exist only for rows whose slack cannot
    seed the basis (negative right-hand side) and for equality rows.
    """

    def __init__(
        self,
        c: Vector,
        a_ub: Optional[Matrix] = None,
        b_ub: Optional[Vector] = None,
        a_eq: Optional[Matrix] = None,
        b_eq: Optional[Vector] = None
    ) -> None:
        self._logger = get_logger()
        self.n = len(c)
        self.c = [Fraction(v) for v in c]
        a_ub, b_ub = list(a_ub or []), list(b_ub or [])
        a_eq, b_eq = list(a_eq or []), list(b_eq or [])
        self._check_shape(a_ub, b_ub, "ub")
        self._check_shape(a_eq, b_eq, "eq")

        n_slack = len(a_ub)
        rows: List[List[Fraction]] = []
        rhs: List[Fraction] = []
        basis: List[Optional[int]] = []
        needs_artificial: List[int] = []

        for k, (row, bound) in enumerate(zip(a_ub, b_ub)):
            slack = [Fraction(0)] * n_slack
            slack[k] = Fraction(1)
            full = [Fraction(v) for v in row] + slack
            bound = Fraction(bound)
            if bound < 0:
                full = [-v for v in full]
                bound = -bound
                needs_artificial.append(len(rows))
                basis.append(None)
            else:
                basis.append(self.n + k)
            rows.append(full)
            rhs.append(bound)

        for row, bound in zip(a_eq, b_eq):
            full = [Fraction(v) for v in row] + [Fraction(0)] * n_slack
            bound = Fraction(bound)
            if bound < 0:
                full = [-v for v in full]
                bound = -bound
            needs_artificial.append(len(rows))
            basis.append(None)
            rows.append(full)
            rhs.append(bound)

        self.first_artificial = self.n + n_slack
        width = self.first_artificial + len(needs_artificial)
        for position, row_index in enumerate(needs_artificial):
            basis[row_index] = self.first_artificial + position
        for row_index, row in enumerate(rows):
            row.extend([Fraction(0)] * len(needs_artificial))
            if row_index in needs_artificial:
                row[self.first_artificial + needs_artificial.index(row_index)] = Fraction(1)

        self.rows = rows
        self.rhs = rhs
        self.basis: List[int] = [b for b in basis if b is not None]
        self.width = width
        self.pivots = 0

    def _check_shape(self, a: list, b: list, name: str) -> None:
        if len(a) != len(b):
            raise DimensionMismatch(
                f"A_{name} and b_{name} have different row counts",
                details={"rows": len(a), "bounds": len(b)},
            )
        for position, row in enumerate(a):
            if len(row) != self.n:
                raise DimensionMismatch(
                    f"A_{name} row has the wrong width",
                    details={"row": position, "width": len(row), "expected": self.n},
                )

    def pivot(self, i: int, j: int) -> None:
        """Make column ``j`` basic in row ``i``."""
        piv = self.rows[i][j]
        self.rows[i] = [v / piv for v in self.rows[i]]
        self.rhs[i] /= piv
        for k, row in enumerate(self.rows):
            if k != i and row[j]:
                f = row[j]
                self.rows[k] = [v - f * w for v, w in zip(row, self.rows[i])]
                self.rhs[k] -= f * self.rhs[i]
        self.basis[i] = j
        self.pivots += 1

    def _reduced_costs(self, cost: Sequence[Fraction], allowed: int) -> List[Fraction]:
        return [
            cost[j] - sum((cost[self.basis[i]] * self.rows[i][j] for i in range(len(self.rows))), Fraction(0))
            for j in range(allowed)
        ]

    def bland_primal_step(self, cost: Sequence[Fraction], allowed: int) -> bool:
        """One pivot; True once no column can improve the objective."""
        reduced = self._reduced_costs(cost, allowed)
        entering = next((j for j in range(allowed) if reduced[j] > 0), None)
        if entering is None:
            return True
        candidates = [
            (self.rhs[i] / self.rows[i][entering], self.basis[i], i)
            for i in range(len(self.rows))
            if self.rows[i][entering] > 0
        ]
        if not candidates:
            raise LPUnbounded(entering)
        _, _, leaving = min(candidates)
        self.pivot(leaving, entering)
        return False

    def _run(self, cost: Sequence[Fraction], allowed: int) -> None:
        while not self.bland_primal_step(cost, allowed):
            pass

    def _value(self, cost: Sequence[Fraction]) -> Fraction:
        return sum((cost[self.basis[i]] * self.rhs[i] for i in range(len(self.rows))), Fraction(0))

    def _phase_one(self) -> None:
        if self.first_artificial == self.width:
            return
        cost = [Fraction(0)] * self.first_artificial + [Fraction(-1)] * (self.width - self.first_artificial)
        self._run(cost, self.width)
        residual = -self._value(cost)
        if residual > 0:
            raise LPInfeasible(str(residual))
        self._drive_out_artificials()

    def _drive_out_artificials(self) -> None:
        """Pivot zero-level artificials out of the basis; drop rows that are redundant."""
        i = 0
        while i < len(self.rows):
            if self.basis[i] >= self.first_artificial:
                column = next((j for j in range(self.first_artificial) if self.rows[i][j]), None)
                if column is None:
                    del self.rows[i], self.rhs[i], self.basis[i]
                    continue
                self.pivot(i, column)
            i += 1

    def solve(self) -> LPSolution:
        self._phase_one()
        cost = self.c + [Fraction(0)] * (self.width - self.n)
        self._run(cost, self.first_artificial)
        x = [Fraction(0)] * self.width
        for i, column in enumerate(self.basis):
            x[column] = self.rhs[i]
        solution = LPSolution(
            x=tuple(x[: self.n]),
            objective=self._value(cost),
            pivots=self.pivots,
        )
        self._logger.debug(f"Simplex finished after {self.pivots} pivots with objective {solution.objective}")
        return solution


def maximize(
    c: Vector,
    a_ub: Optional[Matrix] = None,
    b_ub: Optional[Vector] = None,
    a_eq: Optional[Matrix] = None,
    b_eq: Optional[Vector] = None
) -> LPSolution:
    """
    Maximize ``c·x`` over ``{x >= 0 : A_ub x <= b_ub, A_eq x = b_eq}``.

    Raises:
        LPInfeasible: when the feasible region is empty
        LPUnbounded: when the objective has no finite maximum
    """
    return ExactSimplex(c, a_ub, b_ub, a_eq, b_eq).solve()
