"""Exact rational linear algebra and linear programming.

Everything here works on :class:`fractions.Fraction` and never rounds.
The LP solver is a dense two-phase simplex using Bland's rule, which is
slow but cannot cycle; the degenerate polytopes that show up in credal
set computations make that guarantee worth the cost.

The phase-one tableau of a :class:`LinearProgram` is computed once and
cached, so optimizing many objectives over the same feasible region
only pays for phase two each time.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Literal, Sequence

from .errors import InfeasibleAnchor, SizeLimitExceeded

__all__ = [
    "Vector",
    "LinearProgram",
    "LPResult",
    "solve",
    "dot",
    "rref",
    "nullspace",
    "affine_directions",
    "size_cap",
    "to_fraction_vector",
]

Vector = tuple[Fraction, ...]

DEFAULT_CAP = 1 << 16
CAP_ENV = "PREDYNKIN_MAX_LP_SIZE"


def size_cap() -> int:
    """Largest admissible variable or constraint count.

    Reads ``PREDYNKIN_MAX_LP_SIZE`` on every call so tests and the CLI can
    tighten it without reloading the module.
    """
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        return DEFAULT_CAP
    return cap if cap > 0 else DEFAULT_CAP


def to_fraction_vector(values) -> Vector:
    return tuple(Fraction(v) for v in values)


def dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


@dataclass(frozen=True)
class LPResult:
    """Outcome of a solve.

    ``status`` is ``"optimal"``, ``"infeasible"`` or ``"unbounded"``;
    ``value`` and ``point`` are set only for optimal outcomes.
    """

    status: Literal["optimal", "infeasible", "unbounded"]
    value: Fraction | None = None
    point: Vector | None = None

    @property
    def optimal(self) -> bool:
        return self.status == "optimal"


@dataclass
class _Tableau:
    rows: list[list[Fraction]]  # each row: coefficients then rhs
    basis: list[int]
    n_cols: int

    def copy(self) -> "_Tableau":
        return _Tableau([r[:] for r in self.rows], self.basis[:], self.n_cols)

    def pivot(self, r: int, c: int, obj: list[Fraction] | None = None) -> None:
        prow = self.rows[r]
        pv = prow[c]
        if pv != 1:
            prow[:] = [x / pv for x in prow]
        nz = [j for j, x in enumerate(prow) if x]
        for i, row in enumerate(self.rows):
            if i != r:
                f = row[c]
                if f:
                    for j in nz:
                        row[j] -= f * prow[j]
        if obj is not None:
            f = obj[c]
            if f:
                for j in nz:
                    obj[j] -= f * prow[j]
        self.basis[r] = c


def _bland_loop(tab: _Tableau, obj: list[Fraction], allowed: int) -> bool:
    """Minimize using reduced-cost row ``obj`` (last entry = -value).

    Only the first ``allowed`` columns may enter.  Returns ``False`` when
    the objective is unbounded below.
    """
    rows = tab.rows
    while True:
        enter = next((j for j in range(allowed) if obj[j] < 0), None)
        if enter is None:
            return True
        best = None
        best_ratio = None
        for i, row in enumerate(rows):
            a = row[enter]
            if a > 0:
                ratio = row[-1] / a
                if (
                    best is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and tab.basis[i] < tab.basis[best])
                ):
                    best, best_ratio = i, ratio
        if best is None:
            return False
        tab.pivot(best, enter, obj)


@dataclass(frozen=True)
class LinearProgram:
    """Constraints over ``n_vars`` variables.

    ``eq`` holds ``(row, rhs)`` pairs meaning ``row . x == rhs`` and ``le``
    pairs mean ``row . x <= rhs``.  ``nonneg[j]`` says whether ``x_j >= 0``
    is imposed; free variables are split internally.
    """

    n_vars: int
    eq: tuple[tuple[Vector, Fraction], ...] = ()
    le: tuple[tuple[Vector, Fraction], ...] = ()
    nonneg: tuple[bool, ...] | None = field(default=None)

    def __post_init__(self):
        cap = size_cap()
        if self.n_vars > cap or len(self.eq) + len(self.le) > cap:
            raise SizeLimitExceeded(
                f"LP with {self.n_vars} variables and {len(self.eq) + len(self.le)} "
                f"constraints exceeds the cap of {cap}"
            )
        norm = lambda rows: tuple(  # noqa: E731
            (to_fraction_vector(r), Fraction(b)) for r, b in rows
        )
        object.__setattr__(self, "eq", norm(self.eq))
        object.__setattr__(self, "le", norm(self.le))
        for r, _ in self.eq + self.le:
            if len(r) != self.n_vars:
                raise ValueError(f"row of length {len(r)} in a {self.n_vars}-variable LP")
        if self.nonneg is None:
            object.__setattr__(self, "nonneg", (True,) * self.n_vars)
        elif len(self.nonneg) != self.n_vars:
            raise ValueError("nonneg flags must match the variable count")

    @classmethod
    def simplex(cls, n: int, eq=(), le=()) -> "LinearProgram":
        """The probability simplex on ``n`` atoms with extra constraints."""
        ones = (Fraction(1),) * n
        return cls(n, ((ones, Fraction(1)), *eq), tuple(le))

    def with_constraints(self, eq=(), le=()) -> "LinearProgram":
        return LinearProgram(self.n_vars, self.eq + tuple(eq), self.le + tuple(le), self.nonneg)

    def is_feasible_point(self, x: Sequence[Fraction]) -> bool:
        if len(x) != self.n_vars:
            return False
        if any(flag and v < 0 for flag, v in zip(self.nonneg, x)):
            return False
        if any(dot(r, x) != b for r, b in self.eq):
            return False
        return all(dot(r, x) <= b for r, b in self.le)

    # Column layout of the standard form: one column per nonnegative
    # variable, two per free variable, then one slack per inequality.
    @cached_property
    def _columns(self) -> list[tuple[int, int]]:
        cols = []
        for j, flag in enumerate(self.nonneg):
            cols.append((j, 1))
            if not flag:
                cols.append((j, -1))
        return cols

    @cached_property
    def _phase_one(self) -> _Tableau | None:
        cols = self._columns
        n_struct = len(cols)
        n_slack = len(self.le)
        constraints = [(r, b, None) for r, b in self.eq]
        constraints += [(r, b, k) for k, (r, b) in enumerate(self.le)]
        n_real = n_struct + n_slack
        rows: list[list[Fraction]] = []
        basis: list[int] = []
        art_rows: list[int] = []
        for i, (r, b, slack) in enumerate(constraints):
            row = [r[j] * s for j, s in cols] + [Fraction(0)] * n_slack
            if slack is not None:
                row[n_struct + slack] = Fraction(1)
            rhs = b
            if rhs < 0:
                row = [-x for x in row]
                rhs = -rhs
            rows.append(row + [rhs])
            if slack is not None and row[n_struct + slack] == 1:
                basis.append(n_struct + slack)
            else:
                basis.append(-1)
                art_rows.append(i)
        n_art = len(art_rows)
        total = n_real + n_art
        for i, row in enumerate(rows):
            rhs = row.pop()
            row.extend([Fraction(0)] * n_art)
            row.append(rhs)
        for k, i in enumerate(art_rows):
            rows[i][n_real + k] = Fraction(1)
            basis[i] = n_real + k
        tab = _Tableau(rows, basis, total)
        if n_art:
            obj = [Fraction(0)] * (total + 1)
            for k in range(n_art):
                obj[n_real + k] = Fraction(1)
            for i in art_rows:
                row = rows[i]
                for j in range(total + 1):
                    obj[j] -= row[j]
            _bland_loop(tab, obj, total)
            if obj[-1] != 0:
                return None
            # Drive remaining (zero-valued) artificials out of the basis.
            keep = []
            for i in range(len(tab.rows)):
                if tab.basis[i] >= n_real:
                    col = next((j for j in range(n_real) if tab.rows[i][j] != 0), None)
                    if col is None:
                        continue  # redundant equality
                    tab.pivot(i, col)
                keep.append(i)
            tab.rows = [tab.rows[i][:n_real] + [tab.rows[i][-1]] for i in keep]
            tab.basis = [tab.basis[i] for i in keep]
            tab.n_cols = n_real
        return tab

    @property
    def feasible(self) -> bool:
        return self._phase_one is not None

    def _point(self, tab: _Tableau) -> Vector:
        std = [Fraction(0)] * tab.n_cols
        for i, b in enumerate(tab.basis):
            std[b] = tab.rows[i][-1]
        x = [Fraction(0)] * self.n_vars
        for k, (j, s) in enumerate(self._columns):
            x[j] += s * std[k]
        return tuple(x)

    def minimize(self, objective: Sequence) -> LPResult:
        base = self._phase_one
        if base is None:
            return LPResult("infeasible")
        c = to_fraction_vector(objective)
        if len(c) != self.n_vars:
            raise ValueError("objective length does not match the variable count")
        tab = base.copy()
        n = tab.n_cols
        cost = [Fraction(0)] * (n + 1)
        for k, (j, s) in enumerate(self._columns):
            cost[k] = c[j] * s
        obj = cost[:]
        for i, b in enumerate(tab.basis):
            cb = cost[b]
            if cb:
                row = tab.rows[i]
                for j in range(n + 1):
                    obj[j] -= cb * row[j]
        if not _bland_loop(tab, obj, n):
            return LPResult("unbounded")
        point = self._point(tab)
        value = dot(c, point)
        assert value == -obj[-1]
        return LPResult("optimal", value, point)

    def maximize(self, objective: Sequence) -> LPResult:
        res = self.minimize([-Fraction(v) for v in objective])
        if res.optimal:
            return LPResult("optimal", -res.value, res.point)
        return res

    def feasible_point(self) -> Vector | None:
        if self._phase_one is None:
            return None
        return self._point(self._phase_one)


def solve(
    lp: LinearProgram,
    objective: Sequence | None = None,
    direction: Literal["min", "max"] = "min",
) -> LPResult:
    """Optimize ``objective`` over ``lp``; a missing objective is a
    feasibility query."""
    if objective is None:
        objective = (0,) * lp.n_vars
    if direction == "min":
        return lp.minimize(objective)
    if direction == "max":
        return lp.maximize(objective)
    raise ValueError(f"direction must be 'min' or 'max', not {direction!r}")


def rref(rows: Sequence[Sequence], n_cols: int | None = None) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form with zero rows dropped.

    Returns the nonzero rows and their pivot columns.
    """
    mat = [list(map(Fraction, r)) for r in rows]
    if n_cols is None:
        n_cols = len(mat[0]) if mat else 0
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        p = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if p is None:
            continue
        mat[r], mat[p] = mat[p], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def nullspace(rows: Sequence[Sequence], n_cols: int | None = None) -> list[Vector]:
    """Basis of ``{x : row . x = 0 for every row}``.

    ``n_cols`` is required when ``rows`` is empty.
    """
    if n_cols is None:
        if not rows:
            raise ValueError("n_cols is required for an empty row list")
        n_cols = len(rows[0])
    red, pivots = rref(rows, n_cols)
    free = [c for c in range(n_cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * n_cols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return basis


def affine_directions(lp: LinearProgram, anchor: Sequence) -> list[Vector]:
    """Basis (in reduced echelon form) of the span of ``x - anchor`` over
    feasible ``x``.

    Probes each vector orthogonal to the directions found so far; if its
    maximum or minimum differs from its value at ``anchor`` the optimizer
    contributes a new direction.  Stops once every orthogonal probe is
    constant on the feasible set.
    """
    a = to_fraction_vector(anchor)
    if not lp.is_feasible_point(a):
        raise InfeasibleAnchor("anchor violates the constraints")
    n = lp.n_vars
    dirs: list[Vector] = []
    while True:
        found = None
        for c in nullspace(dirs, n):
            base = dot(c, a)
            for step, res in ((1, lp.maximize(c)), (-1, lp.minimize(c))):
                if res.status == "unbounded":
                    target = base + step
                    pt = lp.with_constraints(eq=[(c, target)]).feasible_point()
                    assert pt is not None
                    found = tuple(x - y for x, y in zip(pt, a))
                    break
                if res.value != base:
                    found = tuple(x - y for x, y in zip(res.point, a))
                    break
            if found is not None:
                break
        if found is None:
            break
        dirs.append(found)
    red, _ = rref(dirs, n)
    return [tuple(r) for r in red]
