"""Credal polytopes: sets of probability vectors cut out by linear
constraints on top of the simplex.

Constraints are stored as gamble rows, so the same type carries event
constraints ``nu(E) = c`` (indicator rows) and general prevision
constraints ``nu . g = c``.  Equality of two polytopes is decided by
LP-certified mutual inclusion, never by comparing constraint lists.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .errors import EmptyPolytope, GroundMismatch
from .lp import LinearProgram, Vector, affine_directions, to_fraction_vector
from .setsystem import GroundSet

__all__ = ["CredalPolytope"]

Row = tuple[Vector, Fraction]


@dataclass(frozen=True)
class CredalPolytope:
    """``{nu in simplex : nu . g == c for (g, c) in equalities,
    nu . g <= b for (g, b) in inequalities}``."""

    ground: GroundSet
    equalities: tuple[Row, ...] = ()
    inequalities: tuple[Row, ...] = ()

    def __post_init__(self):
        n = self.ground.n

        def norm(rows):
            out = []
            for g, c in rows:
                g = to_fraction_vector(g)
                if len(g) != n:
                    raise GroundMismatch(f"constraint row of length {len(g)} on {n} atoms")
                out.append((g, Fraction(c)))
            return tuple(out)

        object.__setattr__(self, "equalities", norm(self.equalities))
        object.__setattr__(self, "inequalities", norm(self.inequalities))

    @classmethod
    def from_events(cls, ground: GroundSet, equalities=(), inequalities=()) -> "CredalPolytope":
        """Build from ``(event mask, value)`` pairs."""
        return cls(
            ground,
            tuple((ground.indicator(e), c) for e, c in equalities),
            tuple((ground.indicator(e), c) for e, c in inequalities),
        )

    @classmethod
    def simplex(cls, ground: GroundSet) -> "CredalPolytope":
        return cls(ground)

    @classmethod
    def point(cls, ground: GroundSet, nu: Sequence) -> "CredalPolytope":
        """The singleton ``{nu}``."""
        nu = to_fraction_vector(nu)
        rows = []
        for k in range(ground.n):
            e = [Fraction(0)] * ground.n
            e[k] = Fraction(1)
            rows.append((tuple(e), nu[k]))
        return cls(ground, tuple(rows))

    @cached_property
    def program(self) -> LinearProgram:
        return LinearProgram.simplex(self.ground.n, eq=self.equalities, le=self.inequalities)

    def is_empty(self) -> bool:
        return not self.program.feasible

    def feasible_point(self) -> Vector:
        pt = self.program.feasible_point()
        if pt is None:
            raise EmptyPolytope("the credal polytope has no feasible point")
        return pt

    def contains(self, nu: Sequence) -> bool:
        return self.program.is_feasible_point(to_fraction_vector(nu))

    def bounds(self, gamble: Sequence) -> tuple[Fraction, Fraction]:
        """``(min, max)`` of ``nu . gamble`` over the polytope."""
        lo = self.program.minimize(gamble)
        if lo.status == "infeasible":
            raise EmptyPolytope("the credal polytope has no feasible point")
        hi = self.program.maximize(gamble)
        return lo.value, hi.value

    def event_bounds(self, mask: int) -> tuple[Fraction, Fraction]:
        return self.bounds(self.ground.indicator(mask))

    def is_constant(self, gamble: Sequence, value=None) -> bool:
        lo, hi = self.bounds(gamble)
        return lo == hi and (value is None or lo == value)

    def intersect(self, other: "CredalPolytope") -> "CredalPolytope":
        self._check(other)
        return CredalPolytope(
            self.ground,
            self.equalities + other.equalities,
            self.inequalities + other.inequalities,
        )

    def subset_of(self, other: "CredalPolytope") -> bool:
        """LP certificate that every constraint of ``other`` holds on ``self``.

        The empty polytope is a subset of everything.
        """
        self._check(other)
        if self.is_empty():
            return True
        for g, c in other.equalities:
            if not self.is_constant(g, c):
                return False
        for g, b in other.inequalities:
            if self.program.maximize(g).value > b:
                return False
        return True

    def same_set(self, other: "CredalPolytope") -> bool:
        return self.subset_of(other) and other.subset_of(self)

    def directions(self, anchor: Sequence | None = None) -> list[Vector]:
        """Reduced-echelon basis of the directions spanned by the polytope."""
        if anchor is None:
            anchor = self.feasible_point()
        return affine_directions(self.program, anchor)

    def _check(self, other: "CredalPolytope") -> None:
        if self.ground != other.ground:
            raise GroundMismatch("credal polytopes live on different ground sets")

    def event_constraints(self) -> Iterable[tuple[str, int, Fraction]]:
        """Yield ``(kind, mask, rhs)`` for rows that are event indicators."""
        for kind, rows in (("eq", self.equalities), ("le", self.inequalities)):
            for g, c in rows:
                if all(x in (0, 1) for x in g):
                    yield kind, sum(1 << k for k, x in enumerate(g) if x), c
