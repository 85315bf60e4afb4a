"""The credal / dual-credal Galois connection relative to a reference
probability ``psi``.

``credal(psi, A)`` is the set of probability vectors agreeing with
``psi`` on every event of ``A``; ``dual_credal(psi, Q)`` is the set of
events on which every member of ``Q`` agrees with ``psi``.  Composing
them gives the bipolar closure.  Distorted credal sets
``{nu : nu(F) <= gamma(psi(F))}`` live here as well.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Sequence

from .errors import EmptyPolytope, GroundMismatch, InvalidMeasure
from .lp import Vector, dot, to_fraction_vector
from .polytope import CredalPolytope
from .setsystem import GroundSet, SetSystem, is_pre_dynkin, pre_dynkin_hull

__all__ = [
    "ReferenceMeasure",
    "PiecewiseLinearConcave",
    "credal",
    "dual_credal",
    "dual_credal_finite",
    "bipolar_closure",
    "is_bipolar_closed",
    "polytope_subset",
    "distorted_credal",
    "certainty_system",
]


def _check_distribution(values: Vector, what: str) -> None:
    if any(v < 0 for v in values) or sum(values) != 1:
        raise InvalidMeasure(f"{what} must be nonnegative and sum to 1")


@dataclass(frozen=True)
class ReferenceMeasure:
    """A probability vector over the atoms of ``ground``."""

    ground: GroundSet
    atom_mass: Vector

    def __post_init__(self):
        mass = to_fraction_vector(self.atom_mass)
        if len(mass) != self.ground.n:
            raise InvalidMeasure(f"psi needs {self.ground.n} atom masses, got {len(mass)}")
        _check_distribution(mass, "psi")
        object.__setattr__(self, "atom_mass", mass)

    @classmethod
    def of(cls, masses: Sequence) -> "ReferenceMeasure":
        return cls(GroundSet(len(masses)), tuple(masses))

    def __call__(self, mask: int) -> Fraction:
        self.ground.check(mask)
        return sum((m for k, m in enumerate(self.atom_mass) if mask >> k & 1), Fraction(0))

    def expectation(self, gamble: Sequence) -> Fraction:
        return dot(self.atom_mass, to_fraction_vector(gamble))

    @property
    def strictly_positive(self) -> bool:
        return all(m > 0 for m in self.atom_mass)


@dataclass(frozen=True)
class PiecewiseLinearConcave:
    """Concave, nondecreasing distortion ``gamma`` on ``[0, 1]`` given by
    breakpoints, with ``gamma(0) = 0`` and ``gamma(1) = 1``."""

    breakpoints: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        pts = tuple((Fraction(x), Fraction(y)) for x, y in self.breakpoints)
        if len(pts) < 2 or pts[0] != (0, 0) or pts[-1] != (1, 1):
            raise InvalidMeasure("gamma must start at (0, 0) and end at (1, 1)")
        xs = [x for x, _ in pts]
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise InvalidMeasure("gamma breakpoints need strictly ascending x")
        slopes = [(y2 - y1) / (x2 - x1) for (x1, y1), (x2, y2) in zip(pts, pts[1:])]
        if any(s < 0 for s in slopes):
            raise InvalidMeasure("gamma must be nondecreasing")
        if any(b > a for a, b in zip(slopes, slopes[1:])):
            raise InvalidMeasure("gamma must be concave (slopes may not increase)")
        object.__setattr__(self, "breakpoints", pts)
        if not self.is_identity:
            assert all(y > x for x, y in pts[1:-1])

    @classmethod
    def identity(cls) -> "PiecewiseLinearConcave":
        return cls(((0, 0), (1, 1)))

    @property
    def is_identity(self) -> bool:
        return all(x == y for x, y in self.breakpoints)

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        if not 0 <= x <= 1:
            raise ValueError("gamma is defined on [0, 1]")
        pts = self.breakpoints
        for (x1, y1), (x2, y2) in zip(pts, pts[1:]):
            if x <= x2:
                return y1 + (y2 - y1) * (x - x1) / (x2 - x1)
        raise AssertionError("unreachable")


def credal(psi: ReferenceMeasure, A: SetSystem) -> CredalPolytope:
    """``{nu : nu(E) = psi(E) for every E in A}``."""
    if A.ground != psi.ground:
        raise GroundMismatch("system and psi live on different ground sets")
    poly = CredalPolytope.from_events(psi.ground, tuple((e, psi(e)) for e in A.events))
    assert poly.contains(psi.atom_mass)
    return poly


def dual_credal(
    psi: ReferenceMeasure,
    Q: CredalPolytope,
    method: Literal["directions", "lp"] = "directions",
    parallel: int = 1,
) -> SetSystem:
    """Events whose probability is ``psi``'s throughout ``Q``.

    The default method finds the directions spanned by ``Q`` once and
    keeps events whose indicator is orthogonal to all of them and whose
    value at one feasible point matches ``psi``.  ``method="lp"``
    instead solves a minimization and a maximization per event.
    """
    g = psi.ground
    if Q.ground != g:
        raise GroundMismatch("polytope and psi live on different ground sets")
    if Q.is_empty():
        raise EmptyPolytope("the dual of an empty polytope is undefined here")
    if method == "lp":

        def keep(e: int) -> bool:
            return Q.is_constant(g.indicator(e), psi(e))

        events = list(g.all_events())
        if parallel > 1:
            with ThreadPoolExecutor(max_workers=parallel) as pool:
                flags = list(pool.map(keep, events))
        else:
            flags = [keep(e) for e in events]
        out = SetSystem(g, tuple(e for e, f in zip(events, flags) if f))
    elif method == "directions":
        anchor = Q.feasible_point()
        dirs = Q.directions(anchor)
        out = SetSystem(
            g,
            tuple(
                e
                for e in g.all_events()
                if dot(g.indicator(e), anchor) == psi(e)
                and all(dot(g.indicator(e), d) == 0 for d in dirs)
            ),
        )
    else:
        raise ValueError(f"unknown method {method!r}")
    assert is_pre_dynkin(out)
    return out


def dual_credal_finite(psi: ReferenceMeasure, measures: Sequence[Sequence]) -> SetSystem:
    """Events on which every listed probability vector agrees with ``psi``."""
    g = psi.ground
    vecs = [to_fraction_vector(m) for m in measures]
    for v in vecs:
        if len(v) != g.n:
            raise InvalidMeasure(f"measure of length {len(v)} on {g.n} atoms")
        _check_distribution(v, "each measure")
    ind = [g.indicator(e) for e in g.all_events()]
    return SetSystem(
        g,
        tuple(e for e in g.all_events() if all(dot(ind[e], v) == psi(e) for v in vecs)),
    )


def bipolar_closure(psi: ReferenceMeasure, A: SetSystem) -> SetSystem:
    out = dual_credal(psi, credal(psi, A))
    assert pre_dynkin_hull(A).issubset(out)
    return out


def is_bipolar_closed(psi: ReferenceMeasure, A: SetSystem) -> bool:
    return bipolar_closure(psi, A) == A


def polytope_subset(P: CredalPolytope, Q: CredalPolytope) -> bool:
    """LP-certified inclusion ``P <= Q``."""
    return P.subset_of(Q)


def distorted_credal(psi: ReferenceMeasure, gamma: PiecewiseLinearConcave) -> CredalPolytope:
    """``{nu : nu(F) <= gamma(psi(F)) for every event F}``."""
    g = psi.ground
    poly = CredalPolytope.from_events(
        g, inequalities=tuple((f, gamma(psi(f))) for f in g.all_events())
    )
    assert poly.contains(psi.atom_mass)
    return poly


def certainty_system(psi: ReferenceMeasure) -> SetSystem:
    """Events of ``psi``-mass 0 or 1."""
    g = psi.ground
    out = SetSystem(g, tuple(f for f in g.all_events() if psi(f) in (0, 1)))
    zero = SetSystem(g, tuple(f for f in g.all_events() if psi(f) == 0))
    assert out == pre_dynkin_hull(zero)
    return out
