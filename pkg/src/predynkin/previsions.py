"""Gamble-level counterparts of the measure and Galois machinery.

A gamble is a rational vector with one value per atom.  A
:class:`PartialExpectation` assigns values to the basis gambles of a
family of linear subspaces and extends linearly inside each one.  From
there: validation, extendability to a full linear prevision, the natural
extension, the subspace of gambles with precise expectation, and the
generalized credal / dual credal maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence, Union

from .errors import EmptyPolytope, GroundMismatch, InvalidMeasure, NotExtendable
from .galois import ReferenceMeasure
from .lp import LinearProgram, Vector, dot, nullspace, rref, to_fraction_vector
from .measure import PartialProbability, ValidationReport
from .polytope import CredalPolytope
from .setsystem import GroundSet, blocks

__all__ = [
    "indicator",
    "LinearSubspace",
    "PartialExpectation",
    "GambleViolation",
    "NotInDomain",
    "NOT_IN_DOMAIN",
    "from_measure",
    "evaluate",
    "validate_partial_expectation",
    "prevision_credal",
    "is_extendable_prevision",
    "violation_search",
    "natural_extension",
    "precise_gambles",
    "precise_restriction",
    "generalized_credal",
    "generalized_dual_credal",
]


def indicator(ground: GroundSet, mask: int) -> Vector:
    return tuple(Fraction(x) for x in ground.indicator(mask))


def _gamble(ground: GroundSet, f: Sequence) -> Vector:
    v = to_fraction_vector(f)
    if len(v) != ground.n:
        raise GroundMismatch(f"gamble of length {len(v)} on {ground.n} atoms")
    return v


@dataclass(frozen=True)
class LinearSubspace:
    """A subspace of gambles, stored as a reduced row echelon basis so
    that equal subspaces compare equal."""

    ground: GroundSet
    basis: tuple[Vector, ...]

    def __post_init__(self):
        rows = [_gamble(self.ground, b) for b in self.basis]
        red, _ = rref(rows, self.ground.n)
        object.__setattr__(self, "basis", tuple(tuple(r) for r in red))

    @classmethod
    def span(cls, ground: GroundSet, gambles: Sequence[Sequence]) -> "LinearSubspace":
        return cls(ground, tuple(gambles))

    @classmethod
    def full(cls, ground: GroundSet) -> "LinearSubspace":
        return cls(ground, tuple(indicator(ground, 1 << k) for k in range(ground.n)))

    @classmethod
    def constants(cls, ground: GroundSet) -> "LinearSubspace":
        return cls(ground, (indicator(ground, ground.full),))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def _pivots(self) -> list[int]:
        return [next(j for j, x in enumerate(r) if x) for r in self.basis]

    def coordinates(self, f: Sequence) -> tuple[Fraction, ...] | None:
        """Coefficients of ``f`` in the echelon basis, or ``None`` when
        ``f`` lies outside."""
        v = _gamble(self.ground, f)
        coeffs = tuple(v[p] for p in self._pivots)
        rebuilt = [Fraction(0)] * self.ground.n
        for c, row in zip(coeffs, self.basis):
            if c:
                for j, x in enumerate(row):
                    rebuilt[j] += c * x
        return coeffs if tuple(rebuilt) == v else None

    def __contains__(self, f) -> bool:
        return self.coordinates(f) is not None

    def annihilator(self) -> list[Vector]:
        return nullspace(list(self.basis), self.ground.n)

    def issubset(self, other: "LinearSubspace") -> bool:
        self._check(other)
        return all(b in other for b in self.basis)

    def join(self, other: "LinearSubspace") -> "LinearSubspace":
        self._check(other)
        return LinearSubspace(self.ground, self.basis + other.basis)

    def meet(self, other: "LinearSubspace") -> "LinearSubspace":
        self._check(other)
        return LinearSubspace(
            self.ground, tuple(nullspace(self.annihilator() + other.annihilator(), self.ground.n))
        )

    def _check(self, other: "LinearSubspace") -> None:
        if self.ground != other.ground:
            raise GroundMismatch("subspaces live on different ground sets")


class NotInDomain:
    """Returned by :func:`evaluate` for gambles outside every subspace."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "NOT_IN_DOMAIN"


NOT_IN_DOMAIN = NotInDomain()


@dataclass(frozen=True)
class _Functional:
    space: LinearSubspace
    values: tuple[Fraction, ...]  # one per echelon basis row

    def __call__(self, f) -> Fraction | None:
        coeffs = self.space.coordinates(f)
        if coeffs is None:
            return None
        return sum((c * v for c, v in zip(coeffs, self.values)), Fraction(0))


@dataclass(frozen=True)
class PartialExpectation:
    """``subspaces[i] = (basis gambles, their values)``.

    Basis gambles of one subspace must be linearly independent.
    """

    ground: GroundSet
    subspaces: tuple[tuple[tuple[Vector, ...], tuple[Fraction, ...]], ...]

    def __post_init__(self):
        canon = []
        for basis, values in self.subspaces:
            basis = tuple(_gamble(self.ground, b) for b in basis)
            values = tuple(Fraction(v) for v in values)
            if len(basis) != len(values):
                raise InvalidMeasure("each basis gamble needs exactly one value")
            if len(rref(basis, self.ground.n)[0]) != len(basis):
                raise InvalidMeasure("basis gambles of a subspace must be linearly independent")
            canon.append((basis, values))
        object.__setattr__(self, "subspaces", tuple(canon))

    @cached_property
    def functionals(self) -> tuple[_Functional, ...]:
        n = self.ground.n
        out = []
        for basis, values in self.subspaces:
            # Row-reduce [gamble | value] together so values follow the
            # canonical basis.
            red, _ = rref([list(b) + [v] for b, v in zip(basis, values)], n)
            space = LinearSubspace(self.ground, tuple(tuple(r[:n]) for r in red))
            assert space.basis == tuple(tuple(r[:n]) for r in red)
            out.append(_Functional(space, tuple(r[n] for r in red)))
        return tuple(out)

    def spaces(self) -> list[LinearSubspace]:
        return [fn.space for fn in self.functionals]

    def constraint_rows(self) -> list[tuple[Vector, Fraction]]:
        return [(b, v) for basis, values in self.subspaces for b, v in zip(basis, values)]


@dataclass(frozen=True)
class GambleViolation:
    clause: str
    subspaces: tuple[int, ...]
    gamble: Vector | None
    detail: str


def from_measure(mu: PartialProbability) -> PartialExpectation:
    """One subspace per maximal algebra in the domain, spanned by the
    indicators of that algebra's atoms and valued by ``mu``."""
    g = mu.ground
    subs = []
    for alg in blocks(mu.domain):
        nonempty = [e for e in alg.events if e]
        atoms = [a for a in nonempty if not any(b != a and b & a == b for b in nonempty)]
        subs.append((tuple(indicator(g, a) for a in atoms), tuple(mu[a] for a in atoms)))
    E = PartialExpectation(g, tuple(subs))
    assert not _cross_violations(E)
    return E


def evaluate(E: PartialExpectation, f: Sequence) -> Union[Fraction, NotInDomain]:
    for fn in E.functionals:
        val = fn(f)
        if val is not None:
            return val
    return NOT_IN_DOMAIN


def _cross_violations(E: PartialExpectation) -> list[GambleViolation]:
    fns = E.functionals
    out = []
    for i in range(len(fns)):
        for j in range(i + 1, len(fns)):
            common = fns[i].space.meet(fns[j].space)
            for h in common.basis:
                a, b = fns[i](h), fns[j](h)
                if a != b:
                    out.append(
                        GambleViolation(
                            "cross-consistency",
                            (i, j),
                            h,
                            f"subspaces {i} and {j} assign {a} and {b} to the same gamble",
                        )
                    )
    return out


def _augmented(fn: _Functional, ground: GroundSet) -> tuple[list[Vector], list[Fraction]] | None:
    """Basis and values of the span of the subspace and the constants,
    with value 1 on the constant gamble; ``None`` if the subspace already
    holds constants with a different value."""
    one = indicator(ground, ground.full)
    basis, values = list(fn.space.basis), list(fn.values)
    if one in fn.space:
        return (basis, values) if fn(one) == 1 else None
    return basis + [one], values + [Fraction(1)]


def validate_partial_expectation(E: PartialExpectation) -> ValidationReport:
    """Cross-consistency on pairwise intersections and coherence
    ``E(f) >= min f`` on each subspace.

    Coherence is decided by minimizing ``E`` over the nonnegative gambles
    of the subspace (extended by the constants) whose entries sum to 1.
    """
    g = E.ground
    n = g.n
    out = _cross_violations(E)
    for i, fn in enumerate(E.functionals):
        aug = _augmented(fn, g)
        if aug is None:
            out.append(
                GambleViolation(
                    "coherence",
                    (i,),
                    indicator(g, g.full),
                    f"subspace {i} gives the constant gamble 1 the value {fn(indicator(g, g.full))}",
                )
            )
            continue
        basis, values = aug
        k = len(basis)
        cols = [[b[w] for b in basis] for w in range(n)]
        lp = LinearProgram(
            k,
            eq=[([sum(b) for b in basis], 1)],
            le=[([-x for x in cols[w]], 0) for w in range(n)],
            nonneg=(False,) * k,
        )
        res = lp.minimize(values)
        if res.optimal and res.value < 0:
            h = tuple(sum((c * b[w] for c, b in zip(res.point, basis)), Fraction(0)) for w in range(n))
            out.append(
                GambleViolation(
                    "coherence",
                    (i,),
                    h,
                    f"nonnegative gamble with expectation {res.value} in subspace {i}",
                )
            )
    return ValidationReport(tuple(out))


def prevision_credal(E: PartialExpectation) -> CredalPolytope:
    return CredalPolytope(E.ground, tuple(E.constraint_rows()))


def is_extendable_prevision(E: PartialExpectation) -> tuple[bool, Vector | None]:
    poly = prevision_credal(E)
    if poly.is_empty():
        return False, None
    nu = poly.feasible_point()
    assert all(dot(b, nu) == v for b, v in E.constraint_rows())
    return True, nu


def violation_search(E: PartialExpectation) -> list[tuple[int, Vector]] | None:
    """One gamble per subspace with a pointwise nonnegative sum and a
    negative total expectation, or ``None`` if no such family exists.

    The constants subspace (value 1 on the constant gamble) is always
    appended with index ``len(E.subspaces)``.  The search is one LP whose
    objective is bounded by normalizing the total expectation at ``-1``.
    """
    g = E.ground
    n = g.n
    parts = [(list(fn.space.basis), list(fn.values)) for fn in E.functionals]
    parts.append(([indicator(g, g.full)], [Fraction(1)]))
    owners, basis, values = [], [], []
    for idx, (bs, vs) in enumerate(parts):
        for b, v in zip(bs, vs):
            owners.append(idx)
            basis.append(b)
            values.append(v)
    k = len(basis)
    le = [([-b[w] for b in basis], 0) for w in range(n)]
    le.append(([-v for v in values], 1))
    res = LinearProgram(k, le=le, nonneg=(False,) * k).minimize(values)
    assert res.optimal
    found = None
    if res.value < 0:
        found = []
        for idx in range(len(parts)):
            f = [Fraction(0)] * n
            for c, o, b in zip(res.point, owners, basis):
                if o == idx and c:
                    for w in range(n):
                        f[w] += c * b[w]
            if any(f):
                found.append((idx, tuple(f)))
        total = [sum((f[w] for _, f in found), Fraction(0)) for w in range(n)]
        assert all(t >= 0 for t in total)
    assert (found is None) == is_extendable_prevision(E)[0]
    return found


def natural_extension(E: PartialExpectation, f: Sequence) -> tuple[Fraction, Fraction]:
    """Lower and upper expectation of ``f`` over all linear previsions
    extending ``E``."""
    poly = prevision_credal(E)
    if poly.is_empty():
        raise NotExtendable("the partial expectation has no linear extension")
    return poly.bounds(_gamble(E.ground, f))


def precise_gambles(Q: CredalPolytope) -> LinearSubspace:
    """Gambles whose expectation is the same for every member of ``Q``."""
    if Q.is_empty():
        raise EmptyPolytope("no precise gambles for an empty polytope")
    g = Q.ground
    S = LinearSubspace(g, tuple(nullspace(Q.directions(), g.n)))
    assert indicator(g, g.full) in S
    return S


def precise_restriction(Q: CredalPolytope) -> PartialExpectation:
    """The common expectation on the precise-gamble subspace of ``Q``,
    as a single-subspace partial expectation."""
    S = precise_gambles(Q)
    nu = Q.feasible_point()
    return PartialExpectation(Q.ground, ((S.basis, tuple(dot(b, nu) for b in S.basis)),))


def generalized_credal(psi: ReferenceMeasure, gambles: Sequence[Sequence]) -> CredalPolytope:
    """``{nu : nu . g = psi . g for every listed gamble}``."""
    g = psi.ground
    rows = tuple((v, psi.expectation(v)) for v in (_gamble(g, f) for f in gambles))
    poly = CredalPolytope(g, rows)
    assert poly.contains(psi.atom_mass)
    return poly


def generalized_dual_credal(
    psi: ReferenceMeasure, Q: Union[CredalPolytope, Sequence[Sequence]]
) -> LinearSubspace:
    """Gambles whose expectation under every member of ``Q`` equals the
    expectation under ``psi``.

    ``Q`` is a credal polytope or a finite list of probability vectors.
    """
    g = psi.ground
    if isinstance(Q, CredalPolytope):
        if Q.is_empty():
            raise EmptyPolytope("the dual of an empty polytope is undefined here")
        anchor = Q.feasible_point()
        dirs = list(Q.directions(anchor))
        dirs.append(tuple(a - p for a, p in zip(anchor, psi.atom_mass)))
    else:
        vecs = [_gamble(g, v) for v in Q]
        if not vecs:
            raise EmptyPolytope("an empty list of measures has no dual")
        dirs = [tuple(a - p for a, p in zip(v, psi.atom_mass)) for v in vecs]
    S = LinearSubspace(g, tuple(nullspace(dirs, g.n)))
    assert indicator(g, g.full) in S
    return S
