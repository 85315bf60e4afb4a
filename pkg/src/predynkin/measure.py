"""Finitely additive probabilities on pre-Dynkin systems and their
extensions to the full power set.

A :class:`PartialProbability` stores exact values on its domain.  The
module offers validation, the inner/outer extension, the LP
extendability test with a Horn–Tarski style falsifier, the coherent
lower/upper envelope, conditioning by the generalized Bayes rule and the
reverse direction: reading off the events on which a lower/upper pair
is precise.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Mapping

from .errors import ConditioningError, InvalidMeasure, NotExtendable, SizeLimitExceeded
from .lp import Vector, dot
from .polytope import CredalPolytope
from .setsystem import GroundSet, SetSystem, is_pre_dynkin, pre_dynkin_hull

__all__ = [
    "PartialProbability",
    "ImpreciseProbability",
    "Violation",
    "ValidationReport",
    "validate_measure",
    "inner_outer",
    "credal_set",
    "is_extendable",
    "horn_tarski_falsify",
    "coherent_extension",
    "coherent_extension_table",
    "precise_events",
    "check_ip_axioms",
    "gbr_conditional",
    "HT_NODE_CAP",
]

#: Search-node budget for :func:`horn_tarski_falsify`.
HT_NODE_CAP = 5_000_000


@dataclass(frozen=True)
class Violation:
    """One failed clause, with the events (as masks) that witness it."""

    clause: str
    events: tuple[int, ...]
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def clauses(self) -> set[str]:
        return {v.clause for v in self.violations}

    def first(self, clause: str) -> Violation | None:
        return next((v for v in self.violations if v.clause == clause), None)


@dataclass(frozen=True)
class PartialProbability:
    """Exact values of a set function on ``domain``.

    ``values[i]`` belongs to ``domain.events[i]``.  Construction only
    checks that every domain event has a value; whether the values form
    a probability is the business of :func:`validate_measure`.
    """

    domain: SetSystem
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.values) != len(self.domain):
            raise InvalidMeasure("exactly one value per domain event is required")
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))

    @classmethod
    def of(cls, domain: SetSystem, values: Mapping[int, object]) -> "PartialProbability":
        missing = [e for e in domain.events if e not in values]
        extra = [e for e in values if e not in domain]
        if missing or extra:
            g = domain.ground
            raise InvalidMeasure(
                "values must be given exactly on the domain; "
                f"missing {[g.label(e) for e in missing]}, extra {[g.label(e) for e in extra]}"
            )
        return cls(domain, tuple(values[e] for e in domain.events))

    @classmethod
    def from_assignments(
        cls,
        ground: GroundSet,
        assignments: Mapping[int, object],
        system: SetSystem | None = None,
    ) -> "PartialProbability":
        """Build a measure on the pre-Dynkin hull of ``system`` (or of the
        assigned events) from a partial table.

        Unassigned hull members are filled from ``mu(empty) = 0``,
        ``mu(full) = 1``, complements, disjoint sums and differences of
        nested events.  Inconsistent assignments are kept as given so
        :func:`validate_measure` can report them.
        """
        gens = system.events if system is not None else tuple(assignments)
        domain = pre_dynkin_hull(SetSystem(ground, tuple(gens) + tuple(assignments)))
        vals: dict[int, Fraction] = {e: Fraction(v) for e, v in assignments.items()}
        vals.setdefault(0, Fraction(0))
        vals.setdefault(ground.full, Fraction(1))
        full = ground.full
        changed = True
        while changed and len(vals) < len(domain):
            changed = False
            known = sorted(vals)
            for a in known:
                c = full ^ a
                if c not in vals:
                    vals[c] = 1 - vals[a]
                    changed = True
            known = sorted(vals)
            for a, b in itertools.combinations(known, 2):
                if not a & b and a | b in domain and a | b not in vals:
                    vals[a | b] = vals[a] + vals[b]
                    changed = True
                elif a & b == a and b ^ a in domain and b ^ a not in vals:
                    vals[b ^ a] = vals[b] - vals[a]
                    changed = True
        missing = [e for e in domain.events if e not in vals]
        if missing:
            raise InvalidMeasure(
                "values of " + ", ".join(ground.label(e) for e in missing) + " cannot be derived"
            )
        return cls.of(domain, vals)

    @property
    def ground(self) -> GroundSet:
        return self.domain.ground

    @cached_property
    def table(self) -> dict[int, Fraction]:
        return dict(zip(self.domain.events, self.values))

    def __getitem__(self, mask: int) -> Fraction:
        try:
            return self.table[mask]
        except KeyError:
            raise KeyError(f"{self.ground.label(mask)} is outside the domain") from None

    def __contains__(self, mask: int) -> bool:
        return mask in self.table


@dataclass(frozen=True)
class ImpreciseProbability:
    """Lower and upper values for every event, indexed by mask."""

    ground: GroundSet
    lower: tuple[Fraction, ...]
    upper: tuple[Fraction, ...]

    def __post_init__(self):
        size = 1 << self.ground.n
        if len(self.lower) != size or len(self.upper) != size:
            raise InvalidMeasure(f"lower and upper tables need {size} entries")
        object.__setattr__(self, "lower", tuple(map(Fraction, self.lower)))
        object.__setattr__(self, "upper", tuple(map(Fraction, self.upper)))

    @classmethod
    def from_tables(cls, ground: GroundSet, lower: Mapping[int, object], upper: Mapping[int, object]):
        return cls(
            ground,
            tuple(lower[e] for e in ground.all_events()),
            tuple(upper[e] for e in ground.all_events()),
        )

    @classmethod
    def from_lower(cls, ground: GroundSet, lower: Mapping[int, object]) -> "ImpreciseProbability":
        """Complete a lower table by conjugacy."""
        full = ground.full
        lo = tuple(Fraction(lower[e]) for e in ground.all_events())
        return cls(ground, lo, tuple(1 - lo[full ^ e] for e in ground.all_events()))


def validate_measure(mu: PartialProbability) -> ValidationReport:
    """Check domain, normalization, range, additivity and monotonicity.

    Additivity is checked on disjoint pairs; the general finite case
    follows by induction inside a pre-Dynkin domain.
    """
    D = mu.domain
    g = D.ground
    full = g.full
    out: list[Violation] = []
    if not is_pre_dynkin(D):
        out.append(Violation("domain", (), "the domain is not a pre-Dynkin system"))
    for e, label in ((0, "empty set"), (full, "ground set")):
        want = 0 if e == 0 else 1
        if e not in mu:
            out.append(Violation("normalization", (e,), f"no value on the {label}"))
        elif mu[e] != want:
            out.append(
                Violation("normalization", (e,), f"value {mu[e]} on the {label}, expected {want}")
            )
    for e in D.events:
        if not 0 <= mu[e] <= 1:
            out.append(Violation("range", (e,), f"mu({g.label(e)}) = {mu[e]} outside [0, 1]"))
    for a, b in itertools.combinations(D.events, 2):
        if a & b:
            continue
        u = a | b
        if u in D and mu[u] != mu[a] + mu[b]:
            out.append(
                Violation(
                    "additivity",
                    (a, b, u),
                    f"mu({g.label(a)}) + mu({g.label(b)}) = {mu[a] + mu[b]} "
                    f"but mu({g.label(u)}) = {mu[u]}",
                )
            )
    for a, b in itertools.permutations(D.events, 2):
        if a & b == a and mu[a] > mu[b]:
            out.append(
                Violation(
                    "monotonicity",
                    (a, b),
                    f"mu({g.label(a)}) = {mu[a]} exceeds mu({g.label(b)}) = {mu[b]}",
                )
            )
    return ValidationReport(tuple(out))


def inner_outer(mu: PartialProbability) -> ImpreciseProbability:
    """Inner (sup over contained domain events) and outer (inf over
    containing domain events) extensions on every event."""
    g = mu.ground
    items = list(mu.table.items())
    lower, upper = [], []
    for a in g.all_events():
        lower.append(max(v for b, v in items if b & a == b))
        upper.append(min(v for b, v in items if b & a == a))
    full = g.full
    assert all(upper[a] == 1 - lower[full ^ a] for a in g.all_events())
    return ImpreciseProbability(g, tuple(lower), tuple(upper))


def credal_set(mu: PartialProbability) -> CredalPolytope:
    """All full probability vectors agreeing with ``mu`` on its domain."""
    return CredalPolytope.from_events(mu.ground, tuple(mu.table.items()))


def is_extendable(mu: PartialProbability) -> tuple[bool, Vector | None]:
    """LP feasibility of the credal set; the witness extends ``mu``."""
    poly = credal_set(mu)
    if poly.is_empty():
        return False, None
    nu = poly.feasible_point()
    g = mu.ground
    assert all(dot(g.indicator(e), nu) == v for e, v in mu.table.items())
    return True, nu


def horn_tarski_falsify(
    mu: PartialProbability, depth: int, node_cap: int | None = None
) -> tuple[list[int], list[int]] | None:
    """Search for domain families ``B`` and ``A`` with at most ``depth``
    members in total such that ``sum chi_B >= sum chi_A`` pointwise while
    ``sum mu(B) < sum mu(A)``.

    Families are tried in order of increasing total size, so the first
    hit is as small as possible.  ``None`` means no such pair exists up to
    ``depth``; it is not a proof of extendability.
    """
    cap = HT_NODE_CAP if node_cap is None else node_cap
    g = mu.ground
    n = g.n
    events = [e for e in mu.domain.events if e]
    scale = lcm(*(v.denominator for v in mu.values))
    weight = {e: int(mu[e] * scale) for e in events}
    bits = {e: [e >> k & 1 for k in range(n)] for e in events}
    nodes = 0

    def tick():
        nonlocal nodes
        nodes += 1
        if nodes > cap:
            raise SizeLimitExceeded(f"Horn-Tarski search exceeded {cap} nodes at depth {depth}")

    def cover(deficit: list[int], budget: int, slots: int, start: int, pool, chosen):
        # Pick exactly `slots` events from pool[start:] (with repetition)
        # so the deficit is covered while staying strictly under budget.
        tick()
        if slots == 0:
            return list(chosen) if max(deficit) <= 0 else None
        if max(deficit) > slots:
            return None
        for idx in range(start, len(pool)):
            e = pool[idx]
            w = weight[e]
            if w >= budget:
                continue
            chosen.append(e)
            nxt = [d - b for d, b in zip(deficit, bits[e])]
            hit = cover(nxt, budget - w, slots - 1, idx, pool, chosen)
            chosen.pop()
            if hit is not None:
                return hit
        return None

    for total in range(2, depth + 1):
        for a_size in range(1, total):
            for A in itertools.combinations_with_replacement(events, a_size):
                tick()
                target = [sum(bits[e][k] for e in A) for k in range(n)]
                budget = sum(weight[e] for e in A)
                pool = [e for e in events if e not in A]
                B = cover(target, budget, total - a_size, 0, pool, [])
                if B is not None:
                    return B, list(A)
    return None


def coherent_extension(mu: PartialProbability, a: int) -> tuple[Fraction, Fraction]:
    """Exact ``(min, max)`` of ``nu(a)`` over the credal set of ``mu``."""
    mu.ground.check(a)
    poly = credal_set(mu)
    if poly.is_empty():
        raise NotExtendable("the measure has no extension to the power set")
    return poly.event_bounds(a)


def coherent_extension_table(mu: PartialProbability, parallel: int = 1) -> ImpreciseProbability:
    """Lower and upper coherent extension on all events.

    ``parallel > 1`` spreads the per-event solves over a thread pool; the
    result does not depend on it.
    """
    poly = credal_set(mu)
    if poly.is_empty():
        raise NotExtendable("the measure has no extension to the power set")
    events = list(mu.ground.all_events())
    if parallel > 1:
        with ThreadPoolExecutor(max_workers=parallel) as pool:
            pairs = list(pool.map(poly.event_bounds, events))
    else:
        pairs = [poly.event_bounds(e) for e in events]
    lower = tuple(p[0] for p in pairs)
    upper = tuple(p[1] for p in pairs)
    full = mu.ground.full
    assert all(upper[e] == 1 - lower[full ^ e] for e in events)
    assert all(lower[e] == upper[e] == v for e, v in mu.table.items())
    return ImpreciseProbability(mu.ground, lower, upper)


def check_ip_axioms(ip: ImpreciseProbability) -> ValidationReport:
    """Normalization, conjugacy, subadditivity of the upper and
    superadditivity of the lower table, each with witnesses."""
    g = ip.ground
    full = g.full
    lo, up = ip.lower, ip.upper
    out: list[Violation] = []
    if lo[0] != 0 or up[0] != 0 or lo[full] != 1 or up[full] != 1:
        out.append(Violation("normalization", (0, full), "tables must be 0 on the empty set and 1 on the ground set"))
    for a in g.all_events():
        if up[a] != 1 - lo[full ^ a]:
            out.append(
                Violation("conjugacy", (a,), f"upper({g.label(a)}) != 1 - lower({g.label(full ^ a)})")
            )
    for a, b in itertools.combinations(g.all_events(), 2):
        if a & b:
            continue
        if up[a | b] > up[a] + up[b]:
            out.append(
                Violation(
                    "subadditivity",
                    (a, b),
                    f"upper({g.label(a | b)}) = {up[a | b]} > {up[a] + up[b]}",
                )
            )
        if lo[a | b] < lo[a] + lo[b]:
            out.append(
                Violation(
                    "superadditivity",
                    (a, b),
                    f"lower({g.label(a | b)}) = {lo[a | b]} < {lo[a] + lo[b]}",
                )
            )
    return ValidationReport(tuple(out))


def precise_events(ip: ImpreciseProbability) -> tuple[SetSystem, bool]:
    """Events on which lower and upper agree, and whether they form a
    pre-Dynkin system."""
    g = ip.ground
    D = SetSystem(g, tuple(a for a in g.all_events() if ip.lower[a] == ip.upper[a]))
    flag = is_pre_dynkin(D)
    if flag and check_ip_axioms(ip).ok:
        mu = PartialProbability(D, tuple(ip.lower[a] for a in D.events))
        assert validate_measure(mu).ok
    elif check_ip_axioms(ip).ok:
        raise AssertionError("axioms hold but the precise events are not pre-Dynkin")
    return D, flag


def gbr_conditional(mu: PartialProbability, a: int, b: int) -> tuple[Fraction, Fraction]:
    """Generalized Bayes rule for a conditioning event ``b`` of the domain
    with positive mass: the coherent bounds of ``a & b`` divided by
    ``mu(b)``."""
    g = mu.ground
    g.check(a)
    g.check(b)
    if b not in mu:
        raise ConditioningError(f"{g.label(b)} is not in the domain")
    mb = mu[b]
    if mb == 0:
        raise ConditioningError(f"{g.label(b)} has zero mass")
    lo, hi = coherent_extension(mu, a & b)
    cond = (lo / mb, hi / mb)
    assert cond[1] * mb == hi and cond[0] * mb == lo
    return cond
