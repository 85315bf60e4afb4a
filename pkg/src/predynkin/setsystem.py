"""Finite set systems over a ground set ``[n] = {1, ..., n}``.

Events are plain integers used as bitmasks: element ``k`` of the ground
set maps to bit ``k - 1``.  So on four elements ``{1, 2}`` is ``0b0011``
and ``{3, 4}`` is ``0b1100``.  The encoding fixes every tie-break in the
module (see :func:`decompose_atom`), which keeps outputs reproducible.

A :class:`SetSystem` is an immutable, canonically sorted collection of
events; two systems compare equal iff they hold the same events on the
same ground set.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import (
    GroundMismatch,
    InvalidEvent,
    MembershipError,
    PiSystemError,
    SizeLimitExceeded,
)

MAX_GROUND_SIZE = 16
#: Largest union of systems :func:`is_compatibility_structure` will search.
MAX_STRUCTURE_EVENTS = 24

__all__ = [
    "GroundSet",
    "SetSystem",
    "Partition",
    "is_pre_dynkin",
    "pre_dynkin_hull",
    "is_compatible",
    "blocks",
    "is_algebra",
    "is_pi_system",
    "partition_algebra",
    "lattice_join",
    "lattice_meet",
    "weak_atoms",
    "decompose_atom",
    "is_compatibility_structure",
]


@dataclass(frozen=True)
class GroundSet:
    """The finite ground set ``[n]``."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or not 1 <= self.n <= MAX_GROUND_SIZE:
            raise SizeLimitExceeded(
                f"ground set size must be an integer in 1..{MAX_GROUND_SIZE}, got {self.n!r}"
            )

    @property
    def full(self) -> int:
        """Mask of the whole ground set."""
        return (1 << self.n) - 1

    def all_events(self) -> range:
        """Every event of the power set, in mask order."""
        return range(1 << self.n)

    def check(self, mask: int) -> int:
        if not isinstance(mask, int) or mask < 0 or mask >> self.n:
            raise InvalidEvent(f"{mask!r} is not an event on a ground set of size {self.n}")
        return mask

    def complement(self, mask: int) -> int:
        return self.full ^ mask

    def event(self, *elements: int) -> int:
        """Mask of the event holding the given (1-indexed) elements."""
        mask = 0
        for k in elements:
            if not isinstance(k, int) or not 1 <= k <= self.n:
                raise InvalidEvent(f"element {k!r} outside 1..{self.n}")
            mask |= 1 << (k - 1)
        return mask

    def elements(self, mask: int) -> list[int]:
        self.check(mask)
        return [k + 1 for k in range(self.n) if mask >> k & 1]

    def parse(self, value) -> int:
        """Parse an event from its compact shorthand.

        Accepts an int mask, a list of elements, ``"12"`` (only for
        ``n <= 9``), ``"[1,10]"``, ``"{}"`` or ``"∅"``.
        """
        if isinstance(value, int):
            return self.check(value)
        if isinstance(value, (list, tuple)):
            return self.event(*value)
        text = str(value).strip()
        if text in ("", "∅", "{}", "[]"):
            return 0
        if text[0] in "[{(":
            inner = text[1:-1].replace(" ", "")
            return self.event(*(int(tok) for tok in inner.split(",") if tok))
        if self.n > 9:
            raise InvalidEvent(f"digit shorthand {text!r} is ambiguous for n > 9")
        if not text.isdigit():
            raise InvalidEvent(f"cannot parse event {text!r}")
        return self.event(*(int(ch) for ch in text))

    def label(self, mask: int) -> str:
        """Compact label: ``"12"`` for ``{1, 2}``, ``"∅"`` for the empty set.

        Beyond nine elements the bracketed form ``"[1,10]"`` is used.
        """
        elems = self.elements(mask)
        if self.n <= 9:
            return "".join(map(str, elems)) if elems else "∅"
        return "[" + ",".join(map(str, elems)) + "]"

    def indicator(self, mask: int) -> tuple[int, ...]:
        """Indicator gamble of ``mask`` as a 0/1 vector over atoms."""
        self.check(mask)
        return tuple(mask >> k & 1 for k in range(self.n))


@dataclass(frozen=True)
class SetSystem:
    """An immutable collection of events on ``ground``.

    ``events`` is deduplicated and sorted by mask on construction.
    """

    ground: GroundSet
    events: tuple[int, ...]

    def __post_init__(self):
        canon = tuple(sorted({self.ground.check(e) for e in self.events}))
        object.__setattr__(self, "events", canon)

    @classmethod
    def of(cls, ground: GroundSet | int, events: Iterable) -> "SetSystem":
        """Build a system from masks, element lists or string labels."""
        if isinstance(ground, int):
            ground = GroundSet(ground)
        return cls(ground, tuple(ground.parse(e) for e in events))

    @classmethod
    def power_set(cls, ground: GroundSet) -> "SetSystem":
        return cls(ground, tuple(ground.all_events()))

    @classmethod
    def trivial(cls, ground: GroundSet) -> "SetSystem":
        return cls(ground, (0, ground.full))

    @cached_property
    def _members(self) -> frozenset[int]:
        return frozenset(self.events)

    def __contains__(self, mask) -> bool:
        return mask in self._members

    def __iter__(self) -> Iterator[int]:
        return iter(self.events)

    def __len__(self) -> int:
        return len(self.events)

    def issubset(self, other: "SetSystem") -> bool:
        _same_ground(self, other)
        return self._members <= other._members

    def union(self, other: "SetSystem") -> "SetSystem":
        _same_ground(self, other)
        return SetSystem(self.ground, self.events + other.events)

    def intersection(self, other: "SetSystem") -> "SetSystem":
        _same_ground(self, other)
        return SetSystem(self.ground, tuple(self._members & other._members))

    def labels(self) -> list[str]:
        return [self.ground.label(e) for e in self.events]

    def __repr__(self) -> str:
        return f"SetSystem(n={self.ground.n}, {{{', '.join(self.labels())}}})"


@dataclass(frozen=True)
class Partition:
    """A partition of the ground set into nonempty, pairwise disjoint blocks."""

    ground: GroundSet
    blocks: tuple[int, ...]

    def __post_init__(self):
        canon = tuple(sorted(self.ground.check(b) for b in self.blocks))
        covered = 0
        for b in canon:
            if b == 0:
                raise InvalidEvent("partition blocks must be nonempty")
            if covered & b:
                raise InvalidEvent("partition blocks must be pairwise disjoint")
            covered |= b
        if covered != self.ground.full:
            raise InvalidEvent("partition blocks must cover the ground set")
        object.__setattr__(self, "blocks", canon)

    @classmethod
    def of(cls, ground: GroundSet | int, blocks: Iterable) -> "Partition":
        if isinstance(ground, int):
            ground = GroundSet(ground)
        return cls(ground, tuple(ground.parse(b) for b in blocks))


def _same_ground(*objs) -> GroundSet:
    grounds = {o.ground for o in objs}
    if len(grounds) != 1:
        raise GroundMismatch(f"ground sets differ: {sorted(g.n for g in grounds)}")
    return grounds.pop()


def is_pre_dynkin(S: SetSystem) -> bool:
    """``True`` iff ``S`` holds the empty set and is closed under complement
    and under unions of disjoint pairs."""
    if 0 not in S:
        return False
    full = S.ground.full
    events = S.events
    for a in events:
        if full ^ a not in S:
            return False
    for a, b in itertools.combinations(events, 2):
        if not a & b and a | b not in S:
            return False
    return True


def is_algebra(S: SetSystem) -> bool:
    if 0 not in S:
        return False
    full = S.ground.full
    if any(full ^ a not in S for a in S.events):
        return False
    return all(a | b in S for a, b in itertools.combinations(S.events, 2))


def is_pi_system(S: SetSystem) -> bool:
    """Nonempty and closed under pairwise intersection."""
    if not len(S):
        return False
    return all(a & b in S for a, b in itertools.combinations(S.events, 2))


def pre_dynkin_hull(A: SetSystem) -> SetSystem:
    """Smallest pre-Dynkin system containing ``A``.

    The empty generator set yields ``{∅, Ω}``.
    """
    full = A.ground.full
    members: set[int] = set()
    queue = deque([0, full, *A.events])
    while queue:
        x = queue.popleft()
        if x in members:
            continue
        members.add(x)
        queue.append(full ^ x)
        for y in list(members):
            if not x & y:
                u = x | y
                if u not in members:
                    queue.append(u)
    return SetSystem(A.ground, tuple(members))


def is_compatible(D: SetSystem, a: int, b: int) -> bool:
    """Whether members ``a`` and ``b`` of ``D`` intersect inside ``D``."""
    for e in (a, b):
        if e not in D:
            raise MembershipError(f"{D.ground.label(e)} is not in the system")
    meet = a & b in D
    assert meet == (a | b in D), "cap/cup compatibility disagree; D is not pre-Dynkin"
    return meet


def partition_algebra(P: Partition) -> SetSystem:
    """All unions of blocks of ``P``."""
    unions = {0}
    for b in P.blocks:
        unions |= {u | b for u in unions}
    return SetSystem(P.ground, tuple(unions))


def _algebra_partitions(D: SetSystem) -> list[tuple[tuple[int, ...], frozenset[int]]]:
    """Every partition whose generated algebra lies inside ``D``, paired
    with that algebra."""
    full = D.ground.full
    nonempty = [e for e in D.events if e]
    found = []

    def extend(chosen: list[int], unions: frozenset[int], uncovered: int):
        if not uncovered:
            found.append((tuple(chosen), unions))
            return
        low = uncovered & -uncovered
        for b in nonempty:
            if b & low and b & uncovered == b:
                grown = {u | b for u in unions}
                if all(g in D for g in grown):
                    chosen.append(b)
                    extend(chosen, unions | grown, uncovered ^ b)
                    chosen.pop()

    extend([], frozenset({0}), full)
    return found


def blocks(D: SetSystem) -> list[SetSystem]:
    """Maximal algebras contained in the pre-Dynkin system ``D``.

    Finite algebras correspond to partitions, so the search enumerates
    partitions built from members of ``D`` whose unions all stay in ``D``
    and keeps the inclusion-maximal generated algebras.
    """
    algebras = {alg for _, alg in _algebra_partitions(D)}
    maximal = [a for a in algebras if not any(a < b for b in algebras)]
    return sorted((SetSystem(D.ground, tuple(a)) for a in maximal), key=lambda s: s.events)


def lattice_join(D1: SetSystem, D2: SetSystem) -> SetSystem:
    return pre_dynkin_hull(D1.union(D2))


def lattice_meet(D1: SetSystem, D2: SetSystem) -> SetSystem:
    meet = D1.intersection(D2)
    assert is_pre_dynkin(meet) or not (is_pre_dynkin(D1) and is_pre_dynkin(D2))
    return meet


def weak_atoms(D: SetSystem) -> list[int]:
    """Events whose only subsets in ``D`` are the empty set and themselves."""
    nonempty = [e for e in D.events if e]
    return [
        a
        for a in D.ground.all_events()
        if not any(b & a == b and b != a for b in nonempty)
    ]


def decompose_atom(D: SetSystem, B: int) -> tuple[int, int]:
    """Split a non-member ``B`` into a maximal ``D``-member below it and a
    weak atom.

    Among inclusion-maximal members of ``D`` inside ``B`` the one with the
    smallest mask is chosen.
    """
    D.ground.check(B)
    if B in D:
        raise MembershipError(f"{D.ground.label(B)} already belongs to the system")
    below = [x for x in D.events if x & B == x]
    maximal = [x for x in below if not any(y != x and y & x == x for y in below)]
    inner = min(maximal)
    atom = B ^ inner
    assert atom not in D
    assert not any(b and b & atom == b and b != atom for b in D.events)
    return inner, atom


def is_compatibility_structure(systems: Sequence[SetSystem]) -> bool:
    """Whether every pi-system inside the union of ``systems`` lies in one
    of them.

    Each member must be a pi-system.  The search walks generator sets in
    mask order and only extends sets that are still covered by some
    member, so it finds any minimal uncovered generator set.
    """
    if not systems:
        return True
    ground = _same_ground(*systems)
    for s in systems:
        if not is_pi_system(s):
            raise PiSystemError(f"{s!r} is not closed under intersection")
    union = sorted(set().union(*(s.events for s in systems)))
    if len(union) > MAX_STRUCTURE_EVENTS:
        raise SizeLimitExceeded(
            f"union holds {len(union)} events; exhaustive search is capped at {MAX_STRUCTURE_EVENTS}"
        )
    in_union = frozenset(union)
    members = [s._members for s in systems]
    del ground

    def covered(closure: frozenset[int]) -> bool:
        return any(closure <= m for m in members)

    def search(closure: frozenset[int], start: int) -> bool:
        for idx in range(start, len(union)):
            e = union[idx]
            if e in closure:
                continue
            grown = set(closure) | {e}
            grown |= {e & c for c in closure}
            if not grown <= in_union:
                continue
            grown = frozenset(grown)
            if not covered(grown):
                return False
            if not search(grown, idx + 1):
                return False
        return True

    return search(frozenset(), 0)
