"""Brute-force reference implementations used only by the tests.

They share no code with the package: vertex enumeration for polytopes,
exhaustive closure for set systems, naive family search for
Horn-Tarski certificates.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


def solve_square(rows, rhs):
    """Unique solution of a square system by Gauss-Jordan, or None."""
    n = len(rows)
    m = [list(map(Fraction, r)) + [Fraction(b)] for r, b in zip(rows, rhs)]
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return None
        m[c], m[p] = m[p], m[c]
        piv = m[c][c]
        m[c] = [x / piv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return tuple(m[i][n] for i in range(n))


def rank(rows):
    m = [list(map(Fraction, r)) for r in rows]
    r = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        for i in range(r + 1, len(m)):
            f = m[i][c] / m[r][c]
            m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


def vertices(n, eq=(), le=()):
    """All vertices of {x in simplex_n : eq rows hold, le rows hold}."""
    eq = [((1,) * n, Fraction(1))] + [(tuple(r), Fraction(b)) for r, b in eq]
    le = [(tuple(r), Fraction(b)) for r, b in le]
    for k in range(n):
        e = [0] * n
        e[k] = -1
        le.append((tuple(e), Fraction(0)))
    basis = []
    for r, b in eq:
        if rank([x for x, _ in basis] + [r]) > len(basis):
            basis.append((r, b))
    out = set()
    # a vertex is pinned by the independent equalities plus enough tight
    # inequalities to reach n independent rows
    for extra in itertools.combinations(le, n - len(basis)):
        rows = basis + list(extra)
        x = solve_square([r for r, _ in rows], [b for _, b in rows])
        if x is None:
            continue
        if all(dot(r, x) == b for r, b in eq) and all(dot(r, x) <= b for r, b in le):
            out.add(x)
    return sorted(out)


def dot(a, b):
    return sum(Fraction(x) * Fraction(y) for x, y in zip(a, b))


def indicator(n, mask):
    return tuple(mask >> k & 1 for k in range(n))


def is_pre_dynkin(events, n):
    s = set(events)
    full = (1 << n) - 1
    if 0 not in s:
        return False
    if any(full ^ a not in s for a in s):
        return False
    return all(a | b in s for a in s for b in s if not a & b)


def all_pre_dynkin(n):
    """Every pre-Dynkin system on n points.

    Candidates are unions of complement pairs, so n = 4 means only 128
    checks and n = 5 about 33 thousand.
    """
    full = (1 << n) - 1
    pairs = [a for a in range(1, 1 << n) if a < full ^ a]
    out = []
    for bits in range(1 << len(pairs)):
        ev = [0, full]
        for i, a in enumerate(pairs):
            if bits >> i & 1:
                ev += [a, full ^ a]
        if is_pre_dynkin(ev, n):
            out.append(frozenset(ev))
    return out


def hull_by_intersection(gens, n, systems):
    cands = [s for s in systems if set(gens) <= s]
    return frozenset.intersection(*cands)


def maximal_algebras(events, n):
    """Inclusion-maximal algebras among subsets of a small system."""
    full = (1 << n) - 1
    ev = sorted(events)
    algs = []
    for r in range(len(ev) + 1):
        for sub in itertools.combinations(ev, r):
            s = set(sub)
            if 0 in s and all(full ^ a in s for a in s) and all(a | b in s for a in s for b in s):
                algs.append(frozenset(s))
    return {a for a in algs if not any(a < b for b in algs)}


def naive_horn_tarski(values, n, depth):
    """Smallest-total violating (B, A) multiset pair, by plain enumeration."""
    events = sorted(e for e in values if e)
    for total in range(1, depth + 1):
        for fam in itertools.combinations_with_replacement(
            [(e, s) for e in events for s in (1, -1)], total
        ):
            vec = [0] * n
            val = Fraction(0)
            for e, s in fam:
                for k in range(n):
                    vec[k] += s * (e >> k & 1)
                val += s * values[e]
            if all(v >= 0 for v in vec) and val < 0:
                return fam
    return None


def compatibility_structure_brute(systems):
    """Check every nonempty intersection-closed subfamily of the union."""
    union = sorted(set().union(*systems))
    for r in range(1, len(union) + 1):
        for sub in itertools.combinations(union, r):
            s = set(sub)
            if all(a & b in s for a in s for b in s):
                if not any(s <= set(m) for m in systems):
                    return False
    return True
