import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from predynkin import (  # noqa: E402
    GroundSet,
    PartialProbability,
    ReferenceMeasure,
    SetSystem,
    pre_dynkin_hull,
)

ROOT = Path(__file__).resolve().parents[1]
FIXTURES = ROOT / "fixtures"

settings.register_profile(
    "default",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

F = Fraction


def d4_ground():
    return GroundSet(4)


@pytest.fixture
def g4():
    return GroundSet(4)


@pytest.fixture
def D4():
    return SetSystem.of(4, ["", "12", "34", "13", "24", "1234"])


@pytest.fixture
def mu_d4(D4):
    g = D4.ground
    return PartialProbability.of(
        D4,
        {
            0: F(0),
            g.parse("12"): F(1, 2),
            g.parse("34"): F(1, 2),
            g.parse("13"): F(1, 5),
            g.parse("24"): F(4, 5),
            g.full: F(1),
        },
    )


@pytest.fixture
def psi4():
    return ReferenceMeasure.of([F(1, 5), F(3, 10), F(1, 2), F(0)])


@pytest.fixture
def nonextendable():
    """Frozen fixture found by demos/search_nonextendable.py (seed 7)."""
    g = GroundSet(4)
    vals = {"12": F(1, 4), "13": F(1), "23": F(1, 2), "14": F(1, 2), "24": F(0), "34": F(3, 4)}
    table = {g.parse(k): v for k, v in vals.items()}
    table[0] = F(0)
    table[g.full] = F(1)
    return PartialProbability.of(SetSystem(g, tuple(table)), table)


# ---------------------------------------------------------------- strategies


@st.composite
def grounds(draw, lo=2, hi=5):
    return GroundSet(draw(st.integers(lo, hi)))


@st.composite
def generator_systems(draw, lo=2, hi=5, max_gens=4):
    g = draw(grounds(lo, hi))
    gens = draw(st.lists(st.integers(0, g.full), max_size=max_gens))
    return SetSystem(g, tuple(gens))


@st.composite
def pre_dynkin_systems(draw, lo=2, hi=5, max_gens=4):
    return pre_dynkin_hull(draw(generator_systems(lo, hi, max_gens)))


def rational_distribution(draw, n, positive=False):
    lo = 1 if positive else 0
    weights = draw(st.lists(st.integers(lo, 6), min_size=n, max_size=n))
    if sum(weights) == 0:
        weights[draw(st.integers(0, n - 1))] = 1
    total = sum(weights)
    return tuple(F(w, total) for w in weights)


@st.composite
def positive_psi(draw, ground):
    return ReferenceMeasure(ground, rational_distribution(draw, ground.n, positive=True))


@st.composite
def extendable_measures(draw, lo=2, hi=5, max_gens=4):
    """Restriction of a random full probability to a random pre-Dynkin system."""
    D = draw(pre_dynkin_systems(lo, hi, max_gens))
    g = D.ground
    nu = rational_distribution(draw, g.n)
    vals = {e: sum((nu[k] for k in range(g.n) if e >> k & 1), F(0)) for e in D.events}
    return PartialProbability.of(D, vals), nu


def random_block_measure(rng, D, grid):
    """Values drawn per block on the block's atoms; None if blocks clash.

    Unlike :func:`extendable_measures` this can produce measures with no
    extension, because blocks are filled independently.
    """
    from predynkin import blocks, validate_measure

    vals = {}
    for alg in blocks(D):
        nonempty = [e for e in alg.events if e]
        atoms = [a for a in nonempty if not any(b != a and b & a == b for b in nonempty)]
        cuts = sorted(rng.randint(0, grid) for _ in range(len(atoms) - 1))
        parts = [b - a for a, b in zip([0] + cuts, cuts + [grid])]
        for e in alg.events:
            v = F(sum(p for a, p in zip(atoms, parts) if a & e == a), grid)
            if vals.setdefault(e, v) != v:
                return None
    mu = PartialProbability.of(D, vals)
    return mu if validate_measure(mu).ok else None


def random_pre_dynkin(rng, n, max_gens=5):
    g = GroundSet(n)
    gens = [rng.randrange(1, g.full) for _ in range(rng.randint(1, max_gens))]
    return pre_dynkin_hull(SetSystem(g, tuple(gens)))


@st.composite
def any_psi(draw, ground):
    """Reference measure that may put zero mass on some atoms."""
    return ReferenceMeasure(ground, rational_distribution(draw, ground.n))


@st.composite
def concave_gammas(draw):
    """Non-identity concave distortion with up to three interior breakpoints."""
    from predynkin import PiecewiseLinearConcave

    k = draw(st.integers(1, 3))
    xs = sorted(set(draw(st.lists(st.integers(1, 11), min_size=k, max_size=k))))
    xs = [F(0)] + [F(x, 12) for x in xs] + [F(1)]
    slopes = sorted(draw(st.lists(st.integers(0, 8), min_size=len(xs) - 1, max_size=len(xs) - 1)), reverse=True)
    if slopes[0] == slopes[-1]:
        slopes[0] += 1
    rise = sum(s * (b - a) for s, a, b in zip(slopes, xs, xs[1:]))
    ys = [F(0)]
    for s, a, b in zip(slopes, xs, xs[1:]):
        ys.append(ys[-1] + s * (b - a) / rise)
    return PiecewiseLinearConcave(tuple(zip(xs, ys)))


def vertex_dual(psi, eq=(), le=()):
    """Dual credal system computed from an explicit vertex list."""
    from oracles import dot, indicator, vertices

    g = psi.ground
    vs = vertices(g.n, eq, le)
    return frozenset(
        e for e in g.all_events() if all(dot(indicator(g.n, e), v) == psi(e) for v in vs)
    )


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.report_lines():
        terminalreporter.write_line(line)
