"""Acceptance suite: one test per criterion.

Run under pytest, or directly with ``python3 tests/test_acceptance.py``
for a PASS/FAIL line per criterion.  Random instances come from fixed
seeds so every run checks the same cases.
"""

import functools
import json
import os
import random
import re
import subprocess
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction as F
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from oracles import dot, indicator, vertices  # noqa: E402

from predynkin import (  # noqa: E402
    CredalPolytope,
    GroundSet,
    LinearSubspace,
    PartialProbability,
    PiecewiseLinearConcave,
    ReferenceMeasure,
    SetSystem,
    bipolar_closure,
    blocks,
    certainty_system,
    check_ip_axioms,
    coherent_extension,
    coherent_extension_table,
    credal,
    credal_set,
    distorted_credal,
    dual_credal,
    dual_credal_finite,
    from_measure,
    gbr_conditional,
    generalized_credal,
    generalized_dual_credal,
    horn_tarski_falsify,
    inner_outer,
    is_bipolar_closed,
    is_extendable,
    is_extendable_prevision,
    is_pre_dynkin,
    lattice_join,
    natural_extension,
    polytope_subset,
    pre_dynkin_hull,
    precise_events,
    precise_gambles,
    violation_search,
)
from predynkin.cli import OPERATIONS  # noqa: E402

ROOT = Path(__file__).resolve().parents[1]
FIXTURES = ROOT / "fixtures"

RESULTS: dict[int, tuple[str, bool]] = {}


def criterion(num: int, title: str):
    def wrap(fn):
        @functools.wraps(fn)
        def inner():
            try:
                fn()
            except BaseException:
                RESULTS[num] = (title, False)
                raise
            RESULTS[num] = (title, True)

        return inner

    return wrap


# ---------------------------------------------------------------- shared data

G4 = GroundSet(4)
D4 = SetSystem.of(4, ["", "12", "34", "13", "24", "1234"])
MU_D4 = PartialProbability.of(
    D4, {0: 0, G4.parse("12"): F(1, 2), G4.parse("34"): F(1, 2), G4.parse("13"): F(1, 5), G4.parse("24"): F(4, 5), G4.full: 1}
)
LOWER = {
    "": 0, "1": 0, "2": F(3, 10), "3": 0, "4": F(3, 10),
    "12": F(1, 2), "34": F(1, 2), "13": F(1, 5), "24": F(4, 5), "14": F(3, 10), "23": F(3, 10),
    "123": F(1, 2), "124": F(4, 5), "134": F(1, 2), "234": F(4, 5), "1234": 1,
}


def nonextendable():
    raw = json.loads((FIXTURES / "nonextendable.json").read_text())
    g = GroundSet(raw["n"])
    table = {g.event(*m["event"]): F(m["value"]) for m in raw["measure"]}
    table[0], table[g.full] = F(0), F(1)
    return PartialProbability.of(SetSystem(g, tuple(table)), table)


def same(P, Q):
    return polytope_subset(P, Q) and polytope_subset(Q, P)


def rand_dist(rng, n, zeros=False):
    while True:
        w = [rng.randint(0 if zeros else 1, 6) for _ in range(n)]
        if zeros and n > 1 and 0 not in w:
            w[rng.randrange(n)] = 0
        if sum(w):
            return tuple(F(x, sum(w)) for x in w)


def rand_system(rng, g, k_max=4):
    return SetSystem(g, tuple(rng.randrange(g.full + 1) for _ in range(rng.randint(0, k_max))))


def rand_gamma(rng):
    xs = sorted({rng.randint(1, 11) for _ in range(rng.randint(1, 3))})
    xs = [F(0)] + [F(x, 12) for x in xs] + [F(1)]
    slopes = sorted((rng.randint(0, 8) for _ in range(len(xs) - 1)), reverse=True)
    if slopes[0] == slopes[-1]:
        slopes[0] += 1
    rise = sum(s * (b - a) for s, a, b in zip(slopes, xs, xs[1:]))
    ys = [F(0)]
    for s, a, b in zip(slopes, xs, xs[1:]):
        ys.append(ys[-1] + s * (b - a) / rise)
    return PiecewiseLinearConcave(tuple(zip(xs, ys)))


def vertex_points(P, rng, k):
    """A few vertices of P reached by random objectives."""
    n = P.ground.n
    return [P.program.minimize(tuple(F(rng.randint(-5, 5)) for _ in range(n))).point for _ in range(k)]


# ---------------------------------------------------------------- criteria


@criterion(1, "running-example coherent extension")
def test_criterion_01_coherent_extension_table():
    ip = coherent_extension_table(MU_D4)
    for label, v in LOWER.items():
        a = G4.parse(label)
        assert ip.lower[a] == v, label
        assert ip.upper[a] == 1 - ip.lower[G4.full ^ a]
    assert ip.upper[G4.parse("2")] == F(1, 2)
    assert ip.upper[G4.parse("14")] == F(7, 10)


@criterion(2, "inner/outer table")
def test_criterion_02_inner_outer():
    ip = inner_outer(MU_D4)
    p = G4.parse
    for label in ("1", "2", "3", "4", "14", "23"):
        assert ip.lower[p(label)] == 0
    assert ip.lower[p("123")] == F(1, 2)
    assert ip.lower[p("124")] == F(4, 5)
    assert ip.lower[p("134")] == F(1, 2)
    assert ip.lower[p("234")] == F(4, 5)
    assert ip.upper[p("14")] == 1 and ip.upper[p("1")] + ip.upper[p("4")] == F(7, 10)
    v = check_ip_axioms(ip).first("subadditivity")
    assert v is not None and v.events == (p("1"), p("4"))


@criterion(3, "structure")
def test_criterion_03_structure():
    assert blocks(D4) == [SetSystem.of(4, ["", "12", "34", "1234"]), SetSystem.of(4, ["", "13", "24", "1234"])]
    assert pre_dynkin_hull(SetSystem.of(4, ["12", "3"])) == SetSystem.of(4, ["", "12", "3", "4", "34", "123", "124", "1234"])
    assert precise_events(coherent_extension_table(MU_D4)) == (D4, True)
    g3 = GroundSet(3)
    lo = {"": 0, "1": F(1, 5), "2": F(1, 5), "3": 0, "12": F(2, 5), "13": F(4, 5), "23": F(4, 5), "123": 1}
    up = {"": 0, "1": F(1, 5), "2": F(1, 5), "3": F(3, 5), "12": 1, "13": F(4, 5), "23": F(4, 5), "123": 1}
    from predynkin import ImpreciseProbability

    ip = ImpreciseProbability.from_tables(g3, {g3.parse(k): v for k, v in lo.items()}, {g3.parse(k): v for k, v in up.items()})
    D, flag = precise_events(ip)
    assert D == SetSystem.of(3, ["", "1", "2", "13", "23", "123"]) and not flag


@criterion(4, "extendability")
def test_criterion_04_extendability():
    ok, nu = is_extendable(MU_D4)
    assert ok and all(dot(indicator(4, e), nu) == v for e, v in MU_D4.table.items())
    assert horn_tarski_falsify(MU_D4, 4) is None
    bad = nonextendable()
    assert is_extendable(bad) == (False, None)
    assert vertices(4, [(indicator(4, e), v) for e, v in bad.table.items()]) == []
    B, A = horn_tarski_falsify(bad, 6)
    for k in range(4):
        assert sum(e >> k & 1 for e in B) >= sum(e >> k & 1 for e in A)
    assert sum(bad[e] for e in B) < sum(bad[e] for e in A)
    assert violation_search(from_measure(MU_D4)) is None
    assert violation_search(from_measure(bad)) is not None
    assert is_extendable_prevision(from_measure(bad))[0] is False


@criterion(5, "Galois suite")
def test_criterion_05_galois_suite():
    rng = random.Random(5)
    # Every law is checked on every instance; failures of the bipolar
    # identity are collected so the other laws still run to completion.
    bipolar_failures = []
    for _ in range(200):
        n = rng.randint(2, 5)
        g = GroundSet(n)
        psi = ReferenceMeasure(g, rand_dist(rng, n))
        A1 = rand_system(rng, g)
        A2 = SetSystem(g, A1.events + rand_system(rng, g, 2).events)
        m1, m2 = credal(psi, A1), credal(psi, A2)
        # hull invariance
        assert same(m1, credal(psi, pre_dynkin_hull(A1)))
        # antitone, extensive, pseudo-inverse on systems
        assert polytope_subset(m2, m1)
        c1 = dual_credal(psi, m1)
        assert A1.issubset(c1) and is_pre_dynkin(c1)
        assert same(m1, credal(psi, c1))
        # the same laws on finite measure sets Q1 <= Q2
        Q2 = vertex_points(credal(psi, A1), rng, 3)
        Q1 = Q2[:1]
        d1, d2 = dual_credal_finite(psi, Q1), dual_credal_finite(psi, Q2)
        assert d2.issubset(d1) and is_pre_dynkin(d1) and is_pre_dynkin(d2)
        for Q, d in ((Q1, d1), (Q2, d2)):
            back = credal(psi, d)
            assert all(back.contains(v) for v in Q)
            assert dual_credal(psi, back) == d
        # finite bipolar theorem
        D = pre_dynkin_hull(A1)
        if bipolar_closure(psi, D) != D:
            bipolar_failures.append((psi.atom_mass, D.labels()))
        # measure-zero closedness, with a psi that has null atoms
        psi0 = ReferenceMeasure(g, rand_dist(rng, n, zeros=True))
        C = bipolar_closure(psi0, A1)
        assert is_pre_dynkin(C)
        for a in C:
            if psi0(a) == 0:
                comp = g.full ^ a
                for b in g.all_events():
                    if b & a == b or b & comp == comp:
                        assert b in C
        # lattice identity
        E = pre_dynkin_hull(rand_system(rng, g))
        assert same(credal(psi, lattice_join(D, E)), credal(psi, D).intersect(credal(psi, E)))
    assert not bipolar_failures, (
        f"bipolar_closure(psi, D) != D on {len(bipolar_failures)} of 200 instances; "
        f"first: psi={bipolar_failures[0][0]}, D={bipolar_failures[0][1]}"
    )


@criterion(6, "non-injectivity and injectivity on closed systems")
def test_criterion_06_injectivity():
    psi = ReferenceMeasure.of([1, 0, 0])
    D1 = pre_dynkin_hull(SetSystem.of(3, ["1"]))
    P = SetSystem.power_set(psi.ground)
    assert D1 != P and same(credal(psi, D1), credal(psi, P))
    assert not is_bipolar_closed(psi, D1)
    rng = random.Random(6)
    distinct = 0
    for _ in range(100):
        n = rng.randint(2, 4)
        g = GroundSet(n)
        psi = ReferenceMeasure(g, rand_dist(rng, n, zeros=rng.random() < 0.5))
        C1 = bipolar_closure(psi, rand_system(rng, g))
        C2 = bipolar_closure(psi, rand_system(rng, g))
        assert is_bipolar_closed(psi, C1) and is_bipolar_closed(psi, C2)
        if C1 != C2:
            distinct += 1
            assert not same(credal(psi, C1), credal(psi, C2))
    assert distinct >= 50


@criterion(7, "generalized Bayes rule")
def test_criterion_07_bayes():
    vs = vertices(4, [(indicator(4, e), v) for e, v in MU_D4.table.items()])
    for b in D4:
        if MU_D4[b] == 0:
            continue
        for a in G4.all_events():
            lo, hi = gbr_conditional(MU_D4, a, b)
            assert hi * MU_D4[b] == coherent_extension(MU_D4, a & b)[1]
            ratios = [dot(indicator(4, a & b), v) / dot(indicator(4, b), v) for v in vs]
            assert (lo, hi) == (min(ratios), max(ratios))
    assert gbr_conditional(MU_D4, G4.parse("13"), G4.parse("12"))[1] == F(2, 5)


@criterion(8, "previsions")
def test_criterion_08_previsions():
    E = from_measure(MU_D4)
    for a in G4.all_events():
        assert natural_extension(E, indicator(4, a)) == coherent_extension(MU_D4, a)
    S = precise_gambles(credal_set(MU_D4))
    assert S.dim == 3 and S.annihilator() == [(1, -1, -1, 1)]
    rng = random.Random(8)
    for _ in range(200):
        n = rng.randint(2, 5)
        g = GroundSet(n)
        nu = rand_dist(rng, n, zeros=rng.random() < 0.3)
        D = pre_dynkin_hull(rand_system(rng, g))
        mu = PartialProbability.of(D, {e: sum((nu[k] for k in range(n) if e >> k & 1), F(0)) for e in D.events})
        S = precise_gambles(credal_set(mu))
        assert (1,) * n in S
    for _ in range(60):
        n = rng.randint(2, 4)
        g = GroundSet(n)
        psi = ReferenceMeasure(g, rand_dist(rng, n, zeros=rng.random() < 0.3))
        G1 = [tuple(F(rng.randint(-3, 3)) for _ in range(n)) for _ in range(rng.randint(0, 3))]
        G2 = G1 + [tuple(F(rng.randint(-3, 3)) for _ in range(n)) for _ in range(rng.randint(0, 2))]
        m1, m2 = generalized_credal(psi, G1), generalized_credal(psi, G2)
        assert polytope_subset(m2, m1)
        d1, d2 = generalized_dual_credal(psi, m1), generalized_dual_credal(psi, m2)
        assert d1.issubset(d2)
        assert LinearSubspace.span(g, G1).issubset(d1)
        back = generalized_credal(psi, d1.basis)
        assert same(m1, back)
        assert generalized_dual_credal(psi, back) == d1


@criterion(9, "distortion")
def test_criterion_09_distortion():
    rng = random.Random(9)
    with_zeros = 0
    for i in range(100):
        n = rng.randint(2, 5)
        g = GroundSet(n)
        psi = ReferenceMeasure(g, rand_dist(rng, n, zeros=i % 2 == 0))
        with_zeros += not psi.strictly_positive
        gam = rand_gamma(rng)
        assert not gam.is_identity
        C = certainty_system(psi)
        zero = SetSystem(g, tuple(e for e in g.all_events() if psi(e) == 0))
        assert C == pre_dynkin_hull(zero)
        assert dual_credal(psi, distorted_credal(psi, gam)) == C
        point = distorted_credal(psi, PiecewiseLinearConcave.identity())
        assert same(point, CredalPolytope.point(g, psi.atom_mass))
    assert with_zeros >= 50


FLOAT_TOKEN = re.compile(r"^-?\d+(\.\d*)?([eE][-+]?\d+)?$")


def _no_floats(obj) -> bool:
    if isinstance(obj, float):
        return False
    if isinstance(obj, str):
        return not (FLOAT_TOKEN.match(obj) and ("." in obj or "e" in obj.lower()))
    if isinstance(obj, dict):
        return all(_no_floats(v) for v in obj.values())
    if isinstance(obj, list):
        return all(_no_floats(v) for v in obj)
    return True


def _cli(args, seed):
    env = dict(os.environ, PYTHONHASHSEED=str(seed))
    proc = subprocess.run([sys.executable, "-m", "predynkin", *args], capture_output=True, env=env, cwd=ROOT)
    return proc.returncode, proc.stdout


@criterion(10, "determinism and exactness")
def test_criterion_10_determinism():
    fixtures = sorted(FIXTURES.glob("*.json"))
    assert len(fixtures) >= 9
    jobs = [(op, str(f)) for f in fixtures for op in sorted(OPERATIONS)]
    with ThreadPoolExecutor(max_workers=8) as pool:
        first = list(pool.map(lambda j: _cli(list(j), 0), jobs))
    runnable = [(j, out) for j, (code, out) in zip(jobs, first) if code == 0]
    # every fixture feeds at least one subcommand
    assert {j[1] for j, _ in runnable} == {str(f) for f in fixtures}
    for (op, path), out in runnable:
        doc = json.loads(out, parse_float=lambda s: float("nan"))
        assert _no_floats(doc), (op, path)
        assert b"." not in re.sub(rb'"[^"]*"', b"", out), (op, path)

    def repeats(item):
        (op, path), out = item
        outs = [_cli([op, path], seed)[1] for seed in (1, 2, 3, 4)]
        outs.append(_cli([op, path, "--parallel", "1"], 5)[1])
        outs.append(_cli([op, path, "--parallel", "8"], 6)[1])
        return all(o == out for o in outs)

    with ThreadPoolExecutor(max_workers=8) as pool:
        flags = list(pool.map(repeats, runnable))
    bad = [j for (j, _), ok in zip(runnable, flags) if not ok]
    assert not bad, bad


CRITERIA = [
    test_criterion_01_coherent_extension_table,
    test_criterion_02_inner_outer,
    test_criterion_03_structure,
    test_criterion_04_extendability,
    test_criterion_05_galois_suite,
    test_criterion_06_injectivity,
    test_criterion_07_bayes,
    test_criterion_08_previsions,
    test_criterion_09_distortion,
    test_criterion_10_determinism,
]


def report_lines() -> list[str]:
    return [f"criterion {num:2d} {'PASS' if ok else 'FAIL'}  {title}" for num, (title, ok) in sorted(RESULTS.items())]


if __name__ == "__main__":
    for fn in CRITERIA:
        try:
            fn()
        except Exception:
            pass
    print("\n".join(report_lines()))
    sys.exit(0 if all(ok for _, ok in RESULTS.values()) else 1)
