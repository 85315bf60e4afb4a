"""Four atoms, two incompatible coin flips.

A probability is known only on the events {1,2}, {3,4}, {1,3}, {2,4}.
This walks through what can be said about every other event: the crude
inner/outer bounds, the exact coherent bounds, conditional bounds, and
the same story told with gambles instead of events.

    python3 demos/running_example.py
"""

from fractions import Fraction as F

from predynkin import (
    GroundSet,
    PartialProbability,
    blocks,
    check_ip_axioms,
    coherent_extension_table,
    credal_set,
    from_measure,
    gbr_conditional,
    inner_outer,
    is_extendable,
    natural_extension,
    precise_events,
    precise_gambles,
)

g = GroundSet(4)
mu = PartialProbability.from_assignments(
    g, {g.parse("12"): F(1, 2), g.parse("13"): F(1, 5)}
)
print("domain:", mu.domain.labels())
print("blocks:", [b.labels() for b in blocks(mu.domain)])

ok, nu = is_extendable(mu)
print("\nextendable:", ok, "witness:", [str(x) for x in nu])

io = inner_outer(mu)
ip = coherent_extension_table(mu)
print(f"\n{'event':>6} {'inner':>6} {'lower':>6} {'upper':>6} {'outer':>6}")
for a in g.all_events():
    print(f"{g.label(a):>6} {str(io.lower[a]):>6} {str(ip.lower[a]):>6} {str(ip.upper[a]):>6} {str(io.upper[a]):>6}")

# The outer bound is not subadditive, the coherent one is.
print("\nouter-bound axiom failures:", sorted(check_ip_axioms(io).clauses()))
print("coherent-bound axiom failures:", sorted(check_ip_axioms(ip).clauses()) or "none")

P, flag = precise_events(ip)
print("\nevents with exact probability:", P.labels(), "pre-Dynkin:", flag)

lo, hi = gbr_conditional(mu, g.parse("13"), g.parse("12"))
print(f"P(13 | 12) lies in [{lo}, {hi}]")

E = from_measure(mu)
S = precise_gambles(credal_set(mu))
print("\ngamble view: one subspace per block,", len(E.subspaces), "in total")
print("precise gambles: dimension", S.dim, "annihilated by", [str(x) for x in S.annihilator()[0]])
for f in [(1, -1, -1, 1), (3, 1, 0, 2)]:
    lo, hi = natural_extension(E, f)
    print(f"expectation of {f}: [{lo}, {hi}]")
