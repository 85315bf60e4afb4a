"""The credal map and its dual, anchored at a reference probability.

credal(psi, A) collects every probability that agrees with psi on A;
dual_credal(psi, Q) collects every event on which all of Q agrees with
psi.  Going there and back closes a system of events.  The tour ends
with a pre-Dynkin system that is not closed even for a strictly
positive psi.

    python3 demos/galois_tour.py
"""

from fractions import Fraction as F

from predynkin import (
    ReferenceMeasure,
    SetSystem,
    bipolar_closure,
    credal,
    dual_credal,
    dual_credal_finite,
    pre_dynkin_hull,
)

psi = ReferenceMeasure.of([F(1, 5), F(3, 10), F(1, 2), F(0)])
A = SetSystem.of(4, ["12", "3"])
M = credal(psi, A)
print("A =", A.labels())
print("pre-Dynkin hull:", pre_dynkin_hull(A).labels())
print("bounds of nu(1) over m(A):", [str(x) for x in M.event_bounds(1)])
print("m°(m(A)):", dual_credal(psi, M).labels())

for nu in [(0, F(1, 2), F(1, 2), 0), (0, F(1, 2), 0, F(1, 2))]:
    print(f"events where {[str(x) for x in nu]} agrees with psi:", dual_credal_finite(psi, [nu]).labels())

# A null atom lets the closure grow past the hull.
psi1 = ReferenceMeasure.of([1, 0, 0])
D1 = pre_dynkin_hull(SetSystem.of(3, ["1"]))
print("\npsi = (1, 0, 0):", D1.labels(), "closes to", bipolar_closure(psi1, D1).labels())

# Even with every atom positive, pinning all pair probabilities on four
# atoms pins every atom, so the closure is the whole power set.
psi2 = ReferenceMeasure.of([F(1, 10), F(1, 5), F(3, 10), F(2, 5)])
pairs = SetSystem.of(4, ["", "12", "13", "14", "23", "24", "34", "1234"])
C = bipolar_closure(psi2, pairs)
print("\nall pairs on four atoms:", len(pairs), "events; closure has", len(C))
print("directions left in m(pairs):", credal(psi2, pairs).directions())
