"""Distorted probabilities: nu(F) <= gamma(psi(F)) for a concave gamma.

Any distortion other than the identity leaves only the certain events
(mass 0 or 1 under psi) with an exact probability; the identity pins
psi itself.

    python3 demos/distortion.py
"""

from fractions import Fraction as F

from predynkin import (
    CredalPolytope,
    PiecewiseLinearConcave,
    ReferenceMeasure,
    certainty_system,
    distorted_credal,
    dual_credal,
)

psi = ReferenceMeasure.of([F(1, 5), F(3, 10), F(1, 2), F(0)])
for pts in [((0, 0), (F(1, 2), F(3, 4)), (1, 1)), ((0, 0), (F(1, 10), F(1, 9)), (1, 1)), ((0, 0), (1, 1))]:
    gamma = PiecewiseLinearConcave(pts)
    M = distorted_credal(psi, gamma)
    bounds = [f"[{lo}, {hi}]" for lo, hi in (M.event_bounds(1 << k) for k in range(4))]
    print("gamma through", [(str(x), str(y)) for x, y in gamma.breakpoints])
    print("  atom bounds:", bounds)
    print("  exact events:", dual_credal(psi, M).labels())
    print("  is the point psi:", M.same_set(CredalPolytope.point(psi.ground, psi.atom_mass)))

print("\ncertainty system of psi:", certainty_system(psi).labels())
