"""Exact-arithmetic imprecise probability on finite ground sets.

Submodules:

* :mod:`predynkin.setsystem` -- events, set systems, pre-Dynkin hulls, blocks
* :mod:`predynkin.lp` -- rational simplex, null spaces, affine directions
* :mod:`predynkin.measure` -- partial probabilities and their extensions
* :mod:`predynkin.galois` -- credal / dual credal maps, distortions
* :mod:`predynkin.previsions` -- partial expectations on gamble subspaces
* :mod:`predynkin.cli` -- JSON batch front end
"""

from .errors import *  # noqa: F401,F403
from .setsystem import (  # noqa: F401
    GroundSet,
    Partition,
    SetSystem,
    blocks,
    decompose_atom,
    is_algebra,
    is_compatibility_structure,
    is_compatible,
    is_pi_system,
    is_pre_dynkin,
    lattice_join,
    lattice_meet,
    partition_algebra,
    pre_dynkin_hull,
    weak_atoms,
)
from .lp import LinearProgram, LPResult, affine_directions, nullspace, solve  # noqa: F401
from .polytope import CredalPolytope  # noqa: F401
from .measure import (  # noqa: F401
    ImpreciseProbability,
    PartialProbability,
    ValidationReport,
    check_ip_axioms,
    coherent_extension,
    coherent_extension_table,
    credal_set,
    gbr_conditional,
    horn_tarski_falsify,
    inner_outer,
    is_extendable,
    precise_events,
    validate_measure,
)
from .galois import (  # noqa: F401
    PiecewiseLinearConcave,
    ReferenceMeasure,
    bipolar_closure,
    certainty_system,
    credal,
    distorted_credal,
    dual_credal,
    dual_credal_finite,
    is_bipolar_closed,
    polytope_subset,
)
from .previsions import (  # noqa: F401
    NOT_IN_DOMAIN,
    LinearSubspace,
    PartialExpectation,
    evaluate,
    from_measure,
    generalized_credal,
    generalized_dual_credal,
    is_extendable_prevision,
    natural_extension,
    precise_gambles,
    validate_partial_expectation,
    violation_search,
)

__version__ = "0.1.0"
