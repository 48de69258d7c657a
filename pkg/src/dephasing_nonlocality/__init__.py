"""Entanglement and CHSH nonlocality of two qubits under local pure dephasing.

The building blocks are re-exported here; see the submodules for details:

- :mod:`.states` two-qubit states, X states and the EWL family
- :mod:`.correlations` concurrence and maximal Bell value
- :mod:`.ohmic` Ohmic-class dephasing kernel of a single qubit
- :mod:`.dynamics` evolution, nonlocality threshold and long-time bounds
- :mod:`.oracle` brute-force cross-checks
"""

from .correlations import (
    BellDecomposition,
    bell_decomposition,
    bell_max_general,
    bell_value_at_angles,
    concurrence_general,
    concurrence_x,
    correlation_matrix,
)
from .dynamics import (
    DephasingPair,
    DynamicsSample,
    Interval,
    asymptotic_concurrence,
    asymptotic_concurrence_pair,
    bell_candidates_t,
    bell_t,
    concurrence_t,
    evolve_state,
    nonlocal_s_range,
    nonlocality_threshold,
    purity_lower_bound,
    stationary_entanglement_condition,
    trace_dynamics,
)
from .errors import DomainError, NumericalError
from .ohmic import (
    OhmicEnv,
    coherence_factor,
    dephasing_factor_asymptotic,
    dephasing_factor_closed,
    dephasing_factor_quadrature,
    dephasing_rate,
    find_sbar,
    spectral_density,
)
from .states import (
    EWLParams,
    Flavor,
    TwoQubitState,
    XState,
    embed_x,
    entanglement_bound_rbar,
    make_ewl,
    project_x,
    purity,
)

__version__ = "0.1.0"
