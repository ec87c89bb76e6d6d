"""swapmc: swap Markov chains on degree-constrained bipartite graphs and digraphs.

Sample (approximately) uniformly from all simple bipartite graphs with a
prescribed degree sequence, or all loop-free digraphs with a prescribed
degree bi-sequence, check the degree-spread conditions under which the
chains are rapidly mixing, and certify behaviour on small instances with
exhaustive oracles.  The canonical-path machinery that underpins the mixing
analysis (cycle decomposition, milestone sweeps, auxiliary matrices, switch
repair) is provided as executable, verifiable procedures.
"""

from .chain import (
    ChainConfig,
    ChainStats,
    SampleResult,
    StepOutcome,
    derive_chain_seeds,
    sample,
    step_bipartite,
    step_directed,
)
from .conditions import (
    ConditionReport,
    ERWindowReport,
    bipartite_spread_condition,
    directed_spread_condition,
    erdos_renyi_window,
)
from .degrees import (
    BipartiteDegreeSequence,
    DegreeBounds,
    DirectedDegreeBiSequence,
    bounds_of,
    is_bipartite_graphic,
    is_directed_graphic,
    kleitman_wang_arcs,
)
from .errors import (
    BudgetExceededError,
    FormatError,
    IllegalMoveError,
    InfeasibleSequenceError,
    RepairError,
    SwapMCError,
)
from .io import (
    format_realization,
    format_sequence,
    load_realization,
    load_sequence,
    parse_realization,
    parse_sequence,
    realization_to_json,
)
from .oracle import (
    ExactKernel,
    count_realizations,
    enumerate_realizations,
    exact_transition_matrix,
    swap_graph_connected,
    tv_curve,
    tv_from_kernel,
)
from .paths import (
    AuxiliaryMatrix,
    BadPositionReport,
    CanonicalPath,
    Cycle,
    CycleDecomposition,
    RepairReport,
    RepairResult,
    auxiliary_matrix,
    build_canonical_path,
    cornerstone,
    decompose,
    milestones,
    repair_to_realization,
    sweep,
    verify_bad_positions,
    verify_repairs,
)
from .realization import (
    BipartiteRealization,
    DirectedRealization,
    SwapMove,
    construct_bipartite,
    construct_directed,
    from_bipartite_representation,
    hamming_distance,
    to_bipartite_representation,
    try_c4_swap,
    try_c6_swap,
)

__version__ = "0.1.0"
