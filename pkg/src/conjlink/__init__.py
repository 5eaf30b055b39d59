"""Rank conjectural links in undirected networks and measure restoration quality."""

from .graph import (
    BUILTIN_DATASETS,
    DuplicateEdgeWarning,
    EdgeListError,
    GeneratorConfig,
    Graph,
    builtin_dataset,
    dump_edge_list,
    generate,
    load_edge_list,
    total_possible_links,
)
from .kernel import (
    ConvergenceError,
    DivergentSeriesError,
    SpectralEstimate,
    dominant_eigenvalue,
    effective_resistance,
    inverse_i_minus_alpha_a,
    resistance_matrix,
    walk_sum,
)
from .restoration import (
    DamageRecord,
    ExperimentGrid,
    GridCell,
    RestorationReport,
    damage,
    quality_q,
    restore,
    restore_scenario_one,
    restore_scenario_two,
    run_grid,
)
from .scorers import (
    METHODS,
    PairScore,
    RankedList,
    ScoreConfig,
    rank,
    score_adamic_adar,
    score_g,
    score_h,
    score_jaccard,
    score_pairs,
    score_resource_allocation,
    score_sigma,
)

__version__ = "0.1.0"
