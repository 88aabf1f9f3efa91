"""Game-theoretic network centrality toolkit.

A centrality measure here is a pair: a group value function that maps node
coalitions to worth, and a cooperative solution concept that divides that
worth back onto nodes.  The package ships the generic (slow, exact)
composition, specialised polynomial algorithms for the cases that admit
them, Monte Carlo estimators for the rest, and classic centralities for
comparison.  Every fast path has an exponential oracle it is tested
against.
"""

from .classic import (
    betweenness_centrality,
    closeness_centrality,
    degree_centrality,
    eigenvector_centrality,
    generalized_closeness,
    stress_centrality,
)
from .errors import (
    ConvergenceError,
    FormatError,
    GTCError,
    GraphError,
    NumericalError,
    SizeLimitError,
)
from .games import Game, game_from_table, unanimity_game
from .graph import Graph
from .io import (
    ResultDocument,
    communities_to_masks,
    parse_communities,
    parse_graph,
    write_atomic,
)
from .measures import (
    CentralityResult,
    accessibility,
    attachment_centrality,
    beta_measure,
    cohesion_centrality,
    compose,
    connectivity_centrality,
    gomez_centrality,
    grofman_owen,
    kt_allocation,
    myerson_dfs,
    owen_degree,
    pozo_centrality,
    sv_betweenness,
    sv_closeness_fast,
    sv_degree_fast,
    sv_g2_fast,
    sv_g5_mc,
    vl_control,
)
from .reports import DiscrepancyReport, all_reports
from .solutions import (
    OrderedGame,
    PayoffVector,
    banzhaf,
    coalitional_semivalue,
    configuration_value,
    interaction_index,
    mc_estimate,
    nowak_radzik,
    owen_value,
    psi_alpha,
    sanchez_bergantinos,
    semivalue_exact,
    shapley_exact,
    weighted_shapley,
)

__all__ = [
    "CentralityResult",
    "ConvergenceError",
    "FormatError",
    "GTCError",
    "Game",
    "Graph",
    "GraphError",
    "NumericalError",
    "OrderedGame",
    "PayoffVector",
    "ResultDocument",
    "SizeLimitError",
    "DiscrepancyReport",
    "accessibility",
    "all_reports",
    "attachment_centrality",
    "banzhaf",
    "beta_measure",
    "betweenness_centrality",
    "closeness_centrality",
    "coalitional_semivalue",
    "cohesion_centrality",
    "communities_to_masks",
    "compose",
    "configuration_value",
    "connectivity_centrality",
    "degree_centrality",
    "eigenvector_centrality",
    "game_from_table",
    "generalized_closeness",
    "gomez_centrality",
    "grofman_owen",
    "interaction_index",
    "kt_allocation",
    "mc_estimate",
    "myerson_dfs",
    "nowak_radzik",
    "owen_degree",
    "owen_value",
    "parse_communities",
    "parse_graph",
    "pozo_centrality",
    "psi_alpha",
    "sanchez_bergantinos",
    "semivalue_exact",
    "shapley_exact",
    "stress_centrality",
    "sv_betweenness",
    "sv_closeness_fast",
    "sv_degree_fast",
    "sv_g2_fast",
    "sv_g5_mc",
    "unanimity_game",
    "vl_control",
    "weighted_shapley",
    "write_atomic",
]
__version__ = "0.1.0"
