"""Reflexive directed graphs as generalized metric spaces valued in
superword-closed sets of words over {+, -}: distances, residuation,
MacNeille closure, Helly ball tests, retraction and embedding machinery,
and a desk-scale injective-hull search.
"""

from ._kernels import BACKEND
from .graphs import (
    DiGraph,
    digraph,
    format_dg,
    is_acyclic,
    is_oriented,
    parse_dg,
    product_graph,
    zigzag_of_word,
)
from .metric import (
    ball,
    decomposition_check,
    distance,
    distance_matrix,
    graph_from_metric,
    matrix_from_json,
    matrix_to_json,
    verify_metric_axioms,
)
from .quantale import (
    LEFT,
    RIGHT,
    quantale_distance,
    quantale_graph_arc,
    residual,
)
from .retracts import (
    balls_2helly,
    berge_helly,
    embed_zigzag_product,
    extend_map,
    gadget_cancellation_extension,
    gadget_cycle_extension,
    injective_hull_search,
    is_absolute_retract,
    is_isometric_embedding,
    min_factor_embedding,
    obstruction_check,
    retraction_search,
)
from .selftest import theorem_consistency
from .upsets import (
    TOP,
    ZERO,
    UpSet,
    cancellation_witness,
    canonical_upset,
    involute_upset,
    is_macneille_closed,
    join,
    lower_cone,
    macneille_closure,
    meet,
    oplus,
    parse_upset,
    upset_leq,
    upset_member,
)
from .words import involute_word, parse_word, subword_leq

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DiGraph",
    "LEFT",
    "RIGHT",
    "TOP",
    "UpSet",
    "ZERO",
    "ball",
    "balls_2helly",
    "berge_helly",
    "cancellation_witness",
    "canonical_upset",
    "decomposition_check",
    "digraph",
    "distance",
    "distance_matrix",
    "embed_zigzag_product",
    "extend_map",
    "format_dg",
    "gadget_cancellation_extension",
    "gadget_cycle_extension",
    "graph_from_metric",
    "injective_hull_search",
    "involute_upset",
    "involute_word",
    "is_absolute_retract",
    "is_acyclic",
    "is_isometric_embedding",
    "is_macneille_closed",
    "is_oriented",
    "join",
    "lower_cone",
    "macneille_closure",
    "matrix_from_json",
    "matrix_to_json",
    "meet",
    "min_factor_embedding",
    "obstruction_check",
    "oplus",
    "parse_dg",
    "parse_upset",
    "parse_word",
    "product_graph",
    "quantale_distance",
    "quantale_graph_arc",
    "residual",
    "retraction_search",
    "subword_leq",
    "theorem_consistency",
    "upset_leq",
    "upset_member",
    "verify_metric_axioms",
    "zigzag_of_word",
]
