"""Exact alcove path model: lambda-chains, admissible subsets, crystals,
Yang-Baxter moves, evacuation and Demazure characters."""

from .rootsys import NonDominant, Root, RootSystem, UnsupportedType, WeylElement
from .chains import (
    LambdaChain,
    YbWindow,
    connect_chains,
    find_yb_windows,
    lex_lambda_chain,
    reverse_chain,
    validate_lambda_chain,
)
from .admissible import admissible_positions, enumerate_admissible, is_admissible, weight_of, weyl_of
from .crystal import build_graph, canonical_iso, lower, raise_
from .ybmoves import composed_bijection, yb_move, yb_move_search
from .evacuation import evacuate, evacuate_via_crystal, evacuation_report, reverse_subset
from .characters import (
    CharacterPoly,
    character,
    demazure_decreasing,
    demazure_filtered,
    demazure_oracle,
    r_operator_check,
    weyl_dim_oracle,
)

__version__ = "0.1.0"
