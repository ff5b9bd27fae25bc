"""Exact solver and verification harness for the domination game."""

from .graph import (
    Graph,
    bits,
    enumerate_labeled_graphs,
    enumerate_labeled_trees,
    mask_from,
    parse_edge_list,
    parse_graph6,
    write_edge_list,
    write_graph6,
)
from .solver import (
    GameState,
    Player,
    Solver,
    best_move,
    domination_number,
    game_value,
    gamma_g,
    gamma_g_given,
    gamma_g_prime,
    legal_moves,
    oracle_game_value,
)
from .families import (
    ClaimedValues,
    MarkedGraph,
    cycle,
    exceptional_constructions,
    graph_Z,
    path,
)

__all__ = [
    "ClaimedValues",
    "GameState",
    "Graph",
    "MarkedGraph",
    "Player",
    "Solver",
    "best_move",
    "bits",
    "cycle",
    "domination_number",
    "enumerate_labeled_graphs",
    "enumerate_labeled_trees",
    "exceptional_constructions",
    "game_value",
    "gamma_g",
    "gamma_g_given",
    "gamma_g_prime",
    "graph_Z",
    "legal_moves",
    "mask_from",
    "oracle_game_value",
    "parse_edge_list",
    "parse_graph6",
    "path",
    "write_edge_list",
    "write_graph6",
]

__version__ = "0.1.0"
