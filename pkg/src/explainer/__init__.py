"""MCTS planning with recorded, explainable search traces."""

from .env import Action, CellKind, GridMap, default_map, parse_map
from .mcts import Search, SearchParams, plan
from .trace import RecordedTree, best_root_action, find_node, load_trace, risk, save_trace, validate_trace

__all__ = [
    "Action",
    "CellKind",
    "GridMap",
    "default_map",
    "parse_map",
    "Search",
    "SearchParams",
    "plan",
    "RecordedTree",
    "best_root_action",
    "find_node",
    "load_trace",
    "risk",
    "save_trace",
    "validate_trace",
]
