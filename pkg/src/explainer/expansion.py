"""Targeted tree expansion.

Grows an existing recorded tree from one interior node instead of
replanning from the initial state. When a forced action is given, every
added simulation takes it as its first move, so that edge's visit count
grows by exactly the budget.

Ancestor statistics (node visits and edge stats above the target) are
deliberately left untouched: the tree must keep showing what the
planner believed when it made its decision, with the extra evidence
recorded separately in the metadata expansion log. Replaying the
original plan with its recorded seed therefore reproduces the
pre-expansion tree exactly.
"""

from __future__ import annotations

import random

from .env import Action, GridMap
from .errors import TargetMissing, TargetTerminal
from .mcts import SearchParams, _Engine
from .trace import ExpansionRecord, RecordedTree


def expand_targeted(tree: RecordedTree, grid: GridMap, target_node: int,
                    forced_action: Action | None, budget: int, params: SearchParams,
                    seed: int, created_at: str | None = None) -> RecordedTree:
    """Run `budget` extra simulations rooted at `target_node`.

    UCB selection inside the expansion treats the target as its root
    (its own visit count feeds the exploration term). New node ids
    continue above all existing ids; existing statistics only grow.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    node = tree.node(target_node)
    if node is None:
        raise TargetMissing(f"node {target_node} not in tree")
    if node.terminal_kind is not None:
        raise TargetTerminal(f"node {target_node} is terminal ({node.terminal_kind})")

    engine = _Engine(grid, tree, params, random.Random(seed), local_root=node)
    for _ in range(budget):
        engine.simulate(forced_first=forced_action)

    tree.metadata.expansions.append(ExpansionRecord(
        target_node=target_node,
        forced_action=forced_action,
        budget=budget,
        seed=seed,
        created_at=created_at,
    ))
    tree.invalidate_indexes()
    return tree
