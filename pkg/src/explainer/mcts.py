"""Anytime UCT search producing a fully recorded tree.

Classic UCT: bandit descent with UCB1, untried-actions-first expansion
(one new node per simulation), uniform-random rollouts, discounted
backups. Stochastic transitions are recorded as per-edge outcome counts
with children keyed by (action, next_state); there are no explicit
chance nodes. Every simulation that ends in a hole also bumps the
failure count of every edge it traversed, which is what the risk
statistic in explanations is built from.

The exploration constant, discount, and rollout cap defaults are our
own choices, surfaced in SearchParams.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, replace
from functools import lru_cache

from .env import Action, GridMap, TransitionOutcome, transition_distribution
from .errors import PathDetached, TerminalRoot
from .trace import (
    FORMAT_VERSION,
    ActionEdge,
    DecisionNode,
    RecordedTree,
    TraceMetadata,
    best_root_action,
)

ENV_NAME = "frozenlake"


@dataclass(frozen=True)
class SearchParams:
    # rollout_depth_cap defaults to 0: on this environment, random
    # playout returns are nearly pure noise (uniform-policy value at the
    # start is ~0.012 with ~0.08 per-simulation spread), and at 50k
    # simulations that noise reliably drowns the ~0.014 value gap
    # between the best and second-best root actions. Terminal-only
    # backups separate them cleanly. Rollouts stay available for
    # configurations that want them.
    iteration_budget: int = 1000
    exploration_c: float = 1.414
    gamma: float = 0.99
    rollout_depth_cap: int = 0
    seed: int = 0

    def __post_init__(self):
        if self.iteration_budget < 1:
            raise ValueError("iteration_budget must be >= 1")
        if not (math.isfinite(self.exploration_c) and self.exploration_c >= 0):
            raise ValueError("exploration_c must be finite and >= 0")
        if not (math.isfinite(self.gamma) and 0 < self.gamma <= 1):
            raise ValueError("gamma must be in (0, 1]")
        if self.rollout_depth_cap < 0:
            raise ValueError("rollout_depth_cap must be >= 0")


@dataclass
class SimulationPath:
    """Backpropagation carrier for one simulation.

    steps holds (node, edge, sampled outcome) triples from the top of
    the walk downward; terminal_kind says how the simulation ended:
    at a terminal state (Goal/Hole, during descent or rollout), by
    exhausting the rollout cap (DepthCap), or at the leaf itself (Leaf).
    """

    steps: list[tuple[DecisionNode, ActionEdge, TransitionOutcome]]
    leaf: DecisionNode
    terminal_kind: str


@lru_cache(maxsize=16)
def _env_tables(grid: GridMap):
    """Flattened transition tables for the hot search loops."""
    n = grid.n_states
    is_hole = [False] * n
    is_goal = [False] * n
    descent: list[list[tuple[tuple[float, TransitionOutcome], ...]] | None] = []
    rollout_cum: list[list[tuple[tuple[float, int], ...]] | None] = []
    for s in range(n):
        kind = grid.cell(s).name
        is_hole[s] = kind == "HOLE"
        is_goal[s] = kind == "GOAL"
        if grid.is_terminal(s):
            descent.append(None)
            rollout_cum.append(None)
            continue
        per_action = []
        per_action_light = []
        for a in Action:
            acc = 0.0
            cum = []
            light = []
            for o in transition_distribution(grid, s, a):
                acc += o.probability
                cum.append((acc, o))
                light.append((acc, o.next_state))
            per_action.append(tuple(cum))
            per_action_light.append(tuple(light))
        descent.append(per_action)
        rollout_cum.append(per_action_light)
    return descent, rollout_cum, is_hole, is_goal


def select_edge(edges: list[ActionEdge], node_visits: int, c: float) -> ActionEdge:
    """UCB1 pick over action-ordered edges; untried edges come first.

    Ties resolve to the lowest action index (callers pass edges sorted
    by action).
    """
    for e in edges:
        if e.visits == 0:
            return e
    log_n = math.log(node_visits)
    best = edges[0]
    best_score = -math.inf
    for e in edges:
        score = e.value_sum / e.visits + c * math.sqrt(log_n / e.visits)
        if score > best_score:
            best_score = score
            best = e
    return best


def select_ucb(edges: list[ActionEdge], node_visits: int, c: float) -> Action:
    """Action-returning wrapper around select_edge for callers holding
    edges in arbitrary order."""
    ordered = sorted(edges, key=lambda e: int(e.action))
    return Action(select_edge(ordered, node_visits, c).action)


def rollout(grid: GridMap, state: int, params: SearchParams, rng) -> float:
    """Discounted return of one uniform-random playout from `state`.

    Terminal start states and a zero depth cap return 0.0. Consumes the
    rng exactly like the in-search rollout: one draw for the action and
    one for the slip outcome (none when only one outcome exists).
    """
    value, _ = _rollout_impl(_env_tables(grid), state, params.gamma,
                             params.rollout_depth_cap, rng)
    return value


def _rollout_impl(tables, state: int, gamma: float, cap: int, rng) -> tuple[float, str]:
    _, rollout_cum, is_hole, is_goal = tables
    if is_hole[state]:
        return 0.0, "Hole"
    if is_goal[state]:
        return 0.0, "Goal"
    if cap == 0:
        return 0.0, "Leaf"
    rng_random = rng.random
    discount = 1.0
    for _ in range(cap):
        outs = rollout_cum[state][int(rng_random() * 4.0)]
        if len(outs) == 1:
            state = outs[0][1]
        else:
            r = rng_random()
            state = outs[-1][1]
            for threshold, ns in outs:
                if r < threshold:
                    state = ns
                    break
        if is_goal[state]:
            return discount, "Goal"
        if is_hole[state]:
            return 0.0, "Hole"
        discount *= gamma
    return 0.0, "DepthCap"


def backpropagate(tree: RecordedTree, path: SimulationPath, leaf_value: float,
                  gamma: float, root: DecisionNode | None = None) -> None:
    """Fold one simulation's result into the tree statistics.

    Walking leaf to root: every touched node's visit count grows by
    one; every traversed edge accumulates the discounted return from
    that edge onward (transition reward plus gamma times downstream
    value), its outcome count for the sampled next state, and, when the
    simulation ended in a hole, its failure count.
    """
    top = path.steps[0][0] if path.steps else path.leaf
    expected = root if root is not None else tree.root
    if top is not expected:
        raise PathDetached("simulation path does not start at the search root")
    failed = path.terminal_kind == "Hole"
    path.leaf.visits += 1
    value = leaf_value
    for node, edge, outcome in reversed(path.steps):
        value = outcome.reward + gamma * value
        edge.visits += 1
        edge.value_sum += value
        counts = edge.outcome_counts
        ns = outcome.next_state
        counts[ns] = counts.get(ns, 0) + 1
        if failed:
            edge.failure_count += 1
        node.visits += 1


class _Engine:
    """Simulation driver over a (possibly pre-existing) recorded tree.

    Runs simulations rooted at `local_root`; a full search uses the
    tree root, targeted expansion uses an interior node. Mutates the
    tree in place and tracks which node each simulation terminated at
    (the accounting behind N(s) - sum of edge visits).
    """

    def __init__(self, grid: GridMap, tree: RecordedTree, params: SearchParams,
                 rng: random.Random, local_root: DecisionNode):
        self.grid = grid
        self.tree = tree
        self.params = params
        self.rng = rng
        self.local_root = local_root
        self.tables = _env_tables(grid)
        self.terminations: dict[int, int] = {}
        self.node_of: dict[int, DecisionNode] = {n.node_id: n for n in tree.nodes}
        self.edges_of: dict[int, list[ActionEdge]] = {}
        for e in tree.edges:
            self.edges_of.setdefault(e.owner, []).append(e)
        for edges in self.edges_of.values():
            edges.sort(key=lambda e: int(e.action))
        self.next_id = max(self.node_of) + 1 if self.node_of else 0

    def make_node(self, state: int, parent: DecisionNode | None,
                  parent_action: Action | None) -> DecisionNode:
        kind = None
        cell = self.grid.cell(state).name
        if cell == "HOLE":
            kind = "Hole"
        elif cell == "GOAL":
            kind = "Goal"
        node = DecisionNode(
            node_id=self.next_id,
            state=state,
            parent_node=None if parent is None else parent.node_id,
            parent_action=parent_action,
            visits=0,
            terminal_kind=kind,
            depth=0 if parent is None else parent.depth + 1,
        )
        self.next_id += 1
        self.tree.nodes.append(node)
        self.node_of[node.node_id] = node
        if kind is None:
            edges = [ActionEdge(owner=node.node_id, action=a) for a in Action]
            self.tree.edges.extend(edges)
            self.edges_of[node.node_id] = edges
        return node

    def simulate(self, forced_first: Action | None = None) -> None:
        params = self.params
        gamma = params.gamma
        c = params.exploration_c
        rng = self.rng
        descent, _, _, _ = self.tables
        node = self.local_root
        steps: list[tuple[DecisionNode, ActionEdge, TransitionOutcome]] = []
        leaf = node
        leaf_value = 0.0
        end_kind = "Leaf"
        first = True
        while True:
            if node.terminal_kind is not None:
                leaf = node
                end_kind = node.terminal_kind
                break
            edges = self.edges_of[node.node_id]
            if first and forced_first is not None:
                edge = edges[int(forced_first)]
            else:
                edge = select_edge(edges, node.visits, c)
            first = False
            cum = descent[node.state][int(edge.action)]
            if len(cum) == 1:
                outcome = cum[0][1]
            else:
                r = rng.random()
                outcome = cum[-1][1]
                for threshold, o in cum:
                    if r < threshold:
                        outcome = o
                        break
            steps.append((node, edge, outcome))
            child_id = edge.children.get(outcome.next_state)
            if child_id is None:
                child = self.make_node(outcome.next_state, node, Action(edge.action))
                edge.children[outcome.next_state] = child.node_id
                leaf = child
                if child.terminal_kind is not None:
                    end_kind = child.terminal_kind
                else:
                    leaf_value, end_kind = _rollout_impl(
                        self.tables, child.state, gamma, params.rollout_depth_cap, rng)
                break
            node = self.node_of[child_id]
        path = SimulationPath(steps=steps, leaf=leaf, terminal_kind=end_kind)
        backpropagate(self.tree, path, leaf_value, gamma, root=self.local_root)
        self.terminations[leaf.node_id] = self.terminations.get(leaf.node_id, 0) + 1


class Search:
    """Resumable search session over one tree.

    run(k) executes k simulations and leaves the tree in a consistent,
    serializable state; calling run again continues the same stream, so
    run(k) followed by run(m) is byte-identical to run(k + m) under the
    same seed. The recorded iteration_budget always reflects the number
    of simulations actually executed.
    """

    def __init__(self, grid: GridMap, root_state: int, params: SearchParams,
                 decision_step: int = 0, env_name: str = ENV_NAME):
        if grid.is_terminal(root_state):
            raise TerminalRoot(f"root state {root_state} is terminal")
        self.grid = grid
        self.base_params = params
        tree = RecordedTree(
            format_version=FORMAT_VERSION,
            metadata=TraceMetadata(
                env=env_name,
                map_text=grid.to_text(),
                decision_step=decision_step,
                params=params,
                chosen_action=Action(0),
                created_at=None,
            ),
            nodes=[],
            edges=[],
        )
        self.engine = _Engine(grid, tree, params, random.Random(params.seed),
                              local_root=None)  # type: ignore[arg-type]
        root = self.engine.make_node(root_state, None, None)
        self.engine.local_root = root
        self.simulations_run = 0

    @property
    def tree(self) -> RecordedTree:
        return self.engine.tree

    @property
    def termination_counts(self) -> dict[int, int]:
        return self.engine.terminations

    def run(self, iterations: int) -> RecordedTree:
        for _ in range(iterations):
            self.engine.simulate()
        self.simulations_run += iterations
        tree = self.engine.tree
        tree.metadata.params = replace(self.base_params,
                                       iteration_budget=self.simulations_run)
        tree.invalidate_indexes()
        tree.metadata.chosen_action = best_root_action(tree)
        return tree


def plan(grid: GridMap, root_state: int, params: SearchParams,
         decision_step: int = 0) -> tuple[Action, RecordedTree]:
    """Run a full search and return (recommended action, recorded tree)."""
    search = Search(grid, root_state, params, decision_step=decision_step)
    tree = search.run(params.iteration_budget)
    return tree.metadata.chosen_action, tree
