"""Recorded search tree: data model, file format, validation, queries.

A recorded tree is the single source of evidence for every explanation,
so the format is bit-exact and heavily validated. Files are canonical
JSON: fixed key order, nodes ascending by id, edges sorted by
(owner, action), numeric map keys sorted, floats at full round-trip
precision. Serializing the same tree twice always yields identical
bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Iterable

from .env import Action, parse_map
from .errors import FormatVersionUnsupported, SchemaViolation

FORMAT_VERSION = 1

TERMINAL_KINDS = ("Goal", "Hole")


@dataclass(slots=True)
class DecisionNode:
    node_id: int
    state: int
    parent_node: int | None
    parent_action: Action | None
    visits: int
    terminal_kind: str | None
    depth: int


@dataclass(slots=True)
class ActionEdge:
    owner: int
    action: Action
    visits: int = 0
    value_sum: float = 0.0
    outcome_counts: dict[int, int] = field(default_factory=dict)
    failure_count: int = 0
    children: dict[int, int] = field(default_factory=dict)

    @property
    def q(self) -> float:
        """Mean discounted return; 0 for unexplored edges."""
        return self.value_sum / self.visits if self.visits else 0.0


@dataclass(frozen=True)
class RiskEstimate:
    value: float
    support: int


@dataclass
class ExpansionRecord:
    target_node: int
    forced_action: Action | None
    budget: int
    seed: int
    created_at: str | None


@dataclass
class TraceMetadata:
    env: str
    map_text: str
    decision_step: int
    params: "SearchParams"
    chosen_action: Action
    created_at: str | None = None
    expansions: list[ExpansionRecord] = field(default_factory=list)


@dataclass
class RecordedTree:
    format_version: int
    metadata: TraceMetadata
    nodes: list[DecisionNode]
    edges: list[ActionEdge]

    def __post_init__(self):
        self._node_index: dict[int, DecisionNode] | None = None
        self._edge_index: dict[int, list[ActionEdge]] | None = None

    # Lookups are index-backed; anything that mutates structure must
    # call invalidate_indexes() afterwards.
    def invalidate_indexes(self) -> None:
        self._node_index = None
        self._edge_index = None

    def _indexes(self) -> tuple[dict[int, DecisionNode], dict[int, list[ActionEdge]]]:
        if self._node_index is None or self._edge_index is None:
            self._node_index = {n.node_id: n for n in self.nodes}
            edge_index: dict[int, list[ActionEdge]] = {}
            for e in self.edges:
                edge_index.setdefault(e.owner, []).append(e)
            self._edge_index = edge_index
        return self._node_index, self._edge_index

    @property
    def root(self) -> DecisionNode:
        for n in self.nodes:
            if n.parent_node is None:
                return n
        raise ValueError("tree has no root")

    def node(self, node_id: int) -> DecisionNode | None:
        return self._indexes()[0].get(node_id)

    def edges_at(self, node_id: int) -> list[ActionEdge]:
        return self._indexes()[1].get(node_id, [])

    def edge(self, node_id: int, action: Action) -> ActionEdge | None:
        for e in self.edges_at(node_id):
            if e.action == action:
                return e
        return None

    @property
    def max_depth(self) -> int:
        return max(n.depth for n in self.nodes)


@dataclass(frozen=True)
class Violation:
    entity_kind: str  # "tree" | "node" | "edge"
    entity_id: str
    rule: str
    message: str


def edge_id(owner: int, action: int) -> str:
    return f"edge:{owner}:{int(action)}"


def node_id_str(node_id: int) -> str:
    return f"node:{node_id}"


def best_root_action(tree: RecordedTree) -> Action:
    """Recommendation rule: max visits, then max Q, then lowest index.

    A root with no visited (or no) edges falls back to the lowest
    indexed action.
    """
    return best_action_at(tree, tree.root.node_id)


def best_action_at(tree: RecordedTree, node_id: int) -> Action:
    edges = tree.edges_at(node_id)
    if not edges:
        return Action(0)
    best = min(edges, key=lambda e: (-e.visits, -e.q, int(e.action)))
    return Action(best.action)


def risk(edge: ActionEdge) -> RiskEstimate | None:
    """Empirical hole-termination frequency of the edge; absent at N=0."""
    if edge.visits == 0:
        return None
    return RiskEstimate(value=edge.failure_count / edge.visits, support=edge.visits)


def find_node(tree: RecordedTree, state: int, scope: str = "root_first") -> int | None:
    """Resolve an MDP state to one node id.

    The same state can appear at many nodes; `root_first` prefers the
    root, then the shallowest match (ties by visits, then id), while
    `most_visited` prefers the highest-visit match.
    """
    if scope not in ("root_first", "most_visited"):
        raise ValueError(f"unknown scope {scope!r}")
    matches = [n for n in tree.nodes if n.state == state]
    if not matches:
        return None
    if scope == "root_first":
        root = tree.root
        if root.state == state:
            return root.node_id
        best = min(matches, key=lambda n: (n.depth, -n.visits, n.node_id))
    else:
        best = min(matches, key=lambda n: (-n.visits, n.depth, n.node_id))
    return best.node_id


# --- serialization -------------------------------------------------------


def _node_doc(n: DecisionNode) -> dict:
    return {
        "node_id": n.node_id,
        "state": n.state,
        "parent_node": n.parent_node,
        "parent_action": None if n.parent_action is None else int(n.parent_action),
        "visits": n.visits,
        "terminal_kind": n.terminal_kind,
        "depth": n.depth,
    }


def _edge_doc(e: ActionEdge) -> dict:
    return {
        "owner": e.owner,
        "action": int(e.action),
        "visits": e.visits,
        "value_sum": e.value_sum,
        "outcome_counts": {str(k): e.outcome_counts[k] for k in sorted(e.outcome_counts)},
        "failure_count": e.failure_count,
        "children": {str(k): e.children[k] for k in sorted(e.children)},
    }


def tree_to_doc(tree: RecordedTree) -> dict:
    md = tree.metadata
    p = md.params
    return {
        "format_version": tree.format_version,
        "metadata": {
            "env": md.env,
            "map": md.map_text,
            "decision_step": md.decision_step,
            "params": {
                "iteration_budget": p.iteration_budget,
                "exploration_c": p.exploration_c,
                "gamma": p.gamma,
                "rollout_depth_cap": p.rollout_depth_cap,
                "seed": p.seed,
            },
            "chosen_action": int(md.chosen_action),
            "created_at": md.created_at,
            "expansions": [
                {
                    "target_node": x.target_node,
                    "forced_action": None if x.forced_action is None else int(x.forced_action),
                    "budget": x.budget,
                    "seed": x.seed,
                    "created_at": x.created_at,
                }
                for x in md.expansions
            ],
        },
        "nodes": [_node_doc(n) for n in sorted(tree.nodes, key=lambda n: n.node_id)],
        "edges": [_edge_doc(e) for e in sorted(tree.edges, key=lambda e: (e.owner, int(e.action)))],
    }


def serialize_tree(tree: RecordedTree) -> str:
    return json.dumps(tree_to_doc(tree), indent=2, ensure_ascii=False) + "\n"


def save_trace(tree: RecordedTree, destination: str | Path | IO[str]) -> None:
    """Write the tree in canonical form; refuses invalid trees."""
    violations = validate_trace(tree)
    if violations:
        first = violations[0]
        raise SchemaViolation(first.entity_id, f"{first.rule}: {first.message}")
    text = serialize_tree(tree)
    if hasattr(destination, "write"):
        destination.write(text)
    else:
        Path(destination).write_text(text)


def _require(doc: dict, key: str, path: str):
    if key not in doc:
        raise SchemaViolation(f"{path}.{key}", "missing field")
    return doc[key]


def _int_keyed(doc: dict, path: str) -> dict[int, int]:
    out = {}
    for k, v in doc.items():
        try:
            out[int(k)] = v
        except (TypeError, ValueError):
            raise SchemaViolation(f"{path}.{k}", "key is not an integer") from None
    return out


def _action_or_none(value, path: str) -> Action | None:
    if value is None:
        return None
    try:
        return Action(value)
    except ValueError:
        raise SchemaViolation(path, f"not an action: {value!r}") from None


def doc_to_tree(doc: dict) -> RecordedTree:
    from .mcts import SearchParams  # deferred: mcts builds on this module

    if not isinstance(doc, dict):
        raise SchemaViolation("$", "document is not an object")
    version = _require(doc, "format_version", "$")
    if version != FORMAT_VERSION:
        raise FormatVersionUnsupported(f"format_version {version} unsupported (expected {FORMAT_VERSION})")

    md = _require(doc, "metadata", "$")
    pd = _require(md, "params", "metadata")
    params = SearchParams(
        iteration_budget=_require(pd, "iteration_budget", "metadata.params"),
        exploration_c=_require(pd, "exploration_c", "metadata.params"),
        gamma=_require(pd, "gamma", "metadata.params"),
        rollout_depth_cap=_require(pd, "rollout_depth_cap", "metadata.params"),
        seed=_require(pd, "seed", "metadata.params"),
    )
    expansions = []
    for i, x in enumerate(md.get("expansions", [])):
        expansions.append(ExpansionRecord(
            target_node=_require(x, "target_node", f"metadata.expansions[{i}]"),
            forced_action=_action_or_none(x.get("forced_action"), f"metadata.expansions[{i}].forced_action"),
            budget=_require(x, "budget", f"metadata.expansions[{i}]"),
            seed=_require(x, "seed", f"metadata.expansions[{i}]"),
            created_at=x.get("created_at"),
        ))
    metadata = TraceMetadata(
        env=_require(md, "env", "metadata"),
        map_text=_require(md, "map", "metadata"),
        decision_step=_require(md, "decision_step", "metadata"),
        params=params,
        chosen_action=Action(_require(md, "chosen_action", "metadata")),
        created_at=md.get("created_at"),
        expansions=expansions,
    )

    nodes = []
    for i, nd in enumerate(_require(doc, "nodes", "$")):
        path = f"nodes[{i}]"
        kind = _require(nd, "terminal_kind", path)
        if kind is not None and kind not in TERMINAL_KINDS:
            raise SchemaViolation(f"{path}.terminal_kind", f"bad value {kind!r}")
        nodes.append(DecisionNode(
            node_id=_require(nd, "node_id", path),
            state=_require(nd, "state", path),
            parent_node=nd.get("parent_node"),
            parent_action=_action_or_none(nd.get("parent_action"), f"{path}.parent_action"),
            visits=_require(nd, "visits", path),
            terminal_kind=kind,
            depth=_require(nd, "depth", path),
        ))

    edges = []
    for i, ed in enumerate(_require(doc, "edges", "$")):
        path = f"edges[{i}]"
        action = _action_or_none(_require(ed, "action", path), f"{path}.action")
        if action is None:
            raise SchemaViolation(f"{path}.action", "action may not be null")
        edges.append(ActionEdge(
            owner=_require(ed, "owner", path),
            action=action,
            visits=_require(ed, "visits", path),
            value_sum=_require(ed, "value_sum", path),
            outcome_counts=_int_keyed(_require(ed, "outcome_counts", path), f"{path}.outcome_counts"),
            failure_count=_require(ed, "failure_count", path),
            children=_int_keyed(_require(ed, "children", path), f"{path}.children"),
        ))

    return RecordedTree(format_version=version, metadata=metadata, nodes=nodes, edges=edges)


def load_trace(source: str | Path | IO[str]) -> RecordedTree:
    if hasattr(source, "read"):
        text = source.read()
    else:
        text = Path(source).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaViolation("$", f"not valid JSON: {exc}") from None
    return doc_to_tree(doc)


# --- validation ----------------------------------------------------------


def validate_trace(tree: RecordedTree) -> list[Violation]:
    """Check every structural invariant; returns one entry per breach.

    Violations are data, not errors: an empty list means the tree is
    sound. Link rules (parent <-> child) are reported against both
    entities involved so a single corrupted field is always attributed
    to the entity that holds it.
    """
    v: list[Violation] = []

    def tv(rule, message):
        v.append(Violation("tree", "tree", rule, message))

    def nv(n, rule, message):
        v.append(Violation("node", node_id_str(n.node_id), rule, message))

    def ev(e, rule, message):
        v.append(Violation("edge", edge_id(e.owner, e.action), rule, message))

    if tree.format_version != FORMAT_VERSION:
        tv("FormatVersion", f"format_version {tree.format_version} != {FORMAT_VERSION}")

    try:
        grid = parse_map(tree.metadata.map_text)
    except ValueError as exc:
        tv("MapParses", str(exc))
        grid = None

    nodes_by_id: dict[int, DecisionNode] = {}
    for n in tree.nodes:
        if n.node_id in nodes_by_id:
            nv(n, "NodeIdUnique", f"duplicate node_id {n.node_id}")
        nodes_by_id[n.node_id] = n

    roots = [n for n in tree.nodes if n.parent_node is None]
    if len(roots) != 1:
        tv("SingleRoot", f"expected exactly one root, found {len(roots)}")
    root = roots[0] if len(roots) == 1 else None

    edges_by_owner: dict[int, list[ActionEdge]] = {}
    edge_keys: set[tuple[int, int]] = set()
    for e in tree.edges:
        key = (e.owner, int(e.action))
        if key in edge_keys:
            ev(e, "EdgeUnique", f"duplicate edge for owner {e.owner} action {int(e.action)}")
        edge_keys.add(key)
        edges_by_owner.setdefault(e.owner, []).append(e)
        if e.owner not in nodes_by_id:
            ev(e, "OwnerResolves", f"owner node {e.owner} does not exist")

    for n in tree.nodes:
        if n.visits < 1:
            nv(n, "NodeVisits", f"visits {n.visits} < 1")
        if grid is not None and 0 <= n.state < grid.n_states:
            expected = None
            if grid.is_terminal(n.state):
                expected = grid.cell(n.state).name.capitalize()
            if n.terminal_kind != expected:
                nv(n, "TerminalKindMatchesMap",
                   f"terminal_kind {n.terminal_kind!r} but map cell implies {expected!r}")
        elif grid is not None:
            nv(n, "StateInRange", f"state {n.state} outside map")

        if n.parent_node is None:
            if n.depth != 0:
                nv(n, "RootDepth", f"root depth {n.depth} != 0")
            if n.parent_action is not None:
                nv(n, "RootParent", "root must not have a parent action")
        else:
            parent = nodes_by_id.get(n.parent_node)
            if parent is None:
                nv(n, "ParentResolves", f"parent node {n.parent_node} does not exist")
            else:
                if n.depth != parent.depth + 1:
                    nv(n, "DepthChain", f"depth {n.depth} != parent depth {parent.depth} + 1")
                if n.parent_action is None:
                    nv(n, "ParentActionPresent", "non-root node lacks parent_action")
                else:
                    owner_edges = edges_by_owner.get(n.parent_node, [])
                    link = next((e for e in owner_edges if e.action == n.parent_action), None)
                    if link is None or link.children.get(n.state) != n.node_id:
                        msg = (f"parent edge ({n.parent_node}, {int(n.parent_action)}) does not "
                               f"link back to node {n.node_id} via state {n.state}")
                        nv(n, "ParentChildLink", msg)
                        probe = link if link is not None else ActionEdge(owner=n.parent_node, action=n.parent_action)
                        ev(probe, "ParentChildLink", msg)

        owned = edges_by_owner.get(n.node_id, [])
        if n.terminal_kind is not None and owned:
            nv(n, "TerminalNoEdges", f"terminal node owns {len(owned)} edges")
            for e in owned:
                ev(e, "TerminalNoEdges", f"owner node {n.node_id} is terminal")
        edge_total = sum(e.visits for e in owned)
        if edge_total > n.visits:
            nv(n, "EdgeVisitBound", f"sum of edge visits {edge_total} > node visits {n.visits}")

    # Acyclicity by node identity: every parent chain must reach a root.
    for n in tree.nodes:
        seen = set()
        cur: DecisionNode | None = n
        while cur is not None and cur.parent_node is not None:
            if cur.node_id in seen:
                nv(n, "Acyclic", f"parent chain from node {n.node_id} cycles")
                break
            seen.add(cur.node_id)
            cur = nodes_by_id.get(cur.parent_node)

    for e in tree.edges:
        outcome_total = sum(e.outcome_counts.values())
        if outcome_total != e.visits:
            ev(e, "OutcomeSum", f"outcome counts sum {outcome_total} != edge visits {e.visits}")
        if not 0 <= e.failure_count <= e.visits:
            ev(e, "FailureBound", f"failure_count {e.failure_count} outside [0, {e.visits}]")
        if any(c < 1 for c in e.outcome_counts.values()):
            ev(e, "OutcomeCountsPositive", "zero or negative outcome count recorded")
        # Per-simulation returns lie in [0, 1] under this reward model.
        if not -1e-9 <= e.value_sum <= e.visits + 1e-9:
            ev(e, "ValueSumBound", f"value_sum {e.value_sum} outside [0, visits]")
        if e.visits == 0 and (e.value_sum != 0.0 or e.outcome_counts or e.children or e.failure_count):
            ev(e, "UnvisitedEdgeEmpty", "edge with zero visits carries statistics")
        extra = set(e.children) - set(e.outcome_counts)
        if extra:
            ev(e, "ChildrenKeysSubset", f"children for unseen outcomes {sorted(extra)}")
        for ns, child_id in e.children.items():
            child = nodes_by_id.get(child_id)
            if child is None:
                ev(e, "ChildResolves", f"child node {child_id} does not exist")
            elif child.state != ns:
                ev(e, "ChildStateMatch", f"child node {child_id} has state {child.state}, keyed {ns}")

    # Every non-root node must be referenced by some edge's children map.
    referenced = {cid for e in tree.edges for cid in e.children.values()}
    for n in tree.nodes:
        if n.parent_node is not None and n.node_id not in referenced:
            nv(n, "NodeReferenced", f"node {n.node_id} is referenced by no edge")

    # The recorded decision must match the recommendation rule, unless
    # targeted expansion later shifted the counts (the original
    # decision is then preserved on purpose).
    if root is not None and not tree.metadata.expansions:
        recomputed = best_root_action(tree)
        if tree.metadata.chosen_action != recomputed:
            tv("ChosenAction",
               f"metadata chosen_action {int(tree.metadata.chosen_action)} != recomputed {int(recomputed)}")

    return v
