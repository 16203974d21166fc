"""Deterministic evidence-sufficiency rules.

Decides whether a recorded tree holds enough visits on a question's
targets to justify an answer; when it does not, names the (state,
action) pairs where targeted expansion should begin. The thresholds
are explicit configuration, and a `detector` config hook exists so a
model-based detector could replace the rules later; only the rule set
is implemented.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .env import Action
from .intent import ResolvedIntent
from .trace import RecordedTree


class Reason(str, Enum):
    OK = "OK"
    NODE_MISSING = "NodeMissing"
    EDGE_MISSING = "EdgeMissing"
    EDGE_UNDEREXPLORED = "EdgeUnderexplored"
    PATH_BROKEN = "PathBroken"


@dataclass(frozen=True)
class EvidenceThresholds:
    min_node_visits: int = 1
    min_edge_visits: int = 10

    def __post_init__(self):
        if self.min_edge_visits < 1:
            raise ValueError("min_edge_visits must be >= 1")


@dataclass
class AnswerabilityVerdict:
    answerable: bool
    reasons: list[Reason]
    expansion_targets: list[tuple[int, Action | None]] = field(default_factory=list)


def _ok() -> AnswerabilityVerdict:
    return AnswerabilityVerdict(answerable=True, reasons=[Reason.OK])


def detect(resolved: ResolvedIntent, tree: RecordedTree,
           thresholds: EvidenceThresholds) -> AnswerabilityVerdict:
    """Pure rule evaluation; same inputs always yield the same verdict.

    general: always answerable. why/why-not: the target node must exist
    and EVERY edge there must clear the visit threshold, so the answer
    can cover all alternatives. what_if: only the asked edge must clear
    it. path_why: every hop's edge must clear it and consecutive
    outcome links must be recorded.
    """
    intent = resolved.intent

    if intent.question_type == "general":
        return _ok()

    if intent.question_type == "path_why":
        return _detect_path(resolved, tree, thresholds)

    # Node-scoped questions.
    state = intent.target_state
    if state in (None, "current"):
        state = tree.root.state
    action = None
    if resolved.edge_refs:
        action = resolved.edge_refs[0][1]
    elif intent.target_action:
        from .intent import _lookup_action
        action = _lookup_action(intent.target_action)

    node = tree.node(resolved.node_id) if resolved.node_id is not None else None
    if node is None or node.visits < thresholds.min_node_visits:
        return AnswerabilityVerdict(
            answerable=False, reasons=[Reason.NODE_MISSING],
            expansion_targets=[(state, action)])
    state = node.state
    edges = tree.edges_at(node.node_id)
    if not edges:
        # Terminal target: there is no edge evidence to collect.
        return AnswerabilityVerdict(
            answerable=False, reasons=[Reason.EDGE_MISSING],
            expansion_targets=[(state, action)])

    if intent.question_type == "what_if":
        edge = next((e for e in edges if e.action == action), None)
        if edge is None:
            return AnswerabilityVerdict(
                answerable=False, reasons=[Reason.EDGE_MISSING],
                expansion_targets=[(state, action)])
        if edge.visits < thresholds.min_edge_visits:
            return AnswerabilityVerdict(
                answerable=False, reasons=[Reason.EDGE_UNDEREXPLORED],
                expansion_targets=[(state, action)])
        return _ok()

    # why_action / why_not_action: contrastive answers need evidence
    # for every alternative, not only the asked action.
    weak = [e for e in sorted(edges, key=lambda e: int(e.action))
            if e.visits < thresholds.min_edge_visits]
    if weak:
        return AnswerabilityVerdict(
            answerable=False, reasons=[Reason.EDGE_UNDEREXPLORED],
            expansion_targets=[(state, Action(e.action)) for e in weak])
    return _ok()


def _detect_path(resolved: ResolvedIntent, tree: RecordedTree,
                 thresholds: EvidenceThresholds) -> AnswerabilityVerdict:
    hops = resolved.path_hops or []
    if not hops:
        return AnswerabilityVerdict(answerable=False, reasons=[Reason.NODE_MISSING],
                                    expansion_targets=[(tree.root.state, None)])
    for i, hop in enumerate(hops):
        if hop.node_id is None:
            if i == 0:
                return AnswerabilityVerdict(
                    answerable=False, reasons=[Reason.NODE_MISSING],
                    expansion_targets=[(hop.state, hop.action)])
            prev = hops[i - 1]
            return AnswerabilityVerdict(
                answerable=False, reasons=[Reason.PATH_BROKEN],
                expansion_targets=[(prev.state, prev.action)])
        node = tree.node(hop.node_id)
        edge = tree.edge(hop.node_id, hop.action)
        if node.terminal_kind is not None or edge is None:
            return AnswerabilityVerdict(
                answerable=False, reasons=[Reason.EDGE_MISSING],
                expansion_targets=[(node.state, hop.action)])
        if edge.visits < thresholds.min_edge_visits:
            return AnswerabilityVerdict(
                answerable=False, reasons=[Reason.EDGE_UNDEREXPLORED],
                expansion_targets=[(node.state, hop.action)])
    return _ok()
