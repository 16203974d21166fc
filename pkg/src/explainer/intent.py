"""Question -> structured intent, and reference resolution against a tree.

The model's structured reply is parsed strictly: one repair retry that
re-prompts with the parse error, then UnparseableIntent. Resolution
never invents node ids; anything that cannot be located in the tree is
recorded as a failure for the answerability stage to act on.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .env import ACTION_NAMES, Action
from .errors import UnknownAction, UnparseableIntent
from .llm import STRUCTURED_OBJECT, ChatRequest
from .prompts import load_prompt
from .trace import RecordedTree, find_node

QUESTION_TYPES = ("why_action", "why_not_action", "what_if", "path_why", "general")
ACTION_REQUIRED = ("why_action", "why_not_action", "what_if")


@dataclass
class StructuredIntent:
    question_type: str
    target_state: int | str | None = None  # int, "current", or None
    target_action: str | None = None       # display name, e.g. "Up"
    target_path: list[tuple[int | None, str]] | None = None
    raw_question: str = field(default="", compare=False)

    def schema_errors(self) -> list[str]:
        errors = []
        if self.question_type not in QUESTION_TYPES:
            errors.append(f"unknown question_type {self.question_type!r}")
            return errors
        if self.question_type in ACTION_REQUIRED and not self.target_action:
            errors.append(f"{self.question_type} requires target_action")
        if self.question_type == "path_why":
            if not self.target_path:
                errors.append("path_why requires a nonempty target_path")
        if self.question_type == "general":
            if self.target_state is not None or self.target_action or self.target_path:
                errors.append("general takes no targets")
        return errors


def canonical_action_name(name: str) -> str:
    return name.strip().capitalize()


def _parse_state(value, where: str) -> int | str | None:
    if value is None or isinstance(value, int):
        return value
    if isinstance(value, str):
        text = value.strip().lower()
        if text == "current":
            return "current"
        if text.lstrip("-").isdigit():
            return int(text)
    raise ValueError(f"{where}: bad state {value!r}")


def parse_intent_payload(text: str, raw_question: str = "") -> StructuredIntent:
    """Strictly parse one structured reply into an intent.

    Raises ValueError with a description usable as a repair prompt.
    """
    body = text.strip()
    if body.startswith("```"):
        body = body.strip("`")
        if body.startswith("json"):
            body = body[4:]
    start, end = body.find("{"), body.rfind("}")
    if start < 0 or end <= start:
        raise ValueError("no JSON object found in reply")
    try:
        doc = json.loads(body[start:end + 1])
    except json.JSONDecodeError as exc:
        raise ValueError(f"reply is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ValueError("reply must be a JSON object")
    if "question_type" not in doc:
        raise ValueError("reply lacks question_type")

    action = doc.get("target_action")
    if action is not None:
        if not isinstance(action, str):
            raise ValueError(f"target_action must be a string, got {action!r}")
        action = canonical_action_name(action)

    path = doc.get("target_path")
    parsed_path = None
    if path is not None:
        if not isinstance(path, list) or not path:
            raise ValueError("target_path must be a nonempty list of [state, action] pairs")
        parsed_path = []
        for i, entry in enumerate(path):
            if not isinstance(entry, (list, tuple)) or len(entry) != 2:
                raise ValueError(f"target_path[{i}] must be a [state, action] pair")
            state = _parse_state(entry[0], f"target_path[{i}]")
            if state == "current":
                state = None
            if not isinstance(entry[1], str):
                raise ValueError(f"target_path[{i}] action must be a string")
            parsed_path.append((state, canonical_action_name(entry[1])))

    intent = StructuredIntent(
        question_type=doc["question_type"],
        target_state=_parse_state(doc.get("target_state"), "target_state"),
        target_action=action,
        target_path=parsed_path,
        raw_question=raw_question,
    )
    errors = intent.schema_errors()
    if errors:
        raise ValueError("; ".join(errors))
    return intent


def tree_summary(tree: RecordedTree) -> str:
    """Grounding context handed to the intent prompt."""
    states = sorted({n.state for n in tree.nodes})
    return "\n".join([
        f"root state: {tree.root.state}",
        f"decision step: {tree.metadata.decision_step}",
        f"actions: {', '.join(a.display_name for a in Action)}",
        f"recorded simulations: {tree.root.visits}",
        f"states in tree: {', '.join(str(s) for s in states)}",
    ])


def extract_intent(question: str, summary: str, client, prompt_name: str = "baseline") -> StructuredIntent:
    if not question.strip():
        raise UnparseableIntent("empty question")
    system = load_prompt("intent", prompt_name)
    user = f"Tree summary:\n{summary}\n\nQuestion: {question}"
    request = ChatRequest(model=client.model, system_prompt=system, user_message=user,
                          temperature=0.0, response_format_hint=STRUCTURED_OBJECT)
    reply = client.complete(request)
    try:
        return parse_intent_payload(reply.text, raw_question=question)
    except ValueError as first_error:
        repair = (f"{user}\n\nYour previous reply could not be used: {first_error}. "
                  f"Reply again with exactly one JSON object and nothing else.")
        retry = client.complete(ChatRequest(
            model=client.model, system_prompt=system, user_message=repair,
            temperature=0.0, response_format_hint=STRUCTURED_OBJECT))
        try:
            return parse_intent_payload(retry.text, raw_question=question)
        except ValueError as second_error:
            raise UnparseableIntent(
                f"could not parse intent after repair retry: {second_error}. "
                f"Please rephrase the question.") from None


@dataclass
class PathHop:
    """One resolved step of a path question."""

    state: int | None      # resolved (or annotated) state the hop acts from
    action: Action
    node_id: int | None    # None when unresolved in this tree


@dataclass
class ResolvedIntent:
    intent: StructuredIntent
    node_id: int | None = None
    edge_refs: list[tuple[int, Action]] = field(default_factory=list)
    path_hops: list[PathHop] | None = None
    failures: list[str] = field(default_factory=list)


def _lookup_action(name: str) -> Action:
    action = ACTION_NAMES.get(canonical_action_name(name))
    if action is None:
        raise UnknownAction(f"unknown action {name!r}; vocabulary is "
                            f"{', '.join(a.display_name for a in Action)}")
    return action


def resolve_references(intent: StructuredIntent, tree: RecordedTree) -> ResolvedIntent:
    """Locate the intent's targets in one recorded tree.

    "current" means the root of the questioned tree. Path entries with
    no stated intermediate state follow the previous edge's
    most-visited outcome. Unresolvable references are recorded, not
    fatal; only an action outside the vocabulary raises.
    """
    resolved = ResolvedIntent(intent=intent)

    if intent.question_type == "general":
        resolved.node_id = tree.root.node_id
        return resolved

    if intent.question_type == "path_why":
        resolved.path_hops = []
        node_id: int | None = None
        for i, (state, action_name) in enumerate(intent.target_path or []):
            action = _lookup_action(action_name)
            if i == 0:
                if state is None:
                    node_id = tree.root.node_id
                else:
                    node_id = find_node(tree, state, "root_first")
                    if node_id is None:
                        resolved.failures.append(f"state {state} not recorded in tree")
            else:
                prev = resolved.path_hops[-1]
                node_id = None
                if prev.node_id is not None:
                    edge = tree.edge(prev.node_id, prev.action)
                    if edge is None or not edge.outcome_counts:
                        resolved.failures.append(
                            f"no recorded transition out of state {prev.state} "
                            f"via {prev.action.display_name}")
                    else:
                        if state is None:
                            # Most-visited outcome; ties to lowest state id.
                            state = min(edge.outcome_counts,
                                        key=lambda s: (-edge.outcome_counts[s], s))
                        node_id = edge.children.get(state)
                        if node_id is None:
                            resolved.failures.append(
                                f"transition from state {prev.state} "
                                f"{prev.action.display_name} to state {state} not recorded")
            hop_state = state
            if node_id is not None:
                hop_state = tree.node(node_id).state
            resolved.path_hops.append(PathHop(state=hop_state, action=action, node_id=node_id))
        if resolved.path_hops:
            resolved.node_id = resolved.path_hops[0].node_id
            resolved.edge_refs = [(h.node_id, h.action) for h in resolved.path_hops
                                  if h.node_id is not None]
        return resolved

    # Node-scoped types: why_action / why_not_action / what_if.
    state = intent.target_state
    if state in (None, "current"):
        resolved.node_id = tree.root.node_id
    else:
        resolved.node_id = find_node(tree, state, "root_first")
        if resolved.node_id is None:
            resolved.failures.append(f"state {state} not recorded in tree")
    if intent.target_action:
        action = _lookup_action(intent.target_action)
        if resolved.node_id is not None:
            resolved.edge_refs = [(resolved.node_id, action)]
    return resolved
