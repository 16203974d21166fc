"""Evidence assembly, grounded answer generation, and grounding checks.

The evidence bundle is the only bridge between the tree and the
language model: every number rendered into the generation prompt is
copied from the bundle, and the bundle copies verbatim from the tree.
Statistics are shown to the model at three decimals but carried at full
precision here.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .env import ACTION_NAMES, Action
from .errors import EvidenceUnavailable, ExplainerError
from .intent import ResolvedIntent, StructuredIntent, canonical_action_name
from .llm import FREE_TEXT, ChatRequest
from .prompts import load_prompt, prompt_id
from .trace import RecordedTree, best_action_at, risk

DEFAULT_RISK_LEXICON = ("risk", "hole", "fall", "fail", "danger", "slip")


@dataclass
class ActionRow:
    action: Action
    visits: int
    q: float
    risk: float | None
    top_outcomes: list[tuple[int, int]]  # (next_state, count), most sampled first

    @property
    def name(self) -> str:
        return self.action.display_name

    @property
    def unexplored(self) -> bool:
        return self.visits == 0


@dataclass
class PathRow:
    state: int
    action: Action
    visits: int
    q: float
    risk: float | None
    most_visited_next: int | None


@dataclass
class EvidenceBundle:
    question_type: str
    target_state: int
    target_node_id: int
    target_visits: int
    target_depth: int
    chosen_action: Action | None
    action_rows: list[ActionRow]
    user_action: Action | None = None
    path_rows: list[PathRow] | None = None
    path_risk: float | None = None
    total_simulations: int = 0
    max_depth: int = 0
    node_count: int = 0
    root_action: Action | None = None
    expansion_note: str | None = None

    def risk_values(self) -> list[float]:
        values = [row.risk for row in self.action_rows if row.risk is not None]
        if self.path_rows:
            values.extend(row.risk for row in self.path_rows if row.risk is not None)
        if self.path_risk is not None:
            values.append(self.path_risk)
        return values

    def numeric_tokens(self) -> set[str]:
        """Every number the prompt renderer is allowed to emit."""
        tokens = {str(self.target_state), str(self.target_visits),
                  str(self.target_depth), str(self.total_simulations),
                  str(self.max_depth), str(self.node_count)}
        for row in self.action_rows:
            tokens.add(str(row.visits))
            tokens.add(f"{row.q:.3f}")
            if row.risk is not None:
                tokens.add(f"{row.risk:.3f}")
            for state, count in row.top_outcomes:
                tokens.add(str(state))
                tokens.add(str(count))
        for row in self.path_rows or []:
            tokens.add(str(row.state))
            tokens.add(str(row.visits))
            tokens.add(f"{row.q:.3f}")
            if row.risk is not None:
                tokens.add(f"{row.risk:.3f}")
            if row.most_visited_next is not None:
                tokens.add(str(row.most_visited_next))
        if self.path_risk is not None:
            tokens.add(f"{self.path_risk:.3f}")
        return tokens


@dataclass
class GroundingResult:
    mention_agent_action: bool
    mention_risk: bool
    mention_user_action: bool | None  # None when not applicable
    all_passed: bool


@dataclass
class ExplanationReport:
    answer_text: str
    evidence: EvidenceBundle
    intent: StructuredIntent
    grounding: GroundingResult | None
    llm_metadata: dict = field(default_factory=dict)
    error: str | None = None


def compose_path_risk(edge_risks: list[float]) -> float:
    """Chance that at least one hop fails: 1 - product of survivals."""
    survival = 1.0
    for r in edge_risks:
        survival *= 1.0 - r
    return 1.0 - survival


def _action_rows(tree: RecordedTree, node_id: int) -> list[ActionRow]:
    rows = []
    for edge in tree.edges_at(node_id):
        est = risk(edge)
        outcomes = sorted(edge.outcome_counts.items(), key=lambda kv: (-kv[1], kv[0]))
        rows.append(ActionRow(action=Action(edge.action), visits=edge.visits, q=edge.q,
                              risk=None if est is None else est.value,
                              top_outcomes=outcomes[:3]))
    rows.sort(key=lambda r: (-r.visits, int(r.action)))
    return rows


def assemble_evidence(resolved: ResolvedIntent, tree: RecordedTree) -> EvidenceBundle:
    """Deterministic evidence selection for an answerable intent.

    Per-action rows cover every legal action at the target node, even
    never-tried ones, so the generator can account for all of them.
    """
    intent = resolved.intent
    node_id = resolved.node_id
    if intent.question_type == "general":
        node_id = tree.root.node_id
    if node_id is None or tree.node(node_id) is None:
        raise EvidenceUnavailable("resolved reference no longer exists in this tree")
    node = tree.node(node_id)

    root = tree.root
    chosen = None
    if tree.edges_at(node_id):
        if node_id == root.node_id:
            chosen = Action(tree.metadata.chosen_action)
        else:
            chosen = best_action_at(tree, node_id)

    user_action = None
    if intent.target_action:
        user_action = ACTION_NAMES.get(canonical_action_name(intent.target_action))

    bundle = EvidenceBundle(
        question_type=intent.question_type,
        target_state=node.state,
        target_node_id=node.node_id,
        target_visits=node.visits,
        target_depth=node.depth,
        chosen_action=chosen,
        action_rows=_action_rows(tree, node_id),
        user_action=user_action,
        total_simulations=root.visits,
        max_depth=tree.max_depth,
        node_count=len(tree.nodes),
        root_action=Action(tree.metadata.chosen_action),
    )

    if intent.question_type == "path_why" and resolved.path_hops:
        rows = []
        edge_risks = []
        for hop in resolved.path_hops:
            if hop.node_id is None:
                raise EvidenceUnavailable(f"path hop at state {hop.state} is unresolved")
            edge = tree.edge(hop.node_id, hop.action)
            if edge is None:
                raise EvidenceUnavailable(f"path edge at state {hop.state} vanished")
            est = risk(edge)
            if est is not None:
                edge_risks.append(est.value)
            next_state = None
            if edge.outcome_counts:
                next_state = min(edge.outcome_counts,
                                 key=lambda s: (-edge.outcome_counts[s], s))
            rows.append(PathRow(state=tree.node(hop.node_id).state, action=hop.action,
                                visits=edge.visits, q=edge.q,
                                risk=None if est is None else est.value,
                                most_visited_next=next_state))
        bundle.path_rows = rows
        bundle.path_risk = compose_path_risk(edge_risks)

    if tree.metadata.expansions:
        bundle.expansion_note = (
            "Parts of this evidence were produced by targeted expansion run after "
            "the original decision, specifically to answer questions like this one; "
            "the recorded decision itself is unchanged.")

    return bundle


def render_evidence(bundle: EvidenceBundle) -> str:
    """Marker-delimited evidence block embedded in the prompt.

    Every numeral comes from bundle.numeric_tokens(); keep it that way.
    """
    lines = ["## Evidence",
             f"question_type: {bundle.question_type}",
             f"target_state: {bundle.target_state}",
             f"target_node_visits: {bundle.target_visits}",
             f"target_depth: {bundle.target_depth}"]
    if bundle.chosen_action is not None:
        lines.append(f"chosen_action: {bundle.chosen_action.display_name}")
    if bundle.user_action is not None:
        lines.append(f"user_action: {bundle.user_action.display_name}")
    lines.append("action_names: " + ", ".join(r.name for r in bundle.action_rows))
    risky = [f"{r:.3f}" for r in bundle.risk_values()]
    if risky:
        lines.append("risk_values: " + ", ".join(dict.fromkeys(risky)))
    lines.append("actions:")
    for row in bundle.action_rows:
        outcomes = ",".join(f"{s}:{c}" for s, c in row.top_outcomes)
        detail = (f"- {row.name}: visits={row.visits} q={row.q:.3f} "
                  f"risk={'n/a' if row.risk is None else f'{row.risk:.3f}'}")
        if outcomes:
            detail += f" top_outcomes={outcomes}"
        if row.unexplored:
            detail += " (unexplored)"
        lines.append(detail)
    if bundle.path_rows:
        lines.append("path:")
        for row in bundle.path_rows:
            nxt = "n/a" if row.most_visited_next is None else str(row.most_visited_next)
            lines.append(f"- state {row.state} {row.action.display_name}: "
                         f"visits={row.visits} q={row.q:.3f} "
                         f"risk={'n/a' if row.risk is None else f'{row.risk:.3f}'} "
                         f"most_visited_next={nxt}")
        lines.append(f"path_risk: {bundle.path_risk:.3f}")
    if bundle.question_type == "general":
        lines.append(f"tree: simulations={bundle.total_simulations} "
                     f"max_depth={bundle.max_depth} nodes={bundle.node_count} "
                     f"root_action={bundle.root_action.display_name}")
    if bundle.expansion_note:
        lines.append(f"expansion_note: {bundle.expansion_note}")
    lines.append("## End Evidence")
    return "\n".join(lines)


def build_explanation_prompt(question: str, bundle: EvidenceBundle) -> str:
    return f"## Question\n{question}\n\n{render_evidence(bundle)}\n\nAnswer the question now."


def generate_explanation(question: str, resolved: ResolvedIntent, bundle: EvidenceBundle,
                         client, prompt_name: str = "answer_first",
                         lexicon: tuple[str, ...] = DEFAULT_RISK_LEXICON) -> ExplanationReport:
    """Ask the model for a grounded answer; the grounding check runs
    automatically. Transport failures keep the evidence attached so the
    caller can still show raw statistics."""
    system = load_prompt("explain", prompt_name)
    request = ChatRequest(model=client.model, system_prompt=system,
                          user_message=build_explanation_prompt(question, bundle),
                          temperature=0.3, response_format_hint=FREE_TEXT)
    metadata = {"model": client.model, "prompt_id": prompt_id("explain", prompt_name)}
    try:
        response = client.complete(request)
    except ExplainerError as exc:
        return ExplanationReport(answer_text="", evidence=bundle, intent=resolved.intent,
                                 grounding=None, llm_metadata=metadata,
                                 error=f"{type(exc).__name__}: {exc}")
    grounding = grounding_check(response.text, resolved, bundle, lexicon)
    return ExplanationReport(answer_text=response.text, evidence=bundle,
                             intent=resolved.intent, grounding=grounding,
                             llm_metadata=metadata)


def _mentions_word(text: str, word: str) -> bool:
    return re.search(rf"\b{re.escape(word)}\b", text, re.IGNORECASE) is not None


def grounding_check(answer_text: str, resolved: ResolvedIntent, bundle: EvidenceBundle,
                    lexicon: tuple[str, ...] = DEFAULT_RISK_LEXICON) -> GroundingResult:
    """Keyword-level faithfulness flags.

    agent action: the chosen action's display name appears. user
    action: applicable when the question names actions beyond the
    chosen one; all of them must appear. risk: a lexicon stem or any
    evidence risk figure (three-decimal form) appears.
    """
    intent = resolved.intent
    chosen_name = None
    if bundle.chosen_action is not None:
        chosen_name = bundle.chosen_action.display_name
    mention_agent = bool(chosen_name) and _mentions_word(answer_text, chosen_name)

    user_names: list[str] = []
    if intent.target_action:
        user_names = [canonical_action_name(intent.target_action)]
    elif intent.target_path:
        seen = dict.fromkeys(canonical_action_name(a) for _, a in intent.target_path)
        user_names = list(seen)
    applicable = bool(user_names) and set(user_names) != ({chosen_name} if chosen_name else set())
    mention_user: bool | None = None
    if applicable:
        mention_user = all(_mentions_word(answer_text, name) for name in user_names)

    stem_pattern = rf"\b({'|'.join(re.escape(w) for w in lexicon)})"
    mention_risk = re.search(stem_pattern, answer_text, re.IGNORECASE) is not None
    if not mention_risk:
        mention_risk = any(f"{r:.3f}" in answer_text for r in bundle.risk_values())

    flags = [mention_agent, mention_risk] + ([mention_user] if mention_user is not None else [])
    return GroundingResult(mention_agent_action=mention_agent, mention_risk=mention_risk,
                           mention_user_action=mention_user, all_passed=all(flags))
