"""HTTP session service exposing the plan/record/ask loop.

One session is one episode on the grid. step() plans at the current
state, persists the trace, and applies one sampled transition; ask()
runs the full explanation pipeline against a recorded step, performing
at most one targeted-expansion round when evidence is missing.
Expansions never overwrite a trace: they create a new revision file
(step_<k>.rev<r>.tree) and answers cite the revision they used.
"""

from __future__ import annotations

import copy
import random
import tempfile
import threading
import uuid
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .answerability import detect
from .config import AppConfig, make_client
from .env import Action, GridMap, parse_map, sample_transition
from .errors import (
    EpisodeFinished,
    ExplainerError,
    SessionNotFound,
    StepNotFound,
    UnparseableIntent,
)
from .expansion import expand_targeted
from .explanation import ExplanationReport, assemble_evidence, generate_explanation
from .intent import extract_intent, resolve_references, tree_summary
from .mcts import SearchParams, plan
from .trace import RecordedTree, find_node, load_trace, risk, save_trace

HTTP_STATUS = {
    "session_not_found": 404,
    "step_not_found": 404,
    "episode_finished": 409,
    "terminal_root": 409,
    "unparseable_intent": 422,
    "unknown_action": 422,
}


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


@dataclass
class StepRecord:
    decision_step: int
    root_state: int
    chosen_action: Action
    next_state: int
    terminal: bool
    terminal_kind: str | None
    revisions: list[str] = field(default_factory=list)  # trace file paths
    trees: list[RecordedTree] = field(default_factory=list)


@dataclass
class Session:
    id: str
    grid: GridMap
    config: AppConfig
    client: object
    trace_dir: Path
    state: int
    decision_step: int = 0
    terminal: bool = False
    terminal_kind: str | None = None
    steps: list[StepRecord] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)

    def env_rng(self) -> random.Random:
        return self._env_rng

    def __post_init__(self):
        self._env_rng = random.Random(self.config.planner.seed * 1_000_003 + 17)


class SessionStore:
    def __init__(self, base_config: AppConfig):
        self.base_config = base_config
        self.sessions: dict[str, Session] = {}
        self._lock = threading.Lock()
        root = base_config.trace_dir or tempfile.mkdtemp(prefix="explainer-traces-")
        self.trace_root = Path(root)

    def create(self, overrides: dict | None) -> Session:
        config = self.base_config.with_overrides(overrides or {})
        grid = parse_map(config.map_text)
        session_id = uuid.uuid4().hex[:12]
        trace_dir = self.trace_root / session_id
        trace_dir.mkdir(parents=True, exist_ok=True)
        session = Session(id=session_id, grid=grid, config=config,
                          client=make_client(config), trace_dir=trace_dir,
                          state=grid.start_state)
        with self._lock:
            self.sessions[session_id] = session
        return session

    def get(self, session_id: str) -> Session:
        session = self.sessions.get(session_id)
        if session is None:
            raise SessionNotFound(f"no session {session_id}")
        return session


class CreateSessionBody(BaseModel):
    config: dict | None = None


class AskBody(BaseModel):
    question: str
    decision_step: int | None = None


def step_session(session: Session) -> dict:
    if session.terminal:
        raise EpisodeFinished(f"episode ended at state {session.state}")
    k = session.decision_step
    params = SearchParams(
        iteration_budget=session.config.planner.iteration_budget,
        exploration_c=session.config.planner.exploration_c,
        gamma=session.config.planner.gamma,
        rollout_depth_cap=session.config.planner.rollout_depth_cap,
        seed=session.config.planner.seed + k,
    )
    chosen, tree = plan(session.grid, session.state, params, decision_step=k)
    tree.metadata.created_at = _now()
    path = session.trace_dir / f"step_{k}.tree"
    save_trace(tree, path)

    outcome = sample_transition(session.grid, session.state, chosen, session.env_rng())
    record = StepRecord(decision_step=k, root_state=session.state, chosen_action=chosen,
                        next_state=outcome.next_state, terminal=outcome.terminal,
                        terminal_kind=None, revisions=[str(path)], trees=[tree])
    if outcome.terminal:
        kind = session.grid.cell(outcome.next_state).name.capitalize()
        record.terminal_kind = kind
        session.terminal = True
        session.terminal_kind = kind
    session.steps.append(record)
    session.state = outcome.next_state
    session.decision_step = k + 1
    return {
        "decision_step": k,
        "root_state": record.root_state,
        "chosen_action": int(chosen),
        "chosen_action_name": chosen.display_name,
        "sampled_outcome": {
            "next_state": outcome.next_state,
            "probability": outcome.probability,
            "reward": outcome.reward,
            "terminal": outcome.terminal,
        },
        "new_state": session.state,
        "terminal": session.terminal,
        "terminal_kind": record.terminal_kind,
        "trace": {"step": k, "revision": 0, "path": str(path)},
    }


def _report_doc(report: ExplanationReport) -> dict:
    bundle = report.evidence
    return {
        "answer_text": report.answer_text,
        "error": report.error,
        "grounding": None if report.grounding is None else {
            "mention_agent_action": report.grounding.mention_agent_action,
            "mention_risk": report.grounding.mention_risk,
            "mention_user_action": report.grounding.mention_user_action,
            "all_passed": report.grounding.all_passed,
        },
        "llm_metadata": report.llm_metadata,
        "evidence": {
            "question_type": bundle.question_type,
            "target_state": bundle.target_state,
            "target_visits": bundle.target_visits,
            "target_depth": bundle.target_depth,
            "chosen_action": None if bundle.chosen_action is None else bundle.chosen_action.display_name,
            "user_action": None if bundle.user_action is None else bundle.user_action.display_name,
            "action_rows": [{
                "action": row.name, "visits": row.visits, "q": row.q,
                "risk": row.risk, "unexplored": row.unexplored,
                "top_outcomes": row.top_outcomes,
            } for row in bundle.action_rows],
            "path_rows": None if bundle.path_rows is None else [{
                "state": row.state, "action": row.action.display_name,
                "visits": row.visits, "q": row.q, "risk": row.risk,
                "most_visited_next": row.most_visited_next,
            } for row in bundle.path_rows],
            "path_risk": bundle.path_risk,
            "total_simulations": bundle.total_simulations,
            "max_depth": bundle.max_depth,
            "node_count": bundle.node_count,
            "expansion_note": bundle.expansion_note,
        },
    }


def ask_session(session: Session, body: AskBody) -> dict:
    if not session.steps:
        raise StepNotFound("no decision steps recorded yet; call step first")
    k = body.decision_step if body.decision_step is not None else session.steps[-1].decision_step
    record = next((s for s in session.steps if s.decision_step == k), None)
    if record is None:
        raise StepNotFound(f"no decision step {k}")
    revision = len(record.trees) - 1
    tree = record.trees[revision]
    config = session.config

    intent = extract_intent(body.question, tree_summary(tree), session.client,
                            prompt_name=config.intent_prompt)
    resolved = resolve_references(intent, tree)
    verdict = detect(resolved, tree, config.thresholds)

    expansion_performed = False
    expansion_doc = None
    if not verdict.answerable and verdict.expansion_targets:
        state, action = verdict.expansion_targets[0]
        node_id = find_node(tree, state, "root_first")
        if node_id is not None and tree.node(node_id).terminal_kind is None:
            expanded = copy.deepcopy(tree)
            expanded.invalidate_indexes()
            seed = config.planner.seed * 7919 + k * 101 + len(record.trees)
            expand_targeted(expanded, session.grid, node_id, action,
                            budget=config.expansion_budget,
                            params=expanded.metadata.params, seed=seed,
                            created_at=_now())
            revision = len(record.trees)
            path = session.trace_dir / f"step_{k}.rev{revision}.tree"
            save_trace(expanded, path)
            record.trees.append(expanded)
            record.revisions.append(str(path))
            tree = expanded
            expansion_performed = True
            expansion_doc = {
                "target_state": state,
                "action": None if action is None else int(action),
                "action_name": None if action is None else action.display_name,
                "budget": config.expansion_budget,
                "revision": revision,
            }
            resolved = resolve_references(intent, tree)
            verdict = detect(resolved, tree, config.thresholds)

    verdict_doc = {
        "answerable": verdict.answerable,
        "reasons": [r.value for r in verdict.reasons],
        "expansion_targets": [
            {"state": s, "action": None if a is None else int(a),
             "action_name": None if a is None else a.display_name}
            for s, a in verdict.expansion_targets
        ],
    }
    intent_doc = {
        "question_type": intent.question_type,
        "target_state": intent.target_state,
        "target_action": intent.target_action,
        "target_path": intent.target_path,
    }
    out = {
        "intent": intent_doc,
        "verdict": verdict_doc,
        "expansion_performed": expansion_performed,
        "expansion": expansion_doc,
        "report": None,
        "trace": {"step": k, "revision": revision,
                  "path": record.revisions[revision]},
    }
    if verdict.answerable:
        bundle = assemble_evidence(resolved, tree)
        report = generate_explanation(body.question, resolved, bundle, session.client,
                                      prompt_name=config.explain_prompt,
                                      lexicon=config.risk_lexicon)
        out["report"] = _report_doc(report)
    return out


def prune_tree_view(tree: RecordedTree, depth_limit: int | None,
                    min_visits: int) -> dict:
    """Filtered node-link view with Q and risk precomputed server-side."""
    root_id = tree.root.node_id
    keep: set[int] = set()
    for n in tree.nodes:
        if n.node_id == root_id:
            keep.add(n.node_id)
            continue
        if depth_limit is not None and n.depth > depth_limit:
            continue
        if n.visits < min_visits:
            continue
        keep.add(n.node_id)
    # Drop nodes whose parent fell out of view so the result is a tree.
    changed = True
    while changed:
        changed = False
        for n in tree.nodes:
            if n.node_id in keep and n.parent_node is not None and n.parent_node not in keep:
                keep.remove(n.node_id)
                changed = True

    nodes = [{
        "node_id": n.node_id, "state": n.state, "depth": n.depth,
        "visits": n.visits, "terminal_kind": n.terminal_kind,
        "parent_node": n.parent_node,
        "parent_action": None if n.parent_action is None else int(n.parent_action),
    } for n in sorted(tree.nodes, key=lambda n: n.node_id) if n.node_id in keep]
    edges = []
    for e in sorted(tree.edges, key=lambda e: (e.owner, int(e.action))):
        if e.owner not in keep:
            continue
        est = risk(e)
        edges.append({
            "owner": e.owner, "action": int(e.action),
            "action_name": Action(e.action).display_name,
            "visits": e.visits, "q": e.q,
            "risk": None if est is None else est.value,
            "children": {str(s): c for s, c in sorted(e.children.items()) if c in keep},
            "outcome_counts": {str(s): c for s, c in sorted(e.outcome_counts.items())},
        })
    return {
        "root_id": root_id,
        "decision_step": tree.metadata.decision_step,
        "chosen_action": int(tree.metadata.chosen_action),
        "chosen_action_name": Action(tree.metadata.chosen_action).display_name,
        "map": tree.metadata.map_text,
        "expansions": len(tree.metadata.expansions),
        "total_nodes": len(tree.nodes),
        "shown_nodes": len(nodes),
        "nodes": nodes,
        "edges": edges,
    }


def create_app(config: AppConfig | None = None) -> FastAPI:
    config = config or AppConfig()
    app = FastAPI(title="search-trace explainer")
    store = SessionStore(config)
    app.state.store = store

    @app.exception_handler(ExplainerError)
    async def handle_explainer_error(request: Request, exc: ExplainerError):
        status = HTTP_STATUS.get(exc.code, 400)
        return JSONResponse(status_code=status, content={
            "code": exc.code, "message": str(exc),
            "details": {"type": type(exc).__name__},
        })

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.post("/sessions")
    def create_session(body: CreateSessionBody):
        session = store.create(body.config)
        return {
            "session_id": session.id,
            "state": session.state,
            "decision_step": session.decision_step,
            "terminal": session.terminal,
            "map": {"rows": session.grid.rows, "cols": session.grid.cols,
                    "text": session.grid.to_text()},
        }

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        session = store.get(session_id)
        with session.lock:
            return {
                "session_id": session.id,
                "state": session.state,
                "decision_step": session.decision_step,
                "terminal": session.terminal,
                "terminal_kind": session.terminal_kind,
                "map": {"rows": session.grid.rows, "cols": session.grid.cols,
                        "text": session.grid.to_text()},
                "steps": [{
                    "decision_step": s.decision_step,
                    "root_state": s.root_state,
                    "chosen_action": int(s.chosen_action),
                    "chosen_action_name": s.chosen_action.display_name,
                    "new_state": s.next_state,
                    "terminal": s.terminal,
                    "terminal_kind": s.terminal_kind,
                    "revisions": len(s.revisions),
                } for s in session.steps],
            }

    @app.post("/sessions/{session_id}/step")
    def step(session_id: str):
        session = store.get(session_id)
        with session.lock:
            return step_session(session)

    @app.post("/sessions/{session_id}/ask")
    def ask(session_id: str, body: AskBody):
        session = store.get(session_id)
        with session.lock:
            return ask_session(session, body)

    @app.get("/sessions/{session_id}/trees/{step}")
    def get_tree(session_id: str, step: int, rev: int | None = None,
                 depth: int | None = None, min_visits: int = 0):
        session = store.get(session_id)
        with session.lock:
            record = next((s for s in session.steps if s.decision_step == step), None)
            if record is None:
                raise StepNotFound(f"no decision step {step}")
            revision = rev if rev is not None else len(record.trees) - 1
            if not 0 <= revision < len(record.trees):
                raise StepNotFound(f"no revision {revision} for step {step}")
            view = prune_tree_view(record.trees[revision],
                                   depth_limit=depth, min_visits=min_visits)
            view["revision"] = revision
            return view

    return app
