"""Bundled annotated query set, metric computation, and batch reports.

A query set is a directory holding queries.json plus the recorded trace
each question refers to. run_eval drives the full pipeline per sample
(extract -> resolve -> detect -> expand when needed -> explain ->
ground) and aggregates per-field intent accuracy, answerability
accuracy, and grounding rates. Reports come out as a human table, a
machine JSON document, a per-sample CSV, and bar-chart figures.
"""

from __future__ import annotations

import csv
import io
import json
import zlib
from dataclasses import dataclass, field
from pathlib import Path

from .answerability import EvidenceThresholds, detect
from .env import Action, GridMap, default_map, parse_map, sample_transition
from .errors import EmptyQuerySet, ExplainerError, TraceLoadFailure
from .expansion import expand_targeted
from .explanation import DEFAULT_RISK_LEXICON, assemble_evidence, generate_explanation
from .intent import StructuredIntent, extract_intent, resolve_references, tree_summary
from .llm import Rulebook
from .mcts import SearchParams, plan
from .trace import RecordedTree, find_node, load_trace, save_trace

import random

# Externally reported baseline rates shown beside ours for comparison;
# not reproducible exactly (different model snapshots, reconstructed
# query set), so they never gate anything.
REFERENCE_RATES = {
    "intent": {"type": 85.7, "state": 95.2, "action": 71.4, "path": 90.5},
    "answerability": 100.0,
    "grounding": {"agent_action": 76.2, "risk": 90.5, "user_action": 100.0,
                  "all_passed": 71.4},
}

INTENT_FIELDS = ("type", "state", "action", "path")


@dataclass
class QuerySample:
    id: str
    question: str
    trace_file: str
    intent: StructuredIntent
    answerable: bool
    expansion_target: tuple[int, Action] | None
    level: str  # node | path | general


@dataclass
class EvalConfig:
    thresholds: EvidenceThresholds = field(default_factory=EvidenceThresholds)
    expansion_budget: int = 500
    intent_prompt: str = "baseline"
    explain_prompt: str = "answer_first"
    risk_lexicon: tuple[str, ...] = DEFAULT_RISK_LEXICON


@dataclass
class SampleResult:
    id: str
    question: str
    level: str
    field_correct: dict[str, bool]
    answerable_predicted: bool | None
    answerable_correct: bool
    expansion_target_correct: bool | None
    expansion_performed: bool
    grounding: dict[str, bool | None] | None
    answer_text: str
    error: str | None = None


@dataclass
class Metric:
    correct: int
    total: int

    @property
    def rate(self) -> float:
        return 100.0 * self.correct / self.total if self.total else 0.0


@dataclass
class EvalReport:
    intent: dict[str, Metric]
    answerability: Metric
    grounding: dict[str, Metric]
    grounding_na: dict[str, int]
    samples: list[SampleResult]

    def to_doc(self) -> dict:
        return {
            "intent": {k: {"correct": m.correct, "total": m.total,
                           "rate": round(m.rate, 1),
                           "reference_rate": REFERENCE_RATES["intent"][k]}
                       for k, m in self.intent.items()},
            "answerability": {"correct": self.answerability.correct,
                              "total": self.answerability.total,
                              "rate": round(self.answerability.rate, 1),
                              "reference_rate": REFERENCE_RATES["answerability"]},
            "grounding": {k: {"passed": m.correct, "total": m.total,
                              "not_applicable": self.grounding_na.get(k, 0),
                              "rate": round(m.rate, 1),
                              "reference_rate": REFERENCE_RATES["grounding"][k]}
                          for k, m in self.grounding.items()},
            "samples": [{
                "id": s.id, "level": s.level, "question": s.question,
                "field_correct": s.field_correct,
                "answerable_predicted": s.answerable_predicted,
                "answerable_correct": s.answerable_correct,
                "expansion_target_correct": s.expansion_target_correct,
                "expansion_performed": s.expansion_performed,
                "grounding": s.grounding,
                "error": s.error,
            } for s in self.samples],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_doc(), indent=2) + "\n"

    def to_text(self) -> str:
        lines = ["Intent extraction (per field)",
                 f"{'field':<10}{'correct':>10}{'total':>8}{'rate %':>9}{'reference %':>13}"]
        for name, m in self.intent.items():
            lines.append(f"{name:<10}{m.correct:>10}{m.total:>8}{m.rate:>9.1f}"
                         f"{REFERENCE_RATES['intent'][name]:>13.1f}")
        m = self.answerability
        lines += ["", "Answerability detection",
                  f"{'decision':<10}{m.correct:>10}{m.total:>8}{m.rate:>9.1f}"
                  f"{REFERENCE_RATES['answerability']:>13.1f}"]
        lines += ["", "Grounding checks",
                  f"{'check':<14}{'passed':>8}{'total':>8}{'n/a':>6}{'rate %':>9}{'reference %':>13}"]
        for name, g in self.grounding.items():
            lines.append(f"{name:<14}{g.correct:>8}{g.total:>8}"
                         f"{self.grounding_na.get(name, 0):>6}{g.rate:>9.1f}"
                         f"{REFERENCE_RATES['grounding'][name]:>13.1f}")
        failed = [s.id for s in self.samples
                  if s.error or not all(s.field_correct.values()) or not s.answerable_correct]
        lines += ["", f"samples: {len(self.samples)}; with issues: {', '.join(failed) if failed else 'none'}"]
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["id", "level", "type_ok", "state_ok", "action_ok", "path_ok",
                         "answerable_predicted", "answerable_correct",
                         "expansion_target_correct", "expansion_performed",
                         "ground_agent", "ground_risk", "ground_user", "ground_all",
                         "error"])
        for s in self.samples:
            g = s.grounding or {}
            writer.writerow([
                s.id, s.level,
                *(s.field_correct[f] for f in INTENT_FIELDS),
                s.answerable_predicted, s.answerable_correct,
                s.expansion_target_correct, s.expansion_performed,
                g.get("agent_action"), g.get("risk"), g.get("user_action"),
                g.get("all_passed"), s.error or "",
            ])
        return buf.getvalue()

    def passes_ci_thresholds(self) -> bool:
        return (all(m.rate == 100.0 for m in self.intent.values())
                and self.answerability.rate == 100.0
                and self.grounding["all_passed"].rate == 100.0)


def intent_to_payload(intent: StructuredIntent) -> dict:
    return {
        "question_type": intent.question_type,
        "target_state": intent.target_state,
        "target_action": intent.target_action,
        "target_path": None if intent.target_path is None else
            [[s, a] for s, a in intent.target_path],
    }


def _intent_from_doc(doc: dict, question: str) -> StructuredIntent:
    path = doc.get("target_path")
    return StructuredIntent(
        question_type=doc["question_type"],
        target_state=doc.get("target_state"),
        target_action=doc.get("target_action"),
        target_path=None if path is None else [(s, a) for s, a in path],
        raw_question=question,
    )


def load_query_set(directory: str | Path) -> list[QuerySample]:
    directory = Path(directory)
    doc = json.loads((directory / "queries.json").read_text())
    samples = []
    for entry in doc["samples"]:
        target = entry.get("expansion_target")
        sample = QuerySample(
            id=entry["id"],
            question=entry["question"],
            trace_file=str(directory / entry["trace_file"]),
            intent=_intent_from_doc(entry["intent"], entry["question"]),
            answerable=entry["answerable"],
            expansion_target=None if target is None else (target[0], Action(target[1])),
            level=entry["level"],
        )
        if not sample.answerable and sample.expansion_target is None:
            raise ValueError(f"sample {sample.id}: non-answerable without expansion target")
        if not Path(sample.trace_file).exists():
            raise TraceLoadFailure(sample.id, f"missing trace {entry['trace_file']}")
        samples.append(sample)
    return samples


def rulebook_for(samples: list[QuerySample]) -> Rulebook:
    """Rulebook encoding the set's annotations, for the offline double."""
    book = Rulebook.with_defaults()
    for sample in samples:
        book.add(sample.question, intent_to_payload(sample.intent))
    return book


def _fields_match(extracted: StructuredIntent | None, annotated: StructuredIntent) -> dict[str, bool]:
    if extracted is None:
        return {f: False for f in INTENT_FIELDS}
    return {
        "type": extracted.question_type == annotated.question_type,
        "state": extracted.target_state == annotated.target_state,
        "action": extracted.target_action == annotated.target_action,
        "path": extracted.target_path == annotated.target_path,
    }


def run_eval(samples: list[QuerySample], client, config: EvalConfig | None = None) -> EvalReport:
    """Evaluate the pipeline over an annotated query set.

    Per sample: extract the intent und compare field-by-field, run the
    detector and compare the decision (and the expansion start pair for
    non-answerable annotations), expand when the verdict asks for it,
    then generate an explanation and run the grounding check. Fully
    deterministic given a deterministic client.
    """
    if not samples:
        raise EmptyQuerySet("query set is empty")
    config = config or EvalConfig()

    results: list[SampleResult] = []
    for sample in samples:
        results.append(_eval_one(sample, client, config))

    intent_metrics = {f: Metric(sum(r.field_correct[f] for r in results), len(results))
                      for f in INTENT_FIELDS}
    answerability = Metric(sum(r.answerable_correct for r in results), len(results))

    grounding_metrics: dict[str, Metric] = {}
    grounding_na: dict[str, int] = {}
    for check in ("agent_action", "risk", "user_action", "all_passed"):
        passed = total = na = 0
        for r in results:
            value = (r.grounding or {}).get(check)
            if value is None:
                na += 1
                continue
            total += 1
            passed += bool(value)
        grounding_metrics[check] = Metric(passed, total)
        grounding_na[check] = na

    return EvalReport(intent=intent_metrics, answerability=answerability,
                      grounding=grounding_metrics, grounding_na=grounding_na,
                      samples=results)


def _eval_one(sample: QuerySample, client, config: EvalConfig) -> SampleResult:
    try:
        tree = load_trace(sample.trace_file)
    except (OSError, ExplainerError) as exc:
        raise TraceLoadFailure(sample.id, str(exc)) from exc

    error = None
    extracted: StructuredIntent | None = None
    try:
        extracted = extract_intent(sample.question, tree_summary(tree), client,
                                   prompt_name=config.intent_prompt)
    except ExplainerError as exc:
        error = f"intent: {exc}"

    field_correct = _fields_match(extracted, sample.intent)

    answerable_predicted = None
    target_correct: bool | None = None
    expansion_performed = False
    grounding = None
    answer_text = ""

    # Detection and everything after run on the ANNOTATED intent so the
    # stages stay independently assessable, mirroring how the set's
    # labels were produced.
    try:
        resolved = resolve_references(sample.intent, tree)
        verdict = detect(resolved, tree, config.thresholds)
        answerable_predicted = verdict.answerable
        answerable_correct = verdict.answerable == sample.answerable
        if not sample.answerable:
            target_correct = bool(verdict.expansion_targets) and \
                verdict.expansion_targets[0] == sample.expansion_target
            answerable_correct = answerable_correct and bool(target_correct)

        if not verdict.answerable and verdict.expansion_targets:
            state, action = verdict.expansion_targets[0]
            node_id = find_node(tree, state, "root_first")
            if node_id is not None:
                grid = parse_map(tree.metadata.map_text)
                expand_targeted(tree, grid, node_id, action,
                                budget=config.expansion_budget,
                                params=tree.metadata.params,
                                seed=zlib.crc32(sample.id.encode()) & 0x7FFFFFFF)
                expansion_performed = True
                resolved = resolve_references(sample.intent, tree)
                verdict = detect(resolved, tree, config.thresholds)

        if verdict.answerable:
            bundle = assemble_evidence(resolved, tree)
            report = generate_explanation(sample.question, resolved, bundle, client,
                                          prompt_name=config.explain_prompt,
                                          lexicon=config.risk_lexicon)
            answer_text = report.answer_text
            if report.error:
                error = (error + "; " if error else "") + f"generation: {report.error}"
            elif report.grounding:
                grounding = {
                    "agent_action": report.grounding.mention_agent_action,
                    "risk": report.grounding.mention_risk,
                    "user_action": report.grounding.mention_user_action,
                    "all_passed": report.grounding.all_passed,
                }
    except ExplainerError as exc:
        error = (error + "; " if error else "") + f"pipeline: {exc}"
        answerable_correct = False

    return SampleResult(
        id=sample.id, question=sample.question, level=sample.level,
        field_correct=field_correct,
        answerable_predicted=answerable_predicted,
        answerable_correct=answerable_correct,
        expansion_target_correct=target_correct,
        expansion_performed=expansion_performed,
        grounding=grounding, answer_text=answer_text, error=error,
    )


def write_report(report: EvalReport, out_path: str | Path) -> list[Path]:
    """Write the report family anchored at out_path's stem.

    Given reports/eval.txt this writes eval.txt, eval.json, eval.csv,
    and eval_<figure>.png files alongside each other.
    """
    out_path = Path(out_path)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    stem = out_path.with_suffix("")
    written = []
    text_path = stem.with_suffix(".txt")
    text_path.write_text(report.to_text())
    written.append(text_path)
    json_path = stem.with_suffix(".json")
    json_path.write_text(report.to_json())
    written.append(json_path)
    csv_path = stem.with_suffix(".csv")
    csv_path.write_text(report.to_csv())
    written.append(csv_path)
    written.extend(render_figures(report, stem))
    return written


def render_figures(report: EvalReport, stem: Path) -> list[Path]:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    written = []

    def bar_chart(path, title, labels, ours, reference):
        fig, ax = plt.subplots(figsize=(6, 3.2))
        x = range(len(labels))
        ax.bar([i - 0.18 for i in x], ours, width=0.36, label="this run")
        ax.bar([i + 0.18 for i in x], reference, width=0.36, label="reference")
        ax.set_xticks(list(x), labels)
        ax.set_ylim(0, 105)
        ax.set_ylabel("accuracy %")
        ax.set_title(title)
        ax.legend(loc="lower right", fontsize=8)
        fig.tight_layout()
        fig.savefig(path, dpi=120)
        plt.close(fig)
        written.append(path)

    bar_chart(Path(f"{stem}_intent.png"), "Intent extraction per field",
              list(report.intent), [m.rate for m in report.intent.values()],
              [REFERENCE_RATES["intent"][k] for k in report.intent])
    bar_chart(Path(f"{stem}_answerability.png"), "Answerability detection",
              ["decision"], [report.answerability.rate],
              [REFERENCE_RATES["answerability"]])
    bar_chart(Path(f"{stem}_grounding.png"), "Grounding checks",
              list(report.grounding), [m.rate for m in report.grounding.values()],
              [REFERENCE_RATES["grounding"][k] for k in report.grounding])
    return written


# --- query set construction ----------------------------------------------


@dataclass
class _TraceHandle:
    key: str
    rel_path: str
    tree: RecordedTree


def build_query_set(out_dir: str | Path, seed: int = 2024,
                    grid: GridMap | None = None,
                    thresholds: EvidenceThresholds | None = None) -> list[QuerySample]:
    """Generate the bundled annotated query set deterministically.

    Emits 21 samples covering all five question types and all three
    scopes, three of them non-answerable with annotated expansion
    start pairs, plus the traces they reference. Every annotation is
    verified against the generated traces before it is written.
    """
    out_dir = Path(out_dir)
    grid = grid or default_map()
    thresholds = thresholds or EvidenceThresholds()
    builder = _QuerySetBuilder(out_dir, grid, seed, thresholds)
    samples = builder.build()
    doc = {"samples": [{
        "id": s.id,
        "question": s.question,
        "trace_file": s.trace_file,
        "intent": intent_to_payload(s.intent),
        "answerable": s.answerable,
        "expansion_target": None if s.expansion_target is None else
            [s.expansion_target[0], int(s.expansion_target[1])],
        "level": s.level,
    } for s in samples]}
    (out_dir / "queries.json").write_text(json.dumps(doc, indent=2) + "\n")
    return load_query_set(out_dir)


class _QuerySetBuilder:
    def __init__(self, out_dir: Path, grid: GridMap, seed: int,
                 thresholds: EvidenceThresholds):
        self.out_dir = out_dir
        self.grid = grid
        self.seed = seed
        self.thresholds = thresholds
        self.traces: dict[str, _TraceHandle] = {}
        self.samples: list[QuerySample] = []

    def plan_trace(self, key: str, root_state: int, budget: int, seed_offset: int,
                   decision_step: int = 0, accept=None) -> _TraceHandle:
        """Plan and persist one trace; when an acceptance predicate is
        given, deterministically walk seed offsets until it holds."""
        tree = None
        for extra in range(100):
            params = SearchParams(iteration_budget=budget,
                                  seed=self.seed + seed_offset + extra)
            _, candidate = plan(self.grid, root_state, params,
                                decision_step=decision_step)
            if accept is None or accept(candidate):
                tree = candidate
                break
        self.require(tree is not None, f"no acceptable trace for {key}")
        rel = f"traces/{key}/step_{decision_step}.tree"
        path = self.out_dir / rel
        path.parent.mkdir(parents=True, exist_ok=True)
        save_trace(tree, path)
        handle = _TraceHandle(key=key, rel_path=rel, tree=tree)
        self.traces[key] = handle
        return handle

    def add(self, sample_id: str, question: str, handle: _TraceHandle,
            intent: StructuredIntent, level: str):
        """Annotate answerability by running the detector, then verify
        the label shape the sample is supposed to have."""
        resolved = resolve_references(intent, handle.tree)
        verdict = detect(resolved, handle.tree, self.thresholds)
        target = None
        if not verdict.answerable:
            target = verdict.expansion_targets[0]
        self.samples.append(QuerySample(
            id=sample_id, question=question, trace_file=handle.rel_path,
            intent=intent, answerable=verdict.answerable,
            expansion_target=target, level=level,
        ))
        return verdict

    def require(self, condition: bool, message: str):
        if not condition:
            raise AssertionError(f"query set construction: {message}")

    def build(self) -> list[QuerySample]:
        grid = self.grid
        # Main episode: three decision steps from the start state. The
        # sampled transitions can kill an episode early, so walk env
        # seeds deterministically until one survives all three steps.
        episode = []
        for attempt in range(100):
            env_rng = random.Random(self.seed * 31 + 5 + attempt)
            state = grid.start_state
            episode = []
            alive = True
            for step in range(3):
                handle = self.plan_trace("main", state, budget=2000,
                                         seed_offset=100 + step, decision_step=step)
                episode.append(handle)
                chosen = handle.tree.metadata.chosen_action
                outcome = sample_transition(grid, state, chosen, env_rng)
                state = outcome.next_state
                if outcome.terminal and step < 2:
                    alive = False
                    break
            if alive:
                break
        self.require(len(episode) == 3, "no three-step episode found")
        t0, t1, t2 = episode

        min_edge = self.thresholds.min_edge_visits

        t13 = self.plan_trace(
            "node13", 13, budget=12000, seed_offset=7,
            accept=lambda t: t.metadata.chosen_action == Action.RIGHT)

        tup = self.plan_trace(
            "up8", 8, budget=2000, seed_offset=11,
            accept=lambda t: t.metadata.chosen_action == Action.UP)

        def weak_edge(action):
            def check(t):
                edge = t.edge(t.root.node_id, action)
                return 0 < edge.visits < min_edge
            return check

        tsh = self.plan_trace("shallow0", 0, budget=28, seed_offset=13,
                              accept=weak_edge(Action.LEFT))
        tsh10 = self.plan_trace("shallow10", 10, budget=36, seed_offset=17,
                                accept=weak_edge(Action.UP))

        tpath = self._build_weak_second_hop_trace()

        chosen0 = t0.tree.metadata.chosen_action.display_name
        chosen1ary = t1.tree.metadata.chosen_action.display_name
        state1 = t1.tree.root.state
        state2 = t2.tree.root.state

        add, req = self.add, self.require

        # Verbatim preset questions.
        v = add("q01", "Why did the agent choose Up at the current state?", tup,
                StructuredIntent("why_action", "current", "Up"), "node")
        req(v.answerable, "q01 must be answerable")
        v = add("q02", "What would the agent's strategy look like if the Left action "
                       "had been explored at the current state?", tsh,
                StructuredIntent("what_if", "current", "Left"), "node")
        req(not v.answerable and v.expansion_targets[0] == (0, Action.LEFT),
            "q02 must need expansion at (0, Left)")
        v = add("q03", "Why does going Right then Down from state 13 lead most "
                       "reliably toward the goal?", t13,
                StructuredIntent("path_why", None, None, [(13, "Right"), (None, "Down")]),
                "path")
        req(v.answerable, "q03 must be answerable")

        # Node-scope questions over the main episode.
        v = add("q04", f"Why did the agent choose {chosen0} at the current state?", t0,
                StructuredIntent("why_action", "current", chosen0), "node")
        req(v.answerable, "q04 must be answerable")
        v = add("q05", "Why did the agent choose Right at state 13?", t13,
                StructuredIntent("why_action", 13, "Right"), "node")
        req(v.answerable, "q05 must be answerable")
        other0 = next(a for a in Action if a.display_name != chosen0)
        v = add("q06", f"Why didn't the agent choose {other0.display_name} at the "
                       f"current state?", t0,
                StructuredIntent("why_not_action", "current", other0.display_name), "node")
        req(v.answerable, "q06 must be answerable")
        v = add("q07", "Why didn't the agent pick Up at state 13?", t13,
                StructuredIntent("why_not_action", 13, "Up"), "node")
        req(v.answerable, "q07 must be answerable")
        v = add("q08", "What would happen if the agent had taken Right at the "
                       "current state?", t1,
                StructuredIntent("what_if", "current", "Right"), "node")
        req(v.answerable, "q08 must be answerable")
        v = add("q09", "What if the agent had tried Down at state 13?", t13,
                StructuredIntent("what_if", 13, "Down"), "node")
        req(v.answerable, "q09 must be answerable")

        # General questions.
        add("q10", "What did the search explore overall at this step?", t0,
            StructuredIntent("general"), "general")
        add("q11", "How deep did the agent look ahead while planning here?", t2,
            StructuredIntent("general"), "general")
        add("q12", "Summarize the agent's search behavior for this decision.", t13,
            StructuredIntent("general"), "general")
        add("q21", "Broadly, how much searching did the agent do before this move?", tsh,
            StructuredIntent("general"), "general")

        # Path questions derived from what the trees actually explored.
        hops13 = self._strong_path(t13.tree, 2)
        v = add("q13", f"Why is taking {hops13[0][1]} followed by {hops13[1][1]} from "
                       f"state 13 the most dependable way to reach the goal?", t13,
                StructuredIntent("path_why", None, None, hops13), "path")
        req(v.answerable, "q13 must be answerable")
        hops13_3 = self._strong_path(t13.tree, 3)
        seq = ", ".join(a for _, a in hops13_3)
        v = add("q14", f"Why does the {seq} sequence from state 13 work so well?", t13,
                StructuredIntent("path_why", None, None, hops13_3), "path")
        req(v.answerable, "q14 must be answerable")
        hops0 = self._strong_path(t0.tree, 2)
        v = add("q15", f"Why does going {hops0[0][1]} then {hops0[1][1]} from the start "
                       f"lead toward the goal?", t0,
                StructuredIntent("path_why", None, None, hops0), "path")
        req(v.answerable, "q15 must be answerable")
        v = add("q16", "Why does going Right then Down from state 13 avoid the holes "
                       "most of the time?", tpath,
                StructuredIntent("path_why", None, None, [(13, "Right"), (None, "Down")]),
                "path")
        req(not v.answerable and v.expansion_targets[0][1] == Action.DOWN,
            "q16 must need expansion on its second hop")
        self._verify_expandable(tpath.tree, v.expansion_targets[0])

        # Remaining node-scope coverage.
        v = add("q17", "What would the agent's plan be if Up had been tried at "
                       "state 10?", tsh10,
                StructuredIntent("what_if", 10, "Up"), "node")
        req(not v.answerable and v.expansion_targets[0] == (10, Action.UP),
            "q17 must need expansion at (10, Up)")
        v = add("q18", f"Why did the agent choose {chosen1ary} at state {state1}?", t1,
                StructuredIntent("why_action", state1, chosen1ary), "node")
        req(v.answerable, "q18 must be answerable")
        v = add("q19", "Why didn't the agent go Down at the current state?", tup,
                StructuredIntent("why_not_action", "current", "Down"), "node")
        req(v.answerable, "q19 must be answerable")
        v = add("q20", "What if the agent had moved Left at the current state?", t2,
                StructuredIntent("what_if", "current", "Left"), "node")
        req(v.answerable, "q20 must be answerable")

        self._verify_set(state2)
        return self.samples

    def _build_weak_second_hop_trace(self) -> _TraceHandle:
        """Trace rooted at 13 whose (13, Right) edge is strong but the
        follow-on Down edge at its most-visited outcome is weak."""
        for offset in range(19, 119):
            handle = self.plan_trace("path13", 13, budget=300, seed_offset=offset)
            tree = handle.tree
            root_id = tree.root.node_id
            right = tree.edge(root_id, Action.RIGHT)
            if right.visits < self.thresholds.min_edge_visits or not right.outcome_counts:
                continue
            nxt = min(right.outcome_counts, key=lambda s: (-right.outcome_counts[s], s))
            child_id = right.children.get(nxt)
            if child_id is None or tree.node(child_id).terminal_kind is not None:
                continue
            down = tree.edge(child_id, Action.DOWN)
            if down is None or down.visits >= self.thresholds.min_edge_visits:
                continue
            # The annotated state must resolve back to this very node.
            if find_node(tree, nxt, "root_first") != child_id:
                continue
            return handle
        raise AssertionError("query set construction: no weak-second-hop trace found")

    def _strong_path(self, tree: RecordedTree, length: int) -> list[tuple[int | None, str]]:
        """Find `length` hops of well-visited edges whose most-visited
        outcomes stay inside the tree (the route a path question can be
        asked about). Prefers heavier edges, backtracking when the
        favored chain dead-ends in a terminal."""
        min_edge = self.thresholds.min_edge_visits

        def search(node_id: int, remaining: int):
            if remaining == 0:
                return []
            edges = sorted((e for e in tree.edges_at(node_id)
                            if e.visits >= min_edge and e.children),
                           key=lambda e: -e.visits)
            for edge in edges:
                nxt = min(edge.outcome_counts,
                          key=lambda s: (-edge.outcome_counts[s], s))
                child_id = edge.children.get(nxt)
                if child_id is None:
                    continue
                hop = (None, Action(edge.action).display_name)
                if remaining == 1:
                    return [hop]
                if tree.node(child_id).terminal_kind is not None:
                    continue
                rest = search(child_id, remaining - 1)
                if rest is not None:
                    return [hop] + rest
            return None

        hops = search(tree.root.node_id, length)
        self.require(hops is not None, f"no strong {length}-hop path")
        return [(tree.root.state, hops[0][1])] + hops[1:]

    def _verify_expandable(self, tree: RecordedTree, target: tuple[int, Action]):
        node_id = find_node(tree, target[0], "root_first")
        self.require(node_id is not None, "expansion target state must resolve")
        self.require(tree.node(node_id).terminal_kind is None,
                     "expansion target must be non-terminal")

    def _verify_set(self, _final_state: int):
        ids = [s.id for s in self.samples]
        self.require(len(ids) == len(set(ids)), "sample ids must be unique")
        self.require(len(self.samples) >= 21, "need at least 21 samples")
        questions = [normalized for normalized in
                     (s.question.strip().lower() for s in self.samples)]
        self.require(len(questions) == len(set(questions)), "questions must be distinct")
        by_type: dict[str, int] = {}
        by_level: dict[str, int] = {}
        for s in self.samples:
            by_type[s.intent.question_type] = by_type.get(s.intent.question_type, 0) + 1
            by_level[s.level] = by_level.get(s.level, 0) + 1
        for qtype in ("why_action", "why_not_action", "what_if", "path_why", "general"):
            self.require(by_type.get(qtype, 0) >= 2, f"need >= 2 samples of {qtype}")
        for level in ("node", "path", "general"):
            self.require(by_level.get(level, 0) >= 1, f"need {level}-level samples")
        non_answerable = [s for s in self.samples if not s.answerable]
        self.require(len(non_answerable) >= 3, "need >= 3 non-answerable samples")
