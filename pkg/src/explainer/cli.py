"""Command-line interface.

Subcommands: plan one decision and save its trace, ask one question
against a saved trace, generate the annotated query set, run the batch
evaluation (writing text/JSON/CSV reports plus figures), and serve the
HTTP session API.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .config import AppConfig, load_config, make_client
from .env import default_map, parse_map
from .errors import ExplainerError
from .evalharness import (
    EvalConfig,
    build_query_set,
    load_query_set,
    run_eval,
    rulebook_for,
    write_report,
)
from .llm import DeterministicDouble, LiveClient
from .mcts import SearchParams, plan
from .trace import load_trace, save_trace


def _load_grid(map_path: str | None):
    if map_path is None:
        return default_map()
    return parse_map(Path(map_path).read_text())


def cmd_plan(args) -> int:
    grid = _load_grid(args.map)
    params = SearchParams(iteration_budget=args.budget, exploration_c=args.exploration_c,
                          gamma=args.gamma, rollout_depth_cap=args.rollout_cap,
                          seed=args.seed)
    state = grid.start_state if args.state is None else args.state
    chosen, tree = plan(grid, state, params, decision_step=args.decision_step)
    save_trace(tree, args.out)
    print(f"chosen action: {chosen.display_name}; "
          f"nodes={len(tree.nodes)} edges={len(tree.edges)} -> {args.out}")
    return 0


def cmd_ask(args) -> int:
    from .answerability import detect
    from .explanation import assemble_evidence, generate_explanation
    from .intent import extract_intent, resolve_references, tree_summary

    config = load_config(args.config)
    if args.llm:
        config.llm_backend = args.llm
    if args.query_set:
        config.query_set = args.query_set
    client = make_client(config)

    tree = load_trace(args.trace)
    intent = extract_intent(args.question, tree_summary(tree), client,
                            prompt_name=config.intent_prompt)
    resolved = resolve_references(intent, tree)
    verdict = detect(resolved, tree, config.thresholds)
    print(f"intent: {intent.question_type} state={intent.target_state} "
          f"action={intent.target_action} path={intent.target_path}")
    print(f"answerable: {verdict.answerable} "
          f"reasons={[r.value for r in verdict.reasons]}")
    if not verdict.answerable:
        targets = ", ".join(f"(state {s}, {a.display_name if a else 'any'})"
                            for s, a in verdict.expansion_targets)
        print(f"needs expansion at: {targets}")
        return 2
    bundle = assemble_evidence(resolved, tree)
    report = generate_explanation(args.question, resolved, bundle, client,
                                  prompt_name=config.explain_prompt,
                                  lexicon=config.risk_lexicon)
    if report.error:
        print(f"generation failed: {report.error}", file=sys.stderr)
        return 1
    print()
    print(report.answer_text)
    g = report.grounding
    print(f"\ngrounding: agent={g.mention_agent_action} risk={g.mention_risk} "
          f"user={g.mention_user_action} all={g.all_passed}")
    return 0


def cmd_gen_queries(args) -> int:
    samples = build_query_set(args.out, seed=args.seed)
    print(f"wrote {len(samples)} samples to {args.out}")
    return 0


def cmd_eval(args) -> int:
    samples = load_query_set(args.query_set)
    config = load_config(args.config)
    eval_config = EvalConfig(thresholds=config.thresholds,
                             expansion_budget=config.expansion_budget,
                             intent_prompt=config.intent_prompt,
                             explain_prompt=config.explain_prompt,
                             risk_lexicon=config.risk_lexicon)
    if args.llm == "double":
        client = DeterministicDouble(rulebook_for(samples))
    else:
        client = LiveClient()
    report = run_eval(samples, client, eval_config)
    written = write_report(report, args.out)
    print(report.to_text())
    print("wrote: " + ", ".join(str(p) for p in written))
    if args.llm == "double" and not report.passes_ci_thresholds():
        print("CI thresholds not met", file=sys.stderr)
        return 1
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    config = load_config(args.config)
    if args.llm:
        config.llm_backend = args.llm
    if args.query_set:
        config.query_set = args.query_set
    app = create_app(config)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="explainer",
        description="MCTS planning with recorded traces and grounded explanations")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("plan", help="run one search and save its trace")
    p.add_argument("--map", help="map file (rows of S/F/H/G); default 4x4 layout")
    p.add_argument("--state", type=int, help="root state (default: map start)")
    p.add_argument("--budget", type=int, default=2000)
    p.add_argument("--exploration-c", type=float, default=1.414)
    p.add_argument("--gamma", type=float, default=0.99)
    p.add_argument("--rollout-cap", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--decision-step", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_plan)

    p = sub.add_parser("ask", help="answer one question against a saved trace")
    p.add_argument("--trace", required=True)
    p.add_argument("--question", required=True)
    p.add_argument("--llm", choices=["live", "double"])
    p.add_argument("--query-set", help="rulebook source for the double")
    p.add_argument("--config")
    p.set_defaults(func=cmd_ask)

    p = sub.add_parser("gen-queries", help="generate the annotated query set")
    p.add_argument("--seed", type=int, default=2024)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen_queries)

    p = sub.add_parser("eval", help="run the batch evaluation over a query set")
    p.add_argument("--query-set", required=True)
    p.add_argument("--llm", choices=["live", "double"], default="double")
    p.add_argument("--out", default="eval_report.txt",
                   help="report path; JSON/CSV/figures are written alongside")
    p.add_argument("--config")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("serve", help="run the HTTP session service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--llm", choices=["live", "double"])
    p.add_argument("--query-set")
    p.add_argument("--config")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ExplainerError as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
