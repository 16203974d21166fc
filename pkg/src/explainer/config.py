"""Application configuration shared by the CLI and the service."""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from pathlib import Path

from .answerability import EvidenceThresholds
from .env import DEFAULT_MAP_TEXT
from .explanation import DEFAULT_RISK_LEXICON
from .llm import DeterministicDouble, LiveClient, Rulebook
from .mcts import SearchParams


@dataclass
class AppConfig:
    map_text: str = DEFAULT_MAP_TEXT
    planner: SearchParams = field(default_factory=lambda: SearchParams(
        iteration_budget=2000, seed=7))
    thresholds: EvidenceThresholds = field(default_factory=EvidenceThresholds)
    llm_backend: str = "double"  # "live" | "double"
    intent_prompt: str = "baseline"
    explain_prompt: str = "answer_first"
    expansion_budget: int = 500
    risk_lexicon: tuple[str, ...] = DEFAULT_RISK_LEXICON
    trace_dir: str | None = None
    query_set: str | None = None  # seeds the double's rulebook when set
    detector: str = "rules"       # hook for a future model-based detector

    def with_overrides(self, doc: dict) -> "AppConfig":
        cfg = replace(self)
        if "map" in doc:
            cfg.map_text = doc["map"]
        if "planner" in doc:
            cfg.planner = replace(cfg.planner, **doc["planner"])
        if "thresholds" in doc:
            cfg.thresholds = replace(cfg.thresholds, **doc["thresholds"])
        for key in ("llm_backend", "intent_prompt", "explain_prompt",
                    "expansion_budget", "trace_dir", "query_set", "detector"):
            if key in doc:
                setattr(cfg, key, doc[key])
        if "risk_lexicon" in doc:
            cfg.risk_lexicon = tuple(doc["risk_lexicon"])
        if cfg.detector != "rules":
            raise ValueError(f"detector {cfg.detector!r} not implemented; use 'rules'")
        return cfg


def load_config(path: str | Path | None) -> AppConfig:
    if path is None:
        return AppConfig()
    doc = json.loads(Path(path).read_text())
    return AppConfig().with_overrides(doc)


def make_client(config: AppConfig):
    """Build the configured LLM backend."""
    if config.llm_backend == "live":
        return LiveClient()
    if config.llm_backend == "double":
        rulebook = Rulebook.with_defaults()
        if config.query_set:
            from .evalharness import load_query_set, rulebook_for
            rulebook = rulebook_for(load_query_set(config.query_set))
        return DeterministicDouble(rulebook)
    raise ValueError(f"unknown llm backend {config.llm_backend!r}")
