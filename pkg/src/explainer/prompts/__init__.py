"""Versioned prompt catalog.

Prompts live as text files under prompts/<kind>/<name>.txt and are
referenced everywhere by id "<kind>/<name>". The wording is our own
reconstruction; nothing here is quoted from elsewhere.
"""

from __future__ import annotations

from importlib import resources


def load_prompt(kind: str, name: str) -> str:
    ref = resources.files("explainer.prompts").joinpath(kind, f"{name}.txt")
    try:
        return ref.read_text()
    except FileNotFoundError:
        raise KeyError(f"no prompt {kind}/{name}") from None


def prompt_id(kind: str, name: str) -> str:
    return f"{kind}/{name}"


def list_prompts(kind: str) -> list[str]:
    base = resources.files("explainer.prompts").joinpath(kind)
    return sorted(p.name.removesuffix(".txt") for p in base.iterdir()
                  if p.name.endswith(".txt"))
