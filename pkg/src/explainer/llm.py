"""Chat-completion clients.

Two interchangeable backends: a live HTTP client speaking the common
chat-completions wire shape (configured entirely through environment
variables, never a hardcoded vendor), and a deterministic in-process
double that answers from a rulebook so the whole pipeline runs offline.
No other module performs network I/O.
"""

from __future__ import annotations

import json
import logging
import os
import time
from dataclasses import dataclass, field

import httpx

from .errors import AuthFailure, MalformedResponse, RateLimited, Timeout

logger = logging.getLogger(__name__)

ENV_BASE_URL = "EXPLAINER_LLM_BASE_URL"
ENV_MODEL = "EXPLAINER_LLM_MODEL"
ENV_API_KEY = "EXPLAINER_LLM_API_KEY"

FREE_TEXT = "free_text"
STRUCTURED_OBJECT = "structured_object"


@dataclass(frozen=True)
class ChatRequest:
    model: str
    system_prompt: str
    user_message: str
    temperature: float = 0.0
    max_tokens: int = 1024
    response_format_hint: str = FREE_TEXT

    def __post_init__(self):
        if not self.model:
            raise ValueError("model must be nonempty")
        if not self.user_message:
            raise ValueError("user_message must be nonempty")
        if self.temperature < 0:
            raise ValueError("temperature must be >= 0")


@dataclass(frozen=True)
class ChatResponse:
    text: str
    prompt_tokens: int = 0
    completion_tokens: int = 0
    latency_ms: float = 0.0


def _redacted(headers: dict) -> dict:
    return {k: ("<redacted>" if k.lower() == "authorization" else v)
            for k, v in headers.items()}


class LiveClient:
    """HTTP chat-completion client with idempotent retries.

    Transient failures (timeouts, connection errors, 429, 5xx) are
    retried up to `max_attempts` times with exponential backoff
    starting at `backoff_start_s`; a Retry-After header on 429 wins
    over the backoff schedule.
    """

    def __init__(self, base_url: str | None = None, model: str | None = None,
                 api_key: str | None = None, timeout_s: float = 60.0,
                 max_attempts: int = 3, backoff_start_s: float = 1.0,
                 transport: httpx.BaseTransport | None = None, sleep=time.sleep):
        self.base_url = (base_url or os.environ.get(ENV_BASE_URL, "")).rstrip("/")
        self.model = model or os.environ.get(ENV_MODEL, "")
        self._api_key = api_key or os.environ.get(ENV_API_KEY, "")
        if not self._api_key:
            raise AuthFailure(f"no API credential: set {ENV_API_KEY}")
        if not self.base_url:
            raise ValueError(f"no endpoint: set {ENV_BASE_URL}")
        if not self.model:
            raise ValueError(f"no model: set {ENV_MODEL}")
        self.max_attempts = max_attempts
        self.backoff_start_s = backoff_start_s
        self._sleep = sleep
        self._client = httpx.Client(timeout=timeout_s, transport=transport)

    def complete(self, request: ChatRequest) -> ChatResponse:
        body = {
            "model": request.model,
            "messages": [
                {"role": "system", "content": request.system_prompt},
                {"role": "user", "content": request.user_message},
            ],
            "temperature": request.temperature,
            "max_tokens": request.max_tokens,
        }
        if request.response_format_hint == STRUCTURED_OBJECT:
            body["response_format"] = {"type": "json_object"}
        headers = {"Authorization": f"Bearer {self._api_key}"}
        url = f"{self.base_url}/chat/completions"
        logger.info("llm request model=%s chars=%d headers=%s",
                    request.model, len(request.user_message), _redacted(headers))

        delay = self.backoff_start_s
        last_error: Exception | None = None
        for attempt in range(1, self.max_attempts + 1):
            started = time.monotonic()
            try:
                response = self._client.post(url, json=body, headers=headers)
            except httpx.TimeoutException as exc:
                last_error = Timeout(f"request timed out (attempt {attempt}): {exc}")
            except httpx.TransportError as exc:
                last_error = Timeout(f"transport failure (attempt {attempt}): {exc}")
            else:
                if response.status_code in (401, 403):
                    raise AuthFailure(f"endpoint rejected credential ({response.status_code})")
                if response.status_code == 429:
                    retry_after = _parse_retry_after(response)
                    last_error = RateLimited("rate limited", retry_after=retry_after)
                    if attempt < self.max_attempts:
                        self._sleep(retry_after if retry_after is not None else delay)
                        delay *= 2
                        continue
                    raise last_error
                elif response.status_code >= 500:
                    last_error = MalformedResponse(f"server error {response.status_code}")
                elif response.status_code != 200:
                    raise MalformedResponse(
                        f"unexpected status {response.status_code}: {response.text[:200]}")
                else:
                    return self._parse_success(response, (time.monotonic() - started) * 1000)
            if attempt < self.max_attempts:
                self._sleep(delay)
                delay *= 2
        assert last_error is not None
        raise last_error

    def _parse_success(self, response: httpx.Response, latency_ms: float) -> ChatResponse:
        try:
            doc = response.json()
            text = doc["choices"][0]["message"]["content"]
        except (json.JSONDecodeError, KeyError, IndexError, TypeError) as exc:
            raise MalformedResponse(f"cannot extract completion: {exc}") from None
        if not text:
            raise MalformedResponse("empty completion text")
        usage = doc.get("usage", {})
        out = ChatResponse(
            text=text,
            prompt_tokens=usage.get("prompt_tokens", 0),
            completion_tokens=usage.get("completion_tokens", 0),
            latency_ms=latency_ms,
        )
        logger.info("llm response chars=%d tokens=%d/%d",
                    len(out.text), out.prompt_tokens, out.completion_tokens)
        return out


def _parse_retry_after(response: httpx.Response) -> float | None:
    value = response.headers.get("Retry-After")
    if value is None:
        return None
    try:
        return float(value)
    except ValueError:
        return None


# --- deterministic test double -------------------------------------------


FALLBACK_INTENT = {
    "question_type": "general",
    "target_state": None,
    "target_action": None,
    "target_path": None,
    "matched": False,
}

# The three canonical current-state questions every deployment can
# answer without a bundled query set.
BUILTIN_INTENTS = {
    "why did the agent choose up at the current state": {
        "question_type": "why_action", "target_state": "current",
        "target_action": "Up", "target_path": None,
    },
    "what would the agent's strategy look like if the left action had been "
    "explored at the current state": {
        "question_type": "what_if", "target_state": "current",
        "target_action": "Left", "target_path": None,
    },
    "why does going right then down from state 13 lead most reliably toward "
    "the goal": {
        "question_type": "path_why", "target_state": None, "target_action": None,
        "target_path": [[13, "Right"], [None, "Down"]],
    },
}


def normalize_question(text: str) -> str:
    return " ".join(text.lower().split()).strip().rstrip("?!.").strip()


@dataclass
class Rulebook:
    """Question pattern -> canned structured intent payload."""

    intents: dict[str, dict] = field(default_factory=dict)

    @classmethod
    def with_defaults(cls, extra: dict[str, dict] | None = None) -> "Rulebook":
        intents = dict(BUILTIN_INTENTS)
        if extra:
            intents.update(extra)
        return cls(intents=intents)

    def add(self, question: str, payload: dict) -> None:
        self.intents[normalize_question(question)] = payload

    def lookup(self, question: str) -> dict:
        return self.intents.get(normalize_question(question), FALLBACK_INTENT)


class DeterministicDouble:
    """Offline stand-in for the live model.

    Structured-object requests are answered from the rulebook keyed by
    the question line; free-text requests synthesize an explanation
    from the evidence block embedded in the prompt, always naming the
    agent's action, the user's action when present, and risk figures,
    so checker plumbing can be validated independent of model quality.
    """

    model = "deterministic-double"

    def __init__(self, rulebook: Rulebook | None = None):
        self.rulebook = rulebook or Rulebook.with_defaults()

    def complete(self, request: ChatRequest) -> ChatResponse:
        if request.response_format_hint == STRUCTURED_OBJECT:
            text = json.dumps(self.rulebook.lookup(_question_line(request.user_message)))
        else:
            text = _synthesize_answer(request.user_message)
        return ChatResponse(text=text, latency_ms=0.0)


def deterministic_double(rulebook: Rulebook | None = None) -> DeterministicDouble:
    return DeterministicDouble(rulebook)


def _question_line(user_message: str) -> str:
    for line in user_message.splitlines():
        if line.startswith("Question:"):
            return line[len("Question:"):].strip()
    return user_message.strip()


def _evidence_fields(user_message: str) -> dict[str, str]:
    fields = {}
    in_block = False
    for line in user_message.splitlines():
        if line.strip() == "## Evidence":
            in_block = True
            continue
        if line.strip() == "## End Evidence":
            break
        if in_block and ":" in line:
            key, _, value = line.partition(":")
            fields.setdefault(key.strip().lstrip("- "), value.strip())
    return fields


def _synthesize_answer(user_message: str) -> str:
    fields = _evidence_fields(user_message)
    chosen = fields.get("chosen_action", "Left")
    state = fields.get("target_state", "the current state")
    user_action = fields.get("user_action")
    risks = fields.get("risk_values", "0.000")
    action_names = fields.get("action_names", chosen)
    parts = [
        f"The agent committed to {chosen} at state {state} because it carried "
        f"the best recorded value for the visits spent there, with hole risk "
        f"of {risks} across the recorded alternatives."
    ]
    if user_action:
        parts.append(
            f"The {user_action} action you asked about was weighed against "
            f"{action_names}; its recorded statistics are in the evidence table, "
            f"and any unexplored row simply never attracted simulations."
        )
    else:
        parts.append(
            f"Every alternative ({action_names}) is listed with its visit count "
            f"and risk so you can compare them directly."
        )
    return " ".join(parts)
