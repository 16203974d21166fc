"""Exception types shared across the package."""


class ExplainerError(Exception):
    """Base class for all package errors."""

    code = "error"


class TerminalState(ExplainerError):
    """Transition requested from a hole or goal state."""

    code = "terminal_state"


class NoConvergence(ExplainerError):
    code = "no_convergence"


class TerminalRoot(ExplainerError):
    code = "terminal_root"


class PathDetached(ExplainerError):
    code = "path_detached"


class FormatVersionUnsupported(ExplainerError):
    code = "format_version_unsupported"


class SchemaViolation(ExplainerError):
    """Raised on load when a trace document is structurally broken."""

    code = "schema_violation"

    def __init__(self, field_path: str, message: str):
        super().__init__(f"{field_path}: {message}")
        self.field_path = field_path


class AuthFailure(ExplainerError):
    code = "auth_failure"


class RateLimited(ExplainerError):
    code = "rate_limited"

    def __init__(self, message: str, retry_after: float | None = None):
        super().__init__(message)
        self.retry_after = retry_after


class Timeout(ExplainerError):
    code = "timeout"


class MalformedResponse(ExplainerError):
    code = "malformed_response"


class UnparseableIntent(ExplainerError):
    code = "unparseable_intent"


class UnknownAction(ExplainerError):
    code = "unknown_action"


class TargetTerminal(ExplainerError):
    code = "target_terminal"


class TargetMissing(ExplainerError):
    code = "target_missing"


class EvidenceUnavailable(ExplainerError):
    code = "evidence_unavailable"


class GenerationFailed(ExplainerError):
    code = "generation_failed"

    def __init__(self, message: str, cause: Exception | None = None):
        super().__init__(message)
        self.cause = cause


class EmptyQuerySet(ExplainerError):
    code = "empty_query_set"


class TraceLoadFailure(ExplainerError):
    code = "trace_load_failure"

    def __init__(self, sample_id: str, message: str):
        super().__init__(f"sample {sample_id}: {message}")
        self.sample_id = sample_id


class SessionNotFound(ExplainerError):
    code = "session_not_found"


class StepNotFound(ExplainerError):
    code = "step_not_found"


class EpisodeFinished(ExplainerError):
    code = "episode_finished"
