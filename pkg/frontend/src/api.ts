// Thin typed client over the session HTTP API. All server errors carry
// {code, message, details}; they surface as ApiError so panels can show
// the code and whatever evidence arrived instead of going blank.

import type {
  ApiErrorBody,
  AskResult,
  SessionCreated,
  SessionView,
  StepResult,
  TreeView,
} from "./types.js";

export class ApiError extends Error {
  readonly code: string;
  readonly status: number;
  readonly details: Record<string, unknown>;

  constructor(status: number, body: ApiErrorBody) {
    super(body.message);
    this.code = body.code;
    this.status = status;
    this.details = body.details ?? {};
  }
}

type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ExplainerApi {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: FetchLike = (...args) => fetch(...args),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(`${this.baseUrl}${path}`, {
      headers: { "Content-Type": "application/json" },
      ...init,
    });
    const body = await response.json();
    if (!response.ok) {
      throw new ApiError(response.status, body as ApiErrorBody);
    }
    return body as T;
  }

  health(): Promise<{ status: string }> {
    return this.request("/health");
  }

  createSession(config?: Record<string, unknown>): Promise<SessionCreated> {
    return this.request("/sessions", {
      method: "POST",
      body: JSON.stringify({ config: config ?? null }),
    });
  }

  getSession(sessionId: string): Promise<SessionView> {
    return this.request(`/sessions/${sessionId}`);
  }

  step(sessionId: string): Promise<StepResult> {
    return this.request(`/sessions/${sessionId}/step`, { method: "POST" });
  }

  ask(sessionId: string, question: string, decisionStep?: number): Promise<AskResult> {
    return this.request(`/sessions/${sessionId}/ask`, {
      method: "POST",
      body: JSON.stringify({ question, decision_step: decisionStep ?? null }),
    });
  }

  getTree(
    sessionId: string,
    step: number,
    opts: { rev?: number; depth?: number; minVisits?: number } = {},
  ): Promise<TreeView> {
    const params = new URLSearchParams();
    if (opts.rev !== undefined) params.set("rev", String(opts.rev));
    if (opts.depth !== undefined) params.set("depth", String(opts.depth));
    if (opts.minVisits !== undefined) params.set("min_visits", String(opts.minVisits));
    const query = params.toString();
    return this.request(`/sessions/${sessionId}/trees/${step}${query ? `?${query}` : ""}`);
  }
}
