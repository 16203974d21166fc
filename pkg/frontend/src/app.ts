// DOM bootstrap: wires the API client to the pure render functions.

import { ApiError, ExplainerApi } from "./api.js";
import { renderAsk, renderPresets, PRESET_QUESTIONS, type AskState } from "./ask.js";
import { renderGrid } from "./grid.js";
import { DEFAULT_DEPTH, DEFAULT_MIN_VISITS, renderTree } from "./tree.js";

function apiBase(): string {
  const params = new URLSearchParams(window.location.search);
  return params.get("api") ?? "http://127.0.0.1:8000";
}

export async function boot(root: Document = document): Promise<void> {
  const api = new ExplainerApi(apiBase());
  const gridEl = root.getElementById("grid")!;
  const treeEl = root.getElementById("tree")!;
  const askEl = root.getElementById("ask-output")!;
  const presetsEl = root.getElementById("presets")!;
  const questionEl = root.getElementById("question") as HTMLInputElement;
  const stepBtn = root.getElementById("step") as HTMLButtonElement;
  const askBtn = root.getElementById("ask") as HTMLButtonElement;
  const depthEl = root.getElementById("depth") as HTMLInputElement;
  const minVisitsEl = root.getElementById("min-visits") as HTMLInputElement;

  depthEl.value = String(DEFAULT_DEPTH);
  minVisitsEl.value = String(DEFAULT_MIN_VISITS);
  presetsEl.innerHTML = renderPresets();

  const created = await api.createSession();
  const sessionId = created.session_id;
  const collapsed = new Set<number>();
  let askState: AskState = { kind: "idle" };
  let askPending = false;

  const refreshGrid = async () => {
    gridEl.innerHTML = renderGrid(await api.getSession(sessionId));
  };

  const refreshTree = async () => {
    const session = await api.getSession(sessionId);
    if (!session.steps.length) {
      treeEl.innerHTML = `<p class="hint">no decisions recorded yet</p>`;
      return;
    }
    const lastStep = session.steps[session.steps.length - 1].decision_step;
    const view = await api.getTree(sessionId, lastStep, {
      depth: Number(depthEl.value),
      minVisits: Number(minVisitsEl.value),
    });
    treeEl.innerHTML = renderTree(view, collapsed);
  };

  const refreshAsk = () => {
    askEl.innerHTML = renderAsk(askState);
    stepBtn.disabled = askPending;
    askBtn.disabled = askPending;
  };

  stepBtn.addEventListener("click", async () => {
    try {
      await api.step(sessionId);
      await refreshGrid();
      await refreshTree();
    } catch (err) {
      if (err instanceof ApiError) {
        askState = { kind: "error", question: "", code: err.code, message: err.message };
        refreshAsk();
      }
    }
  });

  const submit = async (question: string) => {
    if (askPending || !question.trim()) return;
    askPending = true;
    askState = { kind: "pending", question };
    refreshAsk();
    try {
      const result = await api.ask(sessionId, question);
      askState = { kind: "answered", question, result };
      await refreshTree();
    } catch (err) {
      askState = err instanceof ApiError
        ? { kind: "error", question, code: err.code, message: err.message }
        : { kind: "error", question, code: "network", message: String(err) };
    } finally {
      askPending = false;
      refreshAsk();
    }
  };

  askBtn.addEventListener("click", () => void submit(questionEl.value));
  presetsEl.addEventListener("click", (event) => {
    const target = event.target as HTMLElement;
    const preset = target.dataset.preset;
    if (preset !== undefined) {
      questionEl.value = PRESET_QUESTIONS[Number(preset)];
      void submit(questionEl.value);
    }
  });
  treeEl.addEventListener("click", (event) => {
    const target = event.target as HTMLElement;
    const node = target.dataset.node;
    if (node !== undefined && target.classList.contains("toggle")) {
      const id = Number(node);
      if (collapsed.has(id)) collapsed.delete(id);
      else collapsed.add(id);
      void refreshTree();
    }
  });
  depthEl.addEventListener("change", () => void refreshTree());
  minVisitsEl.addEventListener("change", () => void refreshTree());

  await refreshGrid();
  await refreshTree();
  refreshAsk();
}

if (typeof document !== "undefined" && document.getElementById("grid")) {
  void boot();
}
