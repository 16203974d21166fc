// Ask panel: presets, intent/verdict display, expansion banner, answer
// with evidence table and grounding badges. Rendering is pure
// (state -> HTML) so it can be tested without a DOM.

import { escapeHtml } from "./grid.js";
import type { AskResult, EvidenceDoc } from "./types.js";

export const PRESET_QUESTIONS = [
  "Why did the agent choose Up at the current state?",
  "What would the agent's strategy look like if the Left action had been " +
    "explored at the current state?",
  "Why does going Right then Down from state 13 lead most reliably toward the goal?",
];

export type AskState =
  | { kind: "idle" }
  | { kind: "pending"; question: string }
  | { kind: "answered"; question: string; result: AskResult }
  | { kind: "error"; question: string; code: string; message: string };

export function renderPresets(): string {
  return PRESET_QUESTIONS.map(
    (q, i) =>
      `<button class="preset" data-preset="${i}">${escapeHtml(q)}</button>`,
  ).join("");
}

function badge(name: string, value: boolean | null): string {
  const cls = value === null ? "na" : value ? "pass" : "fail";
  const text = value === null ? "n/a" : value ? "yes" : "no";
  return `<span class="badge badge-${cls}" data-check="${name}">${name}: ${text}</span>`;
}

export function renderEvidenceTable(evidence: EvidenceDoc): string {
  const rows = evidence.action_rows
    .map((row) => {
      const risk = row.risk === null ? "n/a" : row.risk.toFixed(3);
      const mark = row.unexplored ? " (unexplored)" : "";
      return (
        `<tr><td>${escapeHtml(row.action)}${mark}</td>` +
        `<td>${row.visits}</td><td>${row.q.toFixed(3)}</td><td>${risk}</td></tr>`
      );
    })
    .join("");
  const path = evidence.path_rows
    ? `<p class="path-risk">path risk: ${evidence.path_risk?.toFixed(3)}</p>`
    : "";
  const note = evidence.expansion_note
    ? `<p class="expansion-note">${escapeHtml(evidence.expansion_note)}</p>`
    : "";
  return (
    `<details class="evidence"><summary>evidence (state ` +
    `${evidence.target_state}, ${evidence.target_visits} visits)</summary>` +
    `<table><thead><tr><th>action</th><th>N</th><th>Q</th><th>risk</th>` +
    `</tr></thead><tbody>${rows}</tbody></table>${path}${note}</details>`
  );
}

export function renderAsk(state: AskState): string {
  switch (state.kind) {
    case "idle":
      return `<p class="hint">ask a question about the recorded decision</p>`;
    case "pending":
      return `<p class="pending">thinking about: ${escapeHtml(state.question)}</p>`;
    case "error":
      return (
        `<div class="ask-error"><strong>error ${escapeHtml(state.code)}</strong>: ` +
        `${escapeHtml(state.message)}</div>`
      );
    case "answered":
      return renderResult(state.result);
  }
}

function renderResult(result: AskResult): string {
  const parts: string[] = [];
  const intent = result.intent;
  parts.push(
    `<div class="intent">intent: <code>${escapeHtml(intent.question_type)}</code>` +
      (intent.target_state !== null ? ` state=${escapeHtml(String(intent.target_state))}` : "") +
      (intent.target_action ? ` action=${escapeHtml(intent.target_action)}` : "") +
      `</div>`,
  );
  parts.push(
    `<div class="verdict ${result.verdict.answerable ? "ok" : "blocked"}">` +
      `answerable: ${result.verdict.answerable} ` +
      `[${result.verdict.reasons.map(escapeHtml).join(", ")}]</div>`,
  );
  if (result.expansion_performed && result.expansion) {
    const x = result.expansion;
    parts.push(
      `<div class="expansion-banner">grew the tree from state ` +
        `${x.target_state}${x.action_name ? `, action ${escapeHtml(x.action_name)}` : ""}, ` +
        `+${x.budget} simulations (revision ${x.revision})</div>`,
    );
  }
  if (result.report) {
    if (result.report.error) {
      parts.push(
        `<div class="ask-error"><strong>generation failed</strong>: ` +
          `${escapeHtml(result.report.error)}</div>`,
      );
    } else {
      parts.push(
        `<div class="answer">${escapeHtml(result.report.answer_text)}</div>`,
      );
    }
    const grounding = result.report.grounding;
    if (grounding) {
      parts.push(
        `<div class="grounding">` +
          badge("agent action", grounding.mention_agent_action) +
          badge("risk", grounding.mention_risk) +
          badge("user action", grounding.mention_user_action) +
          badge("all", grounding.all_passed) +
          `</div>`,
      );
    }
    parts.push(renderEvidenceTable(result.report.evidence));
  } else if (!result.verdict.answerable) {
    const targets = result.verdict.expansion_targets
      .map((t) => `state ${t.state}${t.action_name ? ` ${t.action_name}` : ""}`)
      .join("; ");
    parts.push(
      `<div class="missing-evidence">not enough recorded evidence; ` +
        `expansion would need to start at: ${escapeHtml(targets)}</div>`,
    );
  }
  return parts.join("");
}
