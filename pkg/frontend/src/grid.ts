// Grid rendering: an SVG of the lake with the agent's position plus a
// step log listing each decision's chosen action and sampled landing.

import type { SessionView } from "./types.js";

const CELL = 64;

const CELL_CLASS: Record<string, string> = {
  S: "cell-start",
  F: "cell-frozen",
  H: "cell-hole",
  G: "cell-goal",
};

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function renderGrid(session: SessionView): string {
  const rows = session.map.text.split("\n");
  const cols = session.map.cols;
  const parts: string[] = [];
  const width = cols * CELL;
  const height = rows.length * CELL;
  parts.push(
    `<svg class="grid" viewBox="0 0 ${width} ${height}" role="img" ` +
      `aria-label="lake grid">`,
  );
  rows.forEach((row, r) => {
    [...row].forEach((ch, c) => {
      const state = r * cols + c;
      const cls = CELL_CLASS[ch] ?? "cell-frozen";
      parts.push(
        `<rect class="cell ${cls}" data-state="${state}" x="${c * CELL}" ` +
          `y="${r * CELL}" width="${CELL}" height="${CELL}"></rect>`,
      );
      parts.push(
        `<text class="cell-label" x="${c * CELL + 4}" y="${r * CELL + 14}">` +
          `${state}</text>`,
      );
    });
  });
  const agentRow = Math.floor(session.state / cols);
  const agentCol = session.state % cols;
  parts.push(
    `<circle class="agent" data-state="${session.state}" ` +
      `cx="${agentCol * CELL + CELL / 2}" cy="${agentRow * CELL + CELL / 2}" ` +
      `r="${CELL / 4}"></circle>`,
  );
  parts.push("</svg>");

  parts.push('<ol class="step-log">');
  for (const step of session.steps) {
    const fate = step.terminal ? ` (${step.terminal_kind})` : "";
    parts.push(
      `<li class="step-entry" data-step="${step.decision_step}">` +
        `step ${step.decision_step}: at ${step.root_state} chose ` +
        `<strong>${escapeHtml(step.chosen_action_name)}</strong>, ` +
        `landed on ${step.new_state}${fate}</li>`,
    );
  }
  parts.push("</ol>");
  if (session.terminal) {
    parts.push(
      `<p class="episode-over">episode over: ${session.terminal_kind}</p>`,
    );
  }
  return parts.join("");
}
