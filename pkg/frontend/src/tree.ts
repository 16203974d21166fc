// Collapsible node-link view of a recorded search tree. Every number
// shown (visits, Q, risk) comes straight from the API payload.

import { escapeHtml } from "./grid.js";
import type { TreeEdge, TreeView } from "./types.js";

export const DEFAULT_DEPTH = 4;
export const DEFAULT_MIN_VISITS = 5;

// Risk 0 -> pale, risk 1 -> saturated red.
export function riskColor(risk: number | null): string {
  if (risk === null) return "#bbbbbb";
  const clamped = Math.max(0, Math.min(1, risk));
  const hue = 10;
  const light = 88 - clamped * 48;
  return `hsl(${hue}, 85%, ${light}%)`;
}

function fmt(value: number): string {
  return value.toFixed(3);
}

function edgeLabel(edge: TreeEdge): string {
  const risk = edge.risk === null ? "n/a" : fmt(edge.risk);
  return (
    `${escapeHtml(edge.action_name)} N=${edge.visits} Q=${fmt(edge.q)} ` +
    `risk=${risk}`
  );
}

export function renderTree(view: TreeView, collapsed: Set<number> = new Set()): string {
  const edgesByOwner = new Map<number, TreeEdge[]>();
  for (const edge of view.edges) {
    const list = edgesByOwner.get(edge.owner) ?? [];
    list.push(edge);
    edgesByOwner.set(edge.owner, list);
  }
  const nodesById = new Map(view.nodes.map((n) => [n.node_id, n]));

  const renderNode = (nodeId: number): string => {
    const node = nodesById.get(nodeId);
    if (!node) return "";
    const isCollapsed = collapsed.has(nodeId);
    const edges = (edgesByOwner.get(nodeId) ?? []).filter(
      (e) => Object.keys(e.children).length > 0 || e.visits > 0,
    );
    const kind = node.terminal_kind ? ` ${node.terminal_kind.toLowerCase()}` : "";
    const toggle = edges.length
      ? `<button class="toggle" data-node="${nodeId}">${isCollapsed ? "+" : "-"}</button>`
      : "";
    const parts = [
      `<li class="tree-node${kind}" data-node="${nodeId}">`,
      toggle,
      `<span class="node-label">s${node.state} N=${node.visits}` +
        `${node.terminal_kind ? ` [${node.terminal_kind}]` : ""}</span>`,
    ];
    if (!isCollapsed && edges.length) {
      parts.push("<ul>");
      for (const edge of edges) {
        parts.push(
          `<li class="tree-edge" data-owner="${edge.owner}" ` +
            `data-action="${edge.action}" ` +
            `style="border-left-color: ${riskColor(edge.risk)}">` +
            `<span class="edge-label">${edgeLabel(edge)}</span>`,
        );
        const children = Object.values(edge.children);
        if (children.length) {
          parts.push("<ul>");
          for (const child of children.sort((a, b) => a - b)) {
            parts.push(renderNode(child));
          }
          parts.push("</ul>");
        }
        parts.push("</li>");
      }
      parts.push("</ul>");
    }
    parts.push("</li>");
    return parts.join("");
  };

  return (
    `<div class="tree-meta">step ${view.decision_step}` +
    (view.revision !== undefined ? ` rev ${view.revision}` : "") +
    ` | chose ${escapeHtml(view.chosen_action_name)}` +
    ` | showing ${view.shown_nodes} of ${view.total_nodes} nodes` +
    (view.expansions > 0 ? ` | expansions: ${view.expansions}` : "") +
    `</div><ul class="tree-root">${renderNode(view.root_id)}</ul>`
  );
}

// New edges introduced by an expansion, for highlight-as-diff.
export function expansionDiff(before: TreeView, after: TreeView): Set<string> {
  const seen = new Set(before.edges.filter((e) => e.visits > 0)
    .map((e) => `${e.owner}:${e.action}`));
  const fresh = new Set<string>();
  for (const edge of after.edges) {
    if (edge.visits > 0 && !seen.has(`${edge.owner}:${edge.action}`)) {
      fresh.add(`${edge.owner}:${edge.action}`);
    }
  }
  return fresh;
}
