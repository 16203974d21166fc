// Shapes of the HTTP API responses the UI consumes. Numbers shown in
// the UI come from these payloads verbatim; the client never
// recomputes Q or risk.

export interface MapInfo {
  rows: number;
  cols: number;
  text: string;
}

export interface SessionCreated {
  session_id: string;
  state: number;
  decision_step: number;
  terminal: boolean;
  map: MapInfo;
}

export interface StepSummary {
  decision_step: number;
  root_state: number;
  chosen_action: number;
  chosen_action_name: string;
  new_state: number;
  terminal: boolean;
  terminal_kind: string | null;
  revisions: number;
}

export interface SessionView {
  session_id: string;
  state: number;
  decision_step: number;
  terminal: boolean;
  terminal_kind: string | null;
  map: MapInfo;
  steps: StepSummary[];
}

export interface StepResult {
  decision_step: number;
  root_state: number;
  chosen_action: number;
  chosen_action_name: string;
  sampled_outcome: {
    next_state: number;
    probability: number;
    reward: number;
    terminal: boolean;
  };
  new_state: number;
  terminal: boolean;
  terminal_kind: string | null;
  trace: { step: number; revision: number; path: string };
}

export interface TreeNode {
  node_id: number;
  state: number;
  depth: number;
  visits: number;
  terminal_kind: string | null;
  parent_node: number | null;
  parent_action: number | null;
}

export interface TreeEdge {
  owner: number;
  action: number;
  action_name: string;
  visits: number;
  q: number;
  risk: number | null;
  children: Record<string, number>;
  outcome_counts: Record<string, number>;
}

export interface TreeView {
  root_id: number;
  decision_step: number;
  chosen_action: number;
  chosen_action_name: string;
  map: string;
  expansions: number;
  total_nodes: number;
  shown_nodes: number;
  revision?: number;
  nodes: TreeNode[];
  edges: TreeEdge[];
}

export interface IntentDoc {
  question_type: string;
  target_state: number | string | null;
  target_action: string | null;
  target_path: Array<[number | null, string]> | null;
}

export interface VerdictDoc {
  answerable: boolean;
  reasons: string[];
  expansion_targets: Array<{
    state: number;
    action: number | null;
    action_name: string | null;
  }>;
}

export interface ActionRowDoc {
  action: string;
  visits: number;
  q: number;
  risk: number | null;
  unexplored: boolean;
  top_outcomes: Array<[number, number]>;
}

export interface EvidenceDoc {
  question_type: string;
  target_state: number;
  target_visits: number;
  target_depth: number;
  chosen_action: string | null;
  user_action: string | null;
  action_rows: ActionRowDoc[];
  path_rows: Array<{
    state: number;
    action: string;
    visits: number;
    q: number;
    risk: number | null;
    most_visited_next: number | null;
  }> | null;
  path_risk: number | null;
  total_simulations: number;
  max_depth: number;
  node_count: number;
  expansion_note: string | null;
}

export interface GroundingDoc {
  mention_agent_action: boolean;
  mention_risk: boolean;
  mention_user_action: boolean | null;
  all_passed: boolean;
}

export interface ReportDoc {
  answer_text: string;
  error: string | null;
  grounding: GroundingDoc | null;
  llm_metadata: Record<string, string>;
  evidence: EvidenceDoc;
}

export interface AskResult {
  intent: IntentDoc;
  verdict: VerdictDoc;
  expansion_performed: boolean;
  expansion: {
    target_state: number;
    action: number | null;
    action_name: string | null;
    budget: number;
    revision: number;
  } | null;
  report: ReportDoc | null;
  trace: { step: number; revision: number; path: string };
}

export interface ApiErrorBody {
  code: string;
  message: string;
  details?: Record<string, unknown>;
}
