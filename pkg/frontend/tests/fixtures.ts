// Recorded responses from the HTTP service, frozen for offline tests.
export const fixtures = {
  "session": {
    "session_id": "77ec2a940526",
    "state": 0,
    "decision_step": 3,
    "terminal": false,
    "terminal_kind": null,
    "map": {
      "rows": 4,
      "cols": 4,
      "text": "SFFF\nFHFH\nFFFH\nHFFG"
    },
    "steps": [
      {
        "decision_step": 0,
        "root_state": 0,
        "chosen_action": 0,
        "chosen_action_name": "Left",
        "new_state": 0,
        "terminal": false,
        "terminal_kind": null,
        "revisions": 1
      },
      {
        "decision_step": 1,
        "root_state": 0,
        "chosen_action": 0,
        "chosen_action_name": "Left",
        "new_state": 0,
        "terminal": false,
        "terminal_kind": null,
        "revisions": 1
      },
      {
        "decision_step": 2,
        "root_state": 0,
        "chosen_action": 0,
        "chosen_action_name": "Left",
        "new_state": 0,
        "terminal": false,
        "terminal_kind": null,
        "revisions": 1
      }
    ]
  },
  "steps": [
    {
      "decision_step": 0,
      "root_state": 0,
      "chosen_action": 0,
      "chosen_action_name": "Left",
      "sampled_outcome": {
        "next_state": 0,
        "probability": 0.6666666666666666,
        "reward": 0.0,
        "terminal": false
      },
      "new_state": 0,
      "terminal": false,
      "terminal_kind": null,
      "trace": {
        "step": 0,
        "revision": 0,
        "path": "/tmp/explainer-traces-dwwfkiym/77ec2a940526/step_0.tree"
      }
    },
    {
      "decision_step": 1,
      "root_state": 0,
      "chosen_action": 0,
      "chosen_action_name": "Left",
      "sampled_outcome": {
        "next_state": 0,
        "probability": 0.6666666666666666,
        "reward": 0.0,
        "terminal": false
      },
      "new_state": 0,
      "terminal": false,
      "terminal_kind": null,
      "trace": {
        "step": 1,
        "revision": 0,
        "path": "/tmp/explainer-traces-dwwfkiym/77ec2a940526/step_1.tree"
      }
    },
    {
      "decision_step": 2,
      "root_state": 0,
      "chosen_action": 0,
      "chosen_action_name": "Left",
      "sampled_outcome": {
        "next_state": 0,
        "probability": 0.6666666666666666,
        "reward": 0.0,
        "terminal": false
      },
      "new_state": 0,
      "terminal": false,
      "terminal_kind": null,
      "trace": {
        "step": 2,
        "revision": 0,
        "path": "/tmp/explainer-traces-dwwfkiym/77ec2a940526/step_2.tree"
      }
    }
  ],
  "tree": {
    "root_id": 0,
    "decision_step": 0,
    "chosen_action": 0,
    "chosen_action_name": "Left",
    "map": "SFFF\nFHFH\nFFFH\nHFFG",
    "expansions": 0,
    "total_nodes": 361,
    "shown_nodes": 42,
    "nodes": [
      {
        "node_id": 0,
        "state": 0,
        "depth": 0,
        "visits": 400,
        "terminal_kind": null,
        "parent_node": null,
        "parent_action": null
      },
      {
        "node_id": 1,
        "state": 0,
        "depth": 1,
        "visits": 63,
        "terminal_kind": null,
        "parent_node": 0,
        "parent_action": 0
      },
      {
        "node_id": 2,
        "state": 1,
        "depth": 1,
        "visits": 33,
        "terminal_kind": null,
        "parent_node": 0,
        "parent_action": 1
      },
      {
        "node_id": 3,
        "state": 4,
        "depth": 1,
        "visits": 30,
        "terminal_kind": null,
        "parent_node": 0,
        "parent_action": 2
      },
      {
        "node_id": 4,
        "state": 0,
        "depth": 1,
        "visits": 63,
        "terminal_kind": null,
        "parent_node": 0,
        "parent_action": 3
      },
      {
        "node_id": 5,
        "state": 0,
        "depth": 2,
        "visits": 11,
        "terminal_kind": null,
        "parent_node": 1,
        "parent_action": 0
      },
      {
        "node_id": 6,
        "state": 0,
        "depth": 1,
        "visits": 28,
        "terminal_kind": null,
        "parent_node": 0,
        "parent_action": 1
      },
      {
        "node_id": 7,
        "state": 1,
        "depth": 1,
        "visits": 32,
        "terminal_kind": null,
        "parent_node": 0,
        "parent_action": 2
      },
      {
        "node_id": 8,
        "state": 4,
        "depth": 2,
        "visits": 8,
        "terminal_kind": null,
        "parent_node": 4,
        "parent_action": 0
      },
      {
        "node_id": 9,
        "state": 0,
        "depth": 2,
        "visits": 7,
        "terminal_kind": null,
        "parent_node": 1,
        "parent_action": 1
      },
      {
        "node_id": 12,
        "state": 1,
        "depth": 1,
        "visits": 37,
        "terminal_kind": null,
        "parent_node": 0,
        "parent_action": 3
      },
      {
        "node_id": 13,
        "state": 4,
        "depth": 1,
        "visits": 37,
        "terminal_kind": null,
        "parent_node": 0,
        "parent_action": 0
      },
      {
        "node_id": 15,
        "state": 0,
        "depth": 1,
        "visits": 38,
        "terminal_kind": null,
        "parent_node": 0,
        "parent_action": 2
      },
      {
        "node_id": 16,
        "state": 1,
        "depth": 2,
        "visits": 6,
        "terminal_kind": null,
        "parent_node": 4,
        "parent_action": 1
      },
      {
        "node_id": 17,
        "state": 0,
        "depth": 2,
        "visits": 7,
        "terminal_kind": null,
        "parent_node": 1,
        "parent_action": 2
      },
      {
        "node_id": 21,
        "state": 0,
        "depth": 2,
        "visits": 10,
        "terminal_kind": null,
        "parent_node": 1,
        "parent_action": 3
      },
      {
        "node_id": 22,
        "state": 2,
        "depth": 2,
        "visits": 6,
        "terminal_kind": null,
        "parent_node": 2,
        "parent_action": 1
      },
      {
        "node_id": 24,
        "state": 5,
        "depth": 2,
        "visits": 7,
        "terminal_kind": "Hole",
        "parent_node": 12,
        "parent_action": 1
      },
      {
        "node_id": 25,
        "state": 0,
        "depth": 2,
        "visits": 5,
        "terminal_kind": null,
        "parent_node": 13,
        "parent_action": 0
      },
      {
        "node_id": 26,
        "state": 0,
        "depth": 2,
        "visits": 5,
        "terminal_kind": null,
        "parent_node": 6,
        "parent_action": 2
      },
      {
        "node_id": 27,
        "state": 4,
        "depth": 2,
        "visits": 5,
        "terminal_kind": null,
        "parent_node": 15,
        "parent_action": 1
      },
      {
        "node_id": 28,
        "state": 4,
        "depth": 2,
        "visits": 7,
        "terminal_kind": null,
        "parent_node": 4,
        "parent_action": 2
      },
      {
        "node_id": 29,
        "state": 4,
        "depth": 2,
        "visits": 5,
        "terminal_kind": null,
        "parent_node": 1,
        "parent_action": 0
      },
      {
        "node_id": 30,
        "state": 4,
        "depth": 1,
        "visits": 39,
        "terminal_kind": null,
        "parent_node": 0,
        "parent_action": 1
      },
      {
        "node_id": 33,
        "state": 5,
        "depth": 2,
        "visits": 5,
        "terminal_kind": "Hole",
        "parent_node": 13,
        "parent_action": 1
      },
      {
        "node_id": 34,
        "state": 0,
        "depth": 2,
        "visits": 6,
        "terminal_kind": null,
        "parent_node": 6,
        "parent_action": 3
      },
      {
        "node_id": 35,
        "state": 4,
        "depth": 2,
        "visits": 5,
        "terminal_kind": null,
        "parent_node": 3,
        "parent_action": 1
      },
      {
        "node_id": 36,
        "state": 0,
        "depth": 2,
        "visits": 9,
        "terminal_kind": null,
        "parent_node": 4,
        "parent_action": 3
      },
      {
        "node_id": 38,
        "state": 0,
        "depth": 2,
        "visits": 5,
        "terminal_kind": null,
        "parent_node": 6,
        "parent_action": 0
      },
      {
        "node_id": 39,
        "state": 0,
        "depth": 2,
        "visits": 8,
        "terminal_kind": null,
        "parent_node": 15,
        "parent_action": 3
      },
      {
        "node_id": 43,
        "state": 0,
        "depth": 2,
        "visits": 8,
        "terminal_kind": null,
        "parent_node": 15,
        "parent_action": 0
      },
      {
        "node_id": 44,
        "state": 0,
        "depth": 2,
        "visits": 8,
        "terminal_kind": null,
        "parent_node": 4,
        "parent_action": 0
      },
      {
        "node_id": 47,
        "state": 0,
        "depth": 2,
        "visits": 5,
        "terminal_kind": null,
        "parent_node": 3,
        "parent_action": 2
      },
      {
        "node_id": 48,
        "state": 4,
        "depth": 2,
        "visits": 7,
        "terminal_kind": null,
        "parent_node": 4,
        "parent_action": 1
      },
      {
        "node_id": 56,
        "state": 1,
        "depth": 2,
        "visits": 6,
        "terminal_kind": null,
        "parent_node": 4,
        "parent_action": 3
      },
      {
        "node_id": 61,
        "state": 5,
        "depth": 2,
        "visits": 6,
        "terminal_kind": "Hole",
        "parent_node": 13,
        "parent_action": 3
      },
      {
        "node_id": 75,
        "state": 4,
        "depth": 2,
        "visits": 5,
        "terminal_kind": null,
        "parent_node": 3,
        "parent_action": 0
      },
      {
        "node_id": 84,
        "state": 2,
        "depth": 2,
        "visits": 6,
        "terminal_kind": null,
        "parent_node": 12,
        "parent_action": 3
      },
      {
        "node_id": 91,
        "state": 2,
        "depth": 2,
        "visits": 5,
        "terminal_kind": null,
        "parent_node": 7,
        "parent_action": 3
      },
      {
        "node_id": 92,
        "state": 4,
        "depth": 2,
        "visits": 5,
        "terminal_kind": null,
        "parent_node": 1,
        "parent_action": 1
      },
      {
        "node_id": 110,
        "state": 2,
        "depth": 2,
        "visits": 5,
        "terminal_kind": null,
        "parent_node": 7,
        "parent_action": 1
      },
      {
        "node_id": 144,
        "state": 1,
        "depth": 2,
        "visits": 5,
        "terminal_kind": null,
        "parent_node": 1,
        "parent_action": 3
      }
    ],
    "edges": [
      {
        "owner": 0,
        "action": 0,
        "action_name": "Left",
        "visits": 100,
        "q": 0.0,
        "risk": 0.22,
        "children": {
          "0": 1,
          "4": 13
        },
        "outcome_counts": {
          "0": 63,
          "4": 37
        }
      },
      {
        "owner": 0,
        "action": 1,
        "action_name": "Down",
        "visits": 100,
        "q": 0.0,
        "risk": 0.22,
        "children": {
          "0": 6,
          "1": 2,
          "4": 30
        },
        "outcome_counts": {
          "0": 28,
          "1": 33,
          "4": 39
        }
      },
      {
        "owner": 0,
        "action": 2,
        "action_name": "Right",
        "visits": 100,
        "q": 0.0,
        "risk": 0.19,
        "children": {
          "0": 15,
          "1": 7,
          "4": 3
        },
        "outcome_counts": {
          "0": 38,
          "1": 32,
          "4": 30
        }
      },
      {
        "owner": 0,
        "action": 3,
        "action_name": "Up",
        "visits": 100,
        "q": 0.0,
        "risk": 0.28,
        "children": {
          "0": 4,
          "1": 12
        },
        "outcome_counts": {
          "0": 63,
          "1": 37
        }
      },
      {
        "owner": 1,
        "action": 0,
        "action_name": "Left",
        "visits": 16,
        "q": 0.0,
        "risk": 0.0625,
        "children": {
          "0": 5,
          "4": 29
        },
        "outcome_counts": {
          "0": 11,
          "4": 5
        }
      },
      {
        "owner": 1,
        "action": 1,
        "action_name": "Down",
        "visits": 16,
        "q": 0.0,
        "risk": 0.0625,
        "children": {
          "0": 9,
          "4": 92
        },
        "outcome_counts": {
          "0": 7,
          "1": 4,
          "4": 5
        }
      },
      {
        "owner": 1,
        "action": 2,
        "action_name": "Right",
        "visits": 15,
        "q": 0.0,
        "risk": 0.06666666666666667,
        "children": {
          "0": 17
        },
        "outcome_counts": {
          "0": 7,
          "1": 4,
          "4": 4
        }
      },
      {
        "owner": 1,
        "action": 3,
        "action_name": "Up",
        "visits": 15,
        "q": 0.0,
        "risk": 0.06666666666666667,
        "children": {
          "0": 21,
          "1": 144
        },
        "outcome_counts": {
          "0": 10,
          "1": 5
        }
      },
      {
        "owner": 2,
        "action": 0,
        "action_name": "Left",
        "visits": 8,
        "q": 0.0,
        "risk": 0.375,
        "children": {},
        "outcome_counts": {
          "0": 1,
          "1": 4,
          "5": 3
        }
      },
      {
        "owner": 2,
        "action": 1,
        "action_name": "Down",
        "visits": 8,
        "q": 0.0,
        "risk": 0.125,
        "children": {
          "2": 22
        },
        "outcome_counts": {
          "0": 1,
          "2": 6,
          "5": 1
        }
      },
      {
        "owner": 2,
        "action": 2,
        "action_name": "Right",
        "visits": 8,
        "q": 0.0,
        "risk": 0.375,
        "children": {},
        "outcome_counts": {
          "1": 2,
          "2": 3,
          "5": 3
        }
      },
      {
        "owner": 2,
        "action": 3,
        "action_name": "Up",
        "visits": 8,
        "q": 0.0,
        "risk": 0.125,
        "children": {},
        "outcome_counts": {
          "0": 4,
          "1": 3,
          "2": 1
        }
      },
      {
        "owner": 3,
        "action": 0,
        "action_name": "Left",
        "visits": 8,
        "q": 0.0,
        "risk": 0.125,
        "children": {
          "4": 75
        },
        "outcome_counts": {
          "0": 2,
          "4": 5,
          "8": 1
        }
      },
      {
        "owner": 3,
        "action": 1,
        "action_name": "Down",
        "visits": 7,
        "q": 0.0,
        "risk": 0.42857142857142855,
        "children": {
          "4": 35
        },
        "outcome_counts": {
          "4": 5,
          "8": 2
        }
      },
      {
        "owner": 3,
        "action": 2,
        "action_name": "Right",
        "visits": 7,
        "q": 0.0,
        "risk": 0.14285714285714285,
        "children": {
          "0": 47
        },
        "outcome_counts": {
          "0": 5,
          "5": 1,
          "8": 1
        }
      },
      {
        "owner": 3,
        "action": 3,
        "action_name": "Up",
        "visits": 7,
        "q": 0.0,
        "risk": 0.5714285714285714,
        "children": {},
        "outcome_counts": {
          "0": 1,
          "4": 2,
          "5": 4
        }
      },
      {
        "owner": 4,
        "action": 0,
        "action_name": "Left",
        "visits": 16,
        "q": 0.0,
        "risk": 0.25,
        "children": {
          "0": 44,
          "4": 8
        },
        "outcome_counts": {
          "0": 8,
          "4": 8
        }
      },
      {
        "owner": 4,
        "action": 1,
        "action_name": "Down",
        "visits": 16,
        "q": 0.0,
        "risk": 0.25,
        "children": {
          "1": 16,
          "4": 48
        },
        "outcome_counts": {
          "0": 3,
          "1": 6,
          "4": 7
        }
      },
      {
        "owner": 4,
        "action": 2,
        "action_name": "Right",
        "visits": 15,
        "q": 0.0,
        "risk": 0.2,
        "children": {
          "4": 28
        },
        "outcome_counts": {
          "0": 4,
          "1": 4,
          "4": 7
        }
      },
      {
        "owner": 4,
        "action": 3,
        "action_name": "Up",
        "visits": 15,
        "q": 0.0,
        "risk": 0.06666666666666667,
        "children": {
          "0": 36,
          "1": 56
        },
        "outcome_counts": {
          "0": 9,
          "1": 6
        }
      },
      {
        "owner": 5,
        "action": 0,
        "action_name": "Left",
        "visits": 3,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "0": 2,
          "4": 1
        }
      },
      {
        "owner": 5,
        "action": 1,
        "action_name": "Down",
        "visits": 3,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "1": 2,
          "4": 1
        }
      },
      {
        "owner": 5,
        "action": 2,
        "action_name": "Right",
        "visits": 2,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "0": 2
        }
      },
      {
        "owner": 5,
        "action": 3,
        "action_name": "Up",
        "visits": 2,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "0": 1,
          "1": 1
        }
      },
      {
        "owner": 6,
        "action": 0,
        "action_name": "Left",
        "visits": 7,
        "q": 0.0,
        "risk": 0.0,
        "children": {
          "0": 38
        },
        "outcome_counts": {
          "0": 5,
          "4": 2
        }
      },
      {
        "owner": 6,
        "action": 1,
        "action_name": "Down",
        "visits": 7,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "0": 4,
          "1": 2,
          "4": 1
        }
      },
      {
        "owner": 6,
        "action": 2,
        "action_name": "Right",
        "visits": 7,
        "q": 0.0,
        "risk": 0.14285714285714285,
        "children": {
          "0": 26
        },
        "outcome_counts": {
          "0": 5,
          "1": 2
        }
      },
      {
        "owner": 6,
        "action": 3,
        "action_name": "Up",
        "visits": 6,
        "q": 0.0,
        "risk": 0.0,
        "children": {
          "0": 34
        },
        "outcome_counts": {
          "0": 6
        }
      },
      {
        "owner": 7,
        "action": 0,
        "action_name": "Left",
        "visits": 8,
        "q": 0.0,
        "risk": 0.625,
        "children": {},
        "outcome_counts": {
          "0": 2,
          "1": 2,
          "5": 4
        }
      },
      {
        "owner": 7,
        "action": 1,
        "action_name": "Down",
        "visits": 8,
        "q": 0.0,
        "risk": 0.125,
        "children": {
          "2": 110
        },
        "outcome_counts": {
          "0": 2,
          "2": 5,
          "5": 1
        }
      },
      {
        "owner": 7,
        "action": 2,
        "action_name": "Right",
        "visits": 8,
        "q": 0.0,
        "risk": 0.25,
        "children": {},
        "outcome_counts": {
          "1": 2,
          "2": 4,
          "5": 2
        }
      },
      {
        "owner": 7,
        "action": 3,
        "action_name": "Up",
        "visits": 7,
        "q": 0.0,
        "risk": 0.0,
        "children": {
          "2": 91
        },
        "outcome_counts": {
          "1": 2,
          "2": 5
        }
      },
      {
        "owner": 8,
        "action": 0,
        "action_name": "Left",
        "visits": 2,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "0": 2
        }
      },
      {
        "owner": 8,
        "action": 1,
        "action_name": "Down",
        "visits": 2,
        "q": 0.0,
        "risk": 1.0,
        "children": {},
        "outcome_counts": {
          "5": 2
        }
      },
      {
        "owner": 8,
        "action": 2,
        "action_name": "Right",
        "visits": 2,
        "q": 0.0,
        "risk": 0.5,
        "children": {},
        "outcome_counts": {
          "5": 1,
          "8": 1
        }
      },
      {
        "owner": 8,
        "action": 3,
        "action_name": "Up",
        "visits": 1,
        "q": 0.0,
        "risk": 1.0,
        "children": {},
        "outcome_counts": {
          "5": 1
        }
      },
      {
        "owner": 9,
        "action": 0,
        "action_name": "Left",
        "visits": 2,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "4": 2
        }
      },
      {
        "owner": 9,
        "action": 1,
        "action_name": "Down",
        "visits": 2,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "0": 2
        }
      },
      {
        "owner": 9,
        "action": 2,
        "action_name": "Right",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "4": 1
        }
      },
      {
        "owner": 9,
        "action": 3,
        "action_name": "Up",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "0": 1
        }
      },
      {
        "owner": 12,
        "action": 0,
        "action_name": "Left",
        "visits": 9,
        "q": 0.0,
        "risk": 0.5555555555555556,
        "children": {},
        "outcome_counts": {
          "0": 3,
          "1": 4,
          "5": 2
        }
      },
      {
        "owner": 12,
        "action": 1,
        "action_name": "Down",
        "visits": 9,
        "q": 0.0,
        "risk": 0.7777777777777778,
        "children": {
          "5": 24
        },
        "outcome_counts": {
          "2": 2,
          "5": 7
        }
      },
      {
        "owner": 12,
        "action": 2,
        "action_name": "Right",
        "visits": 9,
        "q": 0.0,
        "risk": 0.4444444444444444,
        "children": {},
        "outcome_counts": {
          "1": 4,
          "2": 2,
          "5": 3
        }
      },
      {
        "owner": 12,
        "action": 3,
        "action_name": "Up",
        "visits": 9,
        "q": 0.0,
        "risk": 0.0,
        "children": {
          "2": 84
        },
        "outcome_counts": {
          "0": 1,
          "1": 2,
          "2": 6
        }
      },
      {
        "owner": 13,
        "action": 0,
        "action_name": "Left",
        "visits": 9,
        "q": 0.0,
        "risk": 0.1111111111111111,
        "children": {
          "0": 25
        },
        "outcome_counts": {
          "0": 5,
          "4": 4
        }
      },
      {
        "owner": 13,
        "action": 1,
        "action_name": "Down",
        "visits": 9,
        "q": 0.0,
        "risk": 0.6666666666666666,
        "children": {
          "5": 33
        },
        "outcome_counts": {
          "4": 1,
          "5": 5,
          "8": 3
        }
      },
      {
        "owner": 13,
        "action": 2,
        "action_name": "Right",
        "visits": 9,
        "q": 0.0,
        "risk": 0.5555555555555556,
        "children": {},
        "outcome_counts": {
          "0": 2,
          "5": 4,
          "8": 3
        }
      },
      {
        "owner": 13,
        "action": 3,
        "action_name": "Up",
        "visits": 9,
        "q": 0.0,
        "risk": 0.6666666666666666,
        "children": {
          "5": 61
        },
        "outcome_counts": {
          "0": 1,
          "4": 2,
          "5": 6
        }
      },
      {
        "owner": 15,
        "action": 0,
        "action_name": "Left",
        "visits": 10,
        "q": 0.0,
        "risk": 0.0,
        "children": {
          "0": 43
        },
        "outcome_counts": {
          "0": 8,
          "4": 2
        }
      },
      {
        "owner": 15,
        "action": 1,
        "action_name": "Down",
        "visits": 9,
        "q": 0.0,
        "risk": 0.2222222222222222,
        "children": {
          "4": 27
        },
        "outcome_counts": {
          "0": 3,
          "1": 1,
          "4": 5
        }
      },
      {
        "owner": 15,
        "action": 2,
        "action_name": "Right",
        "visits": 9,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "0": 3,
          "1": 4,
          "4": 2
        }
      },
      {
        "owner": 15,
        "action": 3,
        "action_name": "Up",
        "visits": 9,
        "q": 0.0,
        "risk": 0.0,
        "children": {
          "0": 39
        },
        "outcome_counts": {
          "0": 8,
          "1": 1
        }
      },
      {
        "owner": 16,
        "action": 0,
        "action_name": "Left",
        "visits": 2,
        "q": 0.0,
        "risk": 0.5,
        "children": {},
        "outcome_counts": {
          "1": 1,
          "5": 1
        }
      },
      {
        "owner": 16,
        "action": 1,
        "action_name": "Down",
        "visits": 1,
        "q": 0.0,
        "risk": 1.0,
        "children": {},
        "outcome_counts": {
          "5": 1
        }
      },
      {
        "owner": 16,
        "action": 2,
        "action_name": "Right",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "1": 1
        }
      },
      {
        "owner": 16,
        "action": 3,
        "action_name": "Up",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "0": 1
        }
      },
      {
        "owner": 17,
        "action": 0,
        "action_name": "Left",
        "visits": 2,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "0": 1,
          "4": 1
        }
      },
      {
        "owner": 17,
        "action": 1,
        "action_name": "Down",
        "visits": 2,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "1": 1,
          "4": 1
        }
      },
      {
        "owner": 17,
        "action": 2,
        "action_name": "Right",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "1": 1
        }
      },
      {
        "owner": 17,
        "action": 3,
        "action_name": "Up",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "0": 1
        }
      },
      {
        "owner": 21,
        "action": 0,
        "action_name": "Left",
        "visits": 3,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "0": 2,
          "4": 1
        }
      },
      {
        "owner": 21,
        "action": 1,
        "action_name": "Down",
        "visits": 2,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "4": 2
        }
      },
      {
        "owner": 21,
        "action": 2,
        "action_name": "Right",
        "visits": 2,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "0": 2
        }
      },
      {
        "owner": 21,
        "action": 3,
        "action_name": "Up",
        "visits": 2,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "0": 2
        }
      },
      {
        "owner": 22,
        "action": 0,
        "action_name": "Left",
        "visits": 2,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "1": 1,
          "2": 1
        }
      },
      {
        "owner": 22,
        "action": 1,
        "action_name": "Down",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "6": 1
        }
      },
      {
        "owner": 22,
        "action": 2,
        "action_name": "Right",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "3": 1
        }
      },
      {
        "owner": 22,
        "action": 3,
        "action_name": "Up",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "2": 1
        }
      },
      {
        "owner": 25,
        "action": 0,
        "action_name": "Left",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "0": 1
        }
      },
      {
        "owner": 25,
        "action": 1,
        "action_name": "Down",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "1": 1
        }
      },
      {
        "owner": 25,
        "action": 2,
        "action_name": "Right",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "4": 1
        }
      },
      {
        "owner": 25,
        "action": 3,
        "action_name": "Up",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "1": 1
        }
      },
      {
        "owner": 26,
        "action": 0,
        "action_name": "Left",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "4": 1
        }
      },
      {
        "owner": 26,
        "action": 1,
        "action_name": "Down",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "4": 1
        }
      },
      {
        "owner": 26,
        "action": 2,
        "action_name": "Right",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "4": 1
        }
      },
      {
        "owner": 26,
        "action": 3,
        "action_name": "Up",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "0": 1
        }
      },
      {
        "owner": 27,
        "action": 0,
        "action_name": "Left",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "0": 1
        }
      },
      {
        "owner": 27,
        "action": 1,
        "action_name": "Down",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "4": 1
        }
      },
      {
        "owner": 27,
        "action": 2,
        "action_name": "Right",
        "visits": 1,
        "q": 0.0,
        "risk": 1.0,
        "children": {},
        "outcome_counts": {
          "5": 1
        }
      },
      {
        "owner": 27,
        "action": 3,
        "action_name": "Up",
        "visits": 1,
        "q": 0.0,
        "risk": 1.0,
        "children": {},
        "outcome_counts": {
          "5": 1
        }
      },
      {
        "owner": 28,
        "action": 0,
        "action_name": "Left",
        "visits": 2,
        "q": 0.0,
        "risk": 0.5,
        "children": {},
        "outcome_counts": {
          "8": 2
        }
      },
      {
        "owner": 28,
        "action": 1,
        "action_name": "Down",
        "visits": 2,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "4": 1,
          "8": 1
        }
      },
      {
        "owner": 28,
        "action": 2,
        "action_name": "Right",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "8": 1
        }
      },
      {
        "owner": 28,
        "action": 3,
        "action_name": "Up",
        "visits": 1,
        "q": 0.0,
        "risk": 1.0,
        "children": {},
        "outcome_counts": {
          "5": 1
        }
      },
      {
        "owner": 29,
        "action": 0,
        "action_name": "Left",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "8": 1
        }
      },
      {
        "owner": 29,
        "action": 1,
        "action_name": "Down",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "8": 1
        }
      },
      {
        "owner": 29,
        "action": 2,
        "action_name": "Right",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "0": 1
        }
      },
      {
        "owner": 29,
        "action": 3,
        "action_name": "Up",
        "visits": 1,
        "q": 0.0,
        "risk": 1.0,
        "children": {},
        "outcome_counts": {
          "5": 1
        }
      },
      {
        "owner": 30,
        "action": 0,
        "action_name": "Left",
        "visits": 10,
        "q": 0.0,
        "risk": 0.1,
        "children": {},
        "outcome_counts": {
          "0": 3,
          "4": 3,
          "8": 4
        }
      },
      {
        "owner": 30,
        "action": 1,
        "action_name": "Down",
        "visits": 10,
        "q": 0.0,
        "risk": 0.5,
        "children": {},
        "outcome_counts": {
          "4": 4,
          "5": 4,
          "8": 2
        }
      },
      {
        "owner": 30,
        "action": 2,
        "action_name": "Right",
        "visits": 9,
        "q": 0.0,
        "risk": 0.4444444444444444,
        "children": {},
        "outcome_counts": {
          "0": 4,
          "5": 4,
          "8": 1
        }
      },
      {
        "owner": 30,
        "action": 3,
        "action_name": "Up",
        "visits": 9,
        "q": 0.0,
        "risk": 0.3333333333333333,
        "children": {},
        "outcome_counts": {
          "0": 4,
          "4": 3,
          "5": 2
        }
      },
      {
        "owner": 34,
        "action": 0,
        "action_name": "Left",
        "visits": 2,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "0": 1,
          "4": 1
        }
      },
      {
        "owner": 34,
        "action": 1,
        "action_name": "Down",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "0": 1
        }
      },
      {
        "owner": 34,
        "action": 2,
        "action_name": "Right",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "1": 1
        }
      },
      {
        "owner": 34,
        "action": 3,
        "action_name": "Up",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "1": 1
        }
      },
      {
        "owner": 35,
        "action": 0,
        "action_name": "Left",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "8": 1
        }
      },
      {
        "owner": 35,
        "action": 1,
        "action_name": "Down",
        "visits": 1,
        "q": 0.0,
        "risk": 1.0,
        "children": {},
        "outcome_counts": {
          "5": 1
        }
      },
      {
        "owner": 35,
        "action": 2,
        "action_name": "Right",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "0": 1
        }
      },
      {
        "owner": 35,
        "action": 3,
        "action_name": "Up",
        "visits": 1,
        "q": 0.0,
        "risk": 1.0,
        "children": {},
        "outcome_counts": {
          "5": 1
        }
      },
      {
        "owner": 36,
        "action": 0,
        "action_name": "Left",
        "visits": 2,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "0": 2
        }
      },
      {
        "owner": 36,
        "action": 1,
        "action_name": "Down",
        "visits": 2,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "0": 1,
          "1": 1
        }
      },
      {
        "owner": 36,
        "action": 2,
        "action_name": "Right",
        "visits": 2,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "1": 1,
          "4": 1
        }
      },
      {
        "owner": 36,
        "action": 3,
        "action_name": "Up",
        "visits": 2,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "0": 1,
          "1": 1
        }
      },
      {
        "owner": 38,
        "action": 0,
        "action_name": "Left",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "0": 1
        }
      },
      {
        "owner": 38,
        "action": 1,
        "action_name": "Down",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "4": 1
        }
      },
      {
        "owner": 38,
        "action": 2,
        "action_name": "Right",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "1": 1
        }
      },
      {
        "owner": 38,
        "action": 3,
        "action_name": "Up",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "0": 1
        }
      },
      {
        "owner": 39,
        "action": 0,
        "action_name": "Left",
        "visits": 2,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "0": 1,
          "4": 1
        }
      },
      {
        "owner": 39,
        "action": 1,
        "action_name": "Down",
        "visits": 2,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "1": 1,
          "4": 1
        }
      },
      {
        "owner": 39,
        "action": 2,
        "action_name": "Right",
        "visits": 2,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "0": 2
        }
      },
      {
        "owner": 39,
        "action": 3,
        "action_name": "Up",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "1": 1
        }
      },
      {
        "owner": 43,
        "action": 0,
        "action_name": "Left",
        "visits": 2,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "0": 1,
          "4": 1
        }
      },
      {
        "owner": 43,
        "action": 1,
        "action_name": "Down",
        "visits": 2,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "1": 1,
          "4": 1
        }
      },
      {
        "owner": 43,
        "action": 2,
        "action_name": "Right",
        "visits": 2,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "4": 2
        }
      },
      {
        "owner": 43,
        "action": 3,
        "action_name": "Up",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "1": 1
        }
      },
      {
        "owner": 44,
        "action": 0,
        "action_name": "Left",
        "visits": 2,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "0": 1,
          "4": 1
        }
      },
      {
        "owner": 44,
        "action": 1,
        "action_name": "Down",
        "visits": 2,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "0": 2
        }
      },
      {
        "owner": 44,
        "action": 2,
        "action_name": "Right",
        "visits": 2,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "0": 1,
          "4": 1
        }
      },
      {
        "owner": 44,
        "action": 3,
        "action_name": "Up",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "0": 1
        }
      },
      {
        "owner": 47,
        "action": 0,
        "action_name": "Left",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "0": 1
        }
      },
      {
        "owner": 47,
        "action": 1,
        "action_name": "Down",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "1": 1
        }
      },
      {
        "owner": 47,
        "action": 2,
        "action_name": "Right",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "4": 1
        }
      },
      {
        "owner": 47,
        "action": 3,
        "action_name": "Up",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "0": 1
        }
      },
      {
        "owner": 48,
        "action": 0,
        "action_name": "Left",
        "visits": 2,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "4": 1,
          "8": 1
        }
      },
      {
        "owner": 48,
        "action": 1,
        "action_name": "Down",
        "visits": 2,
        "q": 0.0,
        "risk": 0.5,
        "children": {},
        "outcome_counts": {
          "4": 1,
          "5": 1
        }
      },
      {
        "owner": 48,
        "action": 2,
        "action_name": "Right",
        "visits": 1,
        "q": 0.0,
        "risk": 1.0,
        "children": {},
        "outcome_counts": {
          "5": 1
        }
      },
      {
        "owner": 48,
        "action": 3,
        "action_name": "Up",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "4": 1
        }
      },
      {
        "owner": 56,
        "action": 0,
        "action_name": "Left",
        "visits": 2,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "1": 2
        }
      },
      {
        "owner": 56,
        "action": 1,
        "action_name": "Down",
        "visits": 1,
        "q": 0.0,
        "risk": 1.0,
        "children": {},
        "outcome_counts": {
          "5": 1
        }
      },
      {
        "owner": 56,
        "action": 2,
        "action_name": "Right",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "2": 1
        }
      },
      {
        "owner": 56,
        "action": 3,
        "action_name": "Up",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "2": 1
        }
      },
      {
        "owner": 75,
        "action": 0,
        "action_name": "Left",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "0": 1
        }
      },
      {
        "owner": 75,
        "action": 1,
        "action_name": "Down",
        "visits": 1,
        "q": 0.0,
        "risk": 1.0,
        "children": {},
        "outcome_counts": {
          "5": 1
        }
      },
      {
        "owner": 75,
        "action": 2,
        "action_name": "Right",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "8": 1
        }
      },
      {
        "owner": 75,
        "action": 3,
        "action_name": "Up",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "4": 1
        }
      },
      {
        "owner": 84,
        "action": 0,
        "action_name": "Left",
        "visits": 2,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "1": 1,
          "2": 1
        }
      },
      {
        "owner": 84,
        "action": 1,
        "action_name": "Down",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "6": 1
        }
      },
      {
        "owner": 84,
        "action": 2,
        "action_name": "Right",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "2": 1
        }
      },
      {
        "owner": 84,
        "action": 3,
        "action_name": "Up",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "2": 1
        }
      },
      {
        "owner": 91,
        "action": 0,
        "action_name": "Left",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "6": 1
        }
      },
      {
        "owner": 91,
        "action": 1,
        "action_name": "Down",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "1": 1
        }
      },
      {
        "owner": 91,
        "action": 2,
        "action_name": "Right",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "6": 1
        }
      },
      {
        "owner": 91,
        "action": 3,
        "action_name": "Up",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "1": 1
        }
      },
      {
        "owner": 92,
        "action": 0,
        "action_name": "Left",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "0": 1
        }
      },
      {
        "owner": 92,
        "action": 1,
        "action_name": "Down",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "4": 1
        }
      },
      {
        "owner": 92,
        "action": 2,
        "action_name": "Right",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "0": 1
        }
      },
      {
        "owner": 92,
        "action": 3,
        "action_name": "Up",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "4": 1
        }
      },
      {
        "owner": 110,
        "action": 0,
        "action_name": "Left",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "2": 1
        }
      },
      {
        "owner": 110,
        "action": 1,
        "action_name": "Down",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "1": 1
        }
      },
      {
        "owner": 110,
        "action": 2,
        "action_name": "Right",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "6": 1
        }
      },
      {
        "owner": 110,
        "action": 3,
        "action_name": "Up",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "1": 1
        }
      },
      {
        "owner": 144,
        "action": 0,
        "action_name": "Left",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "1": 1
        }
      },
      {
        "owner": 144,
        "action": 1,
        "action_name": "Down",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "2": 1
        }
      },
      {
        "owner": 144,
        "action": 2,
        "action_name": "Right",
        "visits": 1,
        "q": 0.0,
        "risk": 1.0,
        "children": {},
        "outcome_counts": {
          "5": 1
        }
      },
      {
        "owner": 144,
        "action": 3,
        "action_name": "Up",
        "visits": 1,
        "q": 0.0,
        "risk": 0.0,
        "children": {},
        "outcome_counts": {
          "0": 1
        }
      }
    ],
    "revision": 0
  },
  "askExpansion": {
    "intent": {
      "question_type": "what_if",
      "target_state": "current",
      "target_action": "Left",
      "target_path": null
    },
    "verdict": {
      "answerable": true,
      "reasons": [
        "OK"
      ],
      "expansion_targets": []
    },
    "expansion_performed": true,
    "expansion": {
      "target_state": 0,
      "action": 0,
      "action_name": "Left",
      "budget": 500,
      "revision": 1
    },
    "report": {
      "answer_text": "The agent committed to Left at state 0 because it carried the best recorded value for the visits spent there, with hole risk of 0.276, 0.167 across the recorded alternatives. The Left action you asked about was weighed against Left, Down, Right, Up; its recorded statistics are in the evidence table, and any unexplored row simply never attracted simulations.",
      "error": null,
      "grounding": {
        "mention_agent_action": true,
        "mention_risk": true,
        "mention_user_action": null,
        "all_passed": true
      },
      "llm_metadata": {
        "model": "deterministic-double",
        "prompt_id": "explain/answer_first"
      },
      "evidence": {
        "question_type": "what_if",
        "target_state": 0,
        "target_visits": 525,
        "target_depth": 0,
        "chosen_action": "Left",
        "user_action": "Left",
        "action_rows": [
          {
            "action": "Left",
            "visits": 507,
            "q": 0.0,
            "risk": 0.27613412228796846,
            "unexplored": false,
            "top_outcomes": [
              [
                0,
                337
              ],
              [
                4,
                170
              ]
            ]
          },
          {
            "action": "Down",
            "visits": 6,
            "q": 0.0,
            "risk": 0.16666666666666666,
            "unexplored": false,
            "top_outcomes": [
              [
                0,
                2
              ],
              [
                1,
                2
              ],
              [
                4,
                2
              ]
            ]
          },
          {
            "action": "Right",
            "visits": 6,
            "q": 0.0,
            "risk": 0.16666666666666666,
            "unexplored": false,
            "top_outcomes": [
              [
                1,
                3
              ],
              [
                4,
                3
              ]
            ]
          },
          {
            "action": "Up",
            "visits": 6,
            "q": 0.0,
            "risk": 0.16666666666666666,
            "unexplored": false,
            "top_outcomes": [
              [
                0,
                4
              ],
              [
                1,
                2
              ]
            ]
          }
        ],
        "path_rows": null,
        "path_risk": null,
        "total_simulations": 525,
        "max_depth": 5,
        "node_count": 447,
        "expansion_note": "Parts of this evidence were produced by targeted expansion run after the original decision, specifically to answer questions like this one; the recorded decision itself is unchanged."
      }
    },
    "trace": {
      "step": 0,
      "revision": 1,
      "path": "/tmp/explainer-traces-dwwfkiym/151901b2487c/step_0.rev1.tree"
    }
  },
  "askPlain": {
    "intent": {
      "question_type": "general",
      "target_state": null,
      "target_action": null,
      "target_path": null
    },
    "verdict": {
      "answerable": true,
      "reasons": [
        "OK"
      ],
      "expansion_targets": []
    },
    "expansion_performed": false,
    "expansion": null,
    "report": {
      "answer_text": "The agent committed to Left at state 0 because it carried the best recorded value for the visits spent there, with hole risk of 0.220, 0.190, 0.280 across the recorded alternatives. Every alternative (Left, Down, Right, Up) is listed with its visit count and risk so you can compare them directly.",
      "error": null,
      "grounding": {
        "mention_agent_action": true,
        "mention_risk": true,
        "mention_user_action": null,
        "all_passed": true
      },
      "llm_metadata": {
        "model": "deterministic-double",
        "prompt_id": "explain/answer_first"
      },
      "evidence": {
        "question_type": "general",
        "target_state": 0,
        "target_visits": 400,
        "target_depth": 0,
        "chosen_action": "Left",
        "user_action": null,
        "action_rows": [
          {
            "action": "Left",
            "visits": 100,
            "q": 0.0,
            "risk": 0.22,
            "unexplored": false,
            "top_outcomes": [
              [
                0,
                63
              ],
              [
                4,
                37
              ]
            ]
          },
          {
            "action": "Down",
            "visits": 100,
            "q": 0.0,
            "risk": 0.22,
            "unexplored": false,
            "top_outcomes": [
              [
                4,
                39
              ],
              [
                1,
                33
              ],
              [
                0,
                28
              ]
            ]
          },
          {
            "action": "Right",
            "visits": 100,
            "q": 0.0,
            "risk": 0.19,
            "unexplored": false,
            "top_outcomes": [
              [
                0,
                38
              ],
              [
                1,
                32
              ],
              [
                4,
                30
              ]
            ]
          },
          {
            "action": "Up",
            "visits": 100,
            "q": 0.0,
            "risk": 0.28,
            "unexplored": false,
            "top_outcomes": [
              [
                0,
                63
              ],
              [
                1,
                37
              ]
            ]
          }
        ],
        "path_rows": null,
        "path_risk": null,
        "total_simulations": 400,
        "max_depth": 4,
        "node_count": 361,
        "expansion_note": null
      }
    },
    "trace": {
      "step": 0,
      "revision": 0,
      "path": "/tmp/explainer-traces-dwwfkiym/77ec2a940526/step_0.tree"
    }
  },
  "error": {
    "code": "session_not_found",
    "message": "no session nosuch",
    "details": {
      "type": "SessionNotFound"
    }
  }
} as const;
