"""Value iteration over the grid MDP.

Used as a correctness oracle for the planner; the explanation pipeline
never consults it.
"""

from __future__ import annotations

import numpy as np

from .env import Action, GridMap, transition_distribution
from .errors import NoConvergence

MAX_SWEEPS = 100_000


def value_iteration(grid: GridMap, gamma: float, tol: float) -> tuple[list[float], dict[int, set[Action]]]:
    """Solve the MDP; returns state values and the greedy policy set.

    Terminal states have value 0 (reward is earned on entry). The
    greedy set at each non-terminal state holds every action whose
    backed-up value is within `tol` of the best one, so exact ties
    survive as sets.
    """
    if not 0 < gamma <= 1:
        raise ValueError("gamma must be in (0, 1]")
    if tol <= 0:
        raise ValueError("tol must be positive")

    n = grid.n_states
    terminal = np.array([grid.is_terminal(s) for s in range(n)])
    # q_parts[s][a] = list of (prob, reward, next_state, next_terminal)
    probs = np.zeros((n, 4, n))
    rewards = np.zeros((n, 4))
    for s in range(n):
        if terminal[s]:
            continue
        for a in Action:
            for o in transition_distribution(grid, s, a):
                probs[s, a, o.next_state] += o.probability
                rewards[s, a] += o.probability * o.reward

    values = np.zeros(n)
    cont = np.where(terminal, 0.0, 1.0)
    for _ in range(MAX_SWEEPS):
        q = rewards + gamma * probs @ (values * cont)
        new_values = np.where(terminal, 0.0, q.max(axis=1))
        residual = float(np.max(np.abs(new_values - values)))
        values = new_values
        if residual < tol:
            break
    else:
        raise NoConvergence(f"no convergence after {MAX_SWEEPS} sweeps")

    q = rewards + gamma * probs @ (values * cont)
    greedy: dict[int, set[Action]] = {}
    for s in range(n):
        if terminal[s]:
            continue
        best = q[s].max()
        greedy[s] = {Action(a) for a in range(4) if q[s, a] >= best - tol}
    return values.tolist(), greedy
