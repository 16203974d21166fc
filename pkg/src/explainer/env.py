"""Slippery grid-world MDP.

The agent tries to cross a frozen lake from the start cell to a goal
cell without falling into holes. Moves are unreliable: the intended
direction is realized with probability 1/3, and each orthogonal
direction with probability 1/3 (never the opposite direction). Moves
off the grid leave the agent in place. Entering the goal pays reward
1.0 and ends the episode; entering a hole pays nothing and also ends
it.

The slip probabilities and the default 4x4 layout are conventions
inherited from the widely used gym environment of the same shape; they
are assumptions, not part of the problem statement.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntEnum
from fractions import Fraction

from .errors import TerminalState

DEFAULT_MAP_TEXT = "SFFF\nFHFH\nFFFH\nHFFG"


class CellKind(Enum):
    START = "S"
    FROZEN = "F"
    HOLE = "H"
    GOAL = "G"


class Action(IntEnum):
    LEFT = 0
    DOWN = 1
    RIGHT = 2
    UP = 3

    @property
    def display_name(self) -> str:
        return self.name.capitalize()


ACTION_NAMES = {a.display_name: a for a in Action}

# Row/col deltas, indexed by Action.
_DELTAS = ((0, -1), (1, 0), (0, 1), (-1, 0))


@dataclass(frozen=True)
class TransitionOutcome:
    next_state: int
    probability: float
    reward: float
    terminal: bool


@dataclass(frozen=True)
class GridMap:
    rows: int
    cols: int
    cells: tuple[CellKind, ...]

    def __post_init__(self):
        if self.rows * self.cols != len(self.cells):
            raise ValueError("cell count does not match rows*cols")
        starts = sum(1 for c in self.cells if c is CellKind.START)
        goals = sum(1 for c in self.cells if c is CellKind.GOAL)
        if starts != 1:
            raise ValueError(f"map must have exactly one start cell, found {starts}")
        if goals < 1:
            raise ValueError("map must have at least one goal cell")

    @property
    def n_states(self) -> int:
        return self.rows * self.cols

    @property
    def start_state(self) -> int:
        return self.cells.index(CellKind.START)

    def cell(self, state: int) -> CellKind:
        return self.cells[state]

    def is_terminal(self, state: int) -> bool:
        return self.cells[state] in (CellKind.HOLE, CellKind.GOAL)

    def to_text(self) -> str:
        lines = []
        for r in range(self.rows):
            row = self.cells[r * self.cols:(r + 1) * self.cols]
            lines.append("".join(c.value for c in row))
        return "\n".join(lines)


def parse_map(text: str) -> GridMap:
    """Parse a map from text, one row per line, characters S/F/H/G."""
    lines = [line.strip() for line in text.strip().splitlines() if line.strip()]
    if not lines:
        raise ValueError("empty map text")
    cols = len(lines[0])
    if any(len(line) != cols for line in lines):
        raise ValueError("map rows have unequal lengths")
    try:
        cells = tuple(CellKind(ch) for line in lines for ch in line)
    except ValueError as exc:
        raise ValueError(f"bad map character: {exc}") from None
    return GridMap(rows=len(lines), cols=cols, cells=cells)


def default_map() -> GridMap:
    return parse_map(DEFAULT_MAP_TEXT)


def _slide(grid: GridMap, state: int, direction: int) -> int:
    r, c = divmod(state, grid.cols)
    dr, dc = _DELTAS[direction]
    nr, nc = r + dr, c + dc
    if 0 <= nr < grid.rows and 0 <= nc < grid.cols:
        return nr * grid.cols + nc
    return state


def transition_distribution(grid: GridMap, state: int, action: Action) -> list[TransitionOutcome]:
    """Merged outcome distribution under the slip rule.

    Outcomes landing on the same next state are merged; probabilities
    are computed exactly as rationals before conversion to float, so
    they sum to 1 within 1e-12.
    """
    if grid.is_terminal(state):
        raise TerminalState(f"state {state} is terminal")
    merged: dict[int, Fraction] = {}
    for direction in (action, (action - 1) % 4, (action + 1) % 4):
        ns = _slide(grid, state, int(direction))
        merged[ns] = merged.get(ns, Fraction(0)) + Fraction(1, 3)
    outcomes = []
    for ns in sorted(merged):
        outcomes.append(TransitionOutcome(
            next_state=ns,
            probability=float(merged[ns]),
            reward=1.0 if grid.cell(ns) is CellKind.GOAL else 0.0,
            terminal=grid.is_terminal(ns),
        ))
    return outcomes


def sample_transition(grid: GridMap, state: int, action: Action, rng) -> TransitionOutcome:
    """Draw one outcome from the transition distribution.

    `rng` is any object with a random() method; the same seed and call
    sequence always reproduce the same outcome sequence.
    """
    outcomes = transition_distribution(grid, state, action)
    if len(outcomes) == 1:
        return outcomes[0]
    r = rng.random()
    acc = 0.0
    for outcome in outcomes[:-1]:
        acc += outcome.probability
        if r < acc:
            return outcome
    return outcomes[-1]


class TransitionTable:
    """Precomputed transition outcomes for every (state, action) pair.

    The planner samples transitions millions of times per search; this
    flattens `transition_distribution` into tuples it can scan without
    re-deriving the slip geometry.
    """

    def __init__(self, grid: GridMap):
        self.grid = grid
        self.outcomes: list[list[tuple[TransitionOutcome, ...]] | None] = []
        # Per (state, action): ((cum_prob, outcome), ...) for sampling.
        self.cumulative: list[list[tuple[tuple[float, TransitionOutcome], ...]] | None] = []
        for s in range(grid.n_states):
            if grid.is_terminal(s):
                self.outcomes.append(None)
                self.cumulative.append(None)
                continue
            per_action = []
            per_action_cum = []
            for a in Action:
                outs = tuple(transition_distribution(grid, s, a))
                acc = 0.0
                cum = []
                for o in outs:
                    acc += o.probability
                    cum.append((acc, o))
                per_action.append(outs)
                per_action_cum.append(tuple(cum))
            self.outcomes.append(per_action)
            self.cumulative.append(per_action_cum)

    def sample(self, state: int, action: int, rng) -> TransitionOutcome:
        cum = self.cumulative[state][action]
        if len(cum) == 1:
            return cum[0][1]
        r = rng.random()
        for threshold, outcome in cum:
            if r < threshold:
                return outcome
        return cum[-1][1]
