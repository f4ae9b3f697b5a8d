"""Two-action Tsetlin automata.

An automaton is a plain integer state in [1, 2N] together with its half
size N.  States 1..N select the Exclude action, states N+1..2N select
Include.  Reward moves the state deeper into the current action's side
(saturating at 1 and 2N); penalty moves it toward the middle and flips
the action when crossing the boundary.
"""

from __future__ import annotations

import enum
import random

from .errors import InvalidParameterError


class Action(enum.IntEnum):
    EXCLUDE = 0
    INCLUDE = 1


class InitPolicy(str, enum.Enum):
    """How a fresh automaton's state is chosen."""

    BOUNDARY_EXCLUDE = "boundary_exclude"  # state N
    BOUNDARY_INCLUDE = "boundary_include"  # state N + 1
    FIFTY_FIFTY = "fifty_fifty"            # uniform over {N, N + 1}
    UNIFORM_RANDOM = "uniform_random"      # uniform over [1, 2N]


def init_state(half_size: int, policy: InitPolicy = InitPolicy.FIFTY_FIFTY,
               rng: random.Random | None = None) -> int:
    """Draw an initial state for an automaton with ``2 * half_size`` states."""
    if half_size < 1:
        raise InvalidParameterError(f"half_size must be >= 1, got {half_size}")
    policy = InitPolicy(policy)
    if policy is InitPolicy.BOUNDARY_EXCLUDE:
        return half_size
    if policy is InitPolicy.BOUNDARY_INCLUDE:
        return half_size + 1
    if rng is None:
        rng = random.Random()
    if policy is InitPolicy.FIFTY_FIFTY:
        return half_size + rng.randrange(2)
    return rng.randint(1, 2 * half_size)


def check_state(state: int, half_size: int) -> None:
    if half_size < 1:
        raise InvalidParameterError(f"half_size must be >= 1, got {half_size}")
    if not 1 <= state <= 2 * half_size:
        raise InvalidParameterError(
            f"state {state} outside [1, {2 * half_size}]")


def action(state: int, half_size: int) -> Action:
    """Map a state to its action: Exclude for 1..N, Include for N+1..2N."""
    return Action.INCLUDE if state > half_size else Action.EXCLUDE


def reward(state: int, half_size: int) -> int:
    """Deepen the current action.  Saturates at states 1 and 2N."""
    if state > half_size:
        return min(2 * half_size, state + 1)
    return max(1, state - 1)


def penalize(state: int, half_size: int) -> int:
    """Move toward the action boundary, flipping the action at N / N+1."""
    if state > half_size:
        return state - 1
    return state + 1
