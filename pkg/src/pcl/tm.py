"""Minimal vanilla Tsetlin Machine for side-by-side comparison.

Clauses alternate polarity (first clause votes for the class, second
against, ...), classification is the sign of the vote sum, and training
uses margin-gated Type I / Type II feedback.  Unlike the probabilistic
learner in :mod:`pcl.machine`, feedback here is gated by the clause's
value and includes an inaction outcome.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import automata
from .automata import InitPolicy
from .boolean import Bits, clause_eval, literal_values
from .errors import InvalidParameterError

POSITIVE = 1
NEGATIVE = -1


@dataclass
class TMClause:
    n: int
    half_size: int
    polarity: int  # POSITIVE votes for the class, NEGATIVE against
    states: list[int] = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.polarity not in (POSITIVE, NEGATIVE):
            raise InvalidParameterError("polarity must be +1 or -1")
        if self.states and len(self.states) != 2 * self.n:
            raise InvalidParameterError(
                f"expected {2 * self.n} states, got {len(self.states)}")
        for s in self.states:
            automata.check_state(s, self.half_size)

    @classmethod
    def fresh(cls, n: int, half_size: int, polarity: int,
              init: InitPolicy = InitPolicy.FIFTY_FIFTY,
              rng: random.Random | None = None) -> "TMClause":
        states = [automata.init_state(half_size, init, rng)
                  for _ in range(2 * n)]
        return cls(n=n, half_size=half_size, polarity=polarity, states=states)

    def extract_mask(self):
        half = self.half_size
        return frozenset(k for k, s in enumerate(self.states) if s > half)

    def output(self, bits: Bits) -> int:
        return clause_eval(self.extract_mask(), bits)


def feedback_probability(v: int, y: int, T: int) -> float:
    """Update probability epsilon / 2T with the vote sum clamped to
    [-T, T]; zero once the margin is met, one at maximal error."""
    clamped = max(-T, min(T, v))
    eps = T - clamped if y == 1 else T + clamped
    return eps / (2 * T)


def type_i_cell_probs(clause_out: int, lit: int, act: automata.Action,
                      s: float, boost_true_positive: bool = False
                      ) -> tuple[float, float, float]:
    """(P(Reward), P(Inaction), P(Penalty)) for one Type I table cell.

    The clause=1 / literal=0 / Include cell is unreachable (an included
    zero literal forces the clause to 0) and is reported as all
    inaction.
    """
    lo, hi = 1.0 / s, (s - 1.0) / s
    if clause_out == 1 and lit == 1:
        if act is automata.Action.INCLUDE:
            reward = 1.0 if boost_true_positive else hi
            return (reward, 1.0 - reward, 0.0)
        return (0.0, lo, hi)
    if clause_out == 1 and act is automata.Action.EXCLUDE:  # literal 0
        return (lo, hi, 0.0)
    if clause_out == 1:  # literal 0, Include: unreachable
        return (0.0, 1.0, 0.0)
    if act is automata.Action.INCLUDE:
        return (0.0, hi, lo)
    return (lo, hi, 0.0)


def type_ii_cell_probs(clause_out: int, lit: int, act: automata.Action
                       ) -> tuple[float, float, float]:
    """(P(Reward), P(Inaction), P(Penalty)) for one Type II table cell:
    a certain penalty on excluded zero literals of a 1-valued clause,
    inaction everywhere else."""
    if clause_out == 1 and lit == 0 and act is automata.Action.EXCLUDE:
        return (0.0, 0.0, 1.0)
    return (0.0, 1.0, 0.0)


def type_i_feedback(clause: TMClause, bits: Bits, rng: random.Random,
                    s: float, boost_true_positive: bool = False) -> None:
    """Stochastic pattern-capture feedback, one draw per literal."""
    litvals = literal_values(bits)
    clause_out = clause.output(bits)
    half = clause.half_size
    for k in range(2 * clause.n):
        state = clause.states[k]
        act = automata.action(state, half)
        p_reward, p_inaction, _ = type_i_cell_probs(
            clause_out, litvals[k], act, s, boost_true_positive)
        u = rng.random()
        if u < p_reward:
            clause.states[k] = automata.reward(state, half)
        elif u >= p_reward + p_inaction:
            clause.states[k] = automata.penalize(state, half)


def type_ii_feedback(clause: TMClause, bits: Bits) -> None:
    """Deterministic discrimination feedback: penalize excluded zero
    literals when the clause fires."""
    litvals = literal_values(bits)
    if not clause.output(bits):
        return
    half = clause.half_size
    for k in range(2 * clause.n):
        state = clause.states[k]
        if litvals[k] == 0 and automata.action(state, half) is \
                automata.Action.EXCLUDE:
            clause.states[k] = automata.penalize(state, half)


class TMMachine:
    """Clause ensemble with a voting margin T and specificity s."""

    def __init__(self, n: int, n_clauses: int = 2, T: int = 1,
                 s: float = 3.9, half_size: int = 8,
                 boost_true_positive: bool = False,
                 init: InitPolicy = InitPolicy.FIFTY_FIFTY,
                 seed: int | None = None):
        if n_clauses < 2 or n_clauses % 2:
            raise InvalidParameterError(
                f"n_clauses must be even and >= 2, got {n_clauses}")
        if T < 1:
            raise InvalidParameterError(f"T must be >= 1, got {T}")
        if s <= 1:
            raise InvalidParameterError(f"s must be > 1, got {s}")
        self.n = n
        self.T = T
        self.s = s
        self.half_size = half_size
        self.boost_true_positive = boost_true_positive
        self._rng = random.Random(seed)
        self.clauses = [
            TMClause.fresh(n, half_size,
                           POSITIVE if i % 2 == 0 else NEGATIVE,
                           init, self._rng)
            for i in range(n_clauses)]

    def vote_sum(self, bits: Bits) -> int:
        return sum(c.polarity * c.output(bits) for c in self.clauses)

    def classify(self, bits: Bits) -> int:
        return int(self.vote_sum(bits) >= 0)

    def train_step(self, bits: Bits, y: int) -> None:
        """Sample each clause for feedback at the margin-gated rate, then
        give Type I or Type II according to polarity and label."""
        v = self.vote_sum(bits)
        p_update = feedback_probability(v, y, self.T)
        for clause in self.clauses:
            if self._rng.random() >= p_update:
                continue
            wants_type_i = (clause.polarity == POSITIVE) == (y == 1)
            if wants_type_i:
                type_i_feedback(clause, bits, self._rng, self.s,
                                self.boost_true_positive)
            else:
                type_ii_feedback(clause, bits)

    def train_epochs(self, dataset, epochs: int) -> None:
        for _ in range(epochs):
            for bits, y in dataset:
                self.train_step(bits, y)
