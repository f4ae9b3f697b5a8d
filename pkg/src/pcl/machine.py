"""The probabilistic-inclusion concept learner.

A clause keeps one automaton per literal plus a fixed inclusion
probability ``p``.  Feedback updates every literal independently — the
clause's own value never gates the update, and every literal receives
exactly one reward-or-penalty draw per sample (there is no inaction).

Reward probabilities by (sample label, literal value, current action):

    positive, literal 1: Include -> p      Exclude -> 1 - p
    positive, literal 0: Include -> 0      Exclude -> 1
    negative, literal 1: Include -> 1 - p  Exclude -> p
    negative, literal 0: Include -> p      Exclude -> 1 - p
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass, field

from . import automata
from .automata import InitPolicy
from .boolean import Mask, Sample, clause_eval, literal_values
from .errors import InvalidParameterError


def positive_reward_probs(p: float) -> tuple[tuple[float, float], ...]:
    """Reward probability indexed [literal value][action] for a positive
    sample."""
    return ((1.0, 0.0), (1.0 - p, p))


def negative_reward_probs(p: float) -> tuple[tuple[float, float], ...]:
    """Reward probability indexed [literal value][action] for a negative
    sample."""
    return ((1.0 - p, p), (p, 1.0 - p))


@dataclass
class PCLClause:
    """2n automaton states plus the clause's inclusion probability."""

    n: int
    p: float
    half_size: int
    states: list[int] = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidParameterError(f"n must be >= 1, got {self.n}")
        if not 0.0 <= self.p <= 1.0:
            raise InvalidParameterError(f"p must be in [0, 1], got {self.p}")
        if self.half_size < 1:
            raise InvalidParameterError(
                f"half_size must be >= 1, got {self.half_size}")
        if self.states and len(self.states) != 2 * self.n:
            raise InvalidParameterError(
                f"expected {2 * self.n} states, got {len(self.states)}")
        for s in self.states:
            automata.check_state(s, self.half_size)

    @classmethod
    def fresh(cls, n: int, p: float, half_size: int,
              init: InitPolicy = InitPolicy.FIFTY_FIFTY,
              rng: random.Random | None = None) -> "PCLClause":
        states = [automata.init_state(half_size, init, rng)
                  for _ in range(2 * n)]
        return cls(n=n, p=p, half_size=half_size, states=states)

    def extract_mask(self) -> Mask:
        """Literals whose automata currently select Include."""
        half = self.half_size
        return frozenset(k for k, s in enumerate(self.states) if s > half)


def _apply_feedback(clause: PCLClause, litvals: tuple[int, ...],
                    reward_probs: tuple[tuple[float, float], ...],
                    rng: random.Random) -> None:
    """One reward-or-penalty draw per literal, in literal-index order.

    Hot path for training; transitions are inlined copies of
    automata.reward / automata.penalize (see test_machine for the
    equivalence check).
    """
    states = clause.states
    half = clause.half_size
    full = 2 * half
    rand = rng.random
    for k in range(2 * clause.n):
        s = states[k]
        include = s > half
        if rand() < reward_probs[litvals[k]][include]:
            if include:
                if s < full:
                    states[k] = s + 1
            elif s > 1:
                states[k] = s - 1
        else:
            states[k] = s - 1 if include else s + 1


def feedback_positive(clause: PCLClause, sample: Sample,
                      rng: random.Random) -> None:
    """Update every literal's automaton for a positive sample."""
    if sample.label != 1:
        raise InvalidParameterError("feedback_positive needs a positive sample")
    _apply_feedback(clause, literal_values(sample.bits),
                    positive_reward_probs(clause.p), rng)


def feedback_negative(clause: PCLClause, sample: Sample,
                      rng: random.Random) -> None:
    """Update every literal's automaton for a negative sample."""
    if sample.label != 0:
        raise InvalidParameterError("feedback_negative needs a negative sample")
    _apply_feedback(clause, literal_values(sample.bits),
                    negative_reward_probs(clause.p), rng)


def converged_to(clause: PCLClause, target_mask: Mask, n: int) -> bool:
    """Exact structural match: the extracted mask equals the target mask."""
    if n != clause.n:
        raise InvalidParameterError(
            f"dimension mismatch: clause n={clause.n}, target n={n}")
    return clause.extract_mask() == target_mask


class PCLMachine:
    """A disjunction of independently trained clauses.

    Each clause consumes its own seeded random stream, one draw per
    literal per sample, so runs are replayable and clauses are mutually
    independent.
    """

    def __init__(self, n: int, n_clauses: int = 1,
                 p: float | list[float] = 0.75, half_size: int = 8,
                 init: InitPolicy = InitPolicy.FIFTY_FIFTY,
                 seed: int | None = None):
        if n_clauses < 1:
            raise InvalidParameterError(
                f"n_clauses must be >= 1, got {n_clauses}")
        ps = list(p) if isinstance(p, (list, tuple)) else [p] * n_clauses
        if len(ps) != n_clauses:
            raise InvalidParameterError(
                f"got {len(ps)} p values for {n_clauses} clauses")
        self.n = n
        master = random.Random(seed)
        init_rng = random.Random(master.getrandbits(64))
        self._shuffle_rng = random.Random(master.getrandbits(64))
        self._rngs = [random.Random(master.getrandbits(64))
                      for _ in range(n_clauses)]
        self.clauses = [
            PCLClause.fresh(n, pk, half_size, init, init_rng) for pk in ps]

    @classmethod
    def from_clauses(cls, clauses: list[PCLClause],
                     seed: int | None = None) -> "PCLMachine":
        machine = cls.__new__(cls)
        machine.n = clauses[0].n
        master = random.Random(seed)
        master.getrandbits(64)  # skip the init stream, states are given
        machine._shuffle_rng = random.Random(master.getrandbits(64))
        machine._rngs = [random.Random(master.getrandbits(64))
                         for _ in clauses]
        machine.clauses = clauses
        return machine

    def classify(self, bits) -> int:
        """Disjunction of the clauses' current conjunctions."""
        return int(any(clause_eval(c.extract_mask(), bits)
                       for c in self.clauses))

    def train_step(self, sample: Sample) -> None:
        """Feed one labeled sample to every clause."""
        if sample.label == 1:
            for clause, rng in zip(self.clauses, self._rngs):
                feedback_positive(clause, sample, rng)
        else:
            for clause, rng in zip(self.clauses, self._rngs):
                feedback_negative(clause, sample, rng)

    def train_epochs(self, dataset: list[Sample], epochs: int,
                     shuffle: bool = False) -> None:
        """Run ``epochs`` passes over the dataset, in the given order or
        with a fresh shuffle per epoch."""
        if epochs < 0:
            raise InvalidParameterError(f"epochs must be >= 0, got {epochs}")
        if not dataset:
            if epochs > 0:
                warnings.warn("train_epochs called with an empty dataset; "
                              "machine left unchanged", stacklevel=2)
            return
        pos_tables = [positive_reward_probs(c.p) for c in self.clauses]
        neg_tables = [negative_reward_probs(c.p) for c in self.clauses]
        prepared = [(literal_values(s.bits),
                     pos_tables if s.label else neg_tables) for s in dataset]
        order = list(range(len(dataset)))
        for _ in range(epochs):
            if shuffle:
                self._shuffle_rng.shuffle(order)
            for i in order:
                litvals, picked = prepared[i]
                for clause, table, rng in zip(self.clauses, picked,
                                              self._rngs):
                    _apply_feedback(clause, litvals, table, rng)
