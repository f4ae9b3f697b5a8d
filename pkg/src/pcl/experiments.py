"""Convergence-sweep harness: seeded trials over (n, p, epochs) grids.

Each trial draws a random target conjunction, trains a fresh
single-clause learner on all 2^n labeled assignments, and scores
success as exact recovery of the target mask at the end of training.
Per-trial seeds are derived from the master seed with a stable hash, so
any trial can be replayed in isolation and sweeps are byte-deterministic.
"""

from __future__ import annotations

import hashlib
import io
import random
from dataclasses import dataclass, field
from pathlib import Path

from .automata import InitPolicy
from .boolean import all_assignments, format_mask, make_sample
from .errors import EnumerationLimitError, InvalidParameterError
from .machine import PCLMachine, converged_to
from .theory import ENUMERATION_MAX_N, TargetConjunction, label_sample

DEFAULT_EPOCH_GRID = list(range(100, 1001, 100))

PRESETS = {
    # two standard grids: success vs problem size, and success vs inclusion probability
    "n-sweep": dict(n_values=list(range(2, 9)), p_values=[0.75],
                     epoch_grid=DEFAULT_EPOCH_GRID),
    "p-sweep": dict(n_values=[4],
                     p_values=[0.1, 0.25, 0.4, 0.5, 0.6, 0.75, 0.9, 1.0],
                     epoch_grid=DEFAULT_EPOCH_GRID),
}


@dataclass
class ExperimentConfig:
    n_values: list[int]
    p_values: list[float]
    epoch_grid: list[int]
    trials: int = 100
    half_size: int = 8
    master_seed: int = 42
    shuffle: bool = False
    target_m: int | None = None  # None draws m uniformly in [1, n]

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise InvalidParameterError("trials must be >= 1")
        if any(n > ENUMERATION_MAX_N for n in self.n_values):
            raise EnumerationLimitError(
                f"n must be <= {ENUMERATION_MAX_N} for exhaustive datasets")
        if any(not 0.0 <= p <= 1.0 for p in self.p_values):
            raise InvalidParameterError("every p must be in [0, 1]")

    @classmethod
    def preset(cls, name: str, **overrides) -> "ExperimentConfig":
        if name not in PRESETS:
            raise InvalidParameterError(
                f"unknown preset {name!r}; choose from {sorted(PRESETS)}")
        return cls(**{**PRESETS[name], **overrides})


@dataclass
class SweepRow:
    n: int
    p: float
    epochs: int
    trials: int
    successes: int
    seed: int


@dataclass
class SweepResult:
    rows: list[SweepRow] = field(default_factory=list)


def trial_seed(master_seed: int, n: int, p_index: int, epochs: int,
               trial_index: int) -> int:
    """Stable per-trial seed.  Scheme: blake2b over the decimal rendering
    "master|n|p_index|epochs|trial", first 8 bytes big-endian.  Changing
    this breaks replay of previously recorded sweeps; keep it frozen."""
    key = f"{master_seed}|{n}|{p_index}|{epochs}|{trial_index}".encode()
    return int.from_bytes(hashlib.blake2b(key, digest_size=8).digest(), "big")


def random_target(n: int, rng: random.Random,
                  m: int | None = None) -> TargetConjunction:
    """Draw a target: m uniform in [1, n] unless fixed, then m distinct
    variables with independent uniform polarities."""
    if n < 1:
        raise InvalidParameterError(f"n must be >= 1, got {n}")
    size = rng.randint(1, n) if m is None else m
    if not 1 <= size <= n:
        raise InvalidParameterError(f"need 1 <= m <= n, got m={size}")
    variables = rng.sample(range(n), size)
    mask = frozenset(v if rng.random() < 0.5 else v + n for v in variables)
    return TargetConjunction(n, mask)


def build_dataset(target: TargetConjunction):
    """All 2^n assignments, labeled by the target, in lexicographic order."""
    return [make_sample(bits, label_sample(target, bits))
            for bits in all_assignments(target.n)]


def run_trial_detailed(n: int, p: float, epochs: int, half_size: int,
                       seed: int, shuffle: bool = False,
                       m: int | None = None,
                       init: InitPolicy = InitPolicy.FIFTY_FIFTY):
    """One seeded trial; returns (success, target, learned mask)."""
    rng = random.Random(seed)
    target = random_target(n, rng, m)
    dataset = build_dataset(target)
    machine = PCLMachine(n=n, n_clauses=1, p=p, half_size=half_size,
                         init=init, seed=rng.getrandbits(64))
    machine.train_epochs(dataset, epochs, shuffle=shuffle)
    clause = machine.clauses[0]
    return converged_to(clause, target.mask, n), target, clause.extract_mask()


def run_trial(n: int, p: float, epochs: int, half_size: int, seed: int,
              shuffle: bool = False, m: int | None = None) -> bool:
    success, _, _ = run_trial_detailed(n, p, epochs, half_size, seed,
                                       shuffle=shuffle, m=m)
    return success


def sweep(config: ExperimentConfig) -> SweepResult:
    """Run the full (n, p, epochs) grid; rows come out sorted by
    (n, p, epochs) regardless of execution order."""
    rows = []
    for n in sorted(config.n_values):
        for p_index, p in sorted(enumerate(config.p_values),
                                 key=lambda ip: ip[1]):
            for epochs in sorted(config.epoch_grid):
                successes = sum(
                    run_trial(n, p, epochs, config.half_size,
                              trial_seed(config.master_seed, n, p_index,
                                         epochs, t),
                              shuffle=config.shuffle, m=config.target_m)
                    for t in range(config.trials))
                rows.append(SweepRow(n=n, p=p, epochs=epochs,
                                     trials=config.trials,
                                     successes=successes,
                                     seed=config.master_seed))
    return SweepResult(rows=rows)


CSV_HEADER = "n,p,epochs,trials,successes,seed"


def format_csv(result: SweepResult) -> str:
    lines = [CSV_HEADER]
    for r in result.rows:
        lines.append(f"{r.n},{r.p!r},{r.epochs},{r.trials},"
                     f"{r.successes},{r.seed}")
    return "\n".join(lines) + "\n"


def emit_csv(result: SweepResult, destination) -> None:
    text = format_csv(result)
    if hasattr(destination, "write"):
        destination.write(text)
        return
    try:
        Path(destination).write_text(text)
    except OSError as exc:
        raise OSError(f"cannot write sweep CSV to {destination}: {exc}") \
            from exc


def parse_csv(text: str) -> SweepResult:
    lines = io.StringIO(text).read().splitlines()
    if not lines or lines[0] != CSV_HEADER:
        raise ValueError("missing or malformed sweep CSV header")
    rows = []
    for ln in lines[1:]:
        n, p, epochs, trials, successes, seed = ln.split(",")
        rows.append(SweepRow(n=int(n), p=float(p), epochs=int(epochs),
                             trials=int(trials), successes=int(successes),
                             seed=int(seed)))
    return SweepResult(rows=rows)


def describe_trial(n: int, p: float, epochs: int, half_size: int, seed: int,
                   shuffle: bool = False, m: int | None = None) -> str:
    success, target, mask = run_trial_detailed(n, p, epochs, half_size, seed,
                                               shuffle=shuffle, m=m)
    return (f"target : {format_mask(target.mask, n)}\n"
            f"learned: {format_mask(mask, n)}\n"
            f"success: {'yes' if success else 'no'}")
