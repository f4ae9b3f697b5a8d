"""Computable pieces of the convergence analysis.

Relative to a target conjunction over n variables with m literals, the
2n literals split into three classes (correct, negated-correct,
irrelevant) and, for a fixed literal, the 2^n assignments split into
four sample classes by (label, literal value).  This module provides
the closed-form class frequencies, a brute-force enumeration oracle for
them, and the per-step reinforcement probabilities whose directions
drive convergence, all in exact rational arithmetic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .boolean import (Bits, all_assignments, literal_value, literal_values,
                      mask_is_contradictory, negate_literal)
from .errors import (EmptyLiteralClassError, EnumerationLimitError,
                     InvalidParameterError)

ENUMERATION_MAX_N = 20


class LiteralClass(enum.Enum):
    L1 = "correct"          # literal appears in the target
    L2 = "negated_correct"  # its negation appears in the target
    L3 = "irrelevant"       # neither polarity appears


class SampleClass(enum.IntEnum):
    A1 = 1  # positive sample, literal satisfied
    A2 = 2  # positive sample, literal violated
    A3 = 3  # negative sample, literal satisfied
    A4 = 4  # negative sample, literal violated


@dataclass(frozen=True)
class TargetConjunction:
    """Ground-truth conjunction as a non-contradictory include mask."""

    n: int
    mask: frozenset[int]

    def __post_init__(self) -> None:
        if not 1 <= len(self.mask) <= self.n:
            raise InvalidParameterError(
                f"target must hold between 1 and {self.n} literals")
        if any(not 0 <= k < 2 * self.n for k in self.mask):
            raise InvalidParameterError("literal index out of range")
        if mask_is_contradictory(self.mask, self.n):
            raise InvalidParameterError(
                "target includes a variable and its negation")

    @property
    def m(self) -> int:
        return len(self.mask)


def label_sample(target: TargetConjunction, bits: Bits) -> int:
    """1 iff the assignment satisfies every literal of the target."""
    values = literal_values(bits)
    return int(all(values[k] for k in target.mask))


def classify_literal(target: TargetConjunction, literal: int) -> LiteralClass:
    if literal in target.mask:
        return LiteralClass.L1
    if negate_literal(literal, target.n) in target.mask:
        return LiteralClass.L2
    return LiteralClass.L3


def classify_sample(target: TargetConjunction, literal: int,
                    bits: Bits) -> SampleClass:
    positive = label_sample(target, bits)
    satisfied = literal_value(bits, literal)
    if positive:
        return SampleClass.A1 if satisfied else SampleClass.A2
    return SampleClass.A3 if satisfied else SampleClass.A4


Counts = tuple[int, int, int, int]


def freq_closed_form(n: int, m: int, literal_class: LiteralClass) -> Counts:
    """Closed-form (A1, A2, A3, A4) sample counts for a literal class."""
    if not 1 <= m <= n:
        raise InvalidParameterError(f"need 1 <= m <= n, got m={m}, n={n}")
    total = 2 ** n
    half = 2 ** (n - 1)
    pos = 2 ** (n - m)
    if literal_class is LiteralClass.L1:
        return (pos, 0, total - pos - half, half)
    if literal_class is LiteralClass.L2:
        return (0, pos, half, total - pos - half)
    if m == n:
        raise EmptyLiteralClassError(
            "no irrelevant literals exist when m equals n")
    quarter = 2 ** (n - m - 1)
    return (quarter, quarter, half - quarter, half - quarter)


def freq_enumerate(target: TargetConjunction, literal: int) -> Counts:
    """Brute-force oracle: classify every assignment against one literal."""
    n = target.n
    if n > ENUMERATION_MAX_N:
        raise EnumerationLimitError(
            f"n={n} exceeds the enumeration bound {ENUMERATION_MAX_N}")
    counts = [0, 0, 0, 0]
    for bits in all_assignments(n):
        counts[classify_sample(target, literal, bits) - 1] += 1
    return tuple(counts)  # type: ignore[return-value]


def mixture_exceeds_half(p, alpha) -> bool:
    """Whether alpha*p + (1-alpha)*(1-p) exceeds one half.

    Holds exactly when p and alpha sit on the same side of 0.5.
    Pass Fractions for an exact strict-inequality check.
    """
    return alpha * p + (1 - alpha) * (1 - p) > Fraction(1, 2)


def convergence_condition(p) -> bool:
    """The convergence precondition: 0.5 < p < 1, both bounds strict."""
    return Fraction(1, 2) < Fraction(p) < 1


def include_reinforce_prob(sample_class: SampleClass, p):
    """Probability that one sample of the given class reinforces Include
    (reward given Include, equivalently penalty given Exclude)."""
    if not 0 <= p <= 1:
        raise InvalidParameterError(f"p must be in [0, 1], got {p}")
    if sample_class is SampleClass.A1:
        return p
    if sample_class is SampleClass.A2:
        return p * 0
    if sample_class is SampleClass.A3:
        return 1 - p
    return p


def exclude_reinforce_prob(sample_class: SampleClass, p):
    return 1 - include_reinforce_prob(sample_class, p)


def alphas(n: int, m: int, literal_class: LiteralClass) -> tuple[Fraction, ...]:
    """Relative class frequencies freq / 2^n as exact rationals."""
    total = 2 ** n
    return tuple(Fraction(f, total)
                 for f in freq_closed_form(n, m, literal_class))


def reinforcement_probs(literal_class: LiteralClass, n: int, m: int, p):
    """Per-step (P(Include reinforced), P(Exclude reinforced)) for a
    literal of the given class, averaged over all 2^n samples.

    Pass p as a Fraction for exact values.  Uses the same case formulas
    the convergence argument rests on; each is the frequency-weighted
    mix of the per-sample-class reinforcement probabilities.
    """
    a1, a2, a3, a4 = alphas(n, m, literal_class)
    if literal_class is LiteralClass.L1:
        a = a1 + a4
        return (a * p + (1 - a) * (1 - p), a * (1 - p) + (1 - a) * p)
    if literal_class is LiteralClass.L2:
        p_exc = a2 * 1 + a3 * p + a4 * (1 - p)
        p_inc = a3 * (1 - p) + a4 * p
        return (p_inc, p_exc)
    p_exc = a1 * (1 - p) + Fraction(1, 2)
    p_inc = (a1 + a4) * p + a3 * (1 - p)
    return (p_inc, p_exc)


def verify_frequency_tables(max_n: int = 6) -> list[str]:
    """Cross-check the closed forms against exhaustive enumeration for
    every target over every n <= max_n.  Returns a list of discrepancy
    descriptions (empty when everything agrees)."""
    problems = []
    for n in range(1, max_n + 1):
        for target in all_targets(n):
            for literal in range(2 * n):
                lc = classify_literal(target, literal)
                enumerated = freq_enumerate(target, literal)
                closed = freq_closed_form(n, target.m, lc)
                if enumerated != closed:
                    problems.append(
                        f"n={n} target={sorted(target.mask)} literal={literal}"
                        f" {lc.name}: enumerated {enumerated},"
                        f" closed form {closed}")
    return problems


def all_targets(n: int) -> Iterable[TargetConjunction]:
    """Every non-contradictory conjunction of 1..n literals, i.e. every
    assignment of {absent, positive, negated} to each variable except
    the all-absent one."""
    for code in range(1, 3 ** n):
        mask = set()
        rest = code
        for v in range(n):
            rest, choice = divmod(rest, 3)
            if choice == 1:
                mask.add(v)
            elif choice == 2:
                mask.add(v + n)
        yield TargetConjunction(n, frozenset(mask))
