"""Literals, include masks, and clause evaluation.

For ``n`` features there are ``2n`` literals, indexed 0-based: literal
``k < n`` is the variable ``x_{k+1}`` and literal ``k >= n`` is its
negation ``NOT x_{k-n+1}``.  An include mask is a frozenset of literal
indices; a clause is the conjunction of its included literals, so the
empty mask is vacuously true.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence

from .errors import InvalidParameterError

Bits = Sequence[int]
Mask = frozenset[int]


class Sample(NamedTuple):
    bits: tuple[int, ...]
    label: int  # 1 for a positive sample, 0 for a negative one


def make_sample(bits: Iterable[int], label: int) -> Sample:
    return Sample(tuple(int(b) for b in bits), int(label))


def negate_literal(literal: int, n: int) -> int:
    return literal - n if literal >= n else literal + n


def literal_value(bits: Bits, literal: int) -> int:
    """Value of one literal under an assignment: bits[k] for k < n, else
    the complement of bits[k - n]."""
    n = len(bits)
    if not 0 <= literal < 2 * n:
        raise InvalidParameterError(
            f"literal index {literal} outside [0, {2 * n})")
    if literal < n:
        return bits[literal]
    return 1 - bits[literal - n]


def literal_values(bits: Bits) -> tuple[int, ...]:
    """All 2n literal values for an assignment, in literal-index order."""
    return tuple(bits) + tuple(1 - b for b in bits)


def clause_eval(mask: Mask, bits: Bits) -> int:
    """1 iff every included literal holds; the empty mask yields 1."""
    values = literal_values(bits)
    return int(all(values[k] for k in mask))


def mask_is_contradictory(mask: Mask, n: int) -> bool:
    """A mask holding both a variable and its negation can never be
    satisfied.  Such masks are legal transient states during training."""
    return any(k < n and k + n in mask for k in mask)


def format_mask(mask: Mask, n: int) -> str:
    """Human-readable conjunction, e.g. ``x1 AND NOT x2``."""
    if not mask:
        return "TRUE"
    parts = []
    for k in sorted(mask, key=lambda k: (k % n, k >= n)):
        parts.append(f"x{k + 1}" if k < n else f"NOT x{k - n + 1}")
    return " AND ".join(parts)


def all_assignments(n: int) -> list[tuple[int, ...]]:
    """The 2^n assignments in lexicographic order (x1 is the high bit)."""
    return [tuple((i >> (n - 1 - j)) & 1 for j in range(n))
            for i in range(2 ** n)]
