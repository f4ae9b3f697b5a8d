import itertools

import pytest

from pcl import boolean
from pcl.errors import InvalidParameterError

# 0-based literal helpers for readability: x(i) is the variable, neg(i, n)
# its negation.
def x(i):
    return i - 1


def neg(i, n):
    return n + i - 1


def test_literal_value_example():
    bits = (1, 0, 1, 0)
    assert boolean.literal_value(bits, x(1)) == 1
    assert boolean.literal_value(bits, neg(1, 4)) == 0
    assert [boolean.literal_value(bits, k) for k in range(8)] == \
        [1, 0, 1, 0, 0, 1, 0, 1]


def test_literal_value_all_zero_negations():
    bits = (0, 0, 0)
    for j in range(1, 4):
        assert boolean.literal_value(bits, neg(j, 3)) == 1


def test_literal_value_rejects_bad_index():
    with pytest.raises(InvalidParameterError):
        boolean.literal_value((0, 1), 4)


def test_clause_eval_worked_example():
    mask = frozenset({x(1), neg(2, 2)})
    assert boolean.clause_eval(mask, (1, 0)) == 1
    assert boolean.clause_eval(mask, (1, 1)) == 0


def test_empty_mask_is_vacuously_true():
    for bits in boolean.all_assignments(3):
        assert boolean.clause_eval(frozenset(), bits) == 1


@pytest.mark.parametrize("n", [1, 2, 4, 6, 10])
def test_clause_eval_matches_brute_force(n):
    import random
    rng = random.Random(n)
    masks = [frozenset(k for k in range(2 * n) if rng.random() < 0.3)
             for _ in range(8)]
    for mask in masks:
        for bits in boolean.all_assignments(n):
            expected = 1
            for k in mask:
                expected &= boolean.literal_value(bits, k)
            assert boolean.clause_eval(mask, bits) == expected


def test_contradictory_mask_never_satisfied():
    n = 3
    mask = frozenset({x(1), neg(1, n)})
    assert boolean.mask_is_contradictory(mask, n)
    for bits in boolean.all_assignments(n):
        assert boolean.clause_eval(mask, bits) == 0


def test_format_mask():
    n = 3
    assert boolean.format_mask(frozenset({x(1), neg(2, n)}), n) == \
        "x1 AND NOT x2"
    assert boolean.format_mask(frozenset(), n) == "TRUE"


def test_all_assignments_lexicographic():
    assert boolean.all_assignments(2) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert len(set(boolean.all_assignments(4))) == 16
