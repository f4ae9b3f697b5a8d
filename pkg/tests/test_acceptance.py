"""Acceptance gate: one test per headline claim, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v``.  Lines are printed
outside pytest's capture so they always appear.  Two criteria are known
to fail as stated (small-automaton single-clause recovery at n=4, and
the vanilla-machine smoke test); see the failure messages for the
measured numbers.
"""

import random
import time
from fractions import Fraction

import pytest

from pcl.automata import Action
from pcl.boolean import all_assignments, make_sample
from pcl.experiments import ExperimentConfig, format_csv, run_trial, sweep, \
    trial_seed
from pcl.machine import PCLClause, feedback_negative, feedback_positive, \
    negative_reward_probs, positive_reward_probs
from pcl.theory import LiteralClass, mixture_exceeds_half, reinforcement_probs, \
    verify_frequency_tables
from pcl.tm import TMMachine

HALF = Fraction(1, 2)


@pytest.fixture
def report(capfd):
    def _report(name, ok, detail=""):
        suffix = f"  ({detail})" if detail else ""
        with capfd.disabled():
            print(f"[acceptance] {name}: {'PASS' if ok else 'FAIL'}{suffix}")
        assert ok, f"{name}: criterion not met{suffix}"
    return _report


def test_frequency_tables_exact_small_n(report):
    start = time.perf_counter()
    problems = verify_frequency_tables(6)
    elapsed = time.perf_counter() - start
    report("closed-form frequencies match enumeration for n <= 6 in < 10 s",
           problems == [] and elapsed < 10.0,
           f"{len(problems)} mismatches, {elapsed:.1f} s")


def test_same_side_lemma_grid(report):
    grid = [Fraction(i, 40) for i in range(1, 40) if i != 20]
    bad = [(p, a) for p in grid for a in grid
           if mixture_exceeds_half(p, a) != ((p > HALF) == (a > HALF))]
    report("mixture exceeds one half exactly when p and alpha share a side",
           not bad, f"{len(bad)} counterexamples")


def test_reinforcement_directions(report):
    bad = []
    for n in range(1, 7):
        for m in range(1, n + 1):
            for p40 in range(21, 40):
                p = Fraction(p40, 40)
                for lc in LiteralClass:
                    if lc is LiteralClass.L3 and m == n:
                        continue
                    inc, exc = reinforcement_probs(lc, n, m, p)
                    ok = (inc > HALF > exc if lc is LiteralClass.L1
                          else exc > HALF > inc)
                    if not ok:
                        bad.append((n, m, p, lc.name))
    boundary_ok = all(
        reinforcement_probs(LiteralClass.L3, n, m, Fraction(1))[1] == HALF
        for n in range(2, 7) for m in range(1, n))
    report("target literals drift toward inclusion and the rest toward "
           "exclusion for 1/2 < p < 1, with the p = 1 boundary tie",
           not bad and boundary_ok,
           f"{len(bad)} direction violations, boundary_ok={boundary_ok}")


def _best_success_over_halves(n, halves, epochs=1000, trials=100, seed=42):
    results = {}
    for half in halves:
        results[half] = sum(
            run_trial(n, 0.75, epochs, half, trial_seed(seed, n, 0, epochs, t))
            for t in range(trials))
    return results


def test_single_clause_recovery_n4_small_automata(report):
    # KNOWN FAIL: with 8, 16, or 32 total states per automaton the
    # inclusion drift for wide targets is too weak relative to the chain
    # depth; measured best is in the low 70s out of 100.  Half-sizes of
    # 32 and up reach 95+.
    results = _best_success_over_halves(4, (4, 8, 16))
    best = max(results.values())
    report("n = 4 single-clause recovery reaches 95/100 with at most "
           "32 automaton states", best >= 95, f"successes by half-size: "
           f"{results}, best {best}/100")


def test_single_clause_recovery_n8(report):
    results = _best_success_over_halves(8, (512,))
    best = max(results.values())
    report("n = 8 single-clause recovery reaches 85/100",
           best >= 85, f"{best}/100 at 1024 states")


def test_success_vs_inclusion_probability(report):
    config = ExperimentConfig(n_values=[4], p_values=[0.25, 0.75, 1.0],
                              epoch_grid=[1000], trials=100, half_size=64,
                              master_seed=42)
    rows = {r.p: r.successes for r in sweep(config).rows}
    low_ok = rows[0.25] <= 10
    mid_ok = rows[0.75] >= 90
    gap_ok = rows[1.0] <= rows[0.75] - 30
    report("success collapses below p = 1/2, is near-certain at p = 3/4, "
           "and drops by 30+ at p = 1",
           low_ok and mid_ok and gap_ok,
           f"successes: {rows}")


def _measured_reward_rate(feedback, label, p, lit_value, action,
                          draws=10_000, seed=1234):
    # one-literal clause; interior start states so both moves are visible
    start = 6 if action is Action.INCLUDE else 3
    rng = random.Random(seed)
    sample = make_sample((lit_value,), label)
    hits = 0
    for _ in range(draws):
        clause = PCLClause(n=1, p=p, half_size=4, states=[start, 3])
        feedback(clause, sample, rng)
        moved_deeper = clause.states[0] == (start + 1 if start == 6
                                            else start - 1)
        hits += moved_deeper
    return hits / draws


def test_feedback_table_fidelity(report):
    p = 0.75
    worst = 0.0
    for feedback, label, table in (
            (feedback_positive, 1, positive_reward_probs(p)),
            (feedback_negative, 0, negative_reward_probs(p))):
        for lit_value in (0, 1):
            for action in (Action.EXCLUDE, Action.INCLUDE):
                expected = table[lit_value][action is Action.INCLUDE]
                measured = _measured_reward_rate(feedback, label, p,
                                                 lit_value, action)
                worst = max(worst, abs(measured - expected))
    # the include-reinforcement column of the sample-class table follows
    # directly from the same cells: p, 0, 1 - p, p
    table_ok = (positive_reward_probs(p)[1][True] == p
                and positive_reward_probs(p)[0][True] == 0.0
                and negative_reward_probs(p)[1][True] == 1 - p
                and negative_reward_probs(p)[0][True] == p)
    report("every stochastic feedback cell matches its stated probability "
           "within 0.02 over 10^4 draws", worst <= 0.02 and table_ok,
           f"worst deviation {worst:.4f}, include column ok: {table_ok}")


def test_vanilla_machine_smoke(report):
    # KNOWN FAIL: with two clauses, margin 1, and specificity 3.9 the
    # all-correct configuration is dynamically unstable, so only ~20/100
    # seeds end the 200th epoch with full training accuracy.
    data = [(bits, int(bits[0] == 1 and bits[1] == 0))
            for bits in all_assignments(2)]
    hits = 0
    for seed in range(100):
        machine = TMMachine(n=2, n_clauses=2, T=1, s=3.9, seed=seed)
        machine.train_epochs(data, 200)
        hits += all(machine.classify(bits) == y for bits, y in data)
    report("vanilla machine fits a 2-bit conjunction on 95/100 seeds",
           hits >= 95, f"{hits}/100 seeds")


def test_sweep_byte_determinism(report):
    config = ExperimentConfig(n_values=[3], p_values=[0.75],
                              epoch_grid=[100, 200], trials=20,
                              master_seed=42)
    first = format_csv(sweep(config))
    second = format_csv(sweep(config))
    report("re-running a sweep yields a byte-identical CSV",
           first == second, f"{len(first)} bytes")
