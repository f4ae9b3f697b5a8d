"""Experiment command line: convergence sweeps, single trials, and the
theory self-check.

Exit codes: 0 on success, 1 on an invariant violation, 2 on bad
arguments (click's usage-error code).
"""

from __future__ import annotations

import sys
from fractions import Fraction

import click

from . import experiments, theory


@click.group()
def main() -> None:
    """Probabilistic concept learning experiments."""


@main.command()
@click.option("--preset", type=click.Choice(sorted(experiments.PRESETS)),
              default=None, help="Named sweep grid; overrides --n/--p/--epochs.")
@click.option("--n", "n_values", type=int, multiple=True,
              help="Feature count (repeatable).")
@click.option("--p", "p_values", type=float, multiple=True,
              help="Inclusion probability (repeatable).")
@click.option("--epochs", "epoch_grid", type=int, multiple=True,
              help="Epoch budget (repeatable).")
@click.option("--trials", type=int, default=100, show_default=True)
@click.option("--states-half", type=int, default=8, show_default=True,
              help="Automaton half size N.")
@click.option("--seed", type=int, default=42, show_default=True)
@click.option("--shuffle", is_flag=True, help="Reshuffle samples per epoch.")
@click.option("--fixed-m", type=int, default=None,
              help="Fix the target literal count (default: uniform in [1, n]).")
@click.option("--out", type=click.Path(dir_okay=False, writable=True),
              default=None, help="CSV destination (default: stdout).")
def sweep(preset, n_values, p_values, epoch_grid, trials, states_half, seed,
          shuffle, fixed_m, out):
    """Run a success-count sweep over (n, p, epochs) and emit CSV."""
    overrides = dict(trials=trials, half_size=states_half, master_seed=seed,
                     shuffle=shuffle, target_m=fixed_m)
    if preset is not None:
        config = experiments.ExperimentConfig.preset(preset, **overrides)
    else:
        if not (n_values and p_values and epoch_grid):
            raise click.UsageError(
                "either --preset or all of --n, --p, --epochs are required")
        config = experiments.ExperimentConfig(
            n_values=list(n_values), p_values=list(p_values),
            epoch_grid=list(epoch_grid), **overrides)
    result = experiments.sweep(config)
    if out is None:
        click.echo(experiments.format_csv(result), nl=False)
    else:
        experiments.emit_csv(result, out)
        click.echo(f"wrote {len(result.rows)} rows to {out}", err=True)


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--p", type=float, default=0.75, show_default=True)
@click.option("--epochs", type=int, default=500, show_default=True)
@click.option("--states-half", type=int, default=8, show_default=True)
@click.option("--seed", type=int, default=42, show_default=True)
@click.option("--shuffle", is_flag=True)
@click.option("--fixed-m", type=int, default=None)
def trial(n, p, epochs, states_half, seed, shuffle, fixed_m):
    """Run one seeded trial and print the learned clause."""
    click.echo(experiments.describe_trial(n, p, epochs, states_half, seed,
                                          shuffle=shuffle, m=fixed_m))


@main.command("verify-theory")
@click.option("--max-n", type=int, default=6, show_default=True)
def verify_theory(max_n):
    """Check the frequency tables, the same-side lemma, and the
    reinforcement-direction inequalities by exhaustive enumeration."""
    problems = theory.verify_frequency_tables(max_n)
    for msg in problems:
        click.echo(f"FREQUENCY MISMATCH: {msg}")
    click.echo(f"frequency tables: closed forms match enumeration for "
               f"n <= {max_n}" if not problems else
               f"frequency tables: {len(problems)} mismatches")

    grid = [Fraction(i, 20) for i in range(1, 20) if i != 10]
    lemma_bad = [(p, a) for p in grid for a in grid
                 if theory.mixture_exceeds_half(p, a) !=
                 ((p > Fraction(1, 2)) == (a > Fraction(1, 2)))]
    click.echo("same-side lemma: verified on the 0.05-step grid"
               if not lemma_bad else f"same-side lemma: {lemma_bad}")

    direction_bad = []
    half = Fraction(1, 2)
    for n in range(1, max_n + 1):
        for m in range(1, n + 1):
            for p20 in range(11, 20):
                p = Fraction(p20, 20)
                for lc in theory.LiteralClass:
                    if lc is theory.LiteralClass.L3 and m == n:
                        continue
                    inc, exc = theory.reinforcement_probs(lc, n, m, p)
                    ok = (inc > half > exc if lc is theory.LiteralClass.L1
                          else exc > half > inc)
                    if not ok:
                        direction_bad.append((n, m, float(p), lc.name))
    click.echo("reinforcement directions: verified for all "
               f"n <= {max_n}, p in (0.5, 1)" if not direction_bad else
               f"reinforcement directions: {direction_bad[:5]} ...")

    if problems or lemma_bad or direction_bad:
        sys.exit(1)


if __name__ == "__main__":
    main()
