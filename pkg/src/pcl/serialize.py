"""Line-oriented machine snapshots.

Format (one value group per line, space separated within a line):

    pcl
    <n> <half_size>
    <p>                 # clause 1
    <2n automaton states>
    ...                 # further clauses

    tm
    <n> <half_size> <T> <s> <boost 0|1>
    <2n automaton states>   # clause 1 (polarities alternate, first +)
    ...

Floats are written with repr() so snapshots round-trip exactly.
"""

from __future__ import annotations

import io
from pathlib import Path

from .machine import PCLClause, PCLMachine
from .tm import NEGATIVE, POSITIVE, TMClause, TMMachine


def dump_machine(machine: PCLMachine | TMMachine) -> str:
    lines: list[str] = []
    if isinstance(machine, PCLMachine):
        clause = machine.clauses[0]
        lines.append("pcl")
        lines.append(f"{machine.n} {clause.half_size}")
        for c in machine.clauses:
            lines.append(repr(c.p))
            lines.append(" ".join(str(s) for s in c.states))
    elif isinstance(machine, TMMachine):
        lines.append("tm")
        lines.append(f"{machine.n} {machine.half_size} {machine.T} "
                     f"{machine.s!r} {int(machine.boost_true_positive)}")
        for c in machine.clauses:
            lines.append(" ".join(str(s) for s in c.states))
    else:
        raise TypeError(f"cannot serialize {type(machine).__name__}")
    return "\n".join(lines) + "\n"


def save_machine(machine: PCLMachine | TMMachine, path) -> None:
    Path(path).write_text(dump_machine(machine))


def parse_machine(text: str, seed: int | None = None
                  ) -> PCLMachine | TMMachine:
    lines = [ln for ln in io.StringIO(text).read().splitlines() if ln.strip()]
    kind = lines[0].strip()
    if kind == "pcl":
        n, half = (int(x) for x in lines[1].split())
        clauses = []
        body = lines[2:]
        if len(body) % 2:
            raise ValueError("truncated pcl snapshot")
        for i in range(0, len(body), 2):
            p = float(body[i])
            states = [int(x) for x in body[i + 1].split()]
            clauses.append(PCLClause(n=n, p=p, half_size=half, states=states))
        if not clauses:
            raise ValueError("pcl snapshot holds no clauses")
        return PCLMachine.from_clauses(clauses, seed=seed)
    if kind == "tm":
        n_s, half_s, t_s, s_s, boost_s = lines[1].split()
        n, half, T = int(n_s), int(half_s), int(t_s)
        machine = TMMachine(n=n, n_clauses=max(2, len(lines) - 2), T=T,
                            s=float(s_s), half_size=half,
                            boost_true_positive=bool(int(boost_s)), seed=seed)
        body = lines[2:]
        machine.clauses = [
            TMClause(n=n, half_size=half,
                     polarity=POSITIVE if i % 2 == 0 else NEGATIVE,
                     states=[int(x) for x in ln.split()])
            for i, ln in enumerate(body)]
        if not machine.clauses:
            raise ValueError("tm snapshot holds no clauses")
        return machine
    raise ValueError(f"unknown snapshot kind {kind!r}")


def load_machine(path, seed: int | None = None) -> PCLMachine | TMMachine:
    return parse_machine(Path(path).read_text(), seed=seed)
