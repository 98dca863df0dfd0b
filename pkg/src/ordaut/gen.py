"""Random ordinals and random ordinal automata for testing and benchmarks."""
from __future__ import annotations

import random

from .automaton import Dfa, trim
from .cnf import Cnf


def random_cnf(rng: random.Random, max_degree: int = 6, max_coefficient: int = 50, max_terms: int | None = None) -> Cnf:
    """Nonzero ordinal with random exponents in ``0..max_degree``."""
    pool = list(range(max_degree + 1))
    limit = len(pool) if max_terms is None else min(max_terms, len(pool))
    count = rng.randint(1, limit)
    exps = sorted(rng.sample(pool, count), reverse=True)
    return Cnf(tuple((e, rng.randint(1, max_coefficient)) for e in exps))


def random_ordinal_automaton(
    rng: random.Random, max_states: int = 40, cycle_rate: float = 0.3, finals: int | None = None
) -> Dfa:
    """Random OA: a DAG of branching states with some 1-cycles mixed in.

    Nodes are created one after another; a branching node points at any
    earlier nodes, and a cycle ``c_0 -1-> ... -1-> c_0`` sends every 0-edge
    to an earlier node, so cycles never keep their 0-successor.  The last
    node is the initial state; unreachable nodes are trimmed away.
    """
    n_final = finals if finals is not None else rng.randint(1, 3)
    table: list[list[int]] = [[-1, -1] for _ in range(n_final)]
    budget = max(max_states, n_final)
    while len(table) < budget:
        room = budget - len(table)
        if rng.random() < cycle_rate:
            length = rng.randint(1, min(room, 4))
            base = len(table)
            for i in range(length):
                table.append([rng.randrange(base), base + (i + 1) % length])
        else:
            base = len(table)
            table.append([rng.randrange(base), rng.randrange(base)])
        if rng.random() < 1.0 / max(2, max_states // 2):
            break
    initial = len(table) - 1
    return trim(Dfa(tuple(map(tuple, table)), initial, frozenset(range(n_final))))


def random_acyclic_cpa(rng: random.Random, max_states: int = 12, finals: int | None = None) -> Dfa:
    return random_ordinal_automaton(rng, max_states, cycle_rate=0.0, finals=finals)
