"""Exhaustive enumeration of small complete prefix automata.

Thin wrappers around the enumeration kernels: candidates come out in
canonical breadth-first numbering, so isomorphic automata are never listed
twice and results are deterministic.
"""
from __future__ import annotations

from itertools import permutations
from typing import Iterator

import numpy as np

from . import _kernels
from .automaton import Dfa


def _to_dfa(ch, fin) -> Dfa:
    table = tuple((int(a), int(b)) for a, b in ch)
    finals = frozenset(int(q) for q in np.flatnonzero(fin))
    return Dfa(table, 0, finals)


def canonical_cpas(
    states: int, *, acyclic: bool = False, finals: int | None = None, ordinal_only: bool = False
) -> list[Dfa]:
    """All trim CPAs with exactly ``states`` states, one per isomorphism class."""
    nf = -1 if finals is None else finals
    cap = 1024
    while True:
        out_ch = np.empty((cap, states, 2), np.int64)
        out_fin = np.empty((cap, states), np.bool_)
        total = int(_kernels.enumerate_cpas(states, acyclic, nf, ordinal_only, out_ch, out_fin))
        if total <= cap:
            break
        cap = total
    return [_to_dfa(out_ch[i], out_fin[i]) for i in range(total)]


def iter_ordinal_automata(max_states: int) -> Iterator[Dfa]:
    """Every ordinal automaton with at most ``max_states`` states, up to isomorphism."""
    for s in range(1, max_states + 1):
        yield from canonical_cpas(s, ordinal_only=True)


def find_ordered_finals(states: int, counts) -> tuple[Dfa, tuple[int, ...]] | None:
    """First canonical acyclic CPA of size ``states`` meeting the block counts.

    Returns the automaton and its final states listed by label, or None.
    """
    counts = np.asarray(counts, dtype=np.int64)
    nf = len(counts)
    if states < nf:
        return None
    perms = np.array(list(permutations(range(nf))), dtype=np.int64)
    out_ch = np.empty((states, 2), np.int64)
    out_fin = np.empty(states, np.bool_)
    out_perm = np.empty(nf, np.int64)
    if not _kernels.search_ordered_finals(states, counts, perms, out_ch, out_fin, out_perm):
        return None
    dfa = _to_dfa(out_ch, out_fin)
    finals_in_order = [int(q) for q in np.flatnonzero(out_fin)]
    by_label = [0] * nf
    for j, q in enumerate(finals_in_order):
        by_label[int(out_perm[j])] = q
    return dfa, tuple(by_label)
