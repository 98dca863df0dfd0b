"""Ordinal of an ordinal automaton, in Cantor normal form.

:func:`ordinal_of` is the polynomial extraction: group the components that
matter (cyclic components by height, plus single final states at degree
0), then walk the degrees downwards counting the words that lead to each
group and lie lexicographically above everything that led to a higher
degree.  :func:`ordinal_of_recursive` and :func:`ordinal_of_enumerative`
compute the same value by independent routes and serve as oracles.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .automaton import Condensation, Dfa, condense, is_cpa, is_ordinal_automaton, iter_language
from .cnf import ONE, Cnf, cnf_add, cnf_mul_omega
from .counting import build_dag_view, count_accepted_greater, lex_greatest_word_to
from .errors import PreconditionError

__all__ = [
    "ComponentCount",
    "DegreeStep",
    "ExtractionTrace",
    "ordinal_of",
    "ordinal_of_recursive",
    "ordinal_of_enumerative",
    "isomorphic",
]


@dataclass(frozen=True)
class ComponentCount:
    component: int
    count: int
    witness: str | None  # lex-greatest leading word, present iff count > 0


@dataclass(frozen=True)
class DegreeStep:
    degree: int
    components: tuple[ComponentCount, ...]
    total: int
    threshold: str | None


@dataclass(frozen=True)
class ExtractionTrace:
    steps: tuple[DegreeStep, ...] = ()
    # set when the initial state itself lies in a counted component
    initial_component: int | None = None
    condensation: Condensation | None = field(default=None, repr=False, compare=False)

    def lines(self) -> list[str]:
        if self.initial_component is not None:
            return [f"initial state in component {self.initial_component}"]
        out = []
        for step in self.steps:
            x = "-" if step.threshold is None else step.threshold
            out.append(f"degree {step.degree}: m={step.total} x={x}")
            for cc in step.components:
                u = "-" if cc.witness is None else cc.witness
                out.append(f"  component {cc.component}: m={cc.count} u={u}")
        return out


def _require_oa(a: Dfa) -> Condensation:
    if not isinstance(a, Dfa) or not is_cpa(a):
        raise PreconditionError("expected an ordinal automaton (a complete prefix automaton over 0/1)")
    c = condense(a)
    if not is_ordinal_automaton(a, c):
        raise PreconditionError("the automaton is not an ordinal automaton: its language is not well-ordered")
    return c


def _lex_key(word: str):
    # '0' < '1' and a proper prefix sorts first, which is exactly str order
    return word


def ordinal_of(a: Dfa) -> tuple[Cnf, ExtractionTrace]:
    c = _require_oa(a)
    comp0 = c.component[a.initial]
    if c.nontrivial[comp0]:
        return Cnf.omega_power(c.height[comp0]), ExtractionTrace((), comp0, c)
    if c.final_singleton[comp0]:
        return ONE, ExtractionTrace((), comp0, c)

    buckets: dict[int, list[int]] = {}
    for cid in c.order:
        if c.nontrivial[cid]:
            buckets.setdefault(c.height[cid], []).append(cid)
        elif c.final_singleton[cid]:
            buckets.setdefault(0, []).append(cid)
    top = max((c.height[cid] for cid in c.order if c.nontrivial[cid]), default=0)

    d = build_dag_view(a, c)
    threshold = None
    steps = []
    terms = []
    for degree in range(top, -1, -1):
        entries = []
        for cid in buckets.get(degree, ()):
            sink = d.sink_of.get(cid)
            if sink is None:
                entries.append(ComponentCount(cid, 0, None))
                continue
            m = count_accepted_greater(d, [sink], threshold)
            # every word above the threshold ends at the overall maximum,
            # so the greatest word to the sink is the witness
            u = lex_greatest_word_to(d, sink) if m else None
            entries.append(ComponentCount(cid, m, u))
        total = sum(e.count for e in entries)
        witnesses = [e.witness for e in entries if e.count]
        if witnesses:
            candidates = witnesses if threshold is None else [threshold, *witnesses]
            threshold = max(candidates, key=_lex_key)
        steps.append(DegreeStep(degree, tuple(entries), total, threshold))
        if total:
            terms.append((degree, total))
    return Cnf(tuple(terms)), ExtractionTrace(tuple(steps), None, c)


def ordinal_of_recursive(a: Dfa) -> Cnf:
    """Evaluate o(q) for every state, successors first.

    A final state is 1, a trivial state is o(q0) + o(q1), and a cyclic
    component ``s_0 -1-> s_1 -1-> ... -1-> s_0`` is
    ``(o(s_0 0) + ... + o(s_{k-1} 0)) * omega``.  The degree of every
    cyclic component is checked against its height.
    """
    c = _require_oa(a)
    value: list[Cnf | None] = [None] * a.state_count
    for cid in reversed(c.order):
        members = c.members[cid]
        if not c.nontrivial[cid]:
            (q,) = members
            if q in a.finals:
                value[q] = ONE
            else:
                t0, t1 = a.table[q]
                value[q] = cnf_add(value[t0], value[t1])
            continue
        # an ordinal automaton's cyclic component is a single 1-cycle
        cycle = [members[0]]
        while True:
            nxt = a.table[cycle[-1]][1]
            if nxt == cycle[0]:
                break
            cycle.append(nxt)
        assert sorted(cycle) == sorted(members), "cyclic component is not a single 1-cycle"
        inner = Cnf()
        for s in cycle:
            inner = cnf_add(inner, value[a.table[s][0]])
        o = cnf_mul_omega(inner)
        assert o.degree == c.height[cid], "component ordinal disagrees with its height"
        for s in cycle:
            value[s] = o
    return value[a.initial]


def ordinal_of_enumerative(a: Dfa) -> Cnf:
    """Finite ordinal of an acyclic CPA, by listing its words."""
    c = _require_oa(a)
    if any(c.nontrivial):
        raise PreconditionError("enumeration needs an acyclic automaton")
    count = sum(1 for _ in iter_language(a, a.state_count))
    return Cnf.finite(count)


def isomorphic(a: Dfa, b: Dfa) -> bool:
    """Whether two ordinal automata have order-isomorphic languages."""
    return ordinal_of(a)[0] == ordinal_of(b)[0]
