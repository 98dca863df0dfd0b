"""Reading and writing the ``ordaut v1`` text format.

::

    ordaut v1
    states N
    initial I
    final F1 F2 ...
    S L T            # transition from S on letter L to T
    alphabet a b c   # optional: the file then describes an AlphaDfa

Items may appear in any order after the header; ``#`` starts a comment.
"""
from __future__ import annotations

from pathlib import Path

from .automaton import AlphaDfa, Dfa
from .errors import ParseError

__all__ = ["parse_automaton", "format_automaton", "read_automaton", "write_automaton"]

HEADER = "ordaut v1"


def _nat(token, lineno, what):
    if not token.isdigit():
        raise ParseError(f"line {lineno}: {what} must be a natural number, got {token!r}")
    return int(token)


def parse_automaton(text: str) -> Dfa | AlphaDfa:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line.split()))
    if not lines or lines[0][1] != HEADER.split():
        raise ParseError(f"missing header {HEADER!r}")

    states = initial = finals = alphabet = None
    transitions = []
    for lineno, tokens in lines[1:]:
        key = tokens[0]
        if key in ("states", "initial", "final", "alphabet"):
            if {"states": states, "initial": initial, "final": finals, "alphabet": alphabet}[key] is not None:
                raise ParseError(f"line {lineno}: duplicate {key!r}")
            args = tokens[1:]
            if key == "states":
                if len(args) != 1:
                    raise ParseError(f"line {lineno}: 'states' takes one number")
                states = _nat(args[0], lineno, "state count")
            elif key == "initial":
                if len(args) != 1:
                    raise ParseError(f"line {lineno}: 'initial' takes one state")
                initial = _nat(args[0], lineno, "initial state")
            elif key == "final":
                finals = [_nat(x, lineno, "final state") for x in args]
            else:
                if not args:
                    raise ParseError(f"line {lineno}: empty alphabet")
                if len(set(args)) != len(args):
                    raise ParseError(f"line {lineno}: repeated alphabet symbol")
                alphabet = args
        elif key.isdigit():
            if len(tokens) != 3:
                raise ParseError(f"line {lineno}: a transition is 'SOURCE LETTER TARGET'")
            transitions.append((lineno, int(key), tokens[1], _nat(tokens[2], lineno, "target")))
        else:
            raise ParseError(f"line {lineno}: unknown key {key!r}")

    if states is None:
        raise ParseError("missing 'states'")
    if initial is None:
        raise ParseError("missing 'initial'")
    if states == 0:
        raise ParseError("'states' must be positive")
    finals = finals or []
    symbols = alphabet if alphabet is not None else ["0", "1"]
    rank = {s: i for i, s in enumerate(symbols)}
    for q in [initial, *finals]:
        if q >= states:
            raise ParseError(f"state {q} out of range (states {states})")
    table = [[-1] * len(symbols) for _ in range(states)]
    for lineno, src, letter, dst in transitions:
        if src >= states or dst >= states:
            raise ParseError(f"line {lineno}: state out of range (states {states})")
        if letter not in rank:
            raise ParseError(f"line {lineno}: unknown letter {letter!r}")
        r = rank[letter]
        if table[src][r] >= 0:
            raise ParseError(f"line {lineno}: duplicate transition from {src} on {letter!r}")
        table[src][r] = dst
    if alphabet is None:
        return Dfa(tuple(map(tuple, table)), initial, frozenset(finals))
    return AlphaDfa(tuple(alphabet), tuple(map(tuple, table)), initial, frozenset(finals))


def format_automaton(a: Dfa | AlphaDfa) -> str:
    out = [HEADER]
    if isinstance(a, AlphaDfa):
        out.append("alphabet " + " ".join(a.alphabet))
    out.append(f"states {a.state_count}")
    out.append(f"initial {a.initial}")
    out.append(" ".join(["final", *map(str, sorted(a.finals))]))
    for q, row in enumerate(a.table):
        for r, t in enumerate(row):
            if t >= 0:
                out.append(f"{q} {a.alphabet[r]} {t}")
    return "\n".join(out) + "\n"


def read_automaton(path) -> Dfa | AlphaDfa:
    return parse_automaton(Path(path).read_text())


def write_automaton(a: Dfa | AlphaDfa, path) -> None:
    Path(path).write_text(format_automaton(a))
