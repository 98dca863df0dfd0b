"""Ordinals below omega^omega in Cantor normal form.

An ordinal is stored as a tuple of ``(exponent, coefficient)`` pairs with
strictly decreasing exponents and positive coefficients; the empty tuple is
0.  The text syntax used throughout the package is::

    cnf  := "0" | term ("+" term)*
    term := "w" ("^" nat)? ("*" pos)? | pos

so ``w^3*2 + w`` is omega^3 * 2 + omega.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import total_ordering

from .errors import ParseError, PreconditionError

__all__ = [
    "Cnf",
    "ZERO",
    "ONE",
    "cnf_parse",
    "cnf_format",
    "cnf_add",
    "cnf_mul_omega",
    "cnf_compare",
    "cnf_degree",
]


@total_ordering
@dataclass(frozen=True)
class Cnf:
    terms: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        terms = tuple((int(e), int(c)) for e, c in self.terms)
        prev = None
        for e, c in terms:
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            if c < 1:
                raise ValueError(f"coefficient must be positive, got {c}")
            if prev is not None and e >= prev:
                raise ValueError("exponents must be strictly decreasing")
            prev = e
        object.__setattr__(self, "terms", terms)

    @classmethod
    def finite(cls, n: int) -> Cnf:
        return cls(((0, n),)) if n else cls()

    @classmethod
    def omega_power(cls, n: int, coefficient: int = 1) -> Cnf:
        return cls(((n, coefficient),))

    @property
    def degree(self) -> int:
        return cnf_degree(self)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(e for e, _ in self.terms)

    @property
    def coefficients(self) -> tuple[int, ...]:
        return tuple(c for _, c in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        if not isinstance(other, Cnf):
            return NotImplemented
        return cnf_add(self, other)

    def __lt__(self, other):
        if not isinstance(other, Cnf):
            return NotImplemented
        return cnf_compare(self, other) < 0

    def mul_omega(self) -> Cnf:
        return cnf_mul_omega(self)

    def __str__(self):
        return cnf_format(self)

    def __repr__(self):
        return f"Cnf({cnf_format(self)!r})"


ZERO = Cnf()
ONE = Cnf(((0, 1),))


def cnf_add(a: Cnf, b: Cnf) -> Cnf:
    """Ordinal sum ``a + b``.

    Terms of ``a`` with exponent below the degree of ``b`` are absorbed; a
    term of equal exponent merges its coefficient with the leading term of
    ``b``.
    """
    if not b.terms:
        return a
    if not a.terms:
        return b
    lead_e, lead_c = b.terms[0]
    keep = []
    for e, c in a.terms:
        if e > lead_e:
            keep.append((e, c))
        elif e == lead_e:
            keep.append((e, c + lead_c))
            keep.extend(b.terms[1:])
            return Cnf(tuple(keep))
        else:
            break
    keep.extend(b.terms)
    return Cnf(tuple(keep))


def cnf_mul_omega(a: Cnf) -> Cnf:
    """``a * omega``: only the degree of ``a`` survives."""
    if not a.terms:
        return a
    return Cnf(((a.terms[0][0] + 1, 1),))


def cnf_compare(a: Cnf, b: Cnf) -> int:
    """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    for x, y in zip(a.terms, b.terms):
        if x != y:
            return -1 if x < y else 1
    la, lb = len(a.terms), len(b.terms)
    return (la > lb) - (la < lb)


def cnf_degree(a: Cnf) -> int:
    if not a.terms:
        raise PreconditionError("the degree of 0 is undefined")
    return a.terms[0][0]


def cnf_format(a: Cnf) -> str:
    if not a.terms:
        return "0"
    parts = []
    for e, c in a.terms:
        if e == 0:
            parts.append(str(c))
            continue
        head = "w" if e == 1 else f"w^{e}"
        parts.append(head if c == 1 else f"{head}*{c}")
    return " + ".join(parts)


_TOKEN = re.compile(r"\s*(?:(\d+)|(\S))", re.ASCII)


def _tokens(text):
    out = []
    for m in _TOKEN.finditer(text):
        if m.group(1) is not None:
            out.append(("nat", int(m.group(1)), m.start(1)))
        else:
            out.append((m.group(2), None, m.start(2)))
    out.append(("end", None, len(text)))
    return out


def cnf_parse(text: str) -> Cnf:
    """Parse ordinal text; the sum need not be in normal form."""
    toks = _tokens(text)
    i = 0

    def expect(kind):
        nonlocal i
        tok = toks[i]
        if tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1] if tok[0] == "nat" else tok[0])
            raise ParseError(f"expected {kind}, found {what}", tok[2])
        i += 1
        return tok

    if toks[0][0] == "nat" and toks[0][1] == 0 and toks[1][0] == "end":
        return Cnf()

    total = Cnf()
    while True:
        tok = toks[i]
        if tok[0] in ("w", "\u03c9"):
            i += 1
            exponent = 1
            if toks[i][0] == "^":
                i += 1
                exponent = expect("nat")[1]
            coefficient = 1
            if toks[i][0] == "*":
                i += 1
                ctok = expect("nat")
                coefficient = ctok[1]
                if coefficient == 0:
                    raise ParseError("coefficient 0 in a term", ctok[2])
        elif tok[0] == "nat":
            i += 1
            exponent, coefficient = 0, tok[1]
            if coefficient == 0:
                raise ParseError("coefficient 0 in a term", tok[2])
        else:
            what = "end of input" if tok[0] == "end" else repr(tok[0])
            raise ParseError(f"expected a term, found {what}", tok[2])
        total = cnf_add(total, Cnf(((exponent, coefficient),)))
        if toks[i][0] == "end":
            return total
        expect("+")
