"""Command-line front end: ``ordaut VERB ...``.

Exit codes: 0 success (``check``: well-ordered), 1 ``iso`` answered "not
isomorphic", 2 malformed input, 3 ``check``: scattered but not
well-ordered, 4 ``check``: neither, 5 precondition violated.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .automaton import Dfa, is_cpa, is_ordinal_automaton, is_scattered_automaton, normalize, condense
from .cnf import ZERO, cnf_format, cnf_parse
from .counting import build_dag_view, count_accepted_greater, lex_greatest_word_to
from .errors import EmptyLanguageError, ParseError, PreconditionError
from .extract import ordinal_of, ordinal_of_recursive
from .fileformat import format_automaton, read_automaton
from .synthesis import DEFAULT_MAX_STATES, min_size, size_upper_bound, synthesize

EXIT_OK = 0
EXIT_NOT_ISO = 1
EXIT_PARSE = 2
EXIT_SCATTERED = 3
EXIT_NEITHER = 4
EXIT_PRECONDITION = 5


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _Usage(message)


class _Usage(Exception):
    pass


def _load(path) -> Dfa | None:
    """Normalized CPA of a file, or None when its language is empty."""
    try:
        return normalize(read_automaton(path))
    except EmptyLanguageError:
        return None


def _emit(text, output):
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_check(args):
    a = _load(args.file)
    if a is None or is_ordinal_automaton(a):
        print("ordinal")
        return EXIT_OK
    if is_scattered_automaton(a):
        print("scattered")
        return EXIT_SCATTERED
    print("neither")
    return EXIT_NEITHER


def cmd_cnf(args):
    a = _load(args.file)
    if a is None:
        print(cnf_format(ZERO))
        return EXIT_OK
    alpha, trace = ordinal_of(a)
    print(cnf_format(alpha))
    if args.trace:
        for line in trace.lines():
            print(line)
    return EXIT_OK


def cmd_oracle(args):
    a = _load(args.file)
    print(cnf_format(ZERO if a is None else ordinal_of_recursive(a)))
    return EXIT_OK


def cmd_iso(args):
    values = []
    for path in (args.file1, args.file2):
        a = _load(path)
        values.append(ZERO if a is None else ordinal_of(a)[0])
    if values[0] == values[1]:
        print("isomorphic")
        return EXIT_OK
    print("not isomorphic")
    return EXIT_NOT_ISO


def cmd_synth(args):
    alpha = cnf_parse(args.cnf)
    _emit(format_automaton(synthesize(alpha)), args.output)
    return EXIT_OK


def cmd_minsize(args):
    alpha = cnf_parse(args.cnf)
    print(f"min-size {min_size(alpha, args.max_states)}")
    print(f"upper-bound {size_upper_bound(alpha)}")
    return EXIT_OK


def cmd_normalize(args):
    a = _load(args.file)
    if a is None:
        raise PreconditionError("the automaton accepts no word; there is no CPA form")
    _emit(format_automaton(a), args.output)
    return EXIT_OK


def _raw_view(path):
    a = read_automaton(path)
    if not isinstance(a, Dfa) or not is_cpa(a):
        raise PreconditionError("expected an ordinal automaton as written; run 'normalize' first")
    c = condense(a)
    if not is_ordinal_automaton(a, c):
        raise PreconditionError("the automaton is not an ordinal automaton")
    return a, c, build_dag_view(a, c)


def cmd_count_greater(args):
    _, _, d = _raw_view(args.file)
    word = args.word if args.word not in (None, "-") else None
    print(count_accepted_greater(d, None, word))
    return EXIT_OK


def cmd_lexmax(args):
    a, c, d = _raw_view(args.file)
    if not 0 <= args.state < a.state_count:
        raise PreconditionError(f"no state {args.state}")
    sink = d.sink_of.get(c.component[args.state])
    if sink is None:
        raise PreconditionError(f"no word leads from the initial state to state {args.state}")
    print(lex_greatest_word_to(d, sink))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ordaut", description="Ordinal automata: well-order checks, Cantor normal forms, synthesis.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    s = sub.add_parser("check", help="classify the lexicographic order as ordinal, scattered or neither")
    s.add_argument("file")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("cnf", help="Cantor normal form of the ordinal of an automaton")
    s.add_argument("file")
    s.add_argument("--trace", action="store_true", help="also print the per-degree counts and thresholds")
    s.set_defaults(func=cmd_cnf)

    s = sub.add_parser("oracle", help="CNF by the recursive per-state evaluator")
    s.add_argument("file")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("iso", help="decide whether two automata have isomorphic well-orders")
    s.add_argument("file1")
    s.add_argument("file2")
    s.set_defaults(func=cmd_iso)

    s = sub.add_parser("synth", help="write an ordinal automaton for a CNF")
    s.add_argument("cnf")
    s.add_argument("--output", "-o")
    s.set_defaults(func=cmd_synth)

    s = sub.add_parser("minsize", help="minimal automaton size for a CNF, and the construction's size")
    s.add_argument("cnf")
    s.add_argument("--max-states", type=int, default=DEFAULT_MAX_STATES)
    s.set_defaults(func=cmd_minsize)

    s = sub.add_parser("count-greater", help="count words leading to a sink above WORD ('-' for all)")
    s.add_argument("file")
    s.add_argument("word", nargs="?")
    s.set_defaults(func=cmd_count_greater)

    s = sub.add_parser("lexmax", help="greatest word leading to the component of STATE")
    s.add_argument("file")
    s.add_argument("state", type=int)
    s.set_defaults(func=cmd_lexmax)

    s = sub.add_parser("normalize", help="write the complete prefix automaton form")
    s.add_argument("file")
    s.add_argument("--output", "-o")
    s.set_defaults(func=cmd_normalize)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _Usage as exc:
        print(f"ordaut: error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ParseError, OSError) as exc:
        print(f"ordaut: error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        print(f"ordaut: error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
