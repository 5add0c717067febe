"""Read and write the line-oriented automaton text format.

Example::

    # comment lines allowed, '#' to end of line
    alphabet: a b c
    states: 4
    initial: 1
    finals: 1 2
    trans a: 2 3 4 1
    trans b: 2 1 3 4
    trans c: 1 2 3 4

Lines may come in any order.  ``format_dfa`` always writes them in the order
above, single-space separated, with one ``trans`` line per letter in alphabet
order.
"""

from __future__ import annotations

from pathlib import Path

from .automata import Dfa
from .errors import ParseError


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


def parse_dfa(text: str) -> Dfa:
    fields: dict[str, list[str]] = {}
    trans: dict[str, list[int]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ParseError(f"line {lineno}: missing ':' in {raw.strip()!r}")
        key, _, value = line.partition(":")
        key_tokens = key.split()
        tokens = value.split()
        if key_tokens and key_tokens[0] == "trans":
            if len(key_tokens) != 2:
                raise ParseError(f"line {lineno}: expected 'trans <letter>:'")
            letter = key_tokens[1]
            if letter in trans:
                raise ParseError(f"line {lineno}: duplicate trans line for {letter!r}")
            trans[letter] = _ints(tokens, lineno)
        elif len(key_tokens) == 1 and key_tokens[0] in ("alphabet", "states", "initial", "finals"):
            name = key_tokens[0]
            if name in fields:
                raise ParseError(f"line {lineno}: duplicate {name!r} line")
            fields[name] = tokens
        else:
            raise ParseError(f"line {lineno}: unknown field {key.strip()!r}")

    for name in ("alphabet", "states", "initial", "finals"):
        if name not in fields:
            raise ParseError(f"missing {name!r} line")
    alphabet = fields["alphabet"]
    for letter in alphabet:
        if len(letter) != 1:
            raise ParseError(f"letters must be single characters, got {letter!r}")
    if len(set(alphabet)) != len(alphabet):
        raise ParseError(f"repeated letter in alphabet {alphabet}")
    missing = [a for a in alphabet if a not in trans]
    extra = [a for a in trans if a not in alphabet]
    if missing or extra:
        raise ParseError(f"trans lines do not match alphabet (missing {missing}, extra {extra})")
    if len(fields["states"]) != 1 or len(fields["initial"]) != 1:
        raise ParseError("'states' and 'initial' take exactly one integer")
    state_count = _ints(fields["states"], 0)[0]
    initial = _ints(fields["initial"], 0)[0]
    finals = _ints(fields["finals"], 0)
    try:
        return Dfa(state_count, tuple(alphabet), trans, initial, frozenset(finals))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_dfa(dfa: Dfa) -> str:
    def line(key: str, values) -> str:
        values = " ".join(map(str, values))
        return f"{key}: {values}" if values else f"{key}:"

    lines = [
        line("alphabet", dfa.alphabet),
        line("states", [dfa.state_count]),
        line("initial", [dfa.initial]),
        line("finals", sorted(dfa.finals)),
    ]
    lines += [line(f"trans {a}", dfa.transitions[a]) for a in dfa.alphabet]
    return "\n".join(lines) + "\n"


def read_dfa(path: str | Path) -> Dfa:
    return parse_dfa(Path(path).read_text())


def write_dfa(dfa: Dfa, path: str | Path) -> None:
    Path(path).write_text(format_dfa(dfa))
