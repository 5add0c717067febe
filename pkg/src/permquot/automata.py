"""Complete DFAs over single-character letters, with states numbered 1..n.

Everything here is a pure function of immutable values.  ``accessible_part``
and ``minimize`` renumber states canonically: breadth-first from the initial
state, exploring letters in alphabet order.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field, replace
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .errors import AlphabetMismatch, NotPermutation, UnknownLetter
from .perms import Permutation


@dataclass(frozen=True)
class Dfa:
    state_count: int
    alphabet: tuple[str, ...]
    transitions: Mapping[str, tuple[int, ...]] = field(hash=False)
    initial: int
    finals: frozenset[int]

    def __post_init__(self):
        alphabet = tuple(self.alphabet)
        trans = {a: tuple(self.transitions[a]) for a in alphabet if a in self.transitions}
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "transitions", MappingProxyType(trans))
        object.__setattr__(self, "finals", frozenset(self.finals))

        n = self.state_count
        if n < 1:
            raise ValueError("a DFA needs at least one state")
        if len(set(alphabet)) != len(alphabet):
            raise ValueError(f"alphabet letters are not distinct: {alphabet}")
        for a in alphabet:
            if not isinstance(a, str) or len(a) != 1:
                raise ValueError(f"letters must be single characters, got {a!r}")
        extra = set(self.transitions) - set(alphabet)
        if extra or len(trans) != len(alphabet):
            raise ValueError("transitions must have exactly one entry per alphabet letter")
        for a, images in trans.items():
            if len(images) != n or not all(1 <= q <= n for q in images):
                raise ValueError(f"transition for {a!r} is not a total map on [1..{n}]")
        if not 1 <= self.initial <= n:
            raise ValueError(f"initial state {self.initial} outside [1..{n}]")
        if not all(1 <= q <= n for q in self.finals):
            raise ValueError(f"final states {sorted(self.finals)} not within [1..{n}]")

    @property
    def states(self) -> range:
        return range(1, self.state_count + 1)

    def step(self, state: int, letter: str) -> int:
        try:
            return self.transitions[letter][state - 1]
        except KeyError:
            raise UnknownLetter(f"letter {letter!r} not in alphabet {self.alphabet}") from None

    def with_finals(self, finals: Iterable[int]) -> Dfa:
        return replace(self, finals=frozenset(finals))


def run(dfa: Dfa, start: int, word: Iterable[str]) -> int:
    state = start
    for letter in word:
        state = dfa.step(state, letter)
    return state


def accepts(dfa: Dfa, word: Iterable[str]) -> bool:
    return run(dfa, dfa.initial, word) in dfa.finals


def is_permutation_automaton(dfa: Dfa) -> bool:
    return all(len(set(images)) == dfa.state_count for images in dfa.transitions.values())


def induced_permutation(dfa: Dfa, word: Iterable[str]) -> Permutation:
    """The permutation ``q -> q . word`` of a permutation automaton."""
    if not is_permutation_automaton(dfa):
        raise NotPermutation("automaton has a letter that is not a bijection")
    return Permutation(tuple(run(dfa, q, word) for q in dfa.states))


def letter_permutations(dfa: Dfa) -> dict[str, Permutation]:
    if not is_permutation_automaton(dfa):
        raise NotPermutation("automaton has a letter that is not a bijection")
    return {a: Permutation(dfa.transitions[a]) for a in dfa.alphabet}


def _bfs_order(dfa: Dfa) -> list[int]:
    order = [dfa.initial]
    seen = {dfa.initial}
    queue = deque(order)
    while queue:
        q = queue.popleft()
        for a in dfa.alphabet:
            r = dfa.transitions[a][q - 1]
            if r not in seen:
                seen.add(r)
                order.append(r)
                queue.append(r)
    return order


def reachable_states(dfa: Dfa) -> set[int]:
    return set(_bfs_order(dfa))


def accessible_part(dfa: Dfa) -> Dfa:
    """Restriction to reachable states, canonically renumbered."""
    order = _bfs_order(dfa)
    new = {old: i for i, old in enumerate(order, 1)}
    return Dfa(
        state_count=len(order),
        alphabet=dfa.alphabet,
        transitions={
            a: tuple(new[dfa.transitions[a][old - 1]] for old in order)
            for a in dfa.alphabet
        },
        initial=1,
        finals=frozenset(new[q] for q in dfa.finals if q in new),
    )


def equivalence_classes(dfa: Dfa) -> list[int]:
    """Moore partition refinement.

    Returns a block id per state (index ``q - 1``); two states share an id
    iff they accept the same words.
    """
    n = dfa.state_count
    cols = [dfa.transitions[a] for a in dfa.alphabet]
    block = [1 if q in dfa.finals else 0 for q in range(1, n + 1)]
    count = len(set(block))
    while True:
        signatures: dict[tuple, int] = {}
        refined = []
        for i in range(n):
            sig = (block[i],) + tuple(block[col[i] - 1] for col in cols)
            refined.append(signatures.setdefault(sig, len(signatures)))
        if len(signatures) == count:
            return refined
        block, count = refined, len(signatures)


def minimize(dfa: Dfa) -> Dfa:
    """The canonical minimal DFA of L(dfa)."""
    acc = accessible_part(dfa)
    block = equivalence_classes(acc)
    rep: dict[int, int] = {}
    for q in range(1, acc.state_count + 1):
        rep.setdefault(block[q - 1], q)
    reps = [rep[b] for b in range(len(rep))]
    merged = Dfa(
        state_count=len(rep),
        alphabet=acc.alphabet,
        transitions={
            a: tuple(block[acc.transitions[a][q - 1] - 1] + 1 for q in reps)
            for a in acc.alphabet
        },
        initial=block[acc.initial - 1] + 1,
        finals=frozenset(block[q - 1] + 1 for q in acc.finals),
    )
    return accessible_part(merged)


def check_same_alphabet(x: Dfa, y: Dfa) -> None:
    if set(x.alphabet) != set(y.alphabet):
        raise AlphabetMismatch(f"alphabets {x.alphabet} and {y.alphabet} differ")


def distinguishing_word(x: Dfa, y: Dfa) -> str | None:
    """A shortest word in exactly one of L(x), L(y), or None if they agree."""
    check_same_alphabet(x, y)
    start = (x.initial, y.initial)
    parent: dict[tuple[int, int], tuple[tuple[int, int], str] | None] = {start: None}
    queue = deque([start])
    while queue:
        p, q = pair = queue.popleft()
        if (p in x.finals) != (q in y.finals):
            letters = []
            while parent[pair] is not None:
                pair, a = parent[pair]
                letters.append(a)
            return "".join(reversed(letters))
        for a in x.alphabet:
            nxt = (x.transitions[a][p - 1], y.transitions[a][q - 1])
            if nxt not in parent:
                parent[nxt] = (pair, a)
                queue.append(nxt)
    return None


def equivalent(x: Dfa, y: Dfa) -> bool:
    return distinguishing_word(x, y) is None


def isomorphic(x: Dfa, y: Dfa) -> bool:
    """True iff some bijection of states carries x onto y exactly.

    Every state must be reachable in both automata for the match to succeed,
    which is the case for everything ``minimize`` returns.
    """
    if x.alphabet != y.alphabet or x.state_count != y.state_count:
        return False
    mapping = {x.initial: y.initial}
    queue = deque([x.initial])
    while queue:
        p = queue.popleft()
        q = mapping[p]
        if (p in x.finals) != (q in y.finals):
            return False
        for a in x.alphabet:
            p2, q2 = x.transitions[a][p - 1], y.transitions[a][q - 1]
            if p2 in mapping:
                if mapping[p2] != q2:
                    return False
            else:
                mapping[p2] = q2
                queue.append(p2)
    return len(mapping) == x.state_count and len(set(mapping.values())) == y.state_count


def is_empty(dfa: Dfa) -> bool:
    return not (reachable_states(dfa) & dfa.finals)


def asc(dfa: Dfa) -> int:
    """Accepting-state complexity of L(dfa): the final count of its minimal DFA."""
    return len(minimize(dfa).finals)


def empty_automaton(alphabet: Sequence[str] = ("a",)) -> Dfa:
    """The one-state automaton with no final states."""
    return Dfa(1, tuple(alphabet), {a: (1,) for a in alphabet}, 1, frozenset())


def random_dfa(
    rng: random.Random,
    state_count: int,
    alphabet: Sequence[str],
    permutation: bool = False,
    final_probability: float = 0.5,
) -> Dfa:
    states = list(range(1, state_count + 1))
    trans = {}
    for a in alphabet:
        if permutation:
            images = states[:]
            rng.shuffle(images)
        else:
            images = [rng.choice(states) for _ in states]
        trans[a] = tuple(images)
    finals = frozenset(q for q in states if rng.random() < final_probability)
    return Dfa(state_count, tuple(alphabet), trans, rng.choice(states), finals)
