"""Right quotient K L^-1 by replacing the final set of the dividend automaton.

Two independent routes compute the new final set: backward reachability in
the product automaton (works for any DFAs) and, for permutation dividends, the
union of preimages of F under the permutations induced by words of L(B).
``member_of_quotient`` is a third, forward-search oracle used by the tests.
"""

from __future__ import annotations

import functools
import logging
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .automata import Dfa, check_same_alphabet, is_permutation_automaton, run
from .errors import CapExceeded, DegreeMismatch, NotPermutation
from .perms import DEFAULT_CAP, Permutation, PermutationSet, is_closed

log = logging.getLogger(__name__)

# Closure checks on G_B are quadratic in its size; above this they are skipped.
_CLOSURE_CHECK_LIMIT = 5040


@dataclass(frozen=True)
class QuotientResult:
    automaton: Dfa
    saturated_finals: frozenset[int]
    divisor_group: PermutationSet | None = None


# Dividends up to these sizes use precomputed preimage tables.
_TABLE_STATES = 8
_BATCH_STATES = 16


@functools.lru_cache(maxsize=4096)
def _preimage_tables(columns: tuple[tuple[int, ...], ...]) -> tuple[list[int], ...]:
    """For each letter, the bitmask of preimages of every subset of states."""
    na = len(columns[0])
    tables = []
    for col in columns:
        single = [0] * na
        for p, img in enumerate(col):
            single[img - 1] |= 1 << p
        table = [0] * (1 << na)
        for mask in range(1, 1 << na):
            low = mask & -mask
            table[mask] = table[mask ^ low] | single[low.bit_length() - 1]
        tables.append(table)
    return tuple(tables)


def quotient_final_set(a: Dfa, b: Dfa) -> frozenset[int]:
    """States q of ``a`` such that q . w is final for some w in L(b).

    Backward reachability in the product Q_a x Q_b: q qualifies iff a pair in
    F_a x F_b is reachable from (q, s_b).
    """
    check_same_alphabet(a, b)
    if not a.alphabet or a.state_count > _TABLE_STATES:
        return _final_set_by_pairs(a, b)
    # rows[q]: bitmask of p such that (p, q) reaches F_a x F_b
    tables = _preimage_tables(tuple(a.transitions[x] for x in a.alphabet))
    b_cols = [b.transitions[x] for x in a.alphabet]
    final_mask = sum(1 << (f - 1) for f in a.finals)
    rows = [final_mask if q in b.finals else 0 for q in b.states]
    changed = bool(final_mask)
    while changed:
        changed = False
        for q in range(b.state_count):
            row = rows[q]
            for table, col in zip(tables, b_cols):
                row |= table[rows[col[q] - 1]]
            if row != rows[q]:
                rows[q] = row
                changed = True
    s = rows[b.initial - 1]
    return frozenset(p + 1 for p in range(a.state_count) if s >> p & 1)


class DivisorBatch:
    """Divisor automata packed into padded arrays for ``quotient_final_sets``.

    Divisors are padded to a common size with unreachable, nonfinal
    self-looping states, which never contribute to a row.  Build one batch
    and reuse it across many dividends.
    """

    def __init__(self, divisors: Sequence[Dfa]):
        self.divisors = list(divisors)
        if not self.divisors:
            raise ValueError("a divisor batch needs at least one automaton")
        self.alphabet = self.divisors[0].alphabet
        for b in self.divisors:
            check_same_alphabet(self.divisors[0], b)
        width = max(b.state_count for b in self.divisors)
        pad = list(range(width))

        def padded(b: Dfa, x: str) -> list[int]:
            return [q - 1 for q in b.transitions[x]] + pad[b.state_count :]

        self.cols = {
            x: np.array([padded(b, x) for b in self.divisors], dtype=np.int64)
            for x in self.alphabet
        }
        self.final = np.zeros((len(self.divisors), width), dtype=bool)
        for i, b in enumerate(self.divisors):
            self.final[i, [g - 1 for g in b.finals]] = True
        self.initial = np.array([b.initial - 1 for b in self.divisors])
        self.index = np.arange(len(self.divisors))
        self.width = width

    def __len__(self) -> int:
        return len(self.divisors)


def quotient_final_sets(a: Dfa, divisors: Sequence[Dfa] | DivisorBatch) -> list[frozenset[int]]:
    """``quotient_final_set(a, b)`` for every divisor b, computed in lockstep."""
    if not isinstance(divisors, DivisorBatch):
        if not divisors:
            return []
        divisors = DivisorBatch(divisors)
    check_same_alphabet(a, divisors.divisors[0])
    if not a.alphabet or a.state_count > _BATCH_STATES:
        return [quotient_final_set(a, b) for b in divisors.divisors]
    tables = [
        np.asarray(t, dtype=np.int64)
        for t in _preimage_tables(tuple(a.transitions[x] for x in a.alphabet))
    ]
    cols = [divisors.cols[x] for x in a.alphabet]
    final_mask = sum(1 << (f - 1) for f in a.finals)
    rows = np.where(divisors.final, final_mask, 0).astype(np.int64)
    index = divisors.index
    changed = bool(final_mask)
    while changed:
        before = rows.copy()
        # sweep high to low: cycles step towards larger indices, so this
        # usually reads rows already updated in the same sweep
        for q in range(divisors.width - 1, -1, -1):
            acc = rows[:, q]
            for table, col in zip(tables, cols):
                acc = acc | table[rows[index, col[:, q]]]
            rows[:, q] = acc
        changed = not np.array_equal(before, rows)
    states = range(a.state_count)
    decoded: dict[int, frozenset[int]] = {}
    out = []
    for mask in rows[index, divisors.initial].tolist():
        if mask not in decoded:
            decoded[mask] = frozenset(p + 1 for p in states if mask >> p & 1)
        out.append(decoded[mask])
    return out


def _final_set_by_pairs(a: Dfa, b: Dfa) -> frozenset[int]:
    # product pairs packed as p * nb + q, 0-based
    na, nb = a.state_count, b.state_count
    preds: list[list[int]] = [[] for _ in range(na * nb)]
    for letter in a.alphabet:
        ta, tb = a.transitions[letter], b.transitions[letter]
        for p in range(na):
            base = (ta[p] - 1) * nb
            for q in range(nb):
                preds[base + tb[q] - 1].append(p * nb + q)
    seen = [False] * (na * nb)
    stack = [(f - 1) * nb + g - 1 for f in a.finals for g in b.finals]
    for idx in stack:
        seen[idx] = True
    while stack:
        idx = stack.pop()
        for pred in preds[idx]:
            if not seen[pred]:
                seen[pred] = True
                stack.append(pred)
    s = b.initial - 1
    return frozenset(p + 1 for p in range(na) if seen[p * nb + s])


def right_quotient(
    a: Dfa, b: Dfa, cap: int = DEFAULT_CAP, compute_group: bool = True
) -> QuotientResult:
    """The automaton ``a`` with its finals replaced, accepting L(a) L(b)^-1.

    ``divisor_group`` is filled in when ``a`` is a permutation automaton and
    G_B stays within ``cap`` elements; otherwise (or with
    ``compute_group=False``) it is None.
    """
    finals = quotient_final_set(a, b)
    group = None
    if compute_group and is_permutation_automaton(a):
        try:
            group = induced_language_group(a, b, cap=cap)
        except CapExceeded as exc:
            log.warning("divisor group not computed: %s", exc)
    return QuotientResult(a.with_finals(finals), finals, group)


def member_of_quotient(a: Dfa, b: Dfa, word: Iterable[str]) -> bool:
    """Decide x in L(a) L(b)^-1 by forward search for a suffix y in L(b).

    Any witness y can be shortened to one of length below |Q_a| * |Q_b|,
    since a shortest one visits no product state twice.
    """
    check_same_alphabet(a, b)
    start = (run(a, a.initial, word), b.initial)
    bound = a.state_count * b.state_count
    seen = {start}
    frontier = [start]
    for _ in range(bound):
        for p, q in frontier:
            if p in a.finals and q in b.finals:
                return True
        nxt = []
        for p, q in frontier:
            for letter in a.alphabet:
                pair = (a.transitions[letter][p - 1], b.transitions[letter][q - 1])
                if pair not in seen:
                    seen.add(pair)
                    nxt.append(pair)
        if not nxt:
            break
        frontier = nxt
    return False


def induced_language_group(a: Dfa, b: Dfa, cap: int = DEFAULT_CAP) -> PermutationSet:
    """G_B = {pi_w | w in L(b)}, the permutations of Q_a induced by L(b).

    Breadth-first search over pairs (pi_u, s_b . u); the pair space is finite,
    so the search terminates.  ``cap`` bounds the number of distinct
    permutations visited.
    """
    check_same_alphabet(a, b)
    if not is_permutation_automaton(a):
        raise NotPermutation("dividend is not a permutation automaton")
    letters = [(a.transitions[x], b.transitions[x]) for x in a.alphabet]
    ident = tuple(range(1, a.state_count + 1))
    start = (ident, b.initial)
    seen = {start}
    perms_seen = {ident}
    queue = deque([start])
    found = set()
    while queue:
        perm, q = queue.popleft()
        if q in b.finals:
            found.add(perm)
        for ta, tb in letters:
            pair = (tuple(ta[x - 1] for x in perm), tb[q - 1])
            if pair not in seen:
                seen.add(pair)
                perms_seen.add(pair[0])
                if len(perms_seen) > cap:
                    raise CapExceeded(cap)
                queue.append(pair)
    elements = frozenset(Permutation(p) for p in found)
    closed = len(found) <= _CLOSURE_CHECK_LIMIT and is_closed(elements, a.state_count)
    return PermutationSet(a.state_count, elements, closed=closed)


def final_set_via_group(finals: Iterable[int], group: PermutationSet) -> frozenset[int]:
    """Union of the preimages pi^-1(F) over pi in ``group``."""
    finals = frozenset(finals)
    if any(not 1 <= f <= group.degree for f in finals):
        raise DegreeMismatch(f"final states {sorted(finals)} exceed degree {group.degree}")
    return frozenset(
        q for q in range(1, group.degree + 1) if any(p(q) in finals for p in group.elements)
    )
