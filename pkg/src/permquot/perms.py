"""Permutations on [k], generated groups, orbits and stabilizers.

Permutations are stored as 1-based image arrays: ``p.images[i - 1]`` is the
image of point ``i``.  Composition is in application order, so
``compose(p, q)`` first applies ``p`` and then ``q``; this matches the way an
automaton reads a word from left to right.
"""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    CapExceeded,
    DegreeMismatch,
    IndexOutOfRange,
    NotClosed,
)

DEFAULT_CAP = math.factorial(10)


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of [1..{len(images)}]")

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(1, degree + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> Permutation:
        images = list(range(1, degree + 1))
        seen: set[int] = set()
        for cycle in cycles:
            for point in cycle:
                if not 1 <= point <= degree:
                    raise IndexOutOfRange(f"point {point} outside [1..{degree}]")
                if point in seen:
                    raise ValueError(f"point {point} occurs in more than one cycle")
                seen.add(point)
            for i, point in enumerate(cycle):
                images[point - 1] = cycle[(i + 1) % len(cycle)]
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str, degree: int | None = None) -> Permutation:
        """Parse cycle notation such as ``"(1 2 3)(5 6)"`` or ``"id"``.

        Without ``degree`` the largest mentioned point is used.
        """
        text = text.strip()
        if text == "id":
            return cls.identity(degree or 1)
        if not re.fullmatch(r"(\(\s*\d+(\s+\d+)*\s*\)\s*)+", text):
            raise ValueError(f"cannot parse permutation {text!r}")
        cycles = [
            [int(tok) for tok in body.split()]
            for body in re.findall(r"\(([^)]*)\)", text)
        ]
        largest = max(max(c) for c in cycles)
        if degree is None:
            degree = largest
        return cls.from_cycles(cycles, degree)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def is_identity(self) -> bool:
        return all(img == i for i, img in enumerate(self.images, 1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                cycle.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "id"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def __repr__(self) -> str:
        return f"Permutation({self}, degree={self.degree})"


def compose(first: Permutation, then: Permutation) -> Permutation:
    """The permutation ``i -> then(first(i))``."""
    if first.degree != then.degree:
        raise DegreeMismatch(f"degrees {first.degree} and {then.degree} differ")
    t = then.images
    return Permutation(tuple(t[x - 1] for x in first.images))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.degree
    for i, img in enumerate(p.images, 1):
        inv[img - 1] = i
    return Permutation(tuple(inv))


def cycle(degree: int) -> Permutation:
    """The long cycle (1 2 ... degree)."""
    return Permutation(tuple(range(2, degree + 1)) + (1,))


def transposition(i: int, j: int, degree: int) -> Permutation:
    return Permutation.from_cycles([(i, j)], degree)


@dataclass(frozen=True)
class PermutationSet:
    """A finite set of permutations of one degree.

    ``closed`` is only set by code that has actually checked closure under
    composition (and therefore, for a finite set, under inverse).
    """

    degree: int
    elements: frozenset[Permutation]
    closed: bool = False

    def __post_init__(self):
        object.__setattr__(self, "elements", frozenset(self.elements))
        for p in self.elements:
            if p.degree != self.degree:
                raise DegreeMismatch(f"{p!r} does not have degree {self.degree}")

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(sorted(self.elements))

    def __contains__(self, p) -> bool:
        return p in self.elements

    def same_elements(self, other: PermutationSet) -> bool:
        return self.degree == other.degree and self.elements == other.elements


def is_closed(elements: Iterable[Permutation], degree: int) -> bool:
    """True iff the set is nonempty, contains the identity and is closed under composition."""
    images = {p.images for p in elements}
    if tuple(range(1, degree + 1)) not in images:
        return False
    return all(tuple(q[x - 1] for x in p) in images for p in images for q in images)


def generated_monoid_closure(
    generators: Sequence[Permutation],
    cap: int = DEFAULT_CAP,
    degree: int | None = None,
) -> PermutationSet:
    """All products of the generators, found by breadth-first search.

    Every element is reached by right-multiplying by generators only, never by
    inverses; for finite permutation groups this already yields the whole
    generated subgroup.
    """
    if degree is None:
        if not generators:
            raise ValueError("degree is required when there are no generators")
        degree = generators[0].degree
    for g in generators:
        if g.degree != degree:
            raise DegreeMismatch(f"generator {g} does not have degree {degree}")
    ident = Permutation.identity(degree)
    seen = {ident}
    queue = deque([ident])
    for g in generators:
        if g not in seen:
            seen.add(g)
            queue.append(g)
    if len(seen) > cap:
        raise CapExceeded(cap)
    while queue:
        p = queue.popleft()
        for g in generators:
            q = compose(p, g)
            if q not in seen:
                seen.add(q)
                if len(seen) > cap:
                    raise CapExceeded(cap)
                queue.append(q)
    return PermutationSet(degree, frozenset(seen), closed=True)


def symmetric_group(degree: int, cap: int = DEFAULT_CAP) -> PermutationSet:
    """S_degree, generated by (1 2 ... k) and (1 2)."""
    if degree == 1:
        return generated_monoid_closure([], cap=cap, degree=1)
    return generated_monoid_closure(
        [cycle(degree), transposition(1, 2, degree)], cap=cap
    )


def orbit(group: PermutationSet, point: int) -> set[int]:
    if not group.closed:
        raise NotClosed("orbit needs a closed permutation set")
    if not 1 <= point <= group.degree:
        raise IndexOutOfRange(f"point {point} outside [1..{group.degree}]")
    return {p(point) for p in group.elements}


def stabilizer(group: PermutationSet, point: int) -> PermutationSet:
    if not group.closed:
        raise NotClosed("stabilizer needs a closed permutation set")
    if not 1 <= point <= group.degree:
        raise IndexOutOfRange(f"point {point} outside [1..{group.degree}]")
    return PermutationSet(
        group.degree,
        frozenset(p for p in group.elements if p(point) == point),
        closed=True,
    )


# Words over {a, b} with a = (1 2 ... k) and b = (1 2).


def evaluate_ab_word(word: str, degree: int) -> Permutation:
    """The permutation a word over {a, b} induces on [degree]."""
    gens = {"a": cycle(degree)}
    gens["b"] = transposition(1, 2, degree) if degree >= 2 else Permutation.identity(1)
    images = list(range(1, degree + 1))
    for letter in word:
        try:
            g = gens[letter].images
        except KeyError:
            raise ValueError(f"letter {letter!r} is not in {{a, b}}") from None
        images = [g[x - 1] for x in images]
    return Permutation(tuple(images))


def adjacent_transposition_word(i: int, k: int) -> str:
    """The word a^(k-i+1) b a^(i-1), which induces (i i+1) on [k]."""
    if not 1 <= i < k:
        raise IndexOutOfRange(f"need 1 <= i < k, got i={i}, k={k}")
    return "a" * (k - (i - 1)) + "b" + "a" * (i - 1)


def adjacent_decomposition(target: Permutation) -> list[int]:
    """Indices i_1, ..., i_r with target = (i_1 i_1+1) then ... then (i_r i_r+1).

    Bubble sort on values: composing with (j j+1) afterwards swaps the values
    j and j+1 in the image array, and each swap removes one inversion.  A
    permutation fixing its last point never needs the swap touching it.
    """
    images = list(target.images)
    where = {v: pos for pos, v in enumerate(images)}
    swaps = []
    done = False
    while not done:
        done = True
        for j in range(1, target.degree):
            if where[j + 1] < where[j]:
                pj, pj1 = where[j], where[j + 1]
                images[pj], images[pj1] = j + 1, j
                where[j], where[j + 1] = pj1, pj
                swaps.append(j)
                done = False
    # target . s_1 . ... . s_r = id, and every s is an involution
    return swaps[::-1]


def word_for_permutation(target: Permutation, k: int) -> str:
    """A word over {a, b} inducing ``target`` under a = (1 ... k), b = (1 2)."""
    if target.degree != k:
        raise DegreeMismatch(f"target has degree {target.degree}, expected {k}")
    return "".join(adjacent_transposition_word(i, k) for i in adjacent_decomposition(target))
