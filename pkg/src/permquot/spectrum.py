"""Spectrum scans for the accepting-state complexity of right quotient.

Three searches back the ``verify-theorem`` command:

* ``unary_bruteforce`` enumerates minimal single-cycle unary automata with
  prescribed asc and records which quotient complexities occur;
* ``zero_scan`` enumerates small permutation automata and checks that no
  quotient of two nonempty languages is empty;
* ``verify_theorem`` combines both with the ternary witness triples.

Enumeration orders are fixed, so reports are reproducible byte for byte.
"""

from __future__ import annotations

import functools
import itertools
import json
from dataclasses import dataclass, field
from math import factorial
from typing import Iterator

from .automata import Dfa, asc, minimize
from .errors import CounterexampleFound, WitnessCheckFailed
from .quotient import DivisorBatch, quotient_final_sets, right_quotient
from .textfmt import format_dfa
from .witnesses import WitnessParams, quotient_divisor, quotient_source, witness_triple

DEFAULT_CYCLE_BOUND = 12
DEFAULT_STATE_BOUND = 4
DEFAULT_ALPHABET_BOUND = 2


# -- evidence records --------------------------------------------------------


@dataclass(frozen=True)
class UnaryEvidence:
    """A pair of single-cycle unary automata, given by cycle length and final residues."""

    k_cycle: int
    k_finals: tuple[int, ...]
    l_cycle: int
    l_finals: tuple[int, ...]

    kind = "unary-search"

    def automata(self) -> tuple[Dfa, Dfa]:
        return cycle_automaton(self.k_cycle, self.k_finals), cycle_automaton(self.l_cycle, self.l_finals)

    def remeasure(self) -> tuple[int, int, int]:
        k, l = self.automata()
        return asc(k), asc(l), asc(right_quotient(k, l, compute_group=False).automaton)

    def describe(self) -> dict:
        return {
            "class": self.kind,
            "K": {"cycle": self.k_cycle, "final_residues": list(self.k_finals)},
            "L": {"cycle": self.l_cycle, "final_residues": list(self.l_finals)},
        }


@dataclass(frozen=True)
class WitnessEvidence:
    params: WitnessParams

    kind = "ternary-witness"

    def automata(self) -> tuple[Dfa, Dfa]:
        return (
            quotient_source(self.params.m, self.params.alpha),
            quotient_divisor(self.params.n, self.params.alpha),
        )

    def remeasure(self) -> tuple[int, int, int]:
        k, l = self.automata()
        return asc(k), asc(l), asc(right_quotient(k, l, compute_group=False).automaton)

    def describe(self) -> dict:
        p = self.params
        return {"class": self.kind, "m": p.m, "n": p.n, "alpha": p.alpha, "k": p.k}


@dataclass
class SpectrumReport:
    """Attained quotient complexities for fixed input complexities (m, n)."""

    m: int
    n: int
    attained: set[int] = field(default_factory=set)
    evidence: dict[int, UnaryEvidence | WitnessEvidence] = field(default_factory=dict)
    search_bounds: str = ""
    target: tuple[int, ...] = ()
    pairs_checked: int = 0

    @property
    def missing(self) -> list[int]:
        return [a for a in self.target if a not in self.attained]

    @property
    def partial(self) -> bool:
        return bool(self.missing)

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "search_bounds": self.search_bounds,
            "pairs_checked": self.pairs_checked,
            "target": list(self.target),
            "attained": sorted(self.attained),
            "missing": self.missing,
            "partial": self.partial,
            "records": [
                {"alpha": a, **self.evidence[a].describe()} for a in sorted(self.evidence)
            ],
        }


# -- unary search ------------------------------------------------------------


def cycle_automaton(length: int, final_residues) -> Dfa:
    """Unary cycle of the given length; residue r is state r + 1, initial residue 0."""
    return Dfa(
        length,
        ("a",),
        {"a": tuple(range(2, length + 1)) + (1,)},
        1,
        frozenset(r + 1 for r in final_residues),
    )


def least_period(residues: tuple[int, ...], length: int) -> int:
    rs = set(residues)
    for d in range(1, length + 1):
        if length % d == 0 and {(r + d) % length for r in rs} == rs:
            return d
    return length


def minimal_unary_cycles(finals: int, cycle_bound: int) -> list[tuple[int, tuple[int, ...]]]:
    """All (length, final residues) with exactly ``finals`` residues and least period = length.

    These are exactly the minimal unary permutation automata with that many
    final states, since a single cycle is minimal iff its final set is not
    invariant under a proper rotation.
    """
    out = []
    for length in range(1, cycle_bound + 1):
        for residues in itertools.combinations(range(length), finals):
            if least_period(residues, length) == length:
                out.append((length, residues))
    return out


def unary_bruteforce(
    m: int,
    n: int,
    cycle_bound: int = DEFAULT_CYCLE_BOUND,
    targets: set[int] | None = None,
    stop_when_found: bool = False,
) -> SpectrumReport:
    """Quotient complexities reached by pairs of minimal unary cycles with asc m and n.

    Pairs are visited dividend-major, both sides ordered by cycle length and
    then final residues.  ``targets`` defaults to [1, mn]; with
    ``stop_when_found`` the search ends after the first dividend at which
    every target has a witness, otherwise all pairs are checked.  Each
    recorded witness is re-measured from scratch before it is kept.
    """
    if m < 1 or n < 1:
        raise ValueError("need m, n >= 1")
    if cycle_bound < 2:
        raise ValueError("need cycle_bound >= 2")
    target = tuple(sorted(targets)) if targets is not None else tuple(range(1, m * n + 1))
    report = SpectrumReport(
        m,
        n,
        search_bounds=f"single cycles of length <= {cycle_bound}",
        target=target,
    )
    ks = minimal_unary_cycles(m, cycle_bound)
    ls = minimal_unary_cycles(n, cycle_bound)
    if not ks or not ls:
        # the bound admits no minimal cycle with that many finals
        return report
    divisors = DivisorBatch([cycle_automaton(*key) for key in ls])
    remaining = set(target)
    for k_key in ks:
        k_dfa = cycle_automaton(*k_key)
        asc_of: dict[frozenset[int], int] = {}
        for l_key, finals in zip(ls, quotient_final_sets(k_dfa, divisors)):
            if finals not in asc_of:
                asc_of[finals] = asc(k_dfa.with_finals(finals))
            alpha = asc_of[finals]
            report.pairs_checked += 1
            if alpha in report.attained:
                continue
            evidence = UnaryEvidence(k_key[0], k_key[1], l_key[0], l_key[1])
            measured = evidence.remeasure()
            if measured != (m, n, alpha):
                raise WitnessCheckFailed((m, n, alpha), measured)
            report.attained.add(alpha)
            report.evidence[alpha] = evidence
            remaining.discard(alpha)
        if stop_when_found and not remaining:
            break
    return report


# -- zero impossibility scan -------------------------------------------------


def permutation_automata(state_count: int, alphabet: tuple[str, ...]) -> Iterator[Dfa]:
    """Every permutation automaton on [state_count] with initial state 1.

    Fixing the initial state loses no languages: relabelling states carries
    an automaton with any other initial state onto one in this list.
    """
    perms = list(itertools.permutations(range(1, state_count + 1)))
    for columns in itertools.product(perms, repeat=len(alphabet)):
        trans = dict(zip(alphabet, columns))
        for mask in range(1 << state_count):
            finals = frozenset(q + 1 for q in range(state_count) if mask >> q & 1)
            yield Dfa(state_count, alphabet, trans, 1, finals)


@dataclass
class ZeroScanReport:
    state_bound: int
    alphabet_bound: int
    automata_enumerated: int = 0
    languages: int = 0
    pairs_checked: int = 0
    witness_pairs_checked: int = 0
    counterexamples: list[tuple[Dfa, Dfa]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples and self.pairs_checked > 0

    def check(self) -> None:
        """Raise CounterexampleFound carrying the first empty quotient, if any."""
        if self.counterexamples:
            raise CounterexampleFound(
                f"{len(self.counterexamples)} pair(s) of nonempty languages have an empty quotient",
                self.counterexamples[0],
            )

    def to_dict(self) -> dict:
        return {
            "state_bound": self.state_bound,
            "alphabet_bound": self.alphabet_bound,
            "automata_enumerated": self.automata_enumerated,
            "distinct_nonempty_languages": self.languages,
            "pairs_checked": self.pairs_checked,
            "witness_pairs_checked": self.witness_pairs_checked,
            "counterexamples": [
                {"A": format_dfa(a), "B": format_dfa(b)} for a, b in self.counterexamples
            ],
            "ok": self.ok,
        }


@functools.lru_cache(maxsize=None)
def zero_scan(
    state_bound: int = DEFAULT_STATE_BOUND,
    alphabet_bound: int = DEFAULT_ALPHABET_BOUND,
    witness_bound: int = 3,
) -> ZeroScanReport:
    """Check that K L^-1 is nonempty for all nonempty permutation languages K, L in range.

    Automata are first reduced to their minimal DFAs, which only removes
    duplicate languages: the quotient depends on L(A) and L(B) alone.  Every
    ordered pair of nonempty languages over a common alphabet is then
    checked, followed by the ternary witness pairs with m, n, alpha up to
    ``witness_bound``.  Results are cached since the scan is pure.
    """
    report = ZeroScanReport(state_bound, alphabet_bound)
    for size in range(1, alphabet_bound + 1):
        alphabet = tuple("abcdefghijklmnopqrstuvwxyz"[:size])
        languages: dict[tuple, Dfa] = {}
        for states in range(1, state_bound + 1):
            for dfa in permutation_automata(states, alphabet):
                report.automata_enumerated += 1
                mini = minimize(dfa)
                if not mini.finals:
                    continue
                key = (mini.state_count, tuple(mini.transitions[a] for a in alphabet), mini.finals)
                languages.setdefault(key, mini)
        report.languages += len(languages)
        minimal = list(languages.values())
        batch = DivisorBatch(minimal)
        for a in minimal:
            nonempty: dict[frozenset[int], bool] = {}
            for b, finals in zip(minimal, quotient_final_sets(a, batch)):
                if finals not in nonempty:
                    nonempty[finals] = asc(a.with_finals(finals)) >= 1
                report.pairs_checked += 1
                if not nonempty[finals]:
                    report.counterexamples.append((a, b))
    for m, n, alpha in itertools.product(range(1, witness_bound + 1), repeat=3):
        if alpha < m:
            continue
        a, b = quotient_source(m, alpha), quotient_divisor(n, alpha)
        report.witness_pairs_checked += 1
        if asc(right_quotient(a, b, compute_group=False).automaton) < 1:
            report.counterexamples.append((a, b))
    return report


def count_permutation_automata(state_bound: int, alphabet_bound: int) -> int:
    """How many automata ``zero_scan`` enumerates, for sizing runs up front."""
    return sum(
        factorial(s) ** size * 2**s
        for size in range(1, alphabet_bound + 1)
        for s in range(1, state_bound + 1)
    )


# -- theorem verification ----------------------------------------------------


@dataclass
class AlphaRecord:
    alpha: int
    evidence: list[UnaryEvidence | WitnessEvidence] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "classes": [e.kind for e in self.evidence],
            "evidence": [e.describe() for e in self.evidence],
        }


@dataclass
class TheoremReport:
    m: int
    n: int
    alpha_max: int
    cycle_bound: int
    records: dict[int, AlphaRecord] = field(default_factory=dict)
    zero: ZeroScanReport | None = None
    unary: SpectrumReport | None = None
    failures: list[str] = field(default_factory=list)
    internal_error: bool = False

    @property
    def attained(self) -> list[int]:
        return sorted(a for a, r in self.records.items() if r.evidence)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "alpha_max": self.alpha_max,
            "cycle_bound": self.cycle_bound,
            "attained": self.attained,
            "zero_attained": bool(self.zero and self.zero.counterexamples),
            "records": [self.records[a].to_dict() for a in sorted(self.records)],
            "zero_scan": self.zero.to_dict() if self.zero else None,
            "unary_search": self.unary.to_dict() if self.unary else None,
            "failures": self.failures,
            "ok": self.ok,
        }


def verify_theorem(
    m: int,
    n: int,
    alpha_max: int,
    cycle_bound: int = DEFAULT_CYCLE_BOUND,
    state_bound: int = DEFAULT_STATE_BOUND,
    alphabet_bound: int = DEFAULT_ALPHABET_BOUND,
) -> TheoremReport:
    """Certify every alpha in [1, alpha_max] for (m, n), and that 0 is never reached.

    alpha >= m is certified by the ternary witness triple, alpha <= mn by unary
    search; values in both ranges are certified both ways.
    """
    if m < 1 or n < 1:
        raise ValueError("verify_theorem needs m, n >= 1")
    report = TheoremReport(m, n, alpha_max, cycle_bound)
    for alpha in range(1, alpha_max + 1):
        report.records[alpha] = AlphaRecord(alpha)

    for alpha in range(max(1, m), alpha_max + 1):
        params = WitnessParams(m, n, alpha)
        try:
            witness_triple(params)
        except WitnessCheckFailed as exc:
            report.failures.append(f"witness {params}: {exc}")
            report.internal_error = True
            continue
        report.records[alpha].evidence.append(WitnessEvidence(params))

    report.zero = zero_scan(state_bound, alphabet_bound)
    if not report.zero.ok:
        report.failures.append(
            f"zero scan found {len(report.zero.counterexamples)} empty quotient(s)"
        )

    low = set(range(1, min(m * n, alpha_max) + 1))
    if low:
        report.unary = unary_bruteforce(m, n, cycle_bound, targets=low, stop_when_found=True)
        for alpha in sorted(report.unary.attained):
            if alpha in report.records:
                report.records[alpha].evidence.insert(0, report.unary.evidence[alpha])
        if report.unary.partial:
            report.failures.append(
                f"unary search (cycles <= {cycle_bound}) missed alpha {report.unary.missing}"
            )

    for alpha, record in report.records.items():
        if not record.evidence:
            report.failures.append(f"alpha {alpha} not attained")
        for ev in record.evidence:
            if ev.remeasure() != (m, n, alpha):
                report.failures.append(f"evidence for alpha {alpha} does not reproduce")
                report.internal_error = True
    return report


# -- rendering ---------------------------------------------------------------


def render(report, fmt: str = "text") -> str:
    """Text summary followed by one record line per alpha, or a JSON document."""
    if not isinstance(report, (TheoremReport, SpectrumReport, ZeroScanReport)):
        raise TypeError(f"cannot render {type(report).__name__}")
    data = report.to_dict()
    if fmt == "machine":
        return json.dumps(data, indent=2, sort_keys=True) + "\n"
    lines = []
    if isinstance(report, TheoremReport):
        lines.append(f"verify-theorem m={report.m} n={report.n} alpha_max={report.alpha_max}")
        lines.append(f"attained: {' '.join(map(str, report.attained))}")
        if report.zero is not None:
            z = report.zero
            lines.append(
                f"zero-scan: {z.pairs_checked} language pairs + {z.witness_pairs_checked} "
                f"witness pairs, {len(z.counterexamples)} empty quotients"
            )
        lines.append(f"status: {'PASS' if report.ok else 'FAIL'}")
        lines += [f"failure: {f}" for f in report.failures]
        lines.append("records:")
        for a in sorted(report.records):
            rec = report.records[a]
            classes = ",".join(e.kind for e in rec.evidence) or "none"
            lines.append(f"alpha={a} classes={classes} evidence={_compact(rec.evidence)}")
    elif isinstance(report, SpectrumReport):
        lines.append(f"unary-bruteforce m={report.m} n={report.n} ({report.search_bounds})")
        lines.append(f"pairs checked: {report.pairs_checked}")
        lines.append(f"attained: {' '.join(map(str, sorted(report.attained)))}")
        if report.partial:
            lines.append(f"partial: missing {' '.join(map(str, report.missing))}")
        else:
            lines.append(f"complete: every alpha in {list(report.target)} attained")
        lines.append("records:")
        for a in sorted(report.evidence):
            lines.append(f"alpha={a} evidence={_compact([report.evidence[a]])}")
    else:
        lines.append(
            f"zero-scan states<={report.state_bound} letters<={report.alphabet_bound}"
        )
        lines.append(f"automata enumerated: {report.automata_enumerated}")
        lines.append(f"distinct nonempty languages: {report.languages}")
        lines.append(f"pairs checked: {report.pairs_checked}")
        lines.append(f"witness pairs checked: {report.witness_pairs_checked}")
        lines.append(f"empty quotients: {len(report.counterexamples)}")
        lines.append(f"status: {'PASS' if report.ok else 'FAIL'}")
    return "\n".join(lines) + "\n"


def _compact(evidence) -> str:
    return json.dumps([e.describe() for e in evidence], sort_keys=True, separators=(",", ":"))

