"""Brute-force test oracles for the syntactic congruences and element sets.

These recompute word actions from raw DFA runs (never through the quotient
chains or the closure logic of the engines) so that closure bugs cannot
validate themselves.  Element enumeration works bottom-up from normal forms
under explicit word-length / combination-size bounds; saturation means two
consecutive bound increments produce the same map set, a documented test
heuristic rather than a theorem.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .atoms import ProfileTable, join, meet, residual_atoms, top, bottom
from .automata import Dfa, run
from .errors import BudgetError

DEFAULT_SUBSET_BUDGET = 200_000


@dataclass(frozen=True)
class OracleConfig:
    max_word_len: int = 3
    max_term_nodes: int = 3
    seed: int = 0

    def __post_init__(self):
        if self.max_word_len < 1 or self.max_term_nodes < 1:
            raise ValueError("oracle bounds must be positive")


def words_upto(alphabet, n):
    """All words of length <= n in shortlex order."""
    out = [""]
    frontier = [""]
    for _ in range(n):
        frontier = [w + a for w in frontier for a in alphabet]
        out.extend(frontier)
    return out


def oracle_monoid_congruent(pt: ProfileTable, dfa: Dfa, u: str, v: str) -> bool:
    return all(run(dfa, q, u) == run(dfa, q, v) for q in range(dfa.n_states))


def _meet_action(pt, dfa, q, words):
    out = top(pt)
    for w in words:
        out = meet(out, residual_atoms(pt, run(dfa, q, w)))
    return out


def _form_action(pt, dfa, q, form):
    out = bottom(pt)
    for inner in form:
        out = join(out, _meet_action(pt, dfa, q, inner))
    return out


def oracle_semiring_congruent(pt: ProfileTable, dfa: Dfa, u, v) -> bool:
    return all(
        _meet_action(pt, dfa, q, u) == _meet_action(pt, dfa, q, v) for q in range(dfa.n_states)
    )


def oracle_lattice_congruent(pt: ProfileTable, dfa: Dfa, f1, f2) -> bool:
    return all(
        _form_action(pt, dfa, q, f1) == _form_action(pt, dfa, q, f2) for q in range(dfa.n_states)
    )


def _word_maps(pt, dfa, max_len):
    """Distinct run-maps of words up to max_len (equal run-maps act equally everywhere)."""
    seen = {}
    for w in words_upto(dfa.alphabet, max_len):
        m = tuple(run(dfa, q, w) for q in range(dfa.n_states))
        if m not in seen:
            seen[m] = w
    return list(seen)


def _subset_count(n, k):
    total = 0
    c = 1
    for i in range(min(n, k) + 1):
        total += c
        c = c * (n - i) // (i + 1)
    return total


def oracle_enumerate_elements(
    pt: ProfileTable, dfa: Dfa, level: str, cfg: OracleConfig, subset_budget: int = DEFAULT_SUBSET_BUDGET
) -> frozenset:
    """Distinct element maps realized by normal forms within the bounds.

    monoid: run-maps of words.  semiring: meets of at most max_term_nodes
    word actions (the empty meet giving ⊤).  lattice: joins of at most
    max_term_nodes such meets (the empty join giving ⊥).
    """
    states = range(dfa.n_states)
    word_maps = _word_maps(pt, dfa, cfg.max_word_len)
    if level == "monoid":
        return frozenset(word_maps)

    k = cfg.max_term_nodes
    if _subset_count(len(word_maps), k) > subset_budget:
        raise BudgetError("oracle meet combinations", subset_budget)
    meets = {tuple(top(pt) for _ in states)}
    base = [tuple(residual_atoms(pt, m[q]) for q in states) for m in word_maps]
    for size in range(1, k + 1):
        for combo in combinations(base, size):
            acc = combo[0]
            for m in combo[1:]:
                acc = tuple(meet(x, y) for x, y in zip(acc, m))
            meets.add(acc)
    if level == "semiring":
        return frozenset(meets)
    if level != "lattice":
        raise ValueError(f"unknown level {level!r}")

    meet_list = sorted(meets, key=lambda m: tuple(x.bits for x in m))
    if _subset_count(len(meet_list), k) > subset_budget:
        raise BudgetError("oracle join combinations", subset_budget)
    joins = {tuple(bottom(pt) for _ in states)}
    for size in range(1, k + 1):
        for combo in combinations(meet_list, size):
            acc = combo[0]
            for m in combo[1:]:
                acc = tuple(join(x, y) for x, y in zip(acc, m))
            joins.add(acc)
    return frozenset(joins)


def oracle_enumerate_saturated(
    pt: ProfileTable,
    dfa: Dfa,
    level: str,
    start: OracleConfig = OracleConfig(1, 1),
    max_word_len: int = 8,
    max_term_nodes: int = 8,
    subset_budget: int = DEFAULT_SUBSET_BUDGET,
):
    """Increase bounds until two consecutive rounds agree; returns (maps, cfg)."""
    length, nodes = start.max_word_len, start.max_term_nodes
    prev = oracle_enumerate_elements(pt, dfa, level, OracleConfig(length, nodes), subset_budget)
    while length < max_word_len and nodes < max_term_nodes:
        length += 1
        nodes += 1
        cur = oracle_enumerate_elements(pt, dfa, level, OracleConfig(length, nodes), subset_budget)
        if cur == prev:
            return cur, OracleConfig(length, nodes)
        prev = cur
    raise BudgetError("oracle saturation bounds", max_word_len)
