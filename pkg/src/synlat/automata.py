"""Total deterministic finite automata: the carrier structure for everything else.

States are integers 0..n-1 with a total transition table.  All construction
paths renumber states canonically (breadth-first from the initial state,
letters in alphabet order) so downstream tables and renderings are
byte-reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import BudgetError


@dataclass(frozen=True)
class Dfa:
    """Complete DFA.  delta[state][letter_index] is the successor state."""

    alphabet: tuple[str, ...]
    delta: tuple[tuple[int, ...], ...]
    initial: int
    finals: frozenset[int]
    state_labels: tuple[str, ...] | None = None
    _letter_index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        n = len(self.delta)
        if not self.alphabet:
            raise ValueError("alphabet must be non-empty")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError("alphabet letters must be distinct")
        if not 0 <= self.initial < n:
            raise ValueError("initial state out of range")
        for row in self.delta:
            if len(row) != len(self.alphabet):
                raise ValueError("delta row width does not match alphabet")
            for q in row:
                if not 0 <= q < n:
                    raise ValueError("transition target out of range")
        if not all(0 <= q < n for q in self.finals):
            raise ValueError("final state out of range")
        if self.state_labels is not None and len(self.state_labels) != n:
            raise ValueError("state_labels length does not match state count")
        object.__setattr__(self, "_letter_index", {a: i for i, a in enumerate(self.alphabet)})

    @property
    def n_states(self) -> int:
        return len(self.delta)

    def letter_index(self, letter: str) -> int:
        try:
            return self._letter_index[letter]
        except KeyError:
            raise ValueError(f"unknown letter {letter!r}") from None

    def step(self, state: int, letter: str) -> int:
        return self.delta[state][self.letter_index(letter)]


def run(dfa: Dfa, state: int, word: str) -> int:
    """State reached from `state` by `word`; run(d, q, "") == q."""
    if not 0 <= state < dfa.n_states:
        raise ValueError("state out of range")
    for a in word:
        state = dfa.delta[state][dfa.letter_index(a)]
    return state


def accepts(dfa: Dfa, word: str, state: int | None = None) -> bool:
    start = dfa.initial if state is None else state
    return run(dfa, start, word) in dfa.finals


def access_words(dfa: Dfa) -> tuple[str, ...]:
    """Shortlex-least word reaching each state (all states must be reachable)."""
    words: dict[int, str] = {dfa.initial: ""}
    queue = deque([dfa.initial])
    while queue:
        q = queue.popleft()
        for i, _ in enumerate(dfa.alphabet):
            t = dfa.delta[q][i]
            if t not in words:
                words[t] = words[q] + dfa.alphabet[i]
                queue.append(t)
    if len(words) != dfa.n_states:
        raise ValueError("automaton has unreachable states")
    return tuple(words[q] for q in range(dfa.n_states))


def _reachable(dfa: Dfa) -> list[int]:
    seen = {dfa.initial}
    order = [dfa.initial]
    queue = deque(order)
    while queue:
        q = queue.popleft()
        for t in dfa.delta[q]:
            if t not in seen:
                seen.add(t)
                order.append(t)
                queue.append(t)
    return order


def _renumber(dfa: Dfa) -> Dfa:
    """Canonical BFS numbering from the initial state, letters in alphabet order."""
    order = _reachable(dfa)
    new_id = {q: i for i, q in enumerate(order)}
    delta = tuple(tuple(new_id[dfa.delta[q][i]] for i in range(len(dfa.alphabet))) for q in order)
    finals = frozenset(new_id[q] for q in dfa.finals if q in new_id)
    labels = None
    if dfa.state_labels is not None:
        labels = tuple(dfa.state_labels[q] for q in order)
    return Dfa(dfa.alphabet, delta, 0, finals, labels)


def minimize(dfa: Dfa) -> Dfa:
    """Hopcroft partition refinement, then canonical renumbering.

    The result has no unreachable states and no pair of equivalent states.
    """
    reach = _reachable(dfa)
    reach_set = set(reach)
    finals = frozenset(q for q in dfa.finals if q in reach_set)
    non_finals = frozenset(q for q in reach_set if q not in finals)

    partition: list[frozenset[int]] = [b for b in (finals, non_finals) if b]
    block_of = {}
    for b, block in enumerate(partition):
        for q in block:
            block_of[q] = b
    # preimage lists per letter
    pre: list[dict[int, list[int]]] = [{} for _ in dfa.alphabet]
    for q in reach:
        for i, t in enumerate(dfa.delta[q]):
            pre[i].setdefault(t, []).append(q)

    work = [0] if len(partition) == 1 else [0 if len(partition[0]) <= len(partition[1]) else 1]
    work_set = set(work)
    while work:
        b = work.pop()
        work_set.discard(b)
        splitter = partition[b]
        for i in range(len(dfa.alphabet)):
            x = set()
            for t in splitter:
                x.update(pre[i].get(t, ()))
            affected: dict[int, set[int]] = {}
            for q in x:
                affected.setdefault(block_of[q], set()).add(q)
            for y, overlap in affected.items():
                block = partition[y]
                if len(overlap) == len(block):
                    continue
                part1 = frozenset(overlap)
                part2 = block - part1
                partition[y] = part1
                partition.append(part2)
                new_b = len(partition) - 1
                for q in part2:
                    block_of[q] = new_b
                if y in work_set:
                    work.append(new_b)
                    work_set.add(new_b)
                else:
                    smaller = y if len(part1) <= len(part2) else new_b
                    work.append(smaller)
                    work_set.add(smaller)

    delta = tuple(
        tuple(block_of[dfa.delta[next(iter(partition[b]))][i]] for i in range(len(dfa.alphabet)))
        for b in range(len(partition))
    )
    new_finals = frozenset(b for b, block in enumerate(partition) if block <= finals)
    labels = None
    if dfa.state_labels is not None:
        labels = tuple(dfa.state_labels[min(partition[b])] for b in range(len(partition)))
    merged = Dfa(dfa.alphabet, delta, block_of[dfa.initial], new_finals, labels)
    return _renumber(merged)


def equivalent(d1: Dfa, d2: Dfa) -> bool:
    """Hopcroft–Karp union-find language-equivalence check."""
    if d1.alphabet != d2.alphabet:
        raise ValueError("alphabet mismatch")
    n1 = d1.n_states
    parent = list(range(n1 + d2.n_states))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx == ry:
            return False
        parent[rx] = ry
        return True

    def is_final(x):
        return x in d1.finals if x < n1 else (x - n1) in d2.finals

    queue = deque()
    if union(d1.initial, n1 + d2.initial):
        queue.append((d1.initial, n1 + d2.initial))
    while queue:
        p, q = queue.popleft()
        if is_final(p) != is_final(q):
            return False
        for i in range(len(d1.alphabet)):
            tp = d1.delta[p][i] if p < n1 else n1 + d2.delta[p - n1][i]
            tq = d1.delta[q][i] if q < n1 else n1 + d2.delta[q - n1][i]
            if union(tp, tq):
                queue.append((tp, tq))
    return True


def dfa_of_finite_language(words, alphabet, state_budget: int = 4096) -> Dfa:
    """Minimal complete DFA of a finite word set (trie plus sink, minimized)."""
    alphabet = tuple(alphabet)
    words = sorted(set(words))
    for w in words:
        for a in w:
            if a not in alphabet:
                raise ValueError(f"word letter {a!r} outside alphabet")
    nodes: dict[str, int] = {"": 0}
    prefixes = [""]
    for w in words:
        for i in range(1, len(w) + 1):
            p = w[:i]
            if p not in nodes:
                nodes[p] = len(prefixes)
                prefixes.append(p)
    sink = len(prefixes)
    if sink + 1 > state_budget:
        raise BudgetError("finite-language states", state_budget)
    delta = []
    for p in prefixes:
        delta.append(tuple(nodes.get(p + a, sink) for a in alphabet))
    delta.append(tuple(sink for _ in alphabet))
    finals = frozenset(nodes[w] for w in words)
    return minimize(Dfa(alphabet, tuple(delta), 0, finals))
