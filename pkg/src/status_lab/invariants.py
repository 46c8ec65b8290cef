"""Matching and domination numbers: linear tree DPs plus brute-force oracles."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import TooLarge
from .graph import Edge, Graph, _require_tree, _rooted_order

MAX_BRUTE_EDGES = 24
MAX_BRUTE_VERTICES = 20


@dataclass(frozen=True)
class MatchingResult:
    size: int
    witness: tuple[Edge, ...]


@dataclass(frozen=True)
class DominationResult:
    size: int
    witness: tuple[int, ...]


def is_matching(g: Graph, pairs) -> bool:
    used: set[int] = set()
    for u, v in pairs:
        if not g.has_edge(u, v) or u in used or v in used:
            return False
        used.update((u, v))
    return True


def is_dominating(g: Graph, vertices) -> bool:
    chosen = set(vertices)
    return all(u in chosen or any(v in chosen for v in g.adjacency[u]) for u in range(g.n))


def matching_number_tree(t: Graph) -> MatchingResult:
    """Maximum matching of a tree by leaf-first greedy on a BFS order from vertex 0."""
    _require_tree(t)
    order, parent = _rooted_order(t)
    matched = [False] * t.n
    pairs = []
    for x in reversed(order):
        p = parent[x]
        if p >= 0 and not matched[x] and not matched[p]:
            matched[x] = matched[p] = True
            pairs.append((min(x, p), max(x, p)))
    pairs.sort()
    assert is_matching(t, pairs)
    return MatchingResult(len(pairs), tuple(pairs))


_INF = float("inf")
IN, DOM, NEED = 0, 1, 2


def domination_number_tree(t: Graph) -> DominationResult:
    """Minimum dominating set of a tree, rooted at vertex 0.

    Three states per vertex: IN (in the set), DOM (outside, dominated by a
    child), NEED (outside, must be dominated by its parent).
    """
    _require_tree(t)
    n = t.n
    order, parent = _rooted_order(t)
    children: list[list[int]] = [[] for _ in range(n)]
    for x in order[1:]:
        children[parent[x]].append(x)

    cost = [[0.0, 0.0, 0.0] for _ in range(n)]
    for v in reversed(order):
        ch = children[v]
        cost[v][IN] = 1 + sum(min(cost[c]) for c in ch)
        cost[v][NEED] = sum(cost[c][DOM] for c in ch)
        if ch:
            base = sum(min(cost[c][IN], cost[c][DOM]) for c in ch)
            extra = min(cost[c][IN] - min(cost[c][IN], cost[c][DOM]) for c in ch)
            cost[v][DOM] = base + extra
        else:
            cost[v][DOM] = _INF

    state = [0] * n
    state[0] = IN if cost[0][IN] <= cost[0][DOM] else DOM
    for v in order:
        ch = children[v]
        if state[v] == IN:
            for c in ch:
                state[c] = min((IN, DOM, NEED), key=lambda s, c=c: cost[c][s])
        elif state[v] == NEED:
            for c in ch:
                state[c] = DOM
        else:
            for c in ch:
                state[c] = IN if cost[c][IN] <= cost[c][DOM] else DOM
            if all(state[c] != IN for c in ch):
                forced = min(ch, key=lambda c: (cost[c][IN] - cost[c][DOM], c))
                state[forced] = IN

    witness = tuple(v for v in range(n) if state[v] == IN)
    assert len(witness) == min(cost[0][IN], cost[0][DOM])
    assert is_dominating(t, witness)
    return DominationResult(len(witness), witness)


def matching_number_bruteforce(g: Graph) -> MatchingResult:
    """Exhaustive search over all edge subsets that are matchings."""
    if g.edge_count > MAX_BRUTE_EDGES:
        raise TooLarge(f"{g.edge_count} edges exceeds brute-force budget {MAX_BRUTE_EDGES}")
    edges = g.edges()
    best: list[Edge] = []
    current: list[Edge] = []
    used = [False] * g.n

    def search(i: int) -> None:
        nonlocal best
        if len(current) + (len(edges) - i) <= len(best):
            return
        if i == len(edges):
            best = list(current)
            return
        u, v = edges[i]
        if not used[u] and not used[v]:
            used[u] = used[v] = True
            current.append((u, v))
            search(i + 1)
            current.pop()
            used[u] = used[v] = False
        search(i + 1)

    search(0)
    assert is_matching(g, best)
    return MatchingResult(len(best), tuple(best))


def domination_number_bruteforce(g: Graph) -> DominationResult:
    """Smallest dominating set by subsets in increasing size (lexicographically first)."""
    n = g.n
    if n > MAX_BRUTE_VERTICES:
        raise TooLarge(f"{n} vertices exceeds brute-force budget {MAX_BRUTE_VERTICES}")
    closed = [(1 << u) | sum(1 << v for v in g.adjacency[u]) for u in range(n)]
    full = (1 << n) - 1
    for k in range(1, n + 1):
        for subset in combinations(range(n), k):
            covered = 0
            for u in subset:
                covered |= closed[u]
            if covered == full:
                return DominationResult(k, subset)
    raise AssertionError("unreachable: the full vertex set dominates")


def matching_number(g: Graph) -> MatchingResult:
    return matching_number_tree(g) if g.is_tree else matching_number_bruteforce(g)


def domination_number(g: Graph) -> DominationResult:
    return domination_number_tree(g) if g.is_tree else domination_number_bruteforce(g)
