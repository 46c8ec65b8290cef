"""Non-isomorphic tree and small connected-graph generation, canonical codes."""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import Iterator

from .errors import InvalidParams, TooLarge
from .graph import Graph, _require_tree, branch_profile, graph_from_edges

MAX_TREE_ORDER = 18
MAX_GRAPH_ORDER = 7


@dataclass(frozen=True, order=True)
class TreeCode:
    """AHU parenthesis string of a tree rooted at its centroid."""

    n: int
    code: bytes

    def __str__(self) -> str:
        return self.code.decode("ascii")


def _rooted_code(t: Graph, root: int) -> bytes:
    order = [root]
    parent = [-1] * t.n
    for x in order:
        for y in t.adjacency[x]:
            if y != parent[x]:
                parent[y] = x
                order.append(y)
    kids: list[list[bytes]] = [[] for _ in range(t.n)]
    code = b""
    for x in reversed(order):
        kids[x].sort()
        code = b"(" + b"".join(kids[x]) + b")"
        if parent[x] >= 0:
            kids[parent[x]].append(code)
        kids[x] = []
    return code


def canonical_code(t: Graph) -> TreeCode:
    """Isomorphism-invariant code; for two centroids the smaller rooting wins."""
    _require_tree(t)
    centroid = branch_profile(t).centroid
    return TreeCode(t.n, min(_rooted_code(t, c) for c in centroid))


# -- free trees by level sequences -------------------------------------------


def _layout_to_graph(layout: list[int]) -> Graph:
    edges = []
    last_at_level: dict[int, int] = {}
    for i, level in enumerate(layout):
        if level > 0:
            edges.append((last_at_level[level - 1], i))
        last_at_level[level] = i
    return graph_from_edges(len(layout), edges)


def _next_rooted(layout: list[int], p: int | None = None) -> list[int] | None:
    """Successor of a canonical rooted level sequence (Beyer-Hedetniemi step)."""
    if p is None:
        p = len(layout) - 1
        while layout[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while layout[q] != layout[p] - 1:
        q -= 1
    out = list(layout)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split(layout: list[int]) -> tuple[list[int], list[int]]:
    """Split off the first principal subtree (heights shifted to start at 0)."""
    m = len(layout)
    seen_one = False
    for i, level in enumerate(layout):
        if level == 1:
            if seen_one:
                m = i
                break
            seen_one = True
    left = [x - 1 for x in layout[1:m]]
    rest = [0] + layout[m:]
    return left, rest


def _next_free(layout: list[int]) -> list[int] | None:
    """Advance to the next level sequence that is canonical for a free tree."""
    left, rest = _split(layout)
    lh, rh = max(left), max(rest)
    valid = rh >= lh
    if valid and rh == lh:
        if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
            valid = False
    if valid:
        return layout
    p = len(left)
    nxt = _next_rooted(layout, p)
    if nxt is not None and layout[p] > 2:
        new_left, _ = _split(nxt)
        tail = list(range(1, max(new_left) + 2))
        nxt[-len(tail):] = tail
    return nxt


def _wrom_trees(n: int) -> Iterator[Graph]:
    """Wright-Richmond-Odlyzko-McKay generation: one tree per isomorphism class."""
    if n == 1:
        yield graph_from_edges(1, [])
        return
    layout: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while layout is not None:
        layout = _next_free(layout)
        if layout is None:
            return
        yield _layout_to_graph(layout)
        layout = _next_rooted(layout)


def enumerate_trees(n: int) -> Iterator[Graph]:
    """All trees of order ``n`` up to isomorphism, in ascending canonical-code order."""
    if n < 1:
        raise InvalidParams(f"tree order must be >= 1, got {n}")
    if n > MAX_TREE_ORDER:
        raise TooLarge(f"tree enumeration budget is n <= {MAX_TREE_ORDER}, got {n}")
    return iter(_sorted_trees(n))


@lru_cache(maxsize=None)
def _sorted_trees(n: int) -> tuple[Graph, ...]:
    keyed = sorted(((canonical_code(t), t) for t in _wrom_trees(n)), key=lambda kt: kt[0])
    return tuple(t for _, t in keyed)


# -- Pruefer sequences ---------------------------------------------------------


def prufer_decode(n: int, seq: list[int]) -> Graph:
    if n == 1:
        return graph_from_edges(1, [])
    if len(seq) != n - 2:
        raise InvalidParams(f"Pruefer sequence for n={n} must have length {n - 2}")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [u for u in range(n) if degree[u] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return graph_from_edges(n, edges)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labelled tree (random Pruefer sequence), deterministic per seed."""
    if n < 1:
        raise InvalidParams(f"tree order must be >= 1, got {n}")
    rng = random.Random(seed)
    return prufer_decode(n, [rng.randrange(n) for _ in range(max(n - 2, 0))])


# -- small connected graphs ----------------------------------------------------


def _refined_classes(n: int, adj: list[int]) -> list[list[int]]:
    """Colour refinement; returns vertex classes ordered by an invariant colour rank."""
    colors = [bin(adj[u]).count("1") for u in range(n)]
    while True:
        sigs = [
            (colors[u], tuple(sorted(colors[v] for v in range(n) if adj[u] >> v & 1)))
            for u in range(n)
        ]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        refined = [ranks[s] for s in sigs]
        if len(set(refined)) == len(set(colors)):
            colors = refined
            break
        colors = refined
    classes: list[list[int]] = [[] for _ in range(max(colors) + 1)]
    for u, c in enumerate(colors):
        classes[c].append(u)
    return classes


def _encode(n: int, adj: list[int], order: tuple[int, ...]) -> int:
    bits = 0
    for i in range(n):
        row = adj[order[i]]
        for j in range(i + 1, n):
            bits = (bits << 1) | (row >> order[j] & 1)
    return bits


def canonical_graph_form(g: Graph) -> tuple[int, int]:
    """Minimum upper-triangle adjacency bitstring over colour-respecting orderings."""
    n = g.n
    adj = [sum(1 << v for v in g.adjacency[u]) for u in range(n)]
    classes = _refined_classes(n, adj)
    best = None
    for parts in product(*(permutations(c) for c in classes)):
        order = tuple(v for part in parts for v in part)
        bits = _encode(n, adj, order)
        if best is None or bits < best:
            best = bits
    return n, best


def _graph_from_mask(n: int, adj: list[int]) -> Graph:
    return graph_from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if adj[u] >> v & 1])


@lru_cache(maxsize=None)
def _connected_graphs(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (graph_from_edges(1, []),)
    found: dict[tuple[int, int], Graph] = {}
    # Every connected graph has a vertex whose removal leaves it connected.
    for base in _connected_graphs(n - 1):
        edges = base.edges()
        for mask in range(1, 1 << (n - 1)):
            extra = [(u, n - 1) for u in range(n - 1) if mask >> u & 1]
            g = graph_from_edges(n, edges + extra)
            key = canonical_graph_form(g)
            if key not in found:
                found[key] = g
    return tuple(found[k] for k in sorted(found))


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """Connected simple graphs of order ``n`` up to isomorphism, by canonical form."""
    if n < 2:
        raise InvalidParams(f"graph order must be >= 2, got {n}")
    if n > MAX_GRAPH_ORDER:
        raise TooLarge(f"graph enumeration budget is n <= {MAX_GRAPH_ORDER}, got {n}")
    return iter(_connected_graphs(n))
