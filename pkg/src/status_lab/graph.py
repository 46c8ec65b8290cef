"""Immutable connected graphs, distances, and status/median/centroid invariants."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    Disconnected,
    DuplicateEdge,
    NotATree,
    SelfLoop,
    StatusLabError,
    VertexOutOfRange,
)

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple connected undirected graph on vertices ``0..n-1``.

    Build instances with :func:`graph_from_edges`; the constructor itself
    does not validate.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    edge_count: int

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self.adjacency[u]

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def edges(self) -> list[Edge]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    @property
    def is_tree(self) -> bool:
        return self.edge_count == self.n - 1

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class StatusProfile:
    statuses: tuple[int, ...]
    min_status: int
    median: tuple[int, ...]
    proximity: Fraction


@dataclass(frozen=True)
class BranchProfile:
    weights: tuple[int, ...]
    min_weight: int
    centroid: tuple[int, ...]


def graph_from_edges(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Validate an edge list and build a :class:`Graph`.

    Raises SelfLoop, DuplicateEdge, VertexOutOfRange or Disconnected.
    """
    if n < 1:
        raise StatusLabError(f"graph order must be >= 1, got {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    count = 0
    for pair in edges:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at {u}")
        if v in adj[u]:
            raise DuplicateEdge(f"duplicate edge ({u}, {v})")
        adj[u].add(v)
        adj[v].add(u)
        count += 1
    g = Graph(n, tuple(tuple(sorted(a)) for a in adj), count)
    if _reach_count(g, 0) != n:
        raise Disconnected(f"graph on {n} vertices with {count} edges is disconnected")
    return g


def _reach_count(g: Graph, src: int) -> int:
    seen = [False] * g.n
    seen[src] = True
    stack = [src]
    total = 1
    while stack:
        u = stack.pop()
        for v in g.adjacency[u]:
            if not seen[v]:
                seen[v] = True
                total += 1
                stack.append(v)
    return total


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Return the isomorphic copy of ``g`` in which vertex ``u`` becomes ``perm[u]``."""
    return graph_from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def _check_vertex(g: Graph, u: int) -> None:
    if not 0 <= u < g.n:
        raise VertexOutOfRange(f"vertex {u} outside 0..{g.n - 1}")


def _require_tree(g: Graph) -> None:
    if not g.is_tree:
        raise NotATree(f"expected a tree, got n={g.n} with {g.edge_count} edges")


def distances_from(g: Graph, u: int) -> list[int]:
    """BFS distances from ``u`` to every vertex."""
    _check_vertex(g, u)
    dist = [-1] * g.n
    dist[u] = 0
    queue = deque([u])
    adj = g.adjacency
    while queue:
        x = queue.popleft()
        dx = dist[x] + 1
        for y in adj[x]:
            if dist[y] < 0:
                dist[y] = dx
                queue.append(y)
    return dist


def bfs_statuses(g: Graph) -> list[int]:
    """Status of every vertex by one BFS per vertex (works for any graph)."""
    return [sum(distances_from(g, u)) for u in range(g.n)]


def _rooted_order(g: Graph, root: int = 0) -> tuple[list[int], list[int]]:
    """BFS order and parent array of a tree rooted at ``root`` (parent of root is -1)."""
    parent = [-1] * g.n
    order = [root]
    seen = [False] * g.n
    seen[root] = True
    for x in order:
        for y in g.adjacency[x]:
            if not seen[y]:
                seen[y] = True
                parent[y] = x
                order.append(y)
    return order, parent


def _subtree_sizes(order: list[int], parent: list[int]) -> list[int]:
    size = [1] * len(parent)
    for x in reversed(order):
        p = parent[x]
        if p >= 0:
            size[p] += size[x]
    return size


def tree_statuses(t: Graph) -> list[int]:
    """Statuses of a tree in linear time by rerooting.

    Moving the root across edge parent->child changes the status by
    ``n - 2 * size(child)``.
    """
    _require_tree(t)
    n = t.n
    order, parent = _rooted_order(t)
    size = _subtree_sizes(order, parent)
    depth = [0] * n
    for x in order[1:]:
        depth[x] = depth[parent[x]] + 1
    status = [0] * n
    status[0] = sum(depth)
    for x in order[1:]:
        status[x] = status[parent[x]] + n - 2 * size[x]
    return status


def _profile(statuses: Sequence[int]) -> StatusProfile:
    n = len(statuses)
    best = min(statuses)
    median = tuple(u for u, s in enumerate(statuses) if s == best)
    prox = Fraction(best, n - 1) if n > 1 else Fraction(0)
    return StatusProfile(tuple(statuses), best, median, prox)


def status_profile(g: Graph) -> StatusProfile:
    if g.is_tree:
        return _profile(tree_statuses(g))
    return _profile(bfs_statuses(g))


def min_status(g: Graph) -> int:
    return status_profile(g).min_status


def branch_profile(t: Graph) -> BranchProfile:
    """Branch weights (largest component of ``T - u``) and the centroid."""
    _require_tree(t)
    n = t.n
    order, parent = _rooted_order(t)
    size = _subtree_sizes(order, parent)
    weights = [n - size[u] for u in range(n)]
    for x in order[1:]:
        p = parent[x]
        if size[x] > weights[p]:
            weights[p] = size[x]
    best = min(weights)
    centroid = tuple(u for u, w in enumerate(weights) if w == best)
    return BranchProfile(tuple(weights), best, centroid)


def branch_sizes(t: Graph, u: int) -> dict[int, int]:
    """Map each neighbor ``x`` of ``u`` to the order of the branch of ``T - u`` containing ``x``."""
    _require_tree(t)
    _check_vertex(t, u)
    order, parent = _rooted_order(t, u)
    size = _subtree_sizes(order, parent)
    return {x: size[x] for x in t.adjacency[u]}


def diameter(g: Graph) -> int:
    if g.is_tree:
        dist = distances_from(g, 0)
        far = max(range(g.n), key=dist.__getitem__)
        return max(distances_from(g, far))
    return max(max(distances_from(g, u)) for u in range(g.n))


def is_median_vertex(t: Graph, x: int) -> bool:
    """Criterion ``w_T(x) <= n/2`` for membership of ``x`` in the median of a tree."""
    _require_tree(t)
    _check_vertex(t, x)
    return 2 * branch_profile(t).weights[x] <= t.n


# -- edge-list interchange -------------------------------------------------


def to_edgelist(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    """Parse the ``n e`` header + ``e`` lines of ``u v`` format."""
    tokens = text.split()
    if len(tokens) < 2:
        raise StatusLabError("edge list: missing 'n e' header")
    try:
        nums = [int(t) for t in tokens]
    except ValueError as exc:
        raise StatusLabError(f"edge list: non-integer token ({exc})") from None
    n, e = nums[0], nums[1]
    body = nums[2:]
    if len(body) != 2 * e:
        raise StatusLabError(f"edge list: header declares {e} edges, found {len(body) / 2:g}")
    return graph_from_edges(n, list(zip(body[0::2], body[1::2])))


def to_flat(g: Graph) -> str:
    """Single-line form ``n e u v u v ...``."""
    edges = g.edges()
    parts = [str(g.n), str(len(edges))]
    for u, v in edges:
        parts += [str(u), str(v)]
    return " ".join(parts)
