"""Graph surgeries that move the minimum status in a known direction.

Every function returns fresh graphs; callers compare minimum statuses.
Vertex indices are preserved, so a moved vertex keeps its number.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import (
    DegreeTooSmall,
    InvalidBranchSelection,
    InvalidParams,
    NotACutEdge,
    PendantEdge,
)
from .families import make_caterpillar, make_dumbbell
from .graph import Graph, _check_vertex, _require_tree, branch_sizes, graph_from_edges


@dataclass(frozen=True)
class CutEdge:
    u: int
    v: int
    pendant: bool


def _connected_without(g: Graph, u: int, v: int) -> bool:
    seen = {u}
    stack = [u]
    while stack:
        x = stack.pop()
        for y in g.adjacency[x]:
            if (x, y) in ((u, v), (v, u)) or y in seen:
                continue
            if y == v:
                return True
            seen.add(y)
            stack.append(y)
    return False


def cut_edge(g: Graph, u: int, v: int) -> CutEdge:
    """Validate ``uv`` as a cut edge of ``g``; raises NotACutEdge otherwise."""
    _check_vertex(g, u)
    _check_vertex(g, v)
    if not g.has_edge(u, v):
        raise NotACutEdge(f"({u}, {v}) is not an edge")
    if _connected_without(g, u, v):
        raise NotACutEdge(f"({u}, {v}) lies on a cycle")
    return CutEdge(u, v, g.degree(u) == 1 or g.degree(v) == 1)


def cut_edges(g: Graph) -> list[CutEdge]:
    out = []
    for u, v in g.edges():
        if g.is_tree or not _connected_without(g, u, v):
            out.append(CutEdge(u, v, g.degree(u) == 1 or g.degree(v) == 1))
    return out


def contract_to_pendant(g: Graph, e: CutEdge | tuple[int, int]) -> Graph:
    """Contract the non-pendant cut edge ``uv`` into ``u`` and re-hang ``v`` as a leaf of ``u``."""
    if isinstance(e, CutEdge):
        u, v = e.u, e.v
    else:
        u, v = e
    edge = cut_edge(g, u, v)
    if edge.pendant:
        raise PendantEdge(f"({u}, {v}) is a pendant edge")
    edges = []
    for a, b in g.edges():
        if {a, b} == {u, v}:
            continue
        if a == v:
            a = u
        elif b == v:
            b = u
        edges.append((a, b))
    edges.append((u, v))
    return graph_from_edges(g.n, edges)


def _branch_root(t: Graph, u: int, w: int) -> int:
    """Neighbor of ``u`` on the path from ``u`` to ``w``."""
    parent = {u: -1}
    stack = [u]
    while stack:
        x = stack.pop()
        for y in t.adjacency[x]:
            if y not in parent:
                parent[y] = x
                stack.append(y)
    while parent[w] != u:
        w = parent[w]
    return w


def move_branches(t: Graph, u: int, w: int, moved: Iterable[int]) -> Graph:
    """Detach the branches of ``u`` rooted at ``moved`` and re-attach their roots to ``w``.

    ``w`` lies in the branch at ``u`` rooted at some neighbor ``u2``; another
    unmoved neighbor ``u1`` must have a branch at least as large as ``u2``'s.
    """
    _require_tree(t)
    _check_vertex(t, u)
    _check_vertex(t, w)
    moved = sorted(set(moved))
    if t.degree(u) < 3:
        raise DegreeTooSmall(f"vertex {u} has degree {t.degree(u)} < 3")
    if w == u:
        raise InvalidBranchSelection("target vertex w must differ from u")
    if not moved:
        raise InvalidBranchSelection("no branches selected")
    nbrs = set(t.adjacency[u])
    if not set(moved) <= nbrs:
        raise InvalidBranchSelection(f"moved vertices {moved} are not all neighbors of {u}")
    u2 = _branch_root(t, u, w)
    if u2 in moved:
        raise InvalidBranchSelection(f"branch containing w={w} cannot itself be moved")
    sizes = branch_sizes(t, u)
    if not any(sizes[x] >= sizes[u2] for x in nbrs - set(moved) - {u2}):
        raise InvalidBranchSelection(
            f"no unmoved branch at {u} is at least as large as the branch of {u2} ({sizes[u2]})"
        )
    drop = {(u, x) for x in moved} | {(x, u) for x in moved}
    edges = [e for e in t.edges() if e not in drop]
    edges += [(w, x) for x in moved]
    return graph_from_edges(t.n, edges)


def dumbbell_shift(n: int, p: int, q: int) -> tuple[Graph, Graph]:
    """``(D_n(p, q), D_n(p+1, q-1))``; the second has strictly smaller minimum status."""
    if not (p >= q >= 2 and p + q + 2 <= n):
        raise InvalidParams(f"dumbbell shift needs p >= q >= 2 and p+q+2 <= n, got n={n}, p={p}, q={q}")
    return make_dumbbell(n, p, q), make_dumbbell(n, p + 1, q - 1)


def caterpillar_shift(n: int, p: int, q: int) -> tuple[Graph, Graph]:
    """``(C_n(p-1, q+1), C_n(p, q))``; the first has strictly larger minimum status."""
    if not (q >= 1 and p >= q + 2 and 2 * (p + q) < n):
        raise InvalidParams(
            f"caterpillar shift needs q >= 1, p >= q+2 and 2(p+q) < n, got n={n}, p={p}, q={q}"
        )
    return make_caterpillar(n, p - 1, q + 1), make_caterpillar(n, p, q)
