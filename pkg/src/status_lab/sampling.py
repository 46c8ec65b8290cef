"""Random valid inputs for the transforms, used by fuzz tests and scripts."""

from __future__ import annotations

import random

from .enumeration import random_tree
from .graph import Graph, branch_sizes, graph_from_edges
from .transforms import CutEdge, cut_edges


def random_unicyclic(n: int, rng: random.Random) -> Graph:
    """Random tree plus one random extra edge (requires ``n >= 3``)."""
    t = random_tree(n, rng.randrange(2**32))
    while True:
        u, v = rng.sample(range(n), 2)
        if not t.has_edge(u, v):
            return graph_from_edges(n, t.edges() + [(u, v)])


def random_contraction(rng: random.Random, n_max: int = 64) -> tuple[Graph, CutEdge]:
    """A tree or unicyclic graph together with one of its non-pendant cut edges."""
    while True:
        n = rng.randint(4, n_max)
        g = random_tree(n, rng.randrange(2**32)) if rng.random() < 0.5 else random_unicyclic(n, rng)
        candidates = [e for e in cut_edges(g) if not e.pendant]
        if not candidates:
            continue
        e = rng.choice(candidates)
        if rng.random() < 0.5:
            e = CutEdge(e.v, e.u, e.pendant)
        return g, e


def random_branch_move(rng: random.Random, n_max: int = 64) -> tuple[Graph, int, int, list[int]]:
    """A tree and a valid ``(u, w, moved)`` selection for :func:`move_branches`."""
    while True:
        n = rng.randint(4, n_max)
        t = random_tree(n, rng.randrange(2**32))
        hubs = [u for u in range(n) if t.degree(u) >= 3]
        if not hubs:
            continue
        u = rng.choice(hubs)
        sizes = branch_sizes(t, u)
        u2 = rng.choice(t.neighbors(u))
        bigger = [x for x in t.neighbors(u) if x != u2 and sizes[x] >= sizes[u2]]
        if not bigger:
            continue
        u1 = rng.choice(bigger)
        rest = [x for x in t.neighbors(u) if x not in (u1, u2)]
        moved = rng.sample(rest, rng.randint(1, len(rest)))
        parent = {u: -1, u2: u}
        stack = [u2]
        branch = [u2]
        while stack:
            x = stack.pop()
            for y in t.neighbors(x):
                if y not in parent:
                    parent[y] = x
                    branch.append(y)
                    stack.append(y)
        return t, u, rng.choice(branch), moved
