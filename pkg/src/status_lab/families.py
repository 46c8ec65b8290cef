"""Constructors for the named tree families and closed-form status bounds.

Vertex layouts are fixed so that edge lists are reproducible:

* path ``0-1-...-(n-1)``; cycle closes ``(n-1)-0``; star has center 0.
* ``A(n, m)``: center 0, star leaves ``1..n-m``, and leaf ``i`` (``1 <= i < m``)
  carries the extra pendant vertex ``n-m+i``.
* dumbbell / caterpillar: spine ``0..L-1`` first, pendant vertices appended
  in spine order.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import InvalidParams
from .graph import Graph, graph_from_edges


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


class Family(str, Enum):
    PATH = "path"
    CYCLE = "cycle"
    STAR = "star"
    A = "A"
    DUMBBELL = "dumbbell"
    CATERPILLAR = "caterpillar"


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    n: int
    params: tuple[int, ...] = ()

    def build(self) -> Graph:
        builder = {
            Family.PATH: make_path,
            Family.CYCLE: make_cycle,
            Family.STAR: make_star,
            Family.A: make_A,
            Family.DUMBBELL: make_dumbbell,
            Family.CATERPILLAR: make_caterpillar,
        }[self.family]
        arity = {Family.A: 1, Family.DUMBBELL: 2, Family.CATERPILLAR: 2}.get(self.family, 0)
        if len(self.params) != arity:
            raise InvalidParams(f"{self.family.value} takes {arity} parameter(s), got {len(self.params)}")
        return builder(self.n, *self.params)


def make_path(n: int) -> Graph:
    if n < 1:
        raise InvalidParams(f"path needs n >= 1, got {n}")
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParams(f"cycle needs n >= 3, got {n}")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def make_star(n: int) -> Graph:
    if n < 1:
        raise InvalidParams(f"star needs n >= 1, got {n}")
    return graph_from_edges(n, [(0, i) for i in range(1, n)])


def make_A(n: int, m: int) -> Graph:
    """Star ``S_{n-m+1}`` with a pendant edge hung on ``m-1`` of its leaves."""
    if n < 2 or not 1 <= m <= n // 2:
        raise InvalidParams(f"A(n, m) needs n >= 2 and 1 <= m <= n//2, got n={n}, m={m}")
    leaves = n - m
    edges = [(0, i) for i in range(1, leaves + 1)]
    edges += [(i, leaves + i) for i in range(1, m)]
    return graph_from_edges(n, edges)


def make_dumbbell(n: int, p: int, q: int) -> Graph:
    """Path on ``n-p-q`` vertices with ``p`` leaves at one end and ``q`` at the other.

    ``p + q == n - 1`` degenerates to the star ``S_n``.
    """
    if n < 1 or not p >= q >= 0 or p + q > n - 1:
        raise InvalidParams(f"dumbbell needs p >= q >= 0 and p + q <= n - 1, got n={n}, p={p}, q={q}")
    spine = n - p - q
    edges = [(i, i + 1) for i in range(spine - 1)]
    nxt = spine
    for _ in range(p):
        edges.append((0, nxt))
        nxt += 1
    for _ in range(q):
        edges.append((spine - 1, nxt))
        nxt += 1
    return graph_from_edges(n, edges)


def make_caterpillar(n: int, p: int, q: int) -> Graph:
    """Spine on ``n-p-q`` vertices; one leaf on each of the first ``p`` and last ``q`` spine vertices."""
    if not p >= q >= 1 or 2 * (p + q) > n:
        raise InvalidParams(f"caterpillar needs p >= q >= 1 and 2(p+q) <= n, got n={n}, p={p}, q={q}")
    spine = n - p - q
    edges = [(i, i + 1) for i in range(spine - 1)]
    hosts = list(range(p)) + list(range(spine - q, spine))
    for k, host in enumerate(hosts):
        edges.append((host, spine + k))
    return graph_from_edges(n, edges)


# -- extremal parameterisations ----------------------------------------------


def matching_upper_params(n: int, m: int) -> tuple[int, int]:
    half = n + 1
    return _ceil_div(half, 2) - m, half // 2 - m


def domination_small_params(n: int, gamma: int) -> tuple[int, int]:
    r = n - 3 * gamma + 2
    return _ceil_div(r, 2), r // 2


def domination_large_params(n: int, gamma: int) -> tuple[int, int]:
    r = 3 * gamma - n
    return _ceil_div(r, 2), r // 2


def extremal_matching_upper(n: int, m: int) -> Graph:
    return make_dumbbell(n, *matching_upper_params(n, m))


def extremal_domination_small(n: int, gamma: int) -> Graph:
    return make_dumbbell(n, *domination_small_params(n, gamma))


def extremal_domination_large(n: int, gamma: int) -> Graph:
    return make_caterpillar(n, *domination_large_params(n, gamma))


# -- bounds ------------------------------------------------------------------


def _check_class(n: int, k: int, what: str) -> None:
    if n < 2 or not 1 <= k <= n // 2:
        raise InvalidParams(f"{what} needs 1 <= {what} <= n//2, got n={n}, {what}={k}")


def bound_matching_lower(n: int, m: int) -> int:
    _check_class(n, m, "m")
    return n + m - 2


def bound_matching_upper(n: int, m: int) -> int:
    _check_class(n, m, "m")
    if n < 4:
        raise InvalidParams(f"matching upper bound needs n >= 4, got {n}")
    return m * (n - m)


def bound_domination_lower(n: int, gamma: int) -> int:
    _check_class(n, gamma, "gamma")
    return n + gamma - 2


def bound_domination_upper_small(n: int, gamma: int) -> int:
    if not 1 <= gamma < _ceil_div(n, 3):
        raise InvalidParams(f"small-gamma bound needs 1 <= gamma < ceil(n/3), got n={n}, gamma={gamma}")
    if gamma % 2:
        k = (3 * gamma - 1) // 2
        return k * (n - k)
    k = 3 * gamma // 2
    return k * (n + 1 - k) - _ceil_div(n, 2)


def bound_domination_upper_large(n: int, gamma: int) -> int:
    if not _ceil_div(n, 3) < gamma <= n // 2:
        raise InvalidParams(f"large-gamma bound needs ceil(n/3) < gamma <= n//2, got n={n}, gamma={gamma}")
    return 3 * n * gamma + 3 * gamma - n - _ceil_div(n * n + 18 * gamma * gamma, 4)


def bound_order(n: int) -> int:
    if n < 3:
        raise InvalidParams(f"order bound needs n >= 3, got {n}")
    return n * n // 4
