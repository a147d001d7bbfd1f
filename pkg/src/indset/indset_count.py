"""Exact enumeration and counting of independent sets."""
from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import CapacityError, InvalidParameter
from .graph_core import Graph

DEFAULT_ENUM_CAP = 24
# Upper bound on memoized components per count call.
MEMO_MAX_ENTRIES = 1 << 20


def enumeration_cap() -> int:
    """The default cap, overridable through the ``INDSET_ENUM_CAP`` environment variable."""
    raw = os.environ.get("INDSET_ENUM_CAP")
    return int(raw) if raw else DEFAULT_ENUM_CAP


@dataclass(frozen=True)
class IndSetFamily:
    """All independent sets of ``graph``.

    Each member is a bitmask: bit ``v - 1`` set means vertex ``v`` is in the set.
    Members are ordered lexicographically by characteristic vector (x_1, ..., x_n).
    """

    graph: Graph
    sets: tuple[int, ...]

    @property
    def cardinality(self) -> int:
        return len(self.sets)

    def vertex_sets(self) -> list[tuple[int, ...]]:
        return [mask_to_vertices(s) for s in self.sets]


def mask_to_vertices(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def vertices_to_mask(vertices) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << (v - 1)
    return mask


def enumerate_independent_sets(g: Graph, cap: int | None = None) -> IndSetFamily:
    cap = enumeration_cap() if cap is None else cap
    if g.n > cap:
        raise CapacityError(g.n, cap)
    adj = g.adj_masks
    n = g.n
    out: list[int] = []

    # Depth-first over vertices 1..n, "exclude" before "include" gives lex order.
    def walk(i: int, chosen: int, blocked: int) -> None:
        if i == n:
            out.append(chosen)
            return
        walk(i + 1, chosen, blocked)
        bit = 1 << i
        if not blocked & bit:
            walk(i + 1, chosen | bit, blocked | adj[i])

    walk(0, 0, 0)
    return IndSetFamily(g, tuple(out))


def _components(mask: int, adj: tuple[int, ...]):
    while mask:
        seed = mask & -mask
        comp = frontier = seed
        while frontier:
            reach = 0
            f = frontier
            while f:
                low = f & -f
                reach |= adj[low.bit_length() - 1]
                f ^= low
            frontier = reach & mask & ~comp
            comp |= frontier
        yield comp
        mask &= ~comp


class _Counter:
    def __init__(self, adj: tuple[int, ...]):
        self.adj = adj
        self.memo: dict[int, int] = {}

    def count(self, mask: int) -> int:
        total = 1
        for comp in _components(mask, self.adj):
            total *= self.count_connected(comp)
        return total

    def count_connected(self, mask: int) -> int:
        hit = self.memo.get(mask)
        if hit is not None:
            return hit
        adj = self.adj
        best, best_deg = -1, -1
        m = mask
        # Lowest label first, strict comparison keeps the smallest label on ties.
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            deg = (adj[v] & mask).bit_count()
            if deg > best_deg:
                best, best_deg = v, deg
        if best_deg == 0:
            result = 2
        elif best_deg == 1:
            result = 3
        else:
            rest = mask & ~(1 << best)
            result = self.count(rest) + self.count(rest & ~adj[best])
        if len(self.memo) < MEMO_MAX_ENTRIES:
            self.memo[mask] = result
        return result


def count_independent_sets(g: Graph) -> int:
    """|I(G)| by branching on a maximum-degree vertex with component factorization."""
    if g.n == 0:
        return 1
    return _Counter(g.adj_masks).count((1 << g.n) - 1)


def count_complete_bipartite(a: int, b: int) -> int:
    if a < 1 or b < 1:
        raise InvalidParameter(f"need a, b >= 1, got ({a}, {b})")
    return 2**a + 2**b - 1
