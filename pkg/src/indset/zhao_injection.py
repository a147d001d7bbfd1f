"""Injection of pairs of independent sets of G into independent sets of G x K_2.

A pair (S0, S1) is sent to S0 x {0} u S1 x {1}, after which every vertex of a
swap set T changes sides.  T picks one endpoint of each edge (i, j) with
i in S0 and j in S1, and is chosen as the first valid subset under the order
(size, then lexicographic on the sorted vertex list).  The same rule applied
to the image recovers T, so the map can be undone.

Images are sets of ``(vertex, side)`` pairs with side in {0, 1}.
"""
from __future__ import annotations

from collections import deque
from typing import Iterable

from .errors import InternalInvariantError, PreconditionError
from .graph_core import Graph, bipartite_double_cover
from .indset_count import count_independent_sets

Edge = tuple[int, int]


def _check_independent(g: Graph, s: frozenset, name: str) -> None:
    for v in s:
        if not 1 <= v <= g.n:
            raise PreconditionError(f"{name} contains vertex {v} outside 1..{g.n}")
    for v in sorted(s):
        bad = g.neighbors(v) & s
        if bad:
            raise PreconditionError(f"{name} is not independent: edge ({v}, {min(bad)})")


def conflict_edges(g: Graph, s0: Iterable[int], s1: Iterable[int]) -> frozenset[Edge]:
    """Edges {i, j} of G with i in s0 and j in s1, keyed as (min, max)."""
    s0, s1 = frozenset(s0), frozenset(s1)
    _check_independent(g, s0, "s0")
    _check_independent(g, s1, "s1")
    return _conflicts(g, s0, s1)


def _conflicts(g: Graph, s0: frozenset, s1: frozenset) -> frozenset[Edge]:
    out = set()
    for i in s0:
        for j in g.neighbors(i) & s1:
            out.add((i, j) if i < j else (j, i))
    return frozenset(out)


def canonical_T(g: Graph | None, conflicts: Iterable[Edge]) -> frozenset[int]:
    """First subset (by size, then lex) holding exactly one endpoint of every conflict edge.

    Per connected component of the conflict graph this is the smaller colour
    class, or on a tie the class holding the component's smallest vertex.
    ``g`` is accepted for symmetry with the other operations and is not needed.
    """
    adj: dict[int, set[int]] = {}
    for u, v in conflicts:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    colour: dict[int, int] = {}
    chosen: set[int] = set()
    for start in sorted(adj):
        if start in colour:
            continue
        colour[start] = 0
        classes: tuple[list[int], list[int]] = ([start], [])
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in colour:
                    colour[w] = 1 - colour[u]
                    classes[colour[w]].append(w)
                    queue.append(w)
                elif colour[w] == colour[u]:
                    raise InternalInvariantError(
                        f"conflict graph has an odd cycle through edge ({u}, {w})"
                    )
        # start is the component minimum and lies in class 0, which wins ties.
        a, b = classes
        chosen.update(a if len(a) <= len(b) else b)
    return frozenset(chosen)


def _apply_swap(s0: frozenset, s1: frozenset, t: frozenset) -> frozenset[tuple[int, int]]:
    side0 = (s0 - t) | (s1 & t)
    side1 = (s1 - t) | (s0 & t)
    return frozenset({(v, 0) for v in side0} | {(v, 1) for v in side1})


def zhao_map(g: Graph, s0: Iterable[int], s1: Iterable[int]) -> frozenset[tuple[int, int]]:
    s0, s1 = frozenset(s0), frozenset(s1)
    t = canonical_T(g, conflict_edges(g, s0, s1))
    return _apply_swap(s0, s1, t)


def is_cover_independent(g: Graph, image: Iterable[tuple[int, int]]) -> bool:
    image = frozenset(image)
    side1 = {v for v, side in image if side == 1}
    return all(not (g.neighbors(v) & side1) for v, side in image if side == 0)


def zhao_inverse(g: Graph, image: Iterable[tuple[int, int]]):
    """Recover (s0, s1) from an image, or return None if ``image`` is not in the map's range."""
    image = frozenset(image)
    for v, side in image:
        if side not in (0, 1) or not 1 <= v <= g.n:
            raise PreconditionError(f"({v}, {side}) is not a vertex of the double cover")
    if not is_cover_independent(g, image):
        raise PreconditionError("image is not independent in the double cover")
    x = frozenset(v for v, side in image if side == 0)
    y = frozenset(v for v, side in image if side == 1)
    same_side = set()
    for part in (x, y):
        for i in part:
            for j in g.neighbors(i) & part:
                same_side.add((i, j) if i < j else (j, i))
    try:
        t = canonical_T(g, same_side)
    except InternalInvariantError:
        return None
    s0, s1 = _unswap(x, y, t)
    if not (g.is_independent(s0) and g.is_independent(s1)):
        return None
    if zhao_map(g, s0, s1) != image:
        return None
    return s0, s1


def _unswap(x: frozenset, y: frozenset, t: frozenset) -> tuple[frozenset, frozenset]:
    # The swap is an involution on side memberships.
    return (x - t) | (y & t), (y - t) | (x & t)


def verify_zhao_inequality(g: Graph) -> tuple[int, int, bool]:
    """(|I(G)|^2, |I(G x K_2)|, passed)."""
    c = count_independent_sets(g)
    cover, _ = bipartite_double_cover(g)
    cc = count_independent_sets(cover)
    return c * c, cc, c * c <= cc
