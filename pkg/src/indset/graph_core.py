"""Simple undirected graphs on vertices 1..n, constructors, products and text I/O.

Vertices are always labeled ``1..n``.  Internally a graph also exposes
0-based bitmask adjacency (bit ``v - 1`` stands for vertex ``v``), which the
counting and enumeration code uses.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .errors import GraphParseError, InvalidParameter, NotBipartiteError


def _edge_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """An immutable simple graph.

    ``edges`` holds unordered pairs stored as ``(min, max)`` tuples.
    """

    n: int
    edges: frozenset

    def __post_init__(self):
        if self.n < 0:
            raise InvalidParameter(f"vertex count must be >= 0, got {self.n}")
        for u, v in self.edges:
            if u == v:
                raise InvalidParameter(f"self-loop at vertex {u}")
            if not (1 <= u < v <= self.n):
                raise InvalidParameter(f"edge ({u}, {v}) out of range for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
        keyed = set()
        for u, v in edges:
            if u == v:
                raise InvalidParameter(f"self-loop at vertex {u}")
            keyed.add(_edge_key(u, v))
        return cls(n, frozenset(keyed))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def _neighbors(self) -> tuple[frozenset, ...]:
        adj: list[set] = [set() for _ in range(self.n + 1)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(s) for s in adj)

    @cached_property
    def adj_masks(self) -> tuple[int, ...]:
        """0-based bitmask adjacency: ``adj_masks[v-1]`` has bit ``u-1`` set iff u ~ v."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u - 1] |= 1 << (v - 1)
            masks[v - 1] |= 1 << (u - 1)
        return tuple(masks)

    def neighbors(self, v: int) -> frozenset:
        return self._neighbors[v]

    def degree(self, v: int) -> int:
        return len(self._neighbors[v])

    def degrees(self) -> dict[int, int]:
        return {v: self.degree(v) for v in self.vertices}

    def has_edge(self, u: int, v: int) -> bool:
        return _edge_key(u, v) in self.edges

    def isolated_vertices(self) -> list[int]:
        return [v for v in self.vertices if not self._neighbors[v]]

    def is_independent(self, subset: Iterable[int]) -> bool:
        s = set(subset)
        return all(not (self._neighbors[v] & s) for v in s)

    def induced_without(self, removed: Iterable[int]) -> Graph:
        """Delete ``removed`` and relabel survivors to 1..n' preserving order."""
        gone = set(removed)
        keep = [v for v in self.vertices if v not in gone]
        relabel = {v: i for i, v in enumerate(keep, start=1)}
        return Graph.from_edges(
            len(keep),
            ((relabel[u], relabel[v]) for u, v in self.edges if u in relabel and v in relabel),
        )

    def __repr__(self):
        return f"Graph(n={self.n}, edges={sorted(self.edges)})"


@dataclass(frozen=True)
class BipartiteView:
    """A bipartite graph together with a chosen left/right orientation.

    ``left_by_degree[d]`` is the set of left vertices of degree ``d``;
    ``right_by_degree[d]`` is the set of right vertices adjacent to at least one
    of them.  The former partition the left side, the latter may overlap.
    """

    graph: Graph
    left: frozenset
    right: frozenset

    def __post_init__(self):
        g = self.graph
        if self.left & self.right:
            raise InvalidParameter("left and right sides overlap")
        if self.left | self.right != frozenset(g.vertices):
            raise InvalidParameter("left and right sides do not cover the vertex set")
        for u, v in g.edges:
            if (u in self.left) == (v in self.left):
                raise NotBipartiteError(f"edge ({u}, {v}) does not cross the bipartition")

    @cached_property
    def left_degrees(self) -> tuple[int, ...]:
        return tuple(sorted({self.graph.degree(v) for v in self.left}))

    @cached_property
    def right_degrees(self) -> tuple[int, ...]:
        return tuple(sorted({self.graph.degree(v) for v in self.right}))

    @cached_property
    def left_by_degree(self) -> Mapping[int, frozenset]:
        g = self.graph
        return {d: frozenset(v for v in self.left if g.degree(v) == d) for d in self.left_degrees}

    @cached_property
    def right_by_degree(self) -> Mapping[int, frozenset]:
        g = self.graph
        out = {}
        for d, ld in self.left_by_degree.items():
            out[d] = frozenset(r for r in self.right if g.neighbors(r) & ld)
        return out

    def flip(self) -> BipartiteView:
        return BipartiteView(self.graph, self.right, self.left)

    def is_left_regular(self) -> bool:
        return len(self.left_degrees) <= 1


def flip(view: BipartiteView) -> BipartiteView:
    return view.flip()


def complete_graph(d: int) -> Graph:
    if d < 1:
        raise InvalidParameter(f"complete graph needs d >= 1, got {d}")
    return Graph.from_edges(d, ((u, v) for u in range(1, d + 1) for v in range(u + 1, d + 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with left side 1..a and right side a+1..a+b."""
    if a < 1 or b < 1:
        raise InvalidParameter(f"complete bipartite graph needs a, b >= 1, got ({a}, {b})")
    return Graph.from_edges(a + b, ((u, a + v) for u in range(1, a + 1) for v in range(1, b + 1)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((v, v + 1) for v in range(1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidParameter(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(v, v + 1) for v in range(1, n)] + [(n, 1)])


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, ())


def disjoint_union(gs: Iterable[Graph]) -> Graph:
    offset = 0
    edges = []
    for g in gs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph.from_edges(offset, edges)


def tensor_vertex(u: int, i: int, h_order: int) -> int:
    """Label of the pair (u, i) in a tensor product whose right factor has ``h_order`` vertices."""
    return (u - 1) * h_order + i


def tensor_product(g: Graph, h: Graph) -> Graph:
    """G x H: (u, i) ~ (v, j) iff u ~ v in G and i ~ j in H.

    The pair (u, i) gets label ``(u - 1) * |V(H)| + i``.
    """
    k = h.n
    edges = []
    for u, v in g.edges:
        for i, j in h.edges:
            edges.append((tensor_vertex(u, i, k), tensor_vertex(v, j, k)))
            edges.append((tensor_vertex(u, j, k), tensor_vertex(v, i, k)))
    return Graph.from_edges(g.n * k, edges)


def cover_vertex(v: int, side: int) -> int:
    """Label of (v, side) in the bipartite double cover; side 0 is K_2's vertex 1."""
    return tensor_vertex(v, side + 1, 2)


def cover_pair(label: int) -> tuple[int, int]:
    """Inverse of :func:`cover_vertex`."""
    return (label + 1) // 2, (label + 1) % 2


def bipartite_double_cover(g: Graph) -> tuple[Graph, BipartiteView]:
    cover = tensor_product(g, complete_graph(2))
    left = frozenset(cover_vertex(v, 0) for v in g.vertices)
    right = frozenset(cover_vertex(v, 1) for v in g.vertices)
    return cover, BipartiteView(cover, left, right)


def bipartition(g: Graph) -> BipartiteView | None:
    """2-color ``g``; returns None when an odd cycle exists.

    In every connected component the side holding the smallest label is the left side.
    """
    color: dict[int, int] = {}
    for start in g.vertices:
        if start in color:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w not in color:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    left = frozenset(v for v, c in color.items() if c == 0)
    return BipartiteView(g, left, frozenset(g.vertices) - left)


def view_from_sides(g: Graph, left: Iterable[int]) -> BipartiteView:
    left = frozenset(left)
    return BipartiteView(g, left, frozenset(g.vertices) - left)


def parse_graph(text: str) -> Graph:
    """Parse the ``p edge n m`` / ``e u v`` text format (``c`` lines are comments)."""
    n = m = None
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line == "c" or line.startswith("c "):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphParseError(lineno, "duplicate header")
            if len(parts) != 4 or parts[1] != "edge":
                raise GraphParseError(lineno, f"malformed header {line!r}")
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphParseError(lineno, f"malformed header {line!r}") from None
            if n < 0 or m < 0:
                raise GraphParseError(lineno, "negative vertex or edge count")
        elif parts[0] == "e":
            if len(parts) != 3:
                raise GraphParseError(lineno, f"malformed edge line {line!r}")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphParseError(lineno, f"malformed edge line {line!r}") from None
            if u == v:
                raise GraphParseError(lineno, f"self-loop at vertex {u}")
            if n is None:
                raise GraphParseError(lineno, "edge before header")
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphParseError(lineno, f"vertex out of range 1..{n} in {line!r}")
            key = _edge_key(u, v)
            if key in edges:
                raise GraphParseError(lineno, f"duplicate edge {key}")
            edges.add(key)
        else:
            raise GraphParseError(lineno, f"unrecognized line {line!r}")
    if n is None:
        raise GraphParseError(0, "missing 'p edge' header")
    if len(edges) != m:
        raise GraphParseError(0, f"header declares {m} edges, found {len(edges)}")
    return Graph(n, frozenset(edges))


def serialize_graph(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"
