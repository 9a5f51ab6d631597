"""Immutable simple graphs on dense vertex labels with bitset adjacency.

Vertex sets are plain Python ``int`` bitmasks: bit ``i`` set means vertex ``i``
is a member.  Python integers are arbitrary precision, so the same code path
serves graphs that fit in one machine word and larger solver inputs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import CapacityError, DomainError

# Largest order the graph6 header can express; every Graph stays emittable.
MAX_ORDER = 258047

VertexSet = int


def vertex_set(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        if v < 0:
            raise DomainError(f"negative vertex index {v}")
        mask |= 1 << v
    return mask


def members(s: VertexSet) -> list[int]:
    """Vertices of ``s`` in ascending order."""
    out = []
    while s:
        low = s & -s
        out.append(low.bit_length() - 1)
        s ^= low
    return out


def popcount(s: VertexSet) -> int:
    return s.bit_count()


def full_set(n: int) -> VertexSet:
    return (1 << n) - 1


@dataclass(frozen=True, slots=True)
class Graph:
    """Simple undirected graph; ``adj[i]`` is the open neighbourhood of ``i``.

    Use :meth:`from_edges` or :meth:`from_adjacency` to build one; both
    validate symmetry and reject loops.
    """

    n: int
    adj: tuple[int, ...]
    m: int = field(compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        _check_order(n)
        adj = [0] * n
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise DomainError(f"loop at vertex {u}")
            if adj[u] >> v & 1:
                raise DomainError(f"duplicate edge ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            m += 1
        return cls(n, tuple(adj), m)

    @classmethod
    def from_adjacency(cls, adj: Iterable[int]) -> "Graph":
        rows = tuple(adj)
        n = len(rows)
        _check_order(n)
        limit = full_set(n)
        total = 0
        for i, row in enumerate(rows):
            if row < 0 or row & ~limit:
                raise DomainError(f"row {i} has bits outside 0..{n - 1}")
            if row >> i & 1:
                raise DomainError(f"loop at vertex {i}")
            for j in members(row):
                if not rows[j] >> i & 1:
                    raise DomainError(f"asymmetric adjacency between {i} and {j}")
            total += row.bit_count()
        return cls(n, rows, total // 2)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        _check_order(n)
        return cls(n, (0,) * n, 0)

    @property
    def vertices(self) -> VertexSet:
        return full_set(self.n)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, row in enumerate(self.adj):
            higher = row >> (u + 1)
            v = u + 1
            while higher:
                if higher & 1:
                    yield u, v
                higher >>= 1
                v += 1

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


def _check_order(n: int) -> None:
    if n < 0:
        raise DomainError(f"negative order {n}")
    if n > MAX_ORDER:
        raise CapacityError(f"order {n} exceeds the supported maximum {MAX_ORDER}")


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise DomainError(f"vertex {v} out of range for n={g.n}")


def _check_subset(g: Graph, s: VertexSet) -> None:
    if s < 0 or s >> g.n:
        raise DomainError(f"vertex set has members outside 0..{g.n - 1}")


def open_neighborhood(g: Graph, v: int) -> VertexSet:
    _check_vertex(g, v)
    return g.adj[v]


def closed_neighborhood(g: Graph, v: int) -> VertexSet:
    _check_vertex(g, v)
    return g.adj[v] | (1 << v)


def induced_edge_count(g: Graph, s: VertexSet) -> int:
    _check_subset(g, s)
    adj = g.adj
    total = 0
    rest = s
    while rest:
        low = rest & -rest
        total += (adj[low.bit_length() - 1] & s).bit_count()
        rest ^= low
    return total // 2


def induced_subgraph(g: Graph, keep: VertexSet) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced on ``keep``, relabelled densely in ascending order.

    Returns the graph together with the old-to-new index map.
    """
    _check_subset(g, keep)
    old = members(keep)
    index = {v: i for i, v in enumerate(old)}
    rows = []
    for v in old:
        row = 0
        for w in members(g.adj[v] & keep):
            row |= 1 << index[w]
        rows.append(row)
    return Graph(len(old), tuple(rows), induced_edge_count(g, keep)), index


def delete_vertices(g: Graph, s: VertexSet) -> tuple[Graph, dict[int, int]]:
    """``G - S``: remove ``s`` and incident edges, relabelling the survivors."""
    _check_subset(g, s)
    return induced_subgraph(g, g.vertices & ~s)


def complement(g: Graph) -> Graph:
    full = g.vertices
    rows = tuple(full & ~row & ~(1 << i) for i, row in enumerate(g.adj))
    return Graph(g.n, rows, g.n * (g.n - 1) // 2 - g.m)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the parts; ``g1`` keeps indices 0..n1-1."""
    n1, n2 = g1.n, g2.n
    if n1 + n2 > MAX_ORDER:
        raise CapacityError(f"join order {n1 + n2} exceeds the supported maximum {MAX_ORDER}")
    low_part = full_set(n1)
    high_part = full_set(n2) << n1
    rows = [row | high_part for row in g1.adj]
    rows.extend((row << n1) | low_part for row in g2.adj)
    return Graph(n1 + n2, tuple(rows), g1.m + g2.m + n1 * n2)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    n1 = g1.n
    if n1 + g2.n > MAX_ORDER:
        raise CapacityError(f"union order {n1 + g2.n} exceeds the supported maximum {MAX_ORDER}")
    rows = list(g1.adj)
    rows.extend(row << n1 for row in g2.adj)
    return Graph(n1 + g2.n, tuple(rows), g1.m + g2.m)


def component_of(adj: tuple[int, ...], start: int, within: VertexSet) -> VertexSet:
    """Vertices reachable from ``start`` using only vertices of ``within``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= adj[low.bit_length() - 1]
            frontier ^= low
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def connected_components(g: Graph) -> list[VertexSet]:
    """Components ordered by their smallest vertex; empty list when n = 0."""
    parts = []
    rest = g.vertices
    while rest:
        start = (rest & -rest).bit_length() - 1
        comp = component_of(g.adj, start, rest)
        parts.append(comp)
        rest &= ~comp
    return parts


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    return component_of(g.adj, 0, g.vertices) == g.vertices


def pair_index(i: int, j: int) -> int:
    """Position of the pair ``{i, j}`` in column order (0,1),(0,2),(1,2),(0,3),..."""
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


# Orders up to this use per-byte lookup tables in from_triangle_mask.
_TABLE_ORDER = 16


@lru_cache(maxsize=None)
def _byte_tables(n: int) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """For each byte of a triangle mask, the adjacency it contributes.

    Rows are packed into one integer in lanes of ``n`` bits (row ``i`` at
    bit offset ``n * i``).
    """
    cells = n * (n - 1) // 2
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    tables = []
    for start in range(0, cells, 8):
        single = []
        for t in range(start, min(start + 8, cells)):
            i, j = pairs[t]
            single.append((1 << (n * i + j)) | (1 << (n * j + i)))
        table = [0] * 256
        for b in range(1, 256):
            low = b & -b
            table[b] = table[b ^ low] | (single[low.bit_length() - 1] if low.bit_length() <= len(single) else 0)
        tables.append(tuple(table))
    return tuple(tables), tuple(n * i for i in range(n))


def from_triangle_mask(n: int, mask: int) -> Graph:
    """Graph whose edge ``{i, j}`` is present iff bit ``pair_index(i, j)`` of ``mask`` is set."""
    _check_order(n)
    if mask < 0 or mask >> (n * (n - 1) // 2):
        raise DomainError(f"triangle mask has bits beyond C({n},2)")
    m = mask.bit_count()
    if n <= _TABLE_ORDER:
        tables, shifts = _byte_tables(n)
        packed = 0
        for table in tables:
            packed |= table[mask & 255]
            mask >>= 8
        row = (1 << n) - 1
        return Graph(n, tuple([packed >> s & row for s in shifts]), m)
    # Column j of the triangle is exactly the part of adj[j] below j.
    adj = [0] * n
    base = 0
    for j in range(1, n):
        col = (mask >> base) & ((1 << j) - 1)
        base += j
        adj[j] = col
        bit = 1 << j
        while col:
            low = col & -col
            adj[low.bit_length() - 1] |= bit
            col ^= low
    return Graph(n, tuple(adj), m)


def triangle_mask(g: Graph) -> int:
    mask = 0
    base = 0
    adj = g.adj
    for j in range(1, g.n):
        mask |= (adj[j] & ((1 << j) - 1)) << base
        base += j
    return mask
