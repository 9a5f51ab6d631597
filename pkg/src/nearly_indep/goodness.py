"""Good edges, good graphs and the join-built family of good graphs.

Two independent recognizers are provided.  ``is_good_definitional`` checks
every edge directly.  ``is_good_structural`` factors the graph along the
connected components of its complement (the finest join decomposition) and
recurses into the factors.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field

from .errors import DomainError
from .graph_core import (
    Graph,
    component_of,
    full_set,
    is_connected,
    join,
    members,
)

K1 = "K1"
EDGELESS = "edgeless"
JOIN = "join"


def is_good_edge(g: Graph, u: int, v: int) -> bool:
    if not g.has_edge(u, v):
        raise DomainError(f"({u}, {v}) is not an edge")
    return (g.adj[u] | g.adj[v] | (1 << u) | (1 << v)) == g.vertices


@dataclass(frozen=True)
class GoodnessReport:
    is_good: bool
    bad_edges: list[tuple[int, int]]
    connected: bool


def bad_edges(g: Graph) -> list[tuple[int, int]]:
    full = g.vertices
    adj = g.adj
    return [
        (u, v)
        for u, v in g.edges()
        if (adj[u] | adj[v] | (1 << u) | (1 << v)) != full
    ]


def is_good_definitional(g: Graph) -> GoodnessReport:
    """Connected and every edge good.  K1 is good; the empty graph is not."""
    bad = bad_edges(g)
    connected = is_connected(g)
    return GoodnessReport(connected and not bad, bad, connected)


def is_good_fast(g: Graph) -> bool:
    """Boolean form of :func:`is_good_definitional` that stops at the first bad edge."""
    if not is_connected(g):
        return False
    full = g.vertices
    adj = g.adj
    for u in range(g.n):
        closed_u = adj[u] | (1 << u)
        for v in members(adj[u] >> (u + 1)):
            v += u + 1
            if (closed_u | adj[v] | (1 << v)) != full:
                return False
    return True


@dataclass(frozen=True)
class JoinDecomposition:
    """Join tree over original vertex labels.

    Leaves are ``K1`` or ``edgeless`` factors; ``join`` nodes join all of
    their children pairwise.
    """

    kind: str
    vertices: tuple[int, ...]
    children: tuple["JoinDecomposition", ...] = field(default=())

    def to_graph(self, n: int) -> Graph:
        """Rebuild the decomposed graph on ``n`` vertices with the recorded labels."""
        adj = [0] * n
        self._add_edges(adj)
        return Graph.from_adjacency(adj)

    def _add_edges(self, adj: list[int]) -> None:
        if self.kind != JOIN:
            return
        masks = []
        for child in self.children:
            child._add_edges(adj)
            mask = 0
            for v in child.vertices:
                mask |= 1 << v
            masks.append(mask)
        total = 0
        for mask in masks:
            total |= mask
        for mask in masks:
            for v in members(mask):
                adj[v] |= total & ~mask

    def describe(self) -> str:
        if self.kind == K1:
            return "K1"
        if self.kind == EDGELESS:
            return f"empty({len(self.vertices)})"
        return "join(" + ",".join(c.describe() for c in self.children) + ")"

    def to_dict(self) -> dict:
        doc: dict = {"kind": self.kind, "vertices": list(self.vertices)}
        if self.children:
            doc["children"] = [c.to_dict() for c in self.children]
        return doc


def _co_components(adj: tuple[int, ...], within: int) -> list[int]:
    """Connected components of the complement restricted to ``within``."""
    parts = []
    rest = within
    while rest:
        start = rest & -rest
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            while frontier:
                low = frontier & -frontier
                frontier ^= low
                nxt |= within & ~adj[low.bit_length() - 1]
            nxt &= ~seen
            seen |= nxt
            frontier = nxt
        parts.append(seen)
        rest &= ~seen
    return parts


def _decompose(adj: tuple[int, ...], within: int) -> JoinDecomposition | None:
    if within & (within - 1) == 0:
        return JoinDecomposition(K1, tuple(members(within)))
    factors = _co_components(adj, within)
    if len(factors) == 1:
        return None
    children = []
    for part in factors:
        has_edge = any(adj[v] & part for v in members(part))
        if not has_edge:
            kind = K1 if part & (part - 1) == 0 else EDGELESS
            children.append(JoinDecomposition(kind, tuple(members(part))))
            continue
        sub = _decompose(adj, part)
        if sub is None:
            return None
        children.append(sub)
    return JoinDecomposition(JOIN, tuple(members(within)), tuple(children))


def is_good_structural(g: Graph) -> tuple[bool, JoinDecomposition | None]:
    if g.n == 0:
        return False, None
    tree = _decompose(g.adj, full_set(g.n))
    return tree is not None, tree


# Recipes -------------------------------------------------------------------

@dataclass(frozen=True)
class Recipe:
    """Construction recipe: ``K1``, ``edgeless(l)``, ``bip(r,s)`` or ``join(a,b)``."""

    kind: str
    params: tuple[int, ...] = ()
    parts: tuple["Recipe", ...] = ()

    def __str__(self) -> str:
        if self.kind == "k1":
            return "k1"
        if self.kind in ("empty", "bip"):
            return f"{self.kind}({','.join(map(str, self.params))})"
        return f"join({self.parts[0]},{self.parts[1]})"

    @property
    def order(self) -> int:
        if self.kind == "k1":
            return 1
        if self.kind in ("empty", "bip"):
            return sum(self.params)
        return self.parts[0].order + self.parts[1].order


def k1() -> Recipe:
    return Recipe("k1")


def edgeless(ell: int) -> Recipe:
    return Recipe("empty", (ell,))


def bipartite(r: int, s: int) -> Recipe:
    return Recipe("bip", (r, s))


def join_recipe(left: Recipe, right: Recipe) -> Recipe:
    return Recipe("join", (), (left, right))


def _build(recipe: Recipe, top: bool) -> Graph:
    kind = recipe.kind
    if kind == "k1":
        return Graph.empty(1)
    if kind == "empty":
        (ell,) = recipe.params
        if ell < 1:
            raise DomainError(f"edgeless factor needs l >= 1, got {ell}")
        if top and ell > 1:
            raise DomainError(f"empty({ell}) is not good on its own; it must be joined")
        return Graph.empty(ell)
    if kind == "bip":
        r, s = recipe.params
        if r < 1 or s < 1:
            raise DomainError(f"bip(r,s) needs r, s >= 1, got ({r}, {s})")
        return join(Graph.empty(r), Graph.empty(s))
    if kind == "join":
        if len(recipe.parts) != 2:
            raise DomainError("join takes exactly two operands")
        left, right = recipe.parts
        return join(_build(left, False), _build(right, False))
    raise DomainError(f"unknown recipe node {kind!r}")


def build_h_member(recipe: Recipe) -> Graph:
    """Build the good graph described by ``recipe``.

    ``empty(l)`` with ``l >= 2`` is only accepted as an operand of a join,
    since an edgeless graph on two or more vertices is not good.
    """
    return _build(recipe, True)


_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<num>\d+)|(?P<sym>[(),]))")
_NAMES = {"k1": "k1", "empty": "empty", "edgeless": "empty", "bip": "bip", "bipartite": "bip", "join": "join"}


def parse_recipe(text: str) -> Recipe:
    """Parse expressions such as ``join(bip(2,3),empty(2))``."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt or mt.end() == pos:
            raise DomainError(f"unexpected character at position {pos} in recipe {text!r}")
        tokens.append((mt.lastgroup, mt.group(mt.lastgroup), pos))
        pos = mt.end()
    tokens.append(("end", "", len(text)))
    i = 0

    def expect(sym: str) -> None:
        nonlocal i
        kind, val, at = tokens[i]
        if kind != "sym" or val != sym:
            raise DomainError(f"expected {sym!r} at position {at} in recipe {text!r}")
        i += 1

    def number() -> int:
        nonlocal i
        kind, val, at = tokens[i]
        if kind != "num":
            raise DomainError(f"expected a number at position {at} in recipe {text!r}")
        i += 1
        return int(val)

    def node() -> Recipe:
        nonlocal i
        kind, val, at = tokens[i]
        if kind != "name" or val.lower() not in _NAMES:
            raise DomainError(f"expected k1, empty, bip or join at position {at} in recipe {text!r}")
        name = _NAMES[val.lower()]
        i += 1
        if name == "k1":
            return k1()
        expect("(")
        if name == "empty":
            rec = edgeless(number())
        elif name == "bip":
            r = number()
            expect(",")
            rec = bipartite(r, number())
        else:
            left = node()
            expect(",")
            rec = join_recipe(left, node())
        expect(")")
        return rec

    rec = node()
    if tokens[i][0] != "end":
        raise DomainError(f"trailing input at position {tokens[i][2]} in recipe {text!r}")
    return rec


def sample_h_recipe(budget: int, seed: int | random.Random) -> Recipe:
    """Random recipe of order at most ``budget``; deterministic for an integer seed."""
    if budget < 1:
        raise DomainError(f"order budget must be >= 1, got {budget}")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    return _sample(budget, rng)


def _sample(budget: int, rng: random.Random) -> Recipe:
    if budget == 1:
        return k1()
    choice = rng.random()
    if choice < 0.15:
        return k1()
    if choice < 0.45:
        total = rng.randint(2, budget)
        r = rng.randint(1, total - 1)
        return bipartite(r, total - r)
    if choice < 0.75 or budget < 3:
        left_budget = rng.randint(1, budget - 1)
        left = _sample(left_budget, rng)
        ell = rng.randint(1, budget - left.order)
        return join_recipe(left, edgeless(ell)) if rng.random() < 0.5 else join_recipe(edgeless(ell), left)
    left_budget = rng.randint(1, budget - 1)
    left = _sample(left_budget, rng)
    right = _sample(budget - left.order, rng)
    return join_recipe(left, right)


def sample_h_member(budget: int, seed: int | random.Random) -> Graph:
    return build_h_member(sample_h_recipe(budget, seed))
