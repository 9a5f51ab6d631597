"""Exact alpha_k solvers.

``alpha0_exact`` is a branch-and-bound maximum independent set search,
``alpha1_exact`` reduces alpha_1 to one independent-set problem per edge, and
``alpha_k_oracle`` enumerates every vertex subset.  The oracle is deliberately
independent of the other two so it can be used to check them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, GuardError
from .graph_core import Graph, induced_edge_count, members

ORACLE_GUARD = 26

ORACLE = "oracle"
RECURSIVE = "recursive"
BRANCH_AND_BOUND = "branch_and_bound"


@dataclass(frozen=True)
class AlphaResult:
    """Value of alpha_k together with a certifying vertex set.

    ``witness`` is a vertex bitmask, or ``None`` when no set inducing exactly
    ``k`` edges exists (``value`` is then 0).
    """

    k: int
    value: int
    witness: int | None
    method: str

    @property
    def vertices(self) -> list[int] | None:
        return None if self.witness is None else members(self.witness)


def alpha_k_oracle(g: Graph, k: int, *, override: bool = False) -> AlphaResult:
    """Brute force over all 2**n subsets.

    Among the largest qualifying subsets the numerically smallest bitmask is
    returned as witness.
    """
    if k < 0:
        raise DomainError(f"edge budget must be non-negative, got {k}")
    n = g.n
    if n > ORACLE_GUARD and not override:
        raise GuardError(
            f"oracle refused: n={n} exceeds ORACLE_GUARD={ORACLE_GUARD} (pass override=True)",
            guard="ORACLE_GUARD",
        )
    idx = np.arange(1 << n, dtype=np.uint64)
    counts = np.zeros(1 << n, dtype=np.int32)
    for v in range(n):
        size = 1 << v
        lower = np.uint64(g.adj[v] & (size - 1))
        # Subsets whose top vertex is v: edges of S - v plus edges from v into S - v.
        counts[size:2 * size] = counts[:size] + np.bitwise_count(idx[:size] & lower)
    hits = np.flatnonzero(counts == k)
    if hits.size == 0:
        return AlphaResult(k, 0, None, ORACLE)
    sizes = np.bitwise_count(hits.astype(np.uint64))
    best = int(sizes.max())
    first = int(hits[int(np.argmax(sizes == best))])
    return AlphaResult(k, best, first, ORACLE)


def _clique_cover_exceeds(adj: tuple[int, ...], cand: int, limit: int) -> bool:
    """True iff a greedy clique cover of ``cand`` needs more than ``limit`` cliques."""
    count = 0
    while cand:
        count += 1
        if count > limit:
            return True
        low = cand & -cand
        cand ^= low
        common = adj[low.bit_length() - 1] & cand
        while common:
            w = common & -common
            cand ^= w
            common &= adj[w.bit_length() - 1]
    return False


def max_independent_set(adj: tuple[int, ...], cand: int, floor: int = -1) -> int | None:
    """Largest independent subset of ``cand``, provided it has more than ``floor`` vertices.

    Returns the set as a bitmask, or ``None`` when no independent subset of
    ``cand`` is larger than ``floor``.
    """
    best_size = floor
    best_set = None

    def search(cand: int, chosen: int, size: int) -> None:
        nonlocal best_size, best_set
        while True:
            # Vertices of degree <= 1 inside cand belong to some maximum set.
            top_deg = -1
            pivot = 0
            rest = cand
            forced = False
            while rest:
                low = rest & -rest
                rest ^= low
                if not cand & low:
                    continue
                nb = adj[low.bit_length() - 1] & cand
                if nb & (nb - 1) == 0:
                    chosen |= low
                    size += 1
                    cand &= ~(low | nb)
                    rest &= cand
                    forced = True
                elif not forced:
                    d = nb.bit_count()
                    if d > top_deg:
                        top_deg = d
                        pivot = low
            if not forced or not cand:
                break
        if not cand:
            if size > best_size:
                best_size = size
                best_set = chosen
            return
        slack = best_size - size
        if cand.bit_count() <= slack or not _clique_cover_exceeds(adj, cand, slack):
            return
        v = pivot.bit_length() - 1
        search(cand & ~(adj[v] | pivot), chosen | pivot, size + 1)
        search(cand & ~pivot, chosen, size)

    search(cand, 0, 0)
    return best_set


def alpha0_exact(g: Graph) -> AlphaResult:
    witness = max_independent_set(g.adj, g.vertices)
    assert witness is not None
    return AlphaResult(0, witness.bit_count(), witness, BRANCH_AND_BOUND)


def alpha1_exact(g: Graph) -> AlphaResult:
    """alpha_1 as the best ``2 + alpha_0(G - N[u] - N[v])`` over edges ``uv``.

    Edges are visited in lexicographic order and only strict improvements
    replace the witness, so the first optimal edge wins.  The search stops
    early once the value reaches ``alpha_0(G) + 1``, which no 1-nearly set
    can exceed.
    """
    if g.m == 0:
        return AlphaResult(1, 0, None, RECURSIVE)
    adj = g.adj
    full = g.vertices
    cap = g.n
    if g.n > 16:
        cap = min(cap, alpha0_exact(g).value + 1)
    best_val = 1
    best_set = 0
    for u in range(g.n):
        closed_u = adj[u] | (1 << u)
        higher = adj[u] >> (u + 1)
        v = u + 1
        while higher:
            if higher & 1:
                rest = full & ~(closed_u | adj[v] | (1 << v))
                if 2 + rest.bit_count() > best_val:
                    found = max_independent_set(adj, rest, best_val - 2)
                    if found is not None:
                        best_val = 2 + found.bit_count()
                        best_set = found | (1 << u) | (1 << v)
                        if best_val >= cap:
                            return AlphaResult(1, best_val, best_set, RECURSIVE)
            higher >>= 1
            v += 1
    return AlphaResult(1, best_val, best_set, RECURSIVE)


def alpha_k(g: Graph, k: int, *, override: bool = False) -> AlphaResult:
    """Dispatch to the fastest exact method available for ``k``."""
    if k == 0:
        return alpha0_exact(g)
    if k == 1:
        return alpha1_exact(g)
    return alpha_k_oracle(g, k, override=override)


def validate_witness(g: Graph, r: AlphaResult) -> bool:
    if r.witness is None:
        raise DomainError("result carries no witness to validate")
    if r.witness < 0 or r.witness >> g.n:
        raise DomainError(f"witness has vertices outside 0..{g.n - 1}")
    return r.witness.bit_count() == r.value and induced_edge_count(g, r.witness) == r.k
