"""Fixed-size clique existence search over bitset neighbourhoods.

Candidates are explored in ascending flat-id order, so the witness returned
is the lexicographically least clique within the candidate set.
"""

from __future__ import annotations

from .errors import ContractError, ParameterDomainError
from .graph import Edge, Subgraph


def common_neighborhood(sub: Subgraph, u: int, v: int) -> int:
    if u == v:
        raise ContractError("common neighbourhood needs two distinct vertices")
    return sub.adj[u] & sub.adj[v]


def _extend(adj: list[int], part_masks: tuple[int, ...], cand: int, need: int,
            chosen: list[int]) -> list[int] | None:
    if need == 0:
        return chosen
    if need == 1:
        if cand:
            return chosen + [(cand & -cand).bit_length() - 1]
        return None
    while cand:
        # a clique takes at most one vertex per part
        if cand.bit_count() < need or sum(1 for pm in part_masks if cand & pm) < need:
            return None
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        found = _extend(adj, part_masks, cand & adj[v], need - 1, chosen + [v])
        if found is not None:
            return found
    return None


def contains_clique(sub: Subgraph, candidates: int, s: int) -> list[int] | None:
    """Least ``s``-clique inside ``candidates`` (a vertex bitset), or None."""
    if s < 0:
        raise ParameterDomainError(f"clique size must be >= 0, got {s}")
    return _extend(sub.adj, sub.host.part_masks, candidates & sub.host.full_mask, s, [])


def completes_kt(sub: Subgraph, e: Edge, t: int) -> list[int] | None:
    """A (t-2)-clique in the common neighbourhood of ``e``'s ends, if adding
    ``e`` would create a K_t."""
    if t < 3:
        raise ParameterDomainError(f"clique order t must be >= 3, got {t}")
    u, v = e
    if sub.has_edge(u, v):
        raise ContractError(f"edge {e} is already present")
    return contains_clique(sub, sub.adj[u] & sub.adj[v], t - 2)


def is_clique(sub: Subgraph, vertices: list[int]) -> bool:
    """Direct pairwise probe, independent of the search."""
    for i, a in enumerate(vertices):
        for b in vertices[i + 1:]:
            if a == b or not sub.adj[a] >> b & 1:
                return False
    return True
