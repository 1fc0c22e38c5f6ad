"""Greedy saturation, randomized upper bounds, and exact sat(K_t, K_k^n)
by exhaustive enumeration on tiny hosts."""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .cliques import contains_clique
from .errors import CapExceededError, ContractError, ParameterDomainError
from .graph import Edge, Host, Subgraph
from .verify import is_kt_free

DEFAULT_EDGE_CAP = 30


def greedy_saturate(sub: Subgraph, t: int, order: Sequence[Edge] | None = None) -> Subgraph:
    """Add edges of ``order`` that complete no K_t, repeating passes until a
    full pass adds nothing.  Returns a new subgraph."""
    free, witness = is_kt_free(sub, t)
    if not free:
        raise ContractError(f"input contains a K_{t}: {witness}")
    g = sub.copy()
    if order is None:
        order = g.missing_edges()
    adj = g.adj
    need = t - 2
    changed = True
    while changed:
        changed = False
        for u, v in order:
            if adj[u] >> v & 1:
                continue
            if contains_clique(g, adj[u] & adj[v], need) is None:
                g.add_edge(u, v)
                changed = True
    return g


def _trial(args: tuple[Host, int, int, int]) -> tuple[int, Subgraph]:
    host, t, seed, i = args
    order = list(host.host_edges())
    random.Random(f"{seed}/{i}").shuffle(order)
    g = greedy_saturate(Subgraph(host), t, order)
    return g.edge_count, g


def trial_order(host: Host, seed: int, i: int) -> list[Edge]:
    """The edge order used by trial ``i`` of :func:`random_greedy_upper_bound`."""
    order = list(host.host_edges())
    random.Random(f"{seed}/{i}").shuffle(order)
    return order


def random_greedy_upper_bound(
    host: Host, t: int, trials: int, seed: int, jobs: int = 1
) -> tuple[int, Subgraph, list[int]]:
    """Best of ``trials`` greedy saturations from the empty graph.

    Trial ``i`` shuffles the host edges with a generator seeded from
    ``(seed, i)``, so results do not depend on ``jobs``.
    """
    if trials < 1:
        raise ParameterDomainError(f"trials must be >= 1, got {trials}")
    tasks = [(host, t, seed, i) for i in range(trials)]
    if jobs > 1 and trials > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_trial, tasks))
    else:
        results = [_trial(a) for a in tasks]
    sizes = [s for s, _ in results]
    best = min(range(trials), key=lambda i: sizes[i])
    return sizes[best], results[best][1], sizes


@dataclass
class ExactResult:
    min_size: int | None
    witness: Subgraph | None
    subsets_examined: int
    sizes_exhausted: int
    wall_budget_hit: bool
    t: int = 3


class _Budget(Exception):
    pass


class _Enumerator:
    """Depth-first enumeration of s-edge subsets in lexicographic index order.

    Partial subsets that already contain a K_t are cut together with their
    whole extension subtree.
    """

    def __init__(self, host: Host, t: int, prune: bool,
                 max_subsets: int | None, deadline: float | None) -> None:
        self.host = host
        self.t = t
        self.prune = prune
        self.edges = list(host.host_edges())
        self.g = Subgraph(host)
        self.examined = 0
        self.max_subsets = max_subsets
        self.deadline = deadline

    def _saturated(self) -> bool:
        g, need = self.g, self.t - 2
        adj = g.adj
        if not self.prune and contains_clique(g, self.host.full_mask, self.t) is not None:
            return False
        if need == 1:
            for u, v in self.edges:
                if not adj[u] >> v & 1 and not adj[u] & adj[v]:
                    return False
            return True
        for u, v in self.edges:
            if not adj[u] >> v & 1 and contains_clique(g, adj[u] & adj[v], need) is None:
                return False
        return True

    def run(self, s: int) -> list[Edge] | None:
        return self._dfs(0, s, [])

    def _dfs(self, start: int, remaining: int, chosen: list[Edge]) -> list[Edge] | None:
        if remaining == 0:
            self.examined += 1
            if self.max_subsets is not None and self.examined > self.max_subsets:
                raise _Budget
            if self.deadline is not None and self.examined % 4096 == 0 and time.monotonic() > self.deadline:
                raise _Budget
            return list(chosen) if self._saturated() else None
        g, edges = self.g, self.edges
        adj = g.adj
        need = self.t - 2
        for idx in range(start, len(edges) - remaining + 1):
            u, v = edges[idx]
            if self.prune:
                common = adj[u] & adj[v]
                if common and (need == 1 or contains_clique(g, common, need) is not None):
                    continue
            g.add_edge(u, v)
            chosen.append((u, v))
            found = self._dfs(idx + 1, remaining - 1, chosen)
            chosen.pop()
            g.remove_edge(u, v)
            if found is not None:
                return found
        return None


def brute_force_sat(
    host: Host,
    t: int,
    *,
    max_edges: int = DEFAULT_EDGE_CAP,
    max_subsets: int | None = None,
    max_seconds: float | None = None,
    prune: bool = True,
) -> ExactResult:
    """Smallest K_t-saturated subgraph of ``host`` by exhaustive enumeration.

    Sizes are tried in increasing order; within a size, subsets are visited
    lexicographically by canonical edge index, so the witness is the least
    saturated subset of minimum size.  ``prune=False`` disables the K_t cut
    and checks freeness on complete subsets instead.
    """
    if t < 3:
        raise ParameterDomainError(f"clique order t must be >= 3, got {t}")
    m = host.host_edge_count
    if m > max_edges:
        raise CapExceededError(
            f"host K_{host.k}^{host.n} has {m} edges, above the enumeration cap of {max_edges}"
        )
    deadline = time.monotonic() + max_seconds if max_seconds is not None else None
    en = _Enumerator(host, t, prune, max_subsets, deadline)
    exhausted = -1
    for s in range(m + 1):
        try:
            found = en.run(s)
        except _Budget:
            return ExactResult(None, None, en.examined, exhausted, True, t)
        if found is not None:
            return ExactResult(s, Subgraph.from_edges(host, found), en.examined, s, False, t)
        exhausted = s
    raise AssertionError("the complete host is always saturated")
