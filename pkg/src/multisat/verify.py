"""Saturation checks for F = {K_t} with witnesses, and part-pair densities."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .cliques import contains_clique
from .errors import ParameterDomainError
from .graph import Edge, Subgraph

# Below this many missing edges a process pool costs more than it saves.
PARALLEL_THRESHOLD = 20_000


@dataclass
class SaturationReport:
    t: int
    kt_free: bool
    witness: list[int] | None
    non_completing: list[Edge] = field(default_factory=list)
    missing_checked: int = 0
    edge_count: int = 0
    k: int = 0
    n: int = 0

    @property
    def is_saturated(self) -> bool:
        return self.kt_free and not self.non_completing

    def to_dict(self) -> dict[str, Any]:
        return {
            "t": self.t,
            "kt_free": self.kt_free,
            "witness": self.witness,
            "non_completing": [list(e) for e in self.non_completing],
            "missing_checked": self.missing_checked,
            "is_saturated": self.is_saturated,
            "edge_count": self.edge_count,
            "host": {"k": self.k, "n": self.n},
        }


def _check_t(t: int) -> None:
    if t < 3:
        raise ParameterDomainError(f"clique order t must be >= 3, got {t}")


def is_kt_free(sub: Subgraph, t: int) -> tuple[bool, list[int] | None]:
    _check_t(t)
    witness = contains_clique(sub, sub.host.full_mask, t)
    return witness is None, witness


def _scan(sub: Subgraph, edges: list[Edge], t: int) -> list[Edge]:
    adj = sub.adj
    need = t - 2
    bad = []
    for u, v in edges:
        if contains_clique(sub, adj[u] & adj[v], need) is None:
            bad.append((u, v))
    return bad


def _scan_chunk(args: tuple[Subgraph, list[Edge], int]) -> list[Edge]:
    return _scan(*args)


def verify_saturated(sub: Subgraph, t: int, jobs: int = 1) -> SaturationReport:
    """Full saturation report; ``jobs > 1`` shards the missing-edge scan."""
    _check_t(t)
    free, witness = is_kt_free(sub, t)
    report = SaturationReport(t, free, witness, edge_count=sub.edge_count,
                              k=sub.host.k, n=sub.host.n)
    if not free:
        return report
    missing = sub.missing_edges()
    report.missing_checked = len(missing)
    if jobs > 1 and len(missing) >= PARALLEL_THRESHOLD:
        size = -(-len(missing) // jobs)
        chunks = [(sub, missing[i:i + size], t) for i in range(0, len(missing), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            # map preserves chunk order, so the merge stays canonical
            for part in pool.map(_scan_chunk, chunks):
                report.non_completing.extend(part)
    else:
        report.non_completing = _scan(sub, missing, t)
    return report


def is_saturated(sub: Subgraph, t: int) -> bool:
    """Boolean-only check that stops at the first non-completing edge."""
    if contains_clique(sub, sub.host.full_mask, t) is not None:
        return False
    adj = sub.adj
    for u, v in sub.missing_edges():
        if contains_clique(sub, adj[u] & adj[v], t - 2) is None:
            return False
    return True


@dataclass(frozen=True)
class DensityRow:
    i: int
    j: int
    edges: int
    density: Fraction


def density_profile(sub: Subgraph) -> list[DensityRow]:
    h = sub.host
    sq = h.n * h.n
    rows = []
    for i in range(1, h.k + 1):
        for j in range(i + 1, h.k + 1):
            c = sub.part_pair_edge_count(i, j)
            rows.append(DensityRow(i, j, c, Fraction(c, sq)))
    return rows


def default_jobs() -> int:
    return os.cpu_count() or 1
