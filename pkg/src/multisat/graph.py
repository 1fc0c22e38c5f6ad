"""Hosts K_k^n and their subgraphs, stored as Python-int bitsets.

Vertices are flat integers laid out part-major: part ``i`` (1-based) owns
flats ``(i-1)*n .. i*n - 1``.  Edges are canonical ``(u, v)`` tuples with
``u < v``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from .errors import IndexDomainError, MultipartiteViolationError, ParameterDomainError

Edge = tuple[int, int]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Host:
    """The complete balanced multipartite graph with ``k`` parts of size ``n``."""

    k: int
    n: int

    def __post_init__(self) -> None:
        if self.k < 3:
            raise ParameterDomainError(f"part count k must satisfy k >= 3, got k={self.k}")
        if self.n < 2:
            raise ParameterDomainError(f"part size n must satisfy n >= 2, got n={self.n}")

    @property
    def vertex_count(self) -> int:
        return self.k * self.n

    @property
    def host_edge_count(self) -> int:
        return self.k * (self.k - 1) * self.n * self.n // 2

    @cached_property
    def part_masks(self) -> tuple[int, ...]:
        block = (1 << self.n) - 1
        return tuple(block << (i * self.n) for i in range(self.k))

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.vertex_count) - 1

    def part_of(self, v: int) -> int:
        """1-based part of flat vertex ``v``."""
        self._check_flat(v)
        return v // self.n + 1

    def part_mask(self, part: int) -> int:
        if not 1 <= part <= self.k:
            raise IndexDomainError(f"part {part} outside [1, {self.k}]")
        return self.part_masks[part - 1]

    def locate(self, part: int, index: int) -> int:
        """Flat id of the vertex written v_part^index (both 1-based)."""
        if not 1 <= part <= self.k:
            raise IndexDomainError(f"part {part} outside [1, {self.k}]")
        if not 1 <= index <= self.n:
            raise IndexDomainError(f"index {index} outside [1, {self.n}]")
        return (part - 1) * self.n + (index - 1)

    def unlocate(self, flat: int) -> tuple[int, int]:
        self._check_flat(flat)
        return flat // self.n + 1, flat % self.n + 1

    def host_neighbors(self, v: int) -> int:
        return self.full_mask & ~self.part_masks[v // self.n]

    def is_host_edge(self, u: int, v: int) -> bool:
        return (
            0 <= u < self.vertex_count
            and 0 <= v < self.vertex_count
            and u // self.n != v // self.n
        )

    def host_edges(self) -> Iterator[Edge]:
        """All host edges in canonical lexicographic order."""
        for u in range(self.vertex_count):
            upper = self.full_mask & ~((1 << ((u // self.n + 1) * self.n)) - 1)
            for v in iter_bits(upper):
                yield (u, v)

    def parts_hit(self, mask: int) -> int:
        """Number of parts meeting ``mask``."""
        return sum(1 for pm in self.part_masks if mask & pm)

    def label(self, v: int) -> str:
        part, index = self.unlocate(v)
        return f"v{part}^{index}"

    def _check_flat(self, v: int) -> None:
        if not 0 <= v < self.vertex_count:
            raise IndexDomainError(f"vertex {v} outside [0, {self.vertex_count})")


def make_host(k: int, n: int) -> Host:
    return Host(k, n)


def canonical(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass
class Subgraph:
    """Spanning subgraph of a host; ``adj[v]`` is the neighbourhood bitset of ``v``."""

    host: Host
    adj: list[int] = field(default_factory=list)
    edge_count: int = 0

    def __post_init__(self) -> None:
        if not self.adj:
            self.adj = [0] * self.host.vertex_count

    @classmethod
    def empty(cls, host: Host) -> Subgraph:
        return cls(host)

    @classmethod
    def complete(cls, host: Host) -> Subgraph:
        adj = [host.host_neighbors(v) for v in range(host.vertex_count)]
        return cls(host, adj, host.host_edge_count)

    @classmethod
    def from_edges(cls, host: Host, edges: Iterable[Edge]) -> Subgraph:
        sub = cls(host)
        for u, v in edges:
            sub.add_edge(u, v)
        return sub

    def copy(self) -> Subgraph:
        return Subgraph(self.host, list(self.adj), self.edge_count)

    def _check_pair(self, u: int, v: int) -> None:
        h = self.host
        h._check_flat(u)
        h._check_flat(v)
        if u // h.n == v // h.n:
            raise MultipartiteViolationError(
                f"{h.label(u)} and {h.label(v)} lie in the same part"
            )

    def has_edge(self, u: int, v: int) -> bool:
        self._check_pair(u, v)
        return bool(self.adj[u] >> v & 1)

    def add_edge(self, u: int, v: int) -> bool:
        """Insert ``uv``; returns False when it was already present."""
        self._check_pair(u, v)
        if self.adj[u] >> v & 1:
            return False
        self.adj[u] |= 1 << v
        self.adj[v] |= 1 << u
        self.edge_count += 1
        return True

    def remove_edge(self, u: int, v: int) -> bool:
        """Delete ``uv``; returns False when it was absent."""
        self._check_pair(u, v)
        if not self.adj[u] >> v & 1:
            return False
        self.adj[u] &= ~(1 << v)
        self.adj[v] &= ~(1 << u)
        self.edge_count -= 1
        return True

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> Iterator[Edge]:
        for u, nb in enumerate(self.adj):
            for v in iter_bits(nb >> (u + 1)):
                yield (u, u + 1 + v)

    def edge_set(self) -> set[Edge]:
        return set(self.edges())

    def missing_edges(self) -> list[Edge]:
        """Host edges absent from this subgraph, canonical order."""
        h = self.host
        out: list[Edge] = []
        for u in range(h.vertex_count):
            upper = h.full_mask & ~((1 << ((u // h.n + 1) * h.n)) - 1)
            for v in iter_bits(upper & ~self.adj[u]):
                out.append((u, v))
        return out

    def part_pair_edge_count(self, i: int, j: int) -> int:
        h = self.host
        if i == j or not (1 <= i <= h.k and 1 <= j <= h.k):
            raise IndexDomainError(f"part pair ({i}, {j}) invalid for k={h.k}")
        mi, mj = h.part_masks[i - 1], h.part_masks[j - 1]
        return sum((self.adj[u] & mj).bit_count() for u in iter_bits(mi))

    def check_invariants(self) -> None:
        """Full rescan; raises AssertionError on any inconsistency."""
        h = self.host
        total = 0
        for v, nb in enumerate(self.adj):
            assert not nb >> v & 1, f"self-loop at {v}"
            assert nb & ~h.host_neighbors(v) == 0, f"intra-part or out-of-range edge at {v}"
            for w in iter_bits(nb):
                assert self.adj[w] >> v & 1, f"asymmetric edge {v}-{w}"
            total += nb.bit_count()
        assert total == 2 * self.edge_count, "edge_count out of sync"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subgraph):
            return NotImplemented
        return self.host == other.host and self.adj == other.adj
