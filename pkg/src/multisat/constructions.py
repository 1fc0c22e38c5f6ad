"""The six K_t-saturated constructions in K_k^n and their edge-count formulas.

Every builder returns a :class:`ConstructionArtifacts`; vertex ids follow the
part-major layout of :class:`~multisat.graph.Host`, so ``v(i, j)`` below is the
vertex in part ``i`` with index ``j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .cliques import completes_kt, is_clique
from .errors import NoClosedFormError, ParameterDomainError
from .graph import Edge, Host, Subgraph, iter_bits, mask_of

KINDS = ("g1", "g2", "gknt", "hknt", "fknt", "iknt")
CLOSED_FORM_KINDS = ("g1", "g2", "gknt", "hknt")


@dataclass(frozen=True)
class ConstructionSpec:
    kind: str
    k: int
    n: int
    t: int = 3

    def __post_init__(self) -> None:
        kind = self.kind.lower()
        object.__setattr__(self, "kind", kind)
        if kind not in KINDS:
            raise ParameterDomainError(f"unknown construction kind {self.kind!r}")
        check_admissible(self)


def check_admissible(spec: ConstructionSpec) -> None:
    k, n, t = spec.k, spec.n, spec.t

    def fail(msg: str) -> None:
        raise ParameterDomainError(f"{spec.kind}(k={k}, n={n}, t={t}): {msg}")

    if k < 3:
        fail("requires k >= 3")
    if n < 2:
        fail("requires n >= 2")
    if spec.kind in ("g1", "g2"):
        if t != 3:
            fail("defined for t = 3 only")
    elif spec.kind == "gknt":
        if t < 3:
            fail("requires t >= 3")
        if k < 2 * t - 4:
            fail(f"requires k >= 2t-4 = {2 * t - 4}")
    elif spec.kind == "hknt":
        if t < 3:
            fail("requires t >= 3")
        if k < 2 * t - 3:
            fail(f"requires k >= 2t-3 = {2 * t - 3}")
    elif spec.kind == "fknt":
        if t < 4:
            fail("requires t >= 4")
        if k < t:
            fail("requires k >= t")
        if n < comb(t - 1, 2):
            fail(f"requires n >= C(t-1, 2) = {comb(t - 1, 2)} distinct vertices in part t")
    elif spec.kind == "iknt":
        if t < 6 or t % 2:
            fail("requires even t >= 6")
        if 2 * k < 3 * (t - 2):
            fail(f"requires k >= 3(t-2)/2 = {3 * (t - 2) // 2}")


@dataclass
class ConstructionArtifacts:
    spec: ConstructionSpec
    graph: Subgraph
    hub_set: list[int]
    completion_edges: list[Edge] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)


def _join_hubs_to_rest(sub: Subgraph, hubs: list[int]) -> None:
    """Add every host edge between ``hubs`` and the remaining vertices."""
    h = sub.host
    rest = h.full_mask & ~mask_of(hubs)
    for s in hubs:
        for w in iter_bits(rest & h.host_neighbors(s)):
            sub.add_edge(s, w)


def build_g1(k: int, n: int) -> ConstructionArtifacts:
    spec = ConstructionSpec("g1", k, n)
    h = Host(k, n)
    v = h.locate
    g = Subgraph(h)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i + j >= 3:
                g.add_edge(v(1, i), v(2, j))
    for m in (1, 2):
        for part in range(3, k + 1):
            for j in range(1, n + 1):
                g.add_edge(v(m, 1), v(part, j))
    return ConstructionArtifacts(
        spec, g, [v(1, 1), v(2, 1)],
        notes=["removed V1-V2 edge read as v1^1 v2^1"],
    )


def build_g2(k: int, n: int) -> ConstructionArtifacts:
    spec = ConstructionSpec("g2", k, n)
    h = Host(k, n)
    v = h.locate
    g = Subgraph(h)
    hubs = [v(1, 1), v(2, 1), v(3, 1)]
    for a in range(1, 4):
        for b in range(1, 4):
            if a != b:
                for j in range(2, n + 1):
                    g.add_edge(v(a, j), hubs[b - 1])
    for part in range(4, k + 1):
        for j in range(1, n + 1):
            for hub in hubs:
                g.add_edge(hub, v(part, j))
    return ConstructionArtifacts(
        spec, g, hubs,
        notes=["each V_a minus its hub joined to both other hubs (6(n-1) edges)"],
    )


def build_gknt(k: int, n: int, t: int) -> ConstructionArtifacts:
    spec = ConstructionSpec("gknt", k, n, t)
    h = Host(k, n)
    v = h.locate
    g = Subgraph(h)
    size = 2 * t - 4
    hubs = [v(r, 1) for r in range(1, size + 1)]
    matched = {(r, r + 1) for r in range(1, size, 2)}
    for r, s in combinations(range(1, size + 1), 2):
        if (r, s) not in matched:
            g.add_edge(v(r, 1), v(s, 1))
    for r in range(1, size, 2):
        for i in range(2, n + 1):
            for j in range(2, n + 1):
                g.add_edge(v(r, i), v(r + 1, j))
    _join_hubs_to_rest(g, hubs)
    return ConstructionArtifacts(spec, g, hubs)


def removed_cycle(t: int) -> list[tuple[int, int]]:
    """Hub-index pairs (1-based) at plain difference t-2 or t-1."""
    size = 2 * t - 3
    return [(r, s) for r, s in combinations(range(1, size + 1), 2) if s - r in (t - 2, t - 1)]


def _is_single_cycle(pairs: list[tuple[int, int]], order: int) -> bool:
    nbrs: dict[int, list[int]] = {x: [] for x in range(1, order + 1)}
    for a, b in pairs:
        nbrs[a].append(b)
        nbrs[b].append(a)
    if len(pairs) != order or any(len(x) != 2 for x in nbrs.values()):
        return False
    prev, cur, steps = 0, 1, 0
    while True:
        nxt = nbrs[cur][0] if nbrs[cur][0] != prev else nbrs[cur][1]
        prev, cur, steps = cur, nxt, steps + 1
        if cur == 1:
            return steps == order


def build_hknt(k: int, n: int, t: int) -> ConstructionArtifacts:
    spec = ConstructionSpec("hknt", k, n, t)
    h = Host(k, n)
    v = h.locate
    g = Subgraph(h)
    size = 2 * t - 3
    cycle = removed_cycle(t)
    if t > 3 and not _is_single_cycle(cycle, size):
        raise AssertionError(f"removed pairs for t={t} do not form a single {size}-cycle")
    hubs = [v(s, 1) for s in range(1, size + 1)]
    gone = set(cycle)
    for r, s in combinations(range(1, size + 1), 2):
        if (r, s) not in gone:
            g.add_edge(v(r, 1), v(s, 1))
    _join_hubs_to_rest(g, hubs)
    return ConstructionArtifacts(
        spec, g, hubs, notes=["one hub per part: S = {v_s^1 : s <= 2t-3}"],
    )


def _designated_cliques(t: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """For each (t-2)-subset R of [t] in lexicographic order, the parts R and
    the per-part vertex *indices* of its clique (1-based, within each part)."""
    subsets = list(combinations(range(1, t + 1), t - 2))
    used = {p: 0 for p in range(1, t + 1)}
    cliques: dict[tuple[int, ...], dict[int, int]] = {}
    out = []
    for pos, R in enumerate(subsets):
        if pos == 0:
            members = {}
            for p in R:
                used[p] += 1
                members[p] = used[p]
        else:
            low = R[:-1]
            # nearest earlier subset containing the t-3 lowest elements of R
            pred = next(Q for Q in reversed(subsets[:pos]) if set(low) <= set(Q))
            members = {p: cliques[pred][p] for p in low}
            top = R[-1]
            used[top] += 1
            members[top] = used[top]
        cliques[R] = members
        out.append((R, tuple(members[p] for p in R)))
    return out


def fknt_hub_size(t: int) -> int:
    return (t - 2) + comb(t, 2) - 1


def build_fknt(k: int, n: int, t: int, *, complete: bool = True) -> ConstructionArtifacts:
    """Lexicographic clique gadget on S, join S to the rest, then greedy
    completion inside S.  ``complete=False`` stops before the greedy phase."""
    spec = ConstructionSpec("fknt", k, n, t)
    h = Host(k, n)
    v = h.locate
    g = Subgraph(h)
    hubs: list[int] = []
    designated = []
    for R, idx in _designated_cliques(t):
        verts = [v(p, j) for p, j in zip(R, idx)]
        for x in verts:
            if x not in hubs:
                hubs.append(x)
        for a, b in combinations(verts, 2):
            g.add_edge(a, b)
        designated.append(verts)
    for verts in designated:
        if not is_clique(g, verts):
            raise AssertionError(f"designated clique {verts} not complete after hub phase")
    hubs.sort()
    _join_hubs_to_rest(g, hubs)
    added: list[Edge] = []
    if complete:
        for a, b in combinations(hubs, 2):
            if h.is_host_edge(a, b) and not g.has_edge(a, b) and completes_kt(g, (a, b), t) is None:
                g.add_edge(a, b)
                added.append((a, b))
    return ConstructionArtifacts(
        spec, g, hubs, added,
        notes=[
            "fresh vertices take the lowest unused index in their part",
            "each new vertex reuses the nearest earlier clique on R minus max(R)",
            "greedy completion scans S-internal pairs in canonical order",
        ],
    )


def iknt_triangles(t: int) -> list[tuple[int, tuple[int, int, int]]]:
    """Deleted triangles as (index, (part, part, part)); index is 1 or 2."""
    parts = 3 * (t - 2) // 2

    def block(i: int) -> list[tuple[int, tuple[int, int, int]]]:
        b = 6 * i
        return [
            (1, (b + 1, b + 2, b + 3)),
            (1, (b + 4, b + 5, b + 6)),
            (2, (b + 1, b + 3, b + 5)),
            (2, (b + 2, b + 4, b + 6)),
        ]

    tris = []
    if t % 4 == 2:
        for i in range((t - 2) // 4):
            tris += block(i)
    else:
        for i in range((t - 8) // 4):
            tris += block(i)
        P = parts
        tris += [
            (1, (P - 8, P - 7, P - 6)),
            (1, (P - 5, P - 4, P - 3)),
            (1, (P - 2, P - 1, P)),
            (2, (P - 8, P - 5, P - 2)),
            (2, (P - 7, P - 4, P - 1)),
            (2, (P - 6, P - 3, P)),
        ]
    return tris


def build_iknt(k: int, n: int, t: int) -> ConstructionArtifacts:
    spec = ConstructionSpec("iknt", k, n, t)
    h = Host(k, n)
    v = h.locate
    g = Subgraph(h)
    parts = 3 * (t - 2) // 2
    hubs = [v(p, j) for p in range(1, parts + 1) for j in (1, 2)]
    for a, b in combinations(hubs, 2):
        if h.is_host_edge(a, b):
            g.add_edge(a, b)
    for idx, tri in iknt_triangles(t):
        for p, q in combinations(tri, 2):
            if not g.remove_edge(v(p, idx), v(q, idx)):
                raise AssertionError(f"triangle edge v{p}^{idx} v{q}^{idx} deleted twice")
    _join_hubs_to_rest(g, hubs)
    notes = ["conditioned on t mod 4"]
    if t % 4 == 0:
        notes.append("regular blocks i < (t-8)/4, special pattern on the last nine parts")
    return ConstructionArtifacts(spec, g, hubs, notes=notes)


_BUILDERS = {
    "g1": lambda s: build_g1(s.k, s.n),
    "g2": lambda s: build_g2(s.k, s.n),
    "gknt": lambda s: build_gknt(s.k, s.n, s.t),
    "hknt": lambda s: build_hknt(s.k, s.n, s.t),
    "fknt": lambda s: build_fknt(s.k, s.n, s.t),
    "iknt": lambda s: build_iknt(s.k, s.n, s.t),
}


def build(spec: ConstructionSpec) -> ConstructionArtifacts:
    return _BUILDERS[spec.kind](spec)


def size_formula(spec: ConstructionSpec) -> int:
    k, n, t = spec.k, spec.n, spec.t
    if spec.kind == "g1":
        return 2 * k * n + n * n - 4 * n - 1
    if spec.kind == "g2":
        return 3 * k * n - 3 * n - 6
    if spec.kind == "gknt":
        return (t - 2) * n * n + (2 * t - 4) * k * n - 2 * (2 * t - 4) * n - comb(2 * t - 4, 2)
    if spec.kind == "hknt":
        a = 2 * t - 3
        return a * k * n - a * n - a * (t - 1)
    raise NoClosedFormError(f"{spec.kind} has no closed-form edge count")


def sat_k3_formula(k: int, n: int) -> tuple[int, str]:
    """min of the two triangle constructions, with the one attaining it."""
    g1 = size_formula(ConstructionSpec("g1", k, n))
    g2 = size_formula(ConstructionSpec("g2", k, n))
    # k >= n - 1 + 5/n, cleared of denominators
    if n * k >= n * n - n + 5:
        return g1, "G1"
    return g2, "G2"


def general_bound_formula(k: int, n: int, t: int) -> int:
    if t < 3 or k < 2 * t - 3 or n < 2:
        raise ParameterDomainError(f"bound needs t >= 3, k >= 2t-3, n >= 2; got k={k}, n={n}, t={t}")
    return min(
        size_formula(ConstructionSpec("gknt", k, n, t)),
        size_formula(ConstructionSpec("hknt", k, n, t)),
    )
