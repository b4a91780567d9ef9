"""Exact connectivity quantities by exhaustive search.

Classical connectivity uses unit-capacity max-flow on the split graph. The
g-connectivity and structure/substructure connectivity are computed by trying
candidate sets in increasing size, so the first success is optimal.
"""

from __future__ import annotations

import json
import os
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .cuts import SubgraphCut
from .patterns import DEFAULT_ENUM_CAP, CapExceeded, Embedding, Shape, allowed_shapes, build_pool
from .topology import BalancedHypercube

DEFAULT_LEVEL_BUDGET = int(os.environ.get("BHCONN_BUDGET", 10**8))
DEFAULT_FLOW_CAP = 256
DEFAULT_SUBSET_CAP = 16
DEFAULT_STRUCT_CAP = 64


class BudgetExhausted(RuntimeError):
    """A deepening level would examine more families than the budget allows.

    ``lower_bound`` is the smallest family size not yet ruled out.
    """

    def __init__(self, message: str, lower_bound: int, explored: int):
        super().__init__(message)
        self.lower_bound = lower_bound
        self.explored = explored


@dataclass
class SearchReport:
    quantity: str
    value: int | None
    witness: object = None
    explored: int = 0
    budget: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        w = self.witness
        if isinstance(w, SubgraphCut):
            w = w.to_dict()
        elif w is not None:
            w = sorted(w)
        return {"quantity": self.quantity, "value": self.value, "witness": w, "explored": self.explored}

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


# bitset helpers


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _split(nbr: list[int], alive: int) -> tuple[int, int]:
    """Component of the lowest alive vertex and the rest of ``alive``."""
    low = alive & -alive
    reach = frontier = low
    while frontier:
        grow = 0
        for v in _bits(frontier):
            grow |= nbr[v]
        frontier = grow & alive & ~reach
        reach |= frontier
    return reach, alive & ~reach


def _disconnects(nbr: list[int], full: int, removed: int) -> bool:
    """True if ``G - removed`` is disconnected or has at most one vertex."""
    alive = full & ~removed
    if alive & (alive - 1) == 0:
        return True
    _, rest = _split(nbr, alive)
    return rest != 0


def _components(nbr: list[int], alive: int) -> list[int]:
    comps = []
    while alive:
        c, alive = _split(nbr, alive)
        comps.append(c)
    return comps


# classical connectivity


def _local_connectivity(adj, s: int, t: int, limit: int) -> tuple[int, set[int]]:
    """Max number of internally disjoint s-t paths (stopping at ``limit``) and a
    minimum s-t vertex separator when the flow stays below ``limit``.

    Vertex v is split into v_in = 2v, v_out = 2v + 1 with capacity 1 (infinite
    for s and t); each edge uv becomes u_out -> v_in and v_out -> u_in.
    """
    cap: dict[tuple[int, int], int] = {}
    out: dict[int, list[int]] = {}

    def arc(a, b, c):
        if (a, b) not in cap:
            out.setdefault(a, []).append(b)
            out.setdefault(b, []).append(a)
            cap[(b, a)] = cap.get((b, a), 0)
        cap[(a, b)] = cap.get((a, b), 0) + c

    big = len(adj) + 1
    for v in range(len(adj)):
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
        for w in adj[v]:
            arc(2 * v + 1, 2 * w, big)

    src, dst = 2 * s + 1, 2 * t
    flow = 0
    while flow < limit:
        parent = {src: None}
        q = deque([src])
        while q and dst not in parent:
            a = q.popleft()
            for b in out[a]:
                if b not in parent and cap[(a, b)] > 0:
                    parent[b] = a
                    q.append(b)
        if dst not in parent:
            break
        b = dst
        while parent[b] is not None:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1

    # source side of the residual graph; saturated split arcs give the separator
    seen = {src}
    q = deque([src])
    while q:
        a = q.popleft()
        for b in out[a]:
            if b not in seen and cap[(a, b)] > 0:
                seen.add(b)
                q.append(b)
    sep = {v for v in range(len(adj)) if 2 * v in seen and 2 * v + 1 not in seen}
    return flow, sep


def vertex_connectivity(g: BalancedHypercube, cap: int = DEFAULT_FLOW_CAP) -> SearchReport:
    """Exact vertex connectivity with a minimum separating set as witness.

    Pairs are restricted as in Esfahanian-Hakimi: a fixed vertex v against each
    non-neighbor, plus non-adjacent pairs of neighbors of v. Every minimum
    separator either misses v (then v and some non-neighbor lie on opposite
    sides) or contains v, in which case v has neighbors on both sides.
    """
    nv = g.num_vertices
    if nv > cap:
        raise CapExceeded(f"vertex_connectivity cap is {cap} vertices, {g!r} has {nv}")
    adj = g.adj
    v = min(g.vertices(), key=lambda x: (len(adj[x]), x))
    pairs = [(v, w) for w in g.vertices() if w != v and w not in adj[v]]
    nb = sorted(adj[v])
    pairs += [(x, y) for x, y in combinations(nb, 2) if y not in adj[x]]
    if not pairs:
        # complete graph
        return SearchReport("kappa", nv - 1, frozenset(range(1, nv)), 0)

    best, witness = nv - 1, None
    for s, t in pairs:
        k, sep = _local_connectivity(adj, s, t, best)
        if k < best or witness is None:
            best, witness = k, frozenset(sep)
    return SearchReport("kappa", best, witness, len(pairs), {"vertex_cap": cap})


# g-connectivity


def g_connectivity(g: BalancedHypercube, gval: int, cap: int = DEFAULT_SUBSET_CAP) -> SearchReport:
    """Minimum |S| such that G - S is disconnected and every component has at
    least ``gval + 1`` vertices. Subsets are tried by size, then lexicographically."""
    nv = g.num_vertices
    if nv > cap:
        raise CapExceeded(f"exhaustive g-connectivity cap is {cap} vertices, {g!r} has {nv}")
    if gval < 0:
        raise ValueError("g must be non-negative")
    nbr = g.neighbor_masks()
    full = (1 << nv) - 1
    explored = 0
    for size in range(1, nv + 1):
        # two components of >= g+1 vertices must survive
        if nv - size < 2 * (gval + 1):
            break
        for subset in combinations(range(nv), size):
            explored += 1
            removed = sum(1 << x for x in subset)
            comps = _components(nbr, full & ~removed)
            if len(comps) > 1 and min(c.bit_count() for c in comps) > gval:
                return SearchReport(f"kappa_g({gval})", size, frozenset(subset), explored, {"vertex_cap": cap})
    return SearchReport(f"kappa_g({gval})", None, None, explored, {"vertex_cap": cap})


# structure / substructure connectivity


def structure_connectivity(
    g: BalancedHypercube,
    pattern,
    mode: str = "structure",
    *,
    include_p4: bool = False,
    prune: bool = True,
    max_size: int | None = None,
    level_budget: int = DEFAULT_LEVEL_BUDGET,
    cap: int = DEFAULT_STRUCT_CAP,
    enum_cap: int = DEFAULT_ENUM_CAP,
) -> SearchReport:
    """Smallest family of admissible embeddings whose union is a subgraph-cut.

    Families of m = 1, 2, ... elements are examined in lexicographic order over
    the sorted embedding pool; the first cut found is the witness. With
    ``prune`` a whole family is skipped when its union is smaller than the
    vertex connectivity, since no smaller vertex set disconnects the graph.
    """
    pattern = Shape(pattern)
    nv = g.num_vertices
    if nv > cap:
        raise CapExceeded(f"structure search cap is {cap} vertices, {g!r} has {nv}")
    shapes = allowed_shapes(pattern, mode, include_p4=include_p4)
    pool = build_pool(g, shapes, cap=enum_cap)
    masks = [e.mask() for e in pool]
    nbr = g.neighbor_masks()
    full = (1 << nv) - 1
    floor = vertex_connectivity(g).value if prune else 0
    # "trivial" remainder counts as a cut, so nv - 1 removed vertices always suffice
    floor = min(floor, nv - 1)
    largest = max(s.order for s in shapes)
    quantity = f"kappa_{'struct' if mode == 'structure' else 'substruct'}({pattern.value})"
    budget = {"level_budget": level_budget, "pool": len(pool), "include_p4": include_p4}
    limit = len(pool) if max_size is None else min(max_size, len(pool))

    cache: dict[int, bool] = {}
    explored = 0
    for m in range(1, limit + 1):
        if m * largest < floor:
            continue
        level = comb(len(pool), m)
        if level > level_budget:
            raise BudgetExhausted(
                f"level m={m} has {level} families > budget {level_budget}; no cut of size < {m}",
                lower_bound=m,
                explored=explored,
            )
        for idx in combinations(range(len(pool)), m):
            explored += 1
            union = 0
            for i in idx:
                union |= masks[i]
            if union.bit_count() < floor:
                continue
            hit = cache.get(union)
            if hit is None:
                hit = cache[union] = _disconnects(nbr, full, union)
            if hit:
                witness = SubgraphCut(pattern, mode, [pool[i] for i in idx], include_p4=include_p4)
                return SearchReport(quantity, m, witness, explored, budget)
    if max_size is not None and max_size < len(pool):
        raise BudgetExhausted(f"no cut of size <= {max_size}", lower_bound=max_size + 1, explored=explored)
    return SearchReport(quantity, None, None, explored, budget)


def sweep_small_families(
    g: BalancedHypercube,
    shapes,
    m_max: int,
    *,
    budget: int = DEFAULT_LEVEL_BUDGET,
    enum_cap: int = DEFAULT_ENUM_CAP,
) -> list[list[Embedding]]:
    """Every family of at most ``m_max`` embeddings (drawn from ``shapes``)
    whose removal disconnects ``g`` or leaves at most one vertex."""
    shapes = [Shape(s) for s in shapes]
    pool = build_pool(g, shapes, cap=enum_cap)
    total = sum(comb(len(pool), m) for m in range(1, m_max + 1))
    if total > budget:
        raise CapExceeded(f"sweep needs {total} families > budget {budget}")
    masks = [e.mask() for e in pool]
    nbr = g.neighbor_masks()
    full = (1 << g.num_vertices) - 1
    cache: dict[int, bool] = {}
    bad = []
    for m in range(1, m_max + 1):
        for idx in combinations(range(len(pool)), m):
            union = 0
            for i in idx:
                union |= masks[i]
            hit = cache.get(union)
            if hit is None:
                hit = cache[union] = _disconnects(nbr, full, union)
            if hit:
                bad.append([pool[i] for i in idx])
    return bad
