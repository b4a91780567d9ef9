"""Structural property checks for generated graphs.

Each check returns a :class:`PropertyResult`; a failing result carries a
counterexample that :func:`recheck` confirms from raw adjacency alone.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations

from .patterns import CapExceeded
from .topology import BalancedHypercube, build, translate

AUTOMORPHISM_CAP = 16


@dataclass
class PropertyResult:
    name: str
    n: int
    holds: bool
    counterexample: object = None
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "holds": self.holds,
            "counterexample": self.counterexample,
            "details": self.details,
        }


def check_regularity(g: BalancedHypercube) -> PropertyResult:
    n = g.n
    details = {"vertices": g.num_vertices, "edges": g.num_edges}
    if g.num_vertices != 4**n:
        return PropertyResult("regularity", n, False, {"vertex_count": g.num_vertices}, details)
    for v in g.vertices():
        if len(g.adj[v]) != 2 * n:
            return PropertyResult("regularity", n, False, {"vertex": v, "degree": len(g.adj[v])}, details)
    return PropertyResult("regularity", n, True, None, details)


def check_bipartite(g: BalancedHypercube) -> PropertyResult:
    """Inner-index parity is a proper 2-coloring (even = white, odd = black)."""
    for v in g.vertices():
        for w in g.adj[v]:
            if (v & 1) == (w & 1):
                return PropertyResult("bipartite", g.n, False, {"edge": [v, w]})
    white = sum(1 for v in g.vertices() if g.color(v) == "white")
    return PropertyResult("bipartite", g.n, True, None, {"white": white, "black": g.num_vertices - white})


def check_twin_neighborhoods(g: BalancedHypercube) -> PropertyResult:
    for v in g.vertices():
        t = v ^ 2
        if g.adj[v] != g.adj[t]:
            return PropertyResult("twin_neighborhoods", g.n, False, {"pair": [v, t]})
    return PropertyResult("twin_neighborhoods", g.n, True, None, {"pairs": g.num_vertices})


def check_common_neighbor_dichotomy(g: BalancedHypercube) -> PropertyResult:
    allowed = {2, 2 * g.n}
    sizes: dict[int, int] = {}
    for u, v in combinations(g.vertices(), 2):
        k = len(g.adj[u] & g.adj[v])
        if k:
            sizes[k] = sizes.get(k, 0) + 1
            if k not in allowed:
                return PropertyResult("common_neighbor_dichotomy", g.n, False, {"pair": [u, v], "common": k})
    return PropertyResult("common_neighbor_dichotomy", g.n, True, None, {"histogram": sizes})


def check_triangle_free(g: BalancedHypercube) -> PropertyResult:
    for u in g.vertices():
        for v in g.adj[u]:
            if v > u:
                both = [w for w in g.adj[u] & g.adj[v] if w > v]
                if both:
                    return PropertyResult("triangle_free", g.n, False, {"triangle": [u, v, both[0]]})
    return PropertyResult("triangle_free", g.n, True)


# automorphisms


def find_automorphism(g: BalancedHypercube, fixed: dict[int, int]) -> list[int] | None:
    """An automorphism extending the partial map ``fixed``, by backtracking.

    Vertices are assigned in BFS order from the fixed ones so every new vertex
    has a mapped neighbor that restricts its candidates.
    """
    nv = g.num_vertices
    adj = g.adj
    for a, b in fixed.items():
        if len(adj[a]) != len(adj[b]):
            return None
    order = list(fixed)
    seen = set(order)
    i = 0
    while len(order) < nv:
        if i == len(order):
            s = next(v for v in range(nv) if v not in seen)
            order.append(s)
            seen.add(s)
        for w in sorted(adj[order[i]]):
            if w not in seen:
                seen.add(w)
                order.append(w)
        i += 1

    image = dict(fixed)
    used = set(fixed.values())
    for a in fixed:
        for b in fixed:
            if (b in adj[a]) != (fixed[b] in adj[fixed[a]]):
                return None

    def consistent(x: int, y: int) -> bool:
        if len(adj[x]) != len(adj[y]):
            return False
        for z, zi in image.items():
            if (z in adj[x]) != (zi in adj[y]):
                return False
        return True

    todo = order[len(fixed):]

    def extend(k: int) -> bool:
        if k == len(todo):
            return True
        x = todo[k]
        mapped = [z for z in adj[x] if z in image]
        cands = set.intersection(*(set(adj[image[z]]) for z in mapped)) if mapped else set(range(nv))
        for y in sorted(cands - used):
            if consistent(x, y):
                image[x] = y
                used.add(y)
                if extend(k + 1):
                    return True
                del image[x]
                used.discard(y)
        return False

    if not extend(0):
        return None
    return [image[v] for v in range(nv)]


def is_automorphism(g: BalancedHypercube, perm) -> bool:
    perm = [int(p) for p in perm]
    if sorted(perm) != list(g.vertices()):
        return False
    return all({perm[w] for w in g.adj[v]} == g.adj[perm[v]] for v in g.vertices())


def vertex_orbit(g: BalancedHypercube, root: int = 0) -> set[int]:
    return {v for v in g.vertices() if find_automorphism(g, {root: v}) is not None}


def edge_orbit(g: BalancedHypercube, edge: tuple[int, int] | None = None) -> set[tuple[int, int]]:
    a, b = edge if edge is not None else min((u, v) for u in g.vertices() for v in g.adj[u] if u < v)
    orbit = set()
    for c in g.vertices():
        for d in g.adj[c]:
            if c < d and (
                find_automorphism(g, {a: c, b: d}) is not None
                or find_automorphism(g, {a: d, b: c}) is not None
            ):
                orbit.add((c, d))
    return orbit


def check_transitivity(g: BalancedHypercube, cap: int = AUTOMORPHISM_CAP) -> PropertyResult:
    """Single vertex and edge orbit (full search, small graphs) or, above the
    cap, that every translation map is an automorphism."""
    if g.num_vertices <= cap:
        vo = vertex_orbit(g)
        eo = edge_orbit(g)
        details = {"mode": "full", "vertex_orbit": len(vo), "edge_orbit": len(eo)}
        if len(vo) != g.num_vertices:
            missing = min(set(g.vertices()) - vo)
            return PropertyResult("transitivity", g.n, False, {"unreachable_vertex": [0, missing]}, details)
        if len(eo) != g.num_edges:
            all_edges = {(u, v) for u in g.vertices() for v in g.adj[u] if u < v}
            e0 = min(all_edges)
            missing = min(all_edges - eo)
            return PropertyResult("transitivity", g.n, False, {"unreachable_edge": [list(e0), list(missing)]}, details)
        return PropertyResult("transitivity", g.n, True, None, details)
    if not g.is_tagged:
        raise CapExceeded(f"full automorphism search capped at {cap} vertices")
    for c in g.vertices():
        perm = [translate(g, c, v) for v in g.vertices()]
        if not is_automorphism(g, perm):
            return PropertyResult("transitivity", g.n, False, {"translation": c})
    return PropertyResult("transitivity", g.n, True, None, {"mode": "translations", "maps": g.num_vertices})


CHECKS = (
    check_regularity,
    check_bipartite,
    check_twin_neighborhoods,
    check_common_neighbor_dichotomy,
    check_triangle_free,
    check_transitivity,
)


def _vertex_invariant(g: BalancedHypercube, x: int) -> tuple:
    adj = g.adj
    second = sorted(len(adj[x] & adj[y]) for y in g.vertices() if y != x and adj[x] & adj[y])
    return len(adj[x]), sorted(len(adj[y]) for y in adj[x]), second


def recheck(g: BalancedHypercube, result: PropertyResult) -> bool:
    """Confirm a failing result's counterexample straight from adjacency."""
    cx = result.counterexample
    if result.holds or cx is None:
        return False
    adj = g.adj
    name = result.name
    if name == "regularity":
        if "vertex" in cx:
            return len(adj[cx["vertex"]]) != 2 * g.n
        return len(adj) != 4**g.n
    if name == "bipartite":
        u, v = cx["edge"]
        return v in adj[u] and u % 2 == v % 2
    if name == "twin_neighborhoods":
        u, v = cx["pair"]
        return v == u ^ 2 and adj[u] != adj[v]
    if name == "common_neighbor_dichotomy":
        u, v = cx["pair"]
        return len(adj[u] & adj[v]) not in (0, 2, 2 * g.n)
    if name == "triangle_free":
        a, b, c = cx["triangle"]
        return b in adj[a] and c in adj[b] and a in adj[c]
    if name == "transitivity":
        # only an automorphism invariant that differs counts as confirmation
        if "unreachable_vertex" in cx:
            a, b = cx["unreachable_vertex"]
            return _vertex_invariant(g, a) != _vertex_invariant(g, b)
        if "unreachable_edge" in cx:
            (a, b), (c, d) = cx["unreachable_edge"]
            inv = lambda x, y: sorted((_vertex_invariant(g, x), _vertex_invariant(g, y)))
            return inv(a, b) != inv(c, d)
        if "translation" in cx:
            perm = [translate(g, cx["translation"], v) for v in g.vertices()]
            return not is_automorphism(g, perm)
    return False


def run_suite(ns=(1, 2, 3)) -> list[PropertyResult]:
    out = []
    for n in ns:
        g = build(n)
        out.extend(check(g) for check in CHECKS)
    return out


def negative_controls() -> list[tuple[BalancedHypercube, PropertyResult]]:
    """Deliberately broken graphs paired with the check each one must fail."""
    g = build(2)
    u = 0
    w = min(g.adj[u])
    no_edge = g.perturbed(remove=[(u, w)])
    chord = g.perturbed(add=[(u, g.twin_id(u))])
    # keeps bipartiteness; (0,0) and (0,1) end up with three common neighbors
    extra = g.perturbed(add=[((0, 0), (1, 2))])
    return [
        (no_edge, check_regularity(no_edge)),
        (no_edge, check_twin_neighborhoods(no_edge)),
        (no_edge, check_transitivity(no_edge)),
        (chord, check_bipartite(chord)),
        (chord, check_triangle_free(chord)),
        (extra, check_common_neighbor_dichotomy(extra)),
    ]


def suite_to_json(results, **kwargs) -> str:
    return json.dumps([r.to_dict() for r in results], **kwargs)
