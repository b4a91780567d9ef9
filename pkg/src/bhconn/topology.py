"""Balanced hypercube BH_n: construction, neighbor queries and exports.

Vertices are n-tuples ``(a0, a1, ..., a_{n-1})`` over {0, 1, 2, 3}. ``a0`` is the
inner index, the rest are outer indices. Internally every vertex is addressed by
its canonical id ``sum(a[i] * 4**i)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

DEFAULT_MAX_DIM = 8

PLUS, MINUS = "+", "-"
WHITE, BLACK = "white", "black"


class DimensionError(ValueError):
    """Requested dimension is below 1 or above the configured cap."""


class UnknownVertexError(ValueError):
    """Vertex coordinates do not describe a vertex of the host graph."""


def coords_to_id(coords: Sequence[int]) -> int:
    return sum(int(a) << (2 * i) for i, a in enumerate(coords))


def id_to_coords(vid: int, n: int) -> tuple[int, ...]:
    return tuple((vid >> (2 * i)) & 3 for i in range(n))


def parse_vertex(text: str) -> tuple[int, ...]:
    """Parse ``"a0,a1,..."`` into a coordinate tuple."""
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise UnknownVertexError(f"cannot parse vertex {text!r}") from exc


def vertex_label(coords: Sequence[int]) -> str:
    return "".join(str(a) for a in coords)


def _tagged_neighbor(coords: Sequence[int], dim: int, sign: str) -> tuple[int, ...]:
    a0 = coords[0]
    step = 1 if sign == PLUS else -1
    out = list(coords)
    out[0] = (a0 + step) % 4
    if dim >= 1:
        out[dim] = (out[dim] + (1 if a0 % 2 == 0 else -1)) % 4
    return tuple(out)


@dataclass(frozen=True, eq=False)
class BalancedHypercube:
    """Immutable BH_n with precomputed tagged adjacency.

    ``table[v, 2*i]`` is the id of ``v^{i+}`` and ``table[v, 2*i + 1]`` the id
    of ``v^{i-}``. ``adj[v]`` is the plain neighbor set, which is all the
    property checkers look at (perturbed copies keep ``adj`` only).
    """

    n: int
    table: np.ndarray | None
    adj: tuple[frozenset[int], ...]
    label: str = field(default="")

    @property
    def num_vertices(self) -> int:
        return len(self.adj)

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    @property
    def is_tagged(self) -> bool:
        return self.table is not None

    def vertices(self) -> range:
        return range(self.num_vertices)

    def coords(self, vid: int) -> tuple[int, ...]:
        return id_to_coords(vid, self.n)

    def index(self, v) -> int:
        """Return the canonical id of ``v`` (an id or a coordinate sequence)."""
        if isinstance(v, (int, np.integer)):
            vid = int(v)
            if not 0 <= vid < self.num_vertices:
                raise UnknownVertexError(f"vertex id {vid} not in BH_{self.n}")
            return vid
        coords = tuple(v)
        if len(coords) != self.n or any(
            not isinstance(a, (int, np.integer)) or not 0 <= a <= 3 for a in coords
        ):
            raise UnknownVertexError(f"{coords!r} is not a vertex of BH_{self.n}")
        return coords_to_id(coords)

    def color(self, v) -> str:
        return BLACK if self.index(v) & 1 else WHITE

    def step(self, v, dim: int, sign: str) -> int:
        """Id of ``v^{dim sign}``."""
        if self.table is None:
            raise ValueError("perturbed graph carries no dimension tags")
        if not 0 <= dim < self.n:
            raise ValueError(f"dimension {dim} out of range for BH_{self.n}")
        return int(self.table[self.index(v), 2 * dim + (0 if sign == PLUS else 1)])

    def neighbors(self, v) -> list[tuple[tuple[int, ...], int, str]]:
        """The 2n tagged neighbors of ``v`` sorted by (dimension, sign)."""
        vid = self.index(v)
        out = []
        for dim in range(self.n):
            for sign in (PLUS, MINUS):
                out.append((self.coords(self.step(vid, dim, sign)), dim, sign))
        return out

    def neighbor_ids(self, v) -> frozenset[int]:
        return self.adj[self.index(v)]

    def has_edge(self, u, v) -> bool:
        return self.index(v) in self.adj[self.index(u)]

    def twin(self, v) -> tuple[int, ...]:
        c = list(self.coords(self.index(v)))
        c[0] = (c[0] + 2) % 4
        return tuple(c)

    def twin_id(self, v) -> int:
        return self.index(v) ^ 2

    def common_neighbors(self, u, v) -> set[tuple[int, ...]]:
        uid, vid = self.index(u), self.index(v)
        if uid == vid:
            raise ValueError("common_neighbors needs two distinct vertices")
        return {self.coords(w) for w in self.adj[uid] & self.adj[vid]}

    def edge_dimension(self, u, v) -> int:
        uid, vid = self.index(u), self.index(v)
        if vid not in self.adj[uid]:
            raise ValueError(f"{self.coords(uid)} and {self.coords(vid)} are not adjacent")
        diff = uid ^ vid
        for dim in range(self.n - 1, 0, -1):
            if (diff >> (2 * dim)) & 3:
                return dim
        return 0

    def edges(self) -> list[tuple[int, int, int]]:
        """All edges as ``(lo_id, hi_id, dimension)`` in lexicographic order."""
        return [
            (u, v, self.edge_dimension(u, v))
            for u in self.vertices()
            for v in sorted(self.adj[u])
            if u < v
        ]

    def neighbor_masks(self) -> list[int]:
        """Adjacency as Python-int bitsets, one per vertex."""
        return [sum(1 << w for w in a) for a in self.adj]

    def perturbed(self, remove=(), add=()) -> "BalancedHypercube":
        """Copy with edges removed/added; used for negative controls only."""
        adj = [set(a) for a in self.adj]
        for u, v in remove:
            u, v = self.index(u), self.index(v)
            adj[u].discard(v)
            adj[v].discard(u)
        for u, v in add:
            u, v = self.index(u), self.index(v)
            adj[u].add(v)
            adj[v].add(u)
        return BalancedHypercube(
            self.n, None, tuple(frozenset(a) for a in adj), label=f"perturbed BH_{self.n}"
        )

    def __repr__(self) -> str:
        return self.label or f"BH_{self.n}"

    # exports

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "vertices": [list(self.coords(v)) for v in self.vertices()],
            "edges": [list(e) for e in self.edges()],
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    def to_dot(self, highlight: Iterable[int] = (), mark: Iterable[int] = ()) -> str:
        highlight, mark = set(highlight), set(mark)
        lines = [f"graph BH_{self.n} {{", "  node [style=filled, shape=circle];"]
        for v in self.vertices():
            black = v & 1
            attrs = [
                f'label="{vertex_label(self.coords(v))}"',
                f'fillcolor={"black" if black else "white"}',
                f'fontcolor={"white" if black else "black"}',
            ]
            if v in highlight:
                attrs.append("color=red, penwidth=3")
            if v in mark:
                attrs.append("shape=doublecircle")
            lines.append(f"  v{v} [{', '.join(attrs)}];")
        for u, v, dim in self.edges():
            lines.append(f"  v{u} -- v{v} [dim={dim}];")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build(n: int, max_dim: int = DEFAULT_MAX_DIM) -> BalancedHypercube:
    """Construct BH_n with vertices ordered by canonical id."""
    if not isinstance(n, (int, np.integer)) or n < 1 or n > max_dim:
        raise DimensionError(f"dimension must be in 1..{max_dim}, got {n!r}")
    n = int(n)
    size = 4**n
    ids = np.arange(size, dtype=np.int64)
    digits = (ids[:, None] >> (2 * np.arange(n))) & 3
    a0 = digits[:, 0]
    shift = np.where(a0 % 2 == 0, 1, -1)

    table = np.empty((size, 2 * n), dtype=np.int64)
    for dim in range(n):
        for col, step in ((0, 1), (1, -1)):
            nd = digits.copy()
            nd[:, 0] = (a0 + step) % 4
            if dim >= 1:
                nd[:, dim] = (nd[:, dim] + shift) % 4
            table[:, 2 * dim + col] = (nd << (2 * np.arange(n))).sum(axis=1)
    table.setflags(write=False)
    adj = tuple(frozenset(int(w) for w in row) for row in table)
    return BalancedHypercube(n, table, adj)


def from_dict(data: dict, max_dim: int = DEFAULT_MAX_DIM) -> BalancedHypercube:
    """Rebuild a graph from its JSON form, checking it against ``build``."""
    g = build(int(data["n"]), max_dim=max_dim)
    vertices = [tuple(v) for v in data["vertices"]]
    if vertices != [g.coords(v) for v in g.vertices()]:
        raise ValueError("vertex list does not match BH_n in canonical order")
    edges = sorted(tuple(e) for e in data["edges"])
    if edges == g.edges():
        return g
    adj = [set() for _ in g.vertices()]
    for u, v, _dim in edges:
        adj[u].add(v)
        adj[v].add(u)
    return BalancedHypercube(g.n, None, tuple(frozenset(a) for a in adj), label=f"custom BH_{g.n}")


def load_graph(path) -> BalancedHypercube:
    with open(path) as fh:
        return from_dict(json.load(fh))


# recursive structure


@dataclass(frozen=True)
class SubCube:
    """Induced subgraph BH_{n-1}^k: vertices whose last coordinate is ``k``."""

    host: BalancedHypercube
    k: int
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int, int], ...]

    def dropped(self, vid: int) -> int:
        """Id in BH_{n-1} after dropping the last coordinate."""
        return vid & ((1 << (2 * (self.host.n - 1))) - 1)

    def relabeled_edges(self) -> list[tuple[int, int, int]]:
        return sorted(
            (min(self.dropped(u), self.dropped(v)), max(self.dropped(u), self.dropped(v)), d)
            for u, v, d in self.edges
        )


def subcube(g: BalancedHypercube, k: int) -> SubCube:
    if g.n < 2:
        raise DimensionError("BH_1 has no subcube decomposition")
    if k not in range(4):
        raise ValueError(f"subcube index must be 0..3, got {k}")
    last = 2 * (g.n - 1)
    verts = tuple(v for v in g.vertices() if (v >> last) & 3 == k)
    inside = set(verts)
    edges = tuple(e for e in g.edges() if e[0] in inside and e[1] in inside)
    return SubCube(g, k, verts, edges)


def cross_edges(g: BalancedHypercube) -> list[tuple[int, int, int, int, int]]:
    """Edges between different subcubes as ``(u, v, dim, k_u, k_v)``."""
    last = 2 * (g.n - 1)
    out = []
    for u, v, d in g.edges():
        ku, kv = (u >> last) & 3, (v >> last) & 3
        if ku != kv:
            out.append((u, v, d, ku, kv))
    return out


# translation automorphisms


def translate(g: BalancedHypercube, c, v) -> int:
    """Image of ``v`` under the translation taking the origin to ``c``.

    ``(a0, a_i) -> (a0 + c0, (-1)**c0 * a_i + c_i)``. It preserves dimension and
    sign tags, so ``translate(c, x^{i+}) == translate(c, x)^{i+}``.
    """
    cc = g.coords(g.index(c))
    a = g.coords(g.index(v))
    sgn = -1 if cc[0] % 2 else 1
    out = [(a[0] + cc[0]) % 4] + [(sgn * a[i] + cc[i]) % 4 for i in range(1, g.n)]
    return coords_to_id(out)


def untranslate(g: BalancedHypercube, c, v) -> int:
    """Inverse of :func:`translate`; maps ``c`` back to the origin."""
    cc = g.coords(g.index(c))
    a = g.coords(g.index(v))
    sgn = -1 if cc[0] % 2 else 1
    out = [(a[0] - cc[0]) % 4] + [(sgn * (a[i] - cc[i])) % 4 for i in range(1, g.n)]
    return coords_to_id(out)


def translation_map(g: BalancedHypercube, c) -> np.ndarray:
    return np.array([translate(g, c, v) for v in g.vertices()], dtype=np.int64)
