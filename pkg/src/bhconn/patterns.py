"""The pattern graphs K1, K1,1, K1,2, K1,3, C4 (plus the path P4) and their
embeddings in a balanced hypercube."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .topology import BalancedHypercube

DEFAULT_ENUM_CAP = 2_000_000


class CapExceeded(RuntimeError):
    """Projected work exceeds the configured budget."""


class Shape(str, enum.Enum):
    K1 = "K1"
    K11 = "K11"
    K12 = "K12"
    K13 = "K13"
    P4 = "P4"
    C4 = "C4"

    @property
    def order(self) -> int:
        return _ORDER[self]

    @classmethod
    def parse(cls, text: str) -> "Shape":
        key = text.strip().upper().replace(",", "").replace("_", "")
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f"unknown shape {text!r}; expected one of {[s.value for s in cls]}")


_ORDER = {Shape.K1: 1, Shape.K11: 2, Shape.K12: 3, Shape.K13: 4, Shape.P4: 4, Shape.C4: 4}

#: Patterns whose connectivity is studied; P4 only ever appears as a subshape.
PATTERNS = (Shape.K1, Shape.K11, Shape.K12, Shape.K13, Shape.C4)

#: Connected subgraphs of each pattern, up to isomorphism.
CLOSURE = {
    Shape.K1: (Shape.K1,),
    Shape.K11: (Shape.K1, Shape.K11),
    Shape.K12: (Shape.K1, Shape.K11, Shape.K12),
    Shape.K13: (Shape.K1, Shape.K11, Shape.K12, Shape.K13),
    Shape.C4: (Shape.K1, Shape.K11, Shape.K12, Shape.P4, Shape.C4),
}


def allowed_shapes(pattern: Shape, mode: str, include_p4: bool = False) -> tuple[Shape, ...]:
    """Shapes admissible as family elements for ``pattern`` in ``mode``.

    With ``include_p4=False`` the C4 closure drops P4, which leaves exactly the
    element kinds (singletons, edges, 2-paths, 4-cycles) of the classical
    C4-substructure argument.
    """
    pattern = Shape(pattern)
    if pattern not in CLOSURE:
        raise ValueError(f"{pattern.value} is not a pattern")
    if mode == "structure":
        return (pattern,)
    if mode != "substructure":
        raise ValueError(f"mode must be 'structure' or 'substructure', got {mode!r}")
    shapes = CLOSURE[pattern]
    if not include_p4:
        shapes = tuple(s for s in shapes if s is not Shape.P4)
    return shapes


@dataclass(frozen=True)
class Embedding:
    """A concrete occurrence of a shape.

    Vertex order: center first for stars, path order for P4, cyclic order for C4.
    """

    shape: Shape
    vertices: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"shape": self.shape.value, "vertices": list(self.vertices)}

    @classmethod
    def from_dict(cls, data: dict) -> "Embedding":
        return cls(Shape.parse(data["shape"]), tuple(int(v) for v in data["vertices"]))

    def canonical(self) -> "Embedding":
        return Embedding(self.shape, canonical_vertices(self.shape, self.vertices))

    def mask(self) -> int:
        m = 0
        for v in self.vertices:
            m |= 1 << v
        return m


def canonical_vertices(shape: Shape, verts) -> tuple[int, ...]:
    verts = tuple(verts)
    if shape is Shape.K11:
        return tuple(sorted(verts))
    if shape in (Shape.K12, Shape.K13):
        return (verts[0],) + tuple(sorted(verts[1:]))
    if shape is Shape.P4:
        return verts if verts[0] < verts[-1] else verts[::-1]
    if shape is Shape.C4:
        forms = []
        for seq in (verts, verts[::-1]):
            for r in range(4):
                forms.append(seq[r:] + seq[:r])
        return min(forms)
    return verts


def _required_edges(shape: Shape, k: int) -> list[tuple[int, int]]:
    if shape in (Shape.K11, Shape.K12, Shape.K13):
        return [(0, j) for j in range(1, k)]
    if shape is Shape.P4:
        return [(0, 1), (1, 2), (2, 3)]
    if shape is Shape.C4:
        return [(0, 1), (1, 2), (2, 3), (3, 0)]
    return []


def embedding_problem(g: BalancedHypercube, e) -> str | None:
    """Why ``e`` is not a valid embedding in ``g``, or ``None`` if it is."""
    try:
        shape = Shape(e.shape)
        verts = tuple(e.vertices)
    except (AttributeError, ValueError, TypeError) as exc:
        return f"malformed embedding: {exc}"
    if len(verts) != shape.order:
        return f"{shape.value} needs {shape.order} vertices, got {len(verts)}"
    if any(not isinstance(v, int) or not 0 <= v < g.num_vertices for v in verts):
        return f"vertex ids out of range for {g!r}: {list(verts)}"
    if len(set(verts)) != len(verts):
        return f"repeated vertex in {list(verts)}"
    for i, j in _required_edges(shape, len(verts)):
        if verts[j] not in g.adj[verts[i]]:
            return f"missing edge {g.coords(verts[i])}-{g.coords(verts[j])}"
    return None


def is_valid_embedding(g: BalancedHypercube, e) -> bool:
    return embedding_problem(g, e) is None


def projected_count(g: BalancedHypercube, shape: Shape) -> int:
    """Upper bound on the number of embeddings, used for the budget check."""
    shape = Shape(shape)
    degs = [len(a) for a in g.adj]
    if shape is Shape.K1:
        return g.num_vertices
    if shape is Shape.K11:
        return g.num_edges
    if shape is Shape.K12:
        return sum(comb(d, 2) for d in degs)
    if shape is Shape.K13:
        return sum(comb(d, 3) for d in degs)
    # paths/cycles through a middle edge
    return sum(max(len(g.adj[u]) - 1, 0) * max(len(g.adj[v]) - 1, 0) for u in g.vertices() for v in g.adj[u])


def enumerate_embeddings(g: BalancedHypercube, shape, cap: int = DEFAULT_ENUM_CAP) -> list[Embedding]:
    """All embeddings of ``shape`` in ``g``, canonical and sorted."""
    shape = Shape(shape)
    projected = projected_count(g, shape)
    if projected > cap:
        raise CapExceeded(f"{shape.value} enumeration in {g!r} projects {projected} > cap {cap}")

    found: set[tuple[int, ...]] = set()
    adj = g.adj
    if shape is Shape.K1:
        found = {(v,) for v in g.vertices()}
    elif shape is Shape.K11:
        found = {(u, v) for u in g.vertices() for v in adj[u] if u < v}
    elif shape in (Shape.K12, Shape.K13):
        k = 2 if shape is Shape.K12 else 3
        for c in g.vertices():
            for leaves in combinations(sorted(adj[c]), k):
                found.add((c,) + leaves)
    elif shape is Shape.P4:
        for b in g.vertices():
            for c in adj[b]:
                for a in adj[b]:
                    if a == c:
                        continue
                    for d in adj[c]:
                        if d not in (a, b):
                            found.add(canonical_vertices(shape, (a, b, c, d)))
    else:
        for a in g.vertices():
            for b in adj[a]:
                for c in adj[b]:
                    if c == a:
                        continue
                    for d in adj[c] & adj[a]:
                        if d not in (a, b, c):
                            found.add(canonical_vertices(shape, (a, b, c, d)))
    return [Embedding(shape, v) for v in sorted(found)]


def count_c4(g: BalancedHypercube, cap: int = DEFAULT_ENUM_CAP) -> int:
    """Number of distinct 4-cycles in ``g``."""
    return len(enumerate_embeddings(g, Shape.C4, cap=cap))


def build_pool(g: BalancedHypercube, shapes, cap: int = DEFAULT_ENUM_CAP) -> list[Embedding]:
    """Concatenated embedding pools in the given shape order."""
    pool: list[Embedding] = []
    for s in shapes:
        pool.extend(enumerate_embeddings(g, s, cap=cap))
    return pool
