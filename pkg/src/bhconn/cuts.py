"""Explicit subgraph-cut families around a vertex and the cut verifier."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .patterns import Embedding, Shape, allowed_shapes, embedding_problem
from .topology import MINUS, PLUS, BalancedHypercube, DimensionError, translate


class ShapeViolation(ValueError):
    """One or more family elements do not have an admissible shape."""

    def __init__(self, violations: list[tuple[int, str]]):
        self.violations = violations
        msg = "; ".join(f"element {i}: {why}" for i, why in violations)
        super().__init__(msg)


@dataclass
class SubgraphCut:
    pattern: Shape
    mode: str
    elements: list[Embedding]
    base_vertex: tuple[int, ...] | None = None
    include_p4: bool = True

    @property
    def removed(self) -> frozenset[int]:
        return frozenset(v for e in self.elements for v in e.vertices)

    def to_dict(self) -> dict:
        return {
            "pattern": self.pattern.value,
            "mode": self.mode,
            "base_vertex": list(self.base_vertex) if self.base_vertex is not None else None,
            "elements": [e.to_dict() for e in self.elements],
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: dict) -> "SubgraphCut":
        base = data.get("base_vertex")
        return cls(
            Shape.parse(data["pattern"]),
            data.get("mode", "structure"),
            [Embedding.from_dict(e) for e in data["elements"]],
            tuple(base) if base is not None else None,
        )


def load_witness(path) -> SubgraphCut:
    with open(path) as fh:
        return SubgraphCut.from_dict(json.load(fh))


@dataclass
class Verdict:
    is_cut: bool
    components: list[frozenset[int]]
    reason: str = ""
    removed: frozenset[int] = field(default_factory=frozenset)

    @property
    def component_sizes(self) -> list[int]:
        return [len(c) for c in self.components]

    @property
    def smallest_component(self) -> frozenset[int]:
        return self.components[0] if self.components else frozenset()

    def component_of(self, v: int) -> frozenset[int] | None:
        for c in self.components:
            if v in c:
                return c
        return None

    def isolates(self, v: int) -> bool:
        return self.component_of(v) == frozenset({v})

    def to_dict(self, g: BalancedHypercube | None = None) -> dict:
        fmt = (lambda v: list(g.coords(v))) if g is not None else (lambda v: v)
        return {
            "is_cut": self.is_cut,
            "component_sizes": self.component_sizes,
            "smallest_component": [fmt(v) for v in sorted(self.smallest_component)],
            "removed": len(self.removed),
            "reason": self.reason,
        }


def components_after_removal(g: BalancedHypercube, removed) -> list[frozenset[int]]:
    """Connected components of ``g - removed`` sorted by (size, smallest id)."""
    removed = set(removed)
    seen = set(removed)
    comps = []
    for s in g.vertices():
        if s in seen:
            continue
        seen.add(s)
        comp, stack = [s], [s]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    stack.append(y)
        comps.append(frozenset(comp))
    comps.sort(key=lambda c: (len(c), min(c)))
    return comps


def verify(g: BalancedHypercube, cut: SubgraphCut) -> Verdict:
    """Check element shapes for the declared mode, then whether removing the
    union leaves ``g`` disconnected or with at most one vertex."""
    shapes = allowed_shapes(cut.pattern, cut.mode, include_p4=cut.include_p4)
    bad = []
    for i, e in enumerate(cut.elements):
        if e.shape not in shapes:
            bad.append((i, f"shape {e.shape.value} not allowed for {cut.pattern.value} {cut.mode}"))
            continue
        why = embedding_problem(g, e)
        if why:
            bad.append((i, why))
    if bad:
        raise ShapeViolation(bad)

    removed = cut.removed
    comps = components_after_removal(g, removed)
    remaining = g.num_vertices - len(removed)
    if remaining <= 1:
        return Verdict(True, comps, "trivial remainder", removed)
    if len(comps) > 1:
        return Verdict(True, comps, f"{len(comps)} components", removed)
    return Verdict(False, comps, "remaining graph is connected", removed)


# constructors

_MIN_DIM = {Shape.K1: 1, Shape.K11: 2, Shape.K12: 2, Shape.K13: 2, Shape.C4: 2}


def _require(g: BalancedHypercube, pattern: Shape) -> None:
    if g.n < _MIN_DIM[pattern]:
        raise DimensionError(f"{pattern.value} cut construction needs n >= {_MIN_DIM[pattern]}")
    if not g.is_tagged:
        raise ValueError("cut constructors need an unperturbed BH_n")


def cut_k1(g: BalancedHypercube, u) -> SubgraphCut:
    """The 2n singletons of N(u)."""
    _require(g, Shape.K1)
    uid = g.index(u)
    elems = [Embedding(Shape.K1, (w,)) for w in sorted(g.adj[uid])]
    return SubgraphCut(Shape.K1, "structure", elems, g.coords(uid))


def cut_k11(g: BalancedHypercube, u) -> SubgraphCut:
    """2n edges covering N(u).

    Built at the origin o with v = o^{0+}, w = o^{0-}:
    {v, v^{1+}}, {w, w^{1+}}, {o^{i+}, (o^{i+})^{0+}}, {o^{i-}, (o^{i-})^{0+}} for
    1 <= i <= n-1, then carried to ``u`` by the translation automorphism.
    """
    _require(g, Shape.K11)
    uid = g.index(u)
    o = 0
    s = g.step
    v, w = s(o, 0, PLUS), s(o, 0, MINUS)
    pairs = [(v, s(v, 1, PLUS)), (w, s(w, 1, PLUS))]
    for i in range(1, g.n):
        p, m = s(o, i, PLUS), s(o, i, MINUS)
        pairs.append((p, s(p, 0, PLUS)))
        pairs.append((m, s(m, 0, PLUS)))
    elems = [
        Embedding(Shape.K11, tuple(sorted(translate(g, uid, x) for x in pair))) for pair in pairs
    ]
    return SubgraphCut(Shape.K11, "structure", elems, g.coords(uid))


def cut_k12(g: BalancedHypercube, u) -> SubgraphCut:
    """n 2-paths u^{i+} - (u^{i+})^{0+} - u^{i-}, 0 <= i <= n-1.

    The middle vertex (u^{i+})^{0+} is the star center; for i = 0 it is the
    twin of u.
    """
    _require(g, Shape.K12)
    uid = g.index(u)
    s = g.step
    elems = []
    for i in range(g.n):
        p = s(uid, i, PLUS)
        center = s(p, 0, PLUS)
        elems.append(Embedding(Shape.K12, (center,) + tuple(sorted((p, s(uid, i, MINUS))))))
    return SubgraphCut(Shape.K12, "structure", elems, g.coords(uid))


def cut_k13(g: BalancedHypercube, u) -> SubgraphCut:
    """n claws covering N(u).

    i = 0: {u^{0+}, (u^{0+})^{1+}, ((u^{0+})^{1+})^{0+}, u^{0-}} with center
    (u^{0+})^{1+}, the only vertex of opposite color to the other three.
    i >= 1: center (u^{i+})^{0+} with leaves u^{i+}, u^{i-}, ((u^{i+})^{0+})^{1+}.
    """
    _require(g, Shape.K13)
    uid = g.index(u)
    s = g.step
    p0 = s(uid, 0, PLUS)
    c0 = s(p0, 1, PLUS)
    elems = [Embedding(Shape.K13, (c0,) + tuple(sorted((p0, s(c0, 0, PLUS), s(uid, 0, MINUS)))))]
    for i in range(1, g.n):
        p = s(uid, i, PLUS)
        c = s(p, 0, PLUS)
        leaves = sorted((p, s(uid, i, MINUS), s(c, 1, PLUS)))
        elems.append(Embedding(Shape.K13, (c,) + tuple(leaves)))
    return SubgraphCut(Shape.K13, "structure", elems, g.coords(uid))


def cut_c4(g: BalancedHypercube, u) -> SubgraphCut:
    """n four-cycles covering N(u); the first one passes through twin(u)."""
    _require(g, Shape.C4)
    uid = g.index(u)
    s = g.step
    p0 = s(uid, 0, PLUS)
    elems = [Embedding(Shape.C4, (p0, s(p0, 1, PLUS), s(uid, 0, MINUS), g.twin_id(uid)))]
    for i in range(1, g.n):
        p = s(uid, i, PLUS)
        elems.append(Embedding(Shape.C4, (p, s(p, 0, PLUS), s(uid, i, MINUS), s(p, 0, MINUS))))
    return SubgraphCut(Shape.C4, "structure", elems, g.coords(uid))


CONSTRUCTORS = {
    Shape.K1: cut_k1,
    Shape.K11: cut_k11,
    Shape.K12: cut_k12,
    Shape.K13: cut_k13,
    Shape.C4: cut_c4,
}


def construct(g: BalancedHypercube, pattern, u) -> SubgraphCut:
    return CONSTRUCTORS[Shape(pattern)](g, u)
