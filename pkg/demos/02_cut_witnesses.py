# Explicit cut families around a vertex u.
#
# Each constructor returns a family of subgraphs (edges, 2-paths, claws,
# 4-cycles) that together contain every neighbor of u, so removing them leaves u
# on its own.

from bhconn import build, construct, verify
from bhconn.patterns import PATTERNS

g = build(3)
u = (1, 2, 3)
uid = g.index(u)

for p in PATTERNS:
    cut = construct(g, p, u)
    verdict = verify(g, cut)
    print(f"{p.value:>4}: |F|={len(cut.elements)} |V(F)|={len(cut.removed):>2} "
          f"cut={verdict.is_cut} u isolated={verdict.isolates(uid)} components={verdict.component_sizes}")
    for e in cut.elements:
        print("       ", e.shape.value, [g.coords(v) for v in e.vertices])

# witness files round-trip through JSON
cut = construct(g, "C4", u)
print(cut.to_json())
