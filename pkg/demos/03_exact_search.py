# Exact connectivity numbers of BH_2 by exhaustive search, next to the closed forms
# 2n (K1, K11) and n (K12, K13, C4).

from bhconn import build, g_connectivity, structure_connectivity, sweep_small_families, vertex_connectivity
from bhconn.patterns import PATTERNS

g = build(2)
print("kappa(BH_n) for n=1..3:", [vertex_connectivity(build(n)).value for n in (1, 2, 3)])
print("g-connectivity of BH_2, g=0..5:", [g_connectivity(g, k).value for k in range(6)])

print(f"{'H':>4} {'struct':>7} {'substruct':>10}")
for p in PATTERNS:
    s = structure_connectivity(g, p, "structure")
    ss = structure_connectivity(g, p, "substructure")
    print(f"{p.value:>4} {s.value:>7} {ss.value:>10}   explored {s.explored}/{ss.explored}")

# admitting 4-vertex paths as C4-substructure elements does not lower the value
rep = structure_connectivity(g, "C4", "substructure", include_p4=True)
print("C4 substructure with P4 elements:", rep.value)
print("witness:", [(e.shape.value, [g.coords(v) for v in e.vertices]) for e in rep.witness.elements])

# no three singletons/edges disconnect BH_2
print("disconnecting {K1,K11} families of size <= 3:", len(sweep_small_families(g, ["K1", "K11"], 3)))
