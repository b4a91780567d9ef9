# Structural checks on BH_1..BH_3 and the deliberately broken graphs that make
# sure each checker can fail.

from bhconn import properties as P

for r in P.run_suite([1, 2, 3]):
    print(f"n={r.n} {r.name:<26} holds={r.holds} {r.details}")

print()
for g, r in P.negative_controls():
    print(f"control {r.name:<26} holds={r.holds} counterexample={r.counterexample} confirmed={P.recheck(g, r)}")
