"""
Counting classes for small groups
=================================

Classify triples for a few groups, with and without the diagonal restriction.
Set PD0_WORKERS to spread sectors over threads.
"""

import time

from pd0 import all_z2_homs, classify_sector, make_cyclic, make_direct_product

Z2 = make_cyclic(2)
groups = {"Z2": Z2, "Z4": make_cyclic(4), "Z2xZ2": make_direct_product(Z2, Z2)}

for name, G in groups.items():
    for diagonal in (True, False):
        t0 = time.perf_counter()
        counts = [classify_sector(G, a, diagonal_only=diagonal).class_count for a in all_z2_homs(G)]
        kind = "diagonal" if diagonal else "all"
        print(f"{name:6s} {kind:8s} per a {counts}  total {sum(counts)}  ({time.perf_counter() - t0:.2f}s)")

#%%
# Z2 by kappa sector.  Each row is one class of kappa and the number of
# c-classes sitting over it.
for a in all_z2_homs(Z2):
    cl = classify_sector(Z2, a, 8)
    for s in cl.sectors:
        print("a", a.values, "kappa(g,g)", s.kappa.values[1, 1].tolist(), "classes", s.class_count)
