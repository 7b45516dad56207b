"""
Triples over Z2, one step at a time
===================================

Build the two-element group, write down a few triples, check them, move one
around and ask whether two triples are the same class.
"""

import numpy as np

from pd0 import (BIT, PHASE, Cochain, PD0Triple, all_z2_homs, apply_move, coboundary, equiv,
                 make_cyclic, obstruction_rhs, random_cochain, validate_triple)

G = make_cyclic(2)
a0, a1 = all_z2_homs(G)
print("order", G.order, "homs", [a.values for a in (a0, a1)])

# the trivial triple is always valid
triv = PD0Triple.trivial(a0)
print("trivial valid:", validate_triple(triv) == [])

# c(g,g,g) = (1/2, 1/2), everything else zero
c = np.zeros((2, 2, 2, 2), dtype=int)
c[1, 1, 1] = (1, 1)
half = PD0Triple(Cochain(G, 3, PHASE, c, 2), Cochain.zero(G, 2, BIT), a0)
print("half valid:", validate_triple(half) == [])

# a quarter phase is not a cocycle; the report names the failing tuple
quarter = PD0Triple(Cochain(G, 3, PHASE, c, 4), Cochain.zero(G, 2, BIT), a0)
for v in validate_triple(quarter):
    print("  ", v)

#%%
# Twisting by a swaps the two components.  With kappa nonzero the right side
# of the c-equation is the half-phase cup product.
k = np.zeros((2, 2, 2), dtype=int)
k[1, 1] = (1, 1)
kappa = Cochain(G, 2, BIT, k)
print("kappa closed:", coboundary(a1, kappa).is_zero())
print("obstruction at (g,g,g,g):", obstruction_rhs(kappa, a1)[(1, 1, 1, 1)])

#%%
# Moves.  Any (m, sigma) carries a valid triple to a valid triple, and equiv
# recovers a certificate that replays the move.
m = random_cochain(G, 1, BIT, seed=0)
sigma = random_cochain(G, 2, PHASE, 8, seed=1)
moved = apply_move(half, m, sigma)
r = equiv(half, moved)
print("moved valid:", validate_triple(moved) == [], "status:", r.status)
print("replay matches:", r.certificate.replay(half) == moved)

# trivial and half are different classes; the witness is a left-kernel vector
r = equiv(triv, half)
print("trivial vs half:", r.status, "after", r.candidates_tried, "candidate moves")
