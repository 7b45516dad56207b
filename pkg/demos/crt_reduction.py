"""
Reducing a CRT pentuple to a diagonal triple
============================================

Start from a diagonal triple, wrap it into a pentuple with some b, then run
the reduction and look at what comes back.
"""

from pd0 import (all_z2_homs, check_claim_identities, equiv, make_cyclic, random_triple, reduce,
                 reduction_chain, synthesize_pentuple, validate_crt)

G = make_cyclic(4)
a = all_z2_homs(G)[1]
t = random_triple(a, seed=3, diagonal=True)

p = synthesize_pentuple(t, b=(0, 1, 1, 0), seed=3)
print("b =", p.b)
print("constraints hold:", validate_crt(p) == [])
print("kappa_L differs from kappa_R:", p.kappa_l != p.kappa_r)

#%%
# reduce checks every identity along the way and refuses to return otherwise
out, cert = reduce(p)
for v in cert.checks:
    print(f"  {v.name:22s} {'ok' if v.passed else 'FAILED'}")
print("kappa diagonal:", out.kappa.is_diagonal(), " c diagonal:", out.c.is_diagonal())
print("same class as the start:", equiv(out, t).equivalent)

#%%
# A different b lands in the same class.
out2, _ = reduce(synthesize_pentuple(t, b=(1, 1, 0, 0), seed=4))
print("b-independent:", equiv(out, out2).equivalent)

#%%
# Lifting Z2 values to {0, -1} instead of {0, 1} inside the quarter phases
# breaks the lift identity as soon as d b is nonzero somewhere.
chain = reduction_chain(p, lift=(0, -1))
bad = [v for v in check_claim_identities(p, chain) if not v.passed]
print("with {0,-1} lifts:", [(v.name, v.witness) for v in bad])
