"""Tor lengths of the homology of F^n(Koszul(x,y,u,v)) against R/(x), R/(x,y), R/(x,y,u+v)."""
from froblab import experiments as ex

rep = ex.exp_codim_bounds(2, n_max=1)
for r in rep.rows:
    if r.claim_id.startswith("tor-"):
        print(f"n={r.n} {r.claim_id:<20} value={r.value} ratio={r.ratio}")
print("asserted claims:", len(rep.assertions), "failures:", len(rep.failures))
print("reduction bound (n=2, i=1):", ex.reduction_bound_cell(2, 2, 1))
