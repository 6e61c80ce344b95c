"""Socle dimension of F^n(K) over F_p[X,Y,U,V]/(XY - UV)."""
from froblab import experiments as ex

for p in (2, 3):
    rep = ex.exp_socle_growth(p, n_max=2)
    s = rep.series["socle"]
    print(f"p={p} socle dims {s.values}  ratios to p^n {[str(r) for r in s.ratios]}  passed={rep.passed}")

# the witnesses x^i y^(q-1-i) sit in the socle and are linearly independent
R = ex.main_ring(2)
print("witnesses for q=4:", ex.witness_monomials(R, 4))
