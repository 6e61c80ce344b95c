"""chi(F^n(R/x), R/(y,u,v)) divided by p^(n codim) stays at 1."""
from froblab import experiments as ex

rep = ex.exp_chi_inf(2, n_max=3)
s = rep.series["chi"]
print("chi values:", s.values, " ratios:", [str(r) for r in s.ratios])
