"""Modules M, N with l(M (x) N) finite where Ext and local cohomology grow under Frobenius."""
from froblab import experiments as ex

mods = ex.build_thm32_modules(2)
print("dim M' =", mods.Mprime.dim(), " dim M =", mods.M.dim(), " dim R/(y,u+v) =", mods.Rbar.dim)
print("resolution ranks of M:", mods.res_M.ranks)
rep = ex.exp_thm32(2, n_max=3)
L = rep.series["L"]
print("L_n =", L.values, " L_n / 2^n =", [str(r) for r in L.ratios])
print("all checks passed:", rep.passed)
