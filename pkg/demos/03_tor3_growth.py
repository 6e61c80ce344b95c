"""Tor_3(F^n K, R/(x, y, u+v)) through the Koszul complex, and through Hom(R/J, F^n K)."""
from froblab import experiments as ex

rep = ex.exp_tor3_growth(2, n_max=3)
for r in rep.get("tor3-equals-hom"):
    print(f"n={r.n} tor3={r.value} routes agree={r.passed}")
print("series:", rep.series["tor3"].values)
print("slope of log_p growth:", round(ex.growth_fit(rep.series["tor3"]), 3))
