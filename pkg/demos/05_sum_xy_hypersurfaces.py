"""Socle growth over F_p[X_1..X_t, Y_1..Y_t]/(sum X_i Y_i)."""
from froblab import experiments as ex

for t in (2, 3):
    rep = ex.exp_remark25(t, 2)
    print(f"t={t} socle dims {rep.series['socle'].values} passed={rep.passed}")
