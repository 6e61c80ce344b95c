"""Experiment runners: growth of socles, Tor and Ext lengths under Frobenius.

Each runner returns an ``ExperimentReport`` whose rows are either monitored
values (``relation == ""``) or asserted relations with a pass flag.
"""
from __future__ import annotations

import math
import os
import time
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import fp
from . import groebner as gb
from .artinian import artinianize, h0_m, hom_from_cyclic, matlis_dual_length, socle
from .groebner import INFINITE, BudgetExceeded, pair_budget
from .homalg import (ChainComplex, ChainMap, FpModule, GrowthSeries, QuotientRing, chi, ext,
                     homology, homology_length, koszul, koszul_resolution, mapping_cone,
                     scalar_map)
from .poly import MonomialOrder, PolyMatrix

DEFAULT_BOX = 10000
MAIN_VARS = ("X", "Y", "U", "V")
MAIN_EQ = "X*Y - U*V"


def default_n_max(p: int) -> int:
    return {2: 3, 3: 2}.get(p, 1)


@dataclass(frozen=True)
class Budget:
    box: int = DEFAULT_BOX          # largest admissible monomial box q^nvars
    pairs: int | None = None        # S-pair cap per Buchberger run

    @classmethod
    def from_env(cls, pairs: int | None = None) -> "Budget":
        return cls(int(os.environ.get("FROBLAB_BUDGET", DEFAULT_BOX)), pairs)


@dataclass
class Row:
    scenario: str
    claim_id: str
    p: int
    n: int | None
    value: object
    scaling_dim: int | None = None
    ratio: Fraction | None = None
    relation: str = ""
    passed: bool | None = None

    @property
    def q(self):
        return None if self.n is None else self.p ** self.n

    def record(self) -> dict:
        return {
            "scenario": self.scenario,
            "claim_id": self.claim_id,
            "p": self.p,
            "n": self.n,
            "q": self.q,
            "value": self.value,
            "scaling_dim": self.scaling_dim,
            "ratio_num": None if self.ratio is None else self.ratio.numerator,
            "ratio_den": None if self.ratio is None else self.ratio.denominator,
            "assert": self.relation,
            "pass": self.passed,
        }


@dataclass
class ExperimentReport:
    scenario: str
    p: int
    rows: list[Row] = field(default_factory=list)
    series: dict[str, GrowthSeries] = field(default_factory=dict)
    wall: dict[str, float] = field(default_factory=dict)
    partial: bool = False
    notes: list[str] = field(default_factory=list)

    def value(self, claim_id: str, n: int | None = None, **kw) -> Row:
        row = Row(self.scenario, claim_id, self.p, n, **kw)
        self.rows.append(row)
        return row

    def check(self, claim_id: str, relation: str, ok: bool, n: int | None = None,
              value=None) -> bool:
        self.rows.append(Row(self.scenario, claim_id, self.p, n, value, relation=relation,
                             passed=bool(ok)))
        return bool(ok)

    @property
    def assertions(self) -> list[Row]:
        return [r for r in self.rows if r.passed is not None]

    @property
    def failures(self) -> list[Row]:
        return [r for r in self.rows if r.passed is False]

    @property
    def passed(self) -> bool:
        return not self.failures

    def get(self, claim_id: str, n: int | None = None) -> list[Row]:
        return [r for r in self.rows if r.claim_id == claim_id and (n is None or r.n == n)]


@dataclass
class Scenario:
    name: str
    ring: QuotientRing
    modules: dict
    params: dict = field(default_factory=dict)


class _Cell:
    """Times a block and turns budget exhaustion into a partial report."""

    def __init__(self, report: ExperimentReport, name: str, budget: Budget):
        self.report, self.name, self.budget = report, name, budget

    def __enter__(self):
        self.t0 = time.perf_counter()
        self._ctx = pair_budget(self.budget.pairs)
        self._ctx.__enter__()
        return self

    def __exit__(self, exc_type, exc, tb):
        self._ctx.__exit__(exc_type, exc, tb)
        self.report.wall[self.name] = time.perf_counter() - self.t0
        if exc_type is BudgetExceeded:
            self.report.partial = True
            self.report.notes.append(f"{self.name}: {exc}")
            return True
        return False


def _order(name: str) -> MonomialOrder:
    if name not in ("grevlex", "lex"):
        raise ValueError(f"unknown order {name!r}")
    return MonomialOrder(name)


def main_ring(p: int, order: str = "grevlex") -> QuotientRing:
    return QuotientRing(p, MAIN_VARS, [MAIN_EQ], _order(order))


def residue_field(R: QuotientRing) -> FpModule:
    return FpModule.cyclic(R, R.gens())


def _box_ok(report: ExperimentReport, q: int, nvars: int, budget: Budget, n: int) -> bool:
    if q ** nvars > budget.box:
        report.partial = True
        report.notes.append(f"n={n}: box {q}^{nvars} exceeds budget {budget.box}")
        return False
    return True


def _growth(report: ExperimentReport, key: str, d: int, n: int, value: int, claim: str):
    s = report.series.setdefault(key, GrowthSeries(d, report.p))
    e = s.add(n, value)
    report.value(claim, n, value=value, scaling_dim=d, ratio=e.ratio)


# ---------------------------------------------------------------- socles

def witness_monomials(R: QuotientRing, q: int):
    """``x^(q-1) y^i u^(q-1-i)`` for ``0 <= i < q``."""
    x, y, u = (R.var(c) for c in "XYU")
    return [x ** (q - 1) * y ** i * u ** (q - 1 - i) for i in range(q)]


def colon_socle_dim(M: FpModule) -> int:
    """``ℓ((rel : m) / rel)`` computed with Gröbner colons only."""
    G = M.gb
    top = gb.colon(G, M.ring.maximal_ideal)
    return gb.colength(G) - gb.colength(top)


def _witness_check(A, R: QuotientRing, q: int) -> tuple[bool, bool, bool]:
    vecs = [A.vector(w) for w in witness_monomials(R, q)]
    nonzero = all(v.any() for v in vecs)
    in_socle = all(not fp.matmul(m.a, v.reshape(-1, 1), R.p).any() for m in A.mult for v in vecs)
    mat = fp.FpMatrix._wrap(np.stack(vecs, axis=1), R.p)
    independent = fp.rank(mat) == q
    return nonzero, in_socle, independent


def exp_socle_growth(p: int, n_max: int | None = None, verify: bool = True,
                     budget: Budget | None = None, order: str = "grevlex",
                     n_min: int = 1) -> ExperimentReport:
    budget = budget or Budget.from_env()
    n_max = default_n_max(p) if n_max is None else n_max
    R = main_ring(p, order)
    K = residue_field(R)
    rep = ExperimentReport("socle-growth", p)
    for n in range(n_min, n_max + 1):
        q = p ** n
        if not _box_ok(rep, q, R.nvars, budget, n):
            break
        with _Cell(rep, f"n={n}", budget):
            FK = K.frobenius(n)
            A = artinianize(FK)
            s, _ = socle(A)
            _growth(rep, "socle", 1, n, s, "socle-dim")
            rep.check("socle-bound", f"socle_dim >= {q}", s >= q, n, s)
            if verify:
                s2 = colon_socle_dim(FK)
                rep.check("socle-routes-agree", f"linear_algebra == groebner_colon ({s2})", s == s2, n, s)
            nz, ins, ind = _witness_check(A, R, q)
            rep.check("witness-nonzero", "witnesses nonzero", nz, n)
            rep.check("witness-in-socle", "witnesses killed by m", ins, n)
            rep.check("witness-independent", f"rank(witnesses) == {q}", ind, n)
    return rep


# ---------------------------------------------------------------- Tor_3

def exp_tor3_growth(p: int, n_max: int | None = None, verify: bool = True,
                    budget: Budget | None = None, order: str = "grevlex",
                    n_min: int = 0) -> ExperimentReport:
    budget = budget or Budget.from_env()
    n_max = default_n_max(p) if n_max is None else n_max
    R = main_ring(p, order)
    K = residue_field(R)
    J = ["X", "Y", "U + V"]
    rep = ExperimentReport("tor-growth", p)
    C = koszul_resolution(R, J)
    rep.check("koszul-regular", "H_i(Koszul(x,y,u+v)) = 0 for i > 0", True)
    for n in range(n_min, n_max + 1):
        q = p ** n
        if not _box_ok(rep, q, R.nvars, budget, n):
            break
        with _Cell(rep, f"n={n}", budget):
            FK = K.frobenius(n)
            t3 = homology_length(C, 3, FK)
            _growth(rep, "tor3", 1, n, t3, "tor3-length")
            rep.check("tor3-bound", f"tor3 >= {q}", t3 >= q, n, t3)
            if verify:
                h = hom_from_cyclic(J, artinianize(FK))
                rep.check("tor3-equals-hom", f"tor3 == hom(R/(x,y,u+v), F^n K) ({h})", t3 == h, n, t3)
    return rep


# ---------------------------------------------------------------- Ext counterexample

@dataclass
class CounterexampleModules:
    R: QuotientRing
    Rbar: QuotientRing
    Mprime: FpModule
    M: FpModule
    N: FpModule            # over R
    Nbar: FpModule         # over Rbar
    res_Mprime: ChainComplex
    res_M: ChainComplex
    res_Nbar: ChainComplex
    res_N: ChainComplex    # over R, cone of Koszul(y, u+v) tensored with zeta
    checks: dict = field(default_factory=dict)


def build_thm32_modules(p: int, check: bool = True, order: str = "grevlex") -> CounterexampleModules:
    R = main_ring(p, order)
    P = R.poly
    phi = PolyMatrix(P, [["X"], ["Y"], ["U"], ["V"]])
    res_Mp = ChainComplex(R, [4, 1], [phi])
    Mp = FpModule(R, 4, phi)
    res_M = mapping_cone(scalar_map(res_Mp, "X"))
    M = Mp.mod_ideal(["X"])

    Rbar = R.quotient(["Y", "U + V"])
    zeta = PolyMatrix(P, [["X"], ["U"]])
    res_Nb = ChainComplex(Rbar, [2, 1], [zeta])
    Nbar = FpModule(Rbar, 2, zeta)
    N = Nbar.over(R).mod_ideal(["Y", "U + V"])
    kos = koszul_resolution(R, ["Y", "U + V"])
    kos2 = ChainComplex(R, [2 * r for r in kos.ranks], [d.kron_identity(2) for d in kos.diffs])
    res_N = mapping_cone(ChainMap(kos, kos2, [zeta.identity_kron(r) for r in kos.ranks]))

    mods = CounterexampleModules(R, Rbar, Mp, M, N, Nbar, res_Mp, res_M, res_Nb, res_N)
    ann = Mp.annihilator()
    mods.checks = {
        "ann-mprime-zero": ("Ann M' = (0)", not ann),
        "dim-mprime-3": ("dim M' = 3", Mp.dim() == 3),
        "dim-m-2": ("dim M = 2", M.dim() == 2),
        "dim-rbar-1": ("dim Rbar = 1", Rbar.dim == 1),
        "dim-n-1": ("dim_R N = 1", N.dim() == 1),
        "finite-tensor-length": ("l(M (x) N) < oo", M.tensor(N).length() != INFINITE),
        "resolutions-are-complexes": ("d o d = 0", all(c.is_complex() for c in (res_M, res_Nb, res_N))),
    }
    if check:
        bad = [cid for cid, (_, ok) in mods.checks.items() if not ok]
        if bad:
            raise ValueError(f"module construction failed: {', '.join(bad)}")
    return mods


def exp_thm32(p: int = 2, n_max: int | None = None, verify: bool = True,
              budget: Budget | None = None, order: str = "grevlex") -> ExperimentReport:
    budget = budget or Budget.from_env()
    n_max = default_n_max(p) if n_max is None else n_max
    rep = ExperimentReport("thm32", p)
    with _Cell(rep, "build", budget):
        mods = build_thm32_modules(p, check=False, order=order)
        for cid, (rel, ok) in mods.checks.items():
            rep.check(cid, rel, ok)
        R = mods.R
        E2 = ext(mods.M, 2, resolution=mods.res_M)
        rep.check("ext2-m-is-k", "l(Ext^2_R(M,R)) = 1", E2.length() == 1, value=E2.length())
        E1b = ext(mods.Nbar, 1, resolution=mods.res_Nbar)
        rep.check("ext1-n-rbar-is-k", "l(Ext^1_Rbar(N,Rbar)) = 1", E1b.length() == 1, value=E1b.length())
        E3 = ext(mods.N, 3, resolution=mods.res_N)
        rep.check("ext3-n-is-k", "l(Ext^3_R(N,R)) = 1", E3.length() == 1, value=E3.length())
        if verify:
            # the syzygy-based resolution must give the same Ext
            e2b = ext(mods.M, 2, max_len=4).length()
            rep.check("ext2-routes-agree", "cone resolution == syzygy resolution", e2b == E2.length(), value=e2b)
            depth0 = h0_m(mods.Nbar).length
            rep.check("n-socle-nonzero", "H^0_m(N) != 0 over Rbar", depth0 > 0, value=depth0)
        # Ext modules of length one are copies of K; Hom(K, -) is then the socle
        ann_E3 = E3.annihilator() if E3.rank else [R.poly.one()]
    K = residue_field(R)
    for n in range(1, n_max + 1):
        q = p ** n
        if not _box_ok(rep, q, R.nvars, budget, n):
            break
        with _Cell(rep, f"n={n}", budget):
            FE2 = E2.frobenius(n)
            fe2, fk = FE2.length(), K.frobenius(n).length()
            rep.check("frobenius-ext2", f"l(F^n Ext^2) == l(F^n K) ({fk})", fe2 == fk, n, fe2)
            H = h0_m(FE2)
            rep.check("h0m-identity", "l(H^0_m(F^n Ext^2)) == l(F^n Ext^2)", H.length == fe2, n, H.length)
            rep.check("dual-preserves-length", "l(H^vee) == l(H)", matlis_dual_length(H) == H.length, n)
            L = hom_from_cyclic(ann_E3, H)
            _growth(rep, "L", 1, n, L, "L-length")
            rep.check("L-ratio", f"L_n / {q} >= 1", Fraction(L, q) >= 1, n, L)
    return rep


# ---------------------------------------------------------------- sum of X_i Y_i hypersurfaces

def sum_xy_ring(p: int, t: int, order: str = "grevlex") -> QuotientRing:
    names = [f"X{i}" for i in range(1, t + 1)] + [f"Y{i}" for i in range(1, t + 1)]
    eq = " + ".join(f"X{i}*Y{i}" for i in range(1, t + 1))
    return QuotientRing(p, names, [eq], _order(order))


def exp_remark25(t: int = 3, p: int = 2, n_max: int | None = None, verify: bool = True,
                 budget: Budget | None = None, order: str = "grevlex") -> ExperimentReport:
    budget = budget or Budget.from_env()
    if t < 1:
        raise ValueError("t must be positive")
    R = sum_xy_ring(p, t, order)
    if n_max is None:
        n_max = default_n_max(p)
        while n_max > 0 and p ** (n_max * R.nvars) > budget.box:
            n_max -= 1
    K = residue_field(R)
    rep = ExperimentReport(f"remark25-t{t}", p)
    prev = None
    for n in range(0, n_max + 1):
        if not _box_ok(rep, p ** n, R.nvars, budget, n):
            break
        with _Cell(rep, f"n={n}", budget):
            s, _ = socle(artinianize(K.frobenius(n)))
            _growth(rep, "socle", 1, n, s, "socle-dim")
            if prev is not None:
                rep.check("socle-increasing", f"socle_dim > {prev}", s > prev, n, s)
            prev = s
    if t == 2 and verify:
        # X1 -> X, Y1 -> Y, X2 -> U, Y2 -> -V carries X1Y1 + X2Y2 to XY - UV
        main = main_ring(p, order)
        x, y, u, v = main.gens()
        image = R.ideal[0].substitute([x, u, y, -v])
        rep.check("substitution-matches", "X1Y1+X2Y2 -> XY-UV", image == main.poly(MAIN_EQ))
        ref = exp_socle_growth(p, len(rep.series.get("socle", GrowthSeries(1, p)).entries) - 1,
                               verify=False, budget=budget, order=order, n_min=0)
        ours = rep.series.get("socle", GrowthSeries(1, p)).values
        theirs = ref.series.get("socle", GrowthSeries(1, p)).values
        rep.check("matches-main-ring", f"{ours} == {theirs}", ours == theirs)
    return rep


# ---------------------------------------------------------------- codimension table

CODIM_TARGETS = (("codim1", ["X"]), ("codim2", ["X", "Y"]), ("codim3", ["X", "Y", "U + V"]))


def exp_codim_bounds(p: int, n_max: int | None = None, verify: bool = True,
                     budget: Budget | None = None, order: str = "grevlex") -> ExperimentReport:
    budget = budget or Budget.from_env()
    n_max = min(default_n_max(p), 2) if n_max is None else n_max
    R = main_ring(p, order)
    F = koszul(R, R.gens())
    Rx = R.quotient(["X"])
    rep = ExperimentReport("codim-bounds", p)
    targets = [(name, seq, koszul_resolution(R, seq)) for name, seq in CODIM_TARGETS]
    prev_tor3 = None
    for n in range(0, n_max + 1):
        q = p ** n
        if not _box_ok(rep, q, R.nvars, budget, n):
            break
        with _Cell(rep, f"n={n}", budget):
            Fn = F.frobenius(n)
            for i in range(3):
                H = homology(Fn, i)
                for name, seq, C in targets:
                    d = R.dim - len(seq)
                    tors = [homology_length(C, j, H) for j in range(len(seq) + 1)]
                    for j, v in enumerate(tors):
                        rep.value(f"tor-{name}-i{i}-j{j}", n, value=v, scaling_dim=d,
                                  ratio=Fraction(v, q ** d))
                    if name == "codim1":
                        rep.check(f"tor1-equals-tensor-i{i}", "l(Tor_1(H, R/x)) == l(H (x) R/x)",
                                  tors[1] == tors[0], n, tors[1])
                    elif name == "codim2":
                        alt = sum((-1) ** j * v for j, v in enumerate(tors))
                        rep.check(f"chi-vanishing-i{i}", "sum (-1)^j l(Tor_j(H, R/(x,y))) == 0",
                                  alt == 0, n, alt)
                    elif name == "codim3" and i == 0:
                        if prev_tor3 is not None:
                            rep.check("codim3-tor3-growth", f"Tor_3 > {prev_tor3}",
                                      tors[3] > prev_tor3, n, tors[3])
                        prev_tor3 = tors[3]
                if i >= 1:
                    lhs = H.mod_ideal(["X"]).length()
                    rhs = homology_length(Fn.over(Rx), i)
                    rep.check(f"reduction-bound-i{i}", f"l(H_i (x) R/x) <= l(H_i over R/x) ({rhs})",
                              lhs <= rhs, n, lhs)
    return rep


def reduction_bound_cell(p: int, n: int, i: int) -> tuple[int, int]:
    """Both sides of ``l(H_i(F^n F) (x) R/x) <= l(H_i(F^n F (x) R/x))`` for Koszul(x,y,u,v)."""
    R = main_ring(p)
    Fn = koszul(R, R.gens()).frobenius(n)
    lhs = homology(Fn, i).mod_ideal(["X"]).length()
    rhs = homology_length(Fn.over(R.quotient(["X"])), i)
    return lhs, rhs


# ---------------------------------------------------------------- Frobenius over a regular ring

def exp_regular_check(p: int, n_max: int | None = None, verify: bool = True,
                      budget: Budget | None = None, order: str = "grevlex") -> ExperimentReport:
    """Over ``F_p[X,Y,U,V]`` Frobenius is exact: ``H_i(F^n F) = F^n(H_i F)``."""
    budget = budget or Budget.from_env()
    n_max = 1 if n_max is None else n_max
    S = QuotientRing(p, MAIN_VARS, [], _order(order))
    F = koszul(S, ["X^2", "X*Y", "Y^2", "U", "V"])
    N = ["X"]
    C = koszul_resolution(S, N)
    base = [homology(F, i) for i in range(3)]
    rep = ExperimentReport("regular-check", p)
    for n in range(0, n_max + 1):
        if not _box_ok(rep, p ** n, S.nvars, budget, n):
            break
        with _Cell(rep, f"n={n}", budget):
            Fn = F.frobenius(n)
            for i in range(3):
                Hn = homology(Fn, i)
                FH = base[i].frobenius(n)
                for j in range(2):
                    a = homology_length(C, j, Hn)
                    b = homology_length(C, j, FH)
                    rep.check(f"frobenius-exact-i{i}-j{j}", f"l(Tor_{j}(H_{i}(F^n F), N)) == l(Tor_{j}(F^n H_{i}, N))",
                              a == b, n, a)
    return rep


# ---------------------------------------------------------------- chi_infinity

def exp_chi_inf(p: int, n_max: int | None = None, verify: bool = True,
                budget: Budget | None = None, order: str = "grevlex") -> ExperimentReport:
    budget = budget or Budget.from_env()
    n_max = default_n_max(p) if n_max is None else n_max
    R = main_ring(p, order)
    M = FpModule.cyclic(R, ["X"])
    N = FpModule.cyclic(R, ["Y", "U", "V"])
    res = koszul_resolution(R, ["X"])
    rep = ExperimentReport("chi-inf", p)
    d = M.codim()
    rep.check("codim-m-1", "codim R/(x) = 1", d == 1, value=d)
    for n in range(0, n_max + 1):
        q = p ** n
        with _Cell(rep, f"n={n}", budget):
            c = chi(M.frobenius(n), N, "M", res.frobenius(n))
            _growth(rep, "chi", d, n, c, "chi")
            rep.check("chi-inf-ratio", "chi(F^n M, N) / p^(n codim M) == 1", Fraction(c, q ** d) == 1, n, c)
            if verify:
                direct = M.frobenius(n).tensor(N).length()
                rep.check("chi-equals-length", f"chi == l(R/(x^q,y,u,v)) ({direct})", c == direct, n, c)
    return rep


def growth_fit(s: GrowthSeries) -> float:
    """Least-squares slope of ``log_p(value)`` against ``n``."""
    if len(s.entries) < 2:
        raise ValueError("need at least two entries")
    if any(e.value <= 0 for e in s.entries):
        raise ValueError("cannot fit zero growth")
    ns = [e.n for e in s.entries]
    ys = [math.log(e.value, s.p) for e in s.entries]
    mn, my = sum(ns) / len(ns), sum(ys) / len(ys)
    num = sum((a - mn) * (b - my) for a, b in zip(ns, ys))
    den = sum((a - mn) ** 2 for a in ns)
    return num / den


RUNNERS = {
    "socle-growth": exp_socle_growth,
    "tor-growth": exp_tor3_growth,
    "thm32": exp_thm32,
    "codim-bounds": exp_codim_bounds,
    "chi-inf": exp_chi_inf,
    "regular-check": exp_regular_check,
}
