"""Quotient rings, finitely presented modules and complexes of free modules.

A ``QuotientRing`` is ``F_p[x_1..x_n] / I``.  Modules are cokernels of
polynomial matrices; the submodule ``I * R^r`` is always appended
implicitly, so every computation really happens in the ambient polynomial
ring.  Lengths are counts of standard monomials.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from . import groebner as gb
from .groebner import INFINITE, GroebnerBasis, _Ctx, _Elem, _buchberger
from .poly import GREVLEX, MonomialOrder, Poly, PolyMatrix, PolyRing, VecPoly


class QuotientRing:
    """``F_p[names] / (gens)``."""

    def __init__(self, p: int, names, gens=(), order: MonomialOrder = GREVLEX):
        self.poly = PolyRing(p, names, order)
        self.p = p
        self.names = self.poly.names
        self.nvars = self.poly.nvars
        self.ideal = [self.poly(g) for g in gens]
        self.ideal = [g for g in self.ideal if not g.is_zero()]
        self.gb = gb.buchberger(self.ideal, self.poly.order, 1, ring=self.poly)
        if self.gb.is_unit():
            raise ValueError("not a ring quotient of interest")
        self.dim = gb.krull_dim(self.gb)
        self._free: dict[int, GroebnerBasis] = {}

    def __repr__(self):
        rel = ", ".join(map(str, self.ideal)) or "0"
        return f"QuotientRing(F_{self.p}[{','.join(self.names)}]/({rel}))"

    def __call__(self, text) -> Poly:
        return self.reduce(self.poly(text))

    def gens(self) -> list[Poly]:
        return self.poly.gens()

    def var(self, name: str) -> Poly:
        return self.poly.var(name)

    @property
    def maximal_ideal(self) -> list[Poly]:
        return self.poly.gens()

    def reduce(self, f: Poly) -> Poly:
        return gb.normal_form(f, self.gb)

    def is_zero(self, f: Poly) -> bool:
        return gb.contains(self.gb, f)

    def quotient(self, extra) -> "QuotientRing":
        """``self / (extra)`` with the same variables."""
        return QuotientRing(self.p, self.names, [*self.ideal, *[self.poly(g) for g in extra]],
                            self.poly.order)

    def free_gb(self, rank: int) -> GroebnerBasis:
        """Gröbner basis of ``I * R^rank``."""
        if rank not in self._free:
            elems = [_Elem({(j, e): c for (_, e), c in g.terms.items()}, (j, g.lead[1]))
                     for j in range(rank) for g in self.gb.elems]
            self._free[rank] = GroebnerBasis(self.poly, rank, elems, self.poly.order)
        return self._free[rank]

    def ideal_terms(self, rank: int) -> list[dict]:
        return [dict(g.terms) for g in self.free_gb(rank).elems]


def quotient_ring(p: int, names, gens=()) -> QuotientRing:
    return QuotientRing(p, names, gens)


def submodule_gb(ring: QuotientRing, rank: int, columns) -> GroebnerBasis:
    """Basis of ``<columns> + I * R^rank`` (columns are VecPoly or term dicts)."""
    start = ring.free_gb(rank)
    ctx = _Ctx(start.order, ring.p)
    st = [_Elem(dict(g.terms), g.lead) for g in start.elems]
    inputs = [(dict(c.terms) if isinstance(c, VecPoly) else dict(c), None) for c in columns]
    elems = _buchberger(inputs, ctx, st)
    return GroebnerBasis(ring.poly, rank, elems, start.order)


def _col_terms(m: PolyMatrix) -> list[dict]:
    return [dict(m.column(j).terms) for j in range(m.cols)]


def _matrix(ring: QuotientRing, rows: int, cols: list[dict]) -> PolyMatrix:
    vecs = [VecPoly(ring.poly, rows, c) for c in cols]
    if not vecs:
        return PolyMatrix.zeros(ring.poly, rows, 0)
    return PolyMatrix.from_columns(ring.poly, rows, vecs)


def _as_matrix(ring: QuotientRing, m) -> PolyMatrix:
    if isinstance(m, PolyMatrix):
        return m
    return PolyMatrix(ring.poly, [[ring.poly(x) for x in row] for row in m])


class FpModule:
    """``R^rank / (column span of relations + I R^rank)``."""

    def __init__(self, ring: QuotientRing, rank: int, relations: PolyMatrix | None = None):
        if relations is None:
            relations = PolyMatrix.zeros(ring.poly, rank, 0)
        if relations.rows != rank:
            raise ValueError("relations must have one row per generator")
        self.ring = ring
        self.rank = rank
        self.relations = relations

    @classmethod
    def cyclic(cls, ring: QuotientRing, ideal) -> "FpModule":
        """``R / (ideal)``."""
        gens = [ring.poly(g) for g in ideal]
        return cls(ring, 1, PolyMatrix(ring.poly, [gens], 1, len(gens)))

    @classmethod
    def free(cls, ring: QuotientRing, rank: int) -> "FpModule":
        return cls(ring, rank)

    @classmethod
    def coker(cls, ring: QuotientRing, matrix) -> "FpModule":
        m = _as_matrix(ring, matrix)
        return cls(ring, m.rows, m)

    def __repr__(self):
        return f"FpModule(rank={self.rank}, relations={self.relations.cols})"

    @cached_property
    def gb(self) -> GroebnerBasis:
        return submodule_gb(self.ring, self.rank, _col_terms(self.relations))

    def std_monomials(self, limit: int | None = None) -> gb.StdMonomialSet:
        return gb.std_monomials(self.gb, limit)

    def length(self):
        return gb.colength(self.gb)

    def dim(self) -> int:
        return gb.krull_dim(self.gb)

    def codim(self) -> int:
        return self.ring.dim - self.dim()

    def is_zero(self) -> bool:
        return self.rank == 0 or self.gb.is_unit()

    def annihilator(self) -> list[Poly]:
        if self.rank == 0:
            return [self.ring.poly.one()]
        ann = gb.annihilator(self.gb)
        out = [Poly(self.ring.poly, {e: c for (_, e), c in g.terms.items()}) for g in ann.elems]
        # drop what already lies in I
        return [f for f in out if not self.ring.is_zero(f)]

    def frobenius(self, n: int) -> "FpModule":
        if n < 0:
            raise ValueError("negative Frobenius power")
        if n == 0:
            return self
        q = self.ring.p ** n
        return FpModule(self.ring, self.rank, self.relations.map_entries(lambda f: f.frobenius(q)))

    def tensor(self, other: "FpModule") -> "FpModule":
        r, s = self.rank, other.rank
        rel = self.relations.kron_identity(s).hstack(other.relations.identity_kron(r))
        return FpModule(self.ring, r * s, rel)

    def mod_ideal(self, ideal) -> "FpModule":
        """``M / J M``, that is ``M (x) R/J``."""
        gens = [self.ring.poly(g) for g in ideal]
        extra = [VecPoly.unit(self.ring.poly, self.rank, j, g) for j in range(self.rank) for g in gens]
        if not extra:
            return self
        return FpModule(self.ring, self.rank,
                        self.relations.hstack(PolyMatrix.from_columns(self.ring.poly, self.rank, extra)))

    def over(self, ring: QuotientRing) -> "FpModule":
        """The same presentation read over another quotient of the same polynomial ring."""
        if ring.poly != self.ring.poly:
            raise ValueError("rings differ")
        return FpModule(ring, self.rank, self.relations)

    def prune(self) -> "FpModule":
        cols, rank = _prune(self.ring, self.rank, _col_terms(self.relations))
        return FpModule(self.ring, rank, _matrix(self.ring, rank, cols))

    def minimal_relations(self) -> "FpModule":
        cols = minimal_generators(self.ring, self.rank, _col_terms(self.relations))
        return FpModule(self.ring, self.rank, _matrix(self.ring, self.rank, cols))


# ---------------------------------------------------------------- pruning

def _reduce_cols(ring: QuotientRing, rank: int, cols: list[dict]) -> list[dict]:
    base = ring.free_gb(rank)
    out = []
    for c in cols:
        r = base.reduce_terms(c)
        if r:
            out.append(r)
    return out


def _prune(ring: QuotientRing, rank: int, cols: list[dict]) -> tuple[list[dict], int]:
    """Cancel generators against relations with a nonzero constant entry."""
    p = ring.p
    zero = (0,) * ring.nvars
    cols = _reduce_cols(ring, rank, cols)
    while True:
        pivot = None
        for k, col in enumerate(cols):
            comps: dict[int, list] = {}
            for (c, e), v in col.items():
                comps.setdefault(c, []).append((e, v))
            for r in sorted(comps):
                entry = comps[r]
                if len(entry) == 1 and entry[0][0] == zero:
                    pivot = (k, r, entry[0][1])
                    break
            if pivot:
                break
        if pivot is None:
            return cols, rank
        k, r, c = pivot
        inv = pow(c, -1, p)
        pcol = cols[k]
        new = []
        for j, col in enumerate(cols):
            if j == k:
                continue
            a = {e: v for (cc, e), v in col.items() if cc == r}
            col = dict(col)
            if a:
                # col -= (a / c) * pcol
                for (cc, e2), v2 in pcol.items():
                    for e1, v1 in a.items():
                        t = (cc, tuple(x + y for x, y in zip(e1, e2)))
                        nv = (col.get(t, 0) - v1 * inv * v2) % p
                        if nv:
                            col[t] = nv
                        else:
                            col.pop(t, None)
            assert not any(cc == r for cc, _ in col)
            new.append({(cc - (cc > r), e): v for (cc, e), v in col.items()})
        rank -= 1
        cols = _reduce_cols(ring, rank, new)


def minimal_generators(ring: QuotientRing, rank: int, cols: list[dict],
                       shifts: list[int] | None = None) -> list[dict]:
    """Greedy generating subset, scanning in ascending degree.

    For homogeneous input this is a minimal generating set.
    """
    shifts = shifts or [0] * rank
    cols = _reduce_cols(ring, rank, cols)

    def degree(c):
        return max(sum(e) + shifts[k] for k, e in c)

    order = sorted(range(len(cols)), key=lambda i: (degree(cols[i]), i))
    cur = ring.free_gb(rank)
    kept = []
    for i in order:
        if not cur.reduce_terms(cols[i]):
            continue
        kept.append(i)
        cur = gb.buchberger([VecPoly(ring.poly, rank, cols[i])], start=cur)
    kept.sort(key=lambda i: (degree(cols[i]), i))
    return [cols[i] for i in kept]


# ---------------------------------------------------------------- complexes

class ChainComplex:
    """Free modules ``R^{ranks[i]}`` with ``d_i : R^{ranks[i]} -> R^{ranks[i-1]}``."""

    def __init__(self, ring: QuotientRing, ranks: list[int], diffs: list[PolyMatrix]):
        if len(diffs) != max(len(ranks) - 1, 0):
            raise ValueError("need one differential per positive degree")
        for i, d in enumerate(diffs, start=1):
            if (d.rows, d.cols) != (ranks[i - 1], ranks[i]):
                raise ValueError(f"d_{i} has shape {d.rows}x{d.cols}, expected {ranks[i-1]}x{ranks[i]}")
        self.ring = ring
        self.ranks = list(ranks)
        self.diffs = list(diffs)

    @property
    def length(self) -> int:
        return len(self.ranks) - 1

    def rank(self, i: int) -> int:
        return self.ranks[i] if 0 <= i < len(self.ranks) else 0

    def d(self, i: int) -> PolyMatrix:
        """``d_i`` including the zero maps outside the stored range."""
        if 1 <= i <= len(self.diffs):
            return self.diffs[i - 1]
        return PolyMatrix.zeros(self.ring.poly, self.rank(i - 1), self.rank(i))

    def is_complex(self) -> bool:
        """``d_i d_{i+1} = 0`` modulo ``I`` for every ``i``."""
        for i in range(1, self.length):
            prod = self.d(i) @ self.d(i + 1)
            if any(not self.ring.is_zero(f) for row in prod.entries for f in row):
                return False
        return True

    def frobenius(self, n: int) -> "ChainComplex":
        if n == 0:
            return self
        q = self.ring.p ** n
        return ChainComplex(self.ring, self.ranks, [d.map_entries(lambda f: f.frobenius(q)) for d in self.diffs])

    def over(self, ring: QuotientRing) -> "ChainComplex":
        """Base change to another quotient of the same polynomial ring."""
        if ring.poly != self.ring.poly:
            raise ValueError("rings differ")
        return ChainComplex(ring, self.ranks, self.diffs)

    def __eq__(self, other):
        return (isinstance(other, ChainComplex) and self.ranks == other.ranks
                and all(a.map_entries(self.ring.reduce) == b.map_entries(self.ring.reduce)
                        for a, b in zip(self.diffs, other.diffs)))

    def __repr__(self):
        return f"ChainComplex(ranks={self.ranks})"


def frobenius(x, n: int):
    """Frobenius functor on a module or complex."""
    return x.frobenius(n)


def koszul(ring: QuotientRing, seq) -> ChainComplex:
    """Koszul complex on ``seq``; basis of degree ``i`` is the ``i``-subsets."""
    seq = [ring.poly(s) for s in seq]
    if not seq:
        raise ValueError("empty sequence")
    n = len(seq)
    subsets = [list(itertools.combinations(range(n), i)) for i in range(n + 1)]
    index = [{s: k for k, s in enumerate(level)} for level in subsets]
    diffs = []
    zero = ring.poly.zero()
    for i in range(1, n + 1):
        rows, cols = len(subsets[i - 1]), len(subsets[i])
        m = [[zero] * cols for _ in range(rows)]
        for j, S in enumerate(subsets[i]):
            for pos, v in enumerate(S):
                T = S[:pos] + S[pos + 1:]
                m[index[i - 1][T]][j] = seq[v] if pos % 2 == 0 else -seq[v]
        diffs.append(PolyMatrix(ring.poly, m, rows, cols))
    return ChainComplex(ring, [len(level) for level in subsets], diffs)


@dataclass
class ChainMap:
    source: ChainComplex
    target: ChainComplex
    maps: list[PolyMatrix]   # maps[i] : source_i -> target_i

    def f(self, i: int) -> PolyMatrix:
        if 0 <= i < len(self.maps):
            return self.maps[i]
        return PolyMatrix.zeros(self.source.ring.poly, self.target.rank(i), self.source.rank(i))

    def commutes(self) -> bool:
        ring = self.source.ring
        top = max(self.source.length, self.target.length) + 1
        for i in range(1, top + 1):
            lhs = self.target.d(i) @ self.f(i)
            rhs = self.f(i - 1) @ self.source.d(i)
            diff = lhs + (-rhs)
            if any(not ring.is_zero(x) for row in diff.entries for x in row):
                return False
        return True


def scalar_map(C: ChainComplex, f) -> ChainMap:
    """Multiplication by ``f`` from ``C`` to itself."""
    f = C.ring.poly(f)
    return ChainMap(C, C, [PolyMatrix.identity(C.ring.poly, r, f) for r in C.ranks])


def _block(ring: PolyRing, blocks: list[list[PolyMatrix]]) -> PolyMatrix:
    rows = [blk[0].hstack(*blk[1:]) for blk in blocks]
    return rows[0].vstack(*rows[1:])


def mapping_cone(fmap: ChainMap) -> ChainComplex:
    """Cone with ``C_i = A_{i-1} + B_i`` and ``d(a, b) = (-d a, f a + d b)``."""
    if not fmap.commutes():
        raise ValueError("map does not commute with the differentials")
    A, B = fmap.source, fmap.target
    ring = A.ring
    top = max(A.length + 1, B.length)
    ranks = [A.rank(i - 1) + B.rank(i) for i in range(top + 1)]
    diffs = []
    for i in range(1, top + 1):
        blocks = [[-A.d(i - 1), PolyMatrix.zeros(ring.poly, A.rank(i - 2), B.rank(i))],
                  [fmap.f(i - 1), B.d(i)]]
        diffs.append(_block(ring.poly, blocks))
    while len(ranks) > 1 and ranks[-1] == 0:
        ranks.pop()
        diffs.pop()
    return ChainComplex(ring, ranks, diffs)


def dual(C: ChainComplex) -> ChainComplex:
    """``Hom(C, R)`` reindexed as a chain complex: degree ``k`` is ``C_{L-k}``."""
    L = C.length
    ranks = [C.rank(L - k) for k in range(L + 1)]
    diffs = [C.d(L - k + 1).transpose() for k in range(1, L + 1)]
    return ChainComplex(C.ring, ranks, diffs)


# ---------------------------------------------------------------- homology

def _subquotient(ring: QuotientRing, kernel_of: PolyMatrix | None, image_of: PolyMatrix,
                 rank: int, base_rel: list[dict], target_rel: list[dict]) -> FpModule:
    """``ker(kernel_of mod target_rel) / (im image_of + base_rel)`` inside ``R^rank``."""
    poly = ring.poly
    zero = (0,) * ring.nvars
    if kernel_of is None or kernel_of.rows == 0:
        K = [{(j, zero): 1} for j in range(rank)]
    else:
        extra = target_rel + ring.ideal_terms(kernel_of.rows)
        K = gb.syzygy_terms(_col_terms(kernel_of), poly, kernel_of.rows, poly.order, extra)
        K = minimal_generators(ring, rank, K)
    if not K:
        return FpModule(ring, 0)
    extra = _col_terms(image_of) + base_rel + ring.ideal_terms(rank)
    rel = gb.syzygy_terms(K, poly, rank, poly.order, extra)
    return FpModule(ring, len(K), _matrix(ring, len(K), rel)).prune()


def _terms(C: ChainComplex, N: FpModule | None, i: int):
    """Presentation data of ``C_i (x) N``: (rank, relation columns, differential)."""
    r = 1 if N is None else N.rank
    rel = [] if N is None else _col_terms(N.relations.identity_kron(C.rank(i)))
    d = C.d(i) if N is None else C.d(i).kron_identity(r)
    return C.rank(i) * r, rel, d


def homology(C: ChainComplex, i: int, N: FpModule | None = None) -> FpModule:
    """``H_i(C (x) N)`` as a pruned presentation (``N=None`` means ``N=R``)."""
    if not 0 <= i <= C.length:
        raise ValueError("degree out of range")
    ring = C.ring
    rank, rel, d_i = _terms(C, N, i)
    if rank == 0:
        return FpModule(ring, 0)
    _, rel_below, _ = _terms(C, N, i - 1)
    _, _, d_up = _terms(C, N, i + 1)
    kernel_of = d_i if i > 0 else None
    return _subquotient(ring, kernel_of, d_up, rank, rel, rel_below)


def _coker_length(ring: QuotientRing, rank: int, cols: list[dict]):
    if rank == 0:
        return 0
    return gb.colength(submodule_gb(ring, rank, cols))


def homology_length(C: ChainComplex, i: int, N: FpModule | None = None):
    """``ℓ(H_i(C (x) N))``.

    When ``N`` has finite length the terms do too, and
    ``ℓ(H_i) = ℓ(T_i) - ℓ(im d_i) - ℓ(im d_{i+1})`` with each image length
    read off a cokernel length; no syzygies needed.
    """
    ring = C.ring
    if N is not None and N.length() != INFINITE:
        def term_len(k):
            rank, rel, _ = _terms(C, N, k)
            return _coker_length(ring, rank, rel)

        def image_len(k):
            if k <= 0 or k > C.length:
                return 0
            rank_below, rel_below, _ = _terms(C, N, k - 1)
            d = _terms(C, N, k)[2]
            return term_len(k - 1) - _coker_length(ring, rank_below, rel_below + _col_terms(d))

        return term_len(i) - image_len(i) - image_len(i + 1)
    return homology(C, i, N).length()


# ---------------------------------------------------------------- resolutions

@dataclass
class FreeResolution:
    complex: ChainComplex
    complete: bool          # a zero syzygy module was reached
    shifts: list[list[int]] = field(default_factory=list)

    @property
    def proj_dim(self):
        return self.complex.length if self.complete else None

    @property
    def ranks(self) -> list[int]:
        return self.complex.ranks


def free_resolution(M: FpModule, max_len: int) -> FreeResolution:
    """Minimal (for graded input) free resolution with ``d_1..d_max_len``."""
    ring = M.ring
    M = M.prune()
    rank = M.rank
    shifts = [[0] * rank]
    cols = minimal_generators(ring, rank, _col_terms(M.relations), shifts[0])
    ranks = [rank]
    diffs = []
    complete = False
    k = 0
    while k < max_len:
        if not cols:
            complete = True
            break
        diffs.append(_matrix(ring, ranks[-1], cols))
        sh = shifts[-1]
        new_shifts = [max(sum(e) + sh[c] for c, e in col) for col in cols]
        ranks.append(len(cols))
        shifts.append(new_shifts)
        k += 1
        syz = gb.syzygy_terms(cols, ring.poly, ranks[-2], ring.poly.order, ring.ideal_terms(ranks[-2]))
        cols = minimal_generators(ring, ranks[-1], syz, new_shifts)
    else:
        complete = not cols
    if rank == 0:
        complete = True
    return FreeResolution(ChainComplex(ring, ranks, diffs), complete, shifts)


_KOSZUL_CHECKED: dict = {}


def koszul_resolution(ring: QuotientRing, seq) -> ChainComplex:
    """Koszul complex on ``seq`` after checking that it is acyclic."""
    C = koszul(ring, seq)
    key = (repr(ring), tuple(str(ring.poly(s)) for s in seq))
    if key not in _KOSZUL_CHECKED:
        _KOSZUL_CHECKED[key] = all(homology(C, i).is_zero() for i in range(1, C.length + 1))
    if not _KOSZUL_CHECKED[key]:
        raise ValueError("sequence not regular")
    return C


def _resolution_of(X: FpModule, resolution, needed: int) -> ChainComplex:
    if resolution is None:
        return free_resolution(X, needed).complex
    if isinstance(resolution, FreeResolution):
        return resolution.complex
    return resolution


def tor(M: FpModule, N: FpModule, j: int, resolve: str = "M", resolution=None) -> FpModule:
    """``Tor_j(M, N)`` computed by resolving the argument named by ``resolve``."""
    X, Y = (M, N) if resolve == "M" else (N, M)
    C = _resolution_of(X, resolution, j + 1)
    if j > C.length:
        return FpModule(M.ring, 0)
    return homology(C, j, Y)


def tor_length(M: FpModule, N: FpModule, j: int, resolve: str = "M", resolution=None):
    X, Y = (M, N) if resolve == "M" else (N, M)
    C = _resolution_of(X, resolution, j + 1)
    if j > C.length:
        return 0
    return homology_length(C, j, Y)


def ext(M: FpModule, j: int, resolution=None, max_len: int = 6) -> FpModule:
    """``Ext^j(M, R)``: cohomology of the dualized resolution."""
    if resolution is None:
        # d_{j+1} is needed unless the resolution stops earlier
        res = free_resolution(M, min(max_len, j + 1))
        if not res.complete and res.complex.length < j + 1:
            raise ValueError("resolution budget exceeded")
        C = res.complex
    else:
        C = resolution.complex if isinstance(resolution, FreeResolution) else resolution
    ring = M.ring
    if j > C.length:
        return FpModule(ring, 0)
    kernel_of = C.d(j + 1).transpose() if j + 1 <= C.length else None
    image_of = C.d(j).transpose() if j >= 1 else PolyMatrix.zeros(ring.poly, C.rank(j), 0)
    if C.rank(j) == 0:
        return FpModule(ring, 0)
    if kernel_of is not None and kernel_of.rows == 0:
        kernel_of = None
    return _subquotient(ring, kernel_of, image_of, C.rank(j), [], [])


def chi(M: FpModule, N: FpModule, resolve: str = "M", resolution=None) -> int:
    """Alternating sum of Tor lengths over a finite resolution."""
    X = M if resolve == "M" else N
    if resolution is None:
        res = free_resolution(X, X.ring.nvars + 2)
        if not res.complete:
            raise ValueError("resolved argument has no finite resolution within budget")
        C = res.complex
    else:
        C = resolution.complex if isinstance(resolution, FreeResolution) else resolution
    total = 0
    for j in range(C.length + 1):
        ell = tor_length(M, N, j, resolve, C)
        if ell == INFINITE:
            raise ValueError(f"Tor_{j} has infinite length")
        total += (-1) ** j * ell
    return total


@dataclass(frozen=True)
class GrowthEntry:
    n: int
    q: int
    value: int
    ratio: Fraction


@dataclass
class GrowthSeries:
    d: int
    p: int
    entries: list[GrowthEntry] = field(default_factory=list)

    def add(self, n: int, value: int) -> GrowthEntry:
        if self.entries and n <= self.entries[-1].n:
            raise ValueError("n must increase")
        q = self.p ** n
        e = GrowthEntry(n, q, value, Fraction(value, q ** self.d))
        self.entries.append(e)
        return e

    @property
    def values(self) -> list[int]:
        return [e.value for e in self.entries]

    @property
    def ratios(self) -> list[Fraction]:
        return [e.ratio for e in self.entries]


def chi_inf_series(M: FpModule, N: FpModule, n_max: int, resolution: ChainComplex) -> GrowthSeries:
    """``n -> χ(F^n(M), N) / p^(n codim M)`` using ``F^n`` of a finite resolution of ``M``."""
    if N.tensor(M).length() == INFINITE:
        raise ValueError("M (x) N must have finite length")
    series = GrowthSeries(M.codim(), M.ring.p)
    for n in range(n_max + 1):
        Fn = resolution.frobenius(n)
        series.add(n, chi(M.frobenius(n), N, "M", Fn))
    return series
