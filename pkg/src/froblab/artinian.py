"""Finite-length modules as K-vector spaces with multiplication matrices."""
from __future__ import annotations

import numpy as np

from . import fp
from . import groebner as gb
from .fp import FpMatrix
from .groebner import INFINITE, GroebnerBasis
from .homalg import FpModule, QuotientRing, _matrix
from .poly import Poly, VecPoly


class ArtinianModule:
    """A K-basis (labels) plus one multiplication matrix per ring variable.

    Column ``j`` of ``mult[i]`` is ``x_i * basis[j]`` in basis coordinates.
    """

    def __init__(self, ring: QuotientRing, basis, mult: list[FpMatrix],
                 source: GroebnerBasis | None = None, check: bool = True):
        self.ring = ring
        self.basis = tuple(basis)
        self.mult = list(mult)
        self.source = source
        self._index = {b: k for k, b in enumerate(self.basis)}
        if len(self.mult) != ring.nvars:
            raise ValueError("need one matrix per variable")
        if any(m.shape != (self.length, self.length) for m in self.mult):
            raise ValueError("multiplication matrices must be square of size length")
        if check:
            self.check()

    @property
    def length(self) -> int:
        return len(self.basis)

    def __repr__(self):
        return f"ArtinianModule(length={self.length})"

    # structure checks
    def commutes(self) -> bool:
        return all(a @ b == b @ a for i, a in enumerate(self.mult) for b in self.mult[i + 1:])

    def kills_ideal(self) -> bool:
        return all(self.act(g).is_zero() for g in self.ring.ideal)

    def is_nilpotent(self) -> bool:
        n = self.length
        for m in self.mult:
            acc, k = m, 1
            while k < n and not acc.is_zero():
                acc = acc @ acc
                k *= 2
            if not acc.is_zero():
                return False
        return True

    def check(self):
        if not self.commutes():
            raise ValueError("multiplication matrices do not commute")
        if not self.kills_ideal():
            raise ValueError("defining ideal does not act as zero")
        if not self.is_nilpotent():
            raise ValueError("a variable acts non-nilpotently")

    def act(self, f: Poly) -> FpMatrix:
        """Matrix of multiplication by ``f``."""
        p, n = self.ring.p, self.length
        out = np.zeros((n, n), dtype=np.int64)
        powers: dict[tuple, FpMatrix] = {}

        def power(i, k):
            if (i, k) not in powers:
                powers[(i, k)] = (FpMatrix.identity(n, p) if k == 0
                                  else power(i, k - 1) @ self.mult[i])
            return powers[(i, k)]

        for e, c in f.terms.items():
            m = FpMatrix.identity(n, p)
            for i, k in enumerate(e):
                if k:
                    m = m @ power(i, k)
                    if m.is_zero():
                        break
            out = (out + c * m.a) % p
        return FpMatrix._wrap(out, p)

    def vector(self, v) -> np.ndarray:
        """Coordinates of an element of the ambient free module (needs ``source``)."""
        if self.source is None:
            raise ValueError("module has no presentation attached")
        if isinstance(v, Poly):
            terms = {(0, e): c for e, c in v.terms.items()}
        else:
            terms = dict(v.terms)
        rem = self.source.reduce_terms(terms)
        out = np.zeros(self.length, dtype=np.int64)
        for t, c in rem.items():
            out[self._index[t]] = c
        return out


def artinianize(M: FpModule) -> ArtinianModule:
    G = M.gb
    sm = gb.std_monomials(G)
    if not sm.finite:
        raise ValueError("module not Artinian")
    basis = sm.monomials
    index = {b: k for k, b in enumerate(basis)}
    n, p = len(basis), M.ring.p
    mult = []
    for i in range(M.ring.nvars):
        a = np.zeros((n, n), dtype=np.int64)
        for j, (c, e) in enumerate(basis):
            t = (c, e[:i] + (e[i] + 1,) + e[i + 1:])
            if t in index:
                a[index[t], j] = 1
                continue
            for s, v in G.reduce_terms({t: 1}).items():
                a[index[s], j] = v
        mult.append(FpMatrix._wrap(a, p))
    return ArtinianModule(M.ring, basis, mult, G)


def socle(M: ArtinianModule) -> tuple[int, FpMatrix]:
    """Dimension and a basis (columns) of ``(0 :_M m)``."""
    if M.length == 0:
        return 0, FpMatrix.zeros(0, 0, M.ring.p)
    basis = fp.intersect_kernels(M.mult)
    return basis.cols, basis


def hom_from_cyclic(J, M: ArtinianModule) -> int:
    """``dim Hom(R/J, M)``: the common kernel of the generators of ``J``."""
    gens = [M.ring.poly(g) for g in J]
    gens = [g for g in gens if not g.is_zero()]
    if M.length == 0:
        return 0
    if not gens:
        return M.length
    return fp.intersect_kernels([M.act(g) for g in gens]).cols


def h0_m(M: FpModule) -> ArtinianModule:
    """The m-power torsion submodule of ``M``."""
    if M.is_zero():
        return artinianize(M)
    G = M.gb
    S, _ = gb.saturate(G, M.ring.maximal_ideal)
    if S.is_unit():
        return artinianize(M)
    if S == G:
        return artinianize(FpModule(M.ring, 0))
    # S/G presented on the generators of S
    cols = [dict(g.terms) for g in S.elems]
    rel = gb.syzygy_terms(cols, M.ring.poly, M.rank, M.ring.poly.order, [dict(g.terms) for g in G.elems])
    k = len(cols)
    return artinianize(FpModule(M.ring, k, _matrix(M.ring, k, rel)).prune())


def length(M):
    if isinstance(M, ArtinianModule):
        return M.length
    return M.length()


def matlis_dual_length(M: ArtinianModule) -> int:
    # duality into the injective hull preserves length; the dual is never built
    return M.length
