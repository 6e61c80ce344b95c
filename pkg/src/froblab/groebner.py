"""Buchberger's algorithm for submodules of free modules over F_p[x_1..x_n].

Everything here works in the ambient polynomial ring; quotient rings are
handled one level up by appending ``I * e_j`` to generator lists.  Internal
elements are dicts ``{(component, exponents): coeff}``; bases are kept monic.

Representation tracking (``track=True``) carries, for every basis element,
its expression in terms of the input generators.  Syzygies are read off
from reduction transcripts of S-pairs (Schreyer).
"""
from __future__ import annotations

import contextvars
import heapq
from contextlib import contextmanager
from dataclasses import dataclass

from .poly import MonomialOrder, Poly, PolyMatrix, PolyRing, VecPoly

INFINITE = float("inf")


class BudgetExceeded(RuntimeError):
    pass


_PAIR_BUDGET: contextvars.ContextVar[int | None] = contextvars.ContextVar("pair_budget", default=None)


@contextmanager
def pair_budget(max_pairs: int | None):
    """Cap the number of S-pairs any single Buchberger run may reduce."""
    token = _PAIR_BUDGET.set(max_pairs)
    try:
        yield
    finally:
        _PAIR_BUDGET.reset(token)


class _Elem:
    __slots__ = ("terms", "lead", "rep")

    def __init__(self, terms, lead, rep=None):
        self.terms = terms
        self.lead = lead
        self.rep = rep


class _Ctx:
    """Order, field and divisor lookup shared by one computation."""

    def __init__(self, order: MonomialOrder, p: int):
        self.order = order
        self.p = p
        self._keys: dict = {}
        self.by_comp: dict[int, list] = {}

    def key(self, t):
        k = self._keys.get(t)
        if k is None:
            k = self.order.key(t[0], t[1])
            self._keys[t] = k
        return k

    def negkey(self, t):
        return tuple(-x for x in self.key(t))

    def lead_of(self, terms: dict):
        return max(terms, key=self.key)

    def add(self, el: _Elem):
        self.by_comp.setdefault(el.lead[0], []).append((el.lead[1], el))

    def remove(self, el: _Elem):
        lst = self.by_comp[el.lead[0]]
        lst[:] = [(e, x) for e, x in lst if x is not el]

    def find(self, t):
        c, e = t
        for le, el in self.by_comp.get(c, ()):
            for a, b in zip(le, e):
                if a > b:
                    break
            else:
                return el, tuple(b - a for a, b in zip(le, e))
        return None


def _axpy(target: dict, c: int, shift, src: dict, p: int, skip=None):
    """``target -= c * x^shift * src``; returns keys newly created in target."""
    new = []
    for (k, e), v in src.items():
        if skip is not None and (k, e) == skip:
            continue
        t = (k, tuple(a + b for a, b in zip(e, shift)))
        old = target.get(t)
        nv = ((old or 0) - c * v) % p
        if nv:
            if old is None:
                new.append(t)
            target[t] = nv
        elif old is not None:
            del target[t]
    return new


def _reduce(terms: dict, ctx: _Ctx, full: bool = True, rep: dict | None = None):
    """Reduce ``terms`` (consumed) modulo the basis in ``ctx``.

    Returns ``(remainder, rep)``; ``rep`` is updated in place when given.
    With ``full=False`` the loop stops at the first irreducible term and the
    unreduced tail is returned as part of the remainder.
    """
    p = ctx.p
    rem: dict = {}
    heap = [(ctx.negkey(t), t) for t in terms]
    heapq.heapify(heap)
    while heap:
        _, t = heapq.heappop(heap)
        c = terms.get(t)
        if c is None:
            continue
        hit = ctx.find(t)
        if hit is None:
            rem[t] = c
            del terms[t]
            if not full:
                rem.update(terms)
                return rem, rep
            continue
        el, shift = hit
        del terms[t]
        for nt in _axpy(terms, c, shift, el.terms, p, skip=el.lead):
            heapq.heappush(heap, (ctx.negkey(nt), nt))
        if rep is not None:
            _axpy(rep, c, shift, el.rep, p)
    return rem, rep


def _monic(terms: dict, lead, p: int, rep: dict | None):
    c = terms[lead]
    if c == 1:
        return terms, rep
    inv = pow(c, -1, p)
    terms = {t: v * inv % p for t, v in terms.items()}
    if rep is not None:
        rep = {t: v * inv % p for t, v in rep.items()}
    return terms, rep


def _is_single_comp(el: _Elem) -> bool:
    c = el.lead[0]
    return all(k == c for k, _ in el.terms)


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _spoly(a: _Elem, b: _Elem, lcm, p: int, track: bool):
    sa = tuple(x - y for x, y in zip(lcm, a.lead[1]))
    sb = tuple(x - y for x, y in zip(lcm, b.lead[1]))
    terms: dict = {}
    _axpy(terms, p - 1, sa, a.terms, p)      # + x^sa * a
    _axpy(terms, 1, sb, b.terms, p)          # - x^sb * b
    rep = None
    if track:
        rep = {}
        _axpy(rep, p - 1, sa, a.rep, p)
        _axpy(rep, 1, sb, b.rep, p)
    return terms, rep


def _buchberger(inputs, ctx: _Ctx, start=(), track=False):
    """Core loop.  ``inputs`` are ``(terms, rep)`` pairs; returns the reduced basis."""
    p = ctx.p
    budget = _PAIR_BUDGET.get()
    G: list[_Elem] = []
    alive: list[bool] = []
    pairs: list = []
    pending: set = set()

    def add(el: _Elem, with_pairs: bool = True):
        k = len(G)
        G.append(el)
        alive.append(True)
        c, e = el.lead
        for i, g in enumerate(G[:-1] if with_pairs else ()):
            if not alive[i] or g.lead[0] != c:
                continue
            lcm = _lcm(g.lead[1], e)
            if (_is_single_comp(g) and _is_single_comp(el)
                    and all(x == 0 or y == 0 for x, y in zip(g.lead[1], e))):
                continue
            heapq.heappush(pairs, (ctx.key((c, lcm)), i, k, lcm))
            pending.add((i, k))
        ctx.add(el)

    # ``start`` is already a basis: its internal pairs are settled
    for el in start:
        add(el, with_pairs=False)
    for terms, rep in inputs:
        terms = dict(terms)
        rep = dict(rep) if rep is not None else None
        terms, rep = _reduce(terms, ctx, True, rep)
        if terms:
            lead = ctx.lead_of(terms)
            terms, rep = _monic(terms, lead, p, rep)
            add(_Elem(terms, lead, rep))

    done = 0
    while pairs:
        _, i, j, lcm = heapq.heappop(pairs)
        pending.discard((i, j))
        if not (alive[i] and alive[j]):
            continue
        c = G[i].lead[0]
        # second criterion: a third lead divides the lcm and both side pairs are settled
        skip = False
        for k, g in enumerate(G):
            if k in (i, j) or not alive[k] or g.lead[0] != c:
                continue
            if all(a <= b for a, b in zip(g.lead[1], lcm)):
                if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
                    skip = True
                    break
        if skip:
            continue
        done += 1
        if budget is not None and done > budget:
            raise BudgetExceeded(f"more than {budget} S-pairs")
        terms, rep = _spoly(G[i], G[j], lcm, p, track)
        terms, rep = _reduce(terms, ctx, True, rep)
        if terms:
            lead = ctx.lead_of(terms)
            terms, rep = _monic(terms, lead, p, rep)
            add(_Elem(terms, lead, rep))

    return _interreduce([g for g, a in zip(G, alive) if a], ctx)


def _interreduce(G: list[_Elem], ctx: _Ctx) -> list[_Elem]:
    G = sorted(G, key=lambda g: ctx.key(g.lead))
    kept: list[_Elem] = []
    for g in G:
        c, e = g.lead
        if any(h.lead[0] == c and all(a <= b for a, b in zip(h.lead[1], e)) for h in kept):
            continue
        kept.append(g)
    ctx.by_comp = {}
    for g in kept:
        ctx.add(g)
    out = []
    for g in kept:
        tail = {t: v for t, v in g.terms.items() if t != g.lead}
        rep = dict(g.rep) if g.rep is not None else None
        rem, rep = _reduce(tail, ctx, True, rep)
        rem[g.lead] = 1
        out.append(_Elem(rem, g.lead, rep))
    out.sort(key=lambda g: ctx.key(g.lead), reverse=True)
    ctx.by_comp = {}
    for g in out:
        ctx.add(g)
    return out


class GroebnerBasis:
    """A reduced Gröbner basis of a submodule of ``ring^rank``."""

    def __init__(self, ring: PolyRing, rank: int, elems: list[_Elem], order: MonomialOrder):
        self.ring = ring
        self.rank = rank
        self.order = order
        self.elems = elems
        self.reduced = True
        self._ctx = _Ctx(order, ring.p)
        for g in elems:
            self._ctx.add(g)

    @property
    def generators(self) -> list[VecPoly]:
        return [VecPoly(self.ring, self.rank, dict(g.terms)) for g in self.elems]

    @property
    def leads(self) -> list[tuple]:
        return [g.lead for g in self.elems]

    def __len__(self):
        return len(self.elems)

    def __eq__(self, other):
        return (isinstance(other, GroebnerBasis) and self.rank == other.rank
                and self.order == other.order
                and set(map(_frozen, self.elems)) == set(map(_frozen, other.elems)))

    def is_unit(self) -> bool:
        """True when the submodule is the whole free module."""
        ones = {c for c, e in self.leads if not any(e)}
        return len(ones) == self.rank

    def reduce_terms(self, terms: dict) -> dict:
        rem, _ = _reduce(dict(terms), self._ctx, True)
        return rem

    def __repr__(self):
        return f"GroebnerBasis(rank={self.rank}, size={len(self.elems)})"


def _frozen(g: _Elem):
    return frozenset(g.terms.items())


def _as_terms(f, rank: int | None = None) -> tuple[dict, int]:
    if isinstance(f, Poly):
        return {(0, e): c for e, c in f.terms.items()}, 1
    return dict(f.terms), f.rank


def buchberger(gens, order: MonomialOrder | None = None, rank: int | None = None,
               start: GroebnerBasis | None = None, ring: PolyRing | None = None) -> GroebnerBasis:
    """Reduced Gröbner basis of the submodule generated by ``gens``.

    ``gens`` are ``Poly`` (ideal case) or ``VecPoly``.  ``start`` may be an
    existing basis of part of the submodule; only new pairs are formed then.
    """
    gens = list(gens)
    if ring is None:
        ring = start.ring if start is not None else gens[0].ring
    order = order or (start.order if start is not None else ring.order)
    if rank is None:
        rank = start.rank if start is not None else (_as_terms(gens[0])[1] if gens else 1)
    ctx = _Ctx(order, ring.p)
    inputs = [(_as_terms(g)[0], None) for g in gens]
    st = [] if start is None else [_Elem(dict(g.terms), g.lead) for g in start.elems]
    elems = _buchberger(inputs, ctx, st)
    return GroebnerBasis(ring, rank, elems, order)


def normal_form(f, G: GroebnerBasis):
    """Unique remainder of ``f`` modulo ``G``; same type as ``f``."""
    terms, _ = _as_terms(f)
    rem = G.reduce_terms(terms)
    if isinstance(f, Poly):
        return Poly(f.ring, {e: c for (_, e), c in rem.items()})
    return VecPoly(f.ring, f.rank, rem)


def contains(G: GroebnerBasis, f) -> bool:
    terms, _ = _as_terms(f)
    return not G.reduce_terms(terms)


@dataclass(frozen=True)
class StdMonomialSet:
    finite: bool
    monomials: tuple = ()   # (component, exponents), ascending in the order

    @property
    def count(self):
        return len(self.monomials) if self.finite else INFINITE


def _is_finite(G: GroebnerBasis) -> bool:
    n = G.ring.nvars
    by_comp: dict[int, list] = {}
    for c, e in G.leads:
        by_comp.setdefault(c, []).append(e)
    for c in range(G.rank):
        leads = by_comp.get(c, [])
        if any(not any(e) for e in leads):
            continue
        for i in range(n):
            if not any(e[i] > 0 and sum(e) == e[i] for e in leads):
                return False
    return True


def std_monomials(G: GroebnerBasis, limit: int | None = None) -> StdMonomialSet:
    """Monomials outside the lead-term module, when there are finitely many."""
    if not _is_finite(G):
        return StdMonomialSet(False)
    n = G.ring.nvars
    ctx = G._ctx
    out = []
    for c in range(G.rank):
        zero = (0,) * n
        if ctx.find((c, zero)) is not None:
            continue
        seen = {zero}
        frontier = [zero]
        while frontier:
            nxt = []
            for e in frontier:
                out.append((c, e))
                if limit is not None and len(out) > limit:
                    raise BudgetExceeded(f"more than {limit} standard monomials")
                for i in range(n):
                    f = e[:i] + (e[i] + 1,) + e[i + 1:]
                    if f not in seen:
                        seen.add(f)
                        if ctx.find((c, f)) is None:
                            nxt.append(f)
            frontier = nxt
    out.sort(key=ctx.key)
    return StdMonomialSet(True, tuple(out))


def colength(G: GroebnerBasis):
    """K-dimension of ``ring^rank / <G>`` (``INFINITE`` when not finite)."""
    return std_monomials(G).count


def krull_dim(G: GroebnerBasis) -> int:
    """Dimension of ``ring^rank / <G>``; ``-1`` for the zero module."""
    from itertools import combinations

    n = G.ring.nvars
    best = -1
    by_comp: dict[int, list] = {c: [] for c in range(G.rank)}
    for c, e in G.leads:
        by_comp[c].append(e)
    for c, leads in by_comp.items():
        if any(not any(e) for e in leads):
            continue
        supports = [frozenset(i for i, x in enumerate(e) if x) for e in leads]
        for size in range(n, best, -1):
            if any(all(not s <= set(S) for s in supports) for S in combinations(range(n), size)):
                best = max(best, size)
                break
    return best


# ---------------------------------------------------------------- syzygies

def _schreyer_pairs(G: list[_Elem]) -> list[tuple[int, int]]:
    """Pairs whose transcripts generate the syzygies of ``G``.

    For fixed ``i`` the lead of the pair syzygy ``(i, j)`` is
    ``lcm(i, j) / lead_i * e_i``; pairs whose lead monomial is divisible by
    another pair's lead (ties broken by index) are dropped.
    """
    out = []
    for i, gi in enumerate(G):
        c, ei = gi.lead
        cands = []
        for j in range(i + 1, len(G)):
            if G[j].lead[0] != c:
                continue
            w = tuple(max(a, b) - a for a, b in zip(ei, G[j].lead[1]))
            cands.append((j, w))
        for j, w in cands:
            redundant = False
            for k, v in cands:
                if k != j and all(a <= b for a, b in zip(v, w)) and (v != w or k < j):
                    redundant = True
                    break
            if not redundant:
                out.append((i, j))
    return out


def _syzygies_tracked(G: list[_Elem], ctx: _Ctx, originals) -> list[dict]:
    """Syzygies (as rep dicts) of the inputs behind a tracked reduced basis."""
    p = ctx.p
    syz = []
    for i, j in _schreyer_pairs(G):
        lcm = _lcm(G[i].lead[1], G[j].lead[1])
        terms, rep = _spoly(G[i], G[j], lcm, p, True)
        rem, rep = _reduce(terms, ctx, True, rep)
        assert not rem, "S-pair of a Gröbner basis failed to reduce to zero"
        if rep:
            syz.append(rep)
    for terms, rep in originals:
        rem, rep = _reduce(dict(terms), ctx, True, dict(rep))
        assert not rem
        if rep:
            syz.append(rep)
    return syz


def syzygy_terms(columns: list[dict], ring: PolyRing, rank: int, order: MonomialOrder,
                 extra: list[dict] = ()) -> list[dict]:
    """Generators of ``{a : sum a_k columns_k in <extra>}`` as dicts over ``len(columns)``.

    ``extra`` vectors (e.g. ``I * e_j``) take part in the relations but their
    coefficients are projected away.
    """
    s = len(columns)
    zero = (0,) * ring.nvars
    inputs = [(dict(col), {(k, zero): 1}) for k, col in enumerate(columns)]
    inputs += [(dict(col), {(s + k, zero): 1}) for k, col in enumerate(extra)]
    ctx = _Ctx(order, ring.p)
    G = _buchberger(inputs, ctx, track=True)
    raw = _syzygies_tracked(G, ctx, inputs)
    out = []
    seen = set()
    for rep in raw:
        proj = {t: v for t, v in rep.items() if t[0] < s}
        if proj:
            fz = frozenset(proj.items())
            if fz not in seen:
                seen.add(fz)
                out.append(proj)
    return out


def syzygies(G: GroebnerBasis) -> PolyMatrix:
    """Schreyer syzygies of the generators of ``G`` (columns of the result)."""
    ring = G.ring
    zero = (0,) * ring.nvars
    ctx = _Ctx(G.order, ring.p)
    elems = [_Elem(dict(g.terms), g.lead, {(k, zero): 1}) for k, g in enumerate(G.elems)]
    for g in elems:
        ctx.add(g)
    syz = _syzygies_tracked(elems, ctx, [])
    cols = [VecPoly(ring, len(elems), s) for s in syz]
    return PolyMatrix.from_columns(ring, len(elems), cols) if cols else PolyMatrix.zeros(ring, len(elems), 0)


# ----------------------------------------------------- elimination helpers

def _lift_ring(ring: PolyRing) -> PolyRing:
    return PolyRing(ring.p, ("_t",) + ring.names, MonomialOrder("elim", 1, ring.order.module))


def _intersect_terms(U: list[dict], W: list[dict], ring: PolyRing, rank: int) -> list[dict]:
    """Generators of ``<U> ∩ <W>`` via ``t*U + (1-t)*W``, eliminating ``t``."""
    big = _lift_ring(ring)
    p = ring.p
    inputs = []
    for u in U:
        inputs.append(({(c, (1,) + e): v for (c, e), v in u.items()}, None))
    for w in W:
        d = {(c, (0,) + e): v for (c, e), v in w.items()}
        for (c, e), v in w.items():
            d[(c, (1,) + e)] = (p - v) % p
        inputs.append((d, None))
    ctx = _Ctx(big.order, p)
    G = _buchberger(inputs, ctx)
    out = []
    for g in G:
        if all(e[0] == 0 for _, e in g.terms):
            out.append({(c, e[1:]): v for (c, e), v in g.terms.items()})
    return out


def _divide_exact(h: dict, f: dict, order: MonomialOrder, p: int) -> dict:
    """``h / f`` for ``Poly``-style term dicts; raises if the division is inexact."""
    key = order.mono_key
    fl = max(f, key=key)
    finv = pow(f[fl], -1, p)
    h = dict(h)
    q: dict = {}
    while h:
        hl = max(h, key=key)
        if not all(a <= b for a, b in zip(fl, hl)):
            raise ArithmeticError("inexact division")
        s = tuple(b - a for a, b in zip(fl, hl))
        c = h[hl] * finv % p
        q[s] = (q.get(s, 0) + c) % p
        for e, v in f.items():
            t = tuple(a + b for a, b in zip(e, s))
            nv = (h.get(t, 0) - c * v) % p
            if nv:
                h[t] = nv
            else:
                h.pop(t, None)
    return {e: c for e, c in q.items() if c}


def _gb_terms(G: GroebnerBasis) -> list[dict]:
    return [dict(g.terms) for g in G.elems]


def intersect(A: GroebnerBasis, B: GroebnerBasis) -> GroebnerBasis:
    gens = _intersect_terms(_gb_terms(A), _gb_terms(B), A.ring, A.rank)
    return _from_terms(gens, A)


def _from_terms(gens: list[dict], like: GroebnerBasis, rank: int | None = None) -> GroebnerBasis:
    rank = like.rank if rank is None else rank
    ctx = _Ctx(like.order, like.ring.p)
    elems = _buchberger([(g, None) for g in gens], ctx)
    return GroebnerBasis(like.ring, rank, elems, like.order)


def _colon_poly(G: GroebnerBasis, f: Poly) -> GroebnerBasis:
    if f.is_zero():
        raise ValueError("colon by zero")
    fW = [{(c, e): v for e, v in f.terms.items()} for c in range(G.rank)]
    meet = _intersect_terms(_gb_terms(G), fW, G.ring, G.rank)
    fd = dict(f.terms)
    gens = []
    for h in meet:
        out = {}
        for c in range(G.rank):
            hc = {e: v for (k, e), v in h.items() if k == c}
            if hc:
                for e, v in _divide_exact(hc, fd, G.order, G.ring.p).items():
                    out[(c, e)] = v
        gens.append(out)
    return _from_terms(gens, G)


def colon(G: GroebnerBasis, f) -> GroebnerBasis:
    """``{g : g*f ⊆ <G>}`` for a polynomial ``f`` or an ideal (list of polys)."""
    if isinstance(f, Poly):
        return _colon_poly(G, f)
    fs = [g for g in f if not g.is_zero()]
    if not fs:
        raise ValueError("colon by the zero ideal")
    out = _colon_poly(G, fs[0])
    for g in fs[1:]:
        out = intersect(out, _colon_poly(G, g))
    return out


def element_colon(G: GroebnerBasis, v: VecPoly) -> GroebnerBasis:
    """The ideal ``{a : a*v ∈ <G>}``."""
    ring = G.ring
    if v.is_zero():
        return buchberger([ring.one()], G.order.with_module("top"), 1, ring=ring)
    meet = _intersect_terms(_gb_terms(G), [dict(v.terms)], ring, G.rank)
    (c0, _), _ = v.lead()
    vd = {e: x for (k, e), x in v.terms.items() if k == c0}
    gens = []
    for h in meet:
        hc = {e: x for (k, e), x in h.items() if k == c0}
        if hc:
            gens.append({(0, e): x for e, x in _divide_exact(hc, vd, G.order, ring.p).items()})
    ideal_order = G.order.with_module("top")
    ctx = _Ctx(ideal_order, ring.p)
    elems = _buchberger([(g, None) for g in gens], ctx)
    return GroebnerBasis(ring, 1, elems, ideal_order)


def annihilator(G: GroebnerBasis) -> GroebnerBasis:
    """``Ann(ring^rank / <G>)`` as the intersection of the basis-vector colons."""
    ring = G.ring
    out = None
    for j in range(G.rank):
        a = element_colon(G, VecPoly.unit(ring, G.rank, j))
        out = a if out is None else intersect(out, a)
    return out


def saturate(G: GroebnerBasis, J: list[Poly]) -> tuple[GroebnerBasis, int]:
    """``<G> : J^∞`` and the number of colon steps taken.

    Iterates ``colon`` until the reduced basis stops changing.  When
    ``J ⊆ m`` and the current quotient is finite-dimensional with every
    variable nilpotent on it, the quotient is all ``J``-torsion and the loop
    ends with the whole free module.
    """
    if not any(not f.is_zero() for f in J):
        raise ValueError("saturation by the zero ideal")
    in_m = all(f.constant_term() == 0 for f in J)
    steps = 0
    cur = G
    while True:
        if in_m and _torsion_at_origin(cur):
            if cur.is_unit():
                return cur, steps
            unit = _from_terms([{(c, (0,) * G.ring.nvars): 1} for c in range(G.rank)], G)
            return unit, steps + 1
        nxt = colon(cur, J)
        steps += 1
        if nxt == cur:
            return cur, steps
        cur = nxt


def _torsion_at_origin(G: GroebnerBasis) -> bool:
    """Finite quotient on which each variable acts nilpotently."""
    if not _is_finite(G):
        return False
    d = colength(G)
    n = G.ring.nvars
    for c in range(G.rank):
        for i in range(n):
            e = tuple(d if k == i else 0 for k in range(n))
            if G.reduce_terms({(c, e): 1}):
                return False
    return True
