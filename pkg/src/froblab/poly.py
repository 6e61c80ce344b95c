"""Monomials, monomial orders, polynomials and free-module vectors over F_p.

Monomials are plain exponent tuples.  ``Poly`` stores ``{exponents: coeff}``
and ``VecPoly`` stores ``{(component, exponents): coeff}``; coefficients are
always reduced into ``[1, p)``.  Sorting happens only when an ordered view
is asked for, through the flat integer keys produced by ``MonomialOrder``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

from .fp import PrimeField

Monomial = tuple  # exponent tuple, one entry per ring variable


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def _grevlex(e) -> tuple:
    return (sum(e),) + tuple(-x for x in reversed(e[1:]))


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order extended to free modules.

    ``kind`` is ``grevlex``, ``lex`` or ``elim`` (the first ``block``
    variables are eliminated: grevlex on them, ties broken by grevlex on the
    rest).  ``module='top'`` compares terms first and breaks ties by
    component, lower index larger; ``'pot'`` compares components first.
    """

    kind: str = "grevlex"
    block: int = 0
    module: str = "top"

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "elim"):
            raise ValueError(f"unknown order {self.kind!r}")
        if self.module not in ("top", "pot"):
            raise ValueError(f"unknown module extension {self.module!r}")

    def mono_key(self, e: Monomial) -> tuple:
        if self.kind == "grevlex":
            return _grevlex(e)
        if self.kind == "lex":
            return tuple(e)
        return _grevlex(e[:self.block]) + _grevlex(e[self.block:])

    def key(self, comp: int, e: Monomial) -> tuple:
        """Flat integer key; larger key means larger term."""
        if self.module == "top":
            return self.mono_key(e) + (-comp,)
        return (-comp,) + self.mono_key(e)

    def with_module(self, module: str) -> "MonomialOrder":
        return MonomialOrder(self.kind, self.block, module)


GREVLEX = MonomialOrder()


def mono_cmp(a: Monomial, b: Monomial, order: MonomialOrder = GREVLEX) -> int:
    if len(a) != len(b):
        raise ValueError("monomials from different rings")
    ka, kb = order.mono_key(a), order.mono_key(b)
    return (ka > kb) - (ka < kb)


class PolyRing:
    """``F_p[names]`` with a fixed monomial order."""

    def __init__(self, p: int, names, order: MonomialOrder = GREVLEX):
        self.field = PrimeField(p)
        self.p = p
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        self.nvars = len(self.names)
        self.order = order

    def __repr__(self):
        return f"PolyRing({self.p}, {list(self.names)}, {self.order.kind})"

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.p == other.p
                and self.names == other.names and self.order == other.order)

    def __hash__(self):
        return hash((self.p, self.names, self.order))

    @cached_property
    def one_mono(self) -> Monomial:
        return (0,) * self.nvars

    def var_mono(self, i: int) -> Monomial:
        e = [0] * self.nvars
        e[i] = 1
        return tuple(e)

    def gens(self) -> list["Poly"]:
        return [Poly(self, {self.var_mono(i): 1}) for i in range(self.nvars)]

    def var(self, name: str) -> "Poly":
        return Poly(self, {self.var_mono(self.names.index(name)): 1})

    def const(self, c: int) -> "Poly":
        c %= self.p
        return Poly(self, {self.one_mono: c} if c else {})

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.const(1)

    def __call__(self, text) -> "Poly":
        if isinstance(text, Poly):
            return text
        if isinstance(text, int):
            return self.const(text)
        return parse_poly(self, text)

    def with_order(self, order: MonomialOrder) -> "PolyRing":
        return PolyRing(self.p, self.names, order)


class Poly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    @classmethod
    def from_terms(cls, ring: PolyRing, items) -> "Poly":
        p = ring.p
        out: dict = {}
        for e, c in items:
            v = (out.get(e, 0) + c) % p
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return cls(ring, out)

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise ValueError("polynomials from different rings")
            return other
        if isinstance(other, int):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Poly.from_terms(self.ring, list(self.terms.items()) + list(other.terms.items()))

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Poly(self.ring, {e: p - c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result, base = self.ring.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        return isinstance(other, Poly) and self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_term(self) -> int:
        return self.terms.get(self.ring.one_mono, 0)

    def sorted_terms(self) -> list:
        key = self.ring.order.mono_key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def lead(self) -> tuple:
        """(monomial, coefficient) of the leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = self.ring.order.mono_key
        e = max(self.terms, key=key)
        return e, self.terms[e]

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def frobenius(self, q: int) -> "Poly":
        """``self**q`` for ``q`` a power of ``p``: exponents scale, coefficients stay."""
        if not self.ring.field.is_power(q):
            raise ValueError("not a Frobenius power")
        return Poly(self.ring, {tuple(q * x for x in e): c for e, c in self.terms.items()})

    def substitute(self, images: list["Poly"]) -> "Poly":
        """Evaluate at ``images`` (one polynomial per variable, any target ring)."""
        target = images[0].ring
        out = target.zero()
        for e, c in self.terms.items():
            t = target.const(c)
            for img, k in zip(images, e):
                if k:
                    t = t * img ** k
            out = out + t
        return out

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"


def poly_mul(f: Poly, g: Poly) -> Poly:
    p = f.ring.p
    out: dict = {}
    for e1, c1 in f.terms.items():
        for e2, c2 in g.terms.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            out[e] = (out.get(e, 0) + c1 * c2) % p
    return Poly(f.ring, {e: c for e, c in out.items() if c})


def _format_mono(ring: PolyRing, e: Monomial) -> str:
    parts = []
    for name, k in zip(ring.names, e):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def format_poly(f: Poly) -> str:
    if not f.terms:
        return "0"
    p = f.ring.p
    out = []
    for e, c in f.sorted_terms():
        neg = p > 2 and c > p // 2
        mag = p - c if neg else c
        mono = _format_mono(f.ring, e)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(out)


_TERM = re.compile(r"([+-])?([^+-]+)")


def parse_poly(ring: PolyRing, text: str) -> Poly:
    """Parse ``coeff*VAR^exp*...`` terms joined by ``+``/``-``."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    pos = 0
    items = []
    index = {n: i for i, n in enumerate(ring.names)}
    for m in _TERM.finditer(s):
        if m.start() != pos:
            raise ValueError(f"cannot parse {text!r}")
        pos = m.end()
        sign = -1 if m.group(1) == "-" else 1
        coeff = 1
        e = [0] * ring.nvars
        for factor in m.group(2).split("*"):
            if not factor:
                raise ValueError(f"cannot parse {text!r}")
            if factor.isdigit():
                coeff *= int(factor)
                continue
            name, _, k = factor.partition("^")
            if name not in index or (k and not k.isdigit()):
                raise ValueError(f"unknown factor {factor!r} in {text!r}")
            e[index[name]] += int(k) if k else 1
        items.append((tuple(e), sign * coeff))
    if pos != len(s):
        raise ValueError(f"cannot parse {text!r}")
    return Poly.from_terms(ring, items)


class VecPoly:
    """An element of the free module ``ring^rank``."""

    __slots__ = ("ring", "rank", "terms")

    def __init__(self, ring: PolyRing, rank: int, terms: dict):
        self.ring = ring
        self.rank = rank
        self.terms = terms

    @classmethod
    def from_polys(cls, polys: list[Poly]) -> "VecPoly":
        ring = polys[0].ring
        terms = {}
        for c, f in enumerate(polys):
            for e, v in f.terms.items():
                terms[(c, e)] = v
        return cls(ring, len(polys), terms)

    @classmethod
    def unit(cls, ring: PolyRing, rank: int, j: int, f: Poly | None = None) -> "VecPoly":
        f = ring.one() if f is None else f
        return cls(ring, rank, {(j, e): c for e, c in f.terms.items()})

    def component(self, j: int) -> Poly:
        return Poly(self.ring, {e: c for (k, e), c in self.terms.items() if k == j})

    def components(self) -> list[Poly]:
        out: list[dict] = [{} for _ in range(self.rank)]
        for (k, e), c in self.terms.items():
            out[k][e] = c
        return [Poly(self.ring, d) for d in out]

    def __add__(self, other: "VecPoly") -> "VecPoly":
        p = self.ring.p
        t = dict(self.terms)
        for k, c in other.terms.items():
            v = (t.get(k, 0) + c) % p
            if v:
                t[k] = v
            else:
                t.pop(k, None)
        return VecPoly(self.ring, self.rank, t)

    def __neg__(self):
        p = self.ring.p
        return VecPoly(self.ring, self.rank, {k: p - c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, f: Poly) -> "VecPoly":
        p = self.ring.p
        out: dict = {}
        for (k, e1), c1 in self.terms.items():
            for e2, c2 in f.terms.items():
                key = (k, tuple(x + y for x, y in zip(e1, e2)))
                out[key] = (out.get(key, 0) + c1 * c2) % p
        return VecPoly(self.ring, self.rank, {k: c for k, c in out.items() if c})

    def __eq__(self, other):
        return (isinstance(other, VecPoly) and self.rank == other.rank
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.rank, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def lead(self) -> tuple:
        """((component, monomial), coefficient) of the leading term."""
        key = self.ring.order.key
        t = max(self.terms, key=lambda t: key(*t))
        return t, self.terms[t]

    def degree(self, shifts=None) -> int:
        if not self.terms:
            return -1
        if shifts is None:
            return max(sum(e) for _, e in self.terms)
        return max(sum(e) + shifts[k] for k, e in self.terms)

    def __repr__(self):
        return "[" + ", ".join(format_poly(f) for f in self.components()) + "]"


class PolyMatrix:
    """A ``rows x cols`` matrix of polynomials; columns are module elements."""

    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(self, ring: PolyRing, entries, rows: int | None = None, cols: int | None = None):
        entries = [[ring(x) for x in row] for row in entries]
        self.ring = ring
        self.rows = len(entries) if rows is None else rows
        self.cols = (len(entries[0]) if entries else 0) if cols is None else cols
        if len(entries) != self.rows or any(len(r) != self.cols for r in entries):
            raise ValueError("ragged matrix")
        self.entries = entries

    @classmethod
    def zeros(cls, ring: PolyRing, rows: int, cols: int) -> "PolyMatrix":
        return cls(ring, [[ring.zero()] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, ring: PolyRing, n: int, scale: Poly | None = None) -> "PolyMatrix":
        d = ring.one() if scale is None else scale
        return cls(ring, [[d if i == j else ring.zero() for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def from_columns(cls, ring: PolyRing, rows: int, columns: list[VecPoly]) -> "PolyMatrix":
        comps = [c.components() for c in columns]
        entries = [[comps[j][i] for j in range(len(columns))] for i in range(rows)]
        return cls(ring, entries, rows, len(columns))

    def column(self, j: int) -> VecPoly:
        terms = {}
        for i in range(self.rows):
            for e, c in self.entries[i][j].terms.items():
                terms[(i, e)] = c
        return VecPoly(self.ring, self.rows, terms)

    def columns(self) -> list[VecPoly]:
        return [self.column(j) for j in range(self.cols)]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(self.ring, [[self.entries[i][j] for i in range(self.rows)]
                                      for j in range(self.cols)], self.cols, self.rows)

    T = property(transpose)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = self.ring.zero()
                for k in range(self.cols):
                    a, b = self.entries[i][k], other.entries[k][j]
                    if a.terms and b.terms:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(self.ring, out, self.rows, other.cols)

    def scale(self, f: Poly) -> "PolyMatrix":
        return PolyMatrix(self.ring, [[f * x for x in row] for row in self.entries], self.rows, self.cols)

    def __neg__(self):
        return PolyMatrix(self.ring, [[-x for x in row] for row in self.entries], self.rows, self.cols)

    def __add__(self, other):
        return PolyMatrix(self.ring, [[a + b for a, b in zip(r1, r2)]
                                      for r1, r2 in zip(self.entries, other.entries)],
                          self.rows, self.cols)

    def __eq__(self, other):
        return (isinstance(other, PolyMatrix) and (self.rows, self.cols) == (other.rows, other.cols)
                and self.entries == other.entries)

    def is_zero(self) -> bool:
        return all(not x.terms for row in self.entries for x in row)

    def hstack(self, *others: "PolyMatrix") -> "PolyMatrix":
        mats = (self,) + others
        rows = [sum((m.entries[i] for m in mats), []) for i in range(self.rows)]
        return PolyMatrix(self.ring, rows, self.rows, sum(m.cols for m in mats))

    def vstack(self, *others: "PolyMatrix") -> "PolyMatrix":
        mats = (self,) + others
        return PolyMatrix(self.ring, [r for m in mats for r in m.entries],
                          sum(m.rows for m in mats), self.cols)

    def kron_identity(self, r: int) -> "PolyMatrix":
        """``self (x) I_r``: block (i, j) is ``self[i, j] * I_r``."""
        z = self.ring.zero()
        out = [[z] * (self.cols * r) for _ in range(self.rows * r)]
        for i in range(self.rows):
            for j in range(self.cols):
                f = self.entries[i][j]
                if f.terms:
                    for s in range(r):
                        out[i * r + s][j * r + s] = f
        return PolyMatrix(self.ring, out, self.rows * r, self.cols * r)

    def identity_kron(self, r: int) -> "PolyMatrix":
        """``I_r (x) self``: block diagonal with ``r`` copies."""
        z = self.ring.zero()
        out = [[z] * (self.cols * r) for _ in range(self.rows * r)]
        for s in range(r):
            for i in range(self.rows):
                for j in range(self.cols):
                    out[s * self.rows + i][s * self.cols + j] = self.entries[i][j]
        return PolyMatrix(self.ring, out, self.rows * r, self.cols * r)

    def map_entries(self, fn) -> "PolyMatrix":
        return PolyMatrix(self.ring, [[fn(x) for x in row] for row in self.entries], self.rows, self.cols)

    def __repr__(self):
        body = "; ".join(", ".join(format_poly(x) for x in row) for row in self.entries)
        return f"PolyMatrix({self.rows}x{self.cols}: [{body}])"


def entrywise_power(m: PolyMatrix, q: int) -> PolyMatrix:
    """Raise every entry to the ``q``-th power, ``q`` a power of the characteristic."""
    if not m.ring.field.is_power(q):
        raise ValueError("not a Frobenius power")
    return m.map_entries(lambda f: f.frobenius(q))
