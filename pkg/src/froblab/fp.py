"""Dense linear algebra over a prime field F_p.

Matrices are numpy ``int64`` arrays with entries in ``[0, p)``.  For
``p < 2**31`` every product of two reduced entries fits in an int64, so
single row operations never overflow; matrix products chunk the inner
dimension when the accumulated sum could.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

MAX_PRIME = 2**31 - 1


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % d == 0:
            return n == d
    # deterministic Miller-Rabin for n < 3.3e24
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not (2 <= self.p <= MAX_PRIME) or not is_prime(self.p):
            raise ValueError(f"{self.p} is not a prime in [2, 2^31-1]")

    def __call__(self, a: int) -> int:
        return a % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(a, -1, self.p)

    def is_power(self, q: int) -> bool:
        """True when ``q`` is ``p**n`` for some ``n >= 0``."""
        if q < 1:
            return False
        while q % self.p == 0:
            q //= self.p
        return q == 1


class FpMatrix:
    """An immutable matrix over F_p backed by an int64 array."""

    __slots__ = ("p", "a")

    def __init__(self, entries, p: int, cols: int | None = None):
        rows = [list(r) for r in entries]
        ncols = cols if cols is not None else (len(rows[0]) if rows else 0)
        a = np.array([[int(x) % p for x in r] for r in rows], dtype=np.int64)
        a = a.reshape(len(rows), ncols)
        a.setflags(write=False)
        self.p = p
        self.a = a

    @classmethod
    def _wrap(cls, a: np.ndarray, p: int) -> "FpMatrix":
        m = cls.__new__(cls)
        a = np.ascontiguousarray(a, dtype=np.int64)
        a.setflags(write=False)
        m.p = p
        m.a = a
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int, p: int) -> "FpMatrix":
        return cls._wrap(np.zeros((rows, cols), dtype=np.int64), p)

    @classmethod
    def identity(cls, n: int, p: int) -> "FpMatrix":
        return cls._wrap(np.eye(n, dtype=np.int64), p)

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.a.shape

    def __getitem__(self, idx):
        return self.a[idx]

    def __eq__(self, other):
        return (isinstance(other, FpMatrix) and self.p == other.p
                and self.a.shape == other.a.shape and bool(np.array_equal(self.a, other.a)))

    def __hash__(self):
        return hash((self.p, self.a.shape, self.a.tobytes()))

    def __repr__(self):
        return f"FpMatrix(p={self.p}, shape={self.shape})\n{self.a}"

    def __matmul__(self, other: "FpMatrix") -> "FpMatrix":
        return FpMatrix._wrap(matmul(self.a, other.a, self.p), self.p)

    def __add__(self, other: "FpMatrix") -> "FpMatrix":
        return FpMatrix._wrap((self.a + other.a) % self.p, self.p)

    def __sub__(self, other: "FpMatrix") -> "FpMatrix":
        return FpMatrix._wrap((self.a - other.a) % self.p, self.p)

    def scale(self, c: int) -> "FpMatrix":
        return FpMatrix._wrap(self.a * (c % self.p) % self.p, self.p)

    @property
    def T(self) -> "FpMatrix":
        return FpMatrix._wrap(self.a.T, self.p)

    def is_zero(self) -> bool:
        return not self.a.any()

    def vstack(self, *others: "FpMatrix") -> "FpMatrix":
        return FpMatrix._wrap(np.vstack([self.a] + [o.a for o in others]), self.p)

    def hstack(self, *others: "FpMatrix") -> "FpMatrix":
        return FpMatrix._wrap(np.hstack([self.a] + [o.a for o in others]), self.p)

    def tolist(self) -> list[list[int]]:
        return self.a.tolist()


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Product of reduced int64 arrays modulo ``p`` without overflow."""
    inner = a.shape[1]
    if inner == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    bound = (p - 1) ** 2 * inner
    if bound < 2**53:
        # exact in double precision, and BLAS is far faster than int64 matmul
        prod = a.astype(np.float64) @ b.astype(np.float64)
        return np.asarray(np.rint(prod), dtype=np.int64) % p
    if bound < 2**63:
        return (a @ b) % p
    # chunk the inner dimension so partial sums stay in range
    chunk = max(1, (2**63 - 1) // ((p - 1) ** 2) - 1)
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for s in range(0, inner, chunk):
        out = (out + (a[:, s:s + chunk] @ b[s:s + chunk, :]) % p) % p
    return out


def _rref_inplace(a: np.ndarray, p: int) -> list[int]:
    """Reduce ``a`` to reduced row echelon form; returns pivot columns.

    Pivot rule: scan columns left to right, take the first row at or below
    the current rank with a nonzero entry.
    """
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), -1, p)
        if inv != 1:
            a[r] = a[r] * inv % p
        col = a[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            a[hit] = (a[hit] - np.outer(col[hit], a[r])) % p
        pivots.append(c)
        r += 1
    return pivots


def rref(m: FpMatrix) -> tuple[int, FpMatrix, list[int]]:
    """Rank, a kernel basis (as columns) and the pivot columns of ``m``."""
    a = np.array(m.a, dtype=np.int64)
    pivots = _rref_inplace(a, m.p)
    rank = len(pivots)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    ker = np.zeros((m.cols, len(free)), dtype=np.int64)
    for k, f in enumerate(free):
        ker[f, k] = 1
        for i, pc in enumerate(pivots):
            ker[pc, k] = (-a[i, f]) % m.p
    return rank, FpMatrix._wrap(ker, m.p), pivots


def reduced(m: FpMatrix) -> FpMatrix:
    """The reduced row echelon form itself (zero rows dropped)."""
    a = np.array(m.a, dtype=np.int64)
    pivots = _rref_inplace(a, m.p)
    return FpMatrix._wrap(a[:len(pivots)], m.p)


def rank(m: FpMatrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    a = np.array(m.a, dtype=np.int64)
    return len(_rref_inplace(a, m.p))


def kernel(m: FpMatrix) -> FpMatrix:
    return rref(m)[1]


def image(m: FpMatrix) -> FpMatrix:
    """Basis (as columns) of the column space of ``m``."""
    r = reduced(m.T)
    return r.T


def intersect_kernels(mats: list[FpMatrix]) -> FpMatrix:
    """Basis (columns) of the common kernel of matrices sharing a column count."""
    if not mats:
        raise ValueError("no constraints")
    cols = mats[0].cols
    if any(m.cols != cols for m in mats):
        raise ValueError("matrices must share the column count")
    # restrict successively: each step works inside the kernel found so far
    basis = FpMatrix.identity(cols, mats[0].p)
    for m in mats:
        if basis.cols == 0:
            break
        basis = basis @ kernel(m @ basis)
    return basis


def intersect_subspaces(a: FpMatrix, b: FpMatrix) -> FpMatrix:
    """Intersection of two column spans living in the same ambient space."""
    if a.rows != b.rows:
        raise ValueError("ambient dimensions differ")
    ker = kernel(a.hstack(b.scale(-1)))
    return image(a @ FpMatrix._wrap(ker.a[:a.cols], a.p))
