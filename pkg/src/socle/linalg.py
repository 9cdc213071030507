"""Exact linear algebra over GF(p) or the rationals.

Matrices are plain numpy arrays: dtype int64 reduced mod p for prime
fields, dtype object holding Fraction for the rationals.  All row
reduction uses leftmost-pivot / first-nonzero-row tie-breaking, which
pins every basis choice made downstream.
"""

from dataclasses import dataclass, field as dfield
from fractions import Fraction

import numpy as np


class DimensionError(ValueError):
    pass


class Field:
    """GF(p) for prime p < 2^31, or the rationals when p is None."""

    def __init__(self, p=101):
        if p is not None:
            if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
                raise ValueError(f"not a prime: {p}")
            if p >= 2**31:
                raise ValueError("p too large for word arithmetic")
        self.p = p

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "QQ" if self.p is None else f"GF({self.p})"

    @property
    def zero(self):
        return 0 if self.p is not None else Fraction(0)

    @property
    def one(self):
        return 1 if self.p is not None else Fraction(1)

    def scalar(self, x):
        if self.p is not None:
            return int(x) % self.p
        return Fraction(x)

    def inv(self, x):
        if self.p is not None:
            return pow(int(x), self.p - 2, self.p)
        return Fraction(1) / x

    def mod(self, arr):
        if self.p is not None:
            return arr % self.p
        return arr

    def array(self, rows):
        if self.p is not None:
            return np.asarray(rows, dtype=np.int64) % self.p
        a = np.empty(np.shape(rows), dtype=object)
        flat = a.reshape(-1)
        src = np.asarray(rows, dtype=object).reshape(-1)
        for i, v in enumerate(src):
            flat[i] = Fraction(v)
        return a

    def zeros(self, shape):
        if self.p is not None:
            return np.zeros(shape, dtype=np.int64)
        a = np.empty(shape, dtype=object)
        a[...] = Fraction(0)
        return a

    def eye(self, n):
        a = self.zeros((n, n))
        for i in range(n):
            a[i, i] = self.one
        return a

    def matmul(self, a, b):
        return self.mod(a @ b)


GF101 = Field(101)
QQ = Field(None)


def rref(F, m):
    """Reduced row-echelon form and pivot columns; row space preserved."""
    m = np.array(m, copy=True)
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(m[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            m[[r, i]] = m[[i, r]]
        m[r] = F.mod(m[r] * F.inv(m[r, c]))
        col = np.array(m[:, c], copy=True)
        col[r] = F.zero
        m = F.mod(m - np.outer(col, m[r]))
        pivots.append(c)
        r += 1
    return m, pivots


def rank(F, m):
    if m.size == 0:
        return 0
    return len(rref(F, m)[1])


def kernel_basis(F, m):
    """Rows form a basis of the right null space: m @ row = 0."""
    rows, cols = m.shape
    if cols == 0:
        return F.zeros((0, 0))
    if rows == 0:
        return F.eye(cols)
    r, pivots = rref(F, m)
    free = [c for c in range(cols) if c not in pivots]
    out = F.zeros((len(free), cols))
    for k, f in enumerate(free):
        out[k, f] = F.one
        for j, c in enumerate(pivots):
            out[k, c] = F.mod(F.zero - r[j, f])
    return out


@dataclass
class Subspace:
    """Subspace of a coordinate space, held as an rref row basis."""

    field: Field
    ambient: int
    basis: np.ndarray = None
    pivots: tuple = ()

    def __post_init__(self):
        if self.basis is None:
            self.basis = self.field.zeros((0, self.ambient))

    @staticmethod
    def from_rows(F, rows, ambient=None):
        rows = np.asarray(rows)
        if rows.ndim == 1:
            rows = rows.reshape(1, -1)
        if ambient is None:
            ambient = rows.shape[1]
        if rows.shape[0] == 0:
            return Subspace(F, ambient)
        r, piv = rref(F, rows)
        return Subspace(F, ambient, r[: len(piv)], tuple(piv))

    @staticmethod
    def full(F, n):
        return Subspace(F, n, F.eye(n), tuple(range(n)))

    @property
    def dim(self):
        return len(self.pivots)

    def reduce(self, v):
        """Residual of v after eliminating this subspace's pivot coordinates."""
        v = np.array(v, copy=True)
        for j, c in enumerate(self.pivots):
            if v[c] != self.field.zero:
                v = self.field.mod(v - v[c] * self.basis[j])
        return v

    def contains(self, v):
        return not np.any(self.reduce(v))

    def contains_space(self, other):
        return all(self.contains(row) for row in other.basis)

    def coords(self, v):
        """Coefficients of v in the rref basis; raises if v is outside."""
        c = np.asarray(v)[list(self.pivots)]
        if np.any(self.field.mod(np.asarray(v) - c @ self.basis)):
            raise DimensionError("vector not in subspace")
        return c

    def add(self, other):
        self._match(other)
        return Subspace.from_rows(
            self.field, np.vstack([self.basis, other.basis]), self.ambient
        )

    def intersect(self, other):
        """Zassenhaus: rref [[A,A],[B,0]]; zero-left rows carry the intersection."""
        self._match(other)
        F, n = self.field, self.ambient
        a, b = self.basis, other.basis
        top = np.hstack([a, a])
        bot = np.hstack([b, F.zeros((b.shape[0], n))])
        r, piv = rref(F, np.vstack([top, bot]))
        rows = [r[j, n:] for j, c in enumerate(piv) if c >= n]
        if not rows:
            return Subspace(F, n)
        return Subspace.from_rows(F, np.vstack(rows), n)

    def complement_coords(self):
        return [c for c in range(self.ambient) if c not in self.pivots]

    def projection(self):
        """Matrix of the quotient map onto the non-pivot coordinates."""
        comp = self.complement_coords()
        F = self.field
        proj = F.zeros((len(comp), self.ambient))
        eye = F.eye(self.ambient)
        for i in range(self.ambient):
            v = self.reduce(eye[i])
            for k, c in enumerate(comp):
                proj[k, i] = v[c]
        return proj

    def section(self):
        """Right inverse of projection(): embeds quotient coordinates back."""
        comp = self.complement_coords()
        F = self.field
        sec = F.zeros((self.ambient, len(comp)))
        for k, c in enumerate(comp):
            sec[c, k] = F.one
        return sec

    def _match(self, other):
        if self.ambient != other.ambient or self.field != other.field:
            raise DimensionError("ambient spaces differ")


def kernel_subspace(F, m):
    """Right null space of m as a Subspace, without re-reducing.

    The kernel basis rows carry an identity block on the free columns of
    m, so they already satisfy the dual-basis property Subspace needs
    (basis[j][pivots[k]] = delta_jk) with those columns as pivots."""
    rows, cols = m.shape
    if cols == 0:
        return Subspace(F, 0)
    if rows == 0:
        return Subspace.full(F, cols)
    r, pivots = rref(F, m)
    free = [c for c in range(cols) if c not in pivots]
    out = F.zeros((len(free), cols))
    for k, f in enumerate(free):
        out[k, f] = F.one
        for j, c in enumerate(pivots):
            out[k, c] = F.mod(F.zero - r[j, f])
    return Subspace(F, cols, out, tuple(free))


def image_basis(F, m):
    """Column space of m, as a subspace of the row-coordinate space."""
    return Subspace.from_rows(F, m.T, m.shape[0])
