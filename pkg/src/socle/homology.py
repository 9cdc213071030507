"""Minimal free resolutions, Betti numbers, Tor/Ext, complete
resolutions over Gorenstein rings, and the Koszul numeric test.

Resolutions are cached on the module and extended incrementally: the
kernel subspace at the last computed stage is retained so that asking
for more stages resumes where the previous call stopped.
"""

from dataclasses import dataclass, field as dfield
from fractions import Fraction

import numpy as np

from .linalg import Subspace, kernel_basis, kernel_subspace, rank
from .modules import (
    FiniteModule,
    ModuleError,
    free_module,
    hom_into_ring,
    is_isomorphic,
    matlis_dual,
    regular_module,
    residue_field,
    rmatrix_entries_in_m,
    syzygy,
)


class Resolution:
    """Minimal free resolution data: Betti numbers and differentials.

    deltas[i] is the RMatrix of delta_{i+1}: R^{b_{i+1}} -> R^{b_i},
    shaped (b_i, b_{i+1}, lambda) with every entry in m.
    """

    def __init__(self, module):
        self.module = module
        self.ring = module.ring
        self.betti = [module.min_gens()]
        self.deltas = []
        self.finite = False  # some b_i hit zero: finite projective dimension
        self._kernel = None  # kernel subspace of the differential at stage
        self._kernel_stage = -1  # ... this index (0 = the cover map)

    @property
    def length(self):
        return len(self.deltas)

    def betti_number(self, i):
        if i < len(self.betti):
            return self.betti[i]
        if self.finite:
            return 0
        raise IndexError("resolution not computed that far")

    def last_kernel(self):
        """Kernel of the most recent differential (computed on demand)."""
        F = self.ring.field
        lam = self.ring.length
        if self._kernel_stage == self.length:
            return self._kernel
        delta = self.deltas[-1]
        D = realize(self.ring, delta, regular_module(self.ring))
        self._kernel = kernel_subspace(F, D)
        self._kernel_stage = self.length
        return self._kernel

    def extend(self, n):
        """Ensure differentials delta_1..delta_n are available."""
        F = self.ring.field
        lam = self.ring.length
        while self.length < n and not self.finite:
            if self.length == 0:
                self._first_stage()
                continue
            K = self.last_kernel()
            if K.dim == 0:
                self.finite = True
                break
            sub_gens = _min_gen_rows(self.ring, K)
            b_next = len(sub_gens)
            prev_cols = K.basis.shape[1] // lam
            delta = F.zeros((prev_cols, b_next, lam))
            for c, row in enumerate(sub_gens):
                delta[:, c, :] = row.reshape(prev_cols, lam)
            if not rmatrix_entries_in_m(delta):
                raise ModuleError("non-minimal differential (unit entry)")
            self.deltas.append(delta)
            self.betti.append(b_next)
        return self

    def _first_stage(self):
        lam = self.ring.length
        M = self.module
        if M.dim == 0:
            self.finite = True
            return
        m1, cover, pres = syzygy(M)
        if m1.dim == 0:
            self.finite = True
            return
        self.deltas.append(pres)
        self.betti.append(pres.shape[1])

    def syzygy_module(self, i):
        """The i-th syzygy M_i as a FiniteModule (M_0 = M itself)."""
        if i == 0:
            return self.module
        self.extend(i)
        if self.finite and i > self.length:
            return free_module(self.ring, 0)
        delta = self.deltas[i - 1]
        F = self.ring.field
        lam = self.ring.length
        D = realize(self.ring, delta, regular_module(self.ring))
        img = Subspace.from_rows(F, D.T, D.shape[0])
        # M_i = image of delta_i inside R^{b_{i-1}}
        amb = free_module(self.ring, delta.shape[0])
        from .modules import submodule_module

        sub, _ = submodule_module(amb, img)
        sub.is_syzygy = True
        return sub


def _min_gen_rows(ring, K):
    """Rows of K's basis that lift the echelon basis of K/mK."""
    F = ring.field
    lam = ring.length
    k = K.dim
    cols = K.basis.shape[1] // lam
    mK_rows = []
    for g in ring.gen_index:
        from .modules import _free_op

        op = _free_op(ring, cols, g)
        W = F.mod(op @ K.basis.T)  # images of basis rows, as columns
        mK_rows.append(W[list(K.pivots), :].T)  # internal coords
    from .linalg import rref

    red, piv = rref(F, np.vstack(mK_rows))
    gens = [c for c in range(k) if c not in piv]
    return [K.basis[c] for c in gens]


def resolve(module, n):
    """Minimal free resolution of M through homological degree n."""
    if module._resolution is None:
        module._resolution = Resolution(module)
    return module._resolution.extend(n)


def betti_numbers(module, n):
    res = resolve(module, n)
    return [res.betti_number(i) for i in range(n + 1)]


def poincare_trunc(module, n):
    return betti_numbers(module, n)


def realize(ring, delta, coeff_module):
    """Block matrix of an RMatrix acting on a coefficient module: block
    (r, c) is the action of the ring element delta[r, c]."""
    F = ring.field
    rows, cols, lam = delta.shape
    n = coeff_module.dim
    if rows == 0 or cols == 0 or n == 0:
        return F.zeros((rows * n, cols * n))
    ops = None
    if F.p is not None:
        ops = getattr(coeff_module, "_ops_stack", None)
        if ops is None:
            ops = np.array(coeff_module.ops())
            coeff_module._ops_stack = ops
    if ops is not None:
        out = np.tensordot(delta, ops, axes=([2], [0]))  # (rows, cols, n, n)
        out = out.transpose(0, 2, 1, 3).reshape(rows * n, cols * n)
        return F.mod(out)
    out = F.zeros((rows * n, cols * n))
    for r in range(rows):
        for c in range(cols):
            out[r * n:(r + 1) * n, c * n:(c + 1) * n] = coeff_module.ring_action(
                delta[r, c]
            )
    return out


def _complex_maps(M, N, i):
    """Realized differentials d_i and d_{i+1} of F(M) (x) N."""
    res = resolve(M, i + 1)
    ring = M.ring
    n = N.dim

    def dmat(j):
        if j < 1:
            raise ValueError
        if j <= res.length:
            return realize(ring, res.deltas[j - 1], N)
        b_from = res.betti_number(j)
        b_to = res.betti_number(j - 1)
        return ring.field.zeros((b_to * n, b_from * n))

    return dmat(i) if i >= 1 else None, dmat(i + 1)


def tor_dim(M, N, i):
    """dim_k Tor_i(M, N), computed from a minimal resolution of M."""
    if M.ring is not N.ring:
        raise ModuleError("modules over different rings")
    F = M.ring.field
    if M.dim == 0 or N.dim == 0:
        return 0
    d_i, d_next = _complex_maps(M, N, i)
    if i == 0:
        res = resolve(M, 1)
        return res.betti_number(0) * N.dim - rank(F, d_next)
    nullity = d_i.shape[1] - rank(F, d_i)
    return nullity - rank(F, d_next)


@dataclass
class TorProfile:
    left: FiniteModule
    right: FiniteModule
    cutoff: int
    dims: list
    first_nonzero: int  # 0 if the whole window [1, cutoff] vanishes

    @property
    def all_zero(self):
        return self.first_nonzero == 0


def tor_profile(M, N, n, early_exit=False):
    """Tor dimensions on [1, n]; with early_exit, stop at the first
    nonzero value (the remaining entries are not computed)."""
    dims = []
    first = 0
    for i in range(1, n + 1):
        d = tor_dim(M, N, i)
        dims.append(d)
        if d and not first:
            first = i
            if early_exit:
                break
    return TorProfile(M, N, n, dims, first)


def tor_window_zero(M, N, lo, hi):
    return all(tor_dim(M, N, i) == 0 for i in range(lo, hi + 1))


def ext_dim(M, N, i):
    """dim_k Ext^i(M, N) via Matlis duality: Tor_i(M, N^dual)."""
    return tor_dim(M, matlis_dual(N), i)


def ext_dim_direct(M, N, i):
    """dim_k Ext^i(M, N) as homology of Hom(F, N) directly."""
    if M.ring is not N.ring:
        raise ModuleError("modules over different rings")
    F = M.ring.field
    if M.dim == 0 or N.dim == 0:
        return 0
    res = resolve(M, i + 1)
    ring = M.ring
    n = N.dim

    def dmat(j):
        # d^j: Hom(F_{j-1}, N) -> Hom(F_j, N), blocks transposed
        if j <= res.length:
            delta = res.deltas[j - 1]
            return realize(ring, delta.transpose(1, 0, 2), N)
        return F.zeros((res.betti_number(j) * n, res.betti_number(j - 1) * n))

    up = dmat(i + 1)
    if i == 0:
        return up.shape[1] - rank(F, up)
    down = dmat(i)
    nullity = up.shape[1] - rank(F, up)
    return nullity - rank(F, down)


def tor_induced_k(f, i):
    """Rank of Tor_i(k, f) for an R-linear map f: A -> B."""
    A, B = f.source, f.target
    ring = A.ring
    F = ring.field
    k = residue_field(ring)
    res = resolve(k, i + 1)
    bi = res.betti_number(i)
    if bi == 0 or A.dim == 0:
        return 0

    def cycles(mod):
        if i == 0:
            return F.eye(res.betti_number(0) * mod.dim)
        if i <= res.length:
            D = realize(ring, res.deltas[i - 1], mod)
            return kernel_basis(F, D)
        return F.eye(bi * mod.dim)

    def boundaries(mod):
        if i + 1 <= res.length:
            D = realize(ring, res.deltas[i], mod)
            return D.T
        return F.zeros((0, bi * mod.dim))

    ZA = cycles(A)
    BB = boundaries(B)
    big = F.zeros((bi * B.dim, bi * B.dim))
    fmap = F.zeros((bi * B.dim, bi * A.dim))
    for j in range(bi):
        fmap[j * B.dim:(j + 1) * B.dim, j * A.dim:(j + 1) * A.dim] = f.matrix
    mapped = F.mod(fmap @ ZA.T).T  # images of A-cycles in B-chains
    stacked = np.vstack([BB, mapped]) if BB.shape[0] else mapped
    return rank(F, stacked) - rank(F, BB)


@dataclass
class CompleteResolutionView:
    module: FiniteModule
    window: list  # (i, b_i) pairs
    shift: int  # 1 if the module was replaced by its first syzygy

    def table(self):
        return dict(self.window)


def complete_betti(M, s):
    """Betti table of a complete resolution on the window [-s, s].

    Requires a Gorenstein ring.  If M is not already realized as a first
    syzygy it is replaced by syzygy(M), with the shift recorded."""
    ring = M.ring
    if not ring.gorenstein:
        raise ModuleError("complete resolutions require a Gorenstein ring")
    shift = 0
    if not M.is_syzygy and not M.is_free():
        M = resolve(M, 1).syzygy_module(1)
        shift = 1
    if M.is_free():
        window = [(i, 0) for i in range(-s, s + 1)]
        return CompleteResolutionView(M, window, shift)
    pos = betti_numbers(M, s)
    Mstar = hom_into_ring(M)
    neg = betti_numbers(Mstar, s)
    # gluing consistency at index 0: M** must look like M
    Mss = hom_into_ring(Mstar)
    if (Mss.dim, Mss.min_gens()) != (M.dim, M.min_gens()):
        raise ModuleError("complete resolution gluing inconsistency at 0")
    window = [(-i, neg[i - 1]) for i in range(s, 0, -1)]
    window += [(i, pos[i]) for i in range(0, s + 1)]
    return CompleteResolutionView(M, window, shift)


@dataclass
class KoszulReport:
    consistent: bool
    degree: int
    first_mismatch: int  # -1 when consistent through the tested degree
    expected: list
    computed: list


def koszul_test(ring, n):
    """Necessary numeric condition for Koszulness: the Betti numbers of k
    must match the power-series inverse of Hilb(-t) through degree n."""
    if n < 1:
        raise ValueError("cutoff must be >= 1")
    hilb = ring.hilbert
    # coefficients of Hilb(-t)
    h = [Fraction((-1) ** d * hilb[d]) if d < len(hilb) else Fraction(0)
         for d in range(n + 1)]
    inv = [Fraction(1)]
    for d in range(1, n + 1):
        inv.append(-sum(h[j] * inv[d - j] for j in range(1, d + 1)))
    expected = [int(c) for c in inv]
    computed = betti_numbers(residue_field(ring), n)
    first = -1
    for d in range(n + 1):
        if expected[d] != computed[d]:
            first = d
            break
    return KoszulReport(first == -1, n, first, expected, computed)


def gasharov_peeva_ok(ring, module, n):
    """b_{i+1} >= e*b_i - (lambda(m^2)+2-h)*b_{i-1} for all computed i>=1."""
    b = betti_numbers(module, n)
    lam_m2 = sum(ring.hilbert[2:])
    c = lam_m2 + 2 - ring.h
    return all(b[i + 1] >= ring.e * b[i] - c * b[i - 1] for i in range(1, n))
