"""Finite-length modules over a graded Artinian algebra.

A module is a k-vector space of dimension lambda(M) together with e
pairwise-commuting generator-action matrices satisfying the ring's
relations.  Everything downstream (duals, tensor/Hom over R, syzygies,
gamma-invariants, exterior squares) is computed from this data by exact
linear algebra.
"""

import numpy as np

from .linalg import (
    DimensionError,
    Subspace,
    image_basis,
    kernel_basis,
    kernel_subspace,
    rank,
    rref,
)


class ModuleError(ValueError):
    pass


class FiniteModule:
    def __init__(self, ring, actions, free_rank=None, validate=True):
        self.ring = ring
        self.field = ring.field
        self.actions = [np.asarray(A) for A in actions]
        self.free_rank = free_rank
        self.dim = 0 if not actions else self.actions[0].shape[0]
        if len(self.actions) != ring.e:
            raise ModuleError("one action matrix per ring generator required")
        for A in self.actions:
            if A.shape != (self.dim, self.dim):
                raise ModuleError("action matrices must be square and consistent")
        self._ops = None
        self._mm = None
        self._socle = None
        self._resolution = None
        self.presentation = None  # RMatrix it came from, if any
        self.is_syzygy = False
        if validate:
            self._validate()

    # -- structure ------------------------------------------------------

    def _validate(self):
        F = self.field
        for i in range(len(self.actions)):
            for j in range(i):
                d = F.mod(self.actions[i] @ self.actions[j]
                          - self.actions[j] @ self.actions[i])
                if np.any(d):
                    raise ModuleError("generator actions do not commute")
        for f in self.ring.presentation.relations:
            if np.any(self._evaluate_poly(f)):
                raise ModuleError("ring relation does not annihilate the module")
        if self.msub(self.ring.h + 1).dim != 0:
            raise ModuleError("m^(h+1) does not act as zero")

    def _evaluate_poly(self, poly):
        F = self.field
        out = F.zeros((self.dim, self.dim))
        for mon, coeff in poly.items():
            term = F.eye(self.dim)
            for g, k in enumerate(mon):
                for _ in range(k):
                    term = F.mod(term @ self.actions[g])
            out = F.mod(out + F.scalar(coeff) * term)
        return out

    def ops(self):
        """Action of every ring basis element; an algebra map R -> End(M)."""
        if self._ops is None:
            F = self.field
            ops = []
            for d, mon in self.ring.basis:
                A = F.eye(self.dim)
                for g, k in enumerate(mon):
                    for _ in range(k):
                        A = F.mod(A @ self.actions[g])
                ops.append(A)
            self._ops = ops
        return self._ops

    def ring_action(self, coeffs):
        """Action matrix of the ring element with the given coordinates."""
        F = self.field
        out = F.zeros((self.dim, self.dim))
        ops = self.ops()
        for i in np.flatnonzero(np.asarray(coeffs)):
            out = out + coeffs[i] * ops[i]
        return F.mod(out)

    # -- invariants -----------------------------------------------------

    def mm(self):
        """The subspace mM."""
        if self._mm is None:
            if self.dim == 0:
                self._mm = Subspace(self.field, 0)
            else:
                cols = np.hstack(self.actions)
                self._mm = image_basis(self.field, cols)
        return self._mm

    def msub(self, j):
        """The subspace m^j M."""
        S = Subspace.full(self.field, self.dim)
        for _ in range(j):
            if S.dim == 0:
                return S
            rows = [self.field.mod(A @ S.basis.T).T for A in self.actions]
            S = Subspace.from_rows(self.field, np.vstack(rows), self.dim)
        return S

    def length(self):
        return self.dim

    def min_gens(self):
        return self.dim - self.mm().dim

    def generator_coords(self):
        """Minimal generators: unit vectors at the non-pivot coordinates
        of rref(mM) -- lifts of the echelon basis of M/mM."""
        return self.mm().complement_coords()

    def gamma(self):
        from fractions import Fraction

        if self.dim == 0:
            raise ModuleError("gamma is undefined for the zero module")
        return Fraction(self.dim, self.min_gens()) - 1

    def socle(self):
        """Intersection of the kernels of all generator actions."""
        if self._socle is None:
            S = Subspace.full(self.field, self.dim)
            for A in self.actions:
                S = S.intersect(
                    Subspace.from_rows(self.field, kernel_basis(self.field, A), self.dim)
                )
            self._socle = S
        return self._socle

    def has_k_summand(self):
        """True iff Soc(M) is not contained in mM: a socle element that is
        a minimal generator splits off a copy of k."""
        if self.dim == 0:
            return False
        soc, mm = self.socle(), self.mm()
        return soc.add(mm).dim > mm.dim

    def is_free(self):
        if self.free_rank is not None:
            return True
        if self.dim == 0:
            return True
        # the minimal cover R^nu -> M is onto; equal lengths force it bijective
        return self.dim == self.min_gens() * self.ring.length

    def is_zero(self):
        return self.dim == 0

    def annihilator_is_zero(self):
        """Faithfulness: no nonzero ring element kills the whole module."""
        F = self.field
        if self.dim == 0:
            return self.ring.length == 0
        ops = self.ops()
        flat = np.vstack([A.reshape(-1) for A in ops]).T  # (dim^2, lambda)
        return rank(F, flat) == self.ring.length

    def __repr__(self):
        return f"FiniteModule(dim={self.dim} over {self.ring!r})"


class ModuleMap:
    def __init__(self, source, target, matrix, validate=True):
        self.source = source
        self.target = target
        self.matrix = np.asarray(matrix)
        if self.matrix.shape != (target.dim, source.dim):
            raise DimensionError("module map of wrong shape")
        if validate:
            F = source.field
            for As, At in zip(source.actions, target.actions):
                d = F.mod(self.matrix @ As - At @ self.matrix)
                if np.any(d):
                    raise ModuleError("matrix is not R-linear")


# -- constructors -------------------------------------------------------


def regular_module(ring):
    if getattr(ring, "_regular_module", None) is None:
        gens = [ring.left_mult[g] for g in ring.gen_index]
        ring._regular_module = FiniteModule(ring, gens, free_rank=1,
                                            validate=False)
    return ring._regular_module


def free_module(ring, n):
    F = ring.field
    lam = ring.length
    acts = []
    for g in ring.gen_index:
        A = F.zeros((n * lam, n * lam))
        for j in range(n):
            A[j * lam:(j + 1) * lam, j * lam:(j + 1) * lam] = ring.left_mult[g]
        acts.append(A)
    if n == 0:
        acts = [F.zeros((0, 0)) for _ in range(ring.e)]
    return FiniteModule(ring, acts, free_rank=n, validate=False)


def residue_field(ring):
    if getattr(ring, "_residue_field", None) is None:
        F = ring.field
        ring._residue_field = FiniteModule(
            ring, [F.zeros((1, 1)) for _ in range(ring.e)], validate=False
        )
    return ring._residue_field


def rmatrix_from_polys(ring, rows):
    """RMatrix (rows x cols x lambda) from a grid of polynomial dicts."""
    F = ring.field
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    out = F.zeros((nrows, ncols, ring.length))
    for r, row in enumerate(rows):
        if len(row) != ncols:
            raise ModuleError("ragged presentation matrix")
        for c, poly in enumerate(row):
            out[r, c] = ring.normal_form(poly)
    return out


def rmatrix_entries_in_m(pres):
    """Minimality: every entry has zero unit component."""
    return not np.any(pres[:, :, 0])


def quotient_module(amb, S):
    """Quotient of a module by an action-closed subspace."""
    F = amb.field
    for A in amb.actions:
        for row in S.basis:
            if not S.contains(F.mod(A @ row)):
                raise ModuleError("subspace is not closed under the action")
    proj = S.projection()
    sec = S.section()
    acts = [F.mod(proj @ A @ sec) for A in amb.actions]
    return FiniteModule(amb.ring, acts, validate=False), proj


def submodule_module(amb, S):
    """Action-closed subspace as a module, with its inclusion map."""
    F = amb.field
    B = S.basis
    acts = []
    for A in amb.actions:
        W = F.mod(A @ B.T)  # columns: images of basis rows
        for c in range(W.shape[1]):
            if not S.contains(W[:, c]):
                raise ModuleError("subspace is not closed under the action")
        acts.append(W[list(S.pivots), :])
    sub = FiniteModule(amb.ring, acts, validate=False)
    incl = ModuleMap(sub, amb, B.T, validate=False)
    return sub, incl


def from_presentation(ring, pres):
    """Cokernel of the free-module map with the given RMatrix columns."""
    F = ring.field
    n, m, lam = pres.shape
    if lam != ring.length:
        raise ModuleError("presentation entries do not live in this ring")
    amb = free_module(ring, n)
    if m == 0 or n == 0:
        mod = amb if n else free_module(ring, 0)
        mod.presentation = pres
        return mod
    cols = pres.transpose(1, 0, 2).reshape(m, n * lam)  # columns as vectors
    # R-span: apply every ring basis element to every column
    spans = []
    for b in range(lam):
        op = _free_op(ring, n, b)
        spans.append(F.mod(cols @ op.T))
    U = Subspace.from_rows(F, np.vstack(spans), n * lam)
    mod, proj = quotient_module(amb, U)
    mod.presentation = pres
    return mod


def _free_op(ring, n, b):
    lam = ring.length
    F = ring.field
    L = ring.left_mult[b]
    out = F.zeros((n * lam, n * lam))
    for j in range(n):
        out[j * lam:(j + 1) * lam, j * lam:(j + 1) * lam] = L
    return out


def presentation_of(mod):
    """A minimal presentation matrix R^{b1} -> R^{b0} with cokernel M."""
    if mod.presentation is not None:
        return mod.presentation
    _, _, pres = syzygy(mod)
    mod.presentation = pres
    return pres


# -- duals ---------------------------------------------------------------


def matlis_dual(mod):
    """k-linear dual with transposed actions (graded equicharacteristic
    realization of Hom into the injective hull of k)."""
    if getattr(mod, "_dual", None) is None:
        mod._dual = FiniteModule(mod.ring, [A.T.copy() for A in mod.actions],
                                 validate=False)
    return mod._dual


def canonical_module(ring):
    return matlis_dual(regular_module(ring))


def gorenstein_by_reflexivity(ring):
    """R is Gorenstein iff omega is isomorphic to its R-double-dual."""
    omega = canonical_module(ring)
    R1 = regular_module(ring)
    dd = hom_over_R(hom_over_R(omega, R1), R1)
    return is_isomorphic(omega, dd)


# -- binary operations ---------------------------------------------------


def direct_sum(a, b):
    if a.ring is not b.ring and not _same_ring_structure(a.ring, b.ring):
        raise ModuleError("modules over different rings")
    F = a.field
    acts = []
    for Aa, Ab in zip(a.actions, b.actions):
        A = F.zeros((a.dim + b.dim, a.dim + b.dim))
        A[: a.dim, : a.dim] = Aa
        A[a.dim:, a.dim:] = Ab
        acts.append(A)
    return FiniteModule(a.ring, acts, validate=False)


def tensor_over_R(a, b):
    """(M (x)_k N) / span{g.u (x) v - u (x) g.v}, with the induced action."""
    if a.ring is not b.ring and not _same_ring_structure(a.ring, b.ring):
        raise ModuleError("modules over different rings")
    F = a.field
    m, n = a.dim, b.dim
    if m == 0 or n == 0:
        return free_module(a.ring, 0)
    rel_rows = []
    eyem, eyen = F.eye(m), F.eye(n)
    for Aa, Ab in zip(a.actions, b.actions):
        W = np.kron(Aa, eyen) - np.kron(eyem, Ab)
        rel_rows.append(F.mod(W).T)
    Wspan = Subspace.from_rows(F, np.vstack(rel_rows), m * n)
    proj = Wspan.projection()
    sec = Wspan.section()
    acts = [F.mod(proj @ F.mod(np.kron(Aa, eyen)) @ sec) for Aa in a.actions]
    return FiniteModule(a.ring, acts, validate=False)


def hom_over_R(a, b):
    """Hom_R(M, N): the solution space of F A_g^M = A_g^N F, with the
    module structure given by post-composition on N."""
    if a.ring is not b.ring and not _same_ring_structure(a.ring, b.ring):
        raise ModuleError("modules over different rings")
    F = a.field
    m, n = a.dim, b.dim
    if m == 0 or n == 0:
        return free_module(a.ring, 0)
    blocks = []
    eyem, eyen = F.eye(m), F.eye(n)
    for Aa, Ab in zip(a.actions, b.actions):
        blocks.append(F.mod(np.kron(eyen, Aa.T) - np.kron(Ab, eyem)))
    K = kernel_basis(F, np.vstack(blocks))  # rows: flattened (n x m) maps
    S = Subspace.from_rows(F, K, n * m)
    acts = []
    for Ab in b.actions:
        post = F.mod(np.kron(Ab, eyem))
        W = F.mod(post @ S.basis.T)
        acts.append(W[list(S.pivots), :])
    hom = FiniteModule(a.ring, acts, validate=False)
    hom.hom_basis = [S.basis[i].reshape(n, m) for i in range(S.dim)]
    return hom


def hom_into_ring(mod):
    """M* = Hom_R(M, R)."""
    return hom_over_R(mod, regular_module(mod.ring))


# -- syzygies ------------------------------------------------------------


def cover_map(mod):
    """Minimal cover R^{nu(M)} -> M sending free generator j to the j-th
    chosen minimal generator."""
    F = mod.field
    ring = mod.ring
    lam = ring.length
    gens = mod.generator_coords()
    nu = len(gens)
    Fr = free_module(ring, nu)
    mat = F.zeros((mod.dim, nu * lam))
    ops = mod.ops()
    for j, gcoord in enumerate(gens):
        for b in range(lam):
            mat[:, j * lam + b] = ops[b][:, gcoord]
    return Fr, ModuleMap(Fr, mod, mat, validate=False)


def syzygy(mod):
    """First syzygy: (M1, cover map, minimal presentation RMatrix)."""
    F = mod.field
    ring = mod.ring
    lam = ring.length
    Fr, cover = cover_map(mod)
    nu = cover.matrix.shape[1] // lam if lam else 0
    K = kernel_subspace(F, cover.matrix)
    m1, gens_internal = _subspace_as_module(Fr, K)
    m1.is_syzygy = True
    pres = F.zeros((nu, len(gens_internal), lam))
    for c, gi in enumerate(gens_internal):
        vec = K.basis[gi].reshape(nu, lam)
        pres[:, c, :] = vec
    if not rmatrix_entries_in_m(pres):
        raise ModuleError("syzygy presentation has a unit entry")
    return m1, cover, pres


def _subspace_as_module(amb, S):
    """Module structure on an action-closed subspace, plus the internal
    coordinates of its chosen minimal generators."""
    F = amb.field
    k = S.dim
    if k == 0:
        return free_module(amb.ring, 0), []
    acts = []
    for A in amb.actions:
        W = F.mod(A @ S.basis.T)
        acts.append(W[list(S.pivots), :])
    sub = FiniteModule(amb.ring, acts, validate=False)
    mm_internal = sub.mm()
    gens = mm_internal.complement_coords()
    return sub, gens


# -- isomorphism ---------------------------------------------------------


def _same_ring_structure(r1, r2):
    """Two rings built from the same presentation have identical bases and
    structure constants, so their modules are directly comparable."""
    return (
        r1.field.p == r2.field.p
        and r1.varnames == r2.varnames
        and r1.hilbert == r2.hilbert
        and np.array_equal(r1.table, r2.table)
    )


def is_isomorphic(a, b, trials=24):
    """Randomized R-module isomorphism test: search Hom_R(a,b) for an
    invertible element.  Deterministic via a fixed seed; one-sided (a
    False can in principle be a miss, but over GF(p) with p=101 the miss
    probability per trial is at most 1/p on isomorphic pairs)."""
    if a.ring is not b.ring and not _same_ring_structure(a.ring, b.ring):
        return False
    if a.dim != b.dim:
        return False
    if a.dim == 0:
        return True
    hom = hom_over_R(a, b)
    basis = hom.hom_basis
    if not basis:
        return False
    F = a.field
    for B in basis:
        if rank(F, B) == a.dim:
            return True
    rng = np.random.default_rng(1729)
    for _ in range(trials):
        if F.p is not None:
            coeffs = rng.integers(0, F.p, size=len(basis))
        else:
            coeffs = rng.integers(-20, 21, size=len(basis))
        cand = F.zeros((a.dim, a.dim))
        for c, B in zip(coeffs, basis):
            cand = cand + F.scalar(int(c)) * B
        if rank(F, F.mod(cand)) == a.dim:
            return True
    return False


# -- exterior algebra ----------------------------------------------------


def exterior_square(mod):
    """Lambda^2_R(M) = (M (x)_R M) / span{u (x) u}, together with the map
    iota: x ^ y -> x (x) y - y (x) x into M (x)_R M."""
    F = mod.field
    m = mod.dim
    ring = mod.ring
    if m == 0:
        zero = free_module(ring, 0)
        return zero, ModuleMap(zero, free_module(ring, 0), F.zeros((0, 0)),
                               validate=False)
    tensor, proj, sec = _tensor_with_maps(mod, mod)
    t = tensor.dim
    # symmetric relators: u(x)u spans, over any field of odd characteristic
    sym_rows = []
    eye = F.eye(m)
    for i in range(m):
        sym_rows.append(np.kron(eye[i], eye[i]))
        for j in range(i):
            sym_rows.append(np.kron(eye[i], eye[j]) + np.kron(eye[j], eye[i]))
    sym = Subspace.from_rows(F, F.mod(proj @ np.vstack(sym_rows).T).T, t)
    wedge, wproj = quotient_module(tensor, sym)
    # swap on M(x)M descends to the R-tensor; antisymmetrize
    swap = F.zeros((m * m, m * m))
    for i in range(m):
        for j in range(m):
            swap[i * m + j, j * m + i] = F.one
    anti = F.mod(proj @ (F.eye(m * m) - swap) @ sec)
    wsec = sym.section()
    iota_mat = F.mod(anti @ wsec)
    # well-definedness: the symmetric part must map to zero
    for row in sym.basis:
        if np.any(F.mod(anti @ row)):
            raise ModuleError("iota is not well-defined")
    iota = ModuleMap(wedge, tensor, iota_mat, validate=False)
    return wedge, iota


def _tensor_with_maps(a, b):
    F = a.field
    m, n = a.dim, b.dim
    rel_rows = []
    eyem, eyen = F.eye(m), F.eye(n)
    for Aa, Ab in zip(a.actions, b.actions):
        W = np.kron(Aa, eyen) - np.kron(eyem, Ab)
        rel_rows.append(F.mod(W).T)
    Wspan = Subspace.from_rows(F, np.vstack(rel_rows), m * n)
    proj = Wspan.projection()
    sec = Wspan.section()
    acts = [F.mod(proj @ F.mod(np.kron(Aa, eyen)) @ sec) for Aa in a.actions]
    return FiniteModule(a.ring, acts, validate=False), proj, sec


def wedge_image(ring, phi):
    """R-span of the n x n minors of an n x g RMatrix presenting N in R^n.

    Every element of the span annihilates coker(phi); for faithful
    cokernels the span is zero."""
    from itertools import combinations, permutations

    F = ring.field
    n, g, lam = phi.shape
    if n > 8:
        raise ModuleError("refusing Leibniz expansion beyond 8 x 8 minors")
    minors = []
    for cols in combinations(range(g), n):
        acc = F.zeros(lam)
        for perm in permutations(range(n)):
            sign = _perm_sign(perm)
            prod = F.zeros(lam)
            prod[0] = F.one
            for r in range(n):
                prod = ring.multiply(prod, phi[r, cols[perm[r]]])
            acc = F.mod(acc + F.scalar(sign) * prod)
        minors.append(acc)
    if not minors:
        return Subspace(F, lam)
    spans = []
    for b in range(lam):
        L = ring.left_mult[b]
        spans.append(F.mod(np.vstack(minors) @ L.T))
    return Subspace.from_rows(F, np.vstack(spans), lam)


def _perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, clen = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            clen += 1
        if clen % 2 == 0:
            sign = -sign
    return sign


# -- randomized generation ----------------------------------------------


def random_module(ring, seed, nu_max=2, cols_max=3, degree_range=(1, 2),
                  square_zero=False):
    """Deterministically seeded cokernel of a random matrix with entries
    in m; optionally quotiented so that m^2 M = 0."""
    rng = np.random.default_rng(seed)
    F = ring.field
    lam = ring.length
    n = int(rng.integers(1, nu_max + 1))
    m = int(rng.integers(1, cols_max + 1))
    lo, hi = degree_range
    hi = min(hi, ring.h)
    pres = F.zeros((n, m, lam))
    degs = np.array([d for d, _ in ring.basis])
    eligible = np.flatnonzero((degs >= max(lo, 1)) & (degs <= hi))
    for r in range(n):
        for c in range(m):
            for b in eligible:
                if F.p is not None:
                    pres[r, c, b] = int(rng.integers(0, F.p))
                else:
                    pres[r, c, b] = F.scalar(int(rng.integers(-5, 6)))
    mod = from_presentation(ring, pres)
    if square_zero and mod.dim:
        mod, _ = quotient_module(mod, mod.msub(2))
    return mod
