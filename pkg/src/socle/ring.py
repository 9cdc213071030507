"""Standard graded Artinian local algebras R = k[x_1..x_e]/I.

The quotient is computed degree by degree: in each degree d the span of
{monomial * relation} contributions is row-reduced over the monomial
coordinate space, and the non-pivot ("standard") monomials form the
basis of R_d.  Monomials are ordered graded-lex with x_1 > x_2 > ...,
so the standard basis is deterministic.
"""

from dataclasses import dataclass, field as dfield
from itertools import permutations

import numpy as np

from .linalg import Field, Subspace, rref


class PresentationError(ValueError):
    pass


class NotArtinianError(ValueError):
    pass


def monomials(e, d):
    """Exponent vectors of degree d, lex-descending in x_1 > x_2 > ..."""
    if e == 1:
        return [(d,)]
    out = []
    for k in range(d, -1, -1):
        for rest in monomials(e - 1, d - k):
            out.append((k,) + rest)
    return out


def _mono_mul(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _poly_degree(poly):
    degs = {sum(m) for m in poly}
    if len(degs) != 1:
        raise PresentationError(f"relation not homogeneous: degrees {sorted(degs)}")
    return degs.pop()


@dataclass
class RingPresentation:
    """Generators plus homogeneous relations of degree >= 2.

    Relations are dicts: exponent tuple -> integer coefficient.
    """

    field: Field
    varnames: list
    relations: list

    def __post_init__(self):
        if len(self.varnames) < 1:
            raise PresentationError("need at least one generator")
        if len(set(self.varnames)) != len(self.varnames):
            raise PresentationError("duplicate generator names")
        e = len(self.varnames)
        for f in self.relations:
            if not f:
                raise PresentationError("empty relation")
            for m in f:
                if len(m) != e:
                    raise PresentationError("exponent vector of wrong arity")
            if _poly_degree(f) < 2:
                raise PresentationError("relation of degree < 2")


class GradedRing:
    """Immutable after build_ring; all bookkeeping is precomputed."""

    def __init__(self, presentation, degrees, h):
        self.presentation = presentation
        self.field = presentation.field
        self.varnames = list(presentation.varnames)
        self.e = len(self.varnames)
        self.h = h
        # degrees: list over d of (std monomial list, nf dict monomial -> vector over std)
        self.std = [deg[0] for deg in degrees]
        self._nf = [deg[1] for deg in degrees]
        self.hilbert = [len(s) for s in self.std]
        self.length = sum(self.hilbert)
        # global basis: (degree, monomial), degree-major, monomial order within
        self.basis = [(d, m) for d in range(h + 1) for m in self.std[d]]
        self.index = {m: i for i, (d, m) in enumerate(self.basis)}
        self.gen_index = []
        for g in range(self.e):
            mon = tuple(1 if i == g else 0 for i in range(self.e))
            self.gen_index.append(self.index[mon])
        self._build_mult_table()
        self._invariants()

    # -- construction ---------------------------------------------------

    def _offset(self, d):
        return sum(self.hilbert[:d])

    def monomial_vector(self, mon):
        """Global coordinate vector of a monomial's normal form."""
        F = self.field
        d = sum(mon)
        v = F.zeros(self.length)
        if d > self.h:
            return v
        off = self._offset(d)
        nf = self._nf[d][mon]
        for j, c in enumerate(nf):
            v[off + j] = c
        return v

    def _build_mult_table(self):
        F = self.field
        n = self.length
        self.table = F.zeros((n, n, n))
        for i, (di, mi) in enumerate(self.basis):
            for j, (dj, mj) in enumerate(self.basis):
                self.table[i, j] = self.monomial_vector(_mono_mul(mi, mj))
        # left multiplication operators, columns indexed by the right factor
        self.left_mult = [self.table[i].T.copy() for i in range(n)]

    def _invariants(self):
        F = self.field
        gens = [self.left_mult[g] for g in self.gen_index]
        soc = Subspace.full(F, self.length)
        for A in gens:
            soc = soc.intersect(
                Subspace.from_rows(F, _kernel_rows(F, A), self.length)
            )
        self._socle = soc
        self.a = soc.dim
        self.r = self.hilbert[2] if self.h >= 2 else 0
        self.gorenstein = self.a == 1

    # -- queries --------------------------------------------------------

    def multiply(self, u, v):
        """Product of two elements given as global coordinate vectors."""
        F = self.field
        out = F.zeros(self.length)
        for i in np.flatnonzero(u):
            out = out + u[i] * (self.left_mult[i] @ v)
        return F.mod(out)

    def normal_form(self, poly):
        """Coordinate vector of a polynomial, given as exponent dict."""
        F = self.field
        v = F.zeros(self.length)
        for mon, coeff in poly.items():
            v = v + F.scalar(coeff) * self.monomial_vector(mon)
        return F.mod(v)

    def socle_subspace(self):
        return self._socle

    def invariants(self):
        return {
            "e": self.e,
            "lambda": self.length,
            "h": self.h,
            "a": self.a,
            "r": self.r,
            "gorenstein": self.gorenstein,
        }

    def basis_name(self, i):
        d, mon = self.basis[i]
        if d == 0:
            return "1"
        parts = []
        for g, k in enumerate(mon):
            if k == 1:
                parts.append(self.varnames[g])
            elif k > 1:
                parts.append(f"{self.varnames[g]}^{k}")
        return "*".join(parts)

    def element_str(self, v):
        terms = []
        for i in np.flatnonzero(v):
            c = v[i]
            name = self.basis_name(i)
            if c == self.field.one:
                terms.append(name)
            else:
                terms.append(f"{c}*{name}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        rels = len(self.presentation.relations)
        return (
            f"GradedRing({self.field}, vars={self.varnames}, {rels} relations, "
            f"hilbert={self.hilbert})"
        )


def _kernel_rows(F, A):
    from .linalg import kernel_basis

    return kernel_basis(F, A)


def build_ring(presentation, degree_cap=30):
    """Construct the graded quotient, stopping at the first zero degree."""
    if degree_cap < 2:
        raise PresentationError("degree_cap must be >= 2")
    F = presentation.field
    e = len(presentation.varnames)
    rels = [
        {m: F.scalar(c) for m, c in f.items() if F.scalar(c) != F.zero}
        for f in presentation.relations
    ]
    rels = [f for f in rels if f]
    for f in rels:
        if _poly_degree(f) < 2:
            raise PresentationError("relation of degree < 2 after coefficient reduction")

    degrees = []
    d = 0
    while True:
        mons = monomials(e, d)
        idx = {m: i for i, m in enumerate(mons)}
        span_rows = []
        for f in rels:
            d0 = _poly_degree(f)
            if d0 > d:
                continue
            for u in monomials(e, d - d0):
                row = F.zeros(len(mons))
                for m, c in f.items():
                    row[idx[_mono_mul(u, m)]] = c
                span_rows.append(row)
        if span_rows:
            red, piv = rref(F, np.vstack(span_rows))
        else:
            red, piv = F.zeros((0, len(mons))), []
        std = [m for i, m in enumerate(mons) if i not in piv]
        if not std:
            h = d - 1
            break
        if d >= degree_cap:
            raise NotArtinianError(
                f"R_{d} is nonzero at degree cap {degree_cap}; quotient not Artinian?"
            )
        # normal forms: residual of each monomial after elimination by the span
        span = Subspace(F, len(mons), red[: len(piv)], tuple(piv))
        std_cols = [idx[m] for m in std]
        nf = {}
        eye = F.eye(len(mons))
        for i, m in enumerate(mons):
            res = span.reduce(eye[i])
            nf[m] = res[std_cols].copy()
        degrees.append((std, nf))
        d += 1
    return GradedRing(presentation, degrees, h)


# -- convenience constructors used by tests and the canned corpus ------


def ring_from_strings(field, varnames, relation_strings):
    from .instancefile import parse_poly

    rels = [parse_poly(s, varnames) for s in relation_strings]
    return build_ring(RingPresentation(field, list(varnames), rels))


def monomial_square_zero_rings(field, e_max=3):
    """All monomial quotients with m^3=0 and e <= e_max, up to permuting
    the generators.  Relations: a subset of the degree-2 monomials plus
    every degree-3 monomial."""
    out = []
    for e in range(1, e_max + 1):
        quad = monomials(e, 2)
        cubics = monomials(e, 3)
        seen = set()
        for mask in range(2 ** len(quad)):
            chosen = frozenset(q for i, q in enumerate(quad) if mask >> i & 1)
            canon = min(
                tuple(sorted(tuple(m[p] for p in perm) for m in chosen))
                for perm in permutations(range(e))
            )
            if canon in seen:
                continue
            seen.add(canon)
            rels = [{m: 1} for m in sorted(chosen, reverse=True)]
            rels += [{m: 1} for m in cubics]
            names = [f"x{i+1}" for i in range(e)]
            out.append(build_ring(RingPresentation(field, names, rels)))
    return out
