"""Executable statement registry S1-S29.

Each statement is a predicate over an instance (ring + named modules +
integer parameters) returning VACUOUS (a hypothesis clause failed),
PASS, or FAIL with a serialized counterexample.  For the conjecture
statements the passing status is NO_COUNTEREXAMPLE instead of PASS.

Proved statements can only FAIL on an engine defect, so any FAIL is a
bug report in disguise; the suite runner treats it as fatal.
"""

import math
from dataclasses import dataclass, field as dfield
from fractions import Fraction

import numpy as np

from .homology import (
    betti_numbers,
    ext_dim,
    koszul_test,
    resolve,
    tor_dim,
    tor_induced_k,
    tor_window_zero,
)
from .linalg import Subspace, kernel_basis
from .modules import (
    canonical_module,
    cover_map,
    free_module,
    matlis_dual,
    regular_module,
    residue_field,
    submodule_module,
    tensor_over_R,
    presentation_of,
    wedge_image,
)

VACUOUS = "VACUOUS"
PASS = "PASS"
FAIL = "FAIL"
NO_COUNTEREXAMPLE = "NO_COUNTEREXAMPLE"

DEFAULT_CUTOFF = 12


@dataclass
class Instance:
    name: str
    ring: object
    modules: dict
    params: dict = dfield(default_factory=dict)
    provenance: str = "canned"

    def module(self, name):
        if name in self.modules:
            return self.modules[name]
        ring = self.ring
        if name == "k":
            mod = residue_field(ring)
        elif name == "R":
            mod = regular_module(ring)
        elif name == "omega":
            mod = canonical_module(ring)
        elif name == "omega1":
            mod = resolve(self.module("omega"), 1).syzygy_module(1)
        else:
            raise KeyError(f"instance {self.name!r} has no module {name!r}")
        self.modules[name] = mod
        return mod

    def has(self, name):
        return name in self.modules or name in ("k", "R", "omega", "omega1")


@dataclass
class Verdict:
    statement: str
    status: str
    hypothesis: str
    conclusion: str
    cutoff: int
    counterexample: str = None
    data: dict = dfield(default_factory=dict)

    def __str__(self):
        msg = f"{self.statement}: {self.status}"
        if self.status == VACUOUS:
            msg += f" ({self.hypothesis})"
        elif self.conclusion:
            msg += f" ({self.conclusion})"
        return msg


class _Vacuous(Exception):
    def __init__(self, clause):
        self.clause = clause


def _need(cond, clause):
    if not cond:
        raise _Vacuous(clause)


def _gamma(mod):
    return mod.gamma()


# Resolutions with rapidly growing Betti numbers are cut off once the
# realized differential would exceed this many columns; statements treat
# an unaffordable window as unverified (VACUOUS), never as evidence.
_WORK_CAP = 1500


def _max_depth(mod, n):
    """Deepest resolution depth <= n affordable under the work cap."""
    if mod.dim == 0:
        return n
    lam = mod.ring.length
    res = resolve(mod, 1)
    depth = 1
    while depth < n:
        if res.finite:
            return n
        if res.betti_number(depth) * lam > _WORK_CAP:
            return depth
        res.extend(depth + 1)
        depth += 1
    return n


def _afford(M, i):
    """True if Tor_i computed from M's resolution is within the cap."""
    return _max_depth(M, i + 1) > i


def _first_zero_window(M, N, width, lo, hi):
    """Smallest j in [lo, hi] with Tor_{j..j+width-1}(M, N) = 0; the
    scan stops early (returning None) if the cap is hit first."""
    run = 0
    for i in range(lo, hi + width):
        if not _afford(M, i):
            return None
        if tor_dim(M, N, i) == 0:
            run += 1
            if run >= width:
                return i - width + 1
        else:
            run = 0
    return None


def _window_ok(M, N, lo, hi):
    """Verified-all-zero check on [lo, hi], honoring the work cap."""
    for i in range(lo, hi + 1):
        if not _afford(M, i) or tor_dim(M, N, i) != 0:
            return False
    return True


def _subspaces_equal(a, b):
    return a.dim == b.dim and a.contains_space(b)


def _m_square_part(ring):
    """m^2 as a subspace of R: coordinates of degree >= 2."""
    F = ring.field
    idx = [i for i, (d, _) in enumerate(ring.basis) if d >= 2]
    rows = F.zeros((len(idx), ring.length))
    for k, i in enumerate(idx):
        rows[k, i] = F.one
    return Subspace.from_rows(F, rows, ring.length)


def _kills_m_squared(mod):
    return mod.msub(2).dim == 0


def _nu_of_subquotient(mod, j):
    """nu(m^j M) computed on the submodule m^j M."""
    S = mod.msub(j)
    if S.dim == 0:
        return 0
    sub, _ = submodule_module(mod, S)
    return sub.min_gens()


# ---------------------------------------------------------------------
# statement bodies: raise _Vacuous or return (ok, conclusion_report, data)
# ---------------------------------------------------------------------


def _s1(inst, n):
    M, N = inst.module("M"), inst.module("N")
    _need(not N.is_zero(), "N is zero")
    _need(not N.is_free(), "N has finite projective dimension")
    i = inst.params.get("i") or _first_zero_window(M, N, 1, 1, n)
    _need(i is not None, f"no vanishing Tor index in [1,{n}]")
    _need(tor_dim(M, N, i) == 0, f"Tor_{i}(M,N) != 0")
    res = resolve(M, i)
    bad = [j for j in range(i)
           if res.syzygy_module(j).has_k_summand()]
    return not bad, f"k-summand-free syzygies M_0..M_{i-1}" if not bad else \
        f"k is a summand of M_{bad[0]}", {"i": i}


def _s2(inst, n):
    M, N = inst.module("M"), inst.module("N")
    n = inst.params.get("n", min(n, 6))
    _need(_window_ok(M, N, 1, n), f"Tor window [1,{n}] not verified zero")
    T = tensor_over_R(M, N)
    n = min(n, _max_depth(M, n), _max_depth(N, n), _max_depth(T, n))
    _need(n >= 1, "resolution work cap leaves no checkable window")
    pT = betti_numbers(T, n)
    pM = betti_numbers(M, n)
    pN = betti_numbers(N, n)
    prod = [sum(pM[j] * pN[i - j] for j in range(i + 1)) for i in range(n + 1)]
    ok = pT == prod
    return ok, f"P(M(x)N)={pT} vs P(M)*P(N)={prod}", {}


def _s3(inst, n):
    M = inst.module("M")
    _need(not M.is_zero(), "M is zero")
    g = _gamma(M)
    lam_r = M.ring.length
    checks = [
        0 <= g <= lam_r - 1,
        (g == 0) == (M.mm().dim == 0),
        (g == lam_r - 1) == M.is_free(),
        M.dim == M.min_gens() * (g + 1),
    ]
    return all(checks), f"gamma={g}, range/extreme/identity checks {checks}", {}


def _s4(inst, n):
    M, N = inst.module("M"), inst.module("N")
    _need(not M.is_zero(), "M is zero")
    _need(not N.is_free(), "N is free")
    i = inst.params.get("i") or _first_zero_window(M, N, 1, 1, n)
    _need(i is not None, f"no vanishing Tor index in [1,{n}]")
    resN = resolve(N, i)
    b = betti_numbers(N, i)
    Ni = resN.syzygy_module(i)
    Nprev = resN.syzygy_module(i - 1)
    TMi = tensor_over_R(M, Ni)
    TMprev = tensor_over_R(M, Nprev)
    gM = _gamma(M)
    gTi = _gamma(TMi) if not TMi.is_zero() else Fraction(0)
    gTp = _gamma(TMprev) if not TMprev.is_zero() else Fraction(0)
    report = []
    ok = True
    eq1 = (gTi + 1) * b[i] == (gM - gTp) * b[i - 1]
    ineq = b[i] <= gM * b[i - 1]
    ok &= eq1 and ineq
    report.append(f"(1) identity {eq1}, b_i <= gamma(M) b_(i-1) {ineq}")
    if _kills_m_squared(M):
        part2 = TMi.mm().dim == 0 and b[i] == (gM - gTp) * b[i - 1]
        ok &= part2
        report.append(f"(2) m(M(x)N_i)=0 and exact ratio {part2}")
        if i > 1 and tor_dim(M, N, i - 1) == 0:
            part3 = b[i] == gM * b[i - 1]
            ok &= part3
            report.append(f"(3) b_i = gamma(M) b_(i-1) {part3}")
    return ok, "; ".join(report), {"i": i}


def _s5(inst, n):
    M, N = inst.module("M"), inst.module("N")
    _need(not M.is_zero(), "M is zero")
    _need(not N.is_free(), "N is free")
    report = []
    ok = True
    ran = False
    nu = N.min_gens()
    if nu <= n and _window_ok(M, N, 1, nu):
        ran = True
        good = _gamma(M) >= 1
        ok &= good
        report.append(f"(1) gamma(M)={_gamma(M)} >= 1: {good}")
    if _kills_m_squared(M):
        b1 = betti_numbers(N, 1)[1]
        if b1 >= 1:
            depth = int(math.floor(math.log2(b1))) + 2
            if depth <= n and _window_ok(M, N, 1, depth):
                ran = True
                good = _gamma(M).denominator == 1
                ok &= good
                report.append(f"(2) gamma(M)={_gamma(M)} integral: {good}")
    _need(ran, "no sub-hypothesis window satisfied")
    return ok, "; ".join(report), {}


def _s6(inst, n):
    M, N = inst.module("M"), inst.module("N")
    _need(not M.is_free(), "M is free")
    _need(not N.is_free(), "N is free")
    _need(_kills_m_squared(M), "m^2 M != 0")
    _need(tor_window_zero(M, N, 1, 2), "Tor_1 or Tor_2 nonzero")
    b = betti_numbers(M, 1)
    gM = _gamma(M)
    eq1 = b[1] == (M.ring.e - gM) * b[0]
    # m M_1 = m^2 R^{b0} inside the covering free module
    ring = M.ring
    F = ring.field
    Fr, cover = cover_map(M)
    amb = b[0] * ring.length
    K = Subspace.from_rows(F, kernel_basis(F, cover.matrix), amb)
    mK_rows = [F.mod(A @ K.basis.T).T for A in Fr.actions]
    mK = Subspace.from_rows(F, np.vstack(mK_rows), amb)
    eq2 = _subspaces_equal(mK, Fr.msub(2))
    return eq1 and eq2, f"b1=(e-gamma)b0: {eq1}; mM1=m^2R^b0: {eq2}", {}


def _s7(inst, n):
    M, N = inst.module("M"), inst.module("N")
    for name, L in (("M", M), ("N", N)):
        _need(not L.is_free(), f"{name} is free")
        _need(_kills_m_squared(L), f"m^2 {name} != 0")
    _need(tor_window_zero(M, N, 1, 2), "Tor_1 or Tor_2 nonzero")
    T = tensor_over_R(M, N)
    ok = _gamma(M) + _gamma(N) - _gamma(T) == M.ring.e
    return ok, f"gamma(M)+gamma(N)-gamma(M(x)N) = {_gamma(M)+_gamma(N)-_gamma(T)} vs e={M.ring.e}", {}


def _s8(inst, n):
    M, N = inst.module("M"), inst.module("N")
    n = inst.params.get("n", min(n, 6))
    for name, L in (("M", M), ("N", N)):
        _need(not L.is_free(), f"{name} is free")
        _need(_kills_m_squared(L), f"m^2 {name} != 0")
    _need(_window_ok(M, N, 1, n), f"Tor window [1,{n}] not verified zero")
    k = inst.module("k")
    n = min(n, _max_depth(k, n))
    _need(n >= 1, "resolution work cap leaves no checkable window")
    T = tensor_over_R(M, N)
    gM, gN, gT = _gamma(M), _gamma(N), _gamma(T)
    # truncated expansion of (1 - gT t) / ((1 - gM t)(1 - gN t))
    denom = [Fraction(1), -(gM + gN), gM * gN]
    numer = [Fraction(1), -gT]
    series = []
    for d in range(n + 1):
        c = (numer[d] if d < len(numer) else Fraction(0))
        c -= sum(denom[j] * series[d - j] for j in range(1, min(d, 2) + 1))
        series.append(c)
    pk = betti_numbers(k, n)
    ok = [Fraction(x) for x in pk] == series
    return ok, f"P_k={pk} vs series={[str(c) for c in series]}", {}


def _s9(inst, n):
    M, N = inst.module("M"), inst.module("N")
    _need(inst.ring.h <= 1, "m^2 != 0")
    i = inst.params.get("i") or _first_zero_window(M, N, 1, 2, n)
    _need(i is not None and i > 1, f"no vanishing Tor index in [2,{n}]")
    _need(tor_dim(M, N, i) == 0, f"Tor_{i} != 0")
    ok = M.is_free() or N.is_free()
    return ok, f"M free: {M.is_free()}, N free: {N.is_free()}", {"i": i}


def _s10(inst, n):
    M = inst.module("M")
    # h == 2 excludes m^2 = 0, where every syzygy is a k-vector space and
    # the equality criterion below degenerates (equality holds while k is
    # trivially a summand of each syzygy).
    _need(inst.ring.h == 2, "need m^3 = 0 and m^2 != 0")
    _need(not M.is_free(), "M is free")
    _need(_kills_m_squared(M), "m^2 M != 0")
    depth = min(inst.params.get("depth", 5), n, _max_depth(M, n + 1) - 1)
    _need(depth >= 1, "resolution work cap leaves no checkable depth")
    res = resolve(M, depth + 1)
    b = [res.betti_number(i) for i in range(depth + 2)]
    e, a = inst.ring.e, inst.ring.a
    report = []
    ok = True
    for i in range(depth):
        Mi = res.syzygy_module(i)
        nu_m = _nu_of_subquotient(Mi, 1)
        lhs, rhs = b[i + 1], e * b[i] - nu_m
        if lhs < rhs:
            ok = False
            report.append(f"(1) b_{i+1}={lhs} < e*b_{i}-nu(mM_{i})={rhs}")
        summand = res.syzygy_module(i + 1).has_k_summand()
        if (lhs == rhs) != (not summand):
            ok = False
            report.append(f"(1) equality/k-summand mismatch at i={i}")
        if i > 1 and not Mi.has_k_summand():
            if nu_m != a * b[i - 1]:
                ok = False
                report.append(f"(2) nu(mM_{i})={nu_m} != a*b_{i-1}={a*b[i-1]}")
    return ok, "; ".join(report) or f"Lescot bounds hold through i={depth-1}", {}


def _s11(inst, n):
    M = inst.module("M")
    _need(not M.is_zero(), "M is zero")
    _need(_kills_m_squared(M), "m^2 M != 0")
    _need(not M.has_k_summand(), "k is a direct summand of M")
    ok = _subspaces_equal(M.socle(), M.mm())
    return ok, f"Soc(M) dim {M.socle().dim} vs mM dim {M.mm().dim}", {}


def _s12(inst, n):
    M, N = inst.module("M"), inst.module("N")
    _need(inst.ring.h <= 2, "m^3 != 0")
    _need(not M.is_free(), "M is free")
    _need(not N.is_free(), "N is free")
    i = inst.params.get("i") or _first_zero_window(M, N, 1, 3, n)
    _need(i is not None and i >= 3, f"no vanishing Tor index in [3,{n}]")
    _need(tor_dim(M, N, i) == 0, f"Tor_{i} != 0")
    soc = inst.ring.socle_subspace()
    ok = _subspaces_equal(soc, _m_square_part(inst.ring))
    return ok, f"Soc(R) dim {soc.dim} vs m^2 dim {_m_square_part(inst.ring).dim}", {"i": i}


def _three_tor_hyp(inst, n):
    M, N = inst.module("M"), inst.module("N")
    _need(inst.ring.h <= 2, "m^3 != 0")
    for name, L in (("M", M), ("N", N)):
        _need(not L.is_free(), f"{name} is free")
        _need(_kills_m_squared(L), f"m^2 {name} != 0")
    j = inst.params.get("j") or _first_zero_window(M, N, 3, 1, n - 2)
    _need(j is not None and j > 0, f"no triple-zero Tor window in [1,{n}]")
    _need(_window_ok(M, N, j, j + 2), f"Tor_[{j},{j+2}] not all zero")
    _need(_max_depth(N, j + 2) >= j + 2, "N resolution exceeds work cap")
    return M, N, j


def _s13(inst, n):
    M, N, j = _three_tor_hyp(inst, n)
    e, a = inst.ring.e, inst.ring.a
    gM, gN = _gamma(M), _gamma(N)
    resM = resolve(M, j + 2)
    resN = resolve(N, j + 2)
    bM = [resM.betti_number(i) for i in range(j + 3)]
    bN = [resN.betti_number(i) for i in range(j + 3)]
    report = []
    ok = True
    if not (gM.denominator == 1 and gM >= 1 and gN.denominator == 1 and gN >= 1):
        ok = False
        report.append(f"(1) gamma(M)={gM}, gamma(N)={gN} not positive integers")
    for i in range(j + 2):
        if bM[i + 1] != gN * bM[i] or bN[i + 1] != gM * bN[i]:
            ok = False
            report.append(f"(2) Betti ratio fails at i={i}")
    for i in range(j + 1):
        if _gamma(resM.syzygy_module(i)) != gM or _gamma(resN.syzygy_module(i)) != gN:
            ok = False
            report.append(f"(3) gamma of syzygy differs at i={i}")
    if gM + gN != e or gM * gN != a:
        ok = False
        report.append(f"(4) sum={gM+gN} vs e={e}, product={gM*gN} vs a={a}")
    return ok, "; ".join(report) or f"all four conclusions hold (j={j})", {"j": j}


def _s14(inst, n):
    M, N, j = _three_tor_hyp(inst, n)
    l = inst.params.get("l", min(n, j + 4))
    _need(l >= j + 3, f"l={l} < j+3={j+3}")
    _need(_afford(M, l) and _max_depth(N, l) >= l,
          f"resolution work cap below l={l}")
    _need(tor_dim(M, N, l) == 0, f"Tor_{l} != 0")
    gM, gN = _gamma(M), _gamma(N)
    bM = betti_numbers(M, l)
    bN = betti_numbers(N, l)
    ok = all(bM[i + 1] == gN * bM[i] and bN[i + 1] == gM * bN[i]
             for i in range(l - 1))
    return ok, f"Betti ratios extend through i={l-1}: {ok}", {"j": j, "l": l}


def _s15(inst, n):
    ring = inst.ring
    _need(ring.h == 2, "need m^3 = 0 and m^2 != 0")
    omega = inst.module("omega")
    N = inst.module("omega1")
    e, a, r, lam = ring.e, ring.a, ring.r, ring.length
    report = []
    ok = True
    if not (omega.dim == lam == 1 + r + e):
        ok = False
        report.append(f"(1) lambda(omega)={omega.dim}, lambda(R)={lam}, 1+r+e={1+r+e}")
    nu_momega = _nu_of_subquotient(omega, 1)
    if nu_momega != e + r - a:
        ok = False
        report.append(f"(2) nu(m omega)={nu_momega} != e+r-a={e+r-a}")
    if N.dim != (a - 1) * (1 + r + e):
        ok = False
        report.append(f"(3) lambda(omega_1)={N.dim} != (a-1)(1+r+e)")
    if not N.is_zero() and not N.has_k_summand() and a == r:
        if N.min_gens() != e * (a - 1) or _gamma(N) != Fraction(1 + a, e):
            ok = False
            report.append(f"(4) nu={N.min_gens()}, gamma={_gamma(N)}")
    return ok, "; ".join(report) or "dualizing-module numerics hold", {}


def _s16(inst, n):
    ring = inst.ring
    M = inst.module("M")
    omega = inst.module("omega")
    _need(ring.h <= 2, "m^3 != 0")
    _need(not ring.gorenstein, "ring is Gorenstein")
    _need(not M.is_free(), "M is free")
    _need(_kills_m_squared(M), "m^2 M != 0")
    j = inst.params.get("j") or _first_zero_window(M, omega, 3, 2, n - 2)
    _need(j is not None and j >= 2, f"no triple-zero Tor(M,omega) window from 2 in [2,{n}]")
    _need(_window_ok(M, omega, j, j + 2), f"Tor_[{j},{j+2}](M,omega) not all zero")
    e, a = ring.e, ring.a
    omega1 = inst.module("omega1")
    b = betti_numbers(M, j + 2)
    checks = {
        "e=a+1": e == a + 1,
        "gamma(omega_1)=1": _gamma(omega1) == 1,
        "gamma(M)=a": _gamma(M) == a,
        "constant Betti": len(set(b[: j + 3])) == 1,
    }
    ok = all(checks.values())
    return ok, ", ".join(f"{k}: {v}" for k, v in checks.items()), {"j": j, "e": e, "a": a,
                                                                  "gammaM": _gamma(M)}


def _s17(inst, n):
    ring = inst.ring
    _need(ring.h <= 2, "m^3 != 0")
    omega = inst.module("omega")
    part = inst.params.get("part")
    report = []
    ok = True
    if ring.gorenstein:
        bad = [i for i in range(1, n + 1) if tor_dim(omega, omega, i) != 0]
        ok = not bad
        report.append(f"Gorenstein: Tor_i(omega,omega)=0 through {n}: {ok}")
    else:
        t1 = tor_dim(omega, omega, 1)
        t2 = tor_dim(omega, omega, 2)
        t3 = tor_dim(omega, omega, 3)
        if part in (None, 2):
            good = t1 > 0
            ok &= good
            report.append(f"(2=>1) Tor_1(omega,omega)={t1} > 0: {good}")
        if part in (None, 3):
            good = not (t2 == 0 and t3 == 0)
            ok &= good
            report.append(f"(3=>1) Tor_2,Tor_3 not both zero: {good}")
        if part in (None, 4):
            window = _first_zero_window(omega, omega, 3, 3, n - 2)
            good = window is None
            ok &= good
            report.append(f"(4=>1) no triple-zero window from j>=3 through {n}: {good}")
    return ok, "; ".join(report), {}


def _s18(inst, n):
    M, N, j = _three_tor_hyp(inst, n)
    resM = resolve(M, j + 1)
    report = []
    ok = True
    for i in range(j + 1):
        lhs = tor_dim(M, N, i + 1) == 0
        Ti = tensor_over_R(resM.syzygy_module(i), N)
        Tnext = tensor_over_R(resM.syzygy_module(i + 1), N)
        rhs = Ti.mm().dim == 0 and Tnext.mm().dim == 0
        if lhs != rhs:
            ok = False
            report.append(f"iff fails at i={i}: Tor zero {lhs}, m-kills {rhs}")
    return ok, "; ".join(report) or f"iff holds for 0<=i<={j}", {"j": j}


def _s19(inst, n):
    ring = inst.ring
    M, N = inst.module("M"), inst.module("N")
    lam_m2 = sum(ring.hilbert[2:])
    _need(ring.e >= lam_m2 - ring.h + 4,
          f"e={ring.e} < lambda(m^2)-h+4={lam_m2 - ring.h + 4}")
    _need(not M.is_zero() and not N.is_zero(), "a module is zero")
    ran = False
    report = []
    ok = True
    if _kills_m_squared(M):
        b1 = betti_numbers(N, 1)[1]
        c = max(4, int(math.floor(math.log2(b1))) + 2) if b1 >= 1 else 4
        if c <= n and _window_ok(M, N, 1, c):
            ran = True
            good = M.is_free() or N.is_free()
            ok &= good
            report.append(f"(1) c(N)={c}: M or N free: {good}")
    if ring.h <= 2:
        j = _first_zero_window(M, N, 3, 2, n - 2)
        if j is not None:
            ran = True
            good = M.is_free() or N.is_free()
            ok &= good
            report.append(f"(2) triple window at j={j}: M or N free: {good}")
    _need(ran, "no vanishing window satisfied")
    return ok, "; ".join(report), {}


def _ext_self_and_ring_zero(M, lo, hi):
    R1 = regular_module(M.ring)
    return all(ext_dim(M, M, i) == 0 and ext_dim(M, R1, i) == 0
               for i in range(lo, hi + 1))


def _s20(inst, n):
    ring = inst.ring
    M = inst.module("M")
    _need(ring.h <= 2, "m^3 != 0")
    report = []
    ok = True
    ran = False
    start = inst.params.get("i")
    starts = [start] if start else range(2, n - 2)
    for s in starts:
        if not _afford(M, s + 3):
            break
        if _ext_self_and_ring_zero(M, s, s + 3):
            ran = True
            good = M.is_free()
            ok &= good
            report.append(f"(1) Ext(M,M+R)=0 on [{s},{s+3}]: M free: {good}")
            break
    if ring.gorenstein:
        for i in range(1, n + 1):
            if not _afford(M, i):
                break
            if ext_dim(M, M, i) == 0:
                ran = True
                good = M.is_free()
                ok &= good
                report.append(f"(2) Gorenstein, Ext^{i}(M,M)=0: M free: {good}")
                break
    _need(ran, "no vanishing Ext window satisfied")
    return ok, "; ".join(report), {}


def _s21(inst, n):
    M = inst.module("M")
    _need(_kills_m_squared(M), "m^2 M != 0")
    _need(not M.is_zero(), "M is zero")
    bound = max(3, M.min_gens(), _nu_of_subquotient(M, 1))
    _need(bound <= n, f"window bound {bound} exceeds cutoff {n}")
    _need(_afford(M, bound), f"resolution work cap below {bound}")
    _need(_ext_self_and_ring_zero(M, 1, bound),
          f"Ext(M, M+R) window [1,{bound}] not all zero")
    ok = M.is_free()
    return ok, f"M free: {ok} (window [1,{bound}])", {}


def _s22(inst, n):
    ring = inst.ring
    M = inst.module("M")
    _need(ring.h >= 2, "m^2 = 0")
    _need(not M.is_zero(), "M is zero")
    _need(_kills_m_squared(M), "m^2 M != 0")
    i = next((i for i in range(1, n + 1)
              if _afford(M, i) and ext_dim(M, M, i) == 0), None)
    _need(i is not None, f"no vanishing Ext^i(M,M) in [1,{n}]")
    gM = _gamma(M)
    if gM == 0:
        return False, "gamma(M)=0 with vanishing Ext (engine defect)", {"i": i}
    gD = _gamma(matlis_dual(M))
    ok = gD == 1 / gM
    return ok, f"gamma(M^v)={gD} vs 1/gamma(M)={1/gM}", {"i": i}


def _s23(inst, n):
    ring = inst.ring
    M = inst.module("M")
    _need(not M.is_zero(), "M is zero")
    _need(_kills_m_squared(M), "m^2 M != 0")
    ran = False
    bound = max(3, M.min_gens(), _nu_of_subquotient(M, 1))
    if bound <= n and _afford(M, bound) and \
            all(ext_dim(M, M, i) == 0 for i in range(1, bound + 1)):
        ran = True
    if not ran and ring.h <= 2:
        for s in range(1, n - 1):
            if not _afford(M, s + 2):
                break
            if all(ext_dim(M, M, i) == 0 for i in range(s, s + 3)):
                ran = True
                break
    _need(ran, "no vanishing Ext window satisfied")
    flat = ring.h <= 1
    dual_free = matlis_dual(M).is_free()
    ok = flat and (M.is_free() or dual_free)
    return ok, f"m^2=0: {flat}; M free: {M.is_free()}; M injective: {dual_free}", {}


def _s24(inst, n):
    M, N = inst.module("M"), inst.module("N")
    _need(not M.is_zero() and not N.is_zero(), "a module is zero")
    _need(_kills_m_squared(M), "m^2 M != 0")
    _need(_kills_m_squared(N), "m^2 N != 0")
    _need(_window_ok(M, N, 1, n), f"Tor window [1,{n}] not verified zero")
    ok = inst.ring.h <= 2
    return ok, f"m^3=0: {ok} (window verified through {n})", {"conjecture": True}


def _s25(inst, n):
    ok, concl, data = _s24(inst, n)
    data = dict(data)
    data.pop("conjecture", None)
    data["koszul_consistent"] = koszul_test(inst.ring, min(n, 5)).consistent
    return ok, concl + " [graded case: proved]", data


def _s26(inst, n):
    M, N = inst.module("M"), inst.module("N")
    _need(_kills_m_squared(M), "m^2 M != 0")
    _need(not N.is_free(), "N is free")
    j = inst.params.get("j", n)
    k = inst.module("k")
    j = min(j, _max_depth(k, j))
    _need(j >= 2, "j < 2 (or residue-field resolution exceeds work cap)")
    _need(_window_ok(M, N, 1, j), f"Tor window [1,{j}] not verified zero")
    mN = N.msub(1)
    _, incl = submodule_module(N, mN)
    bad = [i for i in range(j) if tor_induced_k(incl, i) != 0]
    ok = not bad
    return ok, f"Tor_i(k, mu_N)=0 for i in [0,{j-1}]: {ok}" + \
        (f" (fails at {bad[0]})" if bad else ""), {"j": j}


def _presented_module(inst):
    M = inst.module("M")
    pres = presentation_of(M)
    return M, pres


def _s27(inst, n):
    M, pres = _presented_module(inst)
    nrows = pres.shape[0]
    _need(nrows <= 8, "presentation wider than the 8x8 minor guard")
    img = wedge_image(M.ring, pres)
    report = []
    ok = True
    for row in img.basis:
        if np.any(M.ring_action(row)):
            ok = False
            report.append("a minor-span element fails to annihilate coker")
            break
    if M.annihilator_is_zero() and img.dim != 0:
        ok = False
        report.append("faithful cokernel with nonzero wedge image")
    return ok, "; ".join(report) or f"wedge span (dim {img.dim}) annihilates coker", {}


def _s28(inst, n):
    M, pres = _presented_module(inst)
    _need(pres.shape[0] == 2, "presentation does not embed N in R^2")
    _need(tor_dim(M, M, 2) == 0, "Tor_2(M,M) != 0")
    _need(M.annihilator_is_zero(), "M is not faithful")
    ring = M.ring
    F = ring.field
    g = pres.shape[1]
    lam = ring.length
    cols = pres.transpose(1, 0, 2).reshape(g, 2 * lam)
    from .modules import _free_op

    spans = [F.mod(cols @ _free_op(ring, 2, b).T) for b in range(lam)]
    Nspace = Subspace.from_rows(F, np.vstack(spans), 2 * lam)
    amb = free_module(ring, 2)
    Nmod, _ = submodule_module(amb, Nspace)
    nu = Nmod.min_gens()
    return nu <= 1, f"nu(N)={nu}", {}


def _s29(inst, n):
    ring = inst.ring
    _need(ring.a <= 2, f"type {ring.a} > 2")
    omega = inst.module("omega")
    _need(tor_dim(omega, omega, 2) == 0, "Tor_2(omega,omega) != 0")
    ok = ring.gorenstein
    return ok, f"Gorenstein: {ok} (type {ring.a})", {}


@dataclass
class Statement:
    id: str
    title: str
    statement: str
    body: callable
    conjecture: bool = False


_REGISTRY = [
    Statement("S1", "tor-vanishing-forbids-k-summands",
              "Tor_i(M,N)=0, N of infinite projective dimension => k is not a "
              "direct summand of M_0..M_(i-1)", _s1),
    Statement("S2", "truncated-poincare-product",
              "Tor_[1,n](M,N)=0 => [P_(M(x)N)]_<=n = [P_M * P_N]_<=n", _s2),
    Statement("S3", "gamma-range-and-extremes",
              "gamma(M) in [0, lambda(R)-1]; gamma=0 <=> mM=0; "
              "gamma=lambda(R)-1 <=> M free; lambda(M)=nu(M)(gamma(M)+1)", _s3),
    Statement("S4", "gamma-betti-identities",
              "(gamma(M(x)N_i)+1) b_i(N) = (gamma(M)-gamma(M(x)N_(i-1))) b_(i-1)(N), "
              "with sharper forms when m^2 M=0", _s4),
    Statement("S5", "gamma-at-least-one-and-integrality",
              "long Tor vanishing forces gamma(M)>=1, and integrality when "
              "m^2 M=0", _s5),
    Statement("S6", "first-betti-and-syzygy-span",
              "b_1(M)=(e-gamma(M)) b_0(M) and m M_1 = m^2 R^(b_0)", _s6),
    Statement("S7", "gamma-sum-rule",
              "gamma(M)+gamma(N)-gamma(M(x)N) = e", _s7),
    Statement("S8", "residue-field-poincare-form",
              "[P_k]_<=n equals the truncation of "
              "(1-gamma(M(x)N)t)/((1-gamma(M)t)(1-gamma(N)t))", _s8),
    Statement("S9", "square-zero-vanishing-forces-free",
              "m^2=0 and Tor_i(M,N)=0 for some i>1 => M or N free", _s9),
    Statement("S10", "lescot-betti-recurrence",
              "b_(i+1) >= e b_i - nu(mM_i), equality iff no k-summand of "
              "M_(i+1); nu(mM_i)=a b_(i-1) when i>1 and no k-summand", _s10),
    Statement("S11", "socle-equals-radical",
              "m^2 M=0 and no k-summand => Soc(M)=mM", _s11),
    Statement("S12", "ring-socle-is-m-squared",
              "Tor_i(M,N)=0 for some i>=3, M,N non-free => Soc(R)=m^2", _s12),
    Statement("S13", "three-tors-structure",
              "three consecutive vanishing Tors => gamma(M),gamma(N) positive "
              "integers, geometric Betti growth, gamma(M)+gamma(N)=e, "
              "gamma(M)gamma(N)=a", _s13),
    Statement("S14", "extended-betti-ratios",
              "b_(i+1)(N)=e b_i(N)-a b_(i-1)(N) extends the geometric ratios "
              "to i<=l-1 when Tor_l also vanishes", _s14),
    Statement("S15", "dualizing-module-numerics",
              "lambda(omega)=lambda(R)=1+r+e, nu(m omega)=e+r-a, "
              "lambda(omega_1)=(a-1)(1+r+e), gamma(omega_1)=(1+a)/e when a=r", _s15),
    Statement("S16", "three-tors-against-omega",
              "triple Tor(M,omega) vanishing from j>=2 => e=a+1, "
              "gamma(omega_1)=1, gamma(M)=a, constant Betti numbers", _s16),
    Statement("S17", "omega-tor-gorenstein-equivalences",
              "Gorenstein <=> Tor_1(omega,omega)=0 <=> Tor_2=Tor_3=0 <=> a "
              "triple-zero window from some j>=3", _s17),
    Statement("S18", "tor-vanishing-vs-m-killing-tensors",
              "Tor_(i+1)(M,N)=0 iff m(M_i (x) N)=0=m(M_(i+1) (x) N)", _s18),
    Statement("S19", "large-embedding-dimension-forces-free",
              "e >= lambda(m^2)-h+4 and enough Tor vanishing => M or N free", _s19),
    Statement("S20", "auslander-reiten-m3-zero",
              "Ext^i(M, M+R)=0 for four consecutive i>=2 => M free; "
              "Gorenstein with one vanishing Ext^i(M,M) => M free", _s20),
    Statement("S21", "auslander-reiten-square-zero-module",
              "m^2 M=0 and Ext^i(M,M+R)=0 for 0<i<=max(3,nu(M),nu(mM)) => "
              "M free", _s21),
    Statement("S22", "gamma-inverts-under-duality",
              "m^2!=0, m^2 M=0, some Ext^i(M,M)=0 => gamma(M^v)=1/gamma(M)", _s22),
    Statement("S23", "self-ext-vanishing-collapses-ring",
              "m^2 M=0 with a vanishing self-Ext window => m^2=0 and M free "
              "or injective", _s23),
    Statement("S24", "loewy-conjecture-probe",
              "m^2 M=m^2 N=0 and Tor_i(M,N)=0 for all i>0 => m^3=0 "
              "(conjectural; probe only)", _s24, conjecture=True),
    Statement("S25", "loewy-conjecture-graded-case",
              "standard graded: m^2 M=m^2 N=0 and full Tor vanishing => "
              "m^3=0", _s25),
    Statement("S26", "induced-map-on-tor-vanishes",
              "Tor_[1,j](M,N)=0 with m^2 M=0 => Tor_i(k, mN -> N)=0 for "
              "i in [0,j-1]", _s26),
    Statement("S27", "minor-span-annihilates-cokernel",
              "every element of the n x n minor span of a presentation "
              "annihilates the cokernel; faithful cokernel => span zero", _s27),
    Statement("S28", "faithful-tor2-forces-cyclic-kernel",
              "0->N->R^2->M->0 with M faithful and Tor_2(M,M)=0 => nu(N)<=1", _s28),
    Statement("S29", "type-two-tachikawa",
              "type(R)<=2 and Tor_2(omega,omega)=0 => R Gorenstein", _s29),
]

_BY_ID = {s.id: s for s in _REGISTRY}


def registry():
    return list(_REGISTRY)


def check(statement_id, inst, cutoff=DEFAULT_CUTOFF):
    """Evaluate one statement on one instance."""
    base, _, part = statement_id.partition(".")
    if base not in _BY_ID:
        raise KeyError(f"unknown statement {statement_id!r}")
    stmt = _BY_ID[base]
    if part:
        inst = Instance(inst.name, inst.ring, dict(inst.modules),
                        dict(inst.params, part=int(part), ), inst.provenance)
    try:
        ok, concl, data = stmt.body(inst, cutoff)
    except _Vacuous as v:
        return Verdict(statement_id, VACUOUS, v.clause, "", cutoff)
    except KeyError as exc:
        # a statement asking for a module the instance does not provide
        # has an unverifiable hypothesis
        return Verdict(statement_id, VACUOUS, f"missing module: {exc}", "",
                       cutoff)
    if ok:
        status = NO_COUNTEREXAMPLE if stmt.conjecture else PASS
        return Verdict(statement_id, status, "hypotheses hold", concl, cutoff,
                       data=data)
    counterexample = _serialize_counterexample(inst)
    return Verdict(statement_id, FAIL, "hypotheses hold", concl, cutoff,
                   counterexample=counterexample, data=data)


def _serialize_counterexample(inst):
    from .instancefile import serialize_instance

    mods = {name: mod for name, mod in inst.modules.items()
            if name not in ("k", "R")}
    try:
        return serialize_instance(inst.ring, mods)
    except Exception as exc:  # serialization must not mask the FAIL
        return f"# serialization failed: {exc}"


@dataclass
class SuiteReport:
    verdicts: list  # (instance name, Verdict)

    @property
    def counts(self):
        out = {PASS: 0, FAIL: 0, VACUOUS: 0, NO_COUNTEREXAMPLE: 0}
        for _, v in self.verdicts:
            out[v.status] += 1
        return out

    @property
    def failed(self):
        return [(n, v) for n, v in self.verdicts if v.status == FAIL]


AGP_RELATIONS = [
    "x1^2", "x1*x2 - x3*x4", "x1*x2 - x4^2", "x1*x3 - x2*x4",
    "x1*x4 - x2^2", "x1*x4 - x2*x3", "x1*x4 - x3^2",
]
AGP_PHI = [["x3", "x1"], ["x4", "x2"]]
AGP_PSI = [["x2", "-x1"], ["-x4", "x3"]]


def _cyclic(ring, polystrs):
    """R modulo the ideal generated by the given elements."""
    from .instancefile import parse_poly
    from .modules import from_presentation, rmatrix_from_polys

    rows = [[parse_poly(s, ring.varnames) for s in polystrs]]
    return from_presentation(ring, rmatrix_from_polys(ring, rows))


def _from_rows(ring, rows):
    from .instancefile import parse_poly
    from .modules import from_presentation, rmatrix_from_polys

    grid = [[parse_poly(s, ring.varnames) for s in row] for row in rows]
    return from_presentation(ring, rmatrix_from_polys(ring, grid))


def agp_example(field=None):
    """The rank-two periodic pair: a length-8 ring with m^3=0 and a
    cokernel with constant Betti number 2 and Ext^i(M,R)=0 for i>0."""
    from .linalg import GF101
    from .ring import ring_from_strings

    field = field or GF101
    ring = ring_from_strings(field, ["x1", "x2", "x3", "x4"], AGP_RELATIONS)
    M = _from_rows(ring, AGP_PHI)
    return ring, M


def canned_corpus(field=None, seed=7, randoms=4):
    """Deterministic instance corpus for suite runs and tests."""
    from .linalg import GF101
    from .modules import random_module
    from .ring import ring_from_strings

    field = field or GF101
    out = []

    chain = ring_from_strings(field, ["x"], ["x^4"])
    out.append(Instance("chain-length-4", chain,
                        {"M": _cyclic(chain, ["x"]),
                         "N": _cyclic(chain, ["x^2"])}))

    gor = ring_from_strings(field, ["x", "y"], ["x^2", "y^2"])
    out.append(Instance("gorenstein-square", gor,
                        {"M": _cyclic(gor, ["x"]),
                         "N": _cyclic(gor, ["x"])}))

    flat = ring_from_strings(field, ["x", "y"], ["x^2", "x*y", "y^2"])
    out.append(Instance("flat-square-zero", flat,
                        {"M": _cyclic(flat, ["x"]),
                         "N": _cyclic(flat, ["y"])}))

    gor3 = ring_from_strings(field, ["x", "y"], ["x^2 - y^2", "x*y"])
    out.append(Instance("gorenstein-cube", gor3,
                        {"M": _cyclic(gor3, ["x"]),
                         "N": _cyclic(gor3, ["x + y"])}))

    ring, M = agp_example(field)
    out.append(Instance("agp", ring,
                        {"M": M, "N": canonical_module(ring)}))

    hosts = [gor, flat, gor3]
    for t in range(randoms):
        host = hosts[t % len(hosts)]
        Mr = random_module(host, seed + 2 * t, square_zero=True)
        Nr = random_module(host, seed + 2 * t + 1)
        out.append(Instance(f"random-{t}", host, {"M": Mr, "N": Nr},
                            provenance=f"seed={seed + 2 * t}"))
    return out


def check_suite(corpus, ids=None, cutoff=DEFAULT_CUTOFF):
    ids = ids or [s.id for s in _REGISTRY]
    verdicts = []
    for inst in corpus:
        for sid in ids:
            verdicts.append((inst.name, check(sid, inst, cutoff=cutoff)))
    return SuiteReport(verdicts)
