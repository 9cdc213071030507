"""Randomized counterexample explorer.

Searches for pairs (M, N) with m^p M = 0 = m^q N over rings with
m^(p+q-1) != 0 whose Tor modules all vanish up to a cutoff.  For the
standard graded rings generated here no candidate should survive (the
graded case is a theorem), so a confirmed candidate is an engine bug.

Determinism contract: identical (seed, budget, params, field) produce a
byte-identical machine report.
"""

from dataclasses import dataclass, field as dfield

import numpy as np

from .homology import tor_profile
from .instancefile import serialize_instance
from .linalg import GF101
from .modules import quotient_module, random_module
from .ring import (
    NotArtinianError,
    PresentationError,
    RingPresentation,
    build_ring,
    monomials,
)

REJECTION_CAP = 100


@dataclass
class Candidate:
    trial: int
    dossier: str  # serialized instance file
    profile: list
    recheck: list
    confirmed: bool


@dataclass
class ExploreReport:
    seed: int
    budget: int
    cutoff: int
    p: int
    q: int
    trials: int = 0
    rejected_rings: int = 0
    histogram: dict = dfield(default_factory=dict)
    candidates: list = dfield(default_factory=list)
    vacuous: bool = False

    def machine_lines(self):
        lines = [
            f"explore.seed={self.seed}",
            f"explore.budget={self.budget}",
            f"explore.cutoff={self.cutoff}",
            f"explore.p={self.p}",
            f"explore.q={self.q}",
            f"explore.trials={self.trials}",
            f"explore.rejected_rings={self.rejected_rings}",
        ]
        if self.vacuous:
            lines.append("explore.vacuous=1")
            lines.append("explore.note=vacuously consistent: p=1 or q=1")
        for key in sorted(self.histogram):
            lines.append(f"explore.hist.{key}={self.histogram[key]}")
        lines.append(f"explore.candidates={len(self.candidates)}")
        for i, c in enumerate(self.candidates):
            lines.append(f"explore.candidate.{i}.trial={c.trial}")
            lines.append(f"explore.candidate.{i}.confirmed={int(c.confirmed)}")
        return lines

    @property
    def found_counterexample(self):
        return any(c.confirmed for c in self.candidates)


def random_ring(field, rng, e_range=(2, 4), h_min=3, lam_max=30):
    """Random standard graded Artinian ring with Loewy length >= h_min.

    Each generator gets a cubic guard relation x_i^3 so the quotient is
    always Artinian; random quadrics are layered on top and the draw is
    rejected if they crush R_3 or exceed the length bound lam_max (which
    keeps per-trial homology at desk scale).  Returns None after
    REJECTION_CAP tries.
    """
    lo, hi = e_range
    for _ in range(REJECTION_CAP):
        e = int(rng.integers(lo, hi + 1))
        names = [f"x{i+1}" for i in range(e)]
        quad = monomials(e, 2)
        rels = []
        for i in range(e):
            exp = tuple(3 if j == i else 0 for j in range(e))
            rels.append({exp: 1})
        nquad = int(rng.integers(max(1, e - 2), e + 1))
        for _ in range(nquad):
            if field.p is not None:
                coeffs = rng.integers(0, field.p, size=len(quad))
            else:
                coeffs = rng.integers(-5, 6, size=len(quad))
            poly = {m: int(c) for m, c in zip(quad, coeffs) if int(c) != 0}
            if poly:
                rels.append(poly)
        try:
            ring = build_ring(RingPresentation(field, names, rels),
                              degree_cap=3 * e + 1)
        except (PresentationError, NotArtinianError):
            continue
        if ring.h >= h_min and ring.length <= lam_max:
            return ring
    return None


def _loewy_truncate(mod, power):
    """Quotient so that m^power kills the module."""
    if mod.dim == 0:
        return mod
    S = mod.msub(power)
    if S.dim == 0:
        return mod
    out, _ = quotient_module(mod, S)
    return out


def _trial_modules(ring, rng, p, q, nu_max):
    for _ in range(REJECTION_CAP):
        s1 = int(rng.integers(0, 2 ** 31))
        s2 = int(rng.integers(0, 2 ** 31))
        M = _loewy_truncate(random_module(ring, s1, nu_max=nu_max), p)
        N = _loewy_truncate(random_module(ring, s2, nu_max=nu_max), q)
        if M.is_zero() or N.is_zero() or M.is_free() or N.is_free():
            continue
        return M, N
    return None


def explore(seed, budget, cutoff=12, p=2, q=2, e_range=(2, 4), nu_max=2,
            field=None):
    """Run `budget` random trials; report the first-nonzero-Tor histogram
    and any candidate counterexamples (re-tested at doubled cutoff)."""
    field = field or GF101
    report = ExploreReport(seed=seed, budget=budget, cutoff=cutoff, p=p, q=q)
    if p < 1 or q < 1:
        raise ValueError("p and q must be >= 1")
    if p == 1 or q == 1:
        report.vacuous = True
        return report
    h_min = p + q - 1
    for trial in range(budget):
        rng = np.random.default_rng((seed, trial))
        ring = random_ring(field, rng, e_range=e_range, h_min=h_min)
        if ring is None:
            report.rejected_rings += 1
            continue
        pair = _trial_modules(ring, rng, p, q, nu_max)
        if pair is None:
            report.rejected_rings += 1
            continue
        M, N = pair
        report.trials += 1
        prof = tor_profile(M, N, cutoff, early_exit=True)
        key = prof.first_nonzero
        report.histogram[key] = report.histogram.get(key, 0) + 1
        if prof.all_zero:
            recheck = tor_profile(M, N, 2 * cutoff, early_exit=True)
            dossier = serialize_instance(ring, {"M": M, "N": N})
            report.candidates.append(
                Candidate(trial, dossier, prof.dims, recheck.dims,
                          confirmed=recheck.all_zero)
            )
    return report
