"""Syzygies and cosyzygies over the self-injective algebra k-alpha(r, s).

Projective = injective = free here, so Omega is the kernel of a minimal
free cover, Omega^{-1} the cokernel of a minimal embedding into a free
module (built by duality), and both are inverse up to free summands.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bitmat import BitMatrix, Subspace
from .decompose import peel_free
from .modules import (Module, dual_alpha, free_module, iso_test, quotient,
                      restrict, spin)


@dataclass
class CoverMap:
    """A minimal free cover: surjection maps the cover onto the module."""

    cover: Module
    surjection: BitMatrix       # dim M x dim cover

    def check(self, m: Module):
        assert self.surjection.rank() == m.dim, "cover map is not surjective"
        assert (m.X @ self.surjection) == (self.surjection @ self.cover.X)
        assert (m.Y @ self.surjection) == (self.surjection @ self.cover.Y)
        return True


@dataclass
class HullMap:
    """A minimal embedding into a free module."""

    hull: Module
    inclusion: BitMatrix        # dim hull x dim M

    def check(self, m: Module):
        assert self.inclusion.rank() == m.dim, "hull map is not injective"
        assert (self.hull.X @ self.inclusion) == (self.inclusion @ m.X)
        assert (self.hull.Y @ self.inclusion) == (self.inclusion @ m.Y)
        return True


def rad_module(m: Module) -> Subspace:
    """rad M = X M + Y M, the radical of the local group algebra acting."""
    rows = BitMatrix.from_bool(
        np.vstack([m.X.to_bool().T, m.Y.to_bool().T]).astype(np.uint8))
    return Subspace.span(m.dim, rows)


def minimal_generators(m: Module) -> list:
    """Standard basis vectors lifting a basis of M / rad M (one per row)."""
    rad = rad_module(m)
    _, pivots = rad.basis.rref()
    pivset = set(pivots)
    gens = [j for j in range(m.dim) if j not in pivset]
    return [BitMatrix.from_entries(1, m.dim, [(0, j)]) for j in gens]


def _generator_indices(m: Module) -> list:
    _, pivots = rad_module(m).basis.rref()
    pivset = set(pivots)
    return [j for j in range(m.dim) if j not in pivset]


def projective_cover(m: Module) -> CoverMap:
    """Minimal free cover free^g -> M, g = dim M/rad M."""
    gens = _generator_indices(m)
    params = m.params
    if not gens:
        return CoverMap(free_module(params, 0), BitMatrix.zeros(m.dim, 0))
    gen_degrees = ([m.grading[j] for j in gens] if m.graded
                   else [(0, 0)] * len(gens))
    cover = free_module(params, len(gens), gen_degrees=gen_degrees)
    xo, yo = params.x_order, params.y_order
    cols = []
    for j in gens:
        base = np.zeros(m.dim, dtype=np.uint8)
        base[j] = 1
        xa = base
        for a in range(xo):
            v = xa
            for b in range(yo):
                cols.append(v)
                v = (m.Y.to_bool() @ v) & 1
            xa = (m.X.to_bool() @ xa) & 1
    surj = BitMatrix.from_bool(np.array(cols, dtype=np.uint8).T)
    assert surj.rank() == m.dim, "minimal generators fail to generate"
    return CoverMap(cover, surj)


def syzygy(m: Module) -> Module:
    """Omega(M): kernel of the minimal cover surjection."""
    cm = projective_cover(m)
    kern = cm.surjection.nullspace()
    return restrict(cm.cover, Subspace(cm.cover.dim, kern))


def injective_hull(m: Module) -> HullMap:
    """Minimal embedding of M into a free module, via the dual cover."""
    d = dual_alpha(m)
    cm = projective_cover(d)
    hull = dual_alpha(cm.cover)
    return HullMap(hull, cm.surjection.T)


def cosyzygy(m: Module) -> Module:
    """Omega^{-1}(M): cokernel of the minimal embedding into a free module."""
    hm = injective_hull(m)
    image = hm.inclusion.T.row_space()
    return quotient(hm.hull, image)


def strip_free(m: Module) -> Module:
    """Drop all free summands."""
    return peel_free(m)[1]


def omega_power(m: Module, t: int) -> Module:
    """Omega^t up to free summands; t may be negative."""
    cur = strip_free(m)
    step = syzygy if t > 0 else cosyzygy
    for _ in range(abs(t)):
        cur = strip_free(step(cur))
    return cur


@dataclass
class OmegaProbeReport:
    """Pairwise comparison of tensor-power odd summands with cosyzygy shifts."""

    comparisons: list           # (i, j, k, verdict kind, separating invariant)
    inconclusive: int

    @property
    def all_distinct(self) -> bool:
        return (self.inconclusive == 0
                and all(kind == "not_isomorphic"
                        for _, _, _, kind, _ in self.comparisons))


def omega_probe(v: Module, i_max: int, k_max: int, seed: int = 0) -> OmegaProbeReport:
    """Check that no odd summand V_i is a cosyzygy shift of another.

    V_i are the odd-dimensional summands of the tensor powers of V.  A module
    whose odd summands never recur as Omega^{-k} of each other is not
    Omega-algebraic over the subcategory they generate.
    """
    from .powerlab import next_odd

    vs = {1: strip_free(v)}
    for i in range(2, i_max + 1):
        vs[i] = next_odd(vs[i - 1], v, seed=seed, n=i)[0]
    shifted = {(j, k): omega_power(vs[j], -k)
               for j in vs for k in range(1, k_max + 1)}
    comparisons = []
    inconclusive = 0
    for i in vs:
        for j in vs:
            if i == j:
                continue
            for k in range(1, k_max + 1):
                verdict = iso_test(vs[i], shifted[(j, k)], seed=seed,
                                   use_hilbert=True)
                if verdict.kind == "inconclusive":
                    inconclusive += 1
                comparisons.append((i, j, k, verdict.kind, verdict.invariant))
    return OmegaProbeReport(comparisons, inconclusive)
