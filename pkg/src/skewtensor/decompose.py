"""Krull-Schmidt decomposition into indecomposable summands.

Pipeline: peel off free summands deterministically (socle-operator rank),
chop the complement with randomized Fitting splittings — degree-blocked
graded endomorphisms first when a grading is available, full endomorphism
rings on the (small) remaining pieces — and certify indecomposability of
every piece that survives.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .bitmat import BitMatrix, Subspace, fitting_pair, is_nilpotent
from .homs import HomSpace, graded_hom_space, hom_space, solve_intertwiner_pair
from .modules import Module, free_module, iso_test, restrict

DEFAULT_END_GUARD = 200_000     # max unknowns for a full End system


@dataclass(frozen=True)
class Certificate:
    """Evidence that a summand is indecomposable."""

    level: str                  # "dim_end_one" | "basis_local_split" | "heuristic"
    details: str = ""
    tries: int = 0

    def to_json(self):
        out = {"level": self.level}
        if self.details:
            out["details"] = self.details
        if self.level == "heuristic":
            out["tries"] = self.tries
        return out


@dataclass
class Decomposition:
    """Multiset of indecomposable summands of a module."""

    summands: list              # (Module, multiplicity, Certificate)
    total_dim: int
    seed: int = 0
    partial: bool = False
    elapsed: float = 0.0

    @property
    def odd_summand(self):
        """Index of the unique odd-dimensional summand class, if there is one."""
        odds = [k for k, (m, _, _) in enumerate(self.summands) if m.dim % 2]
        return odds[0] if len(odds) == 1 else None

    def dims(self) -> list:
        """Sorted dimension multiset with multiplicity."""
        out = []
        for m, mult, _ in self.summands:
            out.extend([m.dim] * mult)
        return sorted(out)

    def multiplicity_of_dim(self, d: int) -> int:
        return sum(mult for m, mult, _ in self.summands if m.dim == d)

    def check_dims(self):
        assert sum(self.dims()) == self.total_dim, \
            f"summand dims {self.dims()} do not sum to {self.total_dim}"

    def to_json(self):
        return {
            "total_dim": self.total_dim,
            "summands": [{"dim": m.dim, "multiplicity": mult,
                          "certificate": cert.to_json()}
                         for m, mult, cert in self.summands],
            "odd_summand": self.odd_summand,
            "seed": self.seed,
            "partial": self.partial,
            "elapsed": round(self.elapsed, 3),
        }


def free_rank(m: Module) -> int:
    """Number of free summands: rank of the socle operator x^(2^r-1) y^(2^s-1)."""
    return m.act_word(m.params.x_order - 1, m.params.y_order - 1).rank()


def peel_free(m: Module):
    """Split M = (free of rank g) + complement; returns (g, complement).

    Generators are found greedily from the socle operator's independent
    columns; the free submodule is completed to a basis by standard vectors
    and the complement is straightened into a submodule by solving
    X_P Q + Q A22 = A12 (same Q for both actions) in the adapted basis.
    """
    params = m.params
    sop = m.act_word(params.x_order - 1, params.y_order - 1)
    g = sop.rank()
    if g == 0:
        return 0, m
    n = m.dim
    # greedy generator columns with independent socle images
    gens = []
    sbits = sop.to_bool()
    picked = np.zeros((0, n), dtype=np.uint8)
    space = Subspace.zero(n)
    for k in range(n):
        col = sbits[:, k]
        if not col.any():
            continue
        cand = BitMatrix.from_bool(col.reshape(1, n))
        if not space.contains(cand):
            gens.append(k)
            space = Subspace.span(n, space.basis.vstack(cand))
            if len(gens) == g:
                break
    assert len(gens) == g
    # free submodule columns: x^a y^b e_k, homogeneous when M is graded
    pcols = []
    pdegs = []
    for k in gens:
        for a in range(params.x_order):
            xa = m.X.pow(a)
            for b in range(params.y_order):
                vec = (xa @ m.Y.pow(b)).to_bool()[:, k]
                pcols.append(vec)
                if m.graded:
                    da, db = m.grading[k]
                    pdegs.append((da + a, db + b))
    p = len(pcols)
    pmat = np.array(pcols, dtype=np.uint8).T          # n x p, columns = basis
    # complete with standard basis vectors
    red_rows = BitMatrix.from_bool(pmat.T)
    red, pivots = red_rows.rref()
    assert red.nrows == p, "free submodule columns are dependent"
    pivset = set(pivots)
    extra = [j for j in range(n) if j not in pivset]
    q = len(extra)
    assert p + q == n
    edegs = [m.grading[j] for j in extra] if m.graded else None
    u = np.zeros((n, n), dtype=np.uint8)
    u[:, :p] = pmat
    for col, j in enumerate(extra):
        u[j, p + col] = 1
    umat = BitMatrix.from_bool(u)
    ax = umat.solve_matrix(m.X @ umat)
    ay = umat.solve_matrix(m.Y @ umat)
    assert ax is not None and ay is not None

    def blocks(a: BitMatrix):
        bits = a.to_bool()
        assert not bits[p:, :p].any(), "free submodule is not invariant"
        return (BitMatrix.from_bool(bits[:p, :p]),
                BitMatrix.from_bool(bits[:p, p:]),
                BitMatrix.from_bool(bits[p:, p:]))

    xp, x12, x22 = blocks(ax)
    yp, y12, y22 = blocks(ay)
    qmat = solve_intertwiner_pair(xp, x22, x12, yp, y22, y12,
                                  deg_p=pdegs if m.graded else None,
                                  deg_e=edegs if m.graded else None)
    if qmat is None and m.graded:
        qmat = solve_intertwiner_pair(xp, x22, x12, yp, y22, y12)
    assert qmat is not None, "free summand has no invariant complement"
    # in the straightened basis the complement acts by the A22 blocks
    comp = Module(params, x22, y22,
                  grading=tuple(edegs) if m.graded else None)
    return g, comp


def _local_end_evidence(m: Module, end: HomSpace) -> bool:
    """True when every End-basis element looks like a local-ring element."""
    for b in end.basis:
        if b.rank() < m.dim and not is_nilpotent(b):
            return False
        if not is_nilpotent((b @ b) + b):
            return False
    return True


def indecomposability_certificate(m: Module, end: HomSpace | None = None) -> Certificate:
    """Grade the evidence that M is indecomposable."""
    if end is None:
        end = hom_space(m, m)
    if end.dim == 1:
        return Certificate("dim_end_one")
    for b in end.basis:
        if b.rank() < m.dim and not is_nilpotent(b):
            return Certificate("heuristic",
                               details="End basis element neither nilpotent nor invertible")
        bb = (b @ b) + b
        if not is_nilpotent(bb):
            return Certificate("heuristic",
                               details="b^2 + b not nilpotent for an End basis element")
    return Certificate("basis_local_split",
                       details=f"dim End = {end.dim}")


def _chop(m: Module, rng: np.random.Generator, graded: bool, max_tries=None):
    """Recursively split M using Fitting's lemma; returns a list of Modules.

    Pieces that survive every sampled endomorphism are returned as-is; the
    caller decides how hard to certify them.
    """
    if m.dim <= 1:
        return [m]
    end = graded_hom_space(m, m) if graded else hom_space(m, m)
    if end.dim == 1:
        return [m]
    if max_tries is None:
        max_tries = 64 * end.dim
    candidates = list(end.basis)
    tries = 0
    basis_done = False
    while tries < max_tries:
        if candidates:
            f = candidates.pop(0)
        else:
            if not basis_done:
                basis_done = True
                # no basis element splits; if they certify a local End ring,
                # random combinations cannot split either
                if _local_end_evidence(m, end):
                    return [m]
            f = end.random_element(rng)
        tries += 1
        ker, im = fitting_pair(f)
        if ker.dim == 0 or ker.dim == m.dim:
            continue
        left = restrict(m, ker)
        right = restrict(m, im)
        assert left.dim + right.dim == m.dim
        seeds = rng.spawn(2)
        return (_chop(left, seeds[0], graded, max_tries)
                + _chop(right, seeds[1], graded, max_tries))
    return [m]


def fitting_chop(m: Module, seed: int = 0, max_tries=None,
                 graded: bool = False) -> Decomposition:
    """Decompose with the randomized Fitting splitting alone (no free peel)."""
    t0 = time.monotonic()
    rng = np.random.default_rng(seed)
    pieces = _chop(m, rng, graded and m.graded, max_tries)
    summands, partial = _group(pieces, [], 0, m, seed)
    dec = Decomposition(summands, m.dim, seed=seed, partial=partial,
                        elapsed=time.monotonic() - t0)
    dec.check_dims()
    return dec


def _group(pieces, certs, free_count, m: Module, seed: int,
           end_guard: int = DEFAULT_END_GUARD):
    """Bucket pieces into isomorphism classes; returns (summands, partial)."""
    partial = False
    entries = []
    for k, piece in enumerate(pieces):
        if certs:
            cert = certs[k]
        elif piece.dim * piece.dim <= end_guard:
            cert = indecomposability_certificate(piece)
        else:
            cert = Certificate("heuristic", details="End system over resource guard",
                               tries=0)
            partial = True
        entries.append((piece, cert))
    classes = []        # (representative, multiplicity, certificate)
    for piece, cert in entries:
        placed = False
        for idx, (rep, mult, rcert) in enumerate(classes):
            if rep.dim != piece.dim or rep.rank_table() != piece.rank_table():
                continue
            verdict = iso_test(rep.ungraded(), piece.ungraded(), seed=seed)
            if verdict.isomorphic:
                best = rcert if _cert_rank(rcert) >= _cert_rank(cert) else cert
                classes[idx] = (rep, mult + 1, best)
                placed = True
                break
        if not placed:
            classes.append((piece, 1, cert))
    if free_count:
        fm = free_module(m.params, 1)
        classes.append((fm, free_count,
                        Certificate("basis_local_split", details="free summand")))
    return classes, partial


def _cert_rank(c: Certificate) -> int:
    return {"dim_end_one": 2, "basis_local_split": 1}.get(c.level, 0)


def decompose(m: Module, seed: int = 0, graded_first: bool = True,
              max_tries=None, end_guard: int = DEFAULT_END_GUARD) -> Decomposition:
    """Full pipeline: peel frees, graded chop, then ungraded chop per piece."""
    t0 = time.monotonic()
    g, comp = peel_free(m)
    rng = np.random.default_rng(seed)
    if comp.graded and graded_first:
        pieces = _chop(comp, rng, graded=True, max_tries=max_tries)
    else:
        pieces = [comp] if comp.dim else []
    final = []
    partial = False
    for k, piece in enumerate(pieces):
        if piece.dim == 0:
            continue
        if piece.dim * piece.dim <= end_guard:
            sub_rng = np.random.default_rng([seed, k])
            final.extend(_chop(piece, sub_rng, graded=False, max_tries=max_tries))
        else:
            final.append(piece)
            partial = True
    summands, gpartial = _group(final, [], g, m, seed, end_guard)
    dec = Decomposition(summands, m.dim, seed=seed,
                        partial=partial or gpartial,
                        elapsed=time.monotonic() - t0)
    dec.check_dims()
    return dec
