"""Homomorphism spaces between modules.

A map T: M -> N is a matrix with T X_M = X_N T and T Y_M = Y_N T.  We solve
these as linear systems over GF(2), either in full (ungraded) or restricted
to the entries a homogeneous map of a fixed degree shift may use, which is
dramatically smaller for monomial modules and their tensor powers.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

import numpy as np

from .bitmat import BitMatrix
from .modules import Module


@dataclass
class HomSpace:
    """A basis of Hom(source, target), one BitMatrix per basis map."""

    source_dim: int
    target_dim: int
    basis: list

    @property
    def dim(self) -> int:
        return len(self.basis)

    def element(self, coeffs) -> BitMatrix:
        """GF(2)-combination of the basis with the given 0/1 coefficients."""
        t = BitMatrix.zeros(self.target_dim, self.source_dim)
        for c, b in zip(coeffs, self.basis):
            if c & 1:
                t = t + b
        return t

    def random_element(self, rng: np.random.Generator) -> BitMatrix:
        coeffs = rng.integers(0, 2, size=self.dim)
        if not coeffs.any() and self.dim:
            coeffs[rng.integers(self.dim)] = 1
        return self.element(coeffs)


def _intertwiner_system(m: Module, n: Module) -> BitMatrix:
    """Coefficient matrix whose kernel is vec(Hom(M, N)), row-major vec."""
    im = BitMatrix.identity(m.dim)
    inn = BitMatrix.identity(n.dim)
    rows_x = n.X.kron(im) + inn.kron(m.X.T)
    rows_y = n.Y.kron(im) + inn.kron(m.Y.T)
    return rows_x.vstack(rows_y)


def hom_space(m: Module, n: Module) -> HomSpace:
    """All module maps M -> N, ignoring any grading."""
    if m.params != n.params:
        raise ValueError("modules live over different group schemes")
    if m.dim == 0 or n.dim == 0:
        return HomSpace(m.dim, n.dim, [])
    kern = _intertwiner_system(m, n).nullspace()
    basis = [BitMatrix.from_bool(kern.to_bool()[k].reshape(n.dim, m.dim))
             for k in range(kern.nrows)]
    return HomSpace(m.dim, n.dim, basis)


def graded_hom_space(m: Module, n: Module, shift=(0, 0)) -> HomSpace:
    """Module maps M -> N that are homogeneous of the given degree shift.

    Only entries T[i, j] with deg_N[i] = deg_M[j] + shift can be nonzero,
    so the system is assembled sparsely over just those unknowns.
    """
    if not (m.graded and n.graded):
        raise ValueError("graded hom space needs graded modules")
    if m.params != n.params:
        raise ValueError("modules live over different group schemes")
    da, db = shift
    n_by_deg = defaultdict(list)
    for i, d in enumerate(n.grading):
        n_by_deg[d].append(i)
    unknowns = []
    unk_index = {}
    for j, (a, b) in enumerate(m.grading):
        for i in n_by_deg.get((a + da, b + db), ()):
            unk_index[(i, j)] = len(unknowns)
            unknowns.append((i, j))
    if not unknowns:
        return HomSpace(m.dim, n.dim, [])

    m_by_deg = defaultdict(list)
    for j, d in enumerate(m.grading):
        m_by_deg[d].append(j)

    entries = []        # (equation key, unknown index) pairs, XOR semantics
    eq_index = {}

    def eq(a, b, block):
        key = (block, a, b)
        if key not in eq_index:
            eq_index[key] = len(eq_index)
        return eq_index[key]

    for block, (zn, zm) in enumerate(((n.X, m.X), (n.Y, m.Y))):
        zn_bits = zn.to_bool()
        zm_bits = zm.to_bool()
        # term Z_N T: entry Z_N[a, i] pairs with unknowns (i, b)
        for a, i in zip(*np.nonzero(zn_bits)):
            deg = n.grading[i]
            for b in m_by_deg.get((deg[0] - da, deg[1] - db), ()):
                entries.append((eq(a, b, block), unk_index[(i, b)]))
        # term T Z_M: entry Z_M[j, b] pairs with unknowns (a, j)
        for j, b in zip(*np.nonzero(zm_bits)):
            deg = m.grading[j]
            for a in n_by_deg.get((deg[0] + da, deg[1] + db), ()):
                entries.append((eq(a, b, block), unk_index[(a, j)]))

    system = BitMatrix.from_entries(len(eq_index), len(unknowns), entries)
    kern = system.nullspace()
    basis = []
    kbits = kern.to_bool()
    for k in range(kern.nrows):
        ent = [unknowns[u] for u in np.nonzero(kbits[k])[0]]
        basis.append(BitMatrix.from_entries(n.dim, m.dim, ent))
    return HomSpace(m.dim, n.dim, basis)


def end_space(m: Module, graded: bool = False) -> HomSpace:
    return graded_hom_space(m, m) if graded else hom_space(m, m)


def solve_intertwiner_pair(xp: BitMatrix, xe: BitMatrix, rx: BitMatrix,
                           yp: BitMatrix, ye: BitMatrix, ry: BitMatrix,
                           deg_p=None, deg_e=None):
    """Some Q with  xp Q + Q xe = rx  and  yp Q + Q ye = ry, or None.

    When degree lists for both sides are given, the search is restricted to
    degree-preserving Q (the degree-zero part of any solution of a graded
    system is again a solution, so nothing is lost).
    """
    p, q = xp.nrows, xe.nrows
    if p == 0 or q == 0:
        return BitMatrix.zeros(p, q)
    if deg_p is not None and deg_e is not None:
        p_by_deg = defaultdict(list)
        for i, d in enumerate(deg_p):
            p_by_deg[d].append(i)
        e_by_deg = defaultdict(list)
        for j, d in enumerate(deg_e):
            e_by_deg[d].append(j)
        unknowns = []
        unk_index = {}
        for j, d in enumerate(deg_e):
            for i in p_by_deg.get(d, ()):
                unk_index[(i, j)] = len(unknowns)
                unknowns.append((i, j))
        eq_index = {}

        def eq(a, b, block):
            key = (block, a, b)
            if key not in eq_index:
                eq_index[key] = len(eq_index)
            return eq_index[key]

        entries = []
        rhs_entries = []
        for block, (zp, ze, rz) in enumerate(((xp, xe, rx), (yp, ye, ry))):
            for a, i in zip(*np.nonzero(zp.to_bool())):
                d = deg_p[i]
                for b in e_by_deg.get(d, ()):
                    entries.append((eq(a, b, block), unk_index[(i, b)]))
            for j, b in zip(*np.nonzero(ze.to_bool())):
                d = deg_e[j]
                for a in p_by_deg.get(d, ()):
                    entries.append((eq(a, b, block), unk_index[(a, j)]))
            for a, b in zip(*np.nonzero(rz.to_bool())):
                rhs_entries.append((eq(a, b, block), a, b))
        neq = len(eq_index)
        system = BitMatrix.from_entries(neq, len(unknowns), entries)
        rhs = BitMatrix.from_entries(neq, 1, [(e, 0) for e, _, _ in rhs_entries])
        sol = system.solve_matrix(rhs)
        if sol is None:
            return None
        qmat = BitMatrix.from_entries(
            p, q, [unknowns[u] for u in np.nonzero(sol.to_bool()[:, 0])[0]])
        return qmat
    iq = BitMatrix.identity(q)
    ip = BitMatrix.identity(p)
    sys_x = xp.kron(iq) + ip.kron(xe.T)
    sys_y = yp.kron(iq) + ip.kron(ye.T)
    system = sys_x.vstack(sys_y)
    rhs_bits = np.concatenate([rx.to_bool().reshape(-1), ry.to_bool().reshape(-1)])
    rhs = BitMatrix.from_bool(rhs_bits.reshape(-1, 1))
    sol = system.solve_matrix(rhs)
    if sol is None:
        return None
    return BitMatrix.from_bool(sol.to_bool().reshape(p, q))
