"""Modules over the characteristic-2 group schemes alpha(r, s).

A module is a pair of commuting nilpotent GF(2) matrices (X, Y) acting on
column vectors, with X^(2^r) = 0 and Y^(2^s) = 0, optionally carrying a
Z^2-grading (one integer degree pair per basis vector).

Monomial modules come from skew partitions: one basis vector per cell
(i, j), with x moving i -> i+1 and y moving j -> j+1, falling off the
diagram to zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .bitmat import BitMatrix, Subspace


@dataclass(frozen=True)
class GroupSchemeParams:
    """The (r, s) of alpha(r, s); x^(2^r) = 0 and y^(2^s) = 0."""

    r: int
    s: int

    def __post_init__(self):
        if self.r < 1 or self.s < 1:
            raise ValueError("r and s must be positive")

    @property
    def x_order(self) -> int:
        return 1 << self.r

    @property
    def y_order(self) -> int:
        return 1 << self.s

    @property
    def free_dim(self) -> int:
        return 1 << (self.r + self.s)


@dataclass(frozen=True)
class SkewPartition:
    """A skew shape lambda/mu: parts of mu removed from the front of lambda."""

    lam: tuple
    mu: tuple = ()

    def __post_init__(self):
        lam = tuple(int(v) for v in self.lam)
        mu = tuple(int(v) for v in self.mu)
        while mu and mu[-1] == 0:
            mu = mu[:-1]
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)
        if not lam:
            raise ValueError("lambda must have at least one part")
        if any(a <= 0 for a in lam):
            raise ValueError("lambda parts must be positive")
        if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
            raise ValueError("lambda must be weakly decreasing")
        if any(a < 0 for a in mu):
            raise ValueError("mu parts must be non-negative")
        if any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)):
            raise ValueError("mu must be weakly decreasing")
        if len(mu) >= len(lam):
            raise ValueError("mu must have fewer parts than lambda")
        for i, m in enumerate(mu):
            if m > lam[i]:
                raise ValueError(f"mu part {i + 1} exceeds lambda part {i + 1}")
        if self.size < 1:
            raise ValueError("shape must have at least one cell")

    def mu_part(self, i: int) -> int:
        """mu_i with trailing parts treated as 0 (1-based)."""
        return self.mu[i - 1] if i <= len(self.mu) else 0

    @property
    def size(self) -> int:
        return sum(self.lam) - sum(self.mu)

    def cells(self) -> list:
        """Sorted list of (i, j) cells, 1-based."""
        out = []
        for i, lam_i in enumerate(self.lam, start=1):
            for j in range(self.mu_part(i) + 1, lam_i + 1):
                out.append((i, j))
        return out

    def is_connected(self) -> bool:
        cells = set(self.cells())
        start = next(iter(cells))
        seen = {start}
        stack = [start]
        while stack:
            i, j = stack.pop()
            for n in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                if n in cells and n not in seen:
                    seen.add(n)
                    stack.append(n)
        return len(seen) == len(cells)

    def flip_diagonal(self) -> "SkewPartition":
        """Transpose the diagram (conjugate partitions); swaps the roles of r and s."""
        return cells_to_skew([(j, i) for i, j in self.cells()])

    def rotate180(self) -> "SkewPartition":
        return cells_to_skew([(-i, -j) for i, j in self.cells()])

    def minimal_params(self) -> GroupSchemeParams:
        """Smallest (r, s) whose box constraints this shape satisfies."""
        cells = self.cells()
        col_height = max(sum(1 for a, b in cells if b == j) for _, j in cells)
        row_len = max(lam_i - self.mu_part(i)
                      for i, lam_i in enumerate(self.lam, start=1))
        r = max(1, (col_height - 1).bit_length())
        s = max(1, (row_len - 1).bit_length())
        return GroupSchemeParams(r, s)

    @classmethod
    def parse(cls, text: str) -> "SkewPartition":
        """Parse the text syntax, e.g. "5,4,2,2,1,1/3,2"."""
        text = text.strip()
        if not text:
            raise ValueError("empty skew partition")
        lam_text, _, mu_text = text.partition("/")
        try:
            lam = tuple(int(p) for p in lam_text.split(","))
            mu = tuple(int(p) for p in mu_text.split(",")) if mu_text else ()
        except ValueError as exc:
            raise ValueError(f"cannot parse skew partition {text!r}") from exc
        return cls(lam, mu)

    def __str__(self):
        lam_text = ",".join(str(p) for p in self.lam)
        if self.mu:
            return lam_text + "/" + ",".join(str(p) for p in self.mu)
        return lam_text


def cells_to_skew(cells) -> SkewPartition:
    """Rebuild a SkewPartition from an arbitrary cell set (translated to 1-based)."""
    cells = set(cells)
    if not cells:
        raise ValueError("empty cell set")
    di = 1 - min(i for i, _ in cells)
    dj = 1 - min(j for _, j in cells)
    cells = {(i + di, j + dj) for i, j in cells}
    n = max(i for i, _ in cells)
    lam, mu = [], []
    for i in range(1, n + 1):
        js = sorted(j for a, j in cells if a == i)
        if not js:
            raise ValueError(f"row {i} of the cell set is empty")
        if js != list(range(js[0], js[0] + len(js))):
            raise ValueError(f"row {i} of the cell set is not contiguous")
        lam.append(js[-1])
        mu.append(js[0] - 1)
    return SkewPartition(tuple(lam), tuple(mu))


class Module:
    """A finite-dimensional alpha(r, s)-module, optionally Z^2-graded."""

    __slots__ = ("params", "X", "Y", "grading", "_rank_table")

    def __init__(self, params: GroupSchemeParams, X: BitMatrix, Y: BitMatrix,
                 grading=None):
        if X.nrows != X.ncols or Y.nrows != Y.ncols or X.nrows != Y.nrows:
            raise ValueError("X and Y must be square of equal size")
        if grading is not None:
            grading = tuple((int(a), int(b)) for a, b in grading)
            if len(grading) != X.nrows:
                raise ValueError("grading length must equal the dimension")
        self.params = params
        self.X = X
        self.Y = Y
        self.grading = grading
        self._rank_table = None

    @property
    def dim(self) -> int:
        return self.X.nrows

    @property
    def graded(self) -> bool:
        return self.grading is not None

    def ungraded(self) -> "Module":
        return Module(self.params, self.X, self.Y)

    def validate(self):
        """Check the module axioms; raises AssertionError on failure."""
        n = self.dim
        assert self.X.pow(self.params.x_order).is_zero(), "x is not nilpotent of bound order"
        assert self.Y.pow(self.params.y_order).is_zero(), "y is not nilpotent of bound order"
        assert (self.X @ self.Y) == (self.Y @ self.X), "x and y do not commute"
        if self.graded:
            for mat, shift in ((self.X, (1, 0)), (self.Y, (0, 1))):
                bits = mat.to_bool()
                for a, b in zip(*np.nonzero(bits)):
                    da, db = self.grading[b]
                    if self.grading[a] != (da + shift[0], db + shift[1]):
                        raise AssertionError(
                            f"entry ({a},{b}) breaks the grading by {shift}")
        return True

    def act_word(self, a: int, b: int) -> BitMatrix:
        """The matrix of x^a y^b."""
        return self.X.pow(a) @ self.Y.pow(b)

    def rank_table(self) -> tuple:
        """ranks of X^a Y^b for 0 <= a < 2^r, 0 <= b < 2^s (iso invariant)."""
        if self._rank_table is None:
            xs = [BitMatrix.identity(self.dim)]
            for _ in range(self.params.x_order - 1):
                xs.append(xs[-1] @ self.X)
            table = []
            for a in range(self.params.x_order):
                m = xs[a]
                for b in range(self.params.y_order):
                    table.append(m.rank())
                    if b + 1 < self.params.y_order:
                        m = m @ self.Y
            self._rank_table = tuple(table)
        return self._rank_table

    def hilbert(self) -> dict | None:
        """Dimension of each homogeneous component, or None when ungraded."""
        if not self.graded:
            return None
        out = {}
        for d in self.grading:
            out[d] = out.get(d, 0) + 1
        return out

    def hilbert_normalized(self) -> tuple | None:
        """Hilbert function up to translation of the grading."""
        h = self.hilbert()
        if h is None:
            return None
        if not h:
            return ()
        mina = min(a for a, _ in h)
        minb = min(b for _, b in h)
        return tuple(sorted(((a - mina, b - minb), m) for (a, b), m in h.items()))


def trivial_module(params: GroupSchemeParams) -> Module:
    return Module(params, BitMatrix.zeros(1, 1), BitMatrix.zeros(1, 1),
                  grading=((0, 0),))


def zero_module(params: GroupSchemeParams) -> Module:
    return Module(params, BitMatrix.zeros(0, 0), BitMatrix.zeros(0, 0), grading=())


def free_module(params: GroupSchemeParams, rank: int = 1, gen_degrees=None) -> Module:
    """Direct sum of `rank` copies of the regular module.

    Basis (copy, a, b) for 0 <= a < 2^r, 0 <= b < 2^s, representing x^a y^b
    applied to the copy's generator.
    """
    xo, yo = params.x_order, params.y_order
    block = xo * yo
    n = rank * block
    if gen_degrees is None:
        gen_degrees = [(0, 0)] * rank
    idx = lambda c, a, b: c * block + a * yo + b
    xent, yent = [], []
    grading = []
    for c in range(rank):
        for a in range(xo):
            for b in range(yo):
                grading.append((gen_degrees[c][0] + a, gen_degrees[c][1] + b))
                if a + 1 < xo:
                    xent.append((idx(c, a + 1, b), idx(c, a, b)))
                if b + 1 < yo:
                    yent.append((idx(c, a, b + 1), idx(c, a, b)))
    return Module(params,
                  BitMatrix.from_entries(n, n, xent),
                  BitMatrix.from_entries(n, n, yent),
                  grading=tuple(grading))


def from_skew_partition(shape: SkewPartition, params: GroupSchemeParams) -> Module:
    """Monomial module of a skew shape; basis cells sorted by (i, j)."""
    cells = shape.cells()
    for i, lam_i in enumerate(shape.lam, start=1):
        if lam_i - shape.mu_part(i) > params.y_order:
            raise ValueError(
                f"row {i} of {shape} has length {lam_i - shape.mu_part(i)}, "
                f"exceeding 2^s = {params.y_order}")
    heights = {}
    for _, j in cells:
        heights[j] = heights.get(j, 0) + 1
    for j, h in heights.items():
        if h > params.x_order:
            raise ValueError(
                f"column {j} of {shape} has height {h}, exceeding 2^r = {params.x_order}")
    index = {c: k for k, c in enumerate(cells)}
    xent = [(index[(i + 1, j)], index[(i, j)]) for (i, j) in cells
            if (i + 1, j) in index]
    yent = [(index[(i, j + 1)], index[(i, j)]) for (i, j) in cells
            if (i, j + 1) in index]
    n = len(cells)
    return Module(params,
                  BitMatrix.from_entries(n, n, xent),
                  BitMatrix.from_entries(n, n, yent),
                  grading=tuple(cells))


def is_connected(shape: SkewPartition) -> bool:
    return shape.is_connected()


def flip_diagonal(shape: SkewPartition) -> SkewPartition:
    return shape.flip_diagonal()


def _check_params(v: Module, w: Module):
    if v.params != w.params:
        raise ValueError("modules live over different group schemes")


def tensor_alpha(v: Module, w: Module) -> Module:
    """Tensor product for the primitive comultiplication x -> x(x)1 + 1(x)x."""
    _check_params(v, w)
    iv = BitMatrix.identity(v.dim)
    iw = BitMatrix.identity(w.dim)
    x = v.X.kron(iw) + iv.kron(w.X)
    y = v.Y.kron(iw) + iv.kron(w.Y)
    grading = None
    if v.graded and w.graded:
        grading = tuple((a1 + a2, b1 + b2)
                        for a1, b1 in v.grading for a2, b2 in w.grading)
    return Module(v.params, x, y, grading=grading)


def tensor_group(v: Module, w: Module) -> Module:
    """Tensor product for the standard group Hopf structure (g -> g(x)g)."""
    _check_params(v, w)
    iv = BitMatrix.identity(v.dim)
    iw = BitMatrix.identity(w.dim)
    x = v.X.kron(iw) + iv.kron(w.X) + v.X.kron(w.X)
    y = v.Y.kron(iw) + iv.kron(w.Y) + v.Y.kron(w.Y)
    return Module(v.params, x, y)


def dual_alpha(v: Module) -> Module:
    """Dual for the primitive structure: the antipode fixes x and y."""
    grading = tuple((-a, -b) for a, b in v.grading) if v.graded else None
    return Module(v.params, v.X.T, v.Y.T, grading=grading)


def _unipotent_inverse(x: BitMatrix, order: int) -> BitMatrix:
    """(I + X)^(-1) = I + X + X^2 + ... for nilpotent X."""
    n = x.nrows
    acc = BitMatrix.identity(n)
    p = BitMatrix.identity(n)
    for _ in range(order - 1):
        p = p @ x
        if p.is_zero():
            break
        acc = acc + p
    return acc


def dual_group(v: Module) -> Module:
    """Dual for the group structure: g acts on the dual through g^(-1)."""
    gx = BitMatrix.identity(v.dim) + v.X
    gy = BitMatrix.identity(v.dim) + v.Y
    gxi = _unipotent_inverse(v.X, v.params.x_order)
    gyi = _unipotent_inverse(v.Y, v.params.y_order)
    assert (gx @ gxi) == BitMatrix.identity(v.dim)
    x = (gxi + BitMatrix.identity(v.dim)).T
    y = (gyi + BitMatrix.identity(v.dim)).T
    return Module(v.params, x, y)


def direct_sum(v: Module, w: Module) -> Module:
    _check_params(v, w)
    n, m = v.dim, w.dim
    def block(a: BitMatrix, b: BitMatrix) -> BitMatrix:
        bits = np.zeros((n + m, n + m), dtype=np.uint8)
        bits[:n, :n] = a.to_bool()
        bits[n:, n:] = b.to_bool()
        return BitMatrix.from_bool(bits)
    grading = None
    if v.graded and w.graded:
        grading = v.grading + w.grading
    return Module(v.params, block(v.X, w.X), block(v.Y, w.Y), grading=grading)


def spin(m: Module, seeds: BitMatrix) -> Subspace:
    """Smallest X- and Y-invariant subspace containing the seed row vectors."""
    if seeds.ncols != m.dim:
        raise ValueError("seed vectors do not live in the module")
    basis, _ = seeds.rref()
    xt, yt = m.X.T, m.Y.T
    while True:
        images = (basis @ xt).vstack(basis @ yt)
        red, _ = basis.vstack(images).rref()
        if red.nrows == basis.nrows:
            return Subspace(m.dim, basis)
        basis = red


def invariant_under(m: Module, s: Subspace) -> bool:
    b = s.basis
    return (Subspace.span(m.dim, b.vstack(b @ m.X.T)).dim == s.dim
            and Subspace.span(m.dim, b.vstack(b @ m.Y.T)).dim == s.dim)


def homogeneous_basis(m: Module, s: Subspace):
    """Rewrite a graded subspace's basis as homogeneous vectors, or None.

    Splits every basis vector into its per-degree components; if the subspace
    is graded the components all lie inside it and re-reduce to the same
    dimension.
    """
    if not m.graded:
        return None
    bits = s.basis.to_bool()
    degs = np.array([[a, b] for a, b in m.grading]).reshape(m.dim, 2)
    pieces = []
    for row in bits:
        sup = np.nonzero(row)[0]
        if sup.size == 0:
            continue
        seen = {}
        for k in sup:
            seen.setdefault((degs[k, 0], degs[k, 1]), []).append(k)
        for idxs in seen.values():
            part = np.zeros(m.dim, dtype=np.uint8)
            part[idxs] = 1
            pieces.append(part)
    if not pieces:
        return BitMatrix.zeros(0, m.dim)
    cand = BitMatrix.from_bool(np.array(pieces, dtype=np.uint8))
    red, _ = cand.rref()
    if red.nrows != s.dim:
        return None
    return red


def restrict(m: Module, s: Subspace) -> Module:
    """The module structure induced on an invariant subspace."""
    if s.ambient_dim != m.dim:
        raise ValueError("subspace lives in a different ambient space")
    basis = None
    if m.graded:
        basis = homogeneous_basis(m, s)
    if basis is None:
        basis = s.basis
    bt = basis.T
    xi = bt.solve_matrix(m.X @ bt)
    yi = bt.solve_matrix(m.Y @ bt)
    if xi is None or yi is None:
        raise ValueError("subspace is not invariant under the actions")
    grading = None
    if m.graded:
        grading = []
        degs = m.grading
        ok = True
        bits = basis.to_bool()
        for row in bits:
            sup = np.nonzero(row)[0]
            ds = {degs[k] for k in sup}
            if len(ds) != 1:
                ok = False
                break
            grading.append(ds.pop())
        grading = tuple(grading) if ok else None
    return Module(m.params, xi, yi, grading=grading)


def quotient(m: Module, s: Subspace) -> Module:
    """The quotient module M / S for an invariant subspace S.

    The quotient basis is the set of non-pivot coordinate vectors of the
    reduced basis of S, which keeps homogeneity when S is graded.
    """
    if s.ambient_dim != m.dim:
        raise ValueError("subspace lives in a different ambient space")
    basis = None
    if m.graded:
        basis = homogeneous_basis(m, s)
    if basis is None:
        basis = s.basis
    red, pivots = basis.rref()
    pivset = set(pivots)
    keep = [j for j in range(m.dim) if j not in pivset]
    rbits = red.to_bool()

    def reduce_cols(mat: BitMatrix) -> BitMatrix:
        """Reduce full ambient columns mod S and keep the quotient coordinates."""
        bits = mat.to_bool().copy()
        for rix, p in enumerate(pivots):
            sel = np.nonzero(bits[p])[0]
            if sel.size:
                bits[:, sel] ^= rbits[rix][:, None].astype(np.uint8)
        return BitMatrix.from_bool(bits[keep, :] if keep else
                                   np.zeros((0, 0), dtype=np.uint8))

    def cols(mat: BitMatrix) -> BitMatrix:
        sub = mat.to_bool()[:, keep] if keep else np.zeros((m.dim, 0), dtype=np.uint8)
        return BitMatrix.from_bool(sub)

    xq = reduce_cols(cols(m.X))
    yq = reduce_cols(cols(m.Y))
    grading = tuple(m.grading[j] for j in keep) if m.graded else None
    return Module(m.params, xq, yq, grading=grading)


@dataclass
class IsoVerdict:
    """Outcome of an isomorphism test."""

    kind: str                      # "isomorphic" | "not_isomorphic" | "inconclusive"
    witness: BitMatrix | None = None
    invariant: str | None = None
    details: str = ""
    tries: int = 0

    @property
    def isomorphic(self) -> bool:
        return self.kind == "isomorphic"


def iso_test(m: Module, n: Module, seed: int = 0, max_tries: int = 200,
             use_hilbert: bool = False) -> IsoVerdict:
    """Randomized isomorphism test with machine-checkable certificates.

    A returned witness T satisfies T X_M = X_N T and T Y_M = Y_N T and is
    invertible. Non-isomorphism is certified by a separating invariant.
    The Hilbert-function invariant is only sound for indecomposable graded
    modules (gradings are unique up to shift there), so it is opt-in.
    """
    from .homs import hom_space

    _check_params(m, n)
    if m.dim != n.dim:
        return IsoVerdict("not_isomorphic", invariant="dim",
                          details=f"{m.dim} != {n.dim}")
    if m.rank_table() != n.rank_table():
        return IsoVerdict("not_isomorphic", invariant="rank_table",
                          details=f"{m.rank_table()} != {n.rank_table()}")
    if use_hilbert and m.graded and n.graded:
        if m.hilbert_normalized() != n.hilbert_normalized():
            return IsoVerdict("not_isomorphic", invariant="hilbert",
                              details=f"{m.hilbert_normalized()} != {n.hilbert_normalized()}")
    if m.dim == 0:
        return IsoVerdict("isomorphic", witness=BitMatrix.zeros(0, 0))
    homs = hom_space(m, n)
    if not homs.basis:
        return IsoVerdict("not_isomorphic", invariant="hom_dim",
                          details="Hom(M, N) = 0 with equal dims")
    rng = np.random.default_rng(seed)
    dim_h = len(homs.basis)
    tried = 0
    # deterministic first passes: single basis elements
    candidates = list(homs.basis)
    while tried < max_tries:
        if candidates:
            t = candidates.pop(0)
        else:
            coeffs = rng.integers(0, 2, size=dim_h)
            if not coeffs.any():
                continue
            t = None
            for c, b in zip(coeffs, homs.basis):
                if c:
                    t = b if t is None else t + b
        tried += 1
        if t.rank() == m.dim:
            return IsoVerdict("isomorphic", witness=t, tries=tried)
    return IsoVerdict("inconclusive", tries=tried)
