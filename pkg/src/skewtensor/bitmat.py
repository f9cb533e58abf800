"""Dense bit-packed linear algebra over GF(2).

Matrices are stored row-major as numpy uint64 words, 64 columns per word.
Values are immutable after construction; every operation returns a fresh
matrix, so instances can be shared freely between threads or processes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

WORD = 64


def _nwords(ncols: int) -> int:
    return (ncols + WORD - 1) // WORD


def _pack_bool(bits: np.ndarray) -> np.ndarray:
    """Pack a (rows, cols) bool/0-1 array into uint64 words, little-endian bits."""
    rows, cols = bits.shape
    nw = _nwords(cols)
    if rows == 0 or nw == 0:
        return np.zeros((rows, nw), dtype=np.uint64)
    padded = np.zeros((rows, nw * WORD), dtype=np.uint8)
    padded[:, :cols] = bits.astype(np.uint8)
    packed = np.packbits(padded, axis=1, bitorder="little")
    return np.ascontiguousarray(packed).view(np.uint64).reshape(rows, nw)


def _unpack_words(words: np.ndarray, ncols: int) -> np.ndarray:
    """Inverse of _pack_bool; returns a uint8 0/1 array of shape (rows, ncols)."""
    rows, nw = words.shape
    if rows == 0 or ncols == 0:
        return np.zeros((rows, ncols), dtype=np.uint8)
    as8 = np.ascontiguousarray(words).view(np.uint8)
    bits = np.unpackbits(as8, axis=1, bitorder="little")
    return bits[:, :ncols]


class BitMatrix:
    """An immutable rows x cols matrix over GF(2)."""

    __slots__ = ("nrows", "ncols", "words")

    def __init__(self, nrows: int, ncols: int, words: np.ndarray):
        if nrows < 0 or ncols < 0:
            raise ValueError("negative dimensions")
        if words.shape != (nrows, _nwords(ncols)):
            raise ValueError(f"bad word array shape {words.shape} for {nrows}x{ncols}")
        words = np.ascontiguousarray(words, dtype=np.uint64)
        words.flags.writeable = False
        self.nrows = nrows
        self.ncols = ncols
        self.words = words

    # -- constructors -------------------------------------------------

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "BitMatrix":
        return cls(nrows, ncols, np.zeros((nrows, _nwords(ncols)), dtype=np.uint64))

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        w = np.zeros((n, _nwords(n)), dtype=np.uint64)
        idx = np.arange(n)
        w[idx, idx // WORD] = np.uint64(1) << (idx % WORD).astype(np.uint64)
        return cls(n, n, w)

    @classmethod
    def from_bool(cls, bits) -> "BitMatrix":
        bits = np.asarray(bits)
        if bits.ndim != 2:
            raise ValueError("expected a 2-d array")
        return cls(bits.shape[0], bits.shape[1], _pack_bool(bits))

    @classmethod
    def from_entries(cls, nrows: int, ncols: int, entries) -> "BitMatrix":
        """Build from an iterable of (row, col) positions holding a 1."""
        bits = np.zeros((nrows, ncols), dtype=np.uint8)
        for i, j in entries:
            bits[i, j] ^= 1
        return cls.from_bool(bits)

    @classmethod
    def random(cls, nrows: int, ncols: int, rng: np.random.Generator) -> "BitMatrix":
        bits = rng.integers(0, 2, size=(nrows, ncols), dtype=np.uint8)
        return cls.from_bool(bits)

    # -- elementwise access -------------------------------------------

    def to_bool(self) -> np.ndarray:
        return _unpack_words(self.words, self.ncols)

    def get(self, i: int, j: int) -> int:
        return int((self.words[i, j // WORD] >> np.uint64(j % WORD)) & np.uint64(1))

    def row_support(self, i: int) -> list:
        return np.nonzero(self.to_bool()[i])[0].tolist()

    def col_bits(self, j: int) -> np.ndarray:
        """Column j as a uint8 0/1 vector of length nrows."""
        if self.nrows == 0:
            return np.zeros(0, dtype=np.uint8)
        w, b = divmod(j, WORD)
        return ((self.words[:, w] >> np.uint64(b)) & np.uint64(1)).astype(np.uint8)

    def column(self, j: int) -> "BitMatrix":
        """Column j as an nrows x 1 matrix."""
        return BitMatrix.from_bool(self.col_bits(j).reshape(-1, 1))

    def is_zero(self) -> bool:
        return not self.words.any()

    # -- structural ops -----------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BitMatrix)
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and bool(np.array_equal(self.words, other.words))
        )

    def __hash__(self):
        return hash((self.nrows, self.ncols, self.words.tobytes()))

    def __repr__(self):
        return f"BitMatrix({self.nrows}x{self.ncols})"

    def __add__(self, other: "BitMatrix") -> "BitMatrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch in add")
        return BitMatrix(self.nrows, self.ncols, self.words ^ other.words)

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        return self.mul(other)

    def mul(self, other: "BitMatrix") -> "BitMatrix":
        if self.ncols != other.nrows:
            raise ValueError(
                f"dimension mismatch in mul: {self.nrows}x{self.ncols} by "
                f"{other.nrows}x{other.ncols}"
            )
        if self.nrows == 0 or other.ncols == 0 or self.ncols == 0:
            return BitMatrix.zeros(self.nrows, other.ncols)
        # exact product via float BLAS; column sums stay far below 2**53
        a = self.to_bool().astype(np.float64)
        b = other.to_bool().astype(np.float64)
        c = (a @ b).astype(np.int64) & 1
        return BitMatrix.from_bool(c.astype(np.uint8))

    def transpose(self) -> "BitMatrix":
        return BitMatrix.from_bool(self.to_bool().T)

    @property
    def T(self) -> "BitMatrix":
        return self.transpose()

    def pow(self, e: int) -> "BitMatrix":
        if self.nrows != self.ncols:
            raise ValueError("pow of non-square matrix")
        result = BitMatrix.identity(self.nrows)
        base = self
        while e > 0:
            if e & 1:
                result = result @ base
            e >>= 1
            if e:
                base = base @ base
        return result

    def vstack(self, other: "BitMatrix") -> "BitMatrix":
        if self.ncols != other.ncols:
            raise ValueError("column mismatch in vstack")
        return BitMatrix(
            self.nrows + other.nrows, self.ncols, np.vstack([self.words, other.words])
        )

    def take_rows(self, idx) -> "BitMatrix":
        idx = np.asarray(idx, dtype=np.intp)
        return BitMatrix(len(idx), self.ncols, self.words[idx].copy())

    def submatrix(self, rows, cols) -> "BitMatrix":
        bits = self.to_bool()
        rows = np.asarray(rows, dtype=np.intp)
        cols = np.asarray(cols, dtype=np.intp)
        return BitMatrix.from_bool(bits[np.ix_(rows, cols)] if len(rows) and len(cols)
                                   else np.zeros((len(rows), len(cols)), dtype=np.uint8))

    def kron(self, other: "BitMatrix") -> "BitMatrix":
        """Kronecker product; row (iA*rb + iB), col (jA*cb + jB)."""
        ra, ca = self.nrows, self.ncols
        rb, cb = other.nrows, other.ncols
        out = np.zeros((ra * rb, _nwords(ca * cb)), dtype=np.uint64)
        if ra and rb and ca and cb:
            abits = self.to_bool()
            bbits = other.to_bool()
            for ia in range(ra):
                arow = abits[ia]
                if not arow.any():
                    continue
                block = (arow[None, :, None] & bbits[:, None, :]).reshape(rb, ca * cb)
                out[ia * rb:(ia + 1) * rb] = _pack_bool(block)
        return BitMatrix(ra * rb, ca * cb, out)

    # -- elimination --------------------------------------------------

    def _eliminate(self, limit_cols: int | None = None):
        """Row-reduce a copy; returns (words, pivot column list)."""
        work = self.words.copy()
        ncols = self.ncols if limit_cols is None else limit_cols
        pivots = []
        r = 0
        nrows = self.nrows
        one = np.uint64(1)
        for col in range(ncols):
            if r == nrows:
                break
            w, b = divmod(col, WORD)
            colbits = (work[r:, w] >> np.uint64(b)) & one
            nz = np.nonzero(colbits)[0]
            if nz.size == 0:
                continue
            p = r + int(nz[0])
            if p != r:
                work[[r, p]] = work[[p, r]]
            allbits = (work[:, w] >> np.uint64(b)) & one
            allbits[r] = 0
            sel = np.nonzero(allbits)[0]
            if sel.size:
                work[sel] ^= work[r]
            pivots.append(col)
            r += 1
        return work, pivots

    def rref(self):
        """Reduced row echelon form; returns (BitMatrix of nonzero rows, pivots)."""
        work, pivots = self._eliminate()
        return BitMatrix(len(pivots), self.ncols, work[: len(pivots)].copy()), pivots

    def rank(self) -> int:
        return len(self._eliminate()[1])

    def nullspace(self) -> "BitMatrix":
        """Basis of the right kernel, one vector per row, in RREF."""
        red, pivots = self.rref()
        free = [c for c in range(self.ncols) if c not in set(pivots)]
        nfree = len(free)
        kern = np.zeros((nfree, self.ncols), dtype=np.uint8)
        if nfree:
            kern[np.arange(nfree), free] = 1
            if pivots:
                rbits = red.to_bool()
                kern[:, pivots] = rbits[:, free].T
        return BitMatrix.from_bool(kern)

    def solve_matrix(self, rhs: "BitMatrix"):
        """Some X with self @ X = rhs, or None if inconsistent.

        Free variables are set to zero.
        """
        if rhs.nrows != self.nrows:
            raise ValueError("rhs row count mismatch")
        ca = self.ncols
        # pad self to a word boundary so rhs words can be appended directly
        wa = _nwords(ca)
        aug = np.hstack([self.words, rhs.words])
        amat = BitMatrix(self.nrows, wa * WORD + rhs.ncols, aug)
        work, pivots = amat._eliminate(limit_cols=ca)
        npiv = len(pivots)
        # inconsistency: a row that is zero in the A-part but not in the B-part
        tail = work[npiv:]
        if tail.size:
            if tail[:, :wa].any():
                raise AssertionError("elimination left nonzero A-part below pivots")
            if tail[:, wa:].any():
                return None
        x = np.zeros((ca, rhs.ncols), dtype=np.uint8)
        if npiv:
            bpart = _unpack_words(work[:npiv, wa:], rhs.ncols)
            x[pivots] = bpart
        return BitMatrix.from_bool(x)

    def solve(self, b: "BitMatrix"):
        """Solve self @ x = b for a single column vector b (ncols x 1), or None."""
        return self.solve_matrix(b)

    def inverse(self) -> "BitMatrix":
        if self.nrows != self.ncols:
            raise ValueError("inverse of non-square matrix")
        inv = self.solve_matrix(BitMatrix.identity(self.nrows))
        if inv is None or (self @ inv) != BitMatrix.identity(self.nrows):
            raise ValueError("matrix is singular")
        return inv

    def row_space(self) -> "Subspace":
        red, _ = self.rref()
        return Subspace(self.ncols, red)

    def column_space(self) -> "Subspace":
        return self.transpose().row_space()


@dataclass(frozen=True)
class Subspace:
    """A subspace of GF(2)^ambient_dim with a reduced row basis."""

    ambient_dim: int
    basis: BitMatrix

    def __post_init__(self):
        if self.basis.ncols != self.ambient_dim:
            raise ValueError("basis width does not match ambient dimension")

    @property
    def dim(self) -> int:
        return self.basis.nrows

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, BitMatrix.zeros(0, ambient_dim))

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, BitMatrix.identity(ambient_dim))

    @classmethod
    def span(cls, ambient_dim: int, rows: BitMatrix) -> "Subspace":
        red, _ = rows.rref()
        return cls(ambient_dim, red)

    def contains(self, vec: BitMatrix) -> bool:
        """Membership test for a 1 x ambient_dim row vector."""
        stacked = self.basis.vstack(vec)
        return stacked.rank() == self.dim

    def contains_space(self, other: "Subspace") -> bool:
        return self.basis.vstack(other.basis).rank() == self.dim

    def intersect_dim(self, other: "Subspace") -> int:
        joined = self.basis.vstack(other.basis).rank()
        return self.dim + other.dim - joined

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )


def fitting_pair(f: BitMatrix):
    """Fitting split of a square matrix: (ker(f^n), im(f^n)) as subspaces."""
    if f.nrows != f.ncols:
        raise ValueError("fitting_pair needs a square matrix")
    n = f.nrows
    g = f
    e = 1
    while e < max(n, 1):
        g = g @ g
        e *= 2
    ker = Subspace(n, g.nullspace())
    im = g.column_space()
    return ker, im


def is_nilpotent(f: BitMatrix) -> bool:
    if f.nrows != f.ncols:
        raise ValueError("is_nilpotent needs a square matrix")
    n = f.nrows
    g = f
    e = 1
    while e < max(n, 1):
        g = g @ g
        e *= 2
    return g.is_zero()


def rank(m: BitMatrix) -> int:
    return m.rank()


def nullspace(m: BitMatrix) -> Subspace:
    return Subspace(m.ncols, m.nullspace())


def solve(a: BitMatrix, b: BitMatrix):
    return a.solve(b)
