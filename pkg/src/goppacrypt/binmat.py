"""Dense GF(2) linear algebra on bit-packed rows.

Rows are Python ints, bit j of row i = entry (i, j), so row operations are
single XORs even at n around 2*10^4.  Matrices are values: operations return
new matrices and never mutate inputs.
"""


class RankDeficiencyError(ValueError):
    """Systematic form requested from a matrix whose rank < rows."""

    def __init__(self, rank):
        super().__init__("matrix is rank-deficient (rank %d)" % rank)
        self.rank = rank


class BinMatrix:
    __slots__ = ("rows", "cols", "bits")

    def __init__(self, rows, cols, bits=None):
        if bits is None:
            bits = [0] * rows
        if len(bits) != rows:
            raise ValueError("row count mismatch")
        mask = (1 << cols) - 1
        self.rows = rows
        self.cols = cols
        self.bits = tuple(b & mask for b in bits)

    @classmethod
    def identity(cls, n):
        return cls(n, n, [1 << i for i in range(n)])

    @classmethod
    def from_entries(cls, entries):
        """Build from an iterable of 0/1 row iterables."""
        rows = [sum(1 << j for j, e in enumerate(row) if e & 1) for row in entries]
        cols = max((len(row) for row in entries), default=0)
        return cls(len(rows), cols, rows)

    def get(self, i, j):
        return (self.bits[i] >> j) & 1

    def row(self, i):
        return self.bits[i]

    def __eq__(self, other):
        return (isinstance(other, BinMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.bits == other.bits)

    def __hash__(self):
        return hash((self.rows, self.cols, self.bits))

    def __repr__(self):
        return "BinMatrix(%d x %d)" % (self.rows, self.cols)

    def mul_vec(self, x):
        """M * x^T for an n-bit vector x; bit i of the result = parity(row_i & x)."""
        out = 0
        for i, r in enumerate(self.bits):
            if (r & x).bit_count() & 1:
                out |= 1 << i
        return out

    def transpose(self):
        cols = [0] * self.cols
        for i, r in enumerate(self.bits):
            while r:
                low = r & -r
                cols[low.bit_length() - 1] |= 1 << i
                r ^= low
        return BinMatrix(self.cols, self.rows, cols)

    def vstack(self, other):
        if self.cols != other.cols:
            raise ValueError("column count mismatch")
        return BinMatrix(self.rows + other.rows, self.cols,
                         list(self.bits) + list(other.bits))

    def permute_cols(self, perm):
        """New matrix with column j taken from column perm[j]."""
        if sorted(perm) != list(range(self.cols)):
            raise ValueError("not a permutation of the columns")
        out = []
        for r in self.bits:
            v = 0
            for j, src in enumerate(perm):
                v |= ((r >> src) & 1) << j
            out.append(v)
        return BinMatrix(self.rows, self.cols, out)

    def to_bytes(self):
        """Row-major contiguous bit stream, LSB first within each byte."""
        total = self.rows * self.cols
        acc = 0
        for i, r in enumerate(self.bits):
            acc |= r << (i * self.cols)
        return acc.to_bytes((total + 7) // 8, "little")

    @classmethod
    def from_bytes(cls, rows, cols, data):
        acc = int.from_bytes(data, "little")
        mask = (1 << cols) - 1
        return cls(rows, cols, [(acc >> (i * cols)) & mask for i in range(rows)])


def rref(M):
    """Reduced row echelon form; returns (R, rank, pivot columns)."""
    work = list(M.bits)
    pivots = []
    rank = 0
    for col in range(M.cols):
        bit = 1 << col
        sel = None
        for i in range(rank, M.rows):
            if work[i] & bit:
                sel = i
                break
        if sel is None:
            continue
        work[rank], work[sel] = work[sel], work[rank]
        for i in range(M.rows):
            if i != rank and work[i] & bit:
                work[i] ^= work[rank]
        pivots.append(col)
        rank += 1
        if rank == M.rows:
            break
    return BinMatrix(M.rows, M.cols, work), rank, pivots


def systematic_form(M):
    """Column-permute a full-row-rank matrix into [I | A].

    Returns (S, colperm) where S has column j equal to M's column colperm[j];
    pivot columns are chosen greedily left to right and moved to the front.
    """
    R, rank, pivots = rref(M)
    if rank < M.rows:
        raise RankDeficiencyError(rank)
    pivset = set(pivots)
    colperm = pivots + [c for c in range(M.cols) if c not in pivset]
    return R.permute_cols(colperm), colperm


def null_space(M):
    """Basis (as rows) of {x : M x^T = 0}; row count = cols - rank."""
    R, rank, pivots = rref(M)
    piv_row = {c: i for i, c in enumerate(pivots)}
    pivset = set(pivots)
    basis = []
    for free in range(M.cols):
        if free in pivset:
            continue
        v = 1 << free
        fbit = 1 << free
        for c, i in piv_row.items():
            if R.bits[i] & fbit:
                v |= 1 << c
        basis.append(v)
    return BinMatrix(len(basis), M.cols, basis)
