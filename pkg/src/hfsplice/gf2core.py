"""Exact dense linear algebra over the two-element field.

A matrix is stored as one Python integer per row, bit ``j`` of row ``i``
holding entry ``(i, j)``.  Row operations are single word-level XORs, which
keeps Gaussian elimination exact and fast for the few-hundred-row matrices
the splice pipeline produces.  Zero-dimensional matrices (``0 x n``,
``m x 0``, ``0 x 0``) are first-class values: they arise naturally as blocks
of valid inputs and every operation here accepts them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import DimensionMismatch, SingularMatrix

__all__ = [
    "Gf2Matrix",
    "BlockMatrix",
    "IotaDims",
    "rank",
    "iota",
    "invert",
    "kron",
    "assemble",
    "slice_blocks",
]


@dataclass(frozen=True)
class IotaDims:
    """Kernel and cokernel dimensions of a matrix, as a pair."""

    kernel: int
    cokernel: int

    @property
    def total(self) -> int:
        return self.kernel + self.cokernel


@dataclass(frozen=True)
class Gf2Matrix:
    """Immutable dense matrix over GF(2) with bit-packed rows."""

    rows: int
    cols: int
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatch("matrix dimensions must be nonnegative")
        if len(self.bits) != self.rows:
            raise DimensionMismatch(
                f"expected {self.rows} packed rows, got {len(self.bits)}"
            )
        mask = (1 << self.cols) - 1
        for row in self.bits:
            if row & ~mask:
                raise DimensionMismatch("row data wider than declared column count")

    # -- construction -----------------------------------------------------

    @classmethod
    def zero(cls, rows: int, cols: int) -> Gf2Matrix:
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def identity(cls, n: int) -> Gf2Matrix:
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_rows(cls, data: Sequence[Sequence[int]], cols: int | None = None) -> Gf2Matrix:
        """Build from a list of 0/1 rows; ``cols`` disambiguates empty data."""
        rows = len(data)
        if cols is None:
            cols = len(data[0]) if rows else 0
        bits = []
        for row in data:
            if len(row) != cols:
                raise DimensionMismatch("ragged row data")
            packed = 0
            for j, v in enumerate(row):
                if v & 1:
                    packed |= 1 << j
            bits.append(packed)
        return cls(rows, cols, tuple(bits))

    @classmethod
    def from_json(cls, obj: Mapping) -> Gf2Matrix:
        """Parse ``{"rows": r, "cols": c, "data": [[0|1, ...], ...]}``."""
        m = cls.from_rows(obj["data"], cols=int(obj["cols"]))
        if m.rows != int(obj["rows"]):
            raise DimensionMismatch("declared row count does not match data")
        return m

    # -- serialization -----------------------------------------------------

    def to_rows(self) -> list[list[int]]:
        return [[(row >> j) & 1 for j in range(self.cols)] for row in self.bits]

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "data": self.to_rows()}

    # -- element access ----------------------------------------------------

    def entry(self, i: int, j: int) -> int:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise DimensionMismatch(f"entry ({i}, {j}) outside {self.shape}")
        return (self.bits[i] >> j) & 1

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def block(self, r0: int, r1: int, c0: int, c1: int) -> Gf2Matrix:
        """Contiguous submatrix on rows [r0, r1) and columns [c0, c1)."""
        if not (0 <= r0 <= r1 <= self.rows and 0 <= c0 <= c1 <= self.cols):
            raise DimensionMismatch("block range outside matrix")
        mask = (1 << (c1 - c0)) - 1
        return Gf2Matrix(
            r1 - r0, c1 - c0, tuple((self.bits[i] >> c0) & mask for i in range(r0, r1))
        )

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.bits)

    def is_identity(self) -> bool:
        return self.rows == self.cols and all(
            row == 1 << i for i, row in enumerate(self.bits)
        )

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: Gf2Matrix) -> Gf2Matrix:
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        return Gf2Matrix(
            self.rows, self.cols, tuple(a ^ b for a, b in zip(self.bits, other.bits))
        )

    def __matmul__(self, other: Gf2Matrix) -> Gf2Matrix:
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        obits = other.bits
        out = []
        for arow in self.bits:
            acc = 0
            rem = arow
            while rem:
                low = rem & -rem
                acc ^= obits[low.bit_length() - 1]
                rem ^= low
            out.append(acc)
        return Gf2Matrix(self.rows, other.cols, tuple(out))

    def transpose(self) -> Gf2Matrix:
        cols = []
        for j in range(self.cols):
            packed = 0
            for i, row in enumerate(self.bits):
                if (row >> j) & 1:
                    packed |= 1 << i
            cols.append(packed)
        return Gf2Matrix(self.cols, self.rows, tuple(cols))

    def rank(self) -> int:
        work = [row for row in self.bits if row]
        r = 0
        for c in range(self.cols):
            if r == len(work):
                break
            mask = 1 << c
            piv = next((i for i in range(r, len(work)) if work[i] & mask), None)
            if piv is None:
                continue
            work[r], work[piv] = work[piv], work[r]
            for i in range(len(work)):
                if i != r and work[i] & mask:
                    work[i] ^= work[r]
            r += 1
        return r

    def inverse(self) -> Gf2Matrix:
        if self.rows != self.cols:
            raise DimensionMismatch("only square matrices can be inverted")
        n = self.rows
        aug = [self.bits[i] | (1 << (n + i)) for i in range(n)]
        for c in range(n):
            piv = next((i for i in range(c, n) if (aug[i] >> c) & 1), None)
            if piv is None:
                raise SingularMatrix(f"matrix of size {n} has no pivot in column {c}")
            aug[c], aug[piv] = aug[piv], aug[c]
            for i in range(n):
                if i != c and (aug[i] >> c) & 1:
                    aug[i] ^= aug[c]
        return Gf2Matrix(n, n, tuple(row >> n for row in aug))

    def __str__(self) -> str:
        if self.rows == 0 or self.cols == 0:
            return f"<empty {self.rows}x{self.cols}>"
        return "\n".join(
            " ".join(str((row >> j) & 1) for j in range(self.cols)) for row in self.bits
        )


def rank(m: Gf2Matrix) -> int:
    """GF(2) rank; 0 for any zero-dimensional matrix."""
    return m.rank()


def iota(m: Gf2Matrix) -> IotaDims:
    """Kernel and cokernel dimensions: (cols - rank, rows - rank)."""
    r = m.rank()
    return IotaDims(kernel=m.cols - r, cokernel=m.rows - r)


def invert(m: Gf2Matrix) -> Gf2Matrix:
    return m.inverse()


def kron(a: Gf2Matrix, b: Gf2Matrix) -> Gf2Matrix:
    """Kronecker product, first factor outermost."""
    out = []
    for arow in a.bits:
        for brow in b.bits:
            packed = 0
            rem = arow
            while rem:
                low = rem & -rem
                packed |= brow << ((low.bit_length() - 1) * b.cols)
                rem ^= low
            out.append(packed)
    return Gf2Matrix(a.rows * b.rows, a.cols * b.cols, tuple(out))


def _offsets(dims: Sequence[int]) -> list[int]:
    offs = [0]
    for d in dims:
        offs.append(offs[-1] + d)
    return offs


@dataclass(frozen=True)
class BlockMatrix:
    """A grid of GF(2) matrices with consistent per-block shapes."""

    row_dims: tuple[int, ...]
    col_dims: tuple[int, ...]
    blocks: tuple[tuple[Gf2Matrix, ...], ...]

    def __post_init__(self) -> None:
        if len(self.blocks) != len(self.row_dims):
            raise DimensionMismatch("block grid height does not match row_dims")
        for i, row in enumerate(self.blocks):
            if len(row) != len(self.col_dims):
                raise DimensionMismatch("block grid width does not match col_dims")
            for j, b in enumerate(row):
                if b.shape != (self.row_dims[i], self.col_dims[j]):
                    raise DimensionMismatch(
                        f"block ({i}, {j}) has shape {b.shape}, expected "
                        f"({self.row_dims[i]}, {self.col_dims[j]})"
                    )

    @classmethod
    def zero(cls, row_dims: Sequence[int], col_dims: Sequence[int]) -> BlockMatrix:
        rd, cd = tuple(row_dims), tuple(col_dims)
        grid = tuple(tuple(Gf2Matrix.zero(r, c) for c in cd) for r in rd)
        return cls(rd, cd, grid)

    @classmethod
    def from_entries(
        cls,
        row_dims: Sequence[int],
        col_dims: Sequence[int],
        entries: Mapping[tuple[int, int], Gf2Matrix],
    ) -> BlockMatrix:
        """Grid with the given nonzero blocks, zero elsewhere."""
        rd, cd = tuple(row_dims), tuple(col_dims)
        grid = [[Gf2Matrix.zero(r, c) for c in cd] for r in rd]
        for (i, j), b in entries.items():
            grid[i][j] = b
        return cls(rd, cd, tuple(tuple(row) for row in grid))

    @property
    def shape(self) -> tuple[int, int]:
        return (sum(self.row_dims), sum(self.col_dims))

    def block(self, i: int, j: int) -> Gf2Matrix:
        return self.blocks[i][j]

    def with_block(self, i: int, j: int, b: Gf2Matrix) -> BlockMatrix:
        grid = [list(row) for row in self.blocks]
        grid[i][j] = b
        return BlockMatrix(self.row_dims, self.col_dims, tuple(tuple(r) for r in grid))

    def delete(self, i: int, j: int) -> BlockMatrix:
        """Remove row-block ``i`` and column-block ``j``."""
        rd = self.row_dims[:i] + self.row_dims[i + 1 :]
        cd = self.col_dims[:j] + self.col_dims[j + 1 :]
        grid = tuple(
            tuple(b for jj, b in enumerate(row) if jj != j)
            for ii, row in enumerate(self.blocks)
            if ii != i
        )
        return BlockMatrix(rd, cd, grid)

    def take(self, row_ids: Sequence[int], col_ids: Sequence[int]) -> BlockMatrix:
        """Sub-grid on the listed block rows and columns, in the listed order."""
        rd = tuple(self.row_dims[i] for i in row_ids)
        cd = tuple(self.col_dims[j] for j in col_ids)
        grid = tuple(
            tuple(self.blocks[i][j] for j in col_ids) for i in row_ids
        )
        return BlockMatrix(rd, cd, grid)

    def __add__(self, other: BlockMatrix) -> BlockMatrix:
        if self.row_dims != other.row_dims or self.col_dims != other.col_dims:
            raise DimensionMismatch("block structures differ")
        grid = tuple(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self.blocks, other.blocks)
        )
        return BlockMatrix(self.row_dims, self.col_dims, grid)

    def __matmul__(self, other: BlockMatrix) -> BlockMatrix:
        if self.col_dims != other.row_dims:
            raise DimensionMismatch("inner block structures differ")
        grid = []
        for i in range(len(self.row_dims)):
            out_row = []
            for j in range(len(other.col_dims)):
                acc = Gf2Matrix.zero(self.row_dims[i], other.col_dims[j])
                for k in range(len(self.col_dims)):
                    acc = acc + self.blocks[i][k] @ other.blocks[k][j]
                out_row.append(acc)
            grid.append(tuple(out_row))
        return BlockMatrix(self.row_dims, other.col_dims, tuple(grid))

    def flatten(self) -> Gf2Matrix:
        return assemble(self)


def assemble(b: BlockMatrix) -> Gf2Matrix:
    """Flatten a block grid into a single matrix."""
    coff = _offsets(b.col_dims)
    bits: list[int] = []
    for i, dim in enumerate(b.row_dims):
        packed_rows = [0] * dim
        for j, blk in enumerate(b.blocks[i]):
            shift = coff[j]
            for r, row in enumerate(blk.bits):
                packed_rows[r] |= row << shift
        bits.extend(packed_rows)
    return Gf2Matrix(sum(b.row_dims), sum(b.col_dims), tuple(bits))


def slice_blocks(
    m: Gf2Matrix, row_dims: Sequence[int], col_dims: Sequence[int]
) -> BlockMatrix:
    """Cut a matrix into a block grid; inverse of :func:`assemble`."""
    if sum(row_dims) != m.rows or sum(col_dims) != m.cols:
        raise DimensionMismatch(
            f"dimension grids sum to {(sum(row_dims), sum(col_dims))}, "
            f"matrix is {m.shape}"
        )
    roff = _offsets(row_dims)
    coff = _offsets(col_dims)
    grid = tuple(
        tuple(
            m.block(roff[i], roff[i + 1], coff[j], coff[j + 1])
            for j in range(len(col_dims))
        )
        for i in range(len(row_dims))
    )
    return BlockMatrix(tuple(row_dims), tuple(col_dims), grid)
