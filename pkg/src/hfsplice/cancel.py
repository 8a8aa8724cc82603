"""Identity-block cancellation on block matrices.

Cancelling an identity block at (r, c) removes row-block r and column-block
c and folds their interaction into the rest of the grid by a Schur update:

    new(i, j) = old(i, j) + old(i, c) @ old(r, j).

Over GF(2) this is sign-free, and the kernel and cokernel dimensions of the
flattened matrix are preserved exactly.  Step coordinates always refer to
the block numbering of the ORIGINAL matrix; the remapping to the shrinking
grid happens internally.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import IndexOutOfRange, NotIdentityBlock
from .gf2core import BlockMatrix

__all__ = ["CancellationStep", "cancel_identity", "cancel_sequence"]


@dataclass(frozen=True)
class CancellationStep:
    """A pivot position, in block coordinates (0-based)."""

    row_block: int
    col_block: int


def cancel_identity(
    m: BlockMatrix, step: CancellationStep, allow_invertible: bool = False
) -> BlockMatrix:
    """Cancel one pivot block, returning the Schur complement grid.

    The pivot must be a literal identity matrix.  With ``allow_invertible``
    any invertible square block is accepted; its inverse is folded into the
    update, which generalizes the move without changing kernel or cokernel.
    """
    r, c = step.row_block, step.col_block
    nrows, ncols = len(m.row_dims), len(m.col_dims)
    if not (0 <= r < nrows and 0 <= c < ncols):
        raise IndexOutOfRange(
            f"pivot ({r}, {c}) outside block grid of {nrows} x {ncols}"
        )
    pivot = m.block(r, c)
    if pivot.is_identity():
        pivot_inv = pivot
    elif allow_invertible and pivot.rows == pivot.cols and pivot.rank() == pivot.rows:
        pivot_inv = pivot.inverse()
    else:
        raise NotIdentityBlock(
            f"block ({r}, {c}) of shape {pivot.shape} is not an identity matrix"
        )
    grid = []
    for i in range(nrows):
        if i == r:
            continue
        row = []
        for j in range(ncols):
            if j == c:
                continue
            row.append(m.block(i, j) + m.block(i, c) @ pivot_inv @ m.block(r, j))
        grid.append(tuple(row))
    return BlockMatrix(
        m.row_dims[:r] + m.row_dims[r + 1 :],
        m.col_dims[:c] + m.col_dims[c + 1 :],
        tuple(grid),
    )


def cancel_sequence(
    m: BlockMatrix,
    steps: Sequence[CancellationStep],
    allow_invertible: bool = False,
) -> BlockMatrix:
    """Apply cancellation steps given in original block coordinates.

    Steps are applied in listed order.  Errors are annotated with the step
    index and the original coordinates of the offending pivot.
    """
    row_map = list(range(len(m.row_dims)))
    col_map = list(range(len(m.col_dims)))
    out = m
    for idx, step in enumerate(steps):
        try:
            r = row_map.index(step.row_block)
        except ValueError:
            raise IndexOutOfRange(
                f"step {idx}: row block {step.row_block} already cancelled or absent"
            ) from None
        try:
            c = col_map.index(step.col_block)
        except ValueError:
            raise IndexOutOfRange(
                f"step {idx}: column block {step.col_block} already cancelled or absent"
            ) from None
        try:
            out = cancel_identity(out, CancellationStep(r, c), allow_invertible)
        except NotIdentityBlock as exc:
            raise NotIdentityBlock(
                f"step {idx} at original coordinates "
                f"({step.row_block}, {step.col_block}): {exc}"
            ) from exc
        del row_map[r]
        del col_map[c]
    return out
