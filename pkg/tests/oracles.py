"""Independent GF(2) linear-algebra oracles for the tests.

Nothing here imports the package under test.  Two elimination routines are
provided: a transparent pure-Python one for small matrices, and a vectorized
numpy one for the larger flattened differentials.  They are written against
plain row-of-ints data so they can be fed from JSON-level representations.
"""

from __future__ import annotations

import numpy as np


def naive_rank(data: list[list[int]], cols: int | None = None) -> int:
    """Row reduce a list of 0/1 rows and count pivots."""
    work = [row[:] for row in data]
    if cols is None:
        cols = len(work[0]) if work else 0
    rank = 0
    for c in range(cols):
        pivot = None
        for i in range(rank, len(work)):
            if work[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for i in range(len(work)):
            if i != rank and work[i][c]:
                work[i] = [a ^ b for a, b in zip(work[i], work[rank])]
        rank += 1
    return rank


def numpy_rank(data: list[list[int]], rows: int, cols: int) -> int:
    """Vectorized elimination over GF(2) via uint8 arrays."""
    a = np.array(data, dtype=np.uint8).reshape(rows, cols)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        hits = np.nonzero(a[r:, c])[0]
        if hits.size == 0:
            continue
        p = r + hits[0]
        if p != r:
            a[[r, p]] = a[[p, r]]
        mask = a[:, c].astype(bool)
        mask[r] = False
        a[mask] ^= a[r]
        r += 1
    return r


def oracle_iota(data: list[list[int]], rows: int, cols: int) -> tuple[int, int]:
    """(kernel, cokernel) dimensions via the numpy elimination."""
    r = numpy_rank(data, rows, cols)
    return (cols - r, rows - r)


def naive_matmul(
    a: list[list[int]], b: list[list[int]], inner: int, cols: int | None = None
) -> list[list[int]]:
    rows = len(a)
    if cols is None:
        cols = len(b[0]) if b else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        for k in range(inner):
            if a[i][k]:
                for j in range(cols):
                    out[i][j] ^= b[k][j]
    return out


def naive_kron(a: list[list[int]], ar: int, ac: int,
               b: list[list[int]], br: int, bc: int) -> list[list[int]]:
    out = [[0] * (ac * bc) for _ in range(ar * br)]
    for i in range(ar):
        for j in range(ac):
            if a[i][j]:
                for p in range(br):
                    for q in range(bc):
                        out[i * br + p][j * bc + q] = b[p][q]
    return out
