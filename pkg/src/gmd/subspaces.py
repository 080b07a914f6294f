"""Canonical enumeration of r-dimensional subspaces of GF(q)^n.

Each subspace is produced once, as its reduced row echelon basis.  The order is
deterministic: pivot sets in lexicographic order, then the free entries in
lexicographic order (row by row, left to right).
"""

from __future__ import annotations

from itertools import combinations, product

import numpy as np


def gaussian_binomial(n: int, r: int, q: int) -> int:
    """Number of r-dimensional subspaces of GF(q)^n."""
    if r < 0 or r > n:
        return 0
    num = den = 1
    for i in range(r):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def _free_positions(pivots, n):
    piv = set(pivots)
    return [(i, c) for i, p in enumerate(pivots) for c in range(p + 1, n) if c not in piv]


def rref_matrices(n: int, r: int, q: int):
    """Yield every r x n RREF matrix of rank r over GF(q) as a tuple of row tuples."""
    if r < 1 or r > n:
        return
    for pivots in combinations(range(n), r):
        free = _free_positions(pivots, n)
        base = [[0] * n for _ in range(r)]
        for i, p in enumerate(pivots):
            base[i][p] = 1
        for vals in product(range(q), repeat=len(free)):
            for (i, c), v in zip(free, vals):
                base[i][c] = v
            yield tuple(tuple(row) for row in base)


def rref_batches(n: int, r: int, q: int, batch: int = 1 << 14):
    """Same stream as rref_matrices, as int64 arrays of shape (N, r, n)."""
    if r < 1 or r > n:
        return
    tables = {}
    for pivots in combinations(range(n), r):
        free = _free_positions(pivots, n)
        nfree = len(free)
        # split the free entries: the last `lo` vary inside a batch, the rest per batch
        lo = 0
        while lo < nfree and q ** (lo + 1) <= batch:
            lo += 1
        if lo not in tables:
            tables[lo] = np.array(list(product(range(q), repeat=lo)), dtype=np.int64).reshape(q ** lo, lo)
        low = tables[lo]
        hi_pos, lo_pos = free[:nfree - lo], free[nfree - lo:]
        base = np.zeros((q ** lo, r, n), dtype=np.int64)
        base[:, np.arange(r), list(pivots)] = 1
        lr = [i for i, _ in lo_pos]
        lc = [c for _, c in lo_pos]
        if lo:
            base[:, lr, lc] = low
        for high in product(range(q), repeat=nfree - lo):
            out = base.copy()
            for (i, c), v in zip(hi_pos, high):
                out[:, i, c] = v
            yield out


MASK_TABLE_LIMIT = 1 << 22


def support_masks(M, q: int):
    """Support bitmask (over columns) of every combination c @ M, c in GF(q)^rows.

    Entry i belongs to the coefficient vector whose base-q digits, most
    significant first, spell i.  None when the table would be too large.
    """
    M = np.asarray(M, dtype=np.int64)
    k, n = M.shape
    if n > 63 or q ** k > MASK_TABLE_LIMIT:
        return None
    coeffs = np.array(list(product(range(q), repeat=k)), dtype=np.int64).reshape(q ** k, k)
    words = coeffs @ M % q
    bits = np.uint64(1) << np.arange(n, dtype=np.uint64)
    return np.bitwise_or.reduce(np.where(words != 0, bits, np.uint64(0)), axis=1)


def batch_supports(batch, masks, q: int):
    """Support sizes of the spans of a (N, r, k) batch of coefficient matrices."""
    k = batch.shape[2]
    place = q ** np.arange(k - 1, -1, -1, dtype=np.int64)
    return np.bitwise_count(np.bitwise_or.reduce(masks[batch @ place], axis=1))


def normalized_vectors(n: int, q: int):
    """Nonzero vectors with first nonzero entry 1 (one per projective point)."""
    for m in rref_matrices(n, 1, q):
        yield m[0]


def rref_key(rows, q: int) -> tuple:
    """Canonical RREF of the span of ``rows`` (integer vectors mod q), as a tuple."""
    from .linalg import rref_mod
    R, _ = rref_mod(np.array(rows, dtype=np.int64), q)
    return tuple(tuple(int(x) for x in row) for row in R)


def span_vectors(basis, q: int):
    """All normalized nonzero vectors in the span of an RREF basis."""
    basis = [tuple(b) for b in basis]
    r = len(basis)
    n = len(basis[0]) if basis else 0
    for coeffs in product(range(q), repeat=r):
        if not any(coeffs):
            continue
        first = next(i for i, c in enumerate(coeffs) if c)
        if coeffs[first] != 1:
            continue
        yield tuple(sum(c * b[j] for c, b in zip(coeffs, basis)) % q for j in range(n))
