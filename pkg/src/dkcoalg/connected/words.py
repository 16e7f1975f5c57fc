"""Bases of direct sums of tensor words over graded factors.

A word basis is described by a list of *factors* (graded dimensions) and a list of
*patterns* (tuples of factor ids).  Degree ``n`` has one block per pattern and per
tuple of factor degrees summing to ``n``; inside a block, elements are indexed by the
row-major Kronecker index.  Blocks are ordered by pattern, then degree tuple
(lexicographically).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Callable, Sequence

from ..exactlinalg import FieldSpec, Matrix, _clean, kron


@dataclass(frozen=True)
class Block:
    pattern: int
    degs: tuple[int, ...]
    offset: int
    size: int


class WordBasis:
    def __init__(self, factor_dims: Sequence[Sequence[int]], patterns: Sequence[tuple[int, ...]], D: int):
        self.factor_dims = [tuple(f) for f in factor_dims]
        self.patterns = [tuple(p) for p in patterns]
        self.D = D
        self.blocks: list[list[Block]] = []
        self.index: list[dict[tuple[int, tuple[int, ...]], Block]] = []
        for n in range(D + 1):
            blocks, idx, off = [], {}, 0
            for pi, pat in enumerate(self.patterns):
                for degs in self._degree_tuples(pat, n):
                    size = prod(self.factor_dims[f][e] for f, e in zip(pat, degs))
                    b = Block(pi, degs, off, size)
                    blocks.append(b)
                    idx[(pi, degs)] = b
                    off += size
            self.blocks.append(blocks)
            self.index.append(idx)
        self.dims = tuple(sum(b.size for b in bl) for bl in self.blocks)

    def _degree_tuples(self, pat: tuple[int, ...], n: int):
        fd = self.factor_dims

        def rec(i, left):
            if i == len(pat):
                if left == 0:
                    yield ()
                return
            dims = fd[pat[i]]
            for e in range(0, min(left, len(dims) - 1) + 1):
                if dims[e]:
                    for rest in rec(i + 1, left - e):
                        yield (e,) + rest

        return list(rec(0, n))

    def block(self, n: int, pattern: int, degs: tuple[int, ...]) -> Block | None:
        return self.index[n].get((pattern, tuple(degs)))

    def block_sizes(self, pat: tuple[int, ...], degs: Sequence[int]) -> list[int]:
        return [self.factor_dims[f][e] for f, e in zip(pat, degs)]


def identity_kron(field: FieldSpec, before: int, M: Matrix, after: int) -> Matrix:
    """``I_before ⊗ M ⊗ I_after``."""
    out = M
    if before != 1:
        out = kron(Matrix.identity(field, before), out)
    if after != 1:
        out = kron(out, Matrix.identity(field, after))
    return out


class Accumulator:
    """Sparse entry accumulator producing a :class:`Matrix`."""

    def __init__(self, field: FieldSpec, nrows: int, ncols: int):
        self.field = field
        self.nrows, self.ncols = nrows, ncols
        self.rows: list[dict] = [dict() for _ in range(nrows)]

    def add_block(self, M: Matrix, row_map: Callable[[int], int] | int, col_map: Callable[[int], int] | int,
                  scale: int = 1):
        rm = (lambda i, o=row_map: o + i) if isinstance(row_map, int) else row_map
        cm = (lambda j, o=col_map: o + j) if isinstance(col_map, int) else col_map
        rows = self.rows
        for i, r in enumerate(M.rows):
            if not r:
                continue
            d = rows[rm(i)]
            for j, v in r.items():
                c = cm(j)
                d[c] = d.get(c, 0) + (v if scale == 1 else -v)

    def add(self, i: int, j: int, v):
        d = self.rows[i]
        d[j] = d.get(j, 0) + v

    def matrix(self) -> Matrix:
        mod = self.field.mod
        return Matrix(self.field, self.nrows, self.ncols, [_clean(r, mod) for r in self.rows], _trusted=True)


def koszul_differential(field: FieldSpec, basis: WordBasis, factor_d: Sequence[Sequence[Matrix | None]], n: int) -> Matrix:
    """Chain differential on words of degree ``n``:
    ``d(x_1 ⊗ … ⊗ x_m) = Σ_i (-1)^{|x_1|+…+|x_{i-1}|} x_1 ⊗ … ⊗ dx_i ⊗ … ⊗ x_m``.

    ``factor_d[f][e]`` is ``d_e`` of factor ``f`` (index ``e - 1`` not used: list is indexed by ``e``).
    """
    acc = Accumulator(field, basis.dims[n - 1], basis.dims[n])
    for b in basis.blocks[n]:
        pat = basis.patterns[b.pattern]
        sizes = basis.block_sizes(pat, b.degs)
        sign = 1
        for i, (f, e) in enumerate(zip(pat, b.degs)):
            if e >= 1:
                degs2 = b.degs[:i] + (e - 1,) + b.degs[i + 1:]
                tb = basis.block(n - 1, b.pattern, degs2)
                if tb is not None and tb.size:
                    M = identity_kron(field, prod(sizes[:i]), factor_d[f][e], prod(sizes[i + 1:]))
                    acc.add_block(M, tb.offset, b.offset, sign)
            if e % 2:
                sign = -sign
    return acc.matrix()


def tensor_square_offsets(dims: Sequence[int], n: int) -> dict[int, int]:
    """Offsets of the ``p``-summands of ``(T ⊗ T)_n``."""
    out, off = {}, 0
    for p in range(n + 1):
        out[p] = off
        off += dims[p] * dims[n - p]
    return out
