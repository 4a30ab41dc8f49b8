"""Exact linear algebra over GF(2) on packed-integer bit matrices.

Rows are stored as Python integers (bit j = column j), so row addition is
a single XOR regardless of width.  Everything here is deterministic:
elimination always scans columns left to right and picks the first
available pivot row.

The one non-textbook routine is :func:`congruence_reduce`, which factors
a symmetric zero-diagonal matrix M as T.D.T^t with T invertible and D a
block diagonal of zero 1x1 blocks followed by antidiagonal 2x2 blocks.
Simultaneous row-and-column operations keep the diagonal zero throughout,
so the factorization is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

__all__ = [
    "BitMatrix",
    "CanonicalForm",
    "rank",
    "solve",
    "mat_mul",
    "mat_vec",
    "is_invertible",
    "congruence_reduce",
]


@dataclass(frozen=True)
class BitMatrix:
    """Dense GF(2) matrix; ``data[i]`` is row i as an integer bitset."""

    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError(f"negative dimensions {self.rows}x{self.cols}")
        if len(self.data) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.data)}")
        top = 1 << self.cols
        if any(not 0 <= r < top for r in self.data):
            raise ValueError(f"row value out of range for {self.cols} columns")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], cols: Optional[int] = None) -> "BitMatrix":
        """Build from an iterable of 0/1 sequences."""
        packed = []
        width = cols
        for row in rows:
            if width is None:
                width = len(row)
            elif len(row) != width:
                raise ValueError(f"ragged input: row of length {len(row)}, expected {width}")
            packed.append(sum((bit & 1) << j for j, bit in enumerate(row)))
        return cls(len(packed), width or 0, tuple(packed))

    @classmethod
    def from_strings(cls, rows: Iterable[str]) -> "BitMatrix":
        """Build from '0'/'1' strings, leftmost character = column 1."""
        return cls.from_rows([[int(ch) for ch in row] for row in rows])

    def get(self, i: int, j: int) -> int:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry ({i}, {j}) outside {self.rows}x{self.cols} matrix")
        return (self.data[i] >> j) & 1

    def to_rows(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.cols)] for r in self.data]

    def to_strings(self) -> list[str]:
        return ["".join(str((r >> j) & 1) for j in range(self.cols)) for r in self.data]

    def transpose(self) -> "BitMatrix":
        out = [0] * self.cols
        for i, r in enumerate(self.data):
            while r:
                j = (r & -r).bit_length() - 1
                out[j] |= 1 << i
                r &= r - 1
        return BitMatrix(self.cols, self.rows, tuple(out))

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and self.data == self.transpose().data

    def has_zero_diagonal(self) -> bool:
        return all(((r >> i) & 1) == 0 for i, r in enumerate(self.data))

    def __str__(self) -> str:
        return "\n".join(self.to_strings())


@dataclass(frozen=True)
class CanonicalForm:
    """Result of :func:`congruence_reduce`.

    The input matrix equals ``transform . D . transform^t`` where D is
    :meth:`canonical_matrix`: ``iso_count`` zero 1x1 blocks followed by
    ``pair_count`` antidiagonal 2x2 blocks.
    """

    dim: int
    iso_count: int
    pair_count: int
    transform: BitMatrix

    def __post_init__(self):
        if self.iso_count < 0 or self.pair_count < 0:
            raise ValueError("block counts must be non-negative")
        if self.iso_count + 2 * self.pair_count != self.dim:
            raise ValueError(
                f"block counts ({self.iso_count} + 2*{self.pair_count}) do not add up to dim {self.dim}"
            )
        if self.transform.rows != self.dim or self.transform.cols != self.dim:
            raise ValueError("transform must be square of size dim")
        if rank(self.transform) != self.dim:
            raise ValueError("transform must be invertible over GF(2)")

    def canonical_matrix(self) -> BitMatrix:
        """The block diagonal D: zeros first, then 2x2 antidiagonal blocks."""
        rows = [0] * self.dim
        for k in range(self.pair_count):
            i = self.iso_count + 2 * k
            rows[i] |= 1 << (i + 1)
            rows[i + 1] |= 1 << i
        return BitMatrix(self.dim, self.dim, tuple(rows))


def rank(m: BitMatrix) -> int:
    """GF(2) row rank by Gaussian elimination, columns scanned left to right."""
    work = [r for r in m.data if r]
    rk = 0
    for col in range(m.cols):
        bit = 1 << col
        pivot = next((i for i in range(rk, len(work)) if work[i] & bit), None)
        if pivot is None:
            continue
        work[rk], work[pivot] = work[pivot], work[rk]
        for i in range(len(work)):
            if i != rk and work[i] & bit:
                work[i] ^= work[rk]
        rk += 1
        if rk == len(work):
            break
    return rk


def mat_mul(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Matrix product over GF(2)."""
    if a.cols != b.rows:
        raise ValueError(f"shape mismatch: {a.rows}x{a.cols} times {b.rows}x{b.cols}")
    out = []
    for row in a.data:
        acc = 0
        r = row
        while r:
            k = (r & -r).bit_length() - 1
            acc ^= b.data[k]
            r &= r - 1
        out.append(acc)
    return BitMatrix(a.rows, b.cols, tuple(out))


def mat_vec(a: BitMatrix, x: Sequence[int]) -> tuple[int, ...]:
    """Matrix-vector product over GF(2); ``x`` is a 0/1 sequence of length cols."""
    if len(x) != a.cols:
        raise ValueError(f"vector length {len(x)} does not match {a.cols} columns")
    packed = sum((bit & 1) << j for j, bit in enumerate(x))
    return tuple((r & packed).bit_count() & 1 for r in a.data)


def solve(a: BitMatrix, b: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Solve a.x = b over GF(2).

    Returns the solution with all free variables set to 0 (elimination in
    column order, so the result is deterministic), or None when the
    system is inconsistent.
    """
    if len(b) != a.rows:
        raise ValueError(f"right-hand side length {len(b)} does not match {a.rows} rows")
    aug_bit = 1 << a.cols
    work = [a.data[i] | (aug_bit if (b[i] & 1) else 0) for i in range(a.rows)]
    pivots = []
    rk = 0
    for col in range(a.cols):
        bit = 1 << col
        pivot = next((i for i in range(rk, a.rows) if work[i] & bit), None)
        if pivot is None:
            continue
        work[rk], work[pivot] = work[pivot], work[rk]
        for i in range(a.rows):
            if i != rk and work[i] & bit:
                work[i] ^= work[rk]
        pivots.append((rk, col))
        rk += 1
    if any(work[i] & aug_bit for i in range(rk, a.rows)):
        return None
    x = [0] * a.cols
    for row, col in pivots:
        if work[row] & aug_bit:
            x[col] = 1
    return tuple(x)


def is_invertible(m: BitMatrix) -> bool:
    """True iff the matrix is square with full GF(2) rank."""
    if m.rows != m.cols:
        raise ValueError(f"invertibility is defined for square matrices, got {m.rows}x{m.cols}")
    return rank(m) == m.rows


def congruence_reduce(m: BitMatrix) -> CanonicalForm:
    """Factor a symmetric hollow matrix as transform . D . transform^t.

    D is the canonical block diagonal (zero rows first, then antidiagonal
    pairs).  The pivot rule is fixed: take the first row with a nonzero
    entry in the active trailing block, pair it with the first column it
    hits, move the pair to the front of the block by symmetric swaps, and
    clear the rest of its rows and columns by simultaneous row-and-column
    additions.  Pairs accumulate at the front; a final permutation (also
    a congruence) puts the zero rows first.

    Args:
        m: square, symmetric matrix with zero diagonal.

    Returns:
        CanonicalForm with ``iso_count = dim - rank(m)`` and
        ``pair_count = rank(m) / 2``.

    Raises:
        ValueError: if the input is not square, not symmetric, or has a
            nonzero diagonal entry.
    """
    if m.rows != m.cols:
        raise ValueError(f"congruence reduction needs a square matrix, got {m.rows}x{m.cols}")
    if not m.is_symmetric():
        raise ValueError("congruence reduction needs a symmetric matrix")
    if not m.has_zero_diagonal():
        raise ValueError("congruence reduction needs a zero diagonal")

    d = m.rows
    a = list(m.data)
    # rows of transform^t; starts as identity, updated by column ops on transform
    lt = [1 << i for i in range(d)]

    def swap_sym(i: int, j: int) -> None:
        if i == j:
            return
        a[i], a[j] = a[j], a[i]
        flip = (1 << i) | (1 << j)
        for r in range(d):
            bi = (a[r] >> i) & 1
            bj = (a[r] >> j) & 1
            if bi != bj:
                a[r] ^= flip
        lt[i], lt[j] = lt[j], lt[i]

    pair_count = 0
    while True:
        active = 2 * pair_count
        tail = ((1 << d) - 1) & ~((1 << active) - 1)
        live = next((r for r in range(active, d) if a[r] & tail), None)
        if live is None:
            break
        hit = a[live] & tail
        partner = (hit & -hit).bit_length() - 1
        # symmetry of the already-cleared block forces partner > live
        swap_sym(live, active)
        swap_sym(partner, active + 1)
        u, v = active, active + 1
        su, sv = a[u], a[v]
        assert ((su >> v) & 1) == 1
        # rows anticommuting with the u (resp. v) generator, pair excluded;
        # by symmetry these are exactly the set bits of rows u and v
        hit_u = su & ~(1 << v) & ~(1 << u)
        hit_v = sv & ~(1 << u) & ~(1 << v)
        # simultaneous row-and-column additions, batched: row phase first
        # (add row v into every row of hit_u, row u into every row of
        # hit_v), then the mirroring column phase; the zero diagonal
        # guarantees every recipient diagonal entry stays zero
        for r in range(d):
            if r == u or r == v:
                continue
            w = a[r]
            if (hit_u >> r) & 1:
                w ^= sv
            if (hit_v >> r) & 1:
                w ^= su
            if (w >> v) & 1:
                w ^= hit_u
            if (w >> u) & 1:
                w ^= hit_v
            a[r] = w
        a[u] = 1 << v
        a[v] = 1 << u
        # transform bookkeeping: column v of the transform absorbs the
        # hit_u columns, column u the hit_v columns
        acc = 0
        rbits = hit_u
        while rbits:
            acc ^= lt[(rbits & -rbits).bit_length() - 1]
            rbits &= rbits - 1
        lt[v] ^= acc
        acc = 0
        rbits = hit_v
        while rbits:
            acc ^= lt[(rbits & -rbits).bit_length() - 1]
            rbits &= rbits - 1
        lt[u] ^= acc
        assert all(((a[r] >> r) & 1) == 0 for r in range(d)), "diagonal left zero"
        pair_count += 1

    # a symmetric hollow matrix is an alternating form: its rank is even
    # and must equal twice the number of extracted pairs
    assert rank(m) == 2 * pair_count, "reduction disagrees with rank"

    iso_count = d - 2 * pair_count
    perm = list(range(2 * pair_count, d)) + list(range(2 * pair_count))
    lt = [lt[p] for p in perm]
    transform = BitMatrix(d, d, tuple(lt)).transpose()

    form = CanonicalForm(dim=d, iso_count=iso_count, pair_count=pair_count, transform=transform)
    if __debug__ and d <= 128:
        rebuilt = mat_mul(mat_mul(transform, form.canonical_matrix()), transform.transpose())
        assert rebuilt.data == m.data, "factorization failed to reproduce input"
    return form
