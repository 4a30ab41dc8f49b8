"""End-to-end register minimization for weighted Pauli collections.

The pipeline: pick an independent generating subset of the input, form
the pairwise commutation matrix of those generators, congruence-reduce it
to the canonical block diagonal, realize the canonical blocks with
single-letter operators on ``dim - rank/2`` registers (one Z per zero
block, an X/Z pair per antidiagonal block), map them back through the
reduction transform, and finally rebuild every original term from the new
generators using the coefficients recorded during extraction.  Weights
ride along untouched.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .gf2 import BitMatrix, CanonicalForm, congruence_reduce, is_invertible, rank
from .pauli import (
    PauliString,
    SymplecticVector,
    WeightedPauli,
    from_symplectic,
    symplectic_product,
    to_symplectic,
)

__all__ = [
    "GeneratorBasis",
    "CommutationMatrix",
    "CompressionResult",
    "EquivalenceReport",
    "symplectic_rank",
    "extract_generators",
    "commutation_matrix",
    "min_registers",
    "canonical_generators",
    "apply_basis_change",
    "compress",
    "verify_equivalence",
]


@dataclass(frozen=True)
class GeneratorBasis:
    """An independent generating subset plus reconstruction coefficients.

    ``generator_indices[j]`` is the input position of generator j.
    ``coeffs[e]`` packs the GF(2) coefficient vector of input element e
    over the generators (bit j set = generator j participates), so the
    symplectic image of element e is the XOR of its generators' images.
    """

    generator_indices: tuple[int, ...]
    coeffs: tuple[int, ...]

    @property
    def num_generators(self) -> int:
        return len(self.generator_indices)

    def coeff_vector(self, e: int) -> tuple[int, ...]:
        """Unpacked coefficient vector of input element e."""
        return tuple((self.coeffs[e] >> j) & 1 for j in range(self.num_generators))


@dataclass(frozen=True)
class CommutationMatrix:
    """Pairwise anticommutation indicators of a generator list."""

    inner: BitMatrix

    def __post_init__(self):
        if not self.inner.is_symmetric():
            raise ValueError("commutation matrix must be symmetric")
        if not self.inner.has_zero_diagonal():
            raise ValueError("commutation matrix must have a zero diagonal")

    @property
    def dim(self) -> int:
        return self.inner.rows


@dataclass(frozen=True)
class EquivalenceReport:
    pairwise_match: bool
    rank_original: int
    rank_candidate: int
    rank_match: bool
    passed: bool


@dataclass(frozen=True)
class CompressionResult:
    """Everything produced by :func:`compress`.

    ``images`` holds one term per original input term, on ``q`` registers,
    with the original weight copied verbatim.
    """

    q: int
    original_n: int
    original_terms: tuple[WeightedPauli, ...]
    basis: GeneratorBasis
    canonical: CanonicalForm
    compressed_generators: tuple[PauliString, ...]
    images: tuple[WeightedPauli, ...]


def _uniform_n(ops: Sequence[PauliString], what: str) -> int:
    n = ops[0].n
    for op in ops[1:]:
        if op.n != n:
            raise ValueError(f"{what} mixes operators on {n} and {op.n} registers")
    return n


def symplectic_rank(ops: Sequence[PauliString]) -> int:
    """Number of compositionally independent operators in the collection."""
    if not ops:
        return 0
    n = _uniform_n(ops, "collection")
    stacked = BitMatrix(len(ops), 2 * n, tuple(to_symplectic(op).bits for op in ops))
    return rank(stacked)


def extract_generators(collection: Sequence[PauliString]) -> GeneratorBasis:
    """Greedy left-to-right independent subset with reconstruction coefficients.

    An element joins the basis exactly when its symplectic image is
    outside the span of the images seen so far; identities and duplicates
    receive coefficient vectors over the basis instead (the identity gets
    the all-zero vector).
    """
    if not collection:
        raise ValueError("cannot extract generators from an empty collection")
    _uniform_n(collection, "collection")

    # echelon rows sorted by decreasing leading bit; alongside each row,
    # the packed combination of generators it represents
    echelon: list[tuple[int, int]] = []
    generator_indices: list[int] = []
    coeffs: list[int] = []
    for idx, op in enumerate(collection):
        w = to_symplectic(op).bits
        combo = 0
        for row, row_combo in echelon:
            if (w ^ row) < w:
                w ^= row
                combo ^= row_combo
        if w == 0:
            coeffs.append(combo)
            continue
        k = len(generator_indices)
        generator_indices.append(idx)
        coeffs.append(1 << k)
        entry = (w, combo ^ (1 << k))
        pos = next((i for i, (row, _) in enumerate(echelon) if row < w), len(echelon))
        echelon.insert(pos, entry)
    return GeneratorBasis(tuple(generator_indices), tuple(coeffs))


def commutation_matrix(basis_ops: Sequence[PauliString]) -> CommutationMatrix:
    """d x d matrix of pairwise symplectic products."""
    if basis_ops:
        _uniform_n(basis_ops, "generator list")
    vecs = [to_symplectic(op) for op in basis_ops]
    d = len(vecs)
    rows = [
        sum(symplectic_product(vecs[i], vecs[j]) << j for j in range(d))
        for i in range(d)
    ]
    return CommutationMatrix(BitMatrix(d, d, tuple(rows)))


def min_registers(m: CommutationMatrix) -> int:
    """Fewest registers able to carry these commutation relations: dim - rank/2."""
    return m.dim - rank(m.inner) // 2


def canonical_generators(iso_count: int, pair_count: int) -> list[SymplecticVector]:
    """Operators realizing the canonical block diagonal on iso+pair registers.

    Returns, in order, a single Z on each of the first ``iso_count``
    registers, then an X and a Z on each remaining register (one
    anticommuting pair per register).
    """
    if iso_count < 0 or pair_count < 0:
        raise ValueError("block counts must be non-negative")
    q = iso_count + pair_count
    vecs = []
    for i in range(iso_count):
        vecs.append(SymplecticVector(q, 1 << (q + i)))
    for k in range(pair_count):
        reg = iso_count + k
        vecs.append(SymplecticVector(q, 1 << reg))
        vecs.append(SymplecticVector(q, 1 << (q + reg)))
    return vecs


def apply_basis_change(
    canonical: Sequence[SymplecticVector], transform: BitMatrix
) -> list[PauliString]:
    """Compose canonical operators along the rows of an invertible transform.

    Output i is the XOR of the canonical vectors selected by row i, so the
    output's commutation matrix is transform . D . transform^t.
    """
    d = len(canonical)
    if transform.rows != d or transform.cols != d:
        raise ValueError(
            f"transform is {transform.rows}x{transform.cols}, need {d}x{d} for {d} generators"
        )
    if d and not is_invertible(transform):
        raise ValueError("transform must be invertible over GF(2)")
    if d and any(v.n != canonical[0].n for v in canonical):
        raise ValueError("canonical vectors mix register counts")
    out = []
    for i in range(d):
        bits = 0
        row = transform.data[i]
        while row:
            j = (row & -row).bit_length() - 1
            bits ^= canonical[j].bits
            row &= row - 1
        out.append(from_symplectic(SymplecticVector(canonical[0].n, bits)))
    return out


def compress(collection: Sequence[WeightedPauli]) -> CompressionResult:
    """Rewrite a weighted collection onto the minimal number of registers.

    The output preserves the pairwise commutation pattern of every input
    term and the number of independent generators; weights are attached
    to the corresponding images unchanged.

    Raises:
        ValueError: empty input, mixed register counts, or a collection
            with no non-identity content.
    """
    terms = tuple(collection)
    if not terms:
        raise ValueError("cannot compress an empty collection")
    ops = [t.op for t in terms]
    n = _uniform_n(ops, "collection")

    basis = extract_generators(ops)
    d = basis.num_generators
    if d == 0:
        raise ValueError("no non-identity content: every term is the identity")

    gen_ops = [ops[i] for i in basis.generator_indices]
    cm = commutation_matrix(gen_ops)
    form = congruence_reduce(cm.inner)
    q = form.iso_count + form.pair_count

    canonical = canonical_generators(form.iso_count, form.pair_count)
    new_gens = apply_basis_change(canonical, form.transform)
    new_vecs = [to_symplectic(g) for g in new_gens]

    images = []
    for term, combo in zip(terms, basis.coeffs):
        bits = 0
        c = combo
        while c:
            j = (c & -c).bit_length() - 1
            bits ^= new_vecs[j].bits
            c &= c - 1
        images.append(WeightedPauli(from_symplectic(SymplecticVector(q, bits)), term.weight))

    return CompressionResult(
        q=q,
        original_n=n,
        original_terms=terms,
        basis=basis,
        canonical=form,
        compressed_generators=tuple(new_gens),
        images=tuple(images),
    )


def verify_equivalence(
    original: Sequence[PauliString], candidate: Sequence[PauliString]
) -> EquivalenceReport:
    """Check that two collections share all pairwise commutation relations
    and have the same number of independent generators.

    Equal pairwise relations alone would accept candidates that collapse
    independent generators onto each other; the rank condition rules that
    out.
    """
    if len(original) != len(candidate):
        raise ValueError(
            f"collections differ in length: {len(original)} vs {len(candidate)}"
        )
    ovecs = [to_symplectic(op) for op in original]
    cvecs = [to_symplectic(op) for op in candidate]
    if original:
        _uniform_n(original, "original collection")
        _uniform_n(candidate, "candidate collection")

    pairwise = all(
        symplectic_product(ovecs[i], ovecs[j]) == symplectic_product(cvecs[i], cvecs[j])
        for i in range(len(original))
        for j in range(i + 1, len(original))
    )
    rank_original = symplectic_rank(original)
    rank_candidate = symplectic_rank(candidate)
    rank_match = rank_original == rank_candidate
    return EquivalenceReport(
        pairwise_match=pairwise,
        rank_original=rank_original,
        rank_candidate=rank_candidate,
        rank_match=rank_match,
        passed=pairwise and rank_match,
    )
