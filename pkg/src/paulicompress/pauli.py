"""Phase-free Pauli operators and their binary symplectic encoding.

An operator on n registers is a tensor product of single-register letters
from {I, X, Y, Z}, taken modulo global phase (Y stands for the product of
X and Z; the scalar in front never matters for commutation structure).
Each register carries a bit pair (x, z):

    (0, 0) = I    (1, 0) = X    (0, 1) = Z    (1, 1) = Y

The x and z powers of all registers are packed into Python integers, bit
t holding register t+1, so equality and composition are whole-vector
operations.  The symplectic image of an operator is the 2n-bit vector
with the X powers in the low n bits and the Z powers in the high n bits;
composing operators XORs their images, and the symplectic product of two
images is 0 exactly when the operators commute.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "PauliString",
    "SymplecticVector",
    "WeightedPauli",
    "to_symplectic",
    "from_symplectic",
    "compose",
    "symplectic_product",
    "pauli_weight",
]

_LETTER_OF_BITS = {(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}
_BITS_OF_LETTER = {letter: bits for bits, letter in _LETTER_OF_BITS.items()}


@dataclass(frozen=True)
class PauliString:
    """A Pauli operator on ``n`` registers, global phase dropped.

    ``x_bits`` and ``z_bits`` hold the X and Z powers of every register,
    bit t = register t+1.
    """

    n: int
    x_bits: int
    z_bits: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"a Pauli operator needs at least one register, got n={self.n}")
        top = 1 << self.n
        if not (0 <= self.x_bits < top and 0 <= self.z_bits < top):
            raise ValueError(f"site bits out of range for n={self.n}")

    @classmethod
    def from_string(cls, letters: str) -> "PauliString":
        """Build from a string over I, X, Y, Z; the leftmost letter is register 1."""
        x = z = 0
        for t, ch in enumerate(letters):
            try:
                xb, zb = _BITS_OF_LETTER[ch]
            except KeyError:
                raise ValueError(f"invalid Pauli letter {ch!r} (want one of I, X, Y, Z)") from None
            x |= xb << t
            z |= zb << t
        return cls(len(letters), x, z)

    @classmethod
    def from_sites(cls, sites: Iterable[Sequence[int]]) -> "PauliString":
        """Build from per-register (x, z) bit pairs."""
        x = z = 0
        t = -1
        for t, (xb, zb) in enumerate(sites):
            x |= (xb & 1) << t
            z |= (zb & 1) << t
        return cls(t + 1, x, z)

    @classmethod
    def identity(cls, n: int) -> "PauliString":
        return cls(n, 0, 0)

    @property
    def sites(self) -> tuple[tuple[int, int], ...]:
        """Per-register (x, z) bit pairs, register 1 first."""
        return tuple(((self.x_bits >> t) & 1, (self.z_bits >> t) & 1) for t in range(self.n))

    def __mul__(self, other: "PauliString") -> "PauliString":
        return compose(self, other)

    def __str__(self) -> str:
        return "".join(_LETTER_OF_BITS[site] for site in self.sites)

    def __repr__(self) -> str:
        return f"PauliString({str(self)!r})"


@dataclass(frozen=True)
class SymplecticVector:
    """A 2n-bit vector: X powers in bits 0..n-1, Z powers in bits n..2n-1."""

    n: int
    bits: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"a symplectic vector needs at least one register, got n={self.n}")
        if not 0 <= self.bits < (1 << (2 * self.n)):
            raise ValueError(f"bit value out of range for n={self.n}")

    @classmethod
    def zero(cls, n: int) -> "SymplecticVector":
        return cls(n, 0)

    @property
    def x_bits(self) -> int:
        return self.bits & ((1 << self.n) - 1)

    @property
    def z_bits(self) -> int:
        return self.bits >> self.n

    def to_bits(self) -> tuple[int, ...]:
        return tuple((self.bits >> i) & 1 for i in range(2 * self.n))

    def __xor__(self, other: "SymplecticVector") -> "SymplecticVector":
        if self.n != other.n:
            raise ValueError(f"cannot add vectors on {self.n} and {other.n} registers")
        return SymplecticVector(self.n, self.bits ^ other.bits)


@dataclass(frozen=True)
class WeightedPauli:
    """A Pauli term with an opaque complex coefficient.

    Weights are carried through every transformation untouched; only the
    operator part participates in the algebra.
    """

    op: PauliString
    weight: complex = 1.0

    def __post_init__(self):
        w = complex(self.weight)
        if not cmath.isfinite(w):
            raise ValueError(f"weight must be finite, got {self.weight!r}")
        object.__setattr__(self, "weight", w)


def to_symplectic(p: PauliString) -> SymplecticVector:
    """Symplectic image of ``p``: X powers in the low half, Z powers in the high."""
    return SymplecticVector(p.n, p.x_bits | (p.z_bits << p.n))


def from_symplectic(v: SymplecticVector) -> PauliString:
    """Inverse of :func:`to_symplectic` under the phase-free letter convention."""
    return PauliString(v.n, v.x_bits, v.z_bits)


def compose(p: PauliString, q: PauliString) -> PauliString:
    """Phase-free product of two operators: per-register XOR of (x, z) pairs."""
    if p.n != q.n:
        raise ValueError(f"cannot compose operators on {p.n} and {q.n} registers")
    return PauliString(p.n, p.x_bits ^ q.x_bits, p.z_bits ^ q.z_bits)


def symplectic_product(u: SymplecticVector, v: SymplecticVector) -> int:
    """The GF(2) pairing x1.z2 + z1.x2: 0 if the operators commute, 1 if not."""
    if u.n != v.n:
        raise ValueError(f"cannot pair vectors on {u.n} and {v.n} registers")
    return ((u.x_bits & v.z_bits).bit_count() + (u.z_bits & v.x_bits).bit_count()) & 1


def pauli_weight(p: PauliString) -> int:
    """Number of registers acted on by a non-identity letter."""
    return (p.x_bits | p.z_bits).bit_count()
