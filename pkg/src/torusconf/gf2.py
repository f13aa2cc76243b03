"""Exact linear algebra over the two-element field.

Vectors and matrices are bit-packed: a length-n vector is an n-bit Python
integer (bit j = coordinate j), and a matrix is a tuple of such row masks.
Python integers are word-limbed bitsets, so XOR row operations run at
machine speed with no array dependency.

Pivoting is deterministic: elimination always takes the lowest-index
(leftmost) column available, so echelon forms, kernel bases and coset
representatives are reproducible across runs and platforms.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator


def bit_indices(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Gf2Vector:
    """A fixed-length coordinate vector over GF(2)."""

    length: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ValueError("negative vector length")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("bits fall outside the declared length")

    @classmethod
    def from_support(cls, length: int, support: Iterable[int]) -> Gf2Vector:
        bits = 0
        for j in support:
            bits |= 1 << j
        return cls(length, bits)

    def __xor__(self, other: Gf2Vector) -> Gf2Vector:
        if self.length != other.length:
            raise ValueError("vector length mismatch")
        return Gf2Vector(self.length, self.bits ^ other.bits)

    def __getitem__(self, j: int) -> int:
        if not 0 <= j < self.length:
            raise IndexError(j)
        return (self.bits >> j) & 1

    def dot(self, other: Gf2Vector) -> int:
        if self.length != other.length:
            raise ValueError("vector length mismatch")
        return (self.bits & other.bits).bit_count() & 1

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    @property
    def is_zero(self) -> bool:
        return self.bits == 0

    def support(self) -> tuple[int, ...]:
        return tuple(bit_indices(self.bits))


@dataclass(frozen=True)
class Gf2Matrix:
    """A dense GF(2) matrix; column j holds the image of basis vector j."""

    nrows: int
    ncols: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.nrows:
            raise ValueError("row count does not match nrows")
        for r in self.rows:
            if r < 0 or r >> self.ncols:
                raise ValueError("row bits fall outside ncols")

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> Gf2Matrix:
        return cls(nrows, ncols, (0,) * nrows)

    @classmethod
    def identity(cls, n: int) -> Gf2Matrix:
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_rows(cls, rows: Iterable[Gf2Vector], ncols: int | None = None) -> Gf2Matrix:
        vecs = list(rows)
        if ncols is None:
            if not vecs:
                raise ValueError("ncols required for an empty matrix")
            ncols = vecs[0].length
        for v in vecs:
            if v.length != ncols:
                raise ValueError("rows of unequal length")
        return cls(len(vecs), ncols, tuple(v.bits for v in vecs))

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def row(self, i: int) -> Gf2Vector:
        return Gf2Vector(self.ncols, self.rows[i])

    def column(self, j: int) -> Gf2Vector:
        if not 0 <= j < self.ncols:
            raise IndexError(j)
        bits = 0
        for i, r in enumerate(self.rows):
            if (r >> j) & 1:
                bits |= 1 << i
        return Gf2Vector(self.nrows, bits)

    def mul_vec(self, v: Gf2Vector) -> Gf2Vector:
        if v.length != self.ncols:
            raise ValueError("dimension mismatch")
        bits = 0
        for i, r in enumerate(self.rows):
            if (r & v.bits).bit_count() & 1:
                bits |= 1 << i
        return Gf2Vector(self.nrows, bits)

    def __add__(self, other: Gf2Matrix) -> Gf2Matrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Gf2Matrix(
            self.nrows, self.ncols,
            tuple(a ^ b for a, b in zip(self.rows, other.rows)),
        )

    def __matmul__(self, other: Gf2Matrix) -> Gf2Matrix:
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        out = []
        for r in self.rows:
            acc = 0
            for j in bit_indices(r):
                acc ^= other.rows[j]
            out.append(acc)
        return Gf2Matrix(self.nrows, other.ncols, tuple(out))

    def transpose(self) -> Gf2Matrix:
        cols = [0] * self.ncols
        for i, r in enumerate(self.rows):
            bit = 1 << i
            for j in bit_indices(r):
                cols[j] |= bit
        return Gf2Matrix(self.ncols, self.nrows, tuple(cols))


class SubspaceNotPreservedError(ValueError):
    """A map claimed to stabilise a subspace fails to do so."""


def _echelon_pivots(rows: Iterable[int]) -> dict[int, int]:
    """Reduce rows to echelon form; maps pivot column -> row mask.

    Rows are consumed in order and each is reduced against the pivots seen
    so far, always clearing the lowest set bit first.
    """
    pivots: dict[int, int] = {}
    for r in rows:
        while r:
            p = (r & -r).bit_length() - 1
            seen = pivots.get(p)
            if seen is None:
                pivots[p] = r
                break
            r ^= seen
    return pivots


def _rref(rows: Iterable[int]) -> dict[int, int]:
    """Full row reduction: no stored row contains another row's pivot bit."""
    pivots = _echelon_pivots(rows)
    for p in sorted(pivots, reverse=True):
        r = pivots[p]
        t = r ^ (1 << p)
        while t:
            low = t & -t
            q = low.bit_length() - 1
            t ^= low
            if q in pivots and (r >> q) & 1:
                r ^= pivots[q]
        pivots[p] = r
    return pivots


def rank(m: Gf2Matrix) -> int:
    """GF(2) rank via row elimination; ``m`` is not mutated."""
    return len(_echelon_pivots(m.rows))


def kernel_basis(m: Gf2Matrix) -> list[Gf2Vector]:
    """A basis of {v : m v = 0}, one vector per free column, in column order."""
    pivots = _rref(m.rows)
    basis = []
    for f in range(m.ncols):
        if f in pivots:
            continue
        bits = 1 << f
        for p, r in pivots.items():
            if (r >> f) & 1:
                bits |= 1 << p
        basis.append(Gf2Vector(m.ncols, bits))
    return basis


@dataclass(frozen=True)
class QuotientBasis:
    """An ambient space modulo a subspace, with canonical coset representatives.

    ``rows`` is the reduced row-echelon basis of the subspace, ordered by
    pivot; ``free_coords`` (the pivot-free coordinates) index a basis of the
    quotient. ``reduce`` sends any ambient vector to the unique coset
    representative supported on the free coordinates, so reduce(v) == 0
    exactly when v lies in the subspace.
    """

    ambient_dim: int
    rows: tuple[int, ...]
    pivots: tuple[int, ...]
    free_coords: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.free_coords)

    @cached_property
    def _pivot_mask(self) -> int:
        mask = 0
        for p in self.pivots:
            mask |= 1 << p
        return mask

    @cached_property
    def _row_by_pivot(self) -> dict[int, int]:
        return dict(zip(self.pivots, self.rows))

    @cached_property
    def _free_index(self) -> dict[int, int]:
        return {f: k for k, f in enumerate(self.free_coords)}

    def reduce_bits(self, bits: int) -> int:
        hits = bits & self._pivot_mask
        rows = self._row_by_pivot
        while hits:
            low = hits & -hits
            bits ^= rows[low.bit_length() - 1]
            # RREF rows carry no other pivot bit, so only `low` leaves the mask.
            hits ^= low
        return bits

    def reduce(self, v: Gf2Vector) -> Gf2Vector:
        if v.length != self.ambient_dim:
            raise ValueError("dimension mismatch")
        return Gf2Vector(self.ambient_dim, self.reduce_bits(v.bits))

    def contains(self, v: Gf2Vector) -> bool:
        return self.reduce(v).is_zero

    def to_quotient(self, v: Gf2Vector) -> Gf2Vector:
        """Coordinates of the coset of v in the free-coordinate basis."""
        reduced = self.reduce(v).bits
        index = self._free_index
        bits = 0
        for b in bit_indices(reduced):
            bits |= 1 << index[b]
        return Gf2Vector(self.dim, bits)

    def lift(self, w: Gf2Vector) -> Gf2Vector:
        """The canonical ambient representative of quotient coordinates w."""
        if w.length != self.dim:
            raise ValueError("dimension mismatch")
        bits = 0
        for k in bit_indices(w.bits):
            bits |= 1 << self.free_coords[k]
        return Gf2Vector(self.ambient_dim, bits)


def quotient_structure(ambient_dim: int, subspace: Iterable[Gf2Vector]) -> QuotientBasis:
    """Row-reduce ``subspace`` and package the quotient of the ambient space."""
    masks = []
    for v in subspace:
        if v.length != ambient_dim:
            raise ValueError("subspace vector of wrong length")
        masks.append(v.bits)
    reduced = _rref(masks)
    pivots = tuple(sorted(reduced))
    pivot_set = set(pivots)
    free = tuple(c for c in range(ambient_dim) if c not in pivot_set)
    return QuotientBasis(ambient_dim, tuple(reduced[p] for p in pivots), pivots, free)


def induced_map_on_quotient(m: Gf2Matrix, q: QuotientBasis) -> Gf2Matrix:
    """The matrix induced by ``m`` on quotient coordinates.

    Raises SubspaceNotPreservedError unless m maps the subspace of ``q``
    into itself. The result commutes with reduction: for every ambient v,
    reduce(m v) represents induced(reduce(v)).
    """
    if m.shape != (q.ambient_dim, q.ambient_dim):
        raise ValueError("map must be an endomorphism of the ambient space")
    tm = m.transpose()

    def image_bits(bits: int) -> int:
        acc = 0
        for j in bit_indices(bits):
            acc ^= tm.rows[j]
        return acc

    for r in q.rows:
        if q.reduce_bits(image_bits(r)):
            raise SubspaceNotPreservedError(
                "map does not stabilise the subspace; no induced quotient map"
            )

    out = [0] * q.dim
    index = q._free_index
    for col, f in enumerate(q.free_coords):
        img = q.reduce_bits(image_bits(1 << f))
        colbit = 1 << col
        for b in bit_indices(img):
            out[index[b]] |= colbit
    return Gf2Matrix(q.dim, q.dim, tuple(out))
