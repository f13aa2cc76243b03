"""Cohomology of the two-point configuration space of T^d as a quotient.

The shear (x, y) -> (x, y - x) identifies the configuration space with
T^d x (T^d minus a point), so restriction from the square is onto and its
kernel is generated, in degree i with d <= i <= 2d, by the products of the
degree-(i-d) left-factor monomials with one fixed degree-d relation vector.
Quotienting the tensor basis by that kernel gives the configuration-space
module together with its induced swap involution.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf2 import (
    Gf2Matrix,
    Gf2Vector,
    QuotientBasis,
    induced_map_on_quotient,
    quotient_structure,
)
from .torus import (
    Monomial,
    Sigma2Module,
    TensorClass,
    binom,
    cup,
    kunneth_basis,
    kunneth_index,
    monomials,
    sigma_matrix,
    torus_module,
    total_dim,
    zero_module,
)


@dataclass(frozen=True)
class PhiStar:
    """The pullback of the shear, one matrix per degree of the square."""

    d: int
    matrices: tuple[Gf2Matrix, ...]

    def in_degree(self, i: int) -> Gf2Matrix:
        if not 0 <= i <= 2 * self.d:
            raise ValueError(f"degree {i} outside [0, {2 * self.d}]")
        return self.matrices[i]


def _phi_star_matrix(d: int, i: int) -> Gf2Matrix:
    # Column of (S, T): multiply the degree-1 images. Left factors are fixed,
    # each right factor e_t* maps to e_t* x 1 + 1 x e_t*, so the image is the
    # sum over submasks J of T of (S u (T \ J), J), dropping repeated indices.
    basis = kunneth_basis(d, i)
    index = kunneth_index(d, i)
    rows = [0] * len(basis)
    for j, tc in enumerate(basis):
        smask, tmask = tc.key
        colbit = 1 << j
        sub = tmask
        while True:
            moved = tmask ^ sub
            if not smask & moved:
                rows[index[smask | moved, sub]] ^= colbit
            if sub == 0:
                break
            sub = (sub - 1) & tmask
    return Gf2Matrix(len(basis), len(basis), tuple(rows))


def phi_star_build(d: int) -> PhiStar:
    """All per-degree matrices of the shear pullback on the square."""
    if d < 1:
        raise ValueError("d must be at least 1")
    return PhiStar(d, tuple(_phi_star_matrix(d, i) for i in range(2 * d + 1)))


def _top_terms(d: int) -> tuple[TensorClass, ...]:
    """Expansion of the product over j of (e_j* x 1 + 1 x e_j*): one term
    (complement of J) x J per subset J, 2^d terms in all."""
    full = (1 << d) - 1
    return tuple(
        TensorClass(Monomial(full ^ jmask), Monomial(jmask)) for jmask in range(full + 1)
    )


def top_relation(d: int) -> Gf2Vector:
    """The degree-d relation vector: the shear image of 1 x (top monomial)."""
    if d < 1:
        raise ValueError("d must be at least 1")
    index = kunneth_index(d, d)
    bits = 0
    for term in _top_terms(d):
        bits |= 1 << index[term.key]
    return Gf2Vector(total_dim(d, d), bits)


@dataclass(frozen=True)
class KernelPresentation:
    """Generators of the restriction kernel in one degree, with its span."""

    d: int
    i: int
    generators: tuple[Gf2Vector, ...]
    quotient: QuotientBasis

    @property
    def span_dim(self) -> int:
        return len(self.quotient.pivots)


def kernel_generators(d: int, i: int) -> KernelPresentation:
    """The C(d, i-d) kernel generators in degree i (none below degree d).

    Each generator is the cup product of a left-factor monomial of degree
    i-d with the top relation; terms with a repeated index drop out, leaving
    2^(2d-i) terms per generator.
    """
    ambient = total_dim(d, i)
    gens: list[Gf2Vector] = []
    if d <= i <= 2 * d:
        top = _top_terms(d)
        index = kunneth_index(d, i)
        for m in monomials(d, i - d):
            left = TensorClass(m, Monomial(0))
            bits = 0
            for term in top:
                c = cup(left, term)
                if c is not None:
                    bits ^= 1 << index[c.key]
            gens.append(Gf2Vector(ambient, bits))
    return KernelPresentation(d, i, tuple(gens), quotient_structure(ambient, gens))


@dataclass(frozen=True)
class QuotientPresentation:
    """Ambient tensor basis, kernel subspace and quotient data of a module."""

    ambient_basis: tuple[TensorClass, ...]
    kernel: KernelPresentation
    quotient: QuotientBasis


def conf_dim(d: int, i: int) -> int:
    """dim H^i of the configuration space: C(2d, i) - C(d, i-d), zero from 2d on."""
    if i < 0 or i >= 2 * d:
        return 0
    return binom(2 * d, i) - binom(d, i - d)


def conf_module(d: int, i: int) -> Sigma2Module:
    """H^i of the two-point configuration space of T^d with its swap action.

    Below degree d the restriction is an isomorphism and the torus-square
    module is returned verbatim; from degree d on it is the quotient by the
    kernel generators; from degree 2d on everything dies.
    """
    if d < 0:
        raise ValueError("d must be nonnegative")
    if i < 0 or i >= 2 * d:
        return zero_module()
    if i < d:
        return torus_module(d, i)
    kp = kernel_generators(d, i)
    sigma = induced_map_on_quotient(sigma_matrix(d, i), kp.quotient)
    basis = kunneth_basis(d, i)
    labels = tuple(basis[f] for f in kp.quotient.free_coords)
    return Sigma2Module(
        kp.quotient.dim, labels, sigma,
        presentation=QuotientPresentation(basis, kp, kp.quotient),
    )


def fixed_element_x(d: int, i: int, m: Monomial) -> Gf2Vector:
    """A representative whose coset is swap-fixed yet nonzero.

    Take the kernel generator attached to ``m`` and keep one term from each
    swapped pair: all terms whose left degree exceeds half the free weight,
    plus, when the free weight 2d-i is even, the middle-layer terms whose
    right free part is the smaller mask of its pair.
    """
    if not d <= i < 2 * d:
        raise ValueError("degree must satisfy d <= i < 2d")
    full = (1 << d) - 1
    if m.mask & ~full or m.degree != i - d:
        raise ValueError(f"expected a degree-{i - d} monomial inside 1..{d}")
    free = full ^ m.mask
    n = 2 * d - i
    index = kunneth_index(d, i)
    bits = 0
    sub = free
    while True:
        # Term for right free part A: (m u (free \ A)) x (m u A).
        a = sub
        take = 2 * a.bit_count() < n or (2 * a.bit_count() == n and a < free ^ a)
        if take:
            bits |= 1 << index[m.mask | (free ^ a), m.mask | a]
        if sub == 0:
            break
        sub = (sub - 1) & free
    return Gf2Vector(total_dim(d, i), bits)
