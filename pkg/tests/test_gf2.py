import pytest
from hypothesis import given
from hypothesis import strategies as st

from torusconf.gf2 import (
    Gf2Matrix,
    Gf2Vector,
    SubspaceNotPreservedError,
    bit_indices,
    induced_map_on_quotient,
    kernel_basis,
    quotient_structure,
    rank,
)


def brute_span(masks, n):
    """Every GF(2) combination of the given row masks, as a set."""
    span = {0}
    for m in masks:
        span |= {s ^ m for s in span}
    return span


def mat(rows, ncols):
    return Gf2Matrix(len(rows), ncols, tuple(rows))


# --- rank ---------------------------------------------------------------

def test_rank_zero_matrix():
    assert rank(Gf2Matrix.zero(3, 3)) == 0


def test_rank_identity():
    assert rank(Gf2Matrix.identity(4)) == 4


def test_rank_dependent_rows_against_enumeration():
    # rows 110, 011, 101 as coordinate sets {0,1}, {1,2}, {0,2}
    rows = [0b011, 0b110, 0b101]
    span = brute_span(rows, 3)
    assert len(span) == 4  # dimension 2: the third row is the sum of the others
    assert rank(mat(rows, 3)) == 2


def test_rank_does_not_mutate():
    m = mat([0b011, 0b110], 3)
    rank(m)
    assert m.rows == (0b011, 0b110)


# --- kernel -------------------------------------------------------------

def test_kernel_of_identity_empty():
    assert kernel_basis(Gf2Matrix.identity(3)) == []


def test_kernel_of_zero_map_is_everything():
    basis = kernel_basis(Gf2Matrix.zero(2, 3))
    assert len(basis) == 3
    assert len(brute_span([v.bits for v in basis], 3)) == 8


def test_kernel_single_row_against_enumeration():
    m = mat([0b111], 3)
    basis = kernel_basis(m)
    assert len(basis) == 2
    for v in basis:
        assert m.mul_vec(v).is_zero
    expected = {v for v in range(8) if (v & 0b111).bit_count() % 2 == 0}
    assert brute_span([v.bits for v in basis], 3) == expected


@st.composite
def matrices(draw, max_dim=6):
    r = draw(st.integers(0, max_dim))
    c = draw(st.integers(1, max_dim))
    rows = draw(st.lists(st.integers(0, (1 << c) - 1), min_size=r, max_size=r))
    return mat(rows, c)


@given(matrices())
def test_rank_nullity(m):
    assert rank(m) + len(kernel_basis(m)) == m.ncols


@given(matrices())
def test_kernel_vectors_are_killed(m):
    for v in kernel_basis(m):
        assert m.mul_vec(v).is_zero


# --- quotients ----------------------------------------------------------

def test_quotient_by_nothing_is_identity():
    q = quotient_structure(3, [])
    assert q.dim == 3
    for bits in range(8):
        assert q.reduce(Gf2Vector(3, bits)).bits == bits


def test_quotient_by_everything_is_zero():
    q = quotient_structure(2, [Gf2Vector(2, 0b01), Gf2Vector(2, 0b10)])
    assert q.dim == 0
    for bits in range(4):
        assert q.reduce(Gf2Vector(2, bits)).is_zero


def test_quotient_coset_arithmetic_exhaustive():
    q = quotient_structure(3, [Gf2Vector(3, 0b111)])
    assert q.dim == 2
    r100 = q.reduce(Gf2Vector(3, 0b001))
    r011 = q.reduce(Gf2Vector(3, 0b110))
    assert (r100 ^ r011).bits == q.reduce(Gf2Vector(3, 0b111)).bits == 0
    # reduce(v) == 0 exactly on the subspace, over all 2^3 vectors
    for bits in range(8):
        in_span = bits in (0, 0b111)
        assert q.reduce(Gf2Vector(3, bits)).is_zero == in_span


@st.composite
def subspaces(draw, max_dim=7):
    n = draw(st.integers(1, max_dim))
    k = draw(st.integers(0, n))
    rows = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=k, max_size=k))
    return n, [Gf2Vector(n, r) for r in rows]


@given(subspaces(), st.data())
def test_reduce_idempotent_and_linear(sub, data):
    n, rows = sub
    q = quotient_structure(n, rows)
    u = Gf2Vector(n, data.draw(st.integers(0, (1 << n) - 1)))
    v = Gf2Vector(n, data.draw(st.integers(0, (1 << n) - 1)))
    assert q.reduce(q.reduce(u)) == q.reduce(u)
    assert q.reduce(u ^ v) == q.reduce(u) ^ q.reduce(v)


@given(subspaces())
def test_quotient_dim_plus_span_dim(sub):
    n, rows = sub
    q = quotient_structure(n, rows)
    assert q.dim + len(q.pivots) == n
    assert len(brute_span([r.bits for r in rows], n)) == 1 << len(q.pivots)


def test_lift_then_reduce_round_trip():
    q = quotient_structure(3, [Gf2Vector(3, 0b111)])
    for bits in range(1 << q.dim):
        w = Gf2Vector(q.dim, bits)
        assert q.to_quotient(q.lift(w)) == w


# --- induced maps -------------------------------------------------------

def test_induced_identity_is_identity():
    q = quotient_structure(3, [Gf2Vector(3, 0b111)])
    ind = induced_map_on_quotient(Gf2Matrix.identity(3), q)
    assert ind == Gf2Matrix.identity(2)


def test_induced_on_zero_quotient():
    q = quotient_structure(2, [Gf2Vector(2, 0b01), Gf2Vector(2, 0b10)])
    ind = induced_map_on_quotient(Gf2Matrix.identity(2), q)
    assert ind.shape == (0, 0)


def test_induced_swap_mod_diagonal():
    # basis {ab, ba}, swap, modulo <ab + ba>: the induced map is 1x1 identity
    swap = mat([0b10, 0b01], 2)
    q = quotient_structure(2, [Gf2Vector(2, 0b11)])
    ind = induced_map_on_quotient(swap, q)
    assert ind == Gf2Matrix.identity(1)


def test_unstable_subspace_raises():
    # shift e0 -> e1 -> 0 does not stabilise <e0>
    m = mat([0, 0b01], 2)
    q = quotient_structure(2, [Gf2Vector(2, 0b01)])
    with pytest.raises(SubspaceNotPreservedError):
        induced_map_on_quotient(m, q)


@st.composite
def preserving_setups(draw, max_dim=6):
    """A quotient plus a random endomorphism mapping its subspace into itself."""
    n, rows = draw(subspaces(max_dim=max_dim))
    q = quotient_structure(n, rows)
    kernel_rows = list(q.rows)
    cols = [0] * n
    for f in q.free_coords:
        cols[f] = draw(st.integers(0, (1 << n) - 1))
    for p, row in zip(q.pivots, q.rows):
        img = 0
        for kr in kernel_rows:
            if draw(st.booleans()):
                img ^= kr
        # row = e_p + (free part), so the image of e_p balances the free images
        for b in bit_indices(row ^ (1 << p)):
            img ^= cols[b]
        cols[p] = img
    m = Gf2Matrix(n, n, tuple(cols)).transpose()
    return q, m, cols


@given(preserving_setups())
def test_induced_commutes_with_reduction(setup):
    q, m, cols = setup
    ind = induced_map_on_quotient(m, q)
    for j in range(q.ambient_dim):
        image = Gf2Vector(q.ambient_dim, cols[j])
        lhs = q.to_quotient(image)
        rhs = ind.mul_vec(q.to_quotient(Gf2Vector.from_support(q.ambient_dim, [j])))
        assert lhs == rhs


# --- value types --------------------------------------------------------

def test_vector_validation():
    with pytest.raises(ValueError):
        Gf2Vector(2, 0b100)
    with pytest.raises(ValueError):
        Gf2Vector(-1, 0)


def test_vector_length_mismatch():
    with pytest.raises(ValueError):
        Gf2Vector(2, 1) ^ Gf2Vector(3, 1)


def test_matrix_validation():
    with pytest.raises(ValueError):
        Gf2Matrix(2, 2, (0b100, 0))
    with pytest.raises(ValueError):
        Gf2Matrix(1, 2, (0, 0))


def test_matrix_transpose_and_column():
    m = mat([0b01, 0b11], 2)
    t = m.transpose()
    assert t.rows == (0b11, 0b10)
    assert m.column(0).bits == 0b11
    assert m.column(1).bits == 0b10


@given(matrices(max_dim=5))
def test_transpose_involutive(m):
    assert m.transpose().transpose() == m
