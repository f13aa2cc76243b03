"""Krull-Schmidt decomposition over the group ring of the swap, and the
closed-form multiplicity counts it must reproduce.

Over F2 the group ring of an order-2 group is F2[x]/(x^2) with x = 1 + sigma,
so the only indecomposables are the trivial module and the regular module,
and the regular multiplicity of any involution equals rank(sigma + 1).

The closed forms come in two flavours: the corrected count, which the brute
force must match exactly, and the count as published, which in the odd case
between degrees d and 2d carries a spurious -C(d, k)/2 and can fail to be an
integer. Reports always carry both; brute force is the arbiter.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .gf2 import Gf2Matrix, rank
from .quotient import conf_module
from .torus import Decomposition, Sigma2Module, binom, torus_closed_form


def decompose(m: Sigma2Module) -> Decomposition:
    """Multiplicities of trivial and regular summands of an involution module."""
    n = m.dim
    identity = Gf2Matrix.identity(n)
    if m.sigma @ m.sigma != identity:
        raise ValueError("sigma is not an involution")
    regular = rank(m.sigma + identity)
    return Decomposition(n, n - 2 * regular, regular)


def conf_closed_form(d: int, i: int) -> Decomposition:
    """Corrected closed-form decomposition of conf_module(d, i).

    Below degree d this is the torus-square count. For d <= i < 2d each of
    the C(d, i-d) relations converts one regular summand into a trivial one;
    in even degree 2k the C(d, k) diagonal classes stay trivial as well.
    """
    if i < 0 or i >= 2 * d:
        return Decomposition(0, 0, 0)
    if i < d:
        return torus_closed_form(d, i)
    total = binom(2 * d, i)
    moved = binom(d, i - d)
    if i % 2 == 0:
        diag = binom(d, i // 2)
        trivial = diag + moved
        regular = (total - diag) // 2 - moved
    else:
        trivial = moved
        regular = total // 2 - moved
    return Decomposition(trivial + 2 * regular, trivial, regular)


def published_closed_form(d: int, i: int) -> tuple[Fraction, Fraction]:
    """The multiplicity pair exactly as published, evaluated as rationals.

    The published odd case for d <= i < 2d subtracts C(d, k)/2 with
    k = (i-1)/2; that term makes the count non-integral whenever C(d, k)
    is odd (already at d = 3, i = 3).
    """
    if i < 0 or i >= 2 * d:
        return Fraction(0), Fraction(0)
    total = Fraction(sum(binom(d, j) * binom(d, i - j) for j in range(i + 1)))
    k = i // 2
    if i < d:
        if i % 2 == 0:
            return Fraction(binom(d, k)), (total - binom(d, k)) / 2
        return Fraction(0), total / 2
    moved = binom(d, i - d)
    if i % 2 == 0:
        return Fraction(binom(d, k) + moved), (total - binom(d, k)) / 2 - moved
    return Fraction(moved), (total - binom(d, k)) / 2 - moved


@dataclass(frozen=True)
class ClosedFormReport:
    """Brute force next to both closed-form readings for one (d, i)."""

    d: int
    i: int
    brute: Decomposition
    corrected: Decomposition
    published_trivial: Fraction
    published_regular: Fraction
    published_integral: bool

    @property
    def published_matches(self) -> bool:
        return (
            self.published_integral
            and self.published_trivial == self.corrected.trivial
            and self.published_regular == self.corrected.regular
        )


def closed_form_report(d: int, i: int) -> ClosedFormReport:
    """Evaluate brute force, the corrected count and the published count."""
    brute = decompose(conf_module(d, i))
    corrected = conf_closed_form(d, i)
    pt, pr = published_closed_form(d, i)
    return ClosedFormReport(
        d, i, brute, corrected, pt, pr,
        published_integral=(pt.denominator == 1 and pr.denominator == 1),
    )


def reduced_table(d: int) -> tuple[Decomposition, ...]:
    """Decompositions of degrees 0 .. 2d-1 with degree 0 reduced by one
    trivial summand (reduced cohomology)."""
    if d < 1:
        raise ValueError("d must be at least 1")
    rows = [decompose(conf_module(d, i)) for i in range(2 * d)]
    head = rows[0]
    rows[0] = Decomposition(head.dim - 1, head.trivial - 1, head.regular)
    return tuple(rows)
