"""Prime factorization of polynomials (and nets) by support splitting.

A nonzero polynomial with positive constant term splits as P1 * P2 with
disjoint binary supports exactly when, for some bipartition of its
support, the grid of coefficients indexed by the two projections of
each monomial is complete and rank one over the positive integers.
Constant factors escape that picture (their support is empty), so
integer prime content is pulled out separately.  Recursion over the two
parts yields prime factors; at the net level this realizes the
decomposition of a net into prime components of the synchronization
product.
"""

from dataclasses import dataclass
from itertools import combinations
from math import gcd, isqrt
from typing import Optional

from .codec import decode, encode
from .errors import PreconditionError
from .net import PetriNet
from .polynomial import ONE, Polynomial, nat_of_bits, tau_poly

__all__ = [
    "CoeffGrid",
    "project_grid",
    "rank1_nat_factor",
    "split_once",
    "decompose",
    "decompose_net",
    "is_prime_net",
]


@dataclass(frozen=True)
class CoeffGrid:
    """Coefficients of a polynomial arranged by a support bipartition.

    ``rows`` and ``cols`` hold the distinct projections of the monomials
    onto the two sides, as (x-exponent, y-exponent) pairs in ascending
    graded order; ``cells`` maps (row index, col index) to the
    coefficient; ``complete`` says whether every cell is filled.
    """

    rows: tuple
    cols: tuple
    cells: dict
    complete: bool


def _graded(monomial):
    i, j = monomial
    return i + j, i


def project_grid(poly: Polynomial, s1, s2) -> CoeffGrid:
    """Arrange the coefficients of ``poly`` by the bipartition (s1, s2).

    Each monomial's exponents are masked down to the bit positions of
    each side; because the sides partition the support, the pair of
    projections determines the monomial, so no two monomials share a
    cell.
    """
    s1, s2 = frozenset(s1), frozenset(s2)
    if s1 & s2 or (s1 | s2) != tau_poly(poly):
        raise PreconditionError("the two sides must partition the polynomial's support")
    m1, m2 = nat_of_bits(s1), nat_of_bits(s2)
    projected = {
        ((i & m1, j & m1), (i & m2, j & m2)): coeff
        for (i, j), coeff in poly.terms.items()
    }
    rows = tuple(sorted({left for left, _ in projected}, key=_graded))
    cols = tuple(sorted({right for _, right in projected}, key=_graded))
    row_index = {m: r for r, m in enumerate(rows)}
    col_index = {m: c for c, m in enumerate(cols)}
    cells = {(row_index[left], col_index[right]): coeff
             for (left, right), coeff in projected.items()}
    return CoeffGrid(rows, cols, cells, len(cells) == len(rows) * len(cols))


def _divisors(n):
    """Divisors of a positive integer, ascending."""
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def _smallest_prime_factor(n):
    for d in range(2, isqrt(n) + 1):
        if n % d == 0:
            return d
    return n


def rank1_nat_factor(grid: CoeffGrid) -> Optional[tuple]:
    """Positive-integer weights (b, c) with cell(r, c) = b[r]*c[c], or None.

    Weights are only determined up to a reciprocal scaling; the pair
    returned fixes c at the anchor column (the (0,0) column when
    present) to the smallest divisor of the anchor cell that works.
    """
    if not grid.complete or not grid.rows or not grid.cols:
        return None
    if any(v < 1 for v in grid.cells.values()):
        return None
    r0 = grid.rows.index((0, 0)) if (0, 0) in grid.rows else 0
    c0 = grid.cols.index((0, 0)) if (0, 0) in grid.cols else 0
    anchor = grid.cells[(r0, c0)]
    column = [grid.cells[(r, c0)] for r in range(len(grid.rows))]
    row = [grid.cells[(r0, c)] for c in range(len(grid.cols))]
    for t in _divisors(anchor):
        if any(v % t for v in column):
            continue
        if any(v * t % anchor for v in row):
            continue
        b = [v // t for v in column]
        c = [v * t // anchor for v in row]
        if all(b[r] * c[col] == coeff for (r, col), coeff in grid.cells.items()):
            return tuple(b), tuple(c)
    return None


def _bipartitions(support):
    """Unordered bipartitions of the support into two nonempty sides.

    Each pair appears once, with the side containing the lowest bit
    first; pairs come out ascending by that side's size, then value.
    """
    bits = sorted(support)
    if len(bits) < 2:
        return
    lowest, rest = bits[0], bits[1:]
    for size in range(len(rest)):
        for extra in combinations(rest, size):
            s1 = frozenset((lowest, *extra))
            yield s1, frozenset(rest) - s1


def split_once(poly: Polynomial) -> Optional[tuple]:
    """One nontrivial factorization step, or None when ``poly`` is prime.

    First pulls out the smallest prime dividing all coefficients; then
    searches the canonical bipartitions of the support for a complete
    rank-one coefficient grid and rebuilds the two factors from its
    weights.  Any returned pair multiplies back exactly, has disjoint
    supports, and has positive constant terms on both sides.
    """
    if not poly or poly.constant_term < 1:
        raise PreconditionError("need a nonzero polynomial with positive constant term")
    content = gcd(*poly.terms.values())
    if content > 1:
        p = _smallest_prime_factor(content)
        quotient = Polynomial({key: a // p for key, a in poly.terms.items()})
        if quotient != ONE:  # dividing a prime constant by itself leaves the unit
            return Polynomial.constant(p), quotient
    for s1, s2 in _bipartitions(tau_poly(poly)):
        grid = project_grid(poly, s1, s2)
        weights = rank1_nat_factor(grid)
        if weights is not None:
            b, c = weights
            return (Polynomial(zip(grid.rows, b)), Polynomial(zip(grid.cols, c)))
    return None


def decompose(poly: Polynomial) -> list[Polynomial]:
    """Prime factors of ``poly``, sorted by the term order.

    The factors multiply back to ``poly`` exactly; each resists
    split_once.  decompose(1) is [1] by convention (the unit has no
    prime factors, but an empty product would be unhelpful output).
    """
    pending, primes = [poly], []
    while pending:
        candidate = pending.pop()
        split = split_once(candidate)
        if split is None:
            primes.append(candidate)
        else:
            pending.extend(split)
    primes.sort(key=Polynomial.sort_key)
    return primes


def decompose_net(net: PetriNet) -> list[PetriNet]:
    """Prime component nets of ``net``: encode, factor, decode each part.

    The product of the results is isomorphic to ``net`` up to isolated
    conditions (which the polynomial never sees).
    """
    labeling = {b: t for t, b in enumerate(sorted(net.conditions))}
    return [decode(factor)[0] for factor in decompose(encode(net, labeling))]


def is_prime_net(net: PetriNet) -> bool:
    """Is the net a prime (undecomposable, non-unit) component?

    Nets without events encode to the unit polynomial and do not count,
    mirroring the convention that 1 is not a prime.
    """
    return bool(net.events) and len(decompose_net(net)) == 1
