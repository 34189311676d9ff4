"""Row statistics of the pair trees and alternating prime-product identities.

Row sums for the x^2 + 1 tree satisfy second-order linear recursions:

    M_k = 5 M_{k-1} - 2 M_{k-2}     M_0 = 1, M_1 = 3   (first components)
    N_k = 5 N_{k-1} - 2 N_{k-2}     N_0 = 0, N_1 = 2   (second components)
    R_k = R_{k-1} + 3 * 2^(k-2)     R_0 = 0            (ratio sums n/m)

with the exact closed form R_k = (3/2)(2^k - 1), so the row average R_k / 2^k
tends to 3/2.  Ratio sums are kept as exact rationals throughout; the other
trees get direct summation only, since no recursions are on record for them.

Every prime p dividing some |f(n)| (f one of the four quadratics) is an
alternating product of polynomial values at the second components of the
inverse-reduction chain of (p, n):

    p = |f(n_k)| / |f(n_{k-1})| * |f(n_{k-2})| / ...      n_1 < ... < n_k < p

equal-valued adjacent factors are deliberately left uncancelled.
"""

from dataclasses import dataclass
from fractions import Fraction

from .arith import is_prime, primes_up_to, sqrt_mod
from .maps import DEFAULT_NODE_BUDGET, f_hat_inverse, tree_rows
from .pairs import EnumerablePoly, make_pair

__all__ = [
    "RowStats",
    "row_stats_direct",
    "row_stats_recursive",
    "ratio_closed_form",
    "PrimeRepresentation",
    "prime_representation",
    "roots_mod_p",
    "primes_with_divisor",
]


@dataclass(frozen=True, slots=True)
class RowStats:
    """Exact sums over one tree row: first components, second components, n/m."""

    k: int
    m_sum: int
    n_sum: int
    ratio_sum: Fraction


def row_stats_direct(
    f: EnumerablePoly, k: int, max_nodes: int = DEFAULT_NODE_BUDGET
) -> RowStats:
    """Sums over row k of the tree of f, by direct summation."""
    row = None
    for row in tree_rows(f, k, max_nodes):
        pass
    assert row is not None
    return RowStats(
        k=k,
        m_sum=sum(p.m for p in row),
        n_sum=sum(p.n for p in row),
        ratio_sum=sum((Fraction(p.n, p.m) for p in row), Fraction(0)),
    )


def row_stats_recursive(k: int) -> RowStats:
    """Row sums for the x^2 + 1 tree via the linear recursions (no tree walk).

    The ratio increment 3 * 2^(k-2) is fractional at k = 1; carried exactly as
    Fraction(3 * 2^k, 4), which reproduces the closed form at every k.
    """
    if k < 0:
        raise ValueError(f"row index must be >= 0, got {k}")
    m_prev, m_cur = 1, 3
    n_prev, n_cur = 0, 2
    r = Fraction(0)
    for j in range(1, k + 1):
        r += Fraction(3 * (1 << j), 4)
        if j >= 2:
            m_prev, m_cur = m_cur, 5 * m_cur - 2 * m_prev
            n_prev, n_cur = n_cur, 5 * n_cur - 2 * n_prev
    if k == 0:
        return RowStats(0, 1, 0, Fraction(0))
    return RowStats(k, m_cur, n_cur, r)


def ratio_closed_form(k: int) -> Fraction:
    """(3/2)(2^k - 1), the exact ratio sum of row k of the x^2 + 1 tree."""
    if k < 0:
        raise ValueError(f"row index must be >= 0, got {k}")
    return Fraction(3, 2) * ((1 << k) - 1)


@dataclass(frozen=True, slots=True)
class PrimeRepresentation:
    """p as an alternating product of |f(n)| values, largest n first.

    exponents[i] is the +/-1 power of |f(n_values[i])|; the largest n carries
    +1 and signs alternate downwards.  All n_values are strictly increasing
    and below p.
    """

    p: int
    f: EnumerablePoly
    n_values: tuple[int, ...]
    exponents: tuple[int, ...]

    def factors(self) -> list[tuple[int, int]]:
        """(|f(n)|, exponent) pairs aligned with n_values."""
        return [
            (abs(self.f.poly(n)), e) for n, e in zip(self.n_values, self.exponents)
        ]

    def product(self) -> Fraction:
        out = Fraction(1)
        for value, e in self.factors():
            out *= Fraction(value) ** e
        return out


def prime_representation(f: EnumerablePoly, p: int, n: int) -> PrimeRepresentation:
    """The alternating-product form of p attached to the pair (p, n).

    Requires p prime, 0 <= n < p and p | |f(n)|.  Replays the inverse
    reduction of (p, n) forward from the root; the pair after each complement
    contributes one n value, and n < p forces the final step to be a
    complement, so the product telescopes to p exactly.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not 0 <= n < p:
        raise ValueError(f"need 0 <= n < p, got n = {n}, p = {p}")
    if abs(f.poly(n)) % p != 0:
        raise ValueError(f"{p} does not divide |f({n})| = {abs(f.poly(n))}")
    exponents = f_hat_inverse(f, make_pair(p, n, f)).exponents
    assert exponents and exponents[0] == 0  # guaranteed by n < p
    m, cur = 1, 0
    ns: list[int] = []
    for alpha in exponents[:0:-1]:
        cur += alpha * m
        value = abs(f.poly(cur))
        assert value % m == 0
        m = value // m
        ns.append(cur)
    assert (m, cur) == (p, n)
    signs = tuple((-1) ** (len(ns) - 1 - i) for i in range(len(ns)))
    rep = PrimeRepresentation(p=p, f=f, n_values=tuple(ns), exponents=signs)
    assert rep.product() == p
    return rep


def roots_mod_p(f: EnumerablePoly, p: int) -> list[int]:
    """All n in [0, p) with f(n) == 0 mod p, via a modular square root.

    f is monic quadratic, so completing the square reduces the congruence to
    one Tonelli-Shanks call on the discriminant.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    c0, beta, _ = f.poly.coeffs
    if p == 2:
        return [n for n in (0, 1) if (n * n + beta * n + c0) % 2 == 0]
    disc = (beta * beta - 4 * c0) % p
    r = sqrt_mod(disc, p)
    if r is None:
        return []
    inv2 = pow(2, -1, p)
    return sorted({(-beta + r) * inv2 % p, (-beta - r) * inv2 % p})


def primes_with_divisor(f: EnumerablePoly, p_max: int) -> list[int]:
    """Primes p <= p_max dividing some |f(n)|, i.e. with a root mod p."""
    return [p for p in primes_up_to(p_max) if roots_mod_p(f, p)]
