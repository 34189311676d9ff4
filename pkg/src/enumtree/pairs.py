"""Integer polynomials, divisor pairs, and the pair moves that grow their trees.

For a polynomial f the divisor-pair set consists of all (m, n) with n >= 0
and m >= 1 dividing |f(n)|.  Three moves act on it:

    s_bar(m, n)  = (m, n + m)                 first component preserved
    c_bar(m, n)  = (|f(n)| / m, n)            swap m with its cofactor
    t_bar        = c_bar . s_bar . c_bar

Exactly four quadratics (up to sign) admit a bijective enumeration of their
divisor pairs by the free S/T matrix monoid under these moves:

    x^2 + 1,   x^2 + x + 1,   x^2 + 2x - 1,   x^2 + 3x + 1

exposed below as PHI0, PHI1, PSI2 and PHI3.

Divisibility is always tested against |f(n)|, so a polynomial and its
negation define the same pair set and the same moves.
"""

from dataclasses import dataclass
from typing import Union

__all__ = [
    "Poly",
    "poly",
    "poly_eval",
    "PolyLike",
    "as_poly",
    "EnumerablePoly",
    "PHI0",
    "PHI1",
    "PSI2",
    "PHI3",
    "ENUMERABLE_POLYS",
    "POLY_BY_NAME",
    "DivisorPair",
    "make_pair",
    "pair_in_df",
    "s_bar",
    "c_bar",
    "t_bar",
    "s_bar_inv",
]


@dataclass(frozen=True, slots=True)
class Poly:
    """Integer polynomial by coefficient tuple, constant term first.

    Canonical form: no trailing zero coefficients (the zero polynomial is the
    empty tuple).  Use poly(...) to build one from raw coefficients.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("trailing zero coefficient; use poly() to normalize")

    def __call__(self, n: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * n + c
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if terms else "")
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                x = "x" if i == 1 else f"x^{i}"
                body = x if mag == 1 else f"{mag}{x}"
            terms.append(sign + body)
        return "".join(terms)


def poly(*coeffs: int) -> Poly:
    """Build a Poly from coefficients, constant term first, trimming zeros."""
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return Poly(tuple(cs))


@dataclass(frozen=True, slots=True)
class EnumerablePoly:
    """One of the four quadratics whose divisor pairs the S/T tree enumerates.

    beta is the linear coefficient; it is also the additive constant in the
    second-component recursions of the tree.
    """

    name: str
    beta: int
    poly: Poly

    @property
    def monic_negative_constant(self) -> bool:
        """True for the x^2 + 2x - 1 family member (constant term -1)."""
        return self.poly.coeffs[0] == -1

    def __str__(self) -> str:
        return self.name


PHI0 = EnumerablePoly("phi0", 0, poly(1, 0, 1))
PHI1 = EnumerablePoly("phi1", 1, poly(1, 1, 1))
PSI2 = EnumerablePoly("psi2", 2, poly(-1, 2, 1))
PHI3 = EnumerablePoly("phi3", 3, poly(1, 3, 1))

ENUMERABLE_POLYS = (PHI0, PHI1, PSI2, PHI3)
POLY_BY_NAME = {f.name: f for f in ENUMERABLE_POLYS}

PolyLike = Union[Poly, EnumerablePoly]


def as_poly(f: PolyLike) -> Poly:
    return f.poly if isinstance(f, EnumerablePoly) else f


def poly_eval(f: PolyLike, n: int) -> int:
    """Exact value f(n)."""
    return as_poly(f)(n)


def pair_in_df(f: PolyLike, m: int, n: int) -> bool:
    """True iff m >= 1, n >= 0 and m divides |f(n)|."""
    return m >= 1 and n >= 0 and abs(as_poly(f)(n)) % m == 0


@dataclass(frozen=True, slots=True)
class DivisorPair:
    """A pair (m, n) with m >= 1 dividing |f(n)|, bound to its polynomial f.

    Carrying f on the pair keeps the complement move self-contained and stops
    pairs from different trees being mixed by accident.
    """

    m: int
    n: int
    poly: Poly

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"first component must be >= 1, got {self.m}")
        if self.n < 0:
            raise ValueError(f"second component must be >= 0, got {self.n}")
        if abs(self.poly(self.n)) % self.m != 0:
            raise ValueError(
                f"{self.m} does not divide |f({self.n})| = {abs(self.poly(self.n))}"
                f" for f = {self.poly}"
            )

    def components(self) -> tuple[int, int]:
        return (self.m, self.n)

    def __str__(self) -> str:
        return f"({self.m}, {self.n})"


def make_pair(m: int, n: int, f: PolyLike) -> DivisorPair:
    return DivisorPair(m, n, as_poly(f))


def s_bar(p: DivisorPair) -> DivisorPair:
    """Left-child move (m, n) -> (m, n + m)."""
    return DivisorPair(p.m, p.n + p.m, p.poly)


def c_bar(p: DivisorPair) -> DivisorPair:
    """Complement move (m, n) -> (|f(n)| / m, n); an involution."""
    value = abs(p.poly(p.n))
    return DivisorPair(value // p.m, p.n, p.poly)


def t_bar(p: DivisorPair) -> DivisorPair:
    """Right-child move; the complement-conjugate of s_bar."""
    return c_bar(s_bar(c_bar(p)))


def s_bar_inv(p: DivisorPair) -> DivisorPair:
    """Inverse of s_bar; requires n >= m to stay in the nonnegative quadrant."""
    if p.n < p.m:
        raise ValueError(f"cannot invert the left-child move at {p}: n < m")
    return DivisorPair(p.m, p.n - p.m, p.poly)
