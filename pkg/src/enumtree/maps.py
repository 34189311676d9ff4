"""The four bijective matrix-to-pair maps, their inverses, and tree generation.

Each of the four quadratics comes with a closed-form map from a matrix
[[a, b], [c, d]] to a divisor pair:

    x^2 + beta*x + 1  ->  (a^2 + beta*a*b + b^2,  a*c + beta*b*c + b*d)
    x^2 + 2x - 1      ->  (max(a,b)^2 + 2ab - min(a,b)^2,
                           max(ac,bd) + 2bc - min(ac,bd))

The same pair is reached by replaying the matrix's generator word from the
root pair (1, 0) with the s_bar/t_bar moves; both routes are exposed so they
can be checked against each other.

The inverse direction peels a pair back to (1, 0): repeat

    (m, n)  ->  c_bar( s_bar^(-floor(n/m)) (m, n) )

recording the exponents.  Undoing those steps and merging complement pairs
into t_bar moves yields the generator word, hence the matrix and tree index.
The loop additionally checks, at every visited pair, the inequality

    min(m, |f(n)|/m)  <=  n  <  max(m, |f(n)|/m)

which characterizes reachability from the root; on a violation it aborts with
a diagnostic instead of cycling, which makes the routine safe to probe with
polynomials outside the four (see the classification module).
"""

from dataclasses import dataclass
from typing import Iterator

from .monoid import Mat2, matrix_to_word
from .pairs import (
    ENUMERABLE_POLYS,
    DivisorPair,
    EnumerablePoly,
    Poly,
    make_pair,
    poly,
    s_bar,
    t_bar,
)

__all__ = [
    "DEFAULT_NODE_BUDGET",
    "NodeBudgetExceeded",
    "phi_beta",
    "psi_beta",
    "f_hat",
    "f_hat_via_action",
    "relatives",
    "InverseTrace",
    "f_hat_inverse",
    "tree_rows",
]

DEFAULT_NODE_BUDGET = 1 << 21


class NodeBudgetExceeded(RuntimeError):
    """Tree generation was asked for more nodes than the configured budget."""


def phi_beta(beta: int, x: Mat2) -> DivisorPair:
    """Closed-form pair of x under the map attached to x^2 + beta*x + 1."""
    m = x.a * x.a + beta * x.a * x.b + x.b * x.b
    n = x.a * x.c + beta * x.b * x.c + x.b * x.d
    return DivisorPair(m, n, poly(1, beta, 1))


def psi_beta(beta: int, x: Mat2) -> DivisorPair:
    """Closed-form pair of x under the map attached to x^2 + beta*x - 1.

    The max/min choices on both components agree because a >= b iff c >= d
    for every element except the identity; a tie ac == bd forces the identity,
    which the assertion below pins down.
    """
    a, b, c, d = x.a, x.b, x.c, x.d
    ac, bd = a * c, b * d
    assert ac != bd or (a, b, c, d) == (1, 0, 0, 1), f"unexpected tie at {x!r}"
    m = max(a, b) ** 2 + beta * a * b - min(a, b) ** 2
    n = max(ac, bd) + beta * b * c - min(ac, bd)
    return DivisorPair(m, n, poly(-1, beta, 1))


def f_hat(f: EnumerablePoly, x: Mat2) -> DivisorPair:
    """The pair of x in the tree of f, by the closed form."""
    if f.monic_negative_constant:
        return psi_beta(f.beta, x)
    return phi_beta(f.beta, x)


def f_hat_via_action(f: EnumerablePoly, x: Mat2) -> DivisorPair:
    """The pair of x computed by replaying its word from the root pair.

    Must agree with f_hat everywhere; kept as an independent route.
    """
    p = make_pair(1, 0, f)
    for letter in reversed(matrix_to_word(x)):
        p = s_bar(p) if letter == "S" else t_bar(p)
    return p


def relatives(x: Mat2) -> dict[EnumerablePoly, DivisorPair]:
    """The pairs of the same matrix in all four trees."""
    return {f: f_hat(f, x) for f in ENUMERABLE_POLYS}


@dataclass(frozen=True, slots=True)
class InverseTrace:
    """Full record of one inverse run.

    exponents are the recorded floor(n/m) steps in reduction order; pairs is
    every distinct pair visited, from the input down to (1, 0); word is the
    generator word of the preimage matrix and index its tree position.
    """

    exponents: tuple[int, ...]
    pairs: tuple[DivisorPair, ...]
    word: str
    index: int


def _reduce(f: Poly, m: int, n: int) -> tuple[list[int], list[tuple[int, int]]]:
    """Peel (m, n) down to (1, 0), returning exponents and visited pairs."""
    exponents: list[int] = []
    chain = [(m, n)]
    while (m, n) != (1, 0):
        cof = abs(f(n)) // m
        lo, hi = min(m, cof), max(m, cof)
        if not (lo <= n < hi):
            side = "min" if lo > n else "max"
            raise ArithmeticError(
                f"pair ({m}, {n}) of f = {f} violates the reachability bound"
                f" ({side} side); it cannot be reduced to the root"
            )
        q = n // m
        exponents.append(q)
        if q:
            n -= q * m
            chain.append((m, n))
        m = abs(f(n)) // m
        if (m, n) != chain[-1]:
            chain.append((m, n))
    return exponents, chain


def _word_from_exponents(exponents: list[int]) -> str:
    # Blocks alternate S, T, S, ... reading the reduction exponents in order.
    return "".join(("S" if i % 2 == 0 else "T") * a for i, a in enumerate(exponents))


def _index_from_exponents(exponents: list[int]) -> int:
    # Same value as word_to_index of the word above, in O(#blocks) big-int ops.
    k = 1
    for i in range(len(exponents) - 1, -1, -1):
        a = exponents[i]
        if i % 2 == 0:
            k <<= a
        else:
            k = ((k + 1) << a) - 1
    return k


def f_hat_inverse(f: EnumerablePoly, p: DivisorPair) -> InverseTrace:
    """Invert the tree map at p: word, index, and the full reduction chain.

    p must belong to the tree of f; pairs built for a different polynomial are
    rejected.
    """
    if p.poly != f.poly:
        raise ValueError(f"pair {p} belongs to {p.poly}, not to {f.poly}")
    exponents, chain = _reduce(f.poly, p.m, p.n)
    return InverseTrace(
        exponents=tuple(exponents),
        pairs=tuple(DivisorPair(m, n, f.poly) for m, n in chain),
        word=_word_from_exponents(exponents),
        index=_index_from_exponents(exponents),
    )


def tree_rows(
    f: EnumerablePoly, depth: int, max_nodes: int = DEFAULT_NODE_BUDGET
) -> Iterator[list[DivisorPair]]:
    """Rows 0..depth of the divisor-pair tree of f, breadth first.

    Row k holds 2**k pairs; children of each node are s_bar (left) then t_bar
    (right).  Rows are produced lazily but the total node count is checked
    against max_nodes up front.
    """
    if depth < 0:
        raise ValueError(f"depth must be >= 0, got {depth}")
    total = (1 << (depth + 1)) - 1
    if total > max_nodes:
        raise NodeBudgetExceeded(
            f"depth {depth} needs {total} nodes, budget is {max_nodes}"
        )

    def rows() -> Iterator[list[DivisorPair]]:
        row = [make_pair(1, 0, f)]
        yield row
        for _ in range(depth):
            row = [child for p in row for child in (s_bar(p), t_bar(p))]
            yield row

    return rows()
