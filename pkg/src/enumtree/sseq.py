"""Second-component sequences of the divisor-pair trees and their recursions.

Reading the second components of a tree breadth first gives an integer
sequence s satisfying, with a per-polynomial additive constant,

    s(4k)     = 2 s(2k)   - s(k)
    s(4k + 1) = 2 s(2k)   + s(2k + 1) + const
    s(4k + 2) = 2 s(2k+1) + s(2k)     + const
    s(4k + 3) = 2 s(2k+1) - s(k)

so s is 2-regular.  The constant equals the linear coefficient of the
polynomial (0, 1, 2 or 3).  Initial values are s(1)=0, s(2)=1, s(3)=1; for
x^2 + 2x - 1 the recursion only starts at k = 2 (f(0) = -1 perturbs the first
net application) so four more seeds s(4)=2, s(5)=3, s(6)=3, s(7)=2 are fixed.

The whole pair tree is recoverable from s alone: the k-th breadth-first pair
is (s(2k) - s(k), s(k)).  For x^2 + 1 there is additionally a 3-vector form:
node k carries v = (s(k), s(2k), s(2k+1)), with children L*v and R*v for the
integer matrices L_MATRIX and R_MATRIX below, and the pair recovered from
v = (a, b, c) as (b - a, a).

Fibers: the set of tree indices whose second component equals n has exactly
tau(|f(n)|) elements, and |f(n)| is prime exactly when that set is the
boundary pair {2^n, 2^(n+1) - 1}.  Fibers are computed by enumerating the
divisors of |f(n)| and inverting each pair, not by scanning the tree.
"""

from dataclasses import dataclass, field
from typing import Iterator

from .arith import divisors
from .maps import DEFAULT_NODE_BUDGET, NodeBudgetExceeded, f_hat_inverse
from .pairs import DivisorPair, EnumerablePoly, make_pair

__all__ = [
    "SSeqKernel",
    "kernel_for",
    "L_MATRIX",
    "R_MATRIX",
    "vector_tree_rows",
    "net_expand",
]

Vec3 = tuple[int, int, int]
Mat3 = tuple[Vec3, Vec3, Vec3]

L_MATRIX: Mat3 = ((0, 1, 0), (-1, 2, 0), (0, 2, 1))
R_MATRIX: Mat3 = ((0, 0, 1), (0, 1, 2), (-1, 0, 2))


@dataclass(eq=False)
class SSeqKernel:
    """Recursion kernel of one tree's second-component sequence.

    Immutable apart from the memo table; memo writes are idempotent (a key is
    always written the same value) so concurrent readers see consistent data.
    """

    poly: EnumerablePoly
    const: int
    start: int  # recursion valid for k >= start; seeds cover 1 .. 4*start - 1
    initial: dict[int, int]
    _memo: dict[int, int] = field(default_factory=dict, repr=False)

    def s_value(self, k: int) -> int:
        """s(k) by memoized descent; only O(log k) ancestors are touched."""
        if k < 1:
            raise ValueError(f"index must be >= 1, got {k}")
        seed = self.initial.get(k)
        if seed is not None:
            return seed
        memo = self._memo
        cached = memo.get(k)
        if cached is not None:
            return cached
        r = k & 3
        if r == 0:
            v = 2 * self.s_value(k >> 1) - self.s_value(k >> 2)
        elif r == 1:
            v = 2 * self.s_value(k >> 1) + self.s_value((k >> 1) + 1) + self.const
        elif r == 2:
            v = 2 * self.s_value(k >> 1) + self.s_value((k >> 1) - 1) + self.const
        else:
            v = 2 * self.s_value(k >> 1) - self.s_value(k >> 2)
        memo[k] = v
        return v

    def s_prefix(self, count: int) -> list[int]:
        """[s(1), ..., s(count)] by a bottom-up fill; matches s_value pointwise."""
        if count < 1:
            raise ValueError(f"count must be >= 1, got {count}")
        vals = [0] * (count + 1)
        const = self.const
        for k in range(1, count + 1):
            seed = self.initial.get(k)
            if seed is not None:
                vals[k] = seed
            else:
                r = k & 3
                if r == 0:
                    vals[k] = 2 * vals[k >> 1] - vals[k >> 2]
                elif r == 1:
                    vals[k] = 2 * vals[k >> 1] + vals[(k >> 1) + 1] + const
                elif r == 2:
                    vals[k] = 2 * vals[k >> 1] + vals[(k >> 1) - 1] + const
                else:
                    vals[k] = 2 * vals[k >> 1] - vals[k >> 2]
        return vals[1:]

    def pair_at(self, k: int) -> DivisorPair:
        """The k-th breadth-first tree pair, (s(2k) - s(k), s(k))."""
        n = self.s_value(k)
        return make_pair(self.s_value(2 * k) - n, n, self.poly)

    def fiber(self, n: int) -> set[int]:
        """Tree indices whose second component is n; size tau(|f(n)|).

        One inverse run per divisor of |f(n)| instead of a tree scan.
        """
        if n < 0:
            raise ValueError(f"n must be >= 0, got {n}")
        value = abs(self.poly.poly(n))
        return {
            f_hat_inverse(self.poly, make_pair(m, n, self.poly)).index
            for m in divisors(value)
        }

    def is_f_prime_via_fiber(self, n: int) -> bool:
        """True iff the fiber of n is exactly the two boundary indices.

        Equivalent to |f(n)| being prime; n must be >= 1 (the root value 1 at
        n = 0 is a unit).
        """
        if n < 1:
            raise ValueError(f"n must be >= 1, got {n}")
        return self.fiber(n) == {1 << n, (1 << (n + 1)) - 1}


_BASE_SEEDS = {1: 0, 2: 1, 3: 1}
_LATE_START_SEEDS = {1: 0, 2: 1, 3: 1, 4: 2, 5: 3, 6: 3, 7: 2}

_KERNELS: dict[str, SSeqKernel] = {}


def kernel_for(f: EnumerablePoly) -> SSeqKernel:
    """The (shared, memo-carrying) kernel of f's sequence."""
    kernel = _KERNELS.get(f.name)
    if kernel is None:
        if f.monic_negative_constant:
            kernel = SSeqKernel(f, f.beta, 2, dict(_LATE_START_SEEDS))
        else:
            kernel = SSeqKernel(f, f.beta, 1, dict(_BASE_SEEDS))
        _KERNELS[f.name] = kernel
    return kernel


def _matvec(m: Mat3, v: Vec3) -> Vec3:
    return (
        m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
        m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
        m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
    )


def vector_tree_rows(
    depth: int, max_nodes: int = DEFAULT_NODE_BUDGET
) -> Iterator[list[Vec3]]:
    """Rows 0..depth of the 3-vector tree for x^2 + 1, breadth first.

    Root (0, 1, 1); left child L*v, right child R*v.  The node at index k is
    (s(k), s(2k), s(2k+1)) and (a, b, c) -> (b - a, a) recovers the pair tree.
    """
    if depth < 0:
        raise ValueError(f"depth must be >= 0, got {depth}")
    total = (1 << (depth + 1)) - 1
    if total > max_nodes:
        raise NodeBudgetExceeded(
            f"depth {depth} needs {total} nodes, budget is {max_nodes}"
        )

    def rows() -> Iterator[list[Vec3]]:
        row: list[Vec3] = [(0, 1, 1)]
        yield row
        for _ in range(depth):
            row = [
                child
                for v in row
                for child in (_matvec(L_MATRIX, v), _matvec(R_MATRIX, v))
            ]
            yield row

    return rows()


def net_expand(a: int, b: int, c: int, const: int = 0) -> tuple[int, int, int, int]:
    """Grandchild second components under a node with value a and children b, c."""
    return (2 * b - a, 2 * b + c + const, 2 * c + b + const, 2 * c - a)
