"""Command-line front end.

Subcommands:

    tree      emit a divisor-pair tree breadth first (JSON lines or text)
    seq       emit a second-component sequence (OEIS b-file or JSON lines)
    inverse   invert a pair: generator word, matrix, index, reduction chain
    fiber     tree indices carrying a given n, divisor count, prime verdict
    verify    run a named self-check suite and report a machine-readable summary
    scan      scan an arbitrary polynomial for reachability violations
    stats     row sums / ratio sums of a tree
    primerep  alternating prime-product representation of p at a root n

Exit codes: 0 success, 1 verification failure, 2 budget exceeded or usage
error, 3 bad pair, 4 polynomial vanishes on the scanned range.

All output is deterministic; integers above 2^53 - 1 are serialized as
decimal strings in JSON so double-parsing consumers keep exact values.
The node budget defaults to 2^21 and can be set with --max-nodes or the
ENUMTREE_MAX_NODES environment variable (the flag wins).
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from . import analytics, classify
from .arith import divisors, is_prime
from .maps import (
    DEFAULT_NODE_BUDGET,
    NodeBudgetExceeded,
    f_hat_inverse,
    tree_rows,
)
from .monoid import index_to_word, word_to_matrix
from .pairs import ENUMERABLE_POLYS, PHI0, POLY_BY_NAME, make_pair, poly
from .sseq import kernel_for

__all__ = ["main", "console_main"]

_POLY_NAMES = tuple(POLY_BY_NAME)
_SAFE_INT = (1 << 53) - 1

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BUDGET = 2
EXIT_BAD_PAIR = 3
EXIT_VANISHING = 4


def _json_int(v: int):
    return v if -_SAFE_INT <= v <= _SAFE_INT else str(v)


def _record_line(index: int, m: int, n: int, word: str, row: int) -> str:
    rec = {
        "index": _json_int(index),
        "m": _json_int(m),
        "n": _json_int(n),
        "word": word,
        "row": row,
    }
    return json.dumps(rec, separators=(",", ":"))


def _resolve_budget(args) -> int:
    if getattr(args, "max_nodes", None) is not None:
        return args.max_nodes
    env = os.environ.get("ENUMTREE_MAX_NODES")
    if env is not None:
        try:
            value = int(env)
        except ValueError:
            value = 0
        if value < 1:
            raise ValueError(f"ENUMTREE_MAX_NODES must be a positive integer, got {env!r}")
        return value
    return DEFAULT_NODE_BUDGET


# ----------------------------------------------------------------------
# commands
# ----------------------------------------------------------------------


def _cmd_tree(args) -> int:
    f = POLY_BY_NAME[args.poly]
    try:
        rows = tree_rows(f, args.depth, _resolve_budget(args))
    except NodeBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    index = 1
    for row_idx, row in enumerate(rows):
        if args.format == "text":
            print("  " * row_idx + "  ".join(str(p) for p in row))
            index += len(row)
        else:
            # Words are recovered from the heap index: cheap and avoids
            # threading them through generation.
            for p in row:
                print(_record_line(index, p.m, p.n, index_to_word(index), row_idx))
                index += 1
    return EXIT_OK


def _cmd_seq(args) -> int:
    f = POLY_BY_NAME[args.poly]
    kernel = kernel_for(f)
    if args.format == "bfile":
        values = kernel.s_prefix(args.count)
        for k, v in enumerate(values, start=1):
            print(f"{k} {v}")
    else:
        values = kernel.s_prefix(2 * args.count + 1)
        for k in range(1, args.count + 1):
            m = values[2 * k - 1] - values[k - 1]
            print(
                _record_line(k, m, values[k - 1], index_to_word(k), k.bit_length() - 1)
            )
    return EXIT_OK


def _cmd_inverse(args) -> int:
    f = POLY_BY_NAME[args.poly]
    try:
        pair = make_pair(args.m, args.n, f)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_PAIR
    trace = f_hat_inverse(f, pair)
    print(f"pair: {pair}")
    print(f"word: {trace.word or '(empty)'}")
    print(f"matrix: {word_to_matrix(trace.word)}")
    print(f"index: {trace.index}")
    print("chain: " + " ".join(str(p) for p in trace.pairs))
    return EXIT_OK


def _cmd_fiber(args) -> int:
    f = POLY_BY_NAME[args.poly]
    kernel = kernel_for(f)
    indices = sorted(kernel.fiber(args.n))
    value = abs(f.poly(args.n))
    print(f"n: {args.n}")
    print(f"|f(n)|: {value}")
    print(f"tau: {len(indices)}")
    print("indices: " + " ".join(str(i) for i in indices))
    if args.n >= 1:
        verdict = "prime" if kernel.is_f_prime_via_fiber(args.n) else "composite"
        print(f"verdict: {verdict}")
    return EXIT_OK


def _cmd_scan(args) -> int:
    try:
        coeffs, n_max = _parse_scan_rest(args.rest)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    f = poly(*coeffs)
    try:
        certs = classify.scan_violations(f, n_max)
    except classify.PolynomialVanishes as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VANISHING
    if not certs:
        print(f"no violations up to n_max = {n_max} for f = {f}")
    for cert in certs:
        print(f"{cert.side} violation at ({cert.m}, {cert.n}): {cert.detail}  [f = {cert.f}]")
    return EXIT_OK


def _parse_scan_rest(rest: list[str]) -> tuple[list[int], int]:
    # Accepts flags before or after the coefficient list; "--" guards
    # negative coefficients from being read as flags.
    coeffs: list[int] = []
    n_max = 10
    seen_guard = False
    i = 0
    while i < len(rest):
        tok = rest[i]
        if tok == "--" and not seen_guard:
            seen_guard = True
            i += 1
            continue
        if tok == "--nmax":
            if i + 1 >= len(rest):
                raise ValueError("--nmax needs a value")
            n_max = int(rest[i + 1])
            i += 2
            continue
        try:
            coeffs.append(int(tok))
        except ValueError:
            raise ValueError(f"unrecognized scan argument {tok!r}") from None
        i += 1
    if not coeffs:
        raise ValueError("scan needs a coefficient list (constant term first)")
    return coeffs, n_max


def _cmd_stats(args) -> int:
    f = POLY_BY_NAME[args.poly]
    budget = _resolve_budget(args)
    try:
        for k in range(args.kmax + 1):
            st = analytics.row_stats_direct(f, k, budget)
            if args.format == "json":
                rec = {
                    "k": st.k,
                    "m_sum": _json_int(st.m_sum),
                    "n_sum": _json_int(st.n_sum),
                    "ratio_sum": str(st.ratio_sum),
                }
                print(json.dumps(rec, separators=(",", ":")))
            else:
                print(f"k={st.k} M={st.m_sum} N={st.n_sum} R={st.ratio_sum}")
    except NodeBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    return EXIT_OK


def _cmd_primerep(args) -> int:
    f = POLY_BY_NAME[args.poly]
    try:
        rep = analytics.prime_representation(f, args.p, args.n)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_PAIR
    num = [v for v, e in rep.factors() if e > 0]
    den = [v for v, e in rep.factors() if e < 0]
    print(f"p: {rep.p}")
    print("n-values: " + " ".join(str(n) for n in rep.n_values))
    expr = " * ".join(f"|f({n})|^{e:+d}" for n, e in zip(rep.n_values, rep.exponents))
    print(f"form: p = {expr}")
    shown = " * ".join(str(v) for v in num)
    if den:
        shown += " / (" + " * ".join(str(v) for v in den) + ")"
    print(f"value: {rep.p} = {shown}")
    return EXIT_OK


# ----------------------------------------------------------------------
# verify suites
# ----------------------------------------------------------------------


def _tau_trial(v: int) -> int:
    # Independent of the factorization-based divisor count on purpose.
    count = 0
    i = 1
    while i * i <= v:
        if v % i == 0:
            count += 1 if i * i == v else 2
        i += 1
    return count


def _suite_bijectivity(bound: int):
    checked, failures = 0, []
    depth = 12
    for f in ENUMERABLE_POLYS:
        seen = set()
        for row in tree_rows(f, depth):
            for p in row:
                if p.components() in seen:
                    failures.append(f"{f}: duplicate tree pair {p}")
                seen.add(p.components())
                checked += 1
        for n in range(1, bound + 1):
            indices = set()
            for m in divisors(abs(f.poly(n))):
                trace = f_hat_inverse(f, make_pair(m, n, f))
                indices.add(trace.index)
                back = trace.pairs[0]
                if back.components() != (m, n):
                    failures.append(f"{f}: trace of ({m}, {n}) starts at {back}")
                checked += 1
            if len(indices) != _tau_trial(abs(f.poly(n))):
                failures.append(f"{f}: fiber of {n} has colliding indices")
    return checked, failures


def _suite_tau(bound: int):
    checked, failures = 0, []
    for f in ENUMERABLE_POLYS:
        kernel = kernel_for(f)
        for n in range(bound + 1):
            expected = _tau_trial(abs(f.poly(n)))
            got = len(kernel.fiber(n))
            if got != expected:
                failures.append(f"{f}: fiber size {got} != tau {expected} at n = {n}")
            checked += 1
    return checked, failures


def _suite_primality(bound: int):
    checked, failures = 0, []
    for f in ENUMERABLE_POLYS:
        kernel = kernel_for(f)
        for n in range(1, bound + 1):
            via_fiber = kernel.is_f_prime_via_fiber(n)
            direct = is_prime(abs(f.poly(n)))
            if via_fiber != direct:
                failures.append(f"{f}: fiber verdict {via_fiber} != primality at n = {n}")
            checked += 1
    return checked, failures


def _suite_recursions(bound: int):
    checked, failures = 0, []
    depth = bound
    for f in ENUMERABLE_POLYS:
        kernel = kernel_for(f)
        flat = [p for row in tree_rows(f, depth) for p in row]
        prefix = kernel.s_prefix(len(flat))
        for i, p in enumerate(flat):
            if prefix[i] != p.n:
                failures.append(f"{f}: s({i + 1}) = {prefix[i]} != tree value {p.n}")
            if kernel.pair_at(i + 1).components() != p.components():
                failures.append(f"{f}: pair_at({i + 1}) disagrees with tree")
            checked += 1
        wide = kernel.s_prefix(4 * (1 << depth) + 4)
        s = lambda j: wide[j - 1]
        for k in range(kernel.start, (1 << depth) + 1):
            ok = (
                s(4 * k) == 2 * s(2 * k) - s(k)
                and s(4 * k + 1) == 2 * s(2 * k) + s(2 * k + 1) + kernel.const
                and s(4 * k + 2) == 2 * s(2 * k + 1) + s(2 * k) + kernel.const
                and s(4 * k + 3) == 2 * s(2 * k + 1) - s(k)
            )
            if not ok:
                failures.append(f"{f}: recursion branch broken at k = {k}")
            checked += 1
    return checked, failures


def _suite_rowsums(bound: int):
    checked, failures = 0, []
    for k in range(bound + 1):
        direct = analytics.row_stats_direct(PHI0, k)
        rec = analytics.row_stats_recursive(k)
        if (direct.m_sum, direct.n_sum, direct.ratio_sum) != (
            rec.m_sum,
            rec.n_sum,
            rec.ratio_sum,
        ):
            failures.append(f"row {k}: recursion disagrees with direct sums")
        if rec.ratio_sum != analytics.ratio_closed_form(k):
            failures.append(f"row {k}: ratio closed form disagrees")
        checked += 1
    if bound >= 12:
        avg = analytics.ratio_closed_form(12) / (1 << 12)
        if abs(avg - Fraction(3, 2)) > Fraction(1, 1000):
            failures.append("row-average at k = 12 is not within 1e-3 of 3/2")
        checked += 1
    return checked, failures


def _suite_classification(bound: int):
    checked, failures = 0, []
    for f in ENUMERABLE_POLYS:
        certs = classify.scan_violations(f.poly, bound)
        if certs:
            failures.append(f"{f}: unexpected violation {certs[0]}")
        checked += 1
    expected = [
        (poly(1, 5, 1), (5, 3)),
        (poly(-1, 1, 1), (1, 1)),
        (poly(1, 1), (2, 3)),
        (poly(1, 2), (3, 4)),
        (poly(1, 3), (4, 5)),
    ]
    for f, witness in expected:
        certs = classify.scan_violations(f, max(bound, witness[1]))
        hits = {(c.m, c.n) for c in certs}
        if witness not in hits:
            failures.append(f"{f}: expected witness {witness} not flagged")
        checked += 1
    return checked, failures


def _suite_prime_reps(bound: int):
    checked, failures = 0, []
    for p in analytics.primes_with_divisor(PHI0, bound):
        for n in analytics.roots_mod_p(PHI0, p):
            rep = analytics.prime_representation(PHI0, p, n)
            if rep.product() != p:
                failures.append(f"representation of {p} at n = {n} is off")
            checked += 1
    return checked, failures


_SUITES = {
    "bijectivity": (_suite_bijectivity, 200),
    "tau": (_suite_tau, 1000),
    "primality": (_suite_primality, 1000),
    "recursions": (_suite_recursions, 12),
    "rowsums": (_suite_rowsums, 14),
    "classification": (_suite_classification, 200),
    "prime-reps": (_suite_prime_reps, 2000),
}


def _cmd_verify(args) -> int:
    runner, default_bound = _SUITES[args.suite]
    bound = args.bound if args.bound is not None else default_bound
    checked, failures = runner(bound)
    summary = {
        "suite": args.suite,
        "bound": bound,
        "checked": checked,
        "failures": failures,
    }
    print(json.dumps(summary, separators=(",", ":")))
    return EXIT_VERIFY_FAILED if failures else EXIT_OK


# ----------------------------------------------------------------------
# parser
# ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="enumtree",
        description="Divisor-pair trees of four integer quadratics and their sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_tree = sub.add_parser("tree", help="emit a divisor-pair tree breadth first")
    p_tree.add_argument("poly", choices=_POLY_NAMES)
    p_tree.add_argument("--depth", type=int, required=True)
    p_tree.add_argument("--format", choices=("json", "text"), default="json")
    p_tree.add_argument("--max-nodes", type=int, default=None)
    p_tree.set_defaults(func=_cmd_tree)

    p_seq = sub.add_parser("seq", help="emit a second-component sequence")
    p_seq.add_argument("poly", choices=_POLY_NAMES)
    p_seq.add_argument("--count", type=int, required=True)
    p_seq.add_argument("--format", choices=("bfile", "json"), default="bfile")
    p_seq.set_defaults(func=_cmd_seq)

    p_inv = sub.add_parser("inverse", help="invert a divisor pair to word/matrix/index")
    p_inv.add_argument("poly", choices=_POLY_NAMES)
    p_inv.add_argument("m", type=int)
    p_inv.add_argument("n", type=int)
    p_inv.set_defaults(func=_cmd_inverse)

    p_fiber = sub.add_parser("fiber", help="tree indices carrying a given n")
    p_fiber.add_argument("poly", choices=_POLY_NAMES)
    p_fiber.add_argument("n", type=int)
    p_fiber.set_defaults(func=_cmd_fiber)

    p_verify = sub.add_parser("verify", help="run a self-check suite")
    p_verify.add_argument("suite", choices=tuple(_SUITES))
    p_verify.add_argument("--bound", type=int, default=None)
    p_verify.set_defaults(func=_cmd_verify)

    p_scan = sub.add_parser(
        "scan",
        help="scan a polynomial (coefficients, constant term first) for violations",
    )
    p_scan.add_argument("rest", nargs=argparse.REMAINDER)
    p_scan.set_defaults(func=_cmd_scan)

    p_stats = sub.add_parser("stats", help="row sums of a tree")
    p_stats.add_argument("poly", choices=_POLY_NAMES)
    p_stats.add_argument("--kmax", type=int, required=True)
    p_stats.add_argument("--format", choices=("text", "json"), default="text")
    p_stats.add_argument("--max-nodes", type=int, default=None)
    p_stats.set_defaults(func=_cmd_stats)

    p_rep = sub.add_parser("primerep", help="alternating prime-product representation")
    p_rep.add_argument("poly", choices=_POLY_NAMES)
    p_rep.add_argument("p", type=int)
    p_rep.add_argument("n", type=int)
    p_rep.set_defaults(func=_cmd_primerep)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except NodeBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
