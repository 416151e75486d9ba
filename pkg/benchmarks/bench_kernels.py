#!/usr/bin/env python3
"""Times the compiled kernels against the pure-Python lane on the hot inputs.

Run from the repository root:

    python3 benchmarks/bench_kernels.py

The three kernels dominate the exhaustive check suites: the production-game
rank search (dim), the bad-sequence rank search (otp), and the Ramsey
two-coloring search.
"""

import random
import time

from ordkit import _kernels_py as py_kernels

try:
    from ordkit import _kernels as c_kernels
except ImportError:
    c_kernels = None

from ordkit import ew_product, leaf, mk_qo, mk_system, ss


def timeit(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def powerset_system(n):
    u = [leaf(str(i)) for i in range(n)]
    members = [
        tuple(a for i, a in enumerate(u) if mask >> i & 1) for mask in range(1 << n)
    ]
    return mk_system(u, members)


def cases():
    # dim of the up-set lattice of a 6-antichain: all 64 subsets
    antichain6 = ss(mk_qo([leaf(str(i)) for i in range(6)]))
    _, masks = antichain6.masks()
    yield "production_rank / up-sets of 6-antichain", (
        lambda k: k.production_rank(masks, (1 << 6) - 1)
    )

    # dim of the product of two full powerset families over 3 points
    prod = ew_product(powerset_system(3), powerset_system(3))
    _, pmasks = prod.masks()
    support_mask = (1 << len(prod.support)) - 1
    yield "production_rank / powerset(3) x powerset(3)", (
        lambda k: k.production_rank(pmasks, support_mask)
    )

    # otp of a random 16-element quasi-order
    rng = random.Random(0)
    n = 16
    rows = [1 << i for i in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j and rng.random() < 0.2:
                rows[i] |= 1 << j
    changed = True
    while changed:
        changed = False
        for i in range(n):
            acc = rows[i]
            bits = acc
            while bits:
                b = bits & -bits
                bits ^= b
                acc |= rows[b.bit_length() - 1]
            if acc != rows[i]:
                rows[i] = acc
                changed = True
    ups = tuple(rows)
    yield "bad_sequence_rank / random 16-element order", (
        lambda k: k.bad_sequence_rank(ups)
    )

    yield "ramsey_search / R(3,3) at K6", (lambda k: k.ramsey_search(3, 3, 6))
    yield "ramsey_search / R(3,3) at K7", (lambda k: k.ramsey_search(3, 3, 7))


def main():
    print(f"{'case':<48}{'python':>10}{'compiled':>10}{'speedup':>9}")
    for name, runner in cases():
        py_t, py_out = timeit(lambda: runner(py_kernels))
        if c_kernels is None:
            print(f"{name:<48}{py_t * 1e3:>8.1f}ms{'n/a':>10}{'':>9}")
            continue
        c_t, c_out = timeit(lambda: runner(c_kernels))
        assert py_out == c_out, f"backends disagree on {name}"
        print(
            f"{name:<48}{py_t * 1e3:>8.1f}ms{c_t * 1e3:>8.1f}ms{py_t / c_t:>8.1f}x"
        )
    if c_kernels is None:
        print("\ncompiled kernels not built; showing the pure lane only")


if __name__ == "__main__":
    main()
