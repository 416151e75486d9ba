"""Independent brute-force oracles; intentionally unshared with the library code.

These enumerate the defining objects literally (full game trees, all
subsets, all merge positions) and are used to freeze expected values.
"""

from __future__ import annotations

import itertools

from ordkit import QuasiOrder, SetSystem, leaf, mk_system


def nats(n: int) -> tuple:
    return tuple(leaf(str(i)) for i in range(n))


def system(universe_size: int, *sets: tuple) -> SetSystem:
    u = nats(universe_size)
    return mk_system(u, [tuple(u[i] for i in s) for s in sets])


def naive_dim(sys: SetSystem) -> int:
    """Longest production sequence by explicit full-tree enumeration."""
    members = list(sys.member_sets)
    support = frozenset().union(*members) if members else frozenset()

    def depth(presented: tuple, hyps: tuple) -> int:
        best = 0
        for t in support:
            if hyps and t in hyps[-1]:
                continue
            covered = set(presented)
            covered.add(t)
            for h in members:
                if covered <= h:
                    best = max(best, 1 + depth(presented + (t,), hyps + (h,)))
        return best

    return depth((), ())


def naive_otp(qo: QuasiOrder) -> int:
    """Longest bad sequence by explicit enumeration."""

    def depth(seq: tuple) -> int:
        best = 0
        for a in qo.elements:
            if all(not qo.le(b, a) for b in seq):
                best = max(best, 1 + depth(seq + (a,)))
        return best

    return depth(())


def upper_sets(qo: QuasiOrder) -> set[frozenset]:
    """All upward-closed subsets, straight from the definition."""
    out = set()
    for r in range(len(qo.elements) + 1):
        for combo in itertools.combinations(qo.elements, r):
            u = frozenset(combo)
            if all(y in u for x in u for y in qo.elements if qo.le(x, y)):
                out.add(u)
    return out


def hall_holds(blocks: list[frozenset]) -> bool:
    """Exhaustive subset scan of Hall's condition."""
    for r in range(1, len(blocks) + 1):
        for combo in itertools.combinations(range(len(blocks)), r):
            union = frozenset().union(*(blocks[i] for i in combo))
            if len(union) < len(combo):
                return False
    return True


def shuffle_by_positions(u: str, v: str) -> frozenset[str]:
    """Interleavings via explicit position choices for the first word."""
    n = len(u) + len(v)
    out = set()
    for pos in itertools.combinations(range(n), len(u)):
        slots: list = [None] * n
        for i, p in enumerate(pos):
            slots[p] = u[i]
        rest = iter(v)
        merged = "".join(c if c is not None else next(rest) for c in slots)
        out.add(merged)
    return frozenset(out)


def has_mono_clique(n: int, colored_edges: dict, color: str, size: int) -> bool:
    """Brute scan for a monochromatic clique in an edge-colored K_n."""
    for combo in itertools.combinations(range(n), size):
        if all(
            colored_edges[(min(a, b), max(a, b))] == color
            for a, b in itertools.combinations(combo, 2)
        ):
            return True
    return False
