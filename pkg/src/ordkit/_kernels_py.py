"""Pure-Python implementations of the hot search kernels.

The three kernels below dominate the runtime of the exhaustive suites:

* ``production_rank`` -- rank of the example/hypothesis game tree of a
  set system, memoized on the state (presented-example set, current
  hypothesis).  Members and state sets are bitmasks over the support.
* ``bad_sequence_rank`` -- rank of the tree of bad sequences of a finite
  quasi-order, memoized on the forbidden upward closure.
* ``ramsey_search`` -- exhaustive two-coloring search with clique pruning
  and a color-swap symmetry cut on the first edge.

A compiled twin lives in ``_kernels.pyx``; ``ordkit.kernels`` picks
whichever is importable.  Both must return identical values everywhere.
"""

from __future__ import annotations

from typing import Optional, Sequence


def production_rank(member_masks: Sequence[int], support_mask: int) -> int:
    """Length of the longest production sequence (0 if no nonempty member).

    State: (seen, hyp) with seen = set of presented examples, hyp = current
    hypothesis; extensions pick a fresh t outside hyp and a member covering
    seen | {t}.  The first move has no freshness constraint.
    """
    members = tuple(dict.fromkeys(member_masks))
    covers_cache: dict[int, tuple[int, ...]] = {}
    memo: dict[tuple[int, int], int] = {}

    def covers(need: int) -> tuple[int, ...]:
        got = covers_cache.get(need)
        if got is None:
            got = tuple(m for m in members if need & ~m == 0)
            covers_cache[need] = got
        return got

    def rank(seen: int, hyp: int) -> int:
        key = (seen, hyp)
        val = memo.get(key)
        if val is not None:
            return val
        best = 0
        free = support_mask & ~hyp
        while free:
            t = free & -free
            free ^= t
            need = seen | t
            for nxt in covers(need):
                r = 1 + rank(need, nxt)
                if r > best:
                    best = r
        memo[key] = best
        return best

    best = 0
    for m in members:
        bits = m
        while bits:
            t = bits & -bits
            bits ^= t
            r = 1 + rank(t, m)
            if r > best:
                best = r
    return best


def production_state_rank(
    member_masks: Sequence[int], support_mask: int, seen: int, hyp: int
) -> int:
    """Rank of the game continuation from a mid-game state; used for witnesses."""
    members = tuple(dict.fromkeys(member_masks))
    covers_cache: dict[int, tuple[int, ...]] = {}
    memo: dict[tuple[int, int], int] = {}

    def covers(need: int) -> tuple[int, ...]:
        got = covers_cache.get(need)
        if got is None:
            got = tuple(m for m in members if need & ~m == 0)
            covers_cache[need] = got
        return got

    def rank(s: int, h: int) -> int:
        key = (s, h)
        val = memo.get(key)
        if val is not None:
            return val
        best = 0
        free = support_mask & ~h
        while free:
            t = free & -free
            free ^= t
            need = s | t
            for nxt in covers(need):
                r = 1 + rank(need, nxt)
                if r > best:
                    best = r
        memo[key] = best
        return best

    return rank(seen, hyp)


def bad_sequence_rank(up_masks: Sequence[int]) -> int:
    """Length of the longest bad sequence of a finite quasi-order.

    ``up_masks[i]`` is the bitmask of elements above element i (inclusive).
    State: the union of upward closures of the elements picked so far.
    """
    n = len(up_masks)
    full = (1 << n) - 1
    memo: dict[int, int] = {}

    def rank(forbidden: int) -> int:
        val = memo.get(forbidden)
        if val is not None:
            return val
        best = 0
        free = full & ~forbidden
        while free:
            a = free & -free
            free ^= a
            r = 1 + rank(forbidden | up_masks[a.bit_length() - 1])
            if r > best:
                best = r
        memo[forbidden] = best
        return best

    return rank(0)


def ramsey_search(l1: int, l2: int, n: int) -> Optional[list[int]]:
    """Search K_n for a coloring with no clique of size l1 in color 0 nor l2 in color 1.

    Returns the counterexample coloring (edge colors in the order (0,1),
    (0,2), (1,2), (0,3), ...) or None when every coloring contains a
    monochromatic clique.  When l1 == l2 the first edge is pinned to color
    0; a color swap maps counterexamples to counterexamples.
    """
    if l1 < 1 or l2 < 1 or n < 1:
        raise ValueError("clique sizes and vertex count must be positive")
    if l1 == 1 or l2 == 1:
        return None
    edges = [(i, j) for j in range(n) for i in range(j)]
    m = len(edges)
    adj = ([0] * n, [0] * n)
    colors = [0] * m
    need = (l1 - 2, l2 - 2)
    sym = l1 == l2

    def clique(adjc: list[int], cand: int, size: int) -> bool:
        if size == 0:
            return True
        if cand.bit_count() < size:
            return False
        while cand:
            v = cand & -cand
            cand ^= v
            if clique(adjc, cand & adjc[v.bit_length() - 1], size - 1):
                return True
        return False

    def dfs(e: int) -> bool:
        if e == m:
            return True
        i, j = edges[e]
        for c in ((0,) if (e == 0 and sym) else (0, 1)):
            if not clique(adj[c], adj[c][i] & adj[c][j], need[c]):
                colors[e] = c
                adj[c][i] |= 1 << j
                adj[c][j] |= 1 << i
                if dfs(e + 1):
                    return True
                adj[c][i] &= ~(1 << j)
                adj[c][j] &= ~(1 << i)
        return False

    if dfs(0):
        return list(colors)
    return None
