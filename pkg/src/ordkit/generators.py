"""Instance enumeration and seeded random generation for the check suites.

Everything here is deterministic: exhaustive enumerators walk canonical
orders, and random generators draw from a caller-supplied ``random.Random``.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterator

from .atoms import Atom, leaf
from .orders import QuasiOrder, Simulation, _closure
from .systems import SetSystem, _system
from .traces import Trace, mk_trace

DIGITS = tuple(leaf(str(i)) for i in range(10))


def nat_atoms(n: int) -> tuple[Atom, ...]:
    return DIGITS[:n]


def all_preorder_rows(n: int) -> Iterator[tuple[int, ...]]:
    """All reflexive transitive relations on n points, as row bitmasks.

    Rows are chosen depth-first; the pairwise constraint (j in row i forces
    row j inside row i) is checked as soon as both rows exist, which prunes
    most of the 2^(n(n-1)) space.
    """
    if n == 0:
        yield ()
        return
    rows: list[int] = []

    def consistent(d: int) -> bool:
        rd = rows[d]
        for i in range(d):
            ri = rows[i]
            if rd >> i & 1 and ri & ~rd:
                return False
            if ri >> d & 1 and rd & ~ri:
                return False
        return True

    def walk(d: int) -> Iterator[tuple[int, ...]]:
        if d == n:
            yield tuple(rows)
            return
        base = 1 << d
        for extra in range(1 << n):
            if extra & base:
                continue
            rows.append(base | extra)
            if consistent(d):
                yield from walk(d + 1)
            rows.pop()

    yield from walk(0)


def all_quasi_orders(n: int) -> Iterator[QuasiOrder]:
    elems = nat_atoms(n)
    for rows in all_preorder_rows(n):
        yield QuasiOrder(elems, rows)


def preorder_canonical_key(rows: tuple[int, ...]) -> tuple[int, ...]:
    """Minimal row encoding over all relabelings; equal keys = isomorphic."""
    n = len(rows)
    best = None
    for perm in itertools.permutations(range(n)):
        permuted = [0] * n
        for i in range(n):
            row = rows[i]
            new_row = 0
            bits = row
            while bits:
                b = bits & -bits
                bits ^= b
                new_row |= 1 << perm[b.bit_length() - 1]
            permuted[perm[i]] = new_row
        key = tuple(permuted)
        if best is None or key < best:
            best = key
    return best if best is not None else ()


def quasi_orders_up_to_iso(n: int) -> list[QuasiOrder]:
    elems = nat_atoms(n)
    seen: set[tuple[int, ...]] = set()
    out = []
    for rows in all_preorder_rows(n):
        key = preorder_canonical_key(rows)
        if key not in seen:
            seen.add(key)
            out.append(QuasiOrder(elems, rows))
    return out


def all_systems(n: int) -> Iterator[SetSystem]:
    """Every family of subsets of a fixed n-element universe."""
    universe = nat_atoms(n)
    subsets = [
        tuple(a for i, a in enumerate(universe) if mask >> i & 1)
        for mask in range(1 << n)
    ]
    for fam in range(1 << len(subsets)):
        members = [subsets[i] for i in range(len(subsets)) if fam >> i & 1]
        yield _system(universe, members)


def random_quasi_order(rng: random.Random, max_size: int) -> QuasiOrder:
    """Random directed pairs plus closure; cycles yield equivalent elements."""
    n = rng.randint(1, max_size)
    elems = nat_atoms(n)
    rows = [0] * n
    for i in range(n):
        for j in range(n):
            if i != j and rng.random() < 0.35:
                rows[i] |= 1 << j
    return QuasiOrder(elems, tuple(_closure(rows, n)))


def random_system(rng: random.Random, universe_size: int, max_members: int) -> SetSystem:
    universe = nat_atoms(universe_size)
    count = rng.randint(0, max_members)
    members = []
    for _ in range(count):
        mask = rng.randrange(1 << universe_size)
        members.append(tuple(a for i, a in enumerate(universe) if mask >> i & 1))
    return _system(universe, members)


def random_trace(
    rng: random.Random,
    source: tuple[Atom, ...],
    target: tuple[Atom, ...],
    max_options: int = 2,
    allow_empty_options: bool = True,
) -> Trace:
    lo = 0 if allow_empty_options else 1
    pairs = []
    for x in source:
        for _ in range(rng.randint(0, max_options)):
            if len(target) < lo:
                continue
            size = rng.randint(lo, len(target))
            pairs.append((x, rng.sample(target, size)))
    return mk_trace(source, target, pairs)


def random_sequential_trace(
    rng: random.Random,
    source: tuple[Atom, ...],
    target: tuple[Atom, ...],
    allow_empty_options: bool = True,
) -> Trace:
    lo = 0 if allow_empty_options else 1
    pairs = []
    for x in source:
        if rng.random() < 0.75 and len(target) >= lo:
            size = rng.randint(lo, len(target))
            pairs.append((x, rng.sample(target, size)))
    return mk_trace(source, target, pairs)


def sequential_traces(
    source: tuple[Atom, ...],
    target: tuple[Atom, ...],
    include_empty_options: bool = True,
) -> Iterator[Trace]:
    """Every trace with at most one option set per source element."""
    lo = 0 if include_empty_options else 1
    option_masks = list(range(1 << len(target)))
    per_x: list[list[object]] = []
    for _ in source:
        choices: list[object] = [None]
        for mask in option_masks:
            if bin(mask).count("1") >= lo:
                choices.append(mask)
        per_x.append(choices)
    for combo in itertools.product(*per_x):
        pairs = []
        for x, choice in zip(source, combo):
            if choice is None:
                continue
            mask = choice
            pairs.append(
                (x, tuple(a for i, a in enumerate(target) if mask >> i & 1))
            )
        yield mk_trace(source, target, pairs)


def random_simulation(
    rng: random.Random, src: QuasiOrder, tgt: QuasiOrder
) -> Simulation:
    """Random seed pairs repaired to a simulation by propagating upward."""
    if not tgt.elements:
        return Simulation(src, tgt, frozenset())
    pairs: set[tuple[Atom, Atom]] = set()
    for x in src.elements:
        if rng.random() < 0.7:
            pairs.add((x, rng.choice(tgt.elements)))
    changed = True
    while changed:
        changed = False
        for x, y in list(pairs):
            ix = src.index[x]
            bits = src.up[ix]
            while bits:
                b = bits & -bits
                bits ^= b
                x2 = src.elements[b.bit_length() - 1]
                if not any(
                    (x2, y2) in pairs and tgt.le(y, y2) for y2 in tgt.elements
                ):
                    pairs.add((x2, y))
                    changed = True
    return Simulation(src, tgt, frozenset(pairs))


def all_relations(src: QuasiOrder, tgt: QuasiOrder) -> Iterator[Simulation]:
    """Every relation between two carriers, wrapped as a candidate simulation."""
    cells = [(x, y) for x in src.elements for y in tgt.elements]
    for mask in range(1 << len(cells)):
        rel = frozenset(cells[i] for i in range(len(cells)) if mask >> i & 1)
        yield Simulation(src, tgt, rel)
