"""Finite quasi-orders: bad sequences, order type, up-set systems, simulations.

The carrier is a canonically sorted atom tuple; the relation is stored as
one bitmask row per element (``up[i]`` = everything above element i,
inclusive).  All values are immutable and all operations pure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

from . import kernels
from .atoms import Atom, atom_from_json, atom_to_json, leaf
from .errors import (
    CarrierMismatch,
    InputError,
    NotALattice,
    RelationNotClosed,
    UniverseTooLarge,
    UnknownElement,
)
from .systems import SetSystem, _system

SS_ELEMENT_BOUND = 20
LINEARIZATION_BOUND = 8


@dataclass(frozen=True)
class QuasiOrder:
    elements: tuple[Atom, ...]
    up: tuple[int, ...]  # up[i] bit j set <=> elements[i] <= elements[j]

    @cached_property
    def index(self) -> dict[Atom, int]:
        return {a: i for i, a in enumerate(self.elements)}

    def le(self, x: Atom, y: Atom) -> bool:
        ix = self.index.get(x)
        iy = self.index.get(y)
        if ix is None:
            raise UnknownElement(x)
        if iy is None:
            raise UnknownElement(y)
        return bool(self.up[ix] >> iy & 1)

    def pairs(self) -> Iterator[tuple[Atom, Atom]]:
        for i, row in enumerate(self.up):
            bits = row
            while bits:
                b = bits & -bits
                bits ^= b
                yield self.elements[i], self.elements[b.bit_length() - 1]

    def to_json(self):
        return {
            "elements": [atom_to_json(a) for a in self.elements],
            "le": [[atom_to_json(x), atom_to_json(y)] for x, y in self.pairs()],
        }

    def __repr__(self):
        rel = ",".join(f"{x!r}<={y!r}" for x, y in self.pairs() if x != y)
        return f"QuasiOrder({list(self.elements)!r}; {rel})"


def _closure(rows: list[int], n: int) -> list[int]:
    rows = list(rows)
    for i in range(n):
        rows[i] |= 1 << i
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
    return rows


def mk_qo(
    elements: Iterable[Atom],
    pairs: Iterable[tuple[Atom, Atom]] = (),
    strict: bool = False,
) -> QuasiOrder:
    """Build a quasi-order from generating pairs.

    The input is closed reflexively and transitively; with strict=True a
    non-closed input is rejected instead.
    """
    elems = tuple(sorted(set(elements)))
    index = {a: i for i, a in enumerate(elems)}
    rows = [0] * len(elems)
    given = [0] * len(elems)
    for x, y in pairs:
        if x not in index:
            raise UnknownElement(x)
        if y not in index:
            raise UnknownElement(y)
        given[index[x]] |= 1 << index[y]
    closed = _closure(given, len(elems))
    if strict:
        for i in range(len(elems)):
            if closed[i] != given[i] | (1 << i):
                raise RelationNotClosed(
                    "input relation is not transitively closed"
                )
    return QuasiOrder(elems, tuple(closed))


def qo_from_json(obj, path: str = "$", strict: bool = False) -> QuasiOrder:
    if not isinstance(obj, dict) or "elements" not in obj or "le" not in obj:
        raise InputError(f"{path}: expected an object with 'elements' and 'le'")
    if not isinstance(obj["elements"], list) or not isinstance(obj["le"], list):
        raise InputError(f"{path}: 'elements' and 'le' must be lists")
    elems = [
        atom_from_json(a, f"{path}.elements[{i}]")
        for i, a in enumerate(obj["elements"])
    ]
    rel = []
    for i, p in enumerate(obj["le"]):
        if not isinstance(p, list) or len(p) != 2:
            raise InputError(f"{path}.le[{i}]: expected a pair [x, y]")
        rel.append(
            (
                atom_from_json(p[0], f"{path}.le[{i}][0]"),
                atom_from_json(p[1], f"{path}.le[{i}][1]"),
            )
        )
    try:
        return mk_qo(elems, rel, strict=strict)
    except UnknownElement as exc:
        raise InputError(f"{path}.le: {exc}") from exc


def is_bad_sequence(qo: QuasiOrder, seq: Iterable[Atom]) -> bool:
    """True iff no earlier element is below a later one."""
    idx = []
    for a in seq:
        i = qo.index.get(a)
        if i is None:
            raise UnknownElement(a)
        idx.append(i)
    for i in range(len(idx)):
        for j in range(i + 1, len(idx)):
            if qo.up[idx[i]] >> idx[j] & 1:
                return False
    return True


@lru_cache(maxsize=1 << 14)
def _otp_cached(up: tuple[int, ...]) -> int:
    return kernels.bad_sequence_rank(up)


def otp(qo: QuasiOrder) -> int:
    """Order type: the rank of the tree of bad sequences."""
    return _otp_cached(qo.up)


def upset(atoms: Iterable[Atom], qo: QuasiOrder) -> tuple[Atom, ...]:
    """Upward closure of a subset of the carrier."""
    bits = 0
    for a in atoms:
        i = qo.index.get(a)
        if i is None:
            raise UnknownElement(a)
        bits |= qo.up[i]
    return tuple(a for i, a in enumerate(qo.elements) if bits >> i & 1)


def ss(qo: QuasiOrder, max_elements: int = SS_ELEMENT_BOUND) -> SetSystem:
    """The system of all upward-closed subsets (a 2**n scan; bounded)."""
    n = len(qo.elements)
    if n > max_elements:
        raise UniverseTooLarge(n, max_elements)
    members = []
    for u in range(1 << n):
        closure = 0
        bits = u
        while bits:
            b = bits & -bits
            bits ^= b
            closure |= qo.up[b.bit_length() - 1]
        if closure | u == u:
            members.append([a for i, a in enumerate(qo.elements) if u >> i & 1])
    return _system(qo.elements, members)


def qo_of(system: SetSystem) -> QuasiOrder:
    """x below y iff every member containing x contains y."""
    elems = tuple(sorted(set(system.universe) | set(system.support)))
    memberships = []
    for a in elems:
        bits = 0
        for k, m in enumerate(system.member_sets):
            if a in m:
                bits |= 1 << k
        memberships.append(bits)
    up = []
    for i in range(len(elems)):
        row = 0
        for j in range(len(elems)):
            if memberships[i] & ~memberships[j] == 0:
                row |= 1 << j
        up.append(row)
    return QuasiOrder(elems, tuple(up))


def intersect_qo(a: QuasiOrder, b: QuasiOrder) -> QuasiOrder:
    if a.elements != b.elements:
        raise CarrierMismatch("quasi-orders must share one carrier")
    return QuasiOrder(a.elements, tuple(x & y for x, y in zip(a.up, b.up)))


def is_coatomic_lattice(system: SetSystem) -> bool:
    """Check coatomicity of a member family closed under union and intersection.

    A coatom is a nontop member C such that every nontop member either joins
    with C to the top or sits below C; the family is coatomic when every
    nontop member lies below some coatom.
    """
    members = system.member_sets
    if not members:
        raise NotALattice("the family has no members")
    fam = set(members)
    for x, y in itertools.combinations(members, 2):
        if x | y not in fam or x & y not in fam:
            raise NotALattice("family is not closed under union/intersection")
    top = frozenset().union(*members)
    if top not in fam:
        raise NotALattice("family has no top element")
    nontop = [m for m in members if m != top]
    coatoms = [
        c
        for c in nontop
        if all((m | c == top) or (m <= c) for m in nontop)
    ]
    return all(any(m <= c for c in coatoms) for m in nontop)


@dataclass(frozen=True)
class Simulation:
    source: QuasiOrder
    target: QuasiOrder
    pairs: frozenset[tuple[Atom, Atom]]

    def __post_init__(self):
        for x, y in self.pairs:
            if x not in self.source.index:
                raise UnknownElement(x)
            if y not in self.target.index:
                raise UnknownElement(y)


def is_simulation(sim: Simulation) -> bool:
    """Does every related pair propagate along source increases?"""
    src, tgt = sim.source, sim.target
    rel = sim.pairs
    for x, y in rel:
        ix = src.index[x]
        bits = src.up[ix]
        while bits:
            b = bits & -bits
            bits ^= b
            x2 = src.elements[b.bit_length() - 1]
            if not any(
                (x2, y2) in rel and tgt.le(y, y2) for y2 in tgt.elements
            ):
                return False
    return True


def identity_simulation(qo: QuasiOrder) -> Simulation:
    return Simulation(qo, qo, frozenset((a, a) for a in qo.elements))


def compose_simulations(second: Simulation, first: Simulation) -> Simulation:
    """Relational composite: first from X to Y, second from Y to Z."""
    if first.target.elements != second.source.elements:
        raise CarrierMismatch("simulations do not chain")
    rel = frozenset(
        (x, z)
        for x, y in first.pairs
        for y2, z in second.pairs
        if y == y2
    )
    return Simulation(first.source, second.target, rel)


def graph_simulation(qo_src: QuasiOrder, qo_tgt: QuasiOrder, mapping: dict[Atom, Atom]) -> Simulation:
    return Simulation(
        qo_src, qo_tgt, frozenset((x, mapping[x]) for x in qo_src.elements)
    )


def _chain(n: int) -> QuasiOrder:
    elems = tuple(leaf(str(i)) for i in range(n))
    up = tuple(((1 << n) - 1) & ~((1 << i) - 1) for i in range(n))
    return QuasiOrder(elems, up)


def linearizations(
    qo: QuasiOrder, max_elements: int = LINEARIZATION_BOUND
) -> list[tuple[QuasiOrder, Simulation]]:
    """All surjections onto canonical chains that preserve the order.

    Each result is the chain target plus the graph of the mapping as a
    simulation.  Enumerated as ordered partitions whose blocks are
    down-closed in what remains.
    """
    n = len(qo.elements)
    if n > max_elements:
        raise UniverseTooLarge(n, max_elements)
    results: list[tuple[QuasiOrder, Simulation]] = []
    full = (1 << n) - 1

    def down_closed_blocks(remaining: int) -> list[int]:
        elems = [i for i in range(n) if remaining >> i & 1]
        blocks = []
        for bits in range(1, 1 << len(elems)):
            block = 0
            for k, i in enumerate(elems):
                if bits >> k & 1:
                    block |= 1 << i
            ok = True
            for i in elems:
                if block >> i & 1:
                    continue
                # anything below a block element must already be in the block
                row = qo.up[i]
                if row & block and remaining >> i & 1:
                    ok = False
                    break
            if ok:
                blocks.append(block)
        return blocks

    def walk(remaining: int, blocks: list[int]):
        if remaining == 0:
            k = len(blocks)
            target = _chain(k)
            mapping = {}
            for level, block in enumerate(blocks):
                bits = block
                while bits:
                    b = bits & -bits
                    bits ^= b
                    mapping[qo.elements[b.bit_length() - 1]] = target.elements[level]
            results.append((target, graph_simulation(qo, target, mapping)))
            return
        for block in down_closed_blocks(remaining):
            walk(remaining & ~block, blocks + [block])

    walk(full, [])
    return results
