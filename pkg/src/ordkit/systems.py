"""Finite set systems: canonical families of subsets plus elementwise operations.

A system is a finite universe together with a deduplicated family of
subsets.  All operations are pure; every constructor returns the canonical
form (sorted universe, members sorted in the subset order), so structurally
equal inputs serialize to identical bytes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .atoms import Atom, atom_from_json, atom_key, atom_to_json, finset, pair, tagged
from .errors import (
    DuplicateUniverseElement,
    ElementOutsideUniverse,
    EmptyOperandList,
    InputError,
)

Member = tuple[Atom, ...]


def _canon_member(atoms: Iterable[Atom]) -> Member:
    return tuple(sorted(set(atoms)))


def _member_key(member: Member) -> tuple:
    return tuple(atom_key(a) for a in member)


@dataclass(frozen=True)
class SetSystem:
    universe: tuple[Atom, ...]
    members: tuple[Member, ...]

    @cached_property
    def member_sets(self) -> tuple[frozenset[Atom], ...]:
        return tuple(frozenset(m) for m in self.members)

    @cached_property
    def family(self) -> frozenset[frozenset[Atom]]:
        """The family as a set of sets; universe-independent equality."""
        return frozenset(self.member_sets)

    @cached_property
    def support(self) -> tuple[Atom, ...]:
        seen: set[Atom] = set()
        for m in self.members:
            seen.update(m)
        return tuple(sorted(seen))

    def masks(self) -> tuple[tuple[Atom, ...], tuple[int, ...]]:
        """Members as bitmasks over the support, in canonical member order."""
        index = {a: i for i, a in enumerate(self.support)}
        out = []
        for m in self.members:
            bits = 0
            for a in m:
                bits |= 1 << index[a]
            out.append(bits)
        return self.support, tuple(out)

    def to_json(self):
        return {
            "universe": [atom_to_json(a) for a in self.universe],
            "sets": [[atom_to_json(a) for a in m] for m in self.members],
        }

    def __repr__(self):
        sets = ",".join("{" + ",".join(repr(a) for a in m) + "}" for m in self.members)
        return f"SetSystem[{sets}]"


def _system(universe: Iterable[Atom], members: Iterable[Iterable[Atom]]) -> SetSystem:
    """Canonicalize without validating membership (internal fast path)."""
    canon = sorted({_canon_member(m) for m in members}, key=_member_key)
    return SetSystem(tuple(sorted(set(universe))), tuple(canon))


def mk_system(
    universe: Iterable[Atom], members: Iterable[Iterable[Atom]]
) -> SetSystem:
    """Validate and canonicalize a system: sorted universe, deduplicated members."""
    unis = list(universe)
    seen: set[Atom] = set()
    for a in unis:
        if a in seen:
            raise DuplicateUniverseElement(a)
        seen.add(a)
    member_list = [_canon_member(m) for m in members]
    for m in member_list:
        for a in m:
            if a not in seen:
                raise ElementOutsideUniverse(a)
    return SetSystem(
        tuple(sorted(seen)), tuple(sorted(set(member_list), key=_member_key))
    )


def system_from_json(obj, path: str = "$") -> SetSystem:
    if not isinstance(obj, dict):
        raise InputError(f"{path}: expected an object with 'universe' and 'sets'")
    if "universe" not in obj or "sets" not in obj:
        raise InputError(f"{path}: missing 'universe' or 'sets'")
    if not isinstance(obj["universe"], list) or not isinstance(obj["sets"], list):
        raise InputError(f"{path}: 'universe' and 'sets' must be lists")
    universe = [
        atom_from_json(a, f"{path}.universe[{i}]") for i, a in enumerate(obj["universe"])
    ]
    members = []
    for i, m in enumerate(obj["sets"]):
        if not isinstance(m, list):
            raise InputError(f"{path}.sets[{i}]: expected a list of atoms")
        members.append(
            [atom_from_json(a, f"{path}.sets[{i}][{j}]") for j, a in enumerate(m)]
        )
    return mk_system(universe, members)


def ew_union(lhs: SetSystem, rhs: SetSystem) -> SetSystem:
    """All pairwise unions of members; universes merged."""
    members = [l | r for l in lhs.member_sets for r in rhs.member_sets]
    return _system(lhs.universe + rhs.universe, members)


def ew_intersect(lhs: SetSystem, rhs: SetSystem) -> SetSystem:
    """All pairwise intersections of members; universes merged."""
    members = [l & r for l in lhs.member_sets for r in rhs.member_sets]
    return _system(lhs.universe + rhs.universe, members)


def ew_product(lhs: SetSystem, rhs: SetSystem) -> SetSystem:
    """All pairwise cartesian products, over the pair atoms of the supports."""
    universe = [pair(x, y) for x in lhs.support for y in rhs.support]
    members = [
        frozenset(pair(x, y) for x in l for y in r)
        for l in lhs.member_sets
        for r in rhs.member_sets
    ]
    return _system(universe, members)


def _tagged_universe(systems: tuple[SetSystem, ...]) -> list[Atom]:
    return [
        tagged(a, j + 1) for j, s in enumerate(systems) for a in s.support
    ]


def ew_disjoint(*systems: SetSystem) -> SetSystem:
    """Tagged elementwise disjoint union: one member per choice tuple."""
    if not systems:
        raise EmptyOperandList("disjoint union needs at least one operand")
    members = []
    for combo in itertools.product(*(s.member_sets for s in systems)):
        members.append(
            frozenset(tagged(a, j + 1) for j, part in enumerate(combo) for a in part)
        )
    return _system(_tagged_universe(systems), members)


def tagged_union(*systems: SetSystem) -> SetSystem:
    """Coproduct carrier: every member of every operand, tagged by its slot."""
    if not systems:
        raise EmptyOperandList("tagged union needs at least one operand")
    members = [
        frozenset(tagged(a, j + 1) for a in m)
        for j, s in enumerate(systems)
        for m in s.member_sets
    ]
    return _system(_tagged_universe(systems), members)


def bang(system: SetSystem) -> SetSystem:
    """Each member M becomes the family of all subsets of M, as finset atoms.

    The universe is every finset over the support, so it grows as 2**|support|.
    """
    support = system.support
    universe = [finset(c) for r in range(len(support) + 1)
                for c in itertools.combinations(support, r)]
    members = []
    for m in system.members:
        members.append(
            frozenset(
                finset(c) for r in range(len(m) + 1)
                for c in itertools.combinations(m, r)
            )
        )
    return _system(universe, members)


def perp(system: SetSystem) -> SetSystem:
    """Fibers system: one member per support element, listing the members containing it.

    The universe is the nonempty members of the input, encoded as finset atoms.
    """
    universe = [finset(m) for m in system.members if m]
    members = [
        frozenset(finset(m) for m in system.members if x in m) for x in system.support
    ]
    return _system(universe, members)
