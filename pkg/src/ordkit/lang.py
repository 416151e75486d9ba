"""Bounded language fragments, shuffle and Kleene closures, lazy indexed families.

Fragments are honest finite windows: a fragment carries its length bound
and an exactness flag meaning "these are all the words of the intended
language up to the bound".  Closure operators treat the fragment's words
as the language being closed and compute the closure exactly up to the
requested bound.  Lazy families provide decidable membership for the
classic infinite examples, driving the elasticity-chain search.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .atoms import Atom, leaf, word
from .errors import (
    AlphabetMismatch,
    BoundMismatch,
    HorizonRequired,
    InputError,
    InvalidQuery,
    UnknownFamily,
)
from .systems import SetSystem, mk_system

Word = str


@dataclass(frozen=True)
class LanguageFragment:
    alphabet: frozenset[str]
    max_len: int
    words: frozenset[Word]
    exact_up_to: bool = True

    def to_json(self):
        return {
            "alphabet": sorted(self.alphabet),
            "max_len": self.max_len,
            "words": sorted(self.words),
            "exact_up_to": self.exact_up_to,
        }


def mk_fragment(
    alphabet: Iterable[str],
    max_len: int,
    words: Iterable[Word],
    exact_up_to: bool = True,
) -> LanguageFragment:
    al = frozenset(alphabet)
    if not all(isinstance(t, str) and len(t) == 1 for t in al):
        raise InputError("alphabet tokens must be single characters")
    ws = frozenset(words)
    for w in ws:
        if len(w) > max_len:
            raise BoundMismatch(f"word {w!r} exceeds max_len {max_len}")
        if not set(w) <= al:
            raise AlphabetMismatch(f"word {w!r} uses symbols outside the alphabet")
    return LanguageFragment(al, max_len, ws, exact_up_to)


def fragment_from_json(obj, path: str = "$") -> LanguageFragment:
    if not isinstance(obj, dict) or not {"alphabet", "max_len", "words"} <= set(obj):
        raise InputError(f"{path}: expected alphabet/max_len/words")
    if not isinstance(obj["max_len"], int) or obj["max_len"] < 0:
        raise InputError(f"{path}.max_len: expected a nonnegative integer")
    try:
        return mk_fragment(
            obj["alphabet"],
            obj["max_len"],
            obj["words"],
            bool(obj.get("exact_up_to", True)),
        )
    except (AlphabetMismatch, BoundMismatch, InputError) as exc:
        raise InputError(f"{path}: {exc}") from exc


def shuffle_words(u: Word, v: Word, alphabet: Optional[Iterable[str]] = None) -> frozenset[Word]:
    """All order-preserving interleavings of two words."""
    if alphabet is not None:
        al = set(alphabet)
        for w in (u, v):
            if not set(w) <= al:
                raise AlphabetMismatch(f"word {w!r} uses symbols outside the alphabet")
    memo: dict[tuple[str, str], frozenset[str]] = {}

    def sh(a: str, b: str) -> frozenset[str]:
        if not a:
            return frozenset((b,))
        if not b:
            return frozenset((a,))
        got = memo.get((a, b))
        if got is None:
            got = frozenset(a[0] + w for w in sh(a[1:], b)) | frozenset(
                b[0] + w for w in sh(a, b[1:])
            )
            memo[(a, b)] = got
        return got

    return sh(u, v)


def _merge(lhs: LanguageFragment, rhs: LanguageFragment) -> tuple[frozenset[str], int, bool]:
    if lhs.alphabet != rhs.alphabet:
        raise AlphabetMismatch("fragments use different alphabets")
    return (
        lhs.alphabet,
        min(lhs.max_len, rhs.max_len),
        lhs.exact_up_to and rhs.exact_up_to,
    )


def shuffle_product(lhs: LanguageFragment, rhs: LanguageFragment) -> LanguageFragment:
    alphabet, bound, exact = _merge(lhs, rhs)
    out: set[str] = set()
    for u in lhs.words:
        for v in rhs.words:
            if len(u) + len(v) <= bound:
                out |= shuffle_words(u, v)
    return LanguageFragment(alphabet, bound, frozenset(out), exact)


def concat(lhs: LanguageFragment, rhs: LanguageFragment) -> LanguageFragment:
    alphabet, bound, exact = _merge(lhs, rhs)
    out = {
        u + v for u in lhs.words for v in rhs.words if len(u) + len(v) <= bound
    }
    return LanguageFragment(alphabet, bound, frozenset(out), exact)


def power(fragment: LanguageFragment, m: int) -> LanguageFragment:
    """m-fold concatenation; the zeroth power is the empty word."""
    if m < 0:
        raise InvalidQuery("power must be nonnegative")
    out = LanguageFragment(fragment.alphabet, fragment.max_len, frozenset(("",)), fragment.exact_up_to)
    for _ in range(m):
        out = concat(out, fragment)
    return out


_CLOSURE_KINDS = ("star", "plus", "shuffle_diamond", "shuffle_closure")


def closure_bounded(
    fragment: LanguageFragment, kind: str, max_len: int
) -> LanguageFragment:
    """Iterated concatenation or shuffle of the fragment's words, cut at max_len.

    The fragment's word set is treated as the whole language being closed,
    so the result is exact up to the bound by construction.
    """
    if kind not in _CLOSURE_KINDS:
        raise InvalidQuery(f"unknown closure kind {kind!r}")
    base = {w for w in fragment.words if len(w) <= max_len}
    shuffle = kind in ("shuffle_diamond", "shuffle_closure")
    closed = set(base)
    frontier = set(base)
    while frontier:
        fresh: set[str] = set()
        for w in frontier:
            for l in base:
                if len(w) + len(l) > max_len:
                    continue
                if shuffle:
                    fresh |= shuffle_words(w, l) - closed
                else:
                    cat = w + l
                    if cat not in closed:
                        fresh.add(cat)
        closed |= fresh
        frontier = fresh
    if kind in ("star", "shuffle_closure"):
        closed.add("")
    return LanguageFragment(fragment.alphabet, max_len, frozenset(closed), True)


def half(fragment: LanguageFragment) -> LanguageFragment:
    """Prefixes of ceil(n/2) letters of each word.

    The halving convention here fixes the prefix length as the rounded-up
    half of the whole word.  Exactness is cleared: witnesses for short
    prefixes may be longer than the fragment bound.
    """
    out = frozenset(w[: (len(w) + 1) // 2] for w in fragment.words)
    return LanguageFragment(fragment.alphabet, fragment.max_len, out, False)


def all_words(alphabet: Iterable[str], max_len: int) -> list[Word]:
    al = sorted(set(alphabet))
    out: list[str] = []
    for n in range(max_len + 1):
        out.extend("".join(p) for p in itertools.product(al, repeat=n))
    return out


def to_set_system(fragments: Iterable[LanguageFragment]) -> SetSystem:
    """Bridge to set systems: word atoms over the full bounded universe."""
    frags = list(fragments)
    if frags:
        alphabet = frags[0].alphabet
        bound = frags[0].max_len
        for f in frags[1:]:
            if f.alphabet != alphabet:
                raise AlphabetMismatch("fragments use different alphabets")
            if f.max_len != bound:
                raise BoundMismatch("fragments use different length bounds")
    else:
        alphabet, bound = frozenset(), 0
    universe = [word(tuple(w)) for w in all_words(alphabet, bound)]
    members = [[word(tuple(w)) for w in f.words] for f in frags]
    return mk_system(universe, members)


@dataclass(frozen=True)
class LazyFamily:
    """Membership-oracle family over an enumerable universe (indices are naturals)."""

    description: str
    universe_enumerator: Callable[[int], Atom]
    member: Callable[[int, Atom], bool]
    member_index: Callable[[int, int], bool]


def _nat_family(description: str, pred: Callable[[int, int], bool]) -> LazyFamily:
    def member(i: int, atom: Atom) -> bool:
        return pred(i, int(atom.data[0]))

    return LazyFamily(description, lambda n: leaf(str(n)), member, pred)


def _unpair(k: int) -> tuple[int, int]:
    t = 0
    while (t + 1) * (t + 2) // 2 <= k:
        t += 1
    r = k - t * (t + 1) // 2
    return r, t - r + 1


def canonical_family(name: str, params: Optional[dict] = None) -> LazyFamily:
    """The classic indexed families over the naturals, by name."""
    if name == "singl":
        return _nat_family("singletons {x}", lambda i, n: n == i)
    if name == "dcl":
        return _nat_family("downward closures {0..i}", lambda i, n: n <= i)
    if name == "cosingl":
        return _nat_family("complements of singletons", lambda i, n: n != i)
    if name == "arith_prog":
        def pred(i: int, n: int) -> bool:
            a, d = _unpair(i)
            return n >= a and (n - a) % d == 0

        return _nat_family("arithmetic progressions a + k*d", pred)
    raise UnknownFamily(f"no family named {name!r}")


def family_transform(
    kind: str, family: LazyFamily, element_horizon: Optional[int] = None
) -> LazyFamily:
    """Compose a family with the downward-closure or complement transformer.

    Downward closure needs a witness search upward, so an element horizon is
    required; membership reads false when no witness exists below it.
    """
    if kind == "complement":
        return _nat_family(
            f"complement of {family.description}",
            lambda i, n: not family.member_index(i, n),
        )
    if kind == "down_closure":
        if element_horizon is None:
            raise HorizonRequired("down_closure needs an element_horizon")

        def pred(i: int, n: int) -> bool:
            return any(
                family.member_index(i, m) for m in range(n, element_horizon + 1)
            )

        return _nat_family(
            f"downward closure of {family.description} (horizon {element_horizon})",
            pred,
        )
    raise UnknownFamily(f"no transform named {kind!r}")


@dataclass(frozen=True)
class ElasticityChain:
    elements: tuple[int, ...]  # t_0 .. t_k
    families: tuple[int, ...]  # i_1 .. i_k

    def to_json(self):
        return {"elements": list(self.elements), "families": list(self.families)}


def validate_chain(family: LazyFamily, chain: ElasticityChain) -> bool:
    """Independent re-check of the elasticity conditions via the atom interface."""
    ts = chain.elements
    fs = chain.families
    if len(ts) != len(fs) + 1:
        return False
    for j, i in enumerate(fs, start=1):
        atoms_before = [family.universe_enumerator(t) for t in ts[:j]]
        if not all(family.member(i, a) for a in atoms_before):
            return False
        if family.member(i, family.universe_enumerator(ts[j])):
            return False
    return True


def elasticity_chain(
    family: LazyFamily,
    k: int,
    element_horizon: int = 64,
    family_horizon: int = 64,
) -> Optional[ElasticityChain]:
    """Depth-first search for a length-k elasticity prefix within the horizons.

    Returns the first chain in deterministic index order, or None when no
    chain exists inside the horizons (which proves nothing beyond them).
    """
    if k < 1:
        raise InvalidQuery("chain length must be at least 1")
    memo: dict[tuple[int, int], bool] = {}

    def mem(i: int, n: int) -> bool:
        key = (i, n)
        got = memo.get(key)
        if got is None:
            got = family.member_index(i, n)
            memo[key] = got
        return got

    elements: list[int] = []
    families: list[int] = []

    def extend() -> bool:
        if len(families) == k:
            return True
        for i in range(family_horizon):
            if all(mem(i, t) for t in elements):
                for t in range(element_horizon):
                    if not mem(i, t):
                        families.append(i)
                        elements.append(t)
                        if extend():
                            return True
                        families.pop()
                        elements.pop()
        return False

    for t0 in range(element_horizon):
        elements = [t0]
        families = []
        if extend():
            return ElasticityChain(tuple(elements), tuple(families))
    return None
