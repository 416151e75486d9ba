"""Ramsey numbers at desk scale plus the three Ramsey-bounded order-type checks.

Exact values come from a small table whose entries are either re-verifiable
by the exhaustive search within its bound or flagged as literature values;
everything else uses the classic two-color recurrence upper bound.  Gating
comparisons only ever use verified exact values or the recurrence bound,
never unverified literature numbers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from . import kernels
from .errors import CarrierMismatch, InvalidQuery, SearchBoundExceeded
from .orders import QuasiOrder, intersect_qo, otp
from .production import dim
from .systems import SetSystem, ew_union
from .traces import Trace, branching_degree, direct_image

VERIFY_VERTEX_BOUND = 7


@dataclass(frozen=True)
class RamseyQuery:
    clique_sizes: tuple[int, ...]

    def __post_init__(self):
        if not self.clique_sizes:
            raise InvalidQuery("at least one clique size is required")
        if any(l < 1 for l in self.clique_sizes):
            raise InvalidQuery("clique sizes must be positive")

    @property
    def colors(self) -> int:
        return len(self.clique_sizes)


def _query(sizes) -> RamseyQuery:
    if isinstance(sizes, RamseyQuery):
        return sizes
    return RamseyQuery(tuple(sizes))


@lru_cache(maxsize=None)
def _upper2(l: int, m: int) -> int:
    if l == 1 or m == 1:
        return 1
    if l == 2:
        return m
    if m == 2:
        return l
    return _upper2(l - 1, m) + _upper2(l, m - 1)


def ram_upper(sizes) -> int:
    """Recurrence upper bound; exact on the base rows, nested for many colors."""
    q = _query(sizes)
    ls = q.clique_sizes
    if len(ls) == 1:
        return ls[0]
    bound = ls[-1]
    for l in reversed(ls[:-1]):
        bound = _upper2(l, bound)
    return bound


# (l1, l2) sorted -> (value, source); "oracle" rows re-verify inside the
# search bound, "literature" rows are informational only.
_EXACT_TWO_COLOR: dict[tuple[int, int], tuple[int, str]] = {
    (3, 3): (6, "oracle"),
    (3, 4): (9, "literature"),
    (3, 5): (14, "literature"),
    (3, 6): (18, "literature"),
    (3, 7): (23, "literature"),
    (4, 4): (18, "literature"),
    (4, 5): (25, "literature"),
}

_EXACT_MULTI: dict[tuple[int, ...], tuple[int, str]] = {
    (3, 3, 3): (17, "literature"),
}


def ram_exact_entry(sizes) -> Optional[tuple[int, str]]:
    """Exact value plus its source tag, when the table covers the query."""
    q = _query(sizes)
    ls = tuple(sorted(q.clique_sizes))
    if len(ls) == 1:
        return ls[0], "trivial"
    if ls[0] == 1:
        return 1, "trivial"
    if len(ls) == 2:
        if ls[0] == 2:
            return ls[1], "trivial"
        return _EXACT_TWO_COLOR.get(ls)
    if ls[0] == 2:
        return ram_exact_entry(ls[1:])
    return _EXACT_MULTI.get(ls)


def ram_exact(sizes) -> Optional[int]:
    entry = ram_exact_entry(sizes)
    return entry[0] if entry else None


@dataclass(frozen=True)
class RamseyVerification:
    holds_at_n: bool
    witness: Optional[tuple[tuple[tuple[int, int], str], ...]]


def ram_verify(l1: int, l2: int, n: int) -> RamseyVerification:
    """Exhaustively decide whether every 2-coloring of K_n forces the cliques.

    A False verdict carries a counterexample coloring.
    """
    if l1 < 1 or l2 < 1 or n < 1:
        raise InvalidQuery("clique sizes and vertex count must be positive")
    if n > VERIFY_VERTEX_BOUND:
        raise SearchBoundExceeded(n, VERIFY_VERTEX_BOUND)
    colors = kernels.ramsey_search(l1, l2, n)
    if colors is None:
        return RamseyVerification(True, None)
    edges = [(i, j) for j in range(n) for i in range(j)]
    names = ("red", "black")
    witness = tuple((e, names[c]) for e, c in zip(edges, colors))
    return RamseyVerification(False, witness)


def _gate(sizes) -> tuple[int, str]:
    """Exact verified value when available, else the recurrence bound."""
    entry = ram_exact_entry(sizes)
    if entry is not None and entry[1] in ("trivial", "oracle"):
        return entry[0], "exact"
    return ram_upper(sizes), "upper-bound"


@dataclass(frozen=True)
class BoundReport:
    property: str
    lhs: int
    rhs: int
    rhs_kind: str  # "exact" or "upper-bound"
    holds: bool
    detail: dict = field(default_factory=dict)

    def to_json(self):
        return {
            "property": self.property,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "rhs_kind": self.rhs_kind,
            "holds": self.holds,
            "detail": self.detail,
        }


def check_union_bound(*systems: SetSystem) -> BoundReport:
    """dim(union of all) + 1 < Ram(dim_i + 2, ...)."""
    if not systems:
        raise InvalidQuery("at least one system is required")
    dims = [dim(s) for s in systems]
    union = systems[0]
    for s in systems[1:]:
        union = ew_union(union, s)
    lhs = dim(union) + 1
    sizes = tuple(d + 2 for d in dims)
    rhs, kind = _gate(sizes)
    detail = {"dims": dims, "union_dim": lhs - 1, "ramsey_args": list(sizes)}
    lit = ram_exact_entry(sizes)
    if lit is not None and lit[1] == "literature":
        detail["literature_value"] = lit[0]
    return BoundReport("dim(union)+1 < Ram(dims+2)", lhs, rhs, kind, lhs < rhs, detail)


def check_image_bound(
    trace: Trace, system: SetSystem, xi: Optional[dict] = None
) -> BoundReport:
    """Image order type against the branching-indexed diagonal Ramsey bound.

    For branching degree 1 the gate is dim(image) <= dim(system); the
    derivation presumes productive pairs, so empty option sets are flagged
    in the detail and will typically show up as violations.  With a
    right-inverse xi (element -> preimage with option {element}) equality
    is asserted instead.
    """
    n = branching_degree(trace)
    image = direct_image(trace, system)
    d_img = dim(image)
    d_sys = dim(system)
    has_empty = any(not v for _, v in trace.pairs)
    detail = {
        "branching": n,
        "image_dim": d_img,
        "system_dim": d_sys,
        "empty_option_sets": has_empty,
    }
    if n <= 1:
        if xi is not None:
            opts = trace.options
            for y in system.support:
                x = xi.get(y)
                ok = x is not None and frozenset((y,)) in opts.get(x, ())
                if not ok:
                    raise InvalidQuery(f"xi is not a section at {y!r}")
            return BoundReport(
                "dim(image) == dim(system) [sequential, with section]",
                d_img,
                d_sys,
                "exact",
                d_img == d_sys,
                detail,
            )
        return BoundReport(
            "dim(image) <= dim(system) [sequential]",
            d_img,
            d_sys,
            "exact",
            d_img <= d_sys,
            detail,
        )
    sizes = tuple([d_sys + 2] * n)
    rhs, kind = _gate(sizes)
    lit = ram_exact_entry(sizes)
    if lit is not None and lit[1] == "literature":
        detail["literature_value"] = lit[0]
    return BoundReport(
        "dim(image)+1 < Ram(dim(system)+2; branching)",
        d_img + 1,
        rhs,
        kind,
        d_img + 1 < rhs,
        detail,
    )


def check_wqo_intersection_bound(a: QuasiOrder, b: QuasiOrder) -> BoundReport:
    """otp(intersection) < Ram(otp(a)+1, otp(b)+1)."""
    if a.elements != b.elements:
        raise CarrierMismatch("quasi-orders must share one carrier")
    lhs = otp(intersect_qo(a, b))
    sizes = (otp(a) + 1, otp(b) + 1)
    rhs, kind = _gate(sizes)
    detail = {"otp_a": sizes[0] - 1, "otp_b": sizes[1] - 1}
    lit = ram_exact_entry(sizes)
    if lit is not None and lit[1] == "literature":
        detail["literature_value"] = lit[0]
    return BoundReport(
        "otp(a ∩ b) < Ram(otp(a)+1, otp(b)+1)", lhs, rhs, kind, lhs < rhs, detail
    )
